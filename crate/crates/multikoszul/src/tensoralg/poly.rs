use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;

use super::{GeneratorSet, Word, WordSpace};
use crate::linalg::{Field, Scalar, SparseVec};
use crate::Error;

/// Element of T(V): a finite map from words to nonzero scalars.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl TensorPoly {
    pub fn zero() -> TensorPoly {
        TensorPoly::default()
    }

    pub fn monomial(w: Word, c: Scalar) -> TensorPoly {
        let mut p = TensorPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> TensorPoly {
        let mut p = TensorPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(d) => {
                *d = d.add(&c);
                if d.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, o: &TensorPoly) -> TensorPoly {
        let mut p = self.clone();
        for (w, c) in &o.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        TensorPoly::from_terms(self.terms.iter().map(|(w, a)| (w.clone(), a.mul(c))))
    }

    /// Concatenation product.
    pub fn mul(&self, o: &TensorPoly) -> TensorPoly {
        let mut p = TensorPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                p.add_term(w, a.mul(b));
            }
        }
        p
    }

    /// Reverses every word, keeping coefficients.
    pub fn reverse(&self) -> TensorPoly {
        TensorPoly::from_terms(self.terms.iter().map(|(w, c)| {
            let mut r = w.clone();
            r.reverse();
            (r, c.clone())
        }))
    }

    /// The common Adams degree, or the pair of conflicting words.
    pub fn homogeneous_degree(&self, g: &GeneratorSet) -> Result<Option<usize>, (Word, Word)> {
        let mut first: Option<(&Word, usize)> = None;
        for w in self.terms.keys() {
            let d = g.word_degree(w);
            match first {
                None => first = Some((w, d)),
                Some((w0, d0)) if d0 != d => return Err((w0.clone(), w.clone())),
                _ => {}
            }
        }
        Ok(first.map(|f| f.1))
    }

    pub fn to_vector(&self, space: &WordSpace) -> SparseVec {
        SparseVec::from_pairs(self.terms.iter().map(|(w, c)| (space.index(w), c.clone())).collect())
    }

    pub fn from_vector(space: &WordSpace, n: usize, v: &SparseVec) -> TensorPoly {
        TensorPoly::from_terms(v.iter().map(|(i, c)| (space.word_at(n, *i), c.clone())))
    }

    pub fn parse(text: &str, gens: &GeneratorSet, field: Field) -> Result<TensorPoly, Error> {
        Parser { chars: text.chars().collect(), pos: 0, text, gens, field }.poly()
    }

    /// Text form accepted by `parse`; repeated letters print as powers.
    pub fn display(&self, gens: &GeneratorSet) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<&Word> = self.terms.keys().collect();
        keys.sort_by_key(|w| (gens.word_degree(w), (*w).clone()));
        let mut out = String::new();
        for (k, w) in keys.into_iter().enumerate() {
            let c = &self.terms[w];
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let body = word_text(w, gens);
            if w.is_empty() {
                write!(out, "{abs}").unwrap();
            } else if abs.is_one() {
                out.push_str(&body);
            } else {
                write!(out, "{abs}*{body}").unwrap();
            }
        }
        out
    }
}

pub fn word_text(w: &[u8], gens: &GeneratorSet) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let name = gens.name(w[i]);
        if j - i == 1 {
            parts.push(name.to_string());
        } else {
            parts.push(format!("{name}^{}", j - i));
        }
        i = j;
    }
    parts.join("*")
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
    gens: &'a GeneratorSet,
    field: Field,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Input(format!("{msg} at column {} in `{}`", self.pos + 1, self.text.trim()))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect::<String>().parse().unwrap())
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
            && (self.pos > start || !self.chars[self.pos].is_ascii_digit())
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn poly(&mut self) -> Result<TensorPoly, Error> {
        let mut p = TensorPoly::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if !first => break,
                None => return Err(self.err("empty polynomial")),
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(c) => return Err(self.err(&format!("unexpected `{c}`"))),
            };
            first = false;
            let (w, c) = self.term()?;
            p.add_term(w, if sign < 0 { c.neg() } else { c });
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<(Word, Scalar), Error> {
        let mut coeff = self.field.one();
        let mut word = Word::new();
        if let Some(n) = self.number() {
            let d = if self.peek() == Some('/') {
                self.pos += 1;
                self.number().ok_or_else(|| self.err("expected denominator"))?
            } else {
                BigInt::from(1)
            };
            coeff = self.field.ratio(&n, &d)?;
            if self.peek() != Some('*') {
                return Ok((word, coeff));
            }
            self.pos += 1;
        }
        loop {
            let name = self.ident().ok_or_else(|| self.err("expected generator"))?;
            let g = self
                .gens
                .index_of(&name)
                .ok_or_else(|| self.err(&format!("unknown generator `{name}`")))?;
            let mut times = 1usize;
            if self.peek() == Some('^') {
                self.pos += 1;
                let e = self.number().ok_or_else(|| self.err("expected exponent"))?;
                times = usize::try_from(e).map_err(|_| self.err("exponent too large"))?;
            }
            word.extend(std::iter::repeat_n(g, times));
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((word, coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens() -> GeneratorSet {
        GeneratorSet::new(vec![("x".into(), 1), ("y".into(), 1), ("z".into(), 2)]).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let g = gens();
        let f = Field::Rational;
        let p = TensorPoly::parse("x*y - y*x", &g, f).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.display(&g), "x*y - y*x");
        let q = TensorPoly::parse("2*x*z - 3*z*x", &g, f).unwrap();
        assert_eq!(q.display(&g), "2*x*z - 3*z*x");
        let c = TensorPoly::parse("x^3", &g, f).unwrap();
        assert_eq!(c, TensorPoly::monomial(vec![0, 0, 0], f.one()));
        assert_eq!(c.display(&g), "x^3");
        let h = TensorPoly::parse("-1/2*y*y + x*x", &g, f).unwrap();
        assert_eq!(TensorPoly::parse(&h.display(&g), &g, f).unwrap(), h);
    }

    #[test]
    fn parse_errors_name_the_problem() {
        let g = gens();
        let e = TensorPoly::parse("x*w", &g, Field::Rational).unwrap_err();
        assert!(e.to_string().contains("unknown generator `w`"));
        assert!(TensorPoly::parse("x +", &g, Field::Rational).is_err());
        assert!(TensorPoly::parse("1/7*x", &g, Field::Prime(7)).is_err());
    }

    #[test]
    fn reverse_examples() {
        let g = gens();
        let f = Field::Rational;
        let p = TensorPoly::parse("x*y - y*x", &g, f).unwrap();
        assert_eq!(p.reverse(), TensorPoly::parse("y*x - x*y", &g, f).unwrap());
        let c = TensorPoly::parse("x^3", &g, f).unwrap();
        assert_eq!(c.reverse(), c);
        let w = TensorPoly::parse("x*x*y", &g, f).unwrap();
        assert_eq!(w.reverse(), TensorPoly::parse("y*x*x", &g, f).unwrap());
    }

    #[test]
    fn homogeneity() {
        let g = gens();
        let f = Field::Rational;
        assert_eq!(TensorPoly::parse("x*y + z", &g, f).unwrap().homogeneous_degree(&g), Ok(Some(2)));
        assert!(TensorPoly::parse("x^2 + x^3", &g, f).unwrap().homogeneous_degree(&g).is_err());
    }
}
