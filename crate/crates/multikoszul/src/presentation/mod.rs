//! Presentations by generators and relations, and the truncated algebras they define.

mod algebra;
mod series;

pub use algebra::TruncatedAlgebra;
pub use series::{series_inverse, series_mul, BigradedTable};

use std::fmt::Write;
use std::sync::Arc;

use serde::Serialize;

use crate::linalg::Field;
use crate::tensoralg::{word_text, GeneratorSet, TensorPoly, WordSpace};
use crate::Error;

/// A graded algebra T(V)/(relations).
#[derive(Clone, Debug)]
pub struct Presentation {
    pub field: Field,
    pub gens: GeneratorSet,
    pub relations: Vec<TensorPoly>,
}

#[derive(Serialize)]
struct Echo<'a> {
    field: String,
    gens: Vec<(&'a str, usize)>,
    relations: Vec<String>,
}

impl Presentation {
    pub fn new(field: Field, gens: GeneratorSet, relations: Vec<TensorPoly>) -> Result<Presentation, Error> {
        let p = Presentation { field, gens, relations };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), Error> {
        for r in &self.relations {
            let shown = r.display(&self.gens);
            match r.homogeneous_degree(&self.gens) {
                Err((a, b)) => {
                    return Err(Error::Input(format!(
                        "relation `{shown}` is inhomogeneous: `{}` has degree {} but `{}` has degree {}",
                        word_text(&a, &self.gens),
                        self.gens.word_degree(&a),
                        word_text(&b, &self.gens),
                        self.gens.word_degree(&b)
                    )))
                }
                Ok(None) => return Err(Error::Input("zero relation".into())),
                Ok(Some(d)) if d < 2 => {
                    let w = r.terms().next().unwrap().0;
                    return Err(Error::Input(format!(
                        "relation `{shown}` has degree {d} < 2 (term `{}`)",
                        word_text(w, &self.gens)
                    )));
                }
                Ok(Some(_)) => {}
            }
        }
        Ok(())
    }

    pub fn space(&self) -> Arc<WordSpace> {
        Arc::new(WordSpace::new(self.gens.clone(), self.field))
    }

    pub fn relation_degrees(&self) -> Vec<usize> {
        self.relations
            .iter()
            .map(|r| r.homogeneous_degree(&self.gens).unwrap().unwrap())
            .collect()
    }

    /// Same generators, every relation word-reversed.
    pub fn opposite(&self) -> Presentation {
        Presentation {
            field: self.field,
            gens: self.gens.clone(),
            relations: self.relations.iter().map(|r| r.reverse()).collect(),
        }
    }

    /// Coproduct: disjoint union of generators and relations. Clashing names
    /// from `other` get a numeric suffix.
    pub fn free_product(&self, other: &Presentation) -> Result<Presentation, Error> {
        if self.field != other.field {
            return Err(Error::Input(format!("field mismatch: {} vs {}", self.field, other.field)));
        }
        let mut gens: Vec<(String, usize)> = self
            .gens
            .names()
            .iter()
            .cloned()
            .zip(self.gens.degrees().iter().copied())
            .collect();
        let offset = gens.len() as u8;
        for (name, d) in other.gens.names().iter().zip(other.gens.degrees()) {
            let mut candidate = name.clone();
            let mut k = 2;
            while gens.iter().any(|g| g.0 == candidate) || other.gens.names().iter().any(|n| *n == candidate && n != name) {
                candidate = format!("{name}{k}");
                k += 1;
            }
            gens.push((candidate, *d));
        }
        let gens = GeneratorSet::new(gens)?;
        let mut relations = self.relations.clone();
        for r in &other.relations {
            relations.push(TensorPoly::from_terms(
                r.terms().map(|(w, c)| (w.iter().map(|g| g + offset).collect(), c.clone())),
            ));
        }
        Presentation::new(self.field, gens, relations)
    }

    /// Text in the presentation file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "field {}", self.field).unwrap();
        let gens: Vec<String> = self
            .gens
            .names()
            .iter()
            .zip(self.gens.degrees())
            .map(|(n, d)| format!("{n}:{d}"))
            .collect();
        writeln!(out, "gens {}", gens.join(", ")).unwrap();
        for r in &self.relations {
            writeln!(out, "rel {}", r.display(&self.gens)).unwrap();
        }
        out
    }

    pub fn echo(&self) -> serde_json::Value {
        serde_json::to_value(Echo {
            field: self.field.to_string(),
            gens: self.gens.names().iter().map(|s| s.as_str()).zip(self.gens.degrees().iter().copied()).collect(),
            relations: self.relations.iter().map(|r| r.display(&self.gens)).collect(),
        })
        .unwrap()
    }
}

/// Parses the presentation format. Statements are `field`, `gens`, `rel` and
/// `rels`, one per line or separated by `;`, with an optional colon after the
/// keyword; `#` starts a comment.
pub fn parse_presentation(text: &str) -> Result<Presentation, Error> {
    parse_presentation_in(text, None)
}

/// As `parse_presentation`, with the field forced to `field` when given.
pub fn parse_presentation_in(text: &str, field: Option<Field>) -> Result<Presentation, Error> {
    let mut declared: Option<Field> = None;
    let mut gens: Option<GeneratorSet> = None;
    let mut rel_texts: Vec<(usize, String)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap();
        for stmt in line.split(';') {
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            let (kw, rest) = stmt.split_at(stmt.find(|c: char| c.is_whitespace() || c == ':').unwrap_or(stmt.len()));
            let rest = rest.trim_start().strip_prefix(':').unwrap_or(rest).trim();
            let at = |m: String| Error::Input(format!("line {}: {m}", lineno + 1));
            match kw {
                "field" => {
                    if declared.is_some() {
                        return Err(at("field declared twice".into()));
                    }
                    declared = Some(Field::parse(rest).map_err(|e| at(e.to_string()))?);
                }
                "gens" => {
                    if gens.is_some() {
                        return Err(at("generators declared twice".into()));
                    }
                    let mut list = Vec::new();
                    for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        let (name, deg) = item
                            .split_once(':')
                            .ok_or_else(|| at(format!("generator `{item}` needs a degree, as in `x:1`")))?;
                        let name = name.trim();
                        if name.is_empty()
                            || !name.chars().all(|c| c.is_alphanumeric() || c == '_')
                            || name.starts_with(|c: char| c.is_ascii_digit())
                        {
                            return Err(at(format!("bad generator name `{name}`")));
                        }
                        let d: i64 = deg.trim().parse().map_err(|_| at(format!("bad degree in `{item}`")))?;
                        if d <= 0 {
                            return Err(at(format!("generator `{name}` has nonpositive degree {d}")));
                        }
                        list.push((name.to_string(), d as usize));
                    }
                    gens = Some(GeneratorSet::new(list).map_err(|e| at(e.to_string()))?);
                }
                "rel" => rel_texts.push((lineno + 1, rest.to_string())),
                "rels" => {
                    for r in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        rel_texts.push((lineno + 1, r.to_string()));
                    }
                }
                other => return Err(at(format!("unknown statement `{other}`"))),
            }
        }
    }
    let gens = gens.ok_or_else(|| Error::Input("missing `gens` declaration".into()))?;
    let field = field.or(declared).unwrap_or(Field::Rational);
    let mut relations = Vec::new();
    for (lineno, t) in rel_texts {
        let r = TensorPoly::parse(&t, &gens, field).map_err(|e| Error::Input(format!("line {lineno}: {e}")))?;
        relations.push(r);
    }
    Presentation::new(field, gens, relations)
}

#[cfg(test)]
mod tests;
