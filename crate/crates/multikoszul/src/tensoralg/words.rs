use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::linalg::Field;
use crate::Error;

pub const DEFAULT_MAX_WORDS: usize = 200_000;
const MAX_TRACKED_DEGREE: usize = 512;

/// A word in the generators: a sequence of generator indices.
pub type Word = Vec<u8>;

/// Ordered generator names with positive Adams degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    names: Vec<String>,
    degrees: Vec<usize>,
}

impl GeneratorSet {
    pub fn new(gens: Vec<(String, usize)>) -> Result<GeneratorSet, Error> {
        if gens.len() > u8::MAX as usize {
            return Err(Error::Input("too many generators".into()));
        }
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        for (name, d) in gens {
            if d == 0 {
                return Err(Error::Input(format!("generator `{name}` must have positive degree")));
            }
            if names.contains(&name) {
                return Err(Error::Input(format!("duplicate generator `{name}`")));
            }
            names.push(name);
            degrees.push(d);
        }
        Ok(GeneratorSet { names, degrees })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn name(&self, g: u8) -> &str {
        &self.names[g as usize]
    }

    pub fn degree(&self, g: u8) -> usize {
        self.degrees[g as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.names.iter().position(|n| n == name).map(|i| i as u8)
    }

    pub fn word_degree(&self, w: &[u8]) -> usize {
        w.iter().map(|g| self.degrees[*g as usize]).sum()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.degrees.iter().copied().min()
    }
}

/// The word coordinates of T(V): counts, indexing and enumeration per Adams degree.
///
/// Within a degree, words are ordered lexicographically by generator index.
/// Words sharing a prefix form a contiguous block, so the index of a
/// concatenation is computed from offsets without any lookup table.
#[derive(Debug)]
pub struct WordSpace {
    gens: GeneratorSet,
    field: Field,
    cap: usize,
    counts: Vec<u128>,
    by_length: Mutex<HashMap<(usize, usize), Arc<Vec<Word>>>>,
}

impl WordSpace {
    pub fn new(gens: GeneratorSet, field: Field) -> WordSpace {
        let cap = std::env::var("MK_MAX_WORDS")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_WORDS);
        WordSpace::with_cap(gens, field, cap)
    }

    pub fn with_cap(gens: GeneratorSet, field: Field, cap: usize) -> WordSpace {
        let mut counts = vec![0u128; MAX_TRACKED_DEGREE + 1];
        counts[0] = 1;
        for n in 1..=MAX_TRACKED_DEGREE {
            let mut c = 0u128;
            for &d in gens.degrees() {
                if d <= n {
                    c = c.saturating_add(counts[n - d]);
                }
            }
            counts[n] = c;
        }
        WordSpace { gens, field, cap, counts, by_length: Mutex::new(HashMap::new()) }
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn count(&self, n: usize) -> u128 {
        self.counts.get(n).copied().unwrap_or(u128::MAX)
    }

    /// Number of words of degree `n` as a coordinate dimension, never above the cap.
    pub fn dim(&self, n: usize) -> Result<usize, Error> {
        let c = self.count(n);
        if c > self.cap as u128 {
            return Err(Error::Cap(format!(
                "T(V) has {c} words in degree {n}, above the cap of {} (set MK_MAX_WORDS to raise it)",
                self.cap
            )));
        }
        Ok(c as usize)
    }

    /// Number of words of degree `n`, saturated into `usize`; no cap check.
    pub fn ambient(&self, n: usize) -> usize {
        usize::try_from(self.count(n)).unwrap_or(usize::MAX)
    }

    /// Index of the first word of degree `n` having prefix `w`.
    pub fn block_start(&self, w: &[u8], n: usize) -> usize {
        let mut start = 0u128;
        let mut rest = n;
        for &g in w {
            for h in 0..g {
                let d = self.gens.degree(h);
                if d <= rest {
                    start += self.counts[rest - d];
                }
            }
            rest -= self.gens.degree(g);
        }
        start as usize
    }

    pub fn index(&self, w: &[u8]) -> usize {
        self.block_start(w, self.gens.word_degree(w))
    }

    pub fn word_at(&self, n: usize, mut idx: usize) -> Word {
        let mut w = Word::new();
        let mut rest = n;
        while rest > 0 {
            let mut found = false;
            for g in 0..self.gens.len() as u8 {
                let d = self.gens.degree(g);
                if d > rest {
                    continue;
                }
                let c = self.counts[rest - d] as usize;
                if idx < c {
                    w.push(g);
                    rest -= d;
                    found = true;
                    break;
                }
                idx -= c;
            }
            assert!(found, "word index out of range");
        }
        w
    }

    /// All words of degree `n` in coordinate order.
    pub fn words_of_degree(&self, n: usize) -> Result<Vec<Word>, Error> {
        let dim = self.dim(n)?;
        let mut out = Vec::with_capacity(dim);
        let mut cur = Word::new();
        self.enumerate(n, None, &mut cur, &mut out);
        Ok(out)
    }

    /// Words of degree `n` and tensor length `len`, in coordinate order.
    pub fn words_of_length(&self, n: usize, len: usize) -> Result<Arc<Vec<Word>>, Error> {
        if let Some(v) = self.by_length.lock().unwrap().get(&(n, len)) {
            return Ok(v.clone());
        }
        self.dim(n)?;
        let mut out = Vec::new();
        let mut cur = Word::new();
        self.enumerate(n, Some(len), &mut cur, &mut out);
        let out = Arc::new(out);
        self.by_length.lock().unwrap().insert((n, len), out.clone());
        Ok(out)
    }

    fn enumerate(&self, rest: usize, len: Option<usize>, cur: &mut Word, out: &mut Vec<Word>) {
        if rest == 0 {
            if len.is_none_or(|l| l == cur.len()) {
                out.push(cur.clone());
            }
            return;
        }
        if len.is_some_and(|l| cur.len() >= l) {
            return;
        }
        for g in 0..self.gens.len() as u8 {
            let d = self.gens.degree(g);
            if d <= rest {
                cur.push(g);
                self.enumerate(rest - d, len, cur, out);
                cur.pop();
            }
        }
    }
}
