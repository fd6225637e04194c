use serde::Serialize;
use serde_json::json;

use super::{build_complex, minimal_resolution, Complex, ModuleForm};
use crate::jspaces::{compute_j_with, JFamily, JOptions};
use crate::presentation::{series_mul, BigradedTable, Presentation, TruncatedAlgebra};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum Status {
    MultiKoszulUpToBounds,
    /// dim (J_i)_n ≠ dim Tor_i(k, k)_n at the witness (i, n).
    NotMultiKoszul { witness: (usize, usize), j_dim: usize, tor_dim: usize },
    InconclusiveCap { reason: String },
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::MultiKoszulUpToBounds => "multi-koszul-up-to-bounds",
            Status::NotMultiKoszul { .. } => "not-multi-koszul",
            Status::InconclusiveCap { .. } => "inconclusive-cap",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub bounds: (usize, usize),
    pub notes: Vec<String>,
    pub tor: Option<BigradedTable>,
    pub jdims: Option<BigradedTable>,
    /// J_i vanishes below Adams degree jlower[i] for structural reasons.
    pub jlower: Option<Vec<usize>>,
    pub euler_ok: Option<bool>,
}

impl Verdict {
    pub fn witness(&self) -> Option<(usize, usize)> {
        match self.status {
            Status::NotMultiKoszul { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn is_multikoszul(&self) -> bool {
        self.status == Status::MultiKoszulUpToBounds
    }

    pub fn to_json(&self) -> serde_json::Value {
        let null = serde_json::Value::Null;
        json!({
            "schema": 1,
            "verdict": self.status.label(),
            "witness": self.witness().map(|(i, n)| json!([i, n])).unwrap_or(null.clone()),
            "tor": self.tor.as_ref().map(|t| t.to_json()).unwrap_or(null.clone()),
            "jdims": self.jdims.as_ref().map(|t| t.to_json()).unwrap_or(null.clone()),
            "structural_zero_below": self.jlower,
            "euler_ok": self.euler_ok,
            "bounds": [self.bounds.0, self.bounds.1],
            "notes": self.notes,
        })
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DecideOptions {
    /// Also compare against the homology of the left and right complexes and
    /// recompute J with the alternative formulas.
    pub debug_crosscheck: bool,
}

pub fn decide_multikoszul(p: &Presentation, h: usize, d: usize) -> Result<Verdict, Error> {
    decide_with(p, h, d, DecideOptions::default())
}

pub fn decide_with(p: &Presentation, h: usize, d: usize, opts: DecideOptions) -> Result<Verdict, Error> {
    match decide_inner(p, h, d, opts) {
        Err(Error::Cap(reason)) => Ok(Verdict {
            status: Status::InconclusiveCap { reason },
            bounds: (h, d),
            notes: Vec::new(),
            tor: None,
            jdims: None,
            jlower: None,
            euler_ok: None,
        }),
        other => other,
    }
}

/// Σ_i (−1)^i h_{J_i}(t) · h_A(t) ≡ 1 modulo t^{D+1}.
pub fn euler_check(a: &TruncatedAlgebra, j: &JFamily) -> bool {
    let d = a.bound().min(j.bound());
    let mut alt = vec![0i128; d + 1];
    for i in 0..=j.hmax() {
        for (n, x) in alt.iter_mut().enumerate() {
            let v = j.dim(i, n) as i128;
            *x += if i % 2 == 0 { v } else { -v };
        }
    }
    let ha: Vec<i128> = a.hilbert_series().iter().take(d + 1).map(|&x| x as i128).collect();
    let prod = series_mul(&alt, &ha, d + 1);
    prod.iter().enumerate().all(|(n, &c)| c == i128::from(n == 0))
}

/// Smallest N ≥ 2 with the complex exact in degrees 1..N−1, δ_N injective and
/// J_{N+1} = 0, all up to the Adams bound.
fn injective_cutoff(left: &Complex, homology: &BigradedTable, j: &JFamily) -> Option<usize> {
    let ranks = left.ranks();
    let top = homology.bounds.0;
    (2..=top).find(|&big_n| {
        let exact = (1..big_n).all(|i| homology.row(i).iter().all(|&x| x == 0));
        let injective = (0..=left.bound).all(|n| ranks[big_n][n] == left.levels[big_n].dim(n));
        let next_zero = big_n < j.hmax() && j.get(big_n + 1).is_zero();
        exact && injective && next_zero
    })
}

fn decide_inner(p: &Presentation, h: usize, d: usize, opts: DecideOptions) -> Result<Verdict, Error> {
    let a = TruncatedAlgebra::new(p, d)?;
    let jopts = JOptions { debug_crosscheck: opts.debug_crosscheck, ..JOptions::default() };
    let mut j = compute_j_with(&a, h + 1, jopts)?;
    let mut notes: Vec<String> = a.warnings().to_vec();
    let res = minimal_resolution(&a, h);
    let tor = res.tor_table();
    let gens = &p.gens;
    for n in 0..=d {
        if h >= 1 {
            let g = gens.degrees().iter().filter(|&&x| x == n).count();
            if tor.get(1, n) != g {
                return Err(Error::Internal(format!("Tor_1 in degree {n} is {} but there are {g} generators", tor.get(1, n))));
            }
        }
        if h >= 2 && tor.get(2, n) != a.relation_space().part(n).dim() {
            return Err(Error::Internal(format!("Tor_2 in degree {n} differs from the relation space")));
        }
    }
    let jdims = j.table().restrict(h, d);
    let jlower: Vec<usize> = (0..=h).map(|i| j.lower_bound(i)).collect();
    let mut status = Status::MultiKoszulUpToBounds;
    'outer: for i in 0..=h {
        for n in 0..=d {
            let (x, y) = (jdims.get(i, n), tor.get(i, n));
            if x != y {
                status = Status::NotMultiKoszul { witness: (i, n), j_dim: x, tor_dim: y };
                break 'outer;
            }
        }
    }

    let left = build_complex(&a, &j, ModuleForm::Left)?;
    if let Some((i, n)) = left.generator_injectivity_failures().first() {
        return Err(Error::Internal(format!("δ_{i} is not injective on J_{i} in degree {n}")));
    }
    let homology = left.homology_table();
    if let Some(big_n) = injective_cutoff(&left, &homology, &j) {
        let range = if big_n == 2 { "homological degree 1".to_string() } else { format!("homological degrees 1..{}", big_n - 1) };
        notes.push(format!(
            "up to degree {d}: the left complex is exact in {range}, δ_{big_n} is injective and J_{} vanishes; \
             if this persists in all degrees the complex is a resolution (injectivity beyond degree {d} is not verified)",
            big_n + 1
        ));
    }
    if opts.debug_crosscheck {
        let exact = |t: &BigradedTable| (1..=t.bounds.0.min(h.saturating_sub(1))).all(|i| t.row(i).iter().all(|&x| x == 0));
        let right = build_complex(&a, &j, ModuleForm::Right)?;
        let left_exact = exact(&homology);
        let right_exact = exact(&right.homology_table());
        let tor_ok = status == Status::MultiKoszulUpToBounds;
        if left_exact != tor_ok || right_exact != tor_ok {
            notes.push(format!(
                "cross-check disagreement: Tor = J is {tor_ok}, left exactness {left_exact}, right exactness {right_exact}"
            ));
        }
        notes.extend(j.notes().iter().cloned());
    }

    j.extend_until_stable(d + 1)?;
    let euler_ok = euler_check(&a, &j);
    Ok(Verdict { status, bounds: (h, d), notes, tor: Some(tor), jdims: Some(jdims), jlower: Some(jlower), euler_ok: Some(euler_ok) })
}
