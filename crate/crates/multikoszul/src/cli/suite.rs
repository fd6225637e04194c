use std::collections::BTreeMap;

use serde::Serialize;

use super::{expected_multikoszul, CORPUS};
use crate::jspaces::{compute_j, compute_jtilde};
use crate::komplex::{
    bar_tor_oracle, build_bimodule_complex, decide_multikoszul, decide_with, left_right_complexes, minimal_resolution,
    DecideOptions, Status,
};
use crate::linalg::Field;
use crate::presentation::{parse_presentation_in, TruncatedAlgebra};
use crate::yoneda::{ainf_coproducts, twisted_complex_check, yoneda_products};
use crate::Error;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteEntry {
    pub verdict: String,
    pub expected_multikoszul: bool,
    /// Property name → passed.
    pub checks: BTreeMap<String, bool>,
}

impl SuiteEntry {
    pub fn ok(&self) -> bool {
        self.checks.values().all(|&b| b)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub bounds: (usize, usize),
    pub oracle_bounds: (usize, usize),
    pub entries: BTreeMap<String, SuiteEntry>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.entries.values().all(|e| e.ok())
    }
}

/// Runs every property check on every shipped algebra.
pub fn run_suite(h: usize, d: usize, field: Option<Field>, oracle_bounds: (usize, usize)) -> Result<SuiteReport, Error> {
    let mut entries = BTreeMap::new();
    for (name, text) in CORPUS {
        let p = parse_presentation_in(text, field)?;
        let mut checks = BTreeMap::new();
        let v = decide_with(&p, h, d, DecideOptions { debug_crosscheck: true })?;
        let mk = v.is_multikoszul();
        checks.insert("verdict_as_expected".into(), mk == expected_multikoszul(name));
        checks.insert("crosscheck_agrees".into(), !v.notes.iter().any(|n| n.contains("disagree")));
        checks.insert("not_capped".into(), !matches!(v.status, Status::InconclusiveCap { .. }));
        if mk {
            checks.insert("euler".into(), v.euler_ok == Some(true));
        }

        let a = TruncatedAlgebra::new(&p, d)?;
        let j = compute_j(&a, h)?;
        let b = build_bimodule_complex(&a, &j)?;
        let (l, r) = left_right_complexes(&a, &j, &b);
        checks.insert("complexes_square_to_zero".into(), [&b, &l, &r].iter().all(|c| c.verify().ok));
        checks.insert("complexes_minimal".into(), [&b, &l, &r].iter().all(|c| c.is_minimal()));

        let (oh, od) = oracle_bounds;
        let small = TruncatedAlgebra::new(&p, od)?;
        let bar = bar_tor_oracle(&small, oh)?;
        checks.insert("bar_oracle_agrees".into(), bar == minimal_resolution(&small, oh).tor_table());

        let w = decide_multikoszul(&p.opposite(), h.min(4), d.min(10))?;
        let v_small = decide_multikoszul(&p, h.min(4), d.min(10))?;
        checks.insert("opposite_verdict".into(), w.status.label() == v_small.status.label());

        if p.gens.degrees().iter().all(|&g| g == 1) {
            let jt = compute_jtilde(&a, h)?;
            checks.insert("j_equals_jtilde".into(), (0..=h).all(|i| j.get(i) == jt.get(i)));
        }
        if mk {
            let s = ainf_coproducts(&j, 4)?;
            checks.insert("stasheff".into(), s.check_stasheff().ok());
            checks.insert("counit".into(), s.counit_failures().is_empty() && s.coaugmentation_ok());
            checks.insert("twisted_complex".into(), twisted_complex_check(&s, &a, &j)?.equal);
            let t = yoneda_products(&j, h)?;
            checks.insert("k2".into(), t.k2_check(h).ok());
            checks.insert("products_associative".into(), t.associativity_failures().is_empty() && t.unit_ok());
        }
        entries.insert(
            name.to_string(),
            SuiteEntry { verdict: v.status.label().to_string(), expected_multikoszul: expected_multikoszul(name), checks },
        );
    }
    Ok(SuiteReport { bounds: (h, d), oracle_bounds, entries })
}
