use super::JFamily;
use crate::linalg::Subspace;
use crate::presentation::TruncatedAlgebra;
use crate::tensoralg::{product_columns, Factor, GradedSubspace};
use crate::Error;

/// n_s(i): sj for i = 2j, sj + 1 for i = 2j + 1.
pub fn n_s(s: usize, i: usize) -> usize {
    s * (i / 2) + i % 2
}

/// The spaces J̃_i = ⊕_s ⋂_l V^{(l)}·R_s·V^{(n_s(i)-s-l)} of an algebra generated in degree one.
pub fn compute_jtilde(a: &TruncatedAlgebra, h: usize) -> Result<JFamily, Error> {
    let space = a.space();
    if space.gens().degrees().iter().any(|&d| d != 1) {
        return Err(Error::Input("J̃ needs every generator in degree 1".into()));
    }
    let bound = a.bound();
    let r = a.relation_space();
    let field = space.field();
    let mut levels = vec![GradedSubspace::scalars(space, bound), GradedSubspace::generators(space, bound)];
    for i in 2..=h {
        let mut level = GradedSubspace::zero(space, bound);
        for s in r.degrees() {
            let n = n_s(s, i);
            if n > bound {
                continue;
            }
            let mut rs = GradedSubspace::zero(space, bound);
            rs.set_part(s, r.part(s).clone());
            let mut acc: Option<Subspace> = None;
            for l in 0..=n - s {
                let cols = product_columns(space, &[Factor::Length(l), Factor::Space(&rs), Factor::Length(n - s - l)], n)?;
                let p = Subspace::span(space.ambient(n), field, cols.into_iter().map(|c| c.1));
                acc = Some(match acc {
                    None => p,
                    Some(x) => x.intersect(&p)?,
                });
            }
            let part = level.part(n).sum(&acc.unwrap())?;
            level.set_part(n, part);
        }
        levels.push(level);
    }
    levels.truncate(h + 1);
    Ok(JFamily::from_spaces(space.clone(), r.clone(), levels))
}
