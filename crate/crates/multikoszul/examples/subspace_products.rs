//! Internal products of graded subspaces of the tensor algebra.

use multikoszul::linalg::Field;
use multikoszul::tensoralg::{subspace_product, GeneratorSet, GradedSubspace, TensorPoly, WordSpace};

fn span(s: &WordSpace, polys: &[&str]) -> GradedSubspace {
    let ps: Vec<TensorPoly> = polys.iter().map(|p| TensorPoly::parse(p, s.gens(), s.field()).unwrap()).collect();
    GradedSubspace::from_polys(s, 6, &ps).unwrap()
}

fn main() {
    let gens = GeneratorSet::new(vec![("x".into(), 1)]).unwrap();
    let s = WordSpace::new(gens, Field::Rational);
    let w1 = span(&s, &["x", "x^2"]);
    let w2 = span(&s, &["x^2", "x^3"]);
    let p = subspace_product(&s, &w1, &w2).unwrap();
    println!("W1 W2 by degree: {:?}", p.dims());
    println!("dim W1 W2 = {}, dim W1 ⊗ W2 = {}", p.total_dim(), w1.total_dim() * w2.total_dim());

    let gens = GeneratorSet::new(vec![("x".into(), 1), ("y".into(), 1)]).unwrap();
    let s = WordSpace::new(gens, Field::Rational);
    let r = span(&s, &["x^2", "x*y - y*x"]);
    let v = GradedSubspace::generators(&s, 6);
    let rv = subspace_product(&s, &r, &v).unwrap();
    let vr = subspace_product(&s, &v, &r).unwrap();
    let both = rv.intersect(&vr).unwrap();
    println!("RV ∩ VR in degree 3: {}", both.part(3).dim());
    for q in both.basis_polys(&s, 3) {
        println!("  {}", q.display(s.gens()));
    }
}
