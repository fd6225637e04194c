//! The J_i recursion, special-degree decompositions and the ι structure maps.

mod family;
mod iota;
mod special;
mod tilde;

pub use family::{compute_j, compute_j_with, CompositionReading, JFamily, JOptions};
pub use iota::{iota2, iota_multi, tensor_add, JBasis, Tensor, TensorMap};
pub use special::{special_summands, SpecialDecomposition, SpecialKind};
pub use tilde::{compute_jtilde, n_s};

#[cfg(test)]
mod tests;
