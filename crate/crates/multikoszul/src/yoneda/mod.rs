//! Yoneda products on J^#, the A∞ structure of J and J^#, and the checks
//! that go with them.

mod ainf;
mod products;
mod sign;
mod stasheff;
mod twisted;

use crate::komplex::Verdict;
use crate::Error;

pub use ainf::{ainf_coproducts, j_basis, odd_tuples, AInfStructure, Dual};
pub use products::{yoneda_products, K2Failure, K2Report, ProductTable};
pub use sign::{c_sign, koszul_sign, transpose, GradedMap};
pub use stasheff::{Side, StasheffReport, Violation};
pub use twisted::{twisted_complex_check, TwistedReport};

pub const FORMAL_NOTE: &str = "formal tables, no theorem applies";

/// The product and A∞ formulas are theorems only for multi-Koszul input.
/// With `formal` set, other input is accepted and the returned note labels
/// the output.
pub fn hypothesis(verdict: &Verdict, formal: bool) -> Result<Option<&'static str>, Error> {
    if verdict.is_multikoszul() {
        Ok(None)
    } else if formal {
        Ok(Some(FORMAL_NOTE))
    } else {
        Err(Error::Input(format!(
            "the algebra is {} within bounds {:?}; pass --formal for formal tables",
            verdict.status.label(),
            verdict.bounds
        )))
    }
}
