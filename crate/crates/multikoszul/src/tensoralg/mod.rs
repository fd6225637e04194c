//! Words, polynomials and graded subspaces of the tensor algebra T(V).

mod factor;
mod graded;
mod poly;
mod words;

pub use factor::{concat, factorize, product_columns, Choice, Factor, Factorizer, Label};
pub use graded::{is_tif, product, subspace_product, GradedSubspace};
pub use poly::{word_text, TensorPoly};
pub use words::{GeneratorSet, Word, WordSpace, DEFAULT_MAX_WORDS};
