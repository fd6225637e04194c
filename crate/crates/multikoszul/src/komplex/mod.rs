//! Multi-Koszul complexes, minimal resolutions, Tor and the multi-Koszul test.

mod bar;
mod complex;
mod decide;
mod resolution;

pub use bar::bar_tor_oracle;
pub use complex::{
    build_bimodule_complex, build_complex, left_right_complexes, BiElement, BiTerm, Complex, ComplexLevel, DegreeMatrix,
    ModuleForm, VerifyReport,
};
pub use decide::{decide_multikoszul, decide_with, euler_check, DecideOptions, Status, Verdict};
pub use resolution::{minimal_resolution, Resolution, ResolutionLevel};
