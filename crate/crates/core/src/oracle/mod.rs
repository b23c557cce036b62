//! Independent ground truth: Sturm counting, bisection isolation,
//! multiplicities, and exact arithmetic on isolated real algebraic numbers.
//!
//! Nothing here depends on the resolvent machinery, so the localization
//! results can be checked against it.

mod algebraic;
mod isolate;
mod resultant;
mod sturm;

pub use algebraic::AlgebraicRoot;
pub use isolate::{cauchy_bound, isolate_all, real_root_multiplicities, refine, CertifiedRoot};
pub use resultant::{discriminant, resultant};
pub use sturm::{count_roots_open, sturm_count, SturmChain};
