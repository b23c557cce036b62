//! Exact localization of the real roots of a monic quintic
//! `x^5 + a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0`.
//!
//! The quintic is split as `x^3 q1(x) = q2(x)` with `q1 = x^2 + a4 x + a3`
//! and `q2 = -a2 x^2 - a1 x - a0`. Roots of the two resolvent quadratics,
//! together with root bounds and zero, cut the real line into cells; exact
//! sign evaluation turns those cells into isolation or cluster intervals.
//! Full mode adds the stationary points of the quintic and lifts every
//! remaining ambiguity. A Sturm-sequence oracle checks all of it.

pub mod bounds;
pub mod classification;
pub mod cli;
pub mod error;
pub mod localization;
pub mod number;
pub mod oracle;
pub mod poly;
pub mod quintic;
pub mod rational;
pub mod resolvents;

pub use bounds::{root_bounds, RootBounds};
pub use classification::{classify, RootClassification};
pub use error::{Error, Result};
pub use localization::{cluster_intervals, isolate_full, IntervalReport, Mode};
pub use number::Surd;
pub use poly::Polynomial;
pub use quintic::{depress, DepressedQuintic, MonicQuintic};
pub use rational::{parse_rational, Rational};
pub use resolvents::ResolventSet;
