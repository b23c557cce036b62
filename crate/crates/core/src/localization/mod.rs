//! Endpoint lattices and interval claims.
//!
//! Quadratic-only mode cuts `[L, U]` at zero and at the real roots of the
//! two resolvent quadratics and reports, for every cell, an exact count or
//! a parity cluster. Full mode also cuts at the stationary points of the
//! quintic; every cell is then monotone and every count exact.

mod alpha;
mod full;
mod lattice;
mod quadratic;
mod sufficient;
mod sweep;
mod verify;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::number::{RealPoint, Surd};
use crate::oracle::AlgebraicRoot;
use crate::poly::Polynomial;
use crate::rational::Sign;

pub use alpha::{alpha_levels, stationary_points, AlphaLevel, AlphaLevels, StationaryPoint};
pub use full::isolate_full;
pub use lattice::endpoint_lattice;
pub use quadratic::{budan_fourier_bound, cluster_intervals};
pub use sufficient::{two_negative_roots_certificate, no_positive_roots_certificate};
pub use sweep::{sweep_free_term, SweepPoint, SweepRow};
pub use verify::{locate_roots, verify_report, IntervalCheck};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    QuadraticOnly,
    Full,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::QuadraticOnly => "quadratic-only",
            Mode::Full => "full",
        })
    }
}

/// Where an endpoint came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EndpointTag {
    LowerBound,
    UpperBound,
    Zero,
    Phi1,
    Phi2,
    Psi1,
    Psi2,
    Chi1,
    Chi2,
    /// Stationary point of the quintic, numbered from the largest.
    Xi(u8),
}

impl fmt::Display for EndpointTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndpointTag::Xi(i) => write!(f, "Xi{i}"),
            other => fmt::Debug::fmt(other, f),
        }
    }
}

/// An exact real point: a quadratic surd or an isolated algebraic number.
#[derive(Clone, Debug)]
pub enum PointValue {
    Surd(Surd),
    Algebraic(AlgebraicRoot),
}

impl PointValue {
    pub fn from_algebraic(r: AlgebraicRoot) -> PointValue {
        match r.as_rational() {
            Some(v) => PointValue::Surd(Surd::from_rational(v.clone())),
            None => PointValue::Algebraic(r),
        }
    }

    pub fn compare(&self, other: &PointValue) -> Ordering {
        match (self, other) {
            (PointValue::Surd(a), PointValue::Surd(b)) => a.compare(b),
            (PointValue::Surd(a), PointValue::Algebraic(b)) => b.compare_surd(a).reverse(),
            (PointValue::Algebraic(a), PointValue::Surd(b)) => a.compare_surd(b),
            (PointValue::Algebraic(a), PointValue::Algebraic(b)) => a.compare(b),
        }
    }

    pub fn as_surd(&self) -> Option<&Surd> {
        match self {
            PointValue::Surd(s) => Some(s),
            PointValue::Algebraic(_) => None,
        }
    }
}

impl PartialEq for PointValue {
    fn eq(&self, other: &PointValue) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl RealPoint for PointValue {
    fn sign_of(&self, p: &Polynomial) -> Sign {
        match self {
            PointValue::Surd(s) => s.sign_of(p),
            PointValue::Algebraic(a) => a.sign_of(p),
        }
    }

    fn approx(&self) -> f64 {
        match self {
            PointValue::Surd(s) => s.to_f64(),
            PointValue::Algebraic(a) => a.approx(),
        }
    }
}

impl fmt::Display for PointValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointValue::Surd(s) => s.fmt(f),
            PointValue::Algebraic(a) => a.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Endpoint {
    pub value: PointValue,
    pub tag: EndpointTag,
    /// Other landmarks with exactly the same value.
    pub aliases: Vec<EndpointTag>,
}

impl Endpoint {
    pub fn new(value: PointValue, tag: EndpointTag) -> Endpoint {
        Endpoint {
            value,
            tag,
            aliases: Vec::new(),
        }
    }

    pub fn surd(value: Surd, tag: EndpointTag) -> Endpoint {
        Endpoint::new(PointValue::Surd(value), tag)
    }

    pub fn has_tag(&self, tag: EndpointTag) -> bool {
        self.tag == tag || self.aliases.contains(&tag)
    }
}

/// Root count of an interval, counted with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountClaim {
    Exact(u32),
    /// One of these counts, all of the same parity.
    Cluster(Vec<u32>),
}

impl CountClaim {
    /// A singleton becomes `Exact`; otherwise every count of the same
    /// parity up to the largest is listed.
    pub fn from_possible(possible: &[u32]) -> CountClaim {
        let max = *possible.iter().max().expect("empty count set");
        let min = *possible.iter().min().unwrap();
        if min == max {
            CountClaim::Exact(max)
        } else {
            CountClaim::Cluster((max % 2..=max).step_by(2).collect())
        }
    }

    pub fn contains(&self, n: u32) -> bool {
        match self {
            CountClaim::Exact(k) => *k == n,
            CountClaim::Cluster(set) => set.contains(&n),
        }
    }

    pub fn max(&self) -> u32 {
        match self {
            CountClaim::Exact(k) => *k,
            CountClaim::Cluster(set) => *set.iter().max().unwrap(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, CountClaim::Exact(_))
    }
}

impl fmt::Display for CountClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountClaim::Exact(k) => write!(f, "{k}"),
            CountClaim::Cluster(set) => {
                let s: Vec<String> = set.iter().map(u32::to_string).collect();
                write!(f, "{{{}}}", s.join(","))
            }
        }
    }
}

/// An open cell `(left, right)`, or the single point `left` when both
/// ends coincide.
#[derive(Clone, Debug, PartialEq)]
pub struct IntervalClaim {
    pub left: Endpoint,
    pub right: Endpoint,
    pub count: CountClaim,
}

impl IntervalClaim {
    pub fn is_point(&self) -> bool {
        self.left.value == self.right.value
    }
}

impl fmt::Display for IntervalClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "[{:.6}]:{}", self.left.value.approx(), self.count)
        } else {
            write!(
                f,
                "({:.6},{:.6}):{}",
                self.left.value.approx(),
                self.right.value.approx(),
                self.count
            )
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntervalReport {
    pub intervals: Vec<IntervalClaim>,
    pub mode: Mode,
}

impl IntervalReport {
    /// Largest total the claims allow.
    pub fn max_total(&self) -> u32 {
        self.intervals.iter().map(|c| c.count.max()).sum()
    }
}
