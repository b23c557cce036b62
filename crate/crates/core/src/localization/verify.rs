use std::cmp::Ordering;

use crate::number::RealPoint;
use crate::oracle::{count_roots_open, isolate_all, AlgebraicRoot, CertifiedRoot};
use crate::poly::Polynomial;
use crate::quintic::MonicQuintic;
use crate::rational::{Rational, Sign};

use super::{IntervalReport, PointValue};

/// Oracle verdict on one interval claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalCheck {
    pub index: usize,
    /// Roots in the interval counted with multiplicity.
    pub oracle_count: u32,
    pub ok: bool,
}

fn multiplicity_by_oracle(p: &Polynomial, x: &PointValue) -> u32 {
    p.squarefree_decomposition()
        .iter()
        .filter(|(f, _)| x.sign_of(f) == Sign::Zero)
        .map(|(_, k)| *k)
        .sum()
}

/// Checks every claim against Sturm counts of the square-free factors.
pub fn verify_report(q: &MonicQuintic, report: &IntervalReport) -> Vec<IntervalCheck> {
    let p = q.to_polynomial();
    report
        .intervals
        .iter()
        .enumerate()
        .map(|(index, c)| {
            let oracle_count = if c.is_point() {
                multiplicity_by_oracle(&p, &c.left.value)
            } else {
                count_roots_open(&p, &c.left.value, &c.right.value)
            };
            IntervalCheck {
                index,
                oracle_count,
                ok: c.count.contains(oracle_count),
            }
        })
        .collect()
}

/// Oracle enclosures of the real roots, each paired with the index of the
/// claim that contains it (`None` if no claim does).
pub fn locate_roots(q: &MonicQuintic, report: &IntervalReport, width: &Rational) -> Vec<(CertifiedRoot, Option<usize>)> {
    let p = q.to_polynomial();
    isolate_all(&p, width)
        .into_iter()
        .map(|r| {
            let v = PointValue::from_algebraic(
                AlgebraicRoot::new(&p, r.lo.clone(), r.hi.clone()).expect("oracle enclosure must isolate"),
            );
            let idx = report.intervals.iter().position(|c| {
                if c.is_point() {
                    v == c.left.value
                } else {
                    v.compare(&c.left.value) == Ordering::Greater && v.compare(&c.right.value) == Ordering::Less
                }
            });
            (r, idx)
        })
        .collect()
}
