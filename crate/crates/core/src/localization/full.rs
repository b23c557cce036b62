use crate::bounds::root_bounds;
use crate::classification::classify;
use crate::error::{Error, Result};
use crate::number::{sign_left, sign_right};
use crate::quintic::MonicQuintic;
use crate::rational::Rational;
use crate::resolvents::ResolventSet;

use super::alpha::stationary_points;
use super::lattice::{endpoint_lattice, insert_points};
use super::quadratic::assemble;
use super::{CountClaim, Endpoint, EndpointTag, IntervalReport, Mode, PointValue};

/// Full report: the lattice is refined by the stationary points, so `Q` is
/// monotone on every cell and each cell holds zero or one root. Multiple
/// roots sit on stationary points and appear as point intervals.
///
/// Fails with `InvariantViolation` if the counts do not add up to the
/// real-root total of the discrimination system.
pub fn isolate_full(q: &MonicQuintic, width: &Rational) -> Result<IntervalReport> {
    let r = ResolventSet::compute(q);
    let lattice = endpoint_lattice(&r, &root_bounds(q));
    let xis = stationary_points(q, width)
        .into_iter()
        .map(|s| Endpoint::new(PointValue::from_algebraic(s.xi), EndpointTag::Xi(s.index)))
        .collect();
    let lattice = insert_points(lattice, xis);
    let p = q.to_polynomial();
    let intervals = assemble(&p, &lattice, |a, b| {
        let n = sign_right(&p, &a.value) != sign_left(&p, &b.value);
        CountClaim::Exact(n as u32)
    });
    let report = IntervalReport {
        intervals,
        mode: Mode::Full,
    };
    let total = classify(q).total_real;
    let found = report.max_total();
    if found != total {
        return Err(Error::InvariantViolation(format!(
            "full-mode counts sum to {found} but the discrimination system gives {total} for {q}"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::RealPoint;
    use crate::rational::{int, pow10_neg, rat};

    #[test]
    fn five_isolated_roots() {
        let q = MonicQuintic::new(int(1), int(-2), rat(5, 6), rat(-1, 8), rat(6, 1000));
        let rep = isolate_full(&q, &pow10_neg(12)).unwrap();
        let ones: Vec<_> = rep.intervals.iter().filter(|c| c.count == CountClaim::Exact(1)).collect();
        assert_eq!(ones.len(), 5);
        assert!(rep.intervals.iter().all(|c| c.count.is_exact()));
        for (c, root) in ones.iter().zip([-2.13, 0.10, 0.17, 0.30, 0.56]) {
            assert!(c.left.value.approx() < root + 0.01 && c.right.value.approx() > root - 0.01);
        }
    }

    #[test]
    fn x5_point_root() {
        let q = MonicQuintic::new(int(0), int(0), int(0), int(0), int(0));
        let rep = isolate_full(&q, &pow10_neg(12)).unwrap();
        let pts: Vec<_> = rep.intervals.iter().filter(|c| c.is_point()).collect();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].count, CountClaim::Exact(5));
        assert_eq!(rep.max_total(), 5);
    }
}
