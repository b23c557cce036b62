use log::error;

use crate::bounds::root_bounds;
use crate::classification::classify;
use crate::number::{
    derivative_signs, left_signs, multiplicity_at, right_signs, sign_right, sign_variations, RealPoint,
};
use crate::poly::Polynomial;
use crate::quintic::MonicQuintic;
use crate::rational::Sign;
use crate::resolvents::{subquintic, ResolventSet};

use super::lattice::endpoint_lattice;
use super::{CountClaim, Endpoint, IntervalClaim, IntervalReport, Mode};

/// `V(a+) - V(b-)` over the derivative sequence of `p`: an upper bound on
/// the roots in `(a, b)` counted with multiplicity, of the same parity.
pub fn budan_fourier_bound<A: RealPoint + ?Sized, B: RealPoint + ?Sized>(p: &Polynomial, a: &A, b: &B) -> u32 {
    let va = sign_variations(&right_signs(&derivative_signs(p, a)));
    let vb = sign_variations(&left_signs(&derivative_signs(p, b)));
    va.saturating_sub(vb) as u32
}

/// `-a2 x^2 - a1 x - a0`.
pub(crate) fn parabola(q: &MonicQuintic) -> Polynomial {
    Polynomial::new(vec![-q.a0.clone(), -q.a1.clone(), -q.a2.clone()])
}

/// Point claims where `Q` vanishes at an endpoint, interleaved with open
/// cells whose candidate counts come from `cell_candidates`.
pub(crate) fn assemble(
    p: &Polynomial,
    lattice: &[Endpoint],
    mut cell_claim: impl FnMut(&Endpoint, &Endpoint) -> CountClaim,
) -> Vec<IntervalClaim> {
    let mut out = Vec::new();
    for (i, e) in lattice.iter().enumerate() {
        let m = multiplicity_at(p, &e.value);
        if m > 0 {
            out.push(IntervalClaim {
                left: e.clone(),
                right: e.clone(),
                count: CountClaim::Exact(m),
            });
        }
        if let Some(next) = lattice.get(i + 1) {
            let count = cell_claim(e, next);
            out.push(IntervalClaim {
                left: e.clone(),
                right: next.clone(),
                count,
            });
        }
    }
    out
}

/// Counts a cell may hold before any global constraint: zero when the
/// sub-quintic and the parabola have opposite (or zero) signs on it,
/// otherwise the Budan-Fourier bound and the values below it of equal parity.
fn cell_candidates(p: &Polynomial, sub: &Polynomial, par: &Polynomial, a: &Endpoint, b: &Endpoint) -> Vec<u32> {
    let s1 = sign_right(sub, &a.value);
    let s2 = sign_right(par, &a.value);
    if s1 * s2 != Sign::Positive {
        return vec![0];
    }
    let bf = budan_fourier_bound(p, &a.value, &b.value);
    (bf % 2..=bf).step_by(2).collect()
}

/// Keeps, for every cell, the candidates that some choice on the other
/// cells extends to an allowed total.
fn feasible(cands: &[Vec<u32>], fixed: u32, totals: &[u32]) -> Option<Vec<Vec<u32>>> {
    const W: usize = 64;
    let n = cands.len();
    let add = |mask: u64, vals: &[u32]| {
        vals.iter().fold(0u64, |acc, &v| acc | mask.checked_shl(v).unwrap_or(0))
    };
    let mut prefix = vec![1u64; n + 1];
    for i in 0..n {
        prefix[i + 1] = add(prefix[i], &cands[i]);
    }
    let mut suffix = vec![1u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = add(suffix[i + 1], &cands[i]);
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let keep: Vec<u32> = cands[i]
            .iter()
            .copied()
            .filter(|&v| {
                (0..W).any(|s1| {
                    prefix[i] >> s1 & 1 == 1
                        && (0..W).any(|s2| {
                            suffix[i + 1] >> s2 & 1 == 1 && totals.contains(&(s1 as u32 + v + s2 as u32 + fixed))
                        })
                })
            })
            .collect();
        if keep.is_empty() {
            return None;
        }
        out.push(keep);
    }
    Some(out)
}

/// Quadratic-only report: every cell carries an exact count or a parity
/// cluster, decided from signs at resolvent roots, the third-resolvent
/// band, and the discrimination system's real-root total.
pub fn cluster_intervals(q: &MonicQuintic) -> IntervalReport {
    let r = ResolventSet::compute(q);
    let lattice = endpoint_lattice(&r, &root_bounds(q));
    let p = q.to_polynomial();
    let sub = subquintic(&q.a4, &q.a3);
    let par = parabola(q);

    let mut cands = Vec::new();
    let skeleton = assemble(&p, &lattice, |a, b| {
        cands.push(cell_candidates(&p, &sub, &par, a, b));
        CountClaim::Exact(0)
    });
    let fixed: u32 = skeleton
        .iter()
        .filter(|c| c.is_point())
        .map(|c| c.count.max())
        .sum();

    let mut totals: Vec<u32> = vec![1, 3, 5];
    if !r.a2_in_band.allows_five() {
        totals.retain(|&t| t != 5);
    }
    let total = classify(q).total_real;
    if totals.contains(&total) {
        totals = vec![total];
    } else {
        error!("real-root total {total} outside the band verdict {}", r.a2_in_band);
    }
    let sets = feasible(&cands, fixed, &totals).unwrap_or_else(|| {
        error!("no consistent distribution of {totals:?} over the cells of {q}");
        cands.clone()
    });

    let mut sets = sets.into_iter();
    let intervals = skeleton
        .into_iter()
        .map(|mut c| {
            if !c.is_point() {
                c.count = CountClaim::from_possible(&sets.next().unwrap());
            }
            c
        })
        .collect();
    IntervalReport {
        intervals,
        mode: Mode::QuadraticOnly,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localization::EndpointTag;
    use crate::rational::{int, rat};

    #[test]
    fn feasibility_pins_counts() {
        let c = vec![vec![1], vec![0, 2, 4], vec![0]];
        assert_eq!(feasible(&c, 0, &[5]).unwrap(), vec![vec![1], vec![4], vec![0]]);
        assert_eq!(feasible(&c, 0, &[1, 3]).unwrap()[1], vec![0, 2]);
        assert!(feasible(&c, 0, &[2]).is_none());
    }

    #[test]
    fn bf_bound_counts_cubic() {
        // x^3 - x on (-2, 2): three roots
        let p = Polynomial::from_ints(&[0, -1, 0, 1]);
        assert_eq!(budan_fourier_bound(&p, &int(-2), &int(2)), 3);
        assert_eq!(budan_fourier_bound(&p, &int(2), &int(3)), 0);
    }

    #[test]
    fn single_negative_root() {
        let q = MonicQuintic::new(int(1), int(-2), rat(5, 6), rat(-1, 8), int(1));
        let rep = cluster_intervals(&q);
        let nonzero: Vec<_> = rep.intervals.iter().filter(|c| c.count.max() > 0).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].count, CountClaim::Exact(1));
        assert_eq!(nonzero[0].left.tag, EndpointTag::LowerBound);
        assert!(nonzero[0].right.has_tag(EndpointTag::Phi2));
    }
}
