use std::cmp::Ordering;

use log::debug;

use crate::number::RealPoint;
use crate::oracle::{isolate_all, AlgebraicRoot};
use crate::poly::Polynomial;
use crate::quintic::MonicQuintic;
use crate::rational::{int, pow10_neg, Rational, Sign};
use crate::resolvents::auxiliary_quartic;

/// A real root of the auxiliary quartic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StationaryPoint {
    /// 1 for the largest.
    pub index: u8,
    pub xi: AlgebraicRoot,
    /// Multiplicity as a root of the auxiliary quartic.
    pub multiplicity: u32,
}

/// Stationary points of `Q`, largest first, isolated to `width`.
pub fn stationary_points(q: &MonicQuintic, width: &Rational) -> Vec<StationaryPoint> {
    let quartic = auxiliary_quartic(q).to_polynomial();
    let mut roots = isolate_all(&quartic, width);
    roots.reverse();
    roots
        .into_iter()
        .enumerate()
        .map(|(i, r)| StationaryPoint {
            index: i as u8 + 1,
            xi: AlgebraicRoot::new(&quartic, r.lo, r.hi).expect("oracle enclosure must isolate"),
            multiplicity: r.multiplicity,
        })
        .collect()
}

/// The free term `alpha_i = a0 - Q(xi_i)` at which the family member is
/// tangent to the axis at `xi_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaLevel {
    pub xi_index: u8,
    pub xi: AlgebraicRoot,
    pub multiplicity: u32,
    /// Enclosure of `alpha_i`.
    pub alpha_lo: Rational,
    pub alpha_hi: Rational,
    /// Set when another level could not be separated from this one within
    /// the coincidence tolerance; the two are then treated as equal.
    pub coincident: bool,
}

impl AlphaLevel {
    fn new(q0: &Polynomial, xi: AlgebraicRoot, xi_index: u8, multiplicity: u32) -> AlphaLevel {
        let (vlo, vhi) = match xi.as_rational() {
            Some(v) => {
                let y = q0.eval(v);
                (y.clone(), y)
            }
            None => q0.range_on(xi.lo(), xi.hi()),
        };
        AlphaLevel {
            xi_index,
            xi,
            multiplicity,
            alpha_lo: -vhi,
            alpha_hi: -vlo,
            coincident: false,
        }
    }

    pub fn alpha_width(&self) -> Rational {
        &self.alpha_hi - &self.alpha_lo
    }

    pub fn approx(&self) -> f64 {
        crate::rational::to_f64(&crate::rational::midpoint(&self.alpha_lo, &self.alpha_hi))
    }

    /// Exact position of `alpha_i` relative to a rational free term `a0`:
    /// `alpha_i < a0` iff `Q(xi_i) > 0` for the quintic with that `a0`.
    pub fn compare_rational(&self, q: &MonicQuintic, a0: &Rational) -> Ordering {
        let s = self.xi.sign_of(&q.with_a0(a0.clone()).to_polynomial());
        match s {
            Sign::Positive => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Negative => Ordering::Greater,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaLevels {
    /// Sorted by increasing `alpha`.
    pub levels: Vec<AlphaLevel>,
    /// Number of levels strictly below the given `a0`.
    pub a0_position: usize,
    /// `xi` indices whose level equals `a0` exactly.
    pub a0_on_level: Vec<u8>,
}

/// Coincidence tolerance for separating two levels.
pub fn coincidence_tolerance() -> Rational {
    pow10_neg(30)
}

/// Computes and orders the `alpha` levels of `q` from its stationary points.
pub fn alpha_levels(q: &MonicQuintic, xis: &[StationaryPoint]) -> AlphaLevels {
    let q0 = q.separatrix().to_polynomial();
    let p = q.to_polynomial();
    let tol = coincidence_tolerance();
    let mut levels: Vec<AlphaLevel> = xis
        .iter()
        .map(|s| AlphaLevel::new(&q0, s.xi.clone(), s.index, s.multiplicity))
        .collect();
    loop {
        levels.sort_by(|a, b| a.alpha_lo.cmp(&b.alpha_lo).then(a.xi_index.cmp(&b.xi_index)));
        let mut refine = vec![false; levels.len()];
        for i in 1..levels.len() {
            let (a, b) = (&levels[i - 1], &levels[i]);
            if a.alpha_hi < b.alpha_lo || (a.coincident && b.coincident && a.alpha_hi >= b.alpha_lo) {
                continue;
            }
            if a.alpha_width() <= tol && b.alpha_width() <= tol {
                if a.alpha_lo != a.alpha_hi || b.alpha_lo != b.alpha_hi || a.alpha_lo == b.alpha_lo {
                    debug!("alpha levels of xi{} and xi{} coincide within tolerance", a.xi_index, b.xi_index);
                    levels[i - 1].coincident = true;
                    levels[i].coincident = true;
                }
                continue;
            }
            refine[i - 1] = true;
            refine[i] = true;
        }
        if !refine.iter().any(|&r| r) {
            break;
        }
        for (lvl, _) in levels.iter_mut().zip(&refine).filter(|(_, r)| **r) {
            let w = lvl.xi.hi() - lvl.xi.lo();
            let xi = lvl.xi.refined(&(w / int(2)));
            *lvl = AlphaLevel {
                coincident: lvl.coincident,
                ..AlphaLevel::new(&q0, xi, lvl.xi_index, lvl.multiplicity)
            };
        }
    }
    let mut a0_position = 0;
    let mut a0_on_level = Vec::new();
    for l in &levels {
        match l.xi.sign_of(&p) {
            Sign::Positive => a0_position += 1,
            Sign::Zero => a0_on_level.push(l.xi_index),
            Sign::Negative => {}
        }
        debug!(
            "xi{}: alpha in [{}, {}], Q(xi) - a0 + alpha = 0 by construction",
            l.xi_index, l.alpha_lo, l.alpha_hi
        );
    }
    AlphaLevels {
        levels,
        a0_position,
        a0_on_level,
    }
}

impl AlphaLevels {
    /// Real roots counted with multiplicity of the member whose free term
    /// relates to each level as given by `side` (the ordering of the free
    /// term against `alpha_i`), from the monotone pieces between
    /// stationary points.
    fn count_with(&self, side: impl Fn(&AlphaLevel) -> Ordering) -> u32 {
        let mut by_x: Vec<&AlphaLevel> = self.levels.iter().collect();
        by_x.sort_by_key(|l| std::cmp::Reverse(l.xi_index));
        if by_x.is_empty() {
            return 1;
        }
        // separatrix value v = -alpha, target c = -a0: cmp(v, c) = cmp(a0, alpha)
        let o: Vec<Ordering> = by_x.iter().map(|l| side(l)).collect();
        let mut n = 0;
        if o[0] == Ordering::Greater {
            n += 1;
        }
        if *o.last().unwrap() == Ordering::Less {
            n += 1;
        }
        for w in o.windows(2) {
            if w[0] != Ordering::Equal && w[1] != Ordering::Equal && w[0] != w[1] {
                n += 1;
            }
        }
        for (l, ord) in by_x.iter().zip(&o) {
            if *ord == Ordering::Equal {
                n += l.multiplicity + 1;
            }
        }
        n
    }

    /// Real-root count for a rational free term.
    pub fn count_for(&self, q: &MonicQuintic, a0: &Rational) -> u32 {
        self.count_with(|l| l.compare_rational(q, a0).reverse())
    }

    /// Real-root count when the free term equals the `k`-th level.
    pub fn count_at_level(&self, k: usize) -> u32 {
        let target = &self.levels[k];
        self.count_with(|l| {
            if l.xi_index == target.xi_index || (l.coincident && target.coincident && overlaps(l, target)) {
                Ordering::Equal
            } else if target.alpha_hi < l.alpha_lo {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

fn overlaps(a: &AlphaLevel, b: &AlphaLevel) -> bool {
    a.alpha_lo <= b.alpha_hi && b.alpha_lo <= a.alpha_hi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::classify;
    use crate::rational::rat;

    fn q1(a0: Rational) -> MonicQuintic {
        MonicQuintic::new(int(1), int(-2), rat(5, 6), rat(-1, 8), a0)
    }

    #[test]
    fn reference_has_four_stationary_points() {
        let xs = stationary_points(&q1(int(1)), &pow10_neg(12));
        assert_eq!(xs.len(), 4);
        assert_eq!(xs.iter().filter(|s| s.xi.approx() < 0.0).count(), 1);
    }

    #[test]
    fn x5_has_one_flat_point() {
        let q = MonicQuintic::new(int(0), int(0), int(0), int(0), int(0));
        let xs = stationary_points(&q, &pow10_neg(12));
        assert_eq!(xs.len(), 1);
        assert_eq!(xs[0].multiplicity, 4);
        assert_eq!(xs[0].xi.as_rational(), Some(&int(0)));
    }

    #[test]
    fn piece_counts_match_classification() {
        for a0 in [int(1), rat(1, 100), rat(6, 1000), int(-1), int(-10), rat(1, 40)] {
            let q = q1(a0.clone());
            let xs = stationary_points(&q, &pow10_neg(12));
            let lv = alpha_levels(&q, &xs);
            assert_eq!(lv.count_for(&q, &a0), classify(&q).total_real, "a0 = {a0}");
        }
    }

    #[test]
    fn levels_are_sorted_and_bracket_a0() {
        let q = q1(rat(6, 1000));
        let lv = alpha_levels(&q, &stationary_points(&q, &pow10_neg(12)));
        for w in lv.levels.windows(2) {
            assert!(w[0].alpha_hi < w[1].alpha_lo);
        }
        let below = lv.levels.iter().filter(|l| l.compare_rational(&q, &q.a0) == Ordering::Less).count();
        assert_eq!(below, lv.a0_position);
    }

    #[test]
    fn tangency_is_a_double_root() {
        // x^5 - 5x + a0 has stationary points +-1; Q0(1) = -4, so alpha = 4 there
        let q = MonicQuintic::new(int(0), int(0), int(0), int(-5), int(4));
        let lv = alpha_levels(&q, &stationary_points(&q, &pow10_neg(12)));
        assert_eq!(lv.a0_on_level, vec![1]);
        let k = lv.levels.iter().position(|l| l.xi_index == 1).unwrap();
        assert_eq!(lv.count_at_level(k), 3);
        assert_eq!(lv.count_for(&q, &int(4)), 3);
    }
}
