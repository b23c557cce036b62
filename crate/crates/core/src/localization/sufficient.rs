//! Sufficient conditions read off the two components without solving
//! anything beyond quadratics.

use num_traits::{Signed, Zero};

use crate::number::Surd;
use crate::quintic::MonicQuintic;
use crate::rational::Rational;
use crate::resolvents::ResolventSet;

/// No positive roots: the parabola opens downwards and its maximum `g`
/// lies below the sub-quintic on the whole positive axis. There the
/// sub-quintic is bounded below by `min(0, f1)` when `chi1 > 0` is a local
/// minimum and by zero otherwise.
pub fn no_positive_roots_certificate(q: &MonicQuintic, r: &ResolventSet) -> bool {
    let Some(g) = r.g.as_ref() else {
        return false;
    };
    if !q.a2.is_positive() {
        return false;
    }
    let floor = match (&r.chi.larger, &r.f1) {
        (Some(chi1), Some(f1)) if chi1.sign() == crate::rational::Sign::Positive => {
            if f1.sign() == crate::rational::Sign::Negative {
                f1.clone()
            } else {
                Surd::zero()
            }
        }
        _ => Surd::zero(),
    };
    floor.compare_rational(g).is_gt()
}

/// Two negative roots: with `a2 > 0`, `a0 < 0`, and a local maximum of the
/// sub-quintic at `chi2 < 0` above the parabola maximum `g`, `Q` is positive
/// at `chi2`, negative at zero, and negative far to the left.
pub fn two_negative_roots_certificate(q: &MonicQuintic, r: &ResolventSet) -> bool {
    let (Some(g), Some(chi2), Some(f2)) = (r.g.as_ref(), r.chi.smaller.as_ref(), r.f2.as_ref()) else {
        return false;
    };
    q.a2.is_positive()
        && q.a0 < Rational::zero()
        && chi2.sign() == crate::rational::Sign::Negative
        && r.chi.status == crate::resolvents::RootStatus::TwoReal
        && f2.compare_rational(g).is_gt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn reference_cases() {
        let q = MonicQuintic::new(int(1), int(-2), rat(5, 6), rat(-1, 8), int(1));
        assert!(no_positive_roots_certificate(&q, &ResolventSet::compute(&q)));
        let q = MonicQuintic::new(int(1), int(-2), rat(5, 6), rat(-1, 10), rat(-1, 2));
        assert!(two_negative_roots_certificate(&q, &ResolventSet::compute(&q)));
        assert!(!no_positive_roots_certificate(&q, &ResolventSet::compute(&q)));
    }

    #[test]
    fn local_minimum_above_g_is_not_enough() {
        // f1 > g > 0 but the sub-quintic approaches 0 < g near the origin
        let q = MonicQuintic::new(int(-1), rat(26, 100), int(1), int(0), rat(-1, 1000));
        let r = ResolventSet::compute(&q);
        assert!(r.f1.as_ref().unwrap().compare_rational(r.g.as_ref().unwrap()).is_gt());
        assert!(!no_positive_roots_certificate(&q, &r));
        let p = q.to_polynomial();
        assert!(crate::oracle::sturm_count(&p, &int(0), &int(10)).unwrap() > 0);
    }
}
