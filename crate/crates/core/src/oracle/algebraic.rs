use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::number::{RealPoint, Surd};
use crate::poly::Polynomial;
use crate::rational::{format_rational, midpoint, to_f64, Rational, Sign};

use super::sturm::SturmChain;

/// A real root of a square-free polynomial, held as an isolating interval.
///
/// Either `lo == hi` (the root is that rational) or `lo < hi`, neither end
/// is a root, and exactly one root lies in between. Comparisons and signs
/// are exact: the interval is narrowed on a private copy until the
/// question is decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicRoot {
    defining: Polynomial,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicRoot {
    /// `p` need not be square-free; its square-free part is kept.
    pub fn new(p: &Polynomial, lo: Rational, hi: Rational) -> Result<AlgebraicRoot> {
        let defining = p.squarefree_part();
        let bad = || {
            Error::LostRoot(format!(
                "[{}, {}] does not isolate a root of {defining}",
                format_rational(&lo),
                format_rational(&hi)
            ))
        };
        if lo == hi {
            if defining.sign_at(&lo) != Sign::Zero {
                return Err(bad());
            }
        } else if lo > hi
            || defining.sign_at(&lo) == Sign::Zero
            || defining.sign_at(&hi) == Sign::Zero
            || SturmChain::new(&defining).count(&lo, &hi) != 1
        {
            return Err(bad());
        }
        Ok(AlgebraicRoot { defining, lo, hi })
    }

    pub fn defining_polynomial(&self) -> &Polynomial {
        &self.defining
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    /// One bisection step. Returns false when already exact.
    fn halve(&mut self) -> bool {
        if self.lo == self.hi {
            return false;
        }
        let m = midpoint(&self.lo, &self.hi);
        let sm = self.defining.sign_at(&m);
        if sm == Sign::Zero {
            self.lo = m.clone();
            self.hi = m;
        } else if sm == self.defining.sign_at(&self.lo) {
            self.lo = m;
        } else {
            self.hi = m;
        }
        true
    }

    /// Narrows to at most `width`.
    pub fn refined(&self, width: &Rational) -> AlgebraicRoot {
        let mut r = self.clone();
        while &(&r.hi - &r.lo) > width {
            r.halve();
        }
        r
    }

    /// Position relative to a rational.
    pub fn compare_rational(&self, x: &Rational) -> Ordering {
        if let Some(v) = self.as_rational() {
            return v.cmp(x);
        }
        if x <= &self.lo {
            return Ordering::Greater;
        }
        if x >= &self.hi {
            return Ordering::Less;
        }
        let sx = self.defining.sign_at(x);
        if sx == Sign::Zero {
            // the only root in the interval
            Ordering::Equal
        } else if sx == self.defining.sign_at(&self.lo) {
            // no sign change on [lo, x], so the root is to the right of x
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Position relative to a surd.
    pub fn compare_surd(&self, s: &Surd) -> Ordering {
        if let Some(v) = s.as_rational() {
            return self.compare_rational(v);
        }
        if let Some(v) = self.as_rational() {
            return s.compare_rational(v).reverse();
        }
        if s.compare_rational(&self.lo).is_le() {
            return Ordering::Greater;
        }
        if s.compare_rational(&self.hi).is_ge() {
            return Ordering::Less;
        }
        let ss = s.sign_of(&self.defining);
        if ss == Sign::Zero {
            Ordering::Equal
        } else if ss == self.defining.sign_at(&self.lo) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    pub fn compare(&self, other: &AlgebraicRoot) -> Ordering {
        if let Some(v) = other.as_rational() {
            return self.compare_rational(v);
        }
        if let Some(v) = self.as_rational() {
            return other.compare_rational(v).reverse();
        }
        if other.sign_of(&self.defining) == Sign::Zero
            && other.compare_rational(&self.lo).is_gt()
            && other.compare_rational(&self.hi).is_lt()
        {
            // other is a root of our polynomial inside our isolating interval
            return Ordering::Equal;
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
                return x.cmp(y);
            }
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            a.halve();
            b.halve();
        }
    }
}

impl RealPoint for AlgebraicRoot {
    fn sign_of(&self, p: &Polynomial) -> Sign {
        if let Some(v) = self.as_rational() {
            return p.sign_at(v);
        }
        if p.is_zero() {
            return Sign::Zero;
        }
        if let Some(s) = p.sign_on(&self.lo, &self.hi) {
            return s;
        }
        let g = Polynomial::gcd(p, &self.defining);
        if !g.is_constant() && g.sign_at(&self.lo) != g.sign_at(&self.hi) {
            return Sign::Zero;
        }
        // p has no root at this point; narrow until it has none in the interval
        let chain = SturmChain::new(p);
        let mut r = self.clone();
        loop {
            if let Some(v) = r.as_rational() {
                return p.sign_at(v);
            }
            let s = p.sign_at(&r.lo);
            if s != Sign::Zero && chain.count(&r.lo, &r.hi) == 0 {
                return s;
            }
            r.halve();
        }
    }

    fn approx(&self) -> f64 {
        to_f64(&midpoint(&self.lo, &self.hi))
    }
}

impl fmt::Display for AlgebraicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(v) => f.write_str(&format_rational(v)),
            None => write!(f, "root of {} in [{}, {}]", self.defining, format_rational(&self.lo), format_rational(&self.hi)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn sqrt2() -> AlgebraicRoot {
        AlgebraicRoot::new(&Polynomial::from_ints(&[-2, 0, 1]), int(1), int(2)).unwrap()
    }

    #[test]
    fn rejects_bad_intervals() {
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        assert!(AlgebraicRoot::new(&p, int(2), int(3)).is_err());
        assert!(AlgebraicRoot::new(&p, int(-2), int(2)).is_err());
    }

    #[test]
    fn signs_at_sqrt2() {
        let r = sqrt2();
        // x^4 - 4 vanishes, x - 3/2 is negative, x^3 - 2 is positive (2.83 - 2)
        assert_eq!(r.sign_of(&Polynomial::from_ints(&[-4, 0, 0, 0, 1])), Sign::Zero);
        assert_eq!(r.sign_of(&Polynomial::new(vec![rat(-3, 2), int(1)])), Sign::Negative);
        assert_eq!(r.sign_of(&Polynomial::from_ints(&[-2, 0, 0, 1])), Sign::Positive);
    }

    #[test]
    fn compares_with_surds_and_rationals() {
        let r = sqrt2();
        assert_eq!(r.compare_surd(&Surd::new(int(0), int(1), int(2))), Ordering::Equal);
        assert_eq!(r.compare_surd(&Surd::new(int(0), int(1), int(3))), Ordering::Less);
        assert_eq!(r.compare_rational(&rat(141, 100)), Ordering::Greater);
        let other = AlgebraicRoot::new(&Polynomial::from_ints(&[-4, 0, 0, 0, 1]), rat(13, 10), int(3)).unwrap();
        assert_eq!(r.compare(&other), Ordering::Equal);
        let cube = AlgebraicRoot::new(&Polynomial::from_ints(&[-3, 0, 0, 1]), int(1), int(2)).unwrap();
        assert_eq!(r.compare(&cube), Ordering::Less);
    }
}
