use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{format_rational, int, midpoint, Rational, Sign};

use super::sturm::SturmChain;

/// One distinct real root inside `[lo, hi]`. When `lo < hi` the root lies
/// strictly inside; `lo == hi` means the root is exactly `lo`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CertifiedRoot {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: u32,
}

impl CertifiedRoot {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// `1 + max |a_i / a_n|`; every real root lies strictly inside.
pub fn cauchy_bound(p: &Polynomial) -> Rational {
    let lc = p.leading_coefficient().expect("bound of the zero polynomial").abs();
    let n = p.degree().unwrap();
    let m = p.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + m
}

/// A split point in `(a, b)` that is not a root of `p`: the midpoint, or
/// `(a + 2b)/3` and further right-leaning points when that is a root.
fn split_point(p: &Polynomial, a: &Rational, b: &Rational) -> Rational {
    let mut m = midpoint(a, b);
    if p.sign_at(&m) == Sign::Zero {
        m = (a + int(2) * b) / int(3);
        while p.sign_at(&m) == Sign::Zero {
            m = midpoint(&m, b);
        }
    }
    m
}

/// Disjoint enclosures, one per distinct real root, increasing, each of
/// width at most `width`. Multiplicities come from the square-free
/// decomposition.
///
/// Panics if `width <= 0`.
pub fn isolate_all(p: &Polynomial, width: &Rational) -> Vec<CertifiedRoot> {
    assert!(width.is_positive(), "isolation width must be positive");
    if p.is_constant() {
        return Vec::new();
    }
    let factors = p.squarefree_decomposition();
    let sqf = p.squarefree_part();
    let chain = SturmChain::new(&sqf);
    let m = cauchy_bound(&sqf);
    let mut out = Vec::new();
    let mut stack = vec![(-m.clone(), m.clone(), chain.count(&-m.clone(), &m))];
    while let Some((a, b, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            let (lo, hi) = bisect_simple(&sqf, a, b, width);
            out.push((lo, hi));
            continue;
        }
        let c = split_point(&sqf, &a, &b);
        let left = chain.count(&a, &c);
        // right half first on the stack so the left half pops first
        stack.push((c.clone(), b, n - left));
        stack.push((a, c, left));
    }
    out.into_iter()
        .map(|(lo, hi)| {
            let multiplicity = factors
                .iter()
                .find(|(f, _)| has_root_in(f, &lo, &hi))
                .map(|(_, k)| *k)
                .unwrap_or(1);
            CertifiedRoot { lo, hi, multiplicity }
        })
        .collect()
}

/// Whether the square-free `f` has a root in `[lo, hi]`.
fn has_root_in(f: &Polynomial, lo: &Rational, hi: &Rational) -> bool {
    if f.sign_at(lo) == Sign::Zero || f.sign_at(hi) == Sign::Zero {
        return true;
    }
    lo < hi && SturmChain::new(f).count(lo, hi) > 0
}

/// Bisects a square-free `p` with a single simple root in `(a, b)` and
/// nonzero values at both ends. A root hit by a midpoint is returned exactly.
fn bisect_simple(p: &Polynomial, mut a: Rational, mut b: Rational, width: &Rational) -> (Rational, Rational) {
    let sa = p.sign_at(&a);
    while &(&b - &a) > width {
        let m = midpoint(&a, &b);
        let sm = p.sign_at(&m);
        if sm == Sign::Zero {
            return (m.clone(), m);
        }
        if sm == sa {
            a = m;
        } else {
            b = m;
        }
    }
    (a, b)
}

/// Narrows an enclosure holding exactly one distinct root of `p` to
/// `width`. Works on the square-free part, so roots of even multiplicity
/// are handled the same way as simple ones.
pub fn refine(p: &Polynomial, enclosure: (&Rational, &Rational), width: &Rational) -> Result<(Rational, Rational)> {
    let (lo, hi) = enclosure;
    let lost = || {
        Error::LostRoot(format!(
            "[{}, {}] does not hold exactly one root of {p}",
            format_rational(lo),
            format_rational(hi)
        ))
    };
    if lo > hi || p.is_zero() {
        return Err(lost());
    }
    let sqf = p.squarefree_part();
    let zero_lo = sqf.sign_at(lo) == Sign::Zero;
    if lo == hi {
        return if zero_lo { Ok((lo.clone(), hi.clone())) } else { Err(lost()) };
    }
    let inside = SturmChain::new(&sqf).count(lo, hi);
    if inside + zero_lo as usize != 1 {
        return Err(lost());
    }
    if zero_lo {
        return Ok((lo.clone(), lo.clone()));
    }
    if sqf.sign_at(hi) == Sign::Zero {
        return Ok((hi.clone(), hi.clone()));
    }
    Ok(bisect_simple(&sqf, lo.clone(), hi.clone(), width))
}

/// Multiplicities of the distinct real roots, largest first.
pub fn real_root_multiplicities(p: &Polynomial) -> Vec<u32> {
    let mut out: Vec<u32> = p
        .squarefree_decomposition()
        .iter()
        .flat_map(|(f, k)| std::iter::repeat_n(*k, SturmChain::new(f).count_all()))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quintic::MonicQuintic;
    use crate::rational::{pow10_neg, rat, to_f64};

    #[test]
    fn constructed_multiplicities() {
        let p = &Polynomial::from_ints(&[-1, 1]).pow(2) * &Polynomial::from_ints(&[1, 0, 0, 1]);
        let roots = isolate_all(&p, &pow10_neg(6));
        assert_eq!(roots.len(), 2);
        assert!(roots[0].contains(&int(-1)) && roots[0].multiplicity == 1);
        assert!(roots[1].contains(&int(1)) && roots[1].multiplicity == 2);
        assert_eq!(real_root_multiplicities(&p), vec![2, 1]);
    }

    #[test]
    fn x5_single_root() {
        let p = Polynomial::monomial(int(1), 5);
        let roots = isolate_all(&p, &pow10_neg(12));
        assert_eq!(roots.len(), 1);
        assert!(roots[0].contains(&int(0)));
        assert_eq!(roots[0].multiplicity, 5);
    }

    #[test]
    fn reference_three_roots() {
        let p = MonicQuintic::new(int(1), int(-2), int(3), rat(-1, 8), int(-13)).to_polynomial();
        let roots = isolate_all(&p, &pow10_neg(9));
        let mids: Vec<f64> = roots.iter().map(|r| to_f64(&r.lo)).collect();
        assert_eq!(mids.len(), 3);
        for (got, want) in mids.iter().zip([-1.91, -1.73, 1.52]) {
            assert!((got - want).abs() < 0.01, "{got} vs {want}");
        }
        for r in &roots {
            assert!(r.width() <= pow10_neg(9));
        }
    }

    #[test]
    fn refine_sqrt_two() {
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        let (lo, hi) = refine(&p, (&int(1), &int(2)), &rat(1, 1024)).unwrap();
        assert!(&hi - &lo <= rat(1, 1024));
        assert!(to_f64(&lo) <= std::f64::consts::SQRT_2 && to_f64(&hi) >= std::f64::consts::SQRT_2);
    }

    #[test]
    fn refine_tight_and_double() {
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        let (lo, hi) = refine(&p, (&rat(14, 10), &rat(15, 10)), &int(1)).unwrap();
        assert_eq!((lo, hi), (rat(14, 10), rat(15, 10)));
        let d = Polynomial::from_ints(&[1, -2, 1]);
        let (lo, hi) = refine(&d, (&rat(1, 3), &rat(7, 3)), &pow10_neg(3)).unwrap();
        assert!(lo <= int(1) && int(1) <= hi);
        assert!(matches!(refine(&d, (&int(2), &int(3)), &pow10_neg(3)), Err(Error::LostRoot(_))));
    }
}
