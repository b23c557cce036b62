use crate::error::{Error, Result};
use crate::number::{sign_variations, RealPoint};
use crate::poly::Polynomial;
use crate::rational::{format_rational, Rational, Sign};

/// Signed remainder sequence `P, P', -rem(P, P'), ...`.
///
/// Every member is scaled by a positive constant to coprime integer
/// coefficients, which keeps signs and limits coefficient growth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    pub sequence: Vec<Polynomial>,
    /// The sequence divided by its last element, a Sturm sequence for the
    /// square-free part of `P`.
    pub reduced: Vec<Polynomial>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> SturmChain {
        let mut sequence = Vec::new();
        if !p.is_zero() {
            sequence.push(p.primitive());
            let d = p.derivative();
            if !d.is_zero() {
                sequence.push(d.primitive());
            }
        }
        while sequence.len() >= 2 {
            let n = sequence.len();
            let r = sequence[n - 2].rem(&sequence[n - 1]);
            if r.is_zero() {
                break;
            }
            sequence.push(-r.primitive());
        }
        let reduced = match sequence.last() {
            Some(g) => {
                let g = g.primitive();
                sequence.iter().map(|f| f.exact_div(&g).primitive()).collect()
            }
            None => Vec::new(),
        };
        SturmChain { sequence, reduced }
    }

    /// `gcd(P, P')` up to a positive constant.
    pub fn gcd(&self) -> Option<&Polynomial> {
        self.sequence.last()
    }

    /// Sign changes of the reduced chain at `x`, zeros skipped.
    pub fn variations<P: RealPoint + ?Sized>(&self, x: &P) -> usize {
        let signs: Vec<Sign> = self.reduced.iter().map(|f| x.sign_of(f)).collect();
        sign_variations(&signs)
    }

    /// Variations at `-inf` and `+inf`.
    fn variations_at_infinity(&self) -> (usize, usize) {
        let at = |neg: bool| {
            let signs: Vec<Sign> = self
                .reduced
                .iter()
                .map(|f| {
                    let lc = Sign::of(f.leading_coefficient().unwrap());
                    let odd = f.degree().unwrap() % 2 == 1;
                    if neg && odd {
                        -lc
                    } else {
                        lc
                    }
                })
                .collect();
            sign_variations(&signs)
        };
        (at(true), at(false))
    }

    /// Distinct real roots in `(a, b]`; the caller guarantees `a < b`.
    pub fn count<A: RealPoint + ?Sized, B: RealPoint + ?Sized>(&self, a: &A, b: &B) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Distinct real roots overall.
    pub fn count_all(&self) -> usize {
        if self.reduced.is_empty() {
            return 0;
        }
        let (lo, hi) = self.variations_at_infinity();
        lo.saturating_sub(hi)
    }
}

/// Distinct real roots of `p` in `(a, b]`.
pub fn sturm_count(p: &Polynomial, a: &Rational, b: &Rational) -> Result<usize> {
    if a >= b {
        return Err(Error::DegenerateInterval {
            left: format_rational(a),
            right: format_rational(b),
        });
    }
    Ok(SturmChain::new(p).count(a, b))
}

/// Real roots of `p` in the open interval `(a, b)`, counted with
/// multiplicity. The caller guarantees `a < b`.
pub fn count_roots_open<A: RealPoint + ?Sized, B: RealPoint + ?Sized>(
    p: &Polynomial,
    a: &A,
    b: &B,
) -> u32 {
    p.squarefree_decomposition()
        .iter()
        .map(|(f, k)| {
            let chain = SturmChain::new(f);
            let mut n = chain.count(a, b);
            if b.sign_of(f) == Sign::Zero {
                n -= 1;
            }
            n as u32 * k
        })
        .sum()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn sqrt_two() {
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        assert_eq!(sturm_count(&p, &int(0), &int(2)).unwrap(), 1);
        assert_eq!(SturmChain::new(&p).count_all(), 2);
    }

    #[test]
    fn no_positive_root() {
        let p = Polynomial::from_ints(&[1, 0, 0, 0, 0, 1]);
        assert_eq!(sturm_count(&p, &int(0), &int(10)).unwrap(), 0);
    }

    #[test]
    fn degenerate_interval() {
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        assert!(matches!(sturm_count(&p, &int(1), &int(1)), Err(Error::DegenerateInterval { .. })));
    }

    #[test]
    fn endpoints_on_roots() {
        // (x - 1)^2 (x + 1): distinct roots in (-1, 1] is 1
        let p = &Polynomial::from_ints(&[-1, 1]).pow(2) * &Polynomial::from_ints(&[1, 1]);
        assert_eq!(sturm_count(&p, &int(-1), &int(1)).unwrap(), 1);
        assert_eq!(sturm_count(&p, &int(-2), &int(1)).unwrap(), 2);
        assert_eq!(count_roots_open(&p, &int(-2), &int(2)), 3);
        assert_eq!(count_roots_open(&p, &int(-1), &int(1)), 0);
        assert_eq!(count_roots_open(&p, &rat(1, 2), &int(2)), 2);
    }

    #[test]
    fn reference_four_positive_roots() {
        let p = crate::quintic::MonicQuintic::new(int(1), int(-2), rat(5, 6), rat(-1, 8), rat(6, 1000))
            .to_polynomial();
        assert_eq!(sturm_count(&p, &int(0), &int(1)).unwrap(), 4);
    }
}
