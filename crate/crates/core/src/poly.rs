//! Dense univariate polynomials over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{int, Rational, Sign};

/// Dense polynomial; `coeffs[k]` multiplies `x^k`. Trailing zeros are never
/// stored, so the zero polynomial has an empty coefficient list and no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// From ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x - r`.
    pub fn linear_factor(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(n/d)` from the integer form `sum c_k n^k d^(deg - k)`,
    /// which avoids reducing fractions at every Horner step.
    pub fn sign_at(&self, x: &Rational) -> Sign {
        let c = self.integer_coeffs();
        let (n, d) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dk = BigInt::one();
        for ck in c.iter().rev() {
            acc = acc * n + ck * &dk;
            dk *= d;
        }
        Sign::of_int(&acc)
    }

    /// The coefficients times a positive rational so that they become
    /// coprime integers.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() || content.is_one() {
            ints
        } else {
            ints.into_iter().map(|c| c / &content).collect()
        }
    }

    /// [`Polynomial::integer_coeffs`] as a polynomial: a positive multiple of
    /// `p`, so signs are unchanged.
    pub fn primitive(&self) -> Self {
        Self::new(self.integer_coeffs().into_iter().map(Rational::from_integer).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// `[p, p', p'', ...]` down to the constant derivative.
    pub fn derivatives(&self) -> Vec<Polynomial> {
        let mut out = vec![self.clone()];
        while !out.last().unwrap().is_constant() {
            let next = out.last().unwrap().derivative();
            out.push(next);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Divides by the absolute value of the leading coefficient. Sign-preserving.
    pub fn normalize_abs(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) => self.scale(&lc.abs().recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading_coefficient().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lc;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Polynomial {
        self.div_rem(divisor).1
    }

    /// Exact quotient; callers guarantee divisibility.
    pub fn exact_div(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut x = a.monic();
        let mut y = b.monic();
        while !y.is_zero() {
            let r = x.rem(&y).monic();
            x = y;
            y = r;
        }
        x
    }

    /// `p(-x)`, negated if needed so the leading coefficient is positive.
    pub fn reflect(&self) -> Polynomial {
        let p = Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        );
        match p.leading_coefficient() {
            Some(lc) if lc.is_negative() => -p,
            _ => p,
        }
    }

    /// `p(x + t)`.
    pub fn shift(&self, t: &Rational) -> Polynomial {
        let step = Polynomial::new(vec![t.clone(), Rational::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &step) + &Self::constant(c.clone())
        })
    }

    /// Enclosure of the range of `p` over `[lo, hi]` by interval Horner
    /// evaluation.
    pub fn range_on(&self, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
        let mut acc = (Rational::zero(), Rational::zero());
        for c in self.coeffs.iter().rev() {
            let prods = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
            let min = prods.iter().min().unwrap().clone();
            let max = prods.iter().max().unwrap().clone();
            acc = (min + c, max + c);
        }
        acc
    }

    /// The sign `p` takes throughout `[lo, hi]`, if the interval Horner
    /// enclosure excludes zero. Computed on `D^n p(x/D)` over integers.
    pub fn sign_on(&self, lo: &Rational, hi: &Rational) -> Option<Sign> {
        let den = lo.denom().lcm(hi.denom());
        let a = lo.numer() * (&den / lo.denom());
        let b = hi.numer() * (&den / hi.denom());
        let c = self.integer_coeffs();
        let (mut low, mut high) = (BigInt::zero(), BigInt::zero());
        let mut dk = BigInt::one();
        for ck in c.iter().rev() {
            let prods = [&low * &a, &low * &b, &high * &a, &high * &b];
            let t = ck * &dk;
            low = prods.iter().min().unwrap() + &t;
            high = prods.iter().max().unwrap() + t;
            dk *= &den;
        }
        if low.is_positive() {
            Some(Sign::Positive)
        } else if high.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.is_constant() {
            return self.monic();
        }
        let g = Self::gcd(self, &self.derivative());
        self.exact_div(&g).monic()
    }

    /// Yun's square-free factorization: monic `(f_k, k)` with `p = lc * prod f_k^k`.
    /// Only nonconstant factors are returned.
    pub fn squarefree_decomposition(&self) -> Vec<(Polynomial, u32)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let a = self.monic();
        let b = a.derivative();
        let c = Self::gcd(&a, &b);
        let mut w = a.exact_div(&c);
        let mut y = b.exact_div(&c);
        let mut z = &y - &w.derivative();
        let mut k = 1;
        while !w.is_constant() {
            let g = Self::gcd(&w, &z);
            if !g.is_constant() {
                out.push((g.clone(), k));
            }
            w = w.exact_div(&g);
            y = z.exact_div(&g);
            z = &y - &w.derivative();
            k += 1;
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one() && k > 0;
            if !unit {
                if mag.denom().is_one() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn q1_a0_one() -> Polynomial {
        Polynomial::new(vec![int(1), rat(-1, 8), rat(5, 6), int(-2), int(1), int(1)])
    }

    #[test]
    fn eval_examples() {
        assert_eq!(q1_a0_one().eval(&int(0)), int(1));
        assert_eq!(Polynomial::from_ints(&[-2, 1, 1]).eval(&int(1)), int(0));
        assert_eq!(Polynomial::from_ints(&[0, 0, 0, -2, 1, 1]).eval(&int(-2)), int(0));
    }

    #[test]
    fn derivative_examples() {
        let x5 = Polynomial::monomial(int(1), 5);
        assert_eq!(x5.derivative(), Polynomial::monomial(int(5), 4));
        assert!(Polynomial::constant(int(7)).derivative().is_zero());
        assert_eq!(Polynomial::zero().derivative(), Polynomial::zero());
    }

    #[test]
    fn reflect_examples() {
        let expected =
            Polynomial::new(vec![int(-1), rat(-1, 8), rat(-5, 6), int(-2), int(-1), int(1)]);
        assert_eq!(q1_a0_one().reflect(), expected);
        let even = Polynomial::from_ints(&[1, 0, 1]);
        assert_eq!(even.reflect(), even);
        let x = Polynomial::from_ints(&[0, 1]);
        assert_eq!(x.reflect(), x);
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::new(vec![int(0), int(0)]).degree(), None);
        assert_eq!(Polynomial::constant(int(3)).degree(), Some(0));
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)^2 (x+2) and (x-1)(x+3)
        let a = Polynomial::from_ints(&[2, -3, 0, 1]);
        let b = Polynomial::from_ints(&[-3, 2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert_eq!(Polynomial::gcd(&a, &b), Polynomial::from_ints(&[-1, 1]));
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^2 (x^3 + 1)
        let p = &Polynomial::from_ints(&[-1, 1]).pow(2) * &Polynomial::from_ints(&[1, 0, 0, 1]);
        let dec = p.squarefree_decomposition();
        assert_eq!(
            dec,
            vec![
                (Polynomial::from_ints(&[1, 0, 0, 1]), 1),
                (Polynomial::from_ints(&[-1, 1]), 2)
            ]
        );
        let x5 = Polynomial::monomial(int(1), 5);
        assert_eq!(x5.squarefree_decomposition(), vec![(Polynomial::from_ints(&[0, 1]), 5)]);
        assert_eq!(x5.squarefree_part(), Polynomial::from_ints(&[0, 1]));
    }

    #[test]
    fn shift_matches_substitution() {
        let p = q1_a0_one();
        let t = rat(-3, 7);
        let shifted = p.shift(&t);
        for x in [int(0), rat(1, 3), int(-2)] {
            assert_eq!(shifted.eval(&x), p.eval(&(&x + &t)));
        }
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(
            q1_a0_one().to_string(),
            "x^5 + x^4 - 2x^3 + (5/6)x^2 - (1/8)x + 1"
        );
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
