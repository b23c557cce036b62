use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::rational::Rational;

/// Resultant by the Euclidean recurrence
/// `res(A, B) = (-1)^(deg A deg B) lc(B)^(deg A - deg R) res(B, R)`, `R = A mod B`.
///
/// Panics if either input is the zero polynomial.
pub fn resultant(a: &Polynomial, b: &Polynomial) -> Rational {
    let da = a.degree().expect("resultant of the zero polynomial");
    let db = b.degree().expect("resultant of the zero polynomial");
    if db == 0 {
        return num_traits::pow(b.coeffs()[0].clone(), da);
    }
    if da == 0 {
        return num_traits::pow(a.coeffs()[0].clone(), db);
    }
    let r = a.rem(b);
    let Some(dr) = r.degree() else {
        return Rational::zero();
    };
    let mut factor = num_traits::pow(b.leading_coefficient().unwrap().clone(), da - dr);
    if da * db % 2 == 1 {
        factor = -factor;
    }
    factor * resultant(b, &r)
}

/// `(-1)^(n(n-1)/2) res(p, p') / lc(p)`.
pub fn discriminant(p: &Polynomial) -> Rational {
    let n = p.degree().expect("discriminant of the zero polynomial");
    if n == 0 {
        return Rational::one();
    }
    let mut d = resultant(p, &p.derivative()) / p.leading_coefficient().unwrap();
    if (n * (n - 1) / 2) % 2 == 1 {
        d = -d;
    }
    d
}
