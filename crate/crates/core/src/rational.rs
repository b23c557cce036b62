//! Exact rational scalars, signs, and the textual rational format.
//!
//! Inputs are accepted as `n/d`, integers, or decimals (optionally with an
//! exponent); decimals are converted exactly, so `0.125` becomes `1/8`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseRationalError;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Shorthand for `n/d` with machine-sized parts.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `10^-k` exactly.
pub fn pow10_neg(k: u32) -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), k as usize))
}

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn of_int(n: &BigInt) -> Sign {
        match n.sign() {
            num_bigint::Sign::Minus => Sign::Negative,
            num_bigint::Sign::NoSign => Sign::Zero,
            num_bigint::Sign::Plus => Sign::Positive,
        }
    }

    pub fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match self.as_i8() * rhs.as_i8() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

/// Parses `n/d`, an integer, or a decimal literal into an exact rational.
pub fn parse_rational(token: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason: &str| ParseRationalError {
        token: token.to_string(),
        reason: reason.to_string(),
    };
    // Accept the typographic minus sign as well.
    let s = token.trim().replace('\u{2212}', "-");
    if s.is_empty() {
        return Err(err("empty token"));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_decimal(n.trim()).ok_or_else(|| err("bad numerator"))?;
        let d = parse_decimal(d.trim()).ok_or_else(|| err("bad denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        return Ok(n / d);
    }
    parse_decimal(&s).ok_or_else(|| err("not a rational, integer, or decimal literal"))
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (negative, body) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], Some(&body[i + 1..])),
        None => (body, None),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().ok()?;
    let mut exp: i64 = -(frac_part.len() as i64);
    if let Some(e) = exponent {
        let e: i64 = e.parse().ok()?;
        if e.abs() > 10_000 {
            return None;
        }
        exp += e;
    }
    let ten = BigInt::from(10);
    let value = if exp >= 0 {
        Rational::from_integer(numer * num_traits::pow(ten, exp as usize))
    } else {
        Rational::new(numer, num_traits::pow(ten, (-exp) as usize))
    };
    Some(if negative { -value } else { value })
}

/// `n` or `n/d`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_positive() {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    })
}

/// Exact midpoint.
pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Smallest integer `n` with `n^k >= x` for `x >= 0`.
pub fn ceil_kth_root(x: &Rational, k: u32) -> BigInt {
    assert!(k >= 1 && !x.is_negative());
    let floor = x.floor().to_integer();
    let mut n = floor.nth_root(k);
    while Rational::from_integer(num_traits::pow(n.clone(), k as usize)) < *x {
        n += 1;
    }
    n
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn exact_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}
