//! The monic quintic and its depressed form.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::Polynomial;
use crate::rational::{format_rational, parse_rational, rat, Rational};

/// `x^5 + a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonicQuintic {
    pub a4: Rational,
    pub a3: Rational,
    pub a2: Rational,
    pub a1: Rational,
    pub a0: Rational,
}

impl MonicQuintic {
    pub fn new(a4: Rational, a3: Rational, a2: Rational, a1: Rational, a0: Rational) -> Self {
        MonicQuintic { a4, a3, a2, a1, a0 }
    }

    /// Coefficients in the order `a4, a3, a2, a1, a0`.
    pub fn from_coeffs(c: [Rational; 5]) -> Self {
        let [a4, a3, a2, a1, a0] = c;
        MonicQuintic { a4, a3, a2, a1, a0 }
    }

    /// Parses five tokens `a4 a3 a2 a1 a0`.
    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        if tokens.len() != 5 {
            return Err(crate::Error::InvalidRequest(format!(
                "expected 5 coefficients a4 a3 a2 a1 a0, got {}",
                tokens.len()
            )));
        }
        let mut v = Vec::with_capacity(5);
        for t in tokens {
            v.push(parse_rational(t.as_ref())?);
        }
        Ok(Self::from_coeffs(v.try_into().unwrap()))
    }

    pub fn coeffs(&self) -> [&Rational; 5] {
        [&self.a4, &self.a3, &self.a2, &self.a1, &self.a0]
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(vec![
            self.a0.clone(),
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
            Rational::one(),
        ])
    }

    /// Same quintic with a different free term.
    pub fn with_a0(&self, a0: Rational) -> Self {
        MonicQuintic { a0, ..self.clone() }
    }

    /// The member of the free-term family passing through the origin.
    pub fn separatrix(&self) -> Self {
        self.with_a0(Rational::zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.to_polynomial().eval(x)
    }
}

impl fmt::Display for MonicQuintic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// `x^5 + p x^3 + q x^2 + r x + s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DepressedQuintic {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
    pub s: Rational,
}

impl DepressedQuintic {
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(vec![
            self.s.clone(),
            self.r.clone(),
            self.q.clone(),
            self.p.clone(),
            Rational::zero(),
            Rational::one(),
        ])
    }
}

/// Removes the quartic term with `x -> x - a4/5`, so that
/// `q(x) = depressed(x + a4/5)`.
pub fn depress(q: &MonicQuintic) -> DepressedQuintic {
    let a4 = &q.a4;
    let a4_2 = a4 * a4;
    let a4_3 = &a4_2 * a4;
    let a4_4 = &a4_3 * a4;
    let a4_5 = &a4_4 * a4;
    let p = rat(-2, 5) * &a4_2 + &q.a3;
    let qq = rat(4, 25) * &a4_3 - rat(3, 5) * &q.a3 * a4 + &q.a2;
    let r = rat(-3, 125) * &a4_4 + rat(3, 25) * &q.a3 * &a4_2 - rat(2, 5) * &q.a2 * a4 + &q.a1;
    let s = rat(4, 3125) * &a4_5 - rat(1, 125) * &q.a3 * &a4_3 + rat(1, 25) * &q.a2 * &a4_2
        - rat(1, 5) * &q.a1 * a4
        + &q.a0;
    DepressedQuintic { p, q: qq, r, s }
}

/// Exact coefficients carried as strings, for the JSON documents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuinticDoc {
    pub a4: String,
    pub a3: String,
    pub a2: String,
    pub a1: String,
    pub a0: String,
    pub polynomial: String,
}

impl From<&MonicQuintic> for QuinticDoc {
    fn from(q: &MonicQuintic) -> Self {
        QuinticDoc {
            a4: format_rational(&q.a4),
            a3: format_rational(&q.a3),
            a2: format_rational(&q.a2),
            a1: format_rational(&q.a1),
            a0: format_rational(&q.a0),
            polynomial: q.to_string(),
        }
    }
}
