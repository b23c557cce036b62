//! Real-root bounds closing the two unbounded cells of the lattice.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::Polynomial;
use crate::quintic::MonicQuintic;
use crate::rational::{ceil_kth_root, pow10_neg, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundMethod {
    NegSum,
    Kurosh,
    /// Both methods gave the same value, or the two sides used different ones.
    Best,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBounds {
    pub lower: Rational,
    pub upper: Rational,
    pub lower_method: BoundMethod,
    pub upper_method: BoundMethod,
    pub method_used: BoundMethod,
}

/// Non-leading coefficients of `p / lc(p)`, from the highest power down.
fn normalized_tail(p: &Polynomial) -> Vec<Rational> {
    let m = p.monic();
    let mut c: Vec<Rational> = m.coeffs().iter().rev().skip(1).cloned().collect();
    c.shrink_to_fit();
    c
}

/// `max(1, sum of |negative coefficients|)` of `p` made monic.
///
/// Panics unless the leading coefficient is positive.
pub fn upper_bound_negsum(p: &Polynomial) -> Rational {
    assert!(p.leading_coefficient().is_some_and(|c| c.is_positive()));
    let sum = normalized_tail(p)
        .iter()
        .filter(|c| c.is_negative())
        .fold(Rational::zero(), |acc, c| acc - c);
    sum.max(Rational::one())
}

/// `1 + B^(1/k)`: `k` is the distance from the leading term to the first
/// negative coefficient, `B` the largest negative coefficient in absolute
/// value. Irrational roots are rounded up to a multiple of `10^-6`. Returns
/// 1 when no coefficient is negative.
///
/// Panics unless the leading coefficient is positive.
pub fn kurosh_upper(p: &Polynomial) -> Rational {
    assert!(p.leading_coefficient().is_some_and(|c| c.is_positive()));
    let tail = normalized_tail(p);
    let Some(first) = tail.iter().position(|c| c.is_negative()) else {
        return Rational::one();
    };
    let k = first as u32 + 1;
    let b = tail
        .iter()
        .filter(|c| c.is_negative())
        .map(|c| -c)
        .max()
        .unwrap();
    let root = if k == 1 {
        b
    } else {
        let scale = num_traits::pow(BigInt::from(10), 6 * k as usize);
        Rational::from_integer(ceil_kth_root(&(b * Rational::from_integer(scale)), k)) * pow10_neg(6)
    };
    Rational::one() + root
}

fn best_of(p: &Polynomial) -> (Rational, BoundMethod) {
    let n = upper_bound_negsum(p);
    let k = kurosh_upper(p);
    match n.cmp(&k) {
        std::cmp::Ordering::Less => (n, BoundMethod::NegSum),
        std::cmp::Ordering::Greater => (k, BoundMethod::Kurosh),
        std::cmp::Ordering::Equal => (n, BoundMethod::Best),
    }
}

/// Upper bound from `Q`, lower bound from `Q(-x)`, each the smaller of the
/// two methods.
pub fn root_bounds(q: &MonicQuintic) -> RootBounds {
    bounds_of(&q.to_polynomial())
}

pub fn bounds_of(p: &Polynomial) -> RootBounds {
    let (upper, upper_method) = best_of(p);
    let (neg, lower_method) = best_of(&p.reflect());
    let method_used = if upper_method == lower_method {
        upper_method
    } else {
        BoundMethod::Best
    };
    RootBounds {
        lower: -neg,
        upper,
        lower_method,
        upper_method,
        method_used,
    }
}
