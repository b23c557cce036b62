//! Complete root classification of the depressed quintic
//! `x^5 + p x^3 + q x^2 + r x + s` from the discrimination system
//! `D2..D5, E2, F2`.
//!
//! `D4` and `D5` are taken from the principal minors of the discrimination
//! matrix; the expanded formulas are evaluated alongside and any
//! disagreement is logged. The `E2 = 0` branch of the table is decided from
//! the structure of `gcd(f, f')`.

use log::{debug, warn};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::Polynomial;
use crate::quintic::{depress, DepressedQuintic, MonicQuintic};
use crate::rational::{int, Rational, Sign};

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &pv;
            let (top, bottom) = m.split_at_mut(row);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// Discrimination matrix of a polynomial of degree `n`: `2n` rows
/// alternating shifted copies of `f` and `f'` (coefficients from the
/// leading term down).
pub fn discrimination_matrix(f: &Polynomial) -> Vec<Vec<Rational>> {
    let n = f.degree().unwrap_or(0);
    let fc: Vec<Rational> = f.coeffs().iter().rev().cloned().collect();
    let mut dc: Vec<Rational> = vec![Rational::zero()];
    dc.extend(f.derivative().coeffs().iter().rev().cloned());
    let size = 2 * n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        for src in [&fc, &dc] {
            let mut row = vec![Rational::zero(); size];
            for (j, c) in src.iter().enumerate() {
                if i + j < size {
                    row[i + j] = c.clone();
                }
            }
            rows.push(row);
        }
    }
    rows
}

/// Even-order leading principal minors `[D1, ..., Dn]` of the
/// discrimination matrix of the depressed quintic.
pub fn discriminant_oracle(d: &DepressedQuintic) -> Vec<Rational> {
    let m = discrimination_matrix(&d.to_polynomial());
    (1..=5)
        .map(|k| {
            let size = 2 * k;
            determinant(m[..size].iter().map(|row| row[..size].to_vec()).collect())
        })
        .collect()
}

/// `p^r` as printed in one term of the expanded `D5`; only meaningful when
/// `r` is a small non-negative integer.
fn literal_power(p: &Rational, r: &Rational) -> Option<Rational> {
    if !r.is_integer() {
        return None;
    }
    let e = r.to_integer().to_u32().filter(|&e| e <= 64)?;
    Some(num_traits::pow(p.clone(), e as usize))
}

/// Expanded `D4`.
pub fn literal_d4(d: &DepressedQuintic) -> Rational {
    let (p, q, r, s) = (&d.p, &d.q, &d.r, &d.s);
    let p2 = p * p;
    let p3 = &p2 * p;
    let q2 = q * q;
    int(12) * &p3 * p * r - int(4) * &p3 * &q2 + int(117) * p * r * &q2 - int(88) * r * r * &p2
        - int(40) * &p2 * q * s
        + int(125) * p * s * s
        - int(27) * &q2 * &q2
        - int(300) * q * r * s
        + int(160) * r * r * r
}

/// Expanded `D5`, evaluated term by term exactly as printed.
pub fn literal_d5(d: &DepressedQuintic) -> Option<Rational> {
    let (p, q, r, s) = (&d.p, &d.q, &d.r, &d.s);
    let pw = |x: &Rational, k: usize| num_traits::pow(x.clone(), k);
    let p_to_r = literal_power(p, r)?;
    let terms = [
        int(-1600) * q * s * pw(r, 3),
        int(-3750) * p * pw(s, 3) * q,
        int(2000) * p * pw(s, 2) * pw(r, 2),
        int(-4) * pw(p, 3) * pw(q, 2) * pw(r, 2),
        int(16) * p_to_r * pw(q, 3) * s,
        int(-900) * r * pw(s, 2) * pw(p, 3),
        int(825) * pw(p, 2) * pw(q, 2) * pw(s, 2),
        int(144) * p * pw(q, 2) * pw(r, 3),
        int(2250) * pw(q, 2) * r * pw(s, 2),
        int(16) * pw(r, 4) * pw(p, 3),
        int(108) * pw(p, 5) * pw(s, 2),
        int(-128) * pw(r, 4) * pw(p, 2),
        int(-27) * pw(q, 4) * pw(r, 2),
        int(108) * pw(q, 5) * s,
        int(256) * pw(r, 3),
        int(3125) * pw(s, 4),
        int(-72) * pw(p, 4) * r * s * q,
        int(560) * pw(p, 2) * pw(r, 2) * s * q,
        int(-630) * p * r * s * pw(q, 4),
    ];
    Some(terms.into_iter().fold(Rational::zero(), |acc, t| acc + t))
}

/// Expanded `E2`.
pub fn literal_e2(d: &DepressedQuintic) -> Rational {
    let (p, q, r, s) = (&d.p, &d.q, &d.r, &d.s);
    let pw = |x: &Rational, k: usize| num_traits::pow(x.clone(), k);
    int(160) * pw(r, 2) * pw(p, 3) + int(900) * pw(q, 2) * pw(r, 2) - int(48) * r * pw(p, 5)
        + int(60) * pw(q, 2) * pw(p, 2) * r
        + int(1500) * p * q * r * s
        + int(16) * pw(q, 2) * pw(p, 4)
        - int(1100) * q * pw(p, 3) * s
        + int(625) * pw(s, 2) * pw(p, 2)
        - int(3375) * pw(q, 3) * s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminationSystem {
    pub d2: Rational,
    pub d3: Rational,
    /// Half the fourth principal minor; equal to the expanded `D4`.
    pub d4: Rational,
    /// The fifth principal minor, i.e. the discriminant.
    pub d5: Rational,
    pub e2: Rational,
    pub f2: Rational,
    pub literal_d4: Rational,
    /// `None` when the printed expansion cannot be evaluated.
    pub literal_d5: Option<Rational>,
    /// Whether `gcd(f, f')` is a perfect square of degree 2, which is
    /// what `E2 = 0` signals on the `D5 = D4 = 0` branch.
    pub e2_vanishes: bool,
}

pub fn discrimination_system(d: &DepressedQuintic) -> DiscriminationSystem {
    let minors = discriminant_oracle(d);
    let (p, q, r) = (&d.p, &d.q, &d.r);
    let d2 = -p.clone();
    let d3 = int(40) * r * p - int(12) * p * p * p - int(45) * q * q;
    let d4 = &minors[3] / int(2);
    let d5 = minors[4].clone();
    if minors[1] != int(10) * &d2 || minors[2] != d3 {
        warn!("low-order minors disagree with D2/D3 for {d:?}");
    }
    let literal_d4 = literal_d4(d);
    if literal_d4 != d4 {
        warn!("expanded D4 = {literal_d4} but minor gives {d4}");
    }
    let literal_d5 = literal_d5(d);
    match &literal_d5 {
        Some(v) if *v != d5 => debug!("expanded D5 = {v} but minor gives {d5}"),
        None => debug!("expanded D5 not evaluable (r = {r})"),
        _ => {}
    }
    let f = d.to_polynomial();
    let g = Polynomial::gcd(&f, &f.derivative());
    let e2_vanishes = g.degree() == Some(2) && {
        let c = g.coeffs();
        &c[1] * &c[1] == int(4) * &c[0] * &c[2]
    };
    let e2 = literal_e2(d);
    if d5.is_zero() && d4.is_zero() && !d3.is_zero() && e2.is_zero() != e2_vanishes {
        warn!("expanded E2 = {e2} disagrees with gcd structure");
    }
    let f2 = int(3) * q * q - int(8) * r * p;
    DiscriminationSystem {
        d2,
        d3,
        d4,
        d5,
        e2,
        f2,
        literal_d4,
        literal_d5,
        e2_vanishes,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootClassification {
    pub case_index: u8,
    /// Real-root multiplicities, largest first.
    pub multiplicities: Vec<u32>,
    pub total_real: u32,
}

impl RootClassification {
    fn row(case_index: u8, multiplicities: &[u32]) -> RootClassification {
        RootClassification {
            case_index,
            multiplicities: multiplicities.to_vec(),
            total_real: multiplicities.iter().sum(),
        }
    }

    pub fn distinct_real(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn complex_pairs(&self) -> u32 {
        (5 - self.total_real) / 2
    }
}

/// Table lookup on an evaluated system.
pub fn classify_system(ds: &DiscriminationSystem) -> RootClassification {
    let s = |x: &Rational| Sign::of(x);
    use Sign::*;
    let row = RootClassification::row;
    match (s(&ds.d5), s(&ds.d4), s(&ds.d3), s(&ds.d2)) {
        (Positive, Positive, Positive, Positive) => row(1, &[1, 1, 1, 1, 1]),
        (Positive, ..) => row(2, &[1]),
        (Negative, ..) => row(3, &[1, 1, 1]),
        (Zero, Positive, ..) => row(4, &[2, 1, 1, 1]),
        (Zero, Negative, ..) => row(5, &[2, 1]),
        (Zero, Zero, Positive, _) if !ds.e2_vanishes => row(6, &[2, 2, 1]),
        (Zero, Zero, Positive, _) => row(7, &[3, 1, 1]),
        (Zero, Zero, Negative, _) if !ds.e2_vanishes => row(8, &[1]),
        (Zero, Zero, Negative, _) => row(9, &[3]),
        (Zero, Zero, Zero, Positive | Negative) if !ds.f2.is_zero() => row(10, &[3, 2]),
        (Zero, Zero, Zero, Positive | Negative) => row(11, &[4, 1]),
        (Zero, Zero, Zero, Zero) => row(12, &[5]),
    }
}

pub fn classify(q: &MonicQuintic) -> RootClassification {
    classify_system(&discrimination_system(&depress(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn depressed_of_roots(roots: &[i64]) -> DepressedQuintic {
        let p = roots
            .iter()
            .fold(Polynomial::one(), |acc, &r| &acc * &Polynomial::linear_factor(&int(r)));
        let c = p.coeffs();
        depress(&MonicQuintic::new(c[4].clone(), c[3].clone(), c[2].clone(), c[1].clone(), c[0].clone()))
    }

    #[test]
    fn zero_system_for_x5() {
        let ds = discrimination_system(&depressed_of_roots(&[0, 0, 0, 0, 0]));
        assert!(ds.d2.is_zero() && ds.d3.is_zero() && ds.d4.is_zero() && ds.d5.is_zero());
        assert_eq!(classify_system(&ds).case_index, 12);
    }

    #[test]
    fn five_distinct_real_roots() {
        let ds = discrimination_system(&depressed_of_roots(&[1, 2, 3, 4, -10]));
        for v in [&ds.d2, &ds.d3, &ds.d4, &ds.d5] {
            assert_eq!(Sign::of(v), Sign::Positive);
        }
        assert_eq!(ds.literal_d4, ds.d4);
    }

    #[test]
    fn low_minors_match_short_formulas() {
        let d = DepressedQuintic { p: rat(-12, 5), q: rat(7, 3), r: int(-4), s: rat(1, 9) };
        let m = discriminant_oracle(&d);
        assert_eq!(m[0], int(5));
        assert_eq!(m[1], int(10) * -d.p.clone());
        assert_eq!(m[3], int(2) * literal_d4(&d));
    }

    #[test]
    fn reference_classifications() {
        let tail = |a0| MonicQuintic::new(int(1), int(-2), rat(5, 6), rat(-1, 8), a0);
        assert_eq!(classify(&tail(rat(6, 1000))).multiplicities, vec![1; 5]);
        assert_eq!(classify(&tail(int(1))).multiplicities, vec![1]);
        assert_eq!(classify(&tail(rat(1, 100))).multiplicities, vec![1, 1, 1]);
    }

    #[test]
    fn multiple_root_rows() {
        let cases: &[(&[i64], u8)] = &[
            (&[1, 1, 2, 3, -6], 4),
            (&[1, 1, 2, 2, -6], 6),
            (&[1, 1, 1, 2, -5], 7),
            (&[1, 1, 1, 2, 2], 10),
            (&[1, 1, 1, 1, -4], 11),
        ];
        for (roots, row) in cases {
            assert_eq!(classify_system(&discrimination_system(&depressed_of_roots(roots))).case_index, *row, "{roots:?}");
        }
    }

    #[test]
    fn complex_pair_rows() {
        // (x^2 + 1)^2 (x - 4)
        let f = &Polynomial::from_ints(&[1, 0, 1]).pow(2) * &Polynomial::from_ints(&[-4, 1]);
        let c = f.coeffs();
        let q = MonicQuintic::new(c[4].clone(), c[3].clone(), c[2].clone(), c[1].clone(), c[0].clone());
        assert_eq!(classify(&q).case_index, 8);
        // (x - 1)^3 (x^2 + x + 1)
        let f = &Polynomial::from_ints(&[-1, 1]).pow(3) * &Polynomial::from_ints(&[1, 1, 1]);
        let c = f.coeffs();
        let q = MonicQuintic::new(c[4].clone(), c[3].clone(), c[2].clone(), c[1].clone(), c[0].clone());
        assert_eq!(classify(&q).case_index, 9);
        // (x - 1)^2 (x^3 + 1): row 5
        let f = &Polynomial::from_ints(&[-1, 1]).pow(2) * &Polynomial::from_ints(&[1, 0, 0, 1]);
        let c = f.coeffs();
        let q = MonicQuintic::new(c[4].clone(), c[3].clone(), c[2].clone(), c[1].clone(), c[0].clone());
        assert_eq!(classify(&q).case_index, 5);
    }

    #[test]
    fn literal_power_only_for_small_integers() {
        assert_eq!(literal_power(&int(2), &int(3)), Some(int(8)));
        assert_eq!(literal_power(&int(2), &rat(1, 2)), None);
        assert_eq!(literal_power(&int(2), &int(-1)), None);
    }
}
