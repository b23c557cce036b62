//! Landmarks of the split `x^3 q1(x) = q2(x)` that need nothing beyond
//! quadratic equations: resolvent roots, stationary and inflection points of
//! the sub-quintic `x^3 q1(x)`, the vertex of the parabola, and the third
//! resolvent band for `a2`.

use std::fmt;

use log::error;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number::Surd;
use crate::poly::Polynomial;
use crate::quintic::MonicQuintic;
use crate::rational::{int, rat, Rational, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootStatus {
    TwoReal,
    DoubleReal,
    Complex,
    /// Leading coefficient vanished; the single root sits in `larger`.
    Linear,
    /// Both leading coefficients vanished.
    Degenerate,
}

/// Roots of a quadratic, larger first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRoots {
    pub status: RootStatus,
    pub larger: Option<Surd>,
    pub smaller: Option<Surd>,
}

impl QuadraticRoots {
    /// Real roots of `a x^2 + b x + c`.
    pub fn solve(a: &Rational, b: &Rational, c: &Rational) -> QuadraticRoots {
        if a.is_zero() {
            if b.is_zero() {
                return QuadraticRoots {
                    status: RootStatus::Degenerate,
                    larger: None,
                    smaller: None,
                };
            }
            return QuadraticRoots {
                status: RootStatus::Linear,
                larger: Some(Surd::from_rational(-c / b)),
                smaller: None,
            };
        }
        let disc = b * b - int(4) * a * c;
        let two_a = int(2) * a;
        let centre = -b / &two_a;
        match Sign::of(&disc) {
            Sign::Negative => QuadraticRoots {
                status: RootStatus::Complex,
                larger: None,
                smaller: None,
            },
            Sign::Zero => QuadraticRoots {
                status: RootStatus::DoubleReal,
                larger: Some(Surd::from_rational(centre.clone())),
                smaller: Some(Surd::from_rational(centre)),
            },
            Sign::Positive => {
                let half = two_a.recip().abs();
                QuadraticRoots {
                    status: RootStatus::TwoReal,
                    larger: Some(Surd::new(centre.clone(), half.clone(), disc.clone())),
                    smaller: Some(Surd::new(centre, -half, disc)),
                }
            }
        }
    }

    pub fn is_real(&self) -> bool {
        matches!(self.status, RootStatus::TwoReal | RootStatus::DoubleReal)
    }

    /// Real roots, larger first, without repeating a double root.
    pub fn distinct(&self) -> Vec<&Surd> {
        match self.status {
            RootStatus::TwoReal => vec![self.larger.as_ref().unwrap(), self.smaller.as_ref().unwrap()],
            RootStatus::DoubleReal | RootStatus::Linear => vec![self.larger.as_ref().unwrap()],
            _ => vec![],
        }
    }
}

/// `phi_{1,2}`: roots of `x^2 + a4 x + a3`.
pub fn q1_roots(a4: &Rational, a3: &Rational) -> QuadraticRoots {
    QuadraticRoots::solve(&Rational::one(), a4, a3)
}

/// `psi_{1,2}`: roots of `a2 x^2 + a1 x + a0`.
pub fn q2_roots(a2: &Rational, a1: &Rational, a0: &Rational) -> QuadraticRoots {
    QuadraticRoots::solve(a2, a1, a0)
}

/// `x^3 q1(x)`.
pub fn subquintic(a4: &Rational, a3: &Rational) -> Polynomial {
    let z = Rational::zero();
    Polynomial::new(vec![z.clone(), z.clone(), z, a3.clone(), a4.clone(), Rational::one()])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubquinticStationary {
    /// `chi_{1,2}`, the nonzero stationary points of `x^3 q1(x)`.
    pub chi: QuadraticRoots,
    /// Value at `chi_1` (local minimum when the two are distinct).
    pub f1: Option<Surd>,
    /// Value at `chi_2` (local maximum when the two are distinct).
    pub f2: Option<Surd>,
}

/// Closed form `(1/3125)(-2a4 ± √D)^3 (-2a4^2 + 10a3 ± a4√D)`, `D = 4a4^2 - 15a3`.
/// `upper` selects the `+` branch. `None` when `D < 0`.
pub fn critical_value_closed_form(a4: &Rational, a3: &Rational, upper: bool) -> Option<Surd> {
    let d = int(4) * a4 * a4 - int(15) * a3;
    if d.is_negative() {
        return None;
    }
    let sgn = if upper { int(1) } else { int(-1) };
    let base = Surd::new(int(-2) * a4, sgn.clone(), d.clone());
    let tail = Surd::new(int(-2) * a4 * a4 + int(10) * a3, sgn * a4, d);
    let cube = base.mul_same_field(&base)?.mul_same_field(&base)?;
    Some(cube.mul_same_field(&tail)?.scale(&rat(1, 3125)))
}

/// Stationary points of `x^3 q1(x)` other than the saddle at zero, and the
/// critical values there. The roots of `5x^2 + 4a4 x + 3a3`.
pub fn subquintic_stationary(a4: &Rational, a3: &Rational) -> SubquinticStationary {
    let chi = QuadraticRoots::solve(&int(5), &(int(4) * a4), &(int(3) * a3));
    let sub = subquintic(a4, a3);
    let value = |x: &Option<Surd>, upper: bool| {
        let x = x.as_ref()?;
        let direct = x.eval(&sub);
        let closed = critical_value_closed_form(a4, a3, upper)?;
        if closed != direct {
            error!("critical value mismatch at chi = {x}: closed form {closed}, direct {direct}");
        }
        Some(direct)
    };
    let f1 = value(&chi.larger, true);
    let f2 = value(&chi.smaller, false);
    SubquinticStationary { chi, f1, f2 }
}

/// `sigma_{1,2}`: the nonzero inflection points of `x^3 q1(x)`, roots of
/// `10x^2 + 6a4 x + 3a3`.
pub fn subquintic_inflections(a4: &Rational, a3: &Rational) -> QuadraticRoots {
    QuadraticRoots::solve(&int(10), &(int(6) * a4), &(int(3) * a3))
}

/// Vertex `(omega, g)` of the parabola `-a2 x^2 - a1 x - a0`.
pub fn parabola_vertex(a2: &Rational, a1: &Rational, a0: &Rational) -> Result<(Rational, Rational)> {
    if a2.is_zero() {
        return Err(Error::DegenerateParabola);
    }
    let omega = -a1 / (int(2) * a2);
    let g = a1 * a1 / (int(4) * a2) - a0;
    Ok((omega, g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BandVerdict {
    /// `c2 <= a2 <= c1`: 1, 3, or 5 real roots possible.
    Inside,
    /// `a2` outside `[c2, c1]`: 1 or 3 real roots.
    Outside,
    /// `c1,2` complex: 1 or 3 real roots.
    BandEmpty,
}

impl BandVerdict {
    /// Whether five real roots remain possible.
    pub fn allows_five(self) -> bool {
        self == BandVerdict::Inside
    }
}

impl fmt::Display for BandVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Roots of the third resolvent quadratic, as a function of `a3, a4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThirdResolvent {
    pub c0: Rational,
    /// `2a4^2 - 5a3`; the band is real iff this is non-negative.
    pub e: Rational,
    pub c1: Option<Surd>,
    pub c2: Option<Surd>,
}

impl ThirdResolvent {
    pub fn verdict(&self, a2: &Rational) -> BandVerdict {
        match (&self.c1, &self.c2) {
            (Some(c1), Some(c2)) => {
                if c2.compare_rational(a2).is_le() && c1.compare_rational(a2).is_ge() {
                    BandVerdict::Inside
                } else {
                    BandVerdict::Outside
                }
            }
            _ => BandVerdict::BandEmpty,
        }
    }
}

/// `c_{1,2} = c0 ± (√2/25) √((2a4^2 - 5a3)^3)` with
/// `c0 = (3/5) a4 a3 - (4/25) a4^3`.
pub fn third_resolvent(a3: &Rational, a4: &Rational) -> ThirdResolvent {
    let c0 = rat(3, 5) * a4 * a3 - rat(4, 25) * a4 * a4 * a4;
    let e = int(2) * a4 * a4 - int(5) * a3;
    let (c1, c2) = if e.is_negative() {
        (None, None)
    } else {
        // (√2/25) √(e^3) = (e/25) √(2e)
        let k = &e / int(25);
        (
            Some(Surd::new(c0.clone(), k.clone(), int(2) * &e)),
            Some(Surd::new(c0.clone(), -k, int(2) * &e)),
        )
    };
    ThirdResolvent { c0, e, c1, c2 }
}

/// `Q'(x) / 5 = x^4 + a x^3 + b x^2 + c x + d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryQuartic {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl AuxiliaryQuartic {
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(vec![
            self.d.clone(),
            self.c.clone(),
            self.b.clone(),
            self.a.clone(),
            Rational::one(),
        ])
    }
}

pub fn auxiliary_quartic(q: &MonicQuintic) -> AuxiliaryQuartic {
    AuxiliaryQuartic {
        a: rat(4, 5) * &q.a4,
        b: rat(3, 5) * &q.a3,
        c: rat(2, 5) * &q.a2,
        d: rat(1, 5) * &q.a1,
    }
}

/// `x^3 + (3a4/5) x^2 + (3a3/10) x + a2/10`, proportional to `Q''`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryCubic {
    pub b2: Rational,
    pub b1: Rational,
    pub b0: Rational,
    pub delta3: Rational,
}

impl AuxiliaryCubic {
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(vec![self.b0.clone(), self.b1.clone(), self.b2.clone(), Rational::one()])
    }
}

/// The discriminant of the first auxiliary cubic as a quadratic in `a2`.
pub fn delta3(a4: &Rational, a3: &Rational, a2: &Rational) -> Rational {
    rat(-1728, 25) * a2 * a2 - rat(10368, 125) * a4 * (rat(4, 15) * a4 * a4 - a3) * a2
        + rat(3456, 125) * a3 * a3 * (rat(3, 10) * a4 * a4 - a3)
}

pub fn auxiliary_cubic(q: &MonicQuintic) -> AuxiliaryCubic {
    AuxiliaryCubic {
        b2: rat(3, 5) * &q.a4,
        b1: rat(3, 10) * &q.a3,
        b0: rat(1, 10) * &q.a2,
        delta3: delta3(&q.a4, &q.a3, &q.a2),
    }
}

/// Everything above for one quintic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolventSet {
    pub phi: QuadraticRoots,
    pub psi: QuadraticRoots,
    pub chi: QuadraticRoots,
    pub f1: Option<Surd>,
    pub f2: Option<Surd>,
    pub sigma: QuadraticRoots,
    pub omega: Option<Rational>,
    pub g: Option<Rational>,
    pub c1: Option<Surd>,
    pub c2: Option<Surd>,
    pub a2_in_band: BandVerdict,
}

impl ResolventSet {
    pub fn compute(q: &MonicQuintic) -> ResolventSet {
        let st = subquintic_stationary(&q.a4, &q.a3);
        let vertex = parabola_vertex(&q.a2, &q.a1, &q.a0).ok();
        let third = third_resolvent(&q.a3, &q.a4);
        ResolventSet {
            phi: q1_roots(&q.a4, &q.a3),
            psi: q2_roots(&q.a2, &q.a1, &q.a0),
            chi: st.chi,
            f1: st.f1,
            f2: st.f2,
            sigma: subquintic_inflections(&q.a4, &q.a3),
            omega: vertex.as_ref().map(|v| v.0.clone()),
            g: vertex.map(|v| v.1),
            a2_in_band: third.verdict(&q.a2),
            c1: third.c1,
            c2: third.c2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::RealPoint;

    fn close(x: &Surd, v: f64, tol: f64) {
        assert!((x.to_f64() - v).abs() <= tol, "{} vs {v}", x.to_f64());
    }

    #[test]
    fn phi_for_reference_tail() {
        let r = q1_roots(&int(1), &int(-2));
        assert_eq!(r.larger.unwrap(), Surd::from_rational(int(1)));
        assert_eq!(r.smaller.unwrap(), Surd::from_rational(int(-2)));
        assert_eq!(q1_roots(&int(0), &int(0)).status, RootStatus::DoubleReal);
        assert_eq!(q1_roots(&int(0), &int(1)).status, RootStatus::Complex);
    }

    #[test]
    fn psi_cases() {
        let r = q2_roots(&rat(5, 6), &rat(-5, 48), &rat(1, 10000));
        close(r.larger.as_ref().unwrap(), 0.12, 0.005);
        close(r.smaller.as_ref().unwrap(), 0.0010, 0.00005);
        let r = q2_roots(&int(3), &rat(-1, 8), &int(-13));
        close(r.larger.as_ref().unwrap(), 2.10, 0.005);
        close(r.smaller.as_ref().unwrap(), -2.06, 0.005);
        let r = q2_roots(&int(0), &int(2), &int(-4));
        assert_eq!(r.status, RootStatus::Linear);
        assert_eq!(r.larger.unwrap(), Surd::from_rational(int(2)));
        assert_eq!(q2_roots(&int(0), &int(0), &int(3)).status, RootStatus::Degenerate);
    }

    #[test]
    fn psi_ordering_with_negative_leading_coefficient() {
        let r = q2_roots(&int(-1), &int(0), &int(4));
        assert_eq!(r.larger.unwrap(), Surd::from_rational(int(2)));
        assert_eq!(r.smaller.unwrap(), Surd::from_rational(int(-2)));
    }

    #[test]
    fn critical_values_of_reference_subquintic() {
        let st = subquintic_stationary(&int(1), &int(-2));
        close(st.chi.larger.as_ref().unwrap(), 0.766, 0.001);
        close(st.chi.smaller.as_ref().unwrap(), -1.566, 0.001);
        close(st.f1.as_ref().unwrap(), -0.29, 0.005);
        // printed as 4.27; the value is 4.2768
        close(st.f2.as_ref().unwrap(), 4.2768, 0.0001);
        assert_eq!(critical_value_closed_form(&int(1), &int(-2), true), st.f1);
        assert_eq!(critical_value_closed_form(&int(1), &int(-2), false), st.f2);
    }

    #[test]
    fn saddle_only() {
        let st = subquintic_stationary(&int(0), &int(0));
        assert_eq!(st.chi.status, RootStatus::DoubleReal);
        assert_eq!(st.f1, Some(Surd::zero()));
        assert_eq!(st.f2, Some(Surd::zero()));
    }

    #[test]
    fn inflections_are_roots_of_second_derivative() {
        let s = subquintic_inflections(&int(1), &int(-2));
        let dd = subquintic(&int(1), &int(-2)).derivative().derivative();
        for x in s.distinct() {
            assert_eq!(x.sign_of(&dd), Sign::Zero);
        }
        let s = subquintic_inflections(&int(1), &rat(29, 100));
        assert!(s.distinct().iter().all(|x| x.sign() == Sign::Negative));
    }

    #[test]
    fn vertex_values() {
        let (_, g) = parabola_vertex(&rat(5, 6), &rat(-1, 8), &int(1)).unwrap();
        assert!((crate::rational::to_f64(&g) + 0.9953).abs() < 0.0001);
        let (_, g) = parabola_vertex(&int(3), &rat(-1, 8), &rat(1, 2)).unwrap();
        assert!((crate::rational::to_f64(&g) + 0.4987).abs() < 0.0001);
        assert_eq!(parabola_vertex(&int(1), &int(0), &int(0)).unwrap(), (int(0), int(0)));
        assert_eq!(parabola_vertex(&int(0), &int(1), &int(0)), Err(Error::DegenerateParabola));
    }

    #[test]
    fn band_for_reference_tail() {
        let t = third_resolvent(&int(-2), &int(1));
        close(t.c1.as_ref().unwrap(), 0.99, 0.005);
        close(t.c2.as_ref().unwrap(), -3.71, 0.005);
        assert_eq!(t.verdict(&rat(5, 6)), BandVerdict::Inside);
        assert_eq!(t.verdict(&int(3)), BandVerdict::Outside);
        assert_eq!(third_resolvent(&int(1), &int(0)).verdict(&int(0)), BandVerdict::BandEmpty);
    }

    #[test]
    fn delta3_vanishes_at_band_edges() {
        let t = third_resolvent(&int(-2), &int(1));
        // delta3 as a polynomial in a2
        let a4 = int(1);
        let a3 = int(-2);
        let p = Polynomial::new(vec![
            delta3(&a4, &a3, &int(0)),
            rat(-10368, 125) * &a4 * (rat(4, 15) * &a4 * &a4 - &a3),
            rat(-1728, 25),
        ]);
        assert_eq!(t.c1.unwrap().sign_of(&p), Sign::Zero);
        assert_eq!(t.c2.unwrap().sign_of(&p), Sign::Zero);
        assert_eq!(delta3(&int(0), &int(0), &int(1)), rat(-1728, 25));
    }

    #[test]
    fn auxiliary_quartic_of_reference() {
        let q = MonicQuintic::new(int(1), int(-2), rat(5, 6), rat(-1, 8), int(1));
        let aq = auxiliary_quartic(&q).to_polynomial();
        assert_eq!(
            aq,
            Polynomial::new(vec![rat(-1, 40), rat(1, 3), rat(-6, 5), rat(4, 5), int(1)])
        );
        assert_eq!(q.to_polynomial().derivative(), aq.scale(&int(5)));
        assert!(auxiliary_cubic(&q).delta3.is_positive());
    }
}
