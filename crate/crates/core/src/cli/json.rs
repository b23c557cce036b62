//! Serialized documents. Exact values travel as strings; `decimal` is for
//! people reading the output.

use serde::{Deserialize, Serialize};

use crate::bounds::{BoundMethod, RootBounds};
use crate::classification::{discrimination_system, RootClassification};
use crate::error::{Error, Result};
use crate::localization::{CountClaim, Endpoint, EndpointTag, IntervalClaim, IntervalReport, Mode, PointValue};
use crate::number::{RealPoint, Surd};
use crate::oracle::{AlgebraicRoot, CertifiedRoot};
use crate::poly::Polynomial;
use crate::quintic::{depress, MonicQuintic, QuinticDoc};
use crate::rational::{format_rational, midpoint, parse_rational, to_f64, Rational};
use crate::resolvents::{BandVerdict, QuadraticRoots, ResolventSet, RootStatus};

/// `(p + sqrt(d)) / m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurdDoc {
    pub p: String,
    pub d: String,
    pub m: String,
}

/// Isolating interval of a root of `polynomial` (coefficients from the
/// constant term up).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnclosureDoc {
    pub polynomial: Vec<String>,
    pub lo: String,
    pub hi: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointDoc {
    pub value: String,
    pub decimal: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surd: Option<SurdDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enclosure: Option<EnclosureDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<String>,
}

impl PointDoc {
    pub fn rational(r: &Rational) -> PointDoc {
        PointDoc {
            value: format_rational(r),
            decimal: to_f64(r),
            surd: None,
            enclosure: None,
            tag: None,
            aliases: Vec::new(),
        }
    }

    pub fn surd(s: &Surd) -> PointDoc {
        let mut doc = PointDoc::rational(s.rational_part());
        doc.value = s.to_string();
        doc.decimal = s.to_f64();
        if !s.is_rational() {
            let (p, d, m) = s.to_pdm();
            doc.surd = Some(SurdDoc {
                p: format_rational(&p),
                d: format_rational(&d),
                m: format_rational(&m),
            });
        }
        doc
    }

    pub fn point(v: &PointValue) -> PointDoc {
        match v {
            PointValue::Surd(s) => PointDoc::surd(s),
            PointValue::Algebraic(a) => PointDoc {
                value: a.to_string(),
                decimal: a.approx(),
                surd: None,
                enclosure: Some(EnclosureDoc {
                    polynomial: a.defining_polynomial().coeffs().iter().map(format_rational).collect(),
                    lo: format_rational(a.lo()),
                    hi: format_rational(a.hi()),
                }),
                tag: None,
                aliases: Vec::new(),
            },
        }
    }

    pub fn endpoint(e: &Endpoint) -> PointDoc {
        let mut doc = PointDoc::point(&e.value);
        doc.tag = Some(e.tag.to_string());
        doc.aliases = e.aliases.iter().map(EndpointTag::to_string).collect();
        doc
    }

    /// The exact value back.
    pub fn to_point(&self) -> Result<PointValue> {
        if let Some(s) = &self.surd {
            return Ok(PointValue::Surd(Surd::from_pdm(
                &parse_rational(&s.p)?,
                &parse_rational(&s.d)?,
                &parse_rational(&s.m)?,
            )));
        }
        if let Some(e) = &self.enclosure {
            let coeffs = e.polynomial.iter().map(|c| parse_rational(c)).collect::<std::result::Result<Vec<_>, _>>()?;
            let root = AlgebraicRoot::new(&Polynomial::new(coeffs), parse_rational(&e.lo)?, parse_rational(&e.hi)?)?;
            return Ok(PointValue::from_algebraic(root));
        }
        Ok(PointValue::Surd(Surd::from_rational(parse_rational(&self.value)?)))
    }

    pub fn to_endpoint(&self) -> Result<Endpoint> {
        let tag = self
            .tag
            .as_deref()
            .ok_or_else(|| Error::InvalidRequest(format!("endpoint {} has no tag", self.value)))?;
        let mut e = Endpoint::new(self.to_point()?, parse_tag(tag)?);
        e.aliases = self.aliases.iter().map(|t| parse_tag(t)).collect::<Result<_>>()?;
        Ok(e)
    }
}

pub fn parse_tag(s: &str) -> Result<EndpointTag> {
    use EndpointTag::*;
    Ok(match s {
        "LowerBound" => LowerBound,
        "UpperBound" => UpperBound,
        "Zero" => Zero,
        "Phi1" => Phi1,
        "Phi2" => Phi2,
        "Psi1" => Psi1,
        "Psi2" => Psi2,
        "Chi1" => Chi1,
        "Chi2" => Chi2,
        _ => match s.strip_prefix("Xi").and_then(|i| i.parse().ok()) {
            Some(i) => Xi(i),
            None => return Err(Error::InvalidRequest(format!("unknown endpoint tag `{s}`"))),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadraticDoc {
    pub status: RootStatus,
    /// Larger first.
    pub roots: Vec<PointDoc>,
}

impl From<&QuadraticRoots> for QuadraticDoc {
    fn from(q: &QuadraticRoots) -> Self {
        QuadraticDoc {
            status: q.status,
            roots: q.larger.iter().chain(q.smaller.iter()).map(PointDoc::surd).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResolventsDoc {
    pub phi: QuadraticDoc,
    pub psi: QuadraticDoc,
    pub chi: QuadraticDoc,
    pub f1: Option<PointDoc>,
    pub f2: Option<PointDoc>,
    pub sigma: QuadraticDoc,
    pub omega: Option<PointDoc>,
    pub g: Option<PointDoc>,
    pub c1: Option<PointDoc>,
    pub c2: Option<PointDoc>,
    pub band: BandVerdict,
}

impl From<&ResolventSet> for ResolventsDoc {
    fn from(r: &ResolventSet) -> Self {
        ResolventsDoc {
            phi: (&r.phi).into(),
            psi: (&r.psi).into(),
            chi: (&r.chi).into(),
            f1: r.f1.as_ref().map(PointDoc::surd),
            f2: r.f2.as_ref().map(PointDoc::surd),
            sigma: (&r.sigma).into(),
            omega: r.omega.as_ref().map(PointDoc::rational),
            g: r.g.as_ref().map(PointDoc::rational),
            c1: r.c1.as_ref().map(PointDoc::surd),
            c2: r.c2.as_ref().map(PointDoc::surd),
            band: r.a2_in_band,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationDoc {
    #[serde(flatten)]
    pub classification: RootClassification,
    pub complex_pairs: u32,
    pub d2: String,
    pub d3: String,
    pub d4: String,
    pub d5: String,
    pub e2: String,
    pub f2: String,
}

impl ClassificationDoc {
    pub fn new(q: &MonicQuintic, c: RootClassification) -> ClassificationDoc {
        let ds = discrimination_system(&depress(q));
        ClassificationDoc {
            complex_pairs: c.complex_pairs(),
            classification: c,
            d2: format_rational(&ds.d2),
            d3: format_rational(&ds.d3),
            d4: format_rational(&ds.d4),
            d5: format_rational(&ds.d5),
            e2: format_rational(&ds.e2),
            f2: format_rational(&ds.f2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub lower: String,
    pub upper: String,
    pub lower_method: BoundMethod,
    pub upper_method: BoundMethod,
}

impl From<&RootBounds> for BoundsDoc {
    fn from(b: &RootBounds) -> Self {
        BoundsDoc {
            lower: format_rational(&b.lower),
            upper: format_rational(&b.upper),
            lower_method: b.lower_method,
            upper_method: b.upper_method,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalDoc {
    pub left: PointDoc,
    pub right: PointDoc,
    pub count: CountClaim,
}

impl From<&IntervalClaim> for IntervalDoc {
    fn from(c: &IntervalClaim) -> Self {
        IntervalDoc {
            left: PointDoc::endpoint(&c.left),
            right: PointDoc::endpoint(&c.right),
            count: c.count.clone(),
        }
    }
}

impl IntervalDoc {
    pub fn to_claim(&self) -> Result<IntervalClaim> {
        Ok(IntervalClaim {
            left: self.left.to_endpoint()?,
            right: self.right.to_endpoint()?,
            count: self.count.clone(),
        })
    }
}

/// Oracle verdict on one claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub interval: usize,
    pub claimed: CountClaim,
    pub oracle_count: u32,
    pub pass: bool,
}

/// A refined real root from the oracle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootDoc {
    pub lo: String,
    pub hi: String,
    pub decimal: f64,
    pub multiplicity: u32,
    /// Index of the claim containing the root.
    pub interval: Option<usize>,
}

impl RootDoc {
    pub fn new(r: &CertifiedRoot, interval: Option<usize>) -> RootDoc {
        RootDoc {
            lo: format_rational(&r.lo),
            hi: format_rational(&r.hi),
            decimal: to_f64(&midpoint(&r.lo, &r.hi)),
            multiplicity: r.multiplicity,
            interval,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocateDoc {
    pub quintic: QuinticDoc,
    pub mode: Mode,
    pub bounds: BoundsDoc,
    pub resolvents: ResolventsDoc,
    pub classification: ClassificationDoc,
    pub intervals: Vec<IntervalDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<RootDoc>>,
}

impl LocateDoc {
    pub fn report(&self) -> Result<IntervalReport> {
        Ok(IntervalReport {
            intervals: self.intervals.iter().map(IntervalDoc::to_claim).collect::<Result<_>>()?,
            mode: self.mode,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRowDoc {
    pub a0: String,
    pub decimal: f64,
    pub count: u32,
    pub intervals: Vec<IntervalDoc>,
}
