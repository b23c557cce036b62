use std::cmp::Ordering;

use rayon::prelude::*;

use crate::classification::classify;
use crate::error::{Error, Result};
use crate::quintic::MonicQuintic;
use crate::rational::{format_rational, int, to_f64, Rational};

use super::alpha::{alpha_levels, stationary_points, AlphaLevels};
use super::{cluster_intervals, isolate_full, IntervalReport, Mode};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepPoint {
    /// A grid sample.
    Grid(Rational),
    /// The free term equals the `alpha` level of this stationary point.
    Level { xi_index: u8, lo: Rational, hi: Rational },
}

impl SweepPoint {
    pub fn approx(&self) -> f64 {
        match self {
            SweepPoint::Grid(r) => to_f64(r),
            SweepPoint::Level { lo, hi, .. } => to_f64(&((lo + hi) / int(2))),
        }
    }

    /// The grid value, or a label with an approximation on level rows.
    pub fn exact(&self) -> String {
        match self {
            SweepPoint::Grid(r) => format_rational(r),
            SweepPoint::Level { xi_index, .. } => format!("alpha(xi{xi_index})~{:.12e}", self.approx()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub a0: SweepPoint,
    /// Real roots counted with multiplicity.
    pub count: u32,
    /// Interval claims; `None` on level rows, where the free term is irrational.
    pub report: Option<IntervalReport>,
}

/// Root-count table of `x^5 + a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0` over
/// `steps + 1` equally spaced free terms in `[a0_min, a0_max]`. In full mode
/// the `alpha` levels inside the range are added as extra rows. Rows are
/// ordered by free term; an inverted range gives an empty table.
pub fn sweep_free_term(
    tail: &[Rational; 4],
    a0_min: &Rational,
    a0_max: &Rational,
    steps: u32,
    mode: Mode,
    width: &Rational,
) -> Result<Vec<SweepRow>> {
    if steps == 0 {
        return Err(Error::InvalidRequest("sweep needs at least one step".into()));
    }
    if a0_min > a0_max {
        return Ok(Vec::new());
    }
    let [a4, a3, a2, a1] = tail.clone();
    let base = MonicQuintic::new(a4, a3, a2, a1, a0_min.clone());
    let step = (a0_max - a0_min) / int(steps as i64);
    let grid: Vec<Rational> = if step == Rational::from_integer(0.into()) {
        vec![a0_min.clone()]
    } else {
        (0..=steps).map(|k| a0_min + &step * int(k as i64)).collect()
    };

    let mut rows: Vec<SweepRow> = grid
        .par_iter()
        .map(|a0| -> Result<SweepRow> {
            let q = base.with_a0(a0.clone());
            let report = match mode {
                Mode::QuadraticOnly => cluster_intervals(&q),
                Mode::Full => isolate_full(&q, width)?,
            };
            Ok(SweepRow {
                a0: SweepPoint::Grid(a0.clone()),
                count: classify(&q).total_real,
                report: Some(report),
            })
        })
        .collect::<Result<_>>()?;

    if mode == Mode::Full {
        let levels = alpha_levels(&base, &stationary_points(&base, width));
        let mut extra = level_rows(&base, &levels, a0_min, a0_max);
        rows.append(&mut extra);
        rows.sort_by(|a, b| compare_points(&base, &levels, &a.a0, &b.a0));
    }
    Ok(rows)
}

fn level_rows(q: &MonicQuintic, levels: &AlphaLevels, lo: &Rational, hi: &Rational) -> Vec<SweepRow> {
    levels
        .levels
        .iter()
        .enumerate()
        .filter(|(_, l)| {
            l.compare_rational(q, lo) != Ordering::Less && l.compare_rational(q, hi) != Ordering::Greater
        })
        .map(|(k, l)| SweepRow {
            a0: SweepPoint::Level {
                xi_index: l.xi_index,
                lo: l.alpha_lo.clone(),
                hi: l.alpha_hi.clone(),
            },
            count: levels.count_at_level(k),
            report: None,
        })
        .collect()
}

fn compare_points(q: &MonicQuintic, levels: &AlphaLevels, a: &SweepPoint, b: &SweepPoint) -> Ordering {
    let level = |i: u8| levels.levels.iter().position(|l| l.xi_index == i).unwrap();
    match (a, b) {
        (SweepPoint::Grid(x), SweepPoint::Grid(y)) => x.cmp(y),
        (SweepPoint::Level { xi_index, .. }, SweepPoint::Grid(y)) => {
            // grid rows first on ties
            levels.levels[level(*xi_index)].compare_rational(q, y).then(Ordering::Greater)
        }
        (SweepPoint::Grid(_), SweepPoint::Level { .. }) => compare_points(q, levels, b, a).reverse(),
        (SweepPoint::Level { xi_index: i, .. }, SweepPoint::Level { xi_index: j, .. }) => level(*i).cmp(&level(*j)),
    }
}
