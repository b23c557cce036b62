//! Command-line front end.
//!
//! Exit status: 0 on success, 2 when the request cannot be parsed, 3 when an
//! internal check fails (including an oracle disagreement in `verify`).

pub mod json;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::debug;

use crate::bounds::root_bounds;
use crate::classification::classify;
use crate::error::{Error, Result};
use crate::localization::{cluster_intervals, isolate_full, locate_roots, sweep_free_term, verify_report, IntervalReport, Mode};
use crate::quintic::{MonicQuintic, QuinticDoc};
use crate::rational::{format_rational, int, parse_rational, pow10_neg, to_f64, Rational};
use crate::resolvents::{subquintic, ResolventSet};

use json::{CheckDoc, ClassificationDoc, IntervalDoc, LocateDoc, RootDoc, SweepRowDoc};

pub const PRECISION_ENV: &str = "QUINTIC_LOCUS_PRECISION";

#[derive(Parser, Debug)]
#[command(name = "quintic-locus", version, about = "Localize the real roots of a monic quintic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Real-root multiplicities from the discrimination system.
    Classify {
        #[command(flatten)]
        quintic: QuinticArgs,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Isolation and cluster intervals.
    Locate(LocateArgs),
    /// Root count against the free term.
    Sweep(SweepArgs),
    /// Locate, then check every claim with the Sturm oracle.
    Verify(LocateArgs),
    /// Samples of x^3 q1(x) and q2(x) between the root bounds, as CSV.
    PlotData {
        #[command(flatten)]
        quintic: QuinticArgs,
        #[arg(long, default_value_t = 200)]
        samples: u32,
    },
}

#[derive(Args, Debug)]
pub struct QuinticArgs {
    /// a4 a3 a2 a1 a0 as integers, fractions or decimals.
    #[arg(long, num_args = 5, value_names = ["A4", "A3", "A2", "A1", "A0"], allow_hyphen_values = true, required = true)]
    pub coeffs: Vec<String>,
}

#[derive(Args, Debug)]
pub struct LocateArgs {
    #[command(flatten)]
    pub quintic: QuinticArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::QuadraticOnly)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Refinement width for irrational endpoints and oracle roots.
    #[arg(long, allow_hyphen_values = true)]
    pub width: Option<String>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// a4 a3 a2 a1.
    #[arg(long, num_args = 4, value_names = ["A4", "A3", "A2", "A1"], allow_hyphen_values = true, required = true)]
    pub tail: Vec<String>,
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], allow_hyphen_values = true, required = true)]
    pub a0: Vec<String>,
    #[arg(long, default_value_t = 100)]
    pub steps: u32,
    #[arg(long, value_enum, default_value_t = ModeArg::QuadraticOnly)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Output::Csv)]
    pub output: Output,
    #[arg(long, allow_hyphen_values = true)]
    pub width: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    QuadraticOnly,
    Full,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::QuadraticOnly => Mode::QuadraticOnly,
            ModeArg::Full => Mode::Full,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
    Csv,
}

/// Parses the arguments, runs the command and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .target(env_logger::Target::Stderr)
        .try_init();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    execute(args, &mut out)
}

/// Like [`main_with_args`], writing the document to `out`.
pub fn execute<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidRequest(_) | Error::DegenerateInterval { .. } => 2,
        _ => 3,
    }
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::InvalidRequest(format!("cannot write output: {e}"))
}

/// Width from the flag, else the environment, else `1e-12`.
pub fn refinement_width(flag: Option<&str>) -> Result<Rational> {
    let env = std::env::var(PRECISION_ENV).ok();
    let w = match flag.or(env.as_deref()) {
        Some(t) => parse_rational(t)?,
        None => return Ok(pow10_neg(12)),
    };
    if w <= int(0) {
        return Err(Error::InvalidRequest(format!("width must be positive, got {}", format_rational(&w))));
    }
    Ok(w)
}

pub fn run<W: Write>(command: &Command, out: &mut W) -> Result<i32> {
    match command {
        Command::Classify { quintic, output } => {
            let q = MonicQuintic::parse(&quintic.coeffs)?;
            let doc = ClassificationDoc::new(&q, classify(&q));
            match output {
                Output::Json => write_json(out, &doc)?,
                _ => {
                    let c = &doc.classification;
                    writeln!(out, "quintic: {q}").map_err(io_err)?;
                    writeln!(out, "case: {}", c.case_index).map_err(io_err)?;
                    writeln!(out, "real multiplicities: {:?}", c.multiplicities).map_err(io_err)?;
                    writeln!(out, "real roots: {} ({} distinct), complex pairs: {}", c.total_real, c.distinct_real(), doc.complex_pairs)
                        .map_err(io_err)?;
                }
            }
            Ok(0)
        }
        Command::Locate(args) => {
            let (q, width) = parse_locate(args)?;
            let (doc, _) = locate(&q, args.mode.into(), &width, false)?;
            emit_locate(out, &doc, args.output)?;
            Ok(0)
        }
        Command::Verify(args) => {
            let (q, width) = parse_locate(args)?;
            let (doc, ok) = locate(&q, args.mode.into(), &width, true)?;
            emit_locate(out, &doc, args.output)?;
            Ok(if ok { 0 } else { 3 })
        }
        Command::Sweep(args) => sweep(args, out).map(|_| 0),
        Command::PlotData { quintic, samples } => {
            let q = MonicQuintic::parse(&quintic.coeffs)?;
            plot_data(&q, *samples, out)?;
            Ok(0)
        }
    }
}

fn parse_locate(args: &LocateArgs) -> Result<(MonicQuintic, Rational)> {
    let q = MonicQuintic::parse(&args.quintic.coeffs)?;
    let width = refinement_width(args.width.as_deref())?;
    Ok((q, width))
}

fn report_for(q: &MonicQuintic, mode: Mode, width: &Rational) -> Result<IntervalReport> {
    match mode {
        Mode::QuadraticOnly => Ok(cluster_intervals(q)),
        Mode::Full => isolate_full(q, width),
    }
}

/// The locate document; with `check`, oracle verdicts and refined roots are
/// attached and the flag says whether everything agreed.
pub fn locate(q: &MonicQuintic, mode: Mode, width: &Rational, check: bool) -> Result<(LocateDoc, bool)> {
    let report = report_for(q, mode, width)?;
    let mut doc = LocateDoc {
        quintic: QuinticDoc::from(q),
        mode,
        bounds: (&root_bounds(q)).into(),
        resolvents: (&ResolventSet::compute(q)).into(),
        classification: ClassificationDoc::new(q, classify(q)),
        intervals: report.intervals.iter().map(IntervalDoc::from).collect(),
        checks: None,
        roots: None,
    };
    let mut ok = true;
    if check {
        let checks: Vec<CheckDoc> = verify_report(q, &report)
            .into_iter()
            .map(|c| CheckDoc {
                interval: c.index,
                claimed: report.intervals[c.index].count.clone(),
                oracle_count: c.oracle_count,
                pass: c.ok,
            })
            .collect();
        let roots: Vec<RootDoc> = locate_roots(q, &report, width)
            .iter()
            .map(|(r, i)| RootDoc::new(r, *i))
            .collect();
        ok = checks.iter().all(|c| c.pass) && roots.iter().all(|r| r.interval.is_some());
        debug!("verify: {} claims, {} roots, ok = {ok}", checks.len(), roots.len());
        doc.checks = Some(checks);
        doc.roots = Some(roots);
    }
    Ok((doc, ok))
}

fn write_json<W: Write, T: serde::Serialize>(out: &mut W, doc: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, doc).map_err(io_err)?;
    writeln!(out).map_err(io_err)
}

fn emit_locate<W: Write>(out: &mut W, doc: &LocateDoc, output: Output) -> Result<()> {
    if output == Output::Json {
        return write_json(out, doc);
    }
    let report = doc.report()?;
    let c = &doc.classification.classification;
    writeln!(out, "quintic: {}", doc.quintic.polynomial).map_err(io_err)?;
    writeln!(out, "mode: {}", doc.mode).map_err(io_err)?;
    writeln!(out, "classification: case {}, real multiplicities {:?}", c.case_index, c.multiplicities).map_err(io_err)?;
    writeln!(out, "bounds: [{}, {}]", doc.bounds.lower, doc.bounds.upper).map_err(io_err)?;
    writeln!(out, "band: {}", doc.resolvents.band).map_err(io_err)?;
    for (i, claim) in report.intervals.iter().enumerate() {
        let mut line = format!("{claim}  {}..{}", claim.left.tag, claim.right.tag);
        if let Some(check) = doc.checks.as_ref().map(|v| &v[i]) {
            let verdict = if check.pass { "PASS" } else { "FAIL" };
            line.push_str(&format!("  oracle {} {verdict}", check.oracle_count));
        }
        writeln!(out, "{line}").map_err(io_err)?;
    }
    if let Some(roots) = &doc.roots {
        for r in roots {
            let home = r.interval.map_or("none".to_string(), |i| i.to_string());
            writeln!(out, "root {:.9} multiplicity {} interval {home}", r.decimal, r.multiplicity).map_err(io_err)?;
        }
    }
    Ok(())
}

fn parse_all(tokens: &[String]) -> Result<Vec<Rational>> {
    tokens.iter().map(|t| parse_rational(t).map_err(Error::from)).collect()
}

fn sweep<W: Write>(args: &SweepArgs, out: &mut W) -> Result<()> {
    let tail: [Rational; 4] = parse_all(&args.tail)?.try_into().unwrap();
    let range = parse_all(&args.a0)?;
    if range[0] >= range[1] {
        return Err(Error::InvalidRequest(format!(
            "sweep needs a0 MIN < MAX, got {} and {}",
            args.a0[0], args.a0[1]
        )));
    }
    let width = refinement_width(args.width.as_deref())?;
    let rows = sweep_free_term(&tail, &range[0], &range[1], args.steps, args.mode.into(), &width)?;
    let joined = |r: &crate::localization::SweepRow| {
        r.report.as_ref().map_or(String::new(), |rep| {
            rep.intervals.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(";")
        })
    };
    match args.output {
        Output::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["a0", "count", "intervals"]).map_err(io_err)?;
            for r in &rows {
                w.write_record([r.a0.exact(), r.count.to_string(), joined(r)]).map_err(io_err)?;
            }
            w.flush().map_err(io_err)?;
        }
        Output::Json => {
            let docs: Vec<SweepRowDoc> = rows
                .iter()
                .map(|r| SweepRowDoc {
                    a0: r.a0.exact(),
                    decimal: r.a0.approx(),
                    count: r.count,
                    intervals: r.report.as_ref().map_or(Vec::new(), |rep| rep.intervals.iter().map(IntervalDoc::from).collect()),
                })
                .collect();
            write_json(out, &docs)?;
        }
        Output::Text => {
            for r in &rows {
                writeln!(out, "{:>16.9}  {}  {}", r.a0.approx(), r.count, joined(r)).map_err(io_err)?;
            }
        }
    }
    Ok(())
}

fn plot_data<W: Write>(q: &MonicQuintic, samples: u32, out: &mut W) -> Result<()> {
    if samples == 0 {
        return Err(Error::InvalidRequest("plot-data needs at least one sample".into()));
    }
    let b = root_bounds(q);
    let left = subquintic(&q.a4, &q.a3);
    let step = (&b.upper - &b.lower) / int(samples as i64);
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(["x", "x3q1", "q2"]).map_err(io_err)?;
    for k in 0..=samples {
        let x = &b.lower + &step * int(k as i64);
        let parabola = -(&q.a2 * &x * &x) - &q.a1 * &x - &q.a0;
        w.write_record([to_f64(&x), to_f64(&left.eval(&x)), to_f64(&parabola)].map(|v| v.to_string()))
            .map_err(io_err)?;
    }
    w.flush().map_err(io_err)?;
    Ok(())
}
