//! Command-line front end.
//!
//! Exit codes: 0 when every check passed (a bounded search is flagged as
//! such), 1 when a counterexample was found, 2 on usage or input errors.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

use crate::laurent::LaurentError;
use crate::monoid::{MonoidElem, MonoidError, OrderedMonoid, Window};
use crate::oracle::{self, OracleError};
use crate::outcome::CheckOutcome;
use crate::parse::{self, ExprError};
use crate::rb::{self, Decomposition, Projector, RbError};
use crate::sample;
use crate::scalar::Ring;
use crate::series::SeriesError;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Window used by `rb-check` on infinite monoids when none is given.
const DEFAULT_WINDOW: (i64, i64) = (-10, 10);

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Rb(#[from] RbError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    File { path: PathBuf, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Oracle(OracleError::Inconsistent(_)) => EXIT_COUNTEREXAMPLE,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gps-rb", version, about = "Generalized power series and Rota-Baxter projector checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sum of two series
    Add(ArithArgs),
    /// Product of two series
    Mul(ArithArgs),
    /// Check the Rota-Baxter identity for a decomposition projector
    RbCheck(RbCheckArgs),
    /// Classify cut-off projectors P_w over a range of w
    CutoffScan(CutoffScanArgs),
    /// Compare both criteria over every decomposition of a finite monoid
    TheoremVerify(TheoremArgs),
    /// Pole-part projector on random truncated Laurent series
    LaurentDemo(DemoArgs),
}

/// Inclusive integer range written `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: i64,
    pub hi: i64,
}

impl std::str::FromStr for Range {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("malformed range {s:?}, expected a..b");
        let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Range { lo, hi })
    }
}

#[derive(Debug, Args)]
pub struct ArithArgs {
    #[arg(allow_hyphen_values = true)]
    pub lhs: String,
    #[arg(allow_hyphen_values = true)]
    pub rhs: String,
    /// Z, N, Z^d:product, Z^d:lex, table:<path>, cyclic:<n>, truncated:<m>
    #[arg(long, default_value = "Z")]
    pub monoid: String,
    /// Coefficient ring: Z, Q or Z/m
    #[arg(long, default_value = "Q")]
    pub ring: Ring,
    /// Treat both operands as truncated Laurent series (allows O(e^N))
    #[arg(long)]
    pub laurent: bool,
    #[arg(long, default_value = "e")]
    pub var: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RbCheckArgs {
    #[arg(long)]
    pub monoid: String,
    /// Vocabulary name (negatives, odds, below(w), mask:0110, ..) or a JSON file {"s1": [..]}
    #[arg(long, allow_hyphen_values = true)]
    pub decomp: String,
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<Range>,
    #[arg(long, allow_hyphen_values = true, requires = "g")]
    pub f: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "f")]
    pub g: Option<String>,
    #[arg(long, default_value = "Q")]
    pub ring: Ring,
    #[arg(long, default_value = "e")]
    pub var: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CutoffScanArgs {
    #[arg(long)]
    pub monoid: String,
    #[arg(long, allow_hyphen_values = true)]
    pub w_range: Range,
    #[arg(long, allow_hyphen_values = true)]
    pub window: Range,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TheoremArgs {
    /// JSON table {"n", "neutral", "add", "leq"?}
    #[arg(long, required_unless_present = "monoid", conflicts_with = "monoid")]
    pub table: Option<PathBuf>,
    /// Any finite monoid spec, e.g. cyclic:4
    #[arg(long)]
    pub monoid: Option<String>,
    #[arg(long, default_value_t = oracle::DEFAULT_LIMIT)]
    pub limit: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    #[arg(long, default_value_t = 3)]
    pub count: usize,
    /// Overrides GPS_RB_SEED
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value = "e")]
    pub var: String,
    #[arg(long)]
    pub json: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Add(a) => arith(a, false, out),
        Command::Mul(a) => arith(a, true, out),
        Command::RbCheck(a) => rb_check(a, out),
        Command::CutoffScan(a) => cutoff_scan(a, out),
        Command::TheoremVerify(a) => theorem_verify(a, out),
        Command::LaurentDemo(a) => laurent_demo(a, out),
    }
}

fn load_monoid(spec: &str) -> Result<Arc<OrderedMonoid>, CliError> {
    Ok(Arc::new(OrderedMonoid::from_spec(spec)?))
}

fn print_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("serializable"))?;
    Ok(())
}

fn outcome_line(outcome: &CheckOutcome) -> String {
    match outcome {
        CheckOutcome::Pass => "PASS".into(),
        CheckOutcome::PassOnWindow { window } => {
            format!("PASS on window {window} only (bounded search, not a proof)")
        }
        CheckOutcome::Fail { witness } => format!("FAIL, witness {witness}"),
    }
}

fn arith(a: ArithArgs, product: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let monoid = load_monoid(&a.monoid)?;
    if a.laurent {
        if *monoid != OrderedMonoid::IntLine {
            return Err(CliError::Usage("--laurent needs --monoid Z".into()));
        }
        let f = parse::parse_laurent(&a.lhs, a.ring, &a.var)?;
        let g = parse::parse_laurent(&a.rhs, a.ring, &a.var)?;
        let r = if product { f.mul(&g)? } else { f.add(&g)? };
        if a.json {
            print_json(out, &r.to_json_value())?;
        } else {
            writeln!(out, "{}", r.render(&a.var))?;
        }
    } else {
        let f = parse::parse_series(&a.lhs, &monoid, a.ring, &a.var)?;
        let g = parse::parse_series(&a.rhs, &monoid, a.ring, &a.var)?;
        let r = if product { f.convolve(&g)? } else { f.add(&g)? };
        if a.json {
            print_json(out, &r.to_json_value())?;
        } else {
            writeln!(out, "{}", r.render(&a.var))?;
        }
    }
    Ok(EXIT_PASS)
}

fn load_decomposition(monoid: &Arc<OrderedMonoid>, text: &str) -> Result<Decomposition, CliError> {
    let path = std::path::Path::new(text);
    if text.ends_with(".json") || path.is_file() {
        let body = std::fs::read_to_string(path).map_err(|e| CliError::File {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        let value: serde_json::Value = serde_json::from_str(&body).map_err(|e| CliError::File {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        return Ok(Decomposition::from_json(Arc::clone(monoid), &value)?);
    }
    Ok(Decomposition::parse(Arc::clone(monoid), text)?)
}

fn window_for(monoid: &OrderedMonoid, range: Option<Range>) -> Window {
    match (range, monoid.as_table()) {
        (Some(r), _) => Window::range(monoid, r.lo, r.hi),
        (None, Some(t)) => Window::carrier(t),
        (None, None) => Window::range(monoid, DEFAULT_WINDOW.0, DEFAULT_WINDOW.1),
    }
}

fn rb_check(a: RbCheckArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let monoid = load_monoid(&a.monoid)?;
    let decomposition = load_decomposition(&monoid, &a.decomp)?;
    let p = Projector::Decomp(decomposition.clone());

    if let (Some(f), Some(g)) = (&a.f, &a.g) {
        let f = parse::parse_series(f, &monoid, a.ring, &a.var)?;
        let g = parse::parse_series(g, &monoid, a.ring, &a.var)?;
        let terms = rb::rb_terms(&p, &f, &g)?;
        let defect = terms.defect()?;
        if a.json {
            print_json(
                out,
                &json!({
                    "decomposition": decomposition.membership().to_string(),
                    "lhs": terms.lhs.to_json_value(),
                    "right_inner": terms.right_inner.to_json_value(),
                    "left_inner": terms.left_inner.to_json_value(),
                    "product": terms.product.to_json_value(),
                    "defect": defect.to_json_value(),
                }),
            )?;
        } else {
            let v = &a.var;
            writeln!(out, "P(f)P(g)  = {}", terms.lhs.render(v))?;
            writeln!(out, "P(f P(g)) = {}", terms.right_inner.render(v))?;
            writeln!(out, "P(P(f) g) = {}", terms.left_inner.render(v))?;
            writeln!(out, "P(fg)     = {}", terms.product.render(v))?;
            writeln!(out, "defect    = {}", defect.render(v))?;
        }
        return Ok(if defect.is_empty() { EXIT_PASS } else { EXIT_COUNTEREXAMPLE });
    }

    let window = window_for(&monoid, a.window);
    let witness = rb::indicator_scan(&p, a.ring, &window)?;
    let outcome = match &witness {
        Some(w) => CheckOutcome::fail("nonzero defect", vec![w.u.clone(), w.v.clone()]),
        None if window.covers(&monoid) => CheckOutcome::Pass,
        None => CheckOutcome::PassOnWindow {
            window: window.label().to_string(),
        },
    };
    if a.json {
        print_json(
            out,
            &json!({
                "decomposition": decomposition.membership().to_string(),
                "outcome": outcome,
                "defect": witness.as_ref().map(|w| w.defect.to_json_value()),
            }),
        )?;
    } else {
        writeln!(out, "monoid:        {monoid}")?;
        writeln!(out, "decomposition: S1 = {}", decomposition.membership())?;
        writeln!(out, "window:        {}", window.label())?;
        writeln!(out, "verdict:       {}", outcome_line(&outcome))?;
        if let Some(w) = &witness {
            writeln!(out, "defect:        {}", w.defect.render(&a.var))?;
        }
    }
    Ok(if outcome.is_fail() { EXIT_COUNTEREXAMPLE } else { EXIT_PASS })
}

fn cutoff_scan(a: CutoffScanArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let monoid = load_monoid(&a.monoid)?;
    let mut w_set: Vec<MonoidElem> = Window::range(&monoid, a.w_range.lo, a.w_range.hi).elements().to_vec();
    w_set.sort();
    let window = Window::range(&monoid, a.window.lo, a.window.hi);
    let verdicts = oracle::scan_cutoffs(&monoid, &w_set, &window)?;
    if a.json {
        print_json(
            out,
            &json!({
                "monoid": monoid.to_json_value(),
                "window": window.label(),
                "verdicts": verdicts,
            }),
        )?;
        return Ok(EXIT_PASS);
    }
    writeln!(out, "monoid {monoid}, window {}", window.label())?;
    writeln!(out, "{:<12} {:<4} {:>6} {:>6}  witness", "w", "RB", "|A_w|", "|B_w|")?;
    for v in &verdicts {
        let detail = match &v.outcome {
            CheckOutcome::Fail { witness } => witness.to_string(),
            other => outcome_line(other),
        };
        writeln!(
            out,
            "{:<12} {:<4} {:>6} {:>6}  {detail}",
            v.w.to_string(),
            if v.is_rb() { "yes" } else { "no" },
            v.a_w.len(),
            v.b_w.len(),
        )?;
    }
    let rb: Vec<String> = verdicts.iter().filter(|v| v.is_rb()).map(|v| v.w.to_string()).collect();
    writeln!(out, "RB-compatible at: {}", if rb.is_empty() { "none".into() } else { rb.join(", ") })?;
    writeln!(out, "set criterion and indicator-pair defects agree for every w")?;
    Ok(EXIT_PASS)
}

fn theorem_verify(a: TheoremArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let monoid = match (&a.table, &a.monoid) {
        (Some(path), _) => Arc::new(OrderedMonoid::load_table(path)?),
        (None, Some(spec)) => load_monoid(spec)?,
        (None, None) => return Err(CliError::Usage("one of --table or --monoid is required".into())),
    };
    let report = oracle::verify_theorem_decomposition_with(&monoid, Ring::Rational, a.limit)?;
    if a.json {
        print_json(out, &serde_json::to_value(&report).expect("serializable"))?;
    } else {
        write!(out, "{report}")?;
    }
    Ok(if report.holds() { EXIT_PASS } else { EXIT_COUNTEREXAMPLE })
}

fn laurent_demo(a: DemoArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut rng = match a.seed {
        Some(seed) => rand::SeedableRng::seed_from_u64(seed),
        None => sample::rng_from_env(0),
    };
    let ring = Ring::Rational;
    let v = &a.var;
    let mut all_zero = true;
    let mut records = Vec::new();
    for i in 0..a.count {
        // Truncating at e^3 or later keeps every product's pole part known.
        let f = sample::random_laurent(&mut rng, ring, -3..=0, 3..=6);
        let g = sample::random_laurent(&mut rng, ring, -3..=0, 3..=6);
        let terms = f.rb_terms(&g)?;
        let defect = f.rb_defect(&g)?;
        all_zero &= defect.is_zero();
        if a.json {
            let mut rec = json!({ "f": f.to_json_value(), "g": g.to_json_value() });
            for (name, t) in ["lhs", "right_inner", "left_inner", "product"].iter().zip(&terms) {
                rec[*name] = t.to_json_value();
            }
            rec["defect"] = defect.to_json_value();
            records.push(rec);
            continue;
        }
        let [lhs, right, left, prod] = &terms;
        writeln!(out, "pair {}", i + 1)?;
        writeln!(out, "  f         = {}", f.render(v))?;
        writeln!(out, "  g         = {}", g.render(v))?;
        writeln!(out, "  P(f)P(g)  = {}", lhs.render(v))?;
        writeln!(out, "  P(f P(g)) = {}", right.render(v))?;
        writeln!(out, "  P(P(f) g) = {}", left.render(v))?;
        writeln!(out, "  P(fg)     = {}", prod.render(v))?;
        writeln!(out, "  defect    = {}", defect.render(v))?;
    }
    if a.json {
        print_json(out, &serde_json::Value::Array(records))?;
    }
    Ok(if all_zero { EXIT_PASS } else { EXIT_COUNTEREXAMPLE })
}
