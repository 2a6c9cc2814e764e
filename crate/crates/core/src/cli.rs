//! Command-line front end. The `maxmin` binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success, 1 verification failed, 2 input error, 3 resource limit.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bijection::{
    self, in_table_region, in_theorem_region, verify_bijection, verify_stem_totals,
};
use crate::enumerate::{EnumConfig, EnumerationError, DEFAULT_MAX_N};
use crate::eulerian::{eulerian_polynomial, EulerianError, QEulerianTable};
use crate::min_decomp::{build_min_decomp, verify_injectivity};
use crate::partitions::{
    crosscheck_triangle, t_nk, t_nk_contributions, t_triangle, TriangleFormat,
};
use crate::perm::parse_permutation;
use crate::tree::build_max_weight_tree;
use crate::weight::{range_contributions, weight_accelerated, weight_via_ranges};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Longest permutation accepted by the quadratic weight algorithms.
pub const QUADRATIC_MAX_LEN: usize = 20_000;

#[derive(Debug, Parser, Serialize)]
#[command(
    name = "maxmin",
    version,
    about = "Maxmin trees, permutation weights and q-Eulerian polynomials"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Worker threads for exhaustive enumeration (output does not depend on it).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Refuse to enumerate S_n above this n.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Weight of a permutation.
    Weight {
        /// Permutation, e.g. "1 3 2" or "1,3,2".
        perm: String,
        #[arg(long, value_enum, default_value_t = Algo::Fast)]
        algo: Algo,
        /// List every non-descent's subtree range and descent count.
        #[arg(long)]
        explain: bool,
    },
    /// Maximum-weight tree or minimum decomposition tree of a permutation.
    Tree {
        perm: String,
        #[arg(long, value_enum, default_value_t = TreeKind::Maxweight)]
        kind: TreeKind,
        #[arg(long, value_enum, default_value_t = TreeFormat::Dot)]
        format: TreeFormat,
    },
    /// Eulerian polynomial E_n(x), or E_n(x, q) with --q.
    Eulerian {
        n: usize,
        #[arg(long)]
        q: bool,
    },
    /// Leading coefficients of W_d(t).
    Wd {
        d: usize,
        #[arg(long, default_value_t = 4)]
        terms: usize,
    },
    /// T(n, k), a triangle of it, or a cross-check against a file.
    Tnk(TnkArgs),
    /// Exhaustive verifications.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
}

#[derive(Debug, Args, Serialize)]
pub struct TnkArgs {
    n: Option<u32>,
    k: Option<u32>,
    /// Print rows 0..=N.
    #[arg(long, value_name = "N")]
    triangle: Option<usize>,
    /// Compare a CSV triangle or b-file against the computed triangle.
    #[arg(long, value_name = "FILE")]
    crosscheck: Option<PathBuf>,
    /// Format of the --crosscheck file (detected when omitted).
    #[arg(long, value_enum)]
    format: Option<FileFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FileFormat {
    Csv,
    Bfile,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verify {
    /// Brute-force count vs T(n-1, d) vs stem total.
    Bijection {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Without --n/--d, check every (n, d) in the region up to this n.
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Region::Table)]
        region: Region,
    },
    /// Stem enumeration totals and partition images for one (n, d).
    Stems {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Constancy of the coefficient of x^d q^(maxwt(n,d)-k) for n up to n_max.
    Stabilization {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Minimum decomposition is injective on S_n.
    Injectivity {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    /// 2d >= n - 1
    Table,
    /// n >= 2d
    Theorem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Recursive,
    Range,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TreeKind {
    Maxweight,
    Mindecomp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TreeFormat {
    Dot,
    Json,
}

/// What a command produced: a JSON payload, text/CSV renderings, and
/// whether any verification inside it failed.
struct Outcome {
    payload: Value,
    text: String,
    csv: Option<String>,
    ok: bool,
}

impl Outcome {
    fn new(payload: Value, text: String) -> Self {
        Self {
            payload,
            text,
            csv: None,
            ok: true,
        }
    }

    fn csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    fn ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.to_string(),
    }
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::LimitExceeded { .. } => Failure {
                code: EXIT_LIMIT,
                message: e.to_string(),
            },
            other => input_error(other),
        }
    }
}

impl From<EulerianError> for Failure {
    fn from(e: EulerianError) -> Self {
        match e {
            EulerianError::Enumeration(inner) => inner.into(),
            other => input_error(other),
        }
    }
}

impl From<bijection::BijectionError> for Failure {
    fn from(e: bijection::BijectionError) -> Self {
        match e {
            bijection::BijectionError::Enumeration(inner) => inner.into(),
            other => input_error(other),
        }
    }
}

/// The JSON form of a run: command, parameters, payload, timing and version.
#[derive(Debug, Serialize)]
pub struct OutputEnvelope<'a> {
    pub command: &'a str,
    pub parameters: &'a Command,
    pub result: &'a Value,
    pub elapsed_ms: f64,
    pub version: &'static str,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Weight { .. } => "weight",
        Command::Tree { .. } => "tree",
        Command::Eulerian { .. } => "eulerian",
        Command::Wd { .. } => "wd",
        Command::Tnk(_) => "tnk",
        Command::Verify { what } => match what {
            Verify::Bijection { .. } => "verify bijection",
            Verify::Stems { .. } => "verify stems",
            Verify::Stabilization { .. } => "verify stabilization",
            Verify::Injectivity { .. } => "verify injectivity",
        },
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let cfg = EnumConfig {
        max_n: cli.max_n,
        threads: cli.threads,
    };
    let start = Instant::now();
    let outcome = match execute(&cli.command, &cfg) {
        Ok(o) => o,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            return f.code;
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let written = match cli.output {
        OutputFormat::Text => out.write_all(outcome.text.as_bytes()),
        OutputFormat::Json => {
            let envelope = OutputEnvelope {
                command: command_name(&cli.command),
                parameters: &cli.command,
                result: &outcome.payload,
                elapsed_ms,
                version: env!("CARGO_PKG_VERSION"),
            };
            serde_json::to_writer_pretty(&mut *out, &envelope)
                .map_err(std::io::Error::other)
                .and_then(|_| writeln!(out))
        }
        OutputFormat::Csv => match &outcome.csv {
            Some(csv) => out.write_all(csv.as_bytes()),
            None => {
                let _ = writeln!(
                    err,
                    "error: no CSV form for `{}`",
                    command_name(&cli.command)
                );
                return EXIT_INPUT;
            }
        },
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: writing output: {e}");
        return EXIT_INPUT;
    }
    if outcome.ok {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn execute(command: &Command, cfg: &EnumConfig) -> Result<Outcome, Failure> {
    match command {
        Command::Weight {
            perm,
            algo,
            explain,
        } => cmd_weight(perm, *algo, *explain),
        Command::Tree { perm, kind, format } => cmd_tree(perm, *kind, *format),
        Command::Eulerian { n, q } => cmd_eulerian(*n, *q, cfg),
        Command::Wd { d, terms } => cmd_wd(*d, *terms, cfg),
        Command::Tnk(args) => cmd_tnk(args),
        Command::Verify { what } => cmd_verify(what, cfg),
    }
}

fn cmd_weight(text: &str, algo: Algo, explain: bool) -> Result<Outcome, Failure> {
    let p = parse_permutation(text).map_err(input_error)?;
    let quadratic = algo != Algo::Fast || explain;
    if quadratic && p.len() > QUADRATIC_MAX_LEN {
        return Err(Failure {
            code: EXIT_LIMIT,
            message: format!(
                "length {} exceeds {QUADRATIC_MAX_LEN} for the quadratic algorithms; use --algo fast without --explain",
                p.len()
            ),
        });
    }
    let weight = match algo {
        Algo::Recursive => build_max_weight_tree(&p).weight_recursive(),
        Algo::Range => weight_via_ranges(&p),
        Algo::Fast => weight_accelerated(&p),
    };
    let mut text = format!("{weight}\n");
    let mut payload = json!({ "n": p.len(), "descents": p.descents(), "weight": weight });
    if explain {
        let rows = range_contributions(&p);
        for r in &rows {
            text.push_str(&format!(
                "position {} value {} range [{}, {}] descents {}\n",
                r.position, r.value, r.range.left, r.range.right, r.descents
            ));
        }
        payload["ranges"] = serde_json::to_value(&rows).expect("serializable");
    }
    Ok(Outcome::new(payload, text))
}

fn cmd_tree(text: &str, kind: TreeKind, format: TreeFormat) -> Result<Outcome, Failure> {
    let p = parse_permutation(text).map_err(input_error)?;
    let (json_value, dot) = match kind {
        TreeKind::Maxweight => {
            let t = build_max_weight_tree(&p);
            (
                serde_json::to_value(t.to_json()).expect("serializable"),
                t.to_dot(),
            )
        }
        TreeKind::Mindecomp => {
            let t = build_min_decomp(&p);
            (
                serde_json::to_value(t.to_json()).expect("serializable"),
                t.to_dot(),
            )
        }
    };
    let text = match format {
        TreeFormat::Dot => dot,
        TreeFormat::Json => format!(
            "{}\n",
            serde_json::to_string(&json_value).expect("serializable")
        ),
    };
    Ok(Outcome::new(json_value, text))
}

fn cmd_eulerian(n: usize, with_q: bool, cfg: &EnumConfig) -> Result<Outcome, Failure> {
    if with_q {
        let poly = crate::eulerian::q_eulerian(n, cfg)?;
        let payload = serde_json::to_value(poly.to_json(n)).expect("serializable");
        Ok(Outcome::new(payload, format!("E_{n}(x, q) = {poly}\n")).csv(poly.to_csv()))
    } else {
        let coeffs = eulerian_polynomial(n, cfg)?;
        let text = format!("E_{n}(x) coefficients: {}\n", join(&coeffs, ", "));
        let csv = std::iter::once("x,c".to_string())
            .chain(coeffs.iter().enumerate().map(|(d, c)| format!("{d},{c}")))
            .collect::<Vec<_>>()
            .join("\n")
            + "\n";
        Ok(Outcome::new(json!({ "n": n, "coefficients": coeffs }), text).csv(csv))
    }
}

fn cmd_wd(d: usize, terms: usize, cfg: &EnumConfig) -> Result<Outcome, Failure> {
    let table = QEulerianTable::new(*cfg);
    let series = table.wd_series(d, terms)?;
    let text = format!("{}\n", join(&series.coefficients, ","));
    let csv = std::iter::once("k,a".to_string())
        .chain(
            series
                .coefficients
                .iter()
                .enumerate()
                .map(|(k, a)| format!("{k},{a}")),
        )
        .collect::<Vec<_>>()
        .join("\n")
        + "\n";
    Ok(Outcome::new(serde_json::to_value(&series).expect("serializable"), text).csv(csv))
}

fn cmd_tnk(args: &TnkArgs) -> Result<Outcome, Failure> {
    if let Some(path) = &args.crosscheck {
        let format = args.format.map(|f| match f {
            FileFormat::Csv => TriangleFormat::Csv,
            FileFormat::Bfile => TriangleFormat::BFile,
        });
        let report = crosscheck_triangle(path, format).map_err(input_error)?;
        let mut text = format!("{} cells compared\n", report.cells.len());
        for c in report.mismatches() {
            text.push_str(&format!(
                "mismatch at T({}, {}): expected {}, found {}\n",
                c.n, c.k, c.expected, c.found
            ));
        }
        let ok = report.all_match();
        let payload = json!({
            "cells": report.cells.len(),
            "mismatches": report.mismatches().collect::<Vec<_>>(),
            "pass": ok,
        });
        return Ok(Outcome::new(payload, text).ok(ok));
    }
    if let Some(n_max) = args.triangle {
        let tri = t_triangle(n_max);
        let text = tri
            .rows
            .iter()
            .map(|r| join(r, " "))
            .collect::<Vec<_>>()
            .join("\n")
            + "\n";
        let bold: Vec<Vec<bool>> = (0..=n_max)
            .map(|n| {
                (0..=n)
                    .map(|k| crate::partitions::PartitionTriangle::is_bold(n, k))
                    .collect()
            })
            .collect();
        let payload = json!({ "rows": tri.rows, "bold": bold });
        return Ok(Outcome::new(payload, text).csv(tri.to_csv()));
    }
    let (Some(n), Some(k)) = (args.n, args.k) else {
        return Err(input_error(
            "tnk needs <N> <K>, --triangle N, or --crosscheck FILE",
        ));
    };
    let value = t_nk(n, k);
    let contributions: Vec<Value> = t_nk_contributions(n, k)
        .into_iter()
        .map(|(p, c)| json!({ "partition": p.parts(), "choices": c }))
        .collect();
    let payload = json!({ "n": n, "k": k, "value": value, "contributions": contributions });
    Ok(Outcome::new(payload, format!("{value}\n")).csv(format!("n,k,t\n{n},{k},{value}\n")))
}

fn cmd_verify(what: &Verify, cfg: &EnumConfig) -> Result<Outcome, Failure> {
    match what {
        Verify::Bijection {
            n,
            d,
            n_max,
            region,
        } => {
            let table = QEulerianTable::new(*cfg);
            let pairs: Vec<(usize, usize)> = match (n, d) {
                (Some(n), Some(d)) => vec![(*n, *d)],
                (None, None) => (2..=*n_max)
                    .flat_map(|n| (1..n).map(move |d| (n, d)))
                    .filter(|&(n, d)| match region {
                        Region::Table => in_table_region(n, d),
                        Region::Theorem => in_theorem_region(n, d),
                    })
                    .collect(),
                _ => return Err(input_error("give both --n and --d, or neither")),
            };
            let mut records = Vec::with_capacity(pairs.len());
            let mut text = String::new();
            for (n, d) in pairs {
                let r = verify_bijection(n, d, &table)?;
                text.push_str(&format!(
                    "n={} d={} weight={}: brute {} stems {} T {} {}{}\n",
                    r.n,
                    r.d,
                    r.weight,
                    r.brute,
                    r.stem_total,
                    r.t_value,
                    if r.pass { "pass" } else { "FAIL" },
                    if r.in_theorem_region {
                        ""
                    } else {
                        " (outside n >= 2d)"
                    },
                ));
                records.push(r);
            }
            let ok = records.iter().all(|r| r.pass);
            Ok(Outcome::new(json!({ "records": records, "pass": ok }), text).ok(ok))
        }
        Verify::Stems { n, d } => {
            let r = verify_stem_totals(*n, *d)?;
            let mut text = String::new();
            for row in &r.rows {
                let part = row
                    .partition
                    .as_ref()
                    .map_or("-".to_string(), |p| p.to_string());
                text.push_str(&format!("{}: {} -> {}\n", row.stem, row.count, part));
            }
            text.push_str(&format!(
                "total {} T({}, {}) = {} {}\n",
                r.total,
                n - 1,
                d,
                r.t_value,
                if r.pass { "pass" } else { "FAIL" }
            ));
            let ok = r.pass;
            Ok(Outcome::new(serde_json::to_value(&r).expect("serializable"), text).ok(ok))
        }
        Verify::Stabilization { d, k, n_max } => {
            let s = QEulerianTable::new(*cfg).stabilization(*d, *k, *n_max)?;
            let values: Vec<String> = s.values.iter().map(|(n, c)| format!("n={n}:{c}")).collect();
            let text = format!(
                "d={} k={}: {} {}\n",
                d,
                k,
                values.join(" "),
                if s.is_stable() {
                    "stable"
                } else {
                    "NOT STABLE"
                }
            );
            let ok = s.is_stable();
            let payload =
                json!({ "d": d, "k": k, "values": s.values, "stable": ok, "value": s.value() });
            Ok(Outcome::new(payload, text).ok(ok))
        }
        Verify::Injectivity { n } => {
            let ok = verify_injectivity(*n, cfg)?;
            let text = format!(
                "n={n}: {}\n",
                if ok { "injective" } else { "NOT injective" }
            );
            Ok(Outcome::new(json!({ "n": n, "injective": ok }), text).ok(ok))
        }
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}
