use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use errsumlab_core::contfrac::{
    convergents_from_quotients, eval_erfint_cf, extract_cf_with_cap, EXTRACTION_MAX_DOUBLINGS,
};
use errsumlab_core::errorsum::error_sum_abs;
use errsumlab_core::identities::{cartesian, lookup, registry, IdentityReport, Params};
use errsumlab_core::numerics::{agreed_digits, gauss_integral, int};
use errsumlab_core::{parse, Enclosure, Error, Precision};
use serde::Serialize;

use crate::report::{text_line, verified_decimal, width_string, Interval, JsonReport};
use crate::runner::{all_jobs, default_workers, run_batch, Job};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

/// Extra digits computed so that the last printed digit is rarely lost to a
/// straddled boundary.
const DISPLAY_GUARD_DIGITS: u32 = 3;

pub const MAX_DOUBLINGS_ENV: &str = "ERRSUMLAB_MAX_DOUBLINGS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "errsumlab", version, about = "Rigorous continued-fraction error sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Decimal digits requested.
    #[arg(long, global = true, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
    pub digits: u32,

    /// Number of terms (partial quotients, convergents, CF levels).
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub terms: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// First partial quotients of a constant.
    Expand { expr: String },
    /// Convergents p/q as lines "n p q".
    Convergents { expr: String },
    /// Error sum of a positive constant.
    Errsum { expr: String },
    /// Generalized continued fraction preset, compared with its conjectured value.
    Gencf {
        #[arg(long, value_enum)]
        preset: Preset,
    },
    /// Verify one identity (over its default grid or --param values) or all of them.
    Verify {
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// k=v or k=a..b; repeat for several parameters.
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        /// Worker threads (default: available parallelism).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
    },
    /// Registry ids, statuses and parameter grids.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Erfint,
}

/// Usage errors carry their own message; library errors map by kind.
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Precision { .. } => EXIT_PRECISION,
        _ => EXIT_USAGE,
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            let _ = writeln!(err, "{}", first.trim());
            return EXIT_USAGE;
        }
    };
    let doublings = match doublings_from_env() {
        Ok(d) => d,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    match dispatch(&cli, doublings, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn doublings_from_env() -> Result<Option<u32>, String> {
    match std::env::var(MAX_DOUBLINGS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u32>()
            .map(Some)
            .map_err(|_| format!("{MAX_DOUBLINGS_ENV} must be a nonnegative integer, got `{v}`")),
        Err(_) => Ok(None),
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{s}").map_err(|e| Failure::Usage(e.to_string()))
}

fn put(out: &mut dyn Write, line: &str) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure::Usage(e.to_string()))
}

#[derive(Serialize)]
struct ConvergentRow {
    n: usize,
    p: String,
    q: String,
}

#[derive(Serialize)]
struct ErrsumJson {
    expr: String,
    digits: u32,
    value: String,
    lo: String,
    hi: String,
    #[serde(rename = "±")]
    plus_minus: String,
    agreed_digits: u32,
    terms_used: usize,
    tail_bound: String,
}

#[derive(Serialize)]
struct GencfJson {
    preset: &'static str,
    terms: u64,
    digits: u32,
    value: Interval,
    reference: Interval,
    agreed_digits: u32,
    consistent: bool,
}

#[derive(Serialize)]
struct ListEntry {
    id: &'static str,
    status: &'static str,
    description: &'static str,
    params: Vec<ListParam>,
}

#[derive(Serialize)]
struct ListParam {
    name: &'static str,
    min: i64,
    max: i64,
    defaults: Vec<i64>,
}

fn dispatch(cli: &Cli, doublings: Option<u32>, out: &mut dyn Write) -> Result<i32, Failure> {
    let terms = cli.terms as usize;
    let mut prec = Precision::new(cli.digits);
    if let Some(d) = doublings {
        prec = prec.with_max_doublings(d);
    }
    let extraction_cap = doublings.unwrap_or(EXTRACTION_MAX_DOUBLINGS);
    match &cli.command {
        Command::Expand { expr } => {
            let e = parse(expr)?;
            let q = extract_cf_with_cap(&e, terms, extraction_cap)?;
            match cli.format {
                Format::Text => {
                    let s: Vec<String> = q.terms.iter().map(|t| t.to_string()).collect();
                    put(out, &s.join(" "))?;
                }
                Format::Json => {
                    let s: Vec<String> = q.terms.iter().map(|t| t.to_string()).collect();
                    emit_json(out, &s)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Convergents { expr } => {
            let e = parse(expr)?;
            let q = extract_cf_with_cap(&e, terms, extraction_cap)?;
            let rows: Vec<ConvergentRow> = convergents_from_quotients(q.terms, terms)
                .into_iter()
                .map(|c| ConvergentRow {
                    n: c.index,
                    p: c.p.to_string(),
                    q: c.q.to_string(),
                })
                .collect();
            match cli.format {
                Format::Text => {
                    for r in &rows {
                        put(out, &format!("{} {} {}", r.n, r.p, r.q))?;
                    }
                }
                Format::Json => emit_json(out, &rows)?,
            }
            Ok(EXIT_OK)
        }
        Command::Errsum { expr } => {
            let e = parse(expr)?;
            let r = error_sum_abs(&e, prec.with_digits(cli.digits + DISPLAY_GUARD_DIGITS))?;
            let places = cli.digits + 5;
            let value = verified_decimal(&r.value, cli.digits);
            match cli.format {
                Format::Text => put(out, &value)?,
                Format::Json => {
                    let iv = Interval::new(&r.value, places);
                    emit_json(
                        out,
                        &ErrsumJson {
                            expr: expr.clone(),
                            digits: cli.digits,
                            value,
                            lo: iv.lo,
                            hi: iv.hi,
                            plus_minus: width_string(&r.value, places),
                            agreed_digits: agreed_digits(&r.value.width()),
                            terms_used: r.terms_used,
                            tail_bound: Enclosure::point(r.tail_bound.clone()).decimal_bounds(places).1,
                        },
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Gencf { preset: Preset::Erfint } => {
            let value = eval_erfint_cf(terms)?;
            let reference = gauss_integral(&int(1), prec.with_digits(cli.digits + DISPLAY_GUARD_DIGITS))?;
            let consistent = value.intersects(&reference);
            let agreed = agreed_digits(&value.hull(&reference).width());
            let places = cli.digits + 5;
            match cli.format {
                Format::Text => {
                    put(out, &format!("value {}", verified_decimal(&value, cli.digits)))?;
                    put(out, &format!("enclosure {value:.places$}", places = places as usize))?;
                    put(out, &format!("gauss_integral(1) {}", verified_decimal(&reference, cli.digits)))?;
                    put(out, &format!("agreed_digits {agreed}"))?;
                    put(out, &format!("consistent {}", if consistent { "yes" } else { "no" }))?;
                }
                Format::Json => emit_json(
                    out,
                    &GencfJson {
                        preset: "erfint",
                        terms: cli.terms,
                        digits: cli.digits,
                        value: Interval::new(&value, places),
                        reference: Interval::new(&reference, places),
                        agreed_digits: agreed,
                        consistent,
                    },
                )?,
            }
            Ok(if consistent { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Verify { id, all, params, jobs } => {
            let job_list = if *all {
                if !params.is_empty() {
                    return Err(Failure::Usage("--param cannot be combined with --all".into()));
                }
                all_jobs()
            } else {
                let Some(id) = id else {
                    return Err(Failure::Usage("verify needs an identity id or --all".into()));
                };
                let identity = lookup(id)?;
                let grid = if params.is_empty() {
                    identity.default_grid()
                } else {
                    param_grid(params).map_err(Failure::Usage)?
                };
                for p in &grid {
                    identity.validate(p)?;
                }
                grid.into_iter()
                    .map(|params| Job {
                        id: identity.id.to_string(),
                        params,
                    })
                    .collect()
            };
            let workers = jobs.map(|j| j as usize).unwrap_or_else(default_workers);
            let results = run_batch(&job_list, prec, workers);
            let mut reports: Vec<IdentityReport> = Vec::with_capacity(results.len());
            for r in results {
                reports.push(r?);
            }
            match cli.format {
                Format::Text => {
                    for r in &reports {
                        put(out, &text_line(r))?;
                    }
                }
                Format::Json => {
                    let js: Vec<JsonReport> = reports.iter().map(JsonReport::from).collect();
                    emit_json(out, &js)?;
                }
            }
            Ok(batch_exit_code(&reports))
        }
        Command::List => {
            let entries: Vec<ListEntry> = registry()
                .iter()
                .map(|i| ListEntry {
                    id: i.id,
                    status: i.status.as_str(),
                    description: i.description,
                    params: i
                        .params
                        .iter()
                        .map(|p| ListParam {
                            name: p.name,
                            min: p.min,
                            max: p.max,
                            defaults: p.defaults.to_vec(),
                        })
                        .collect(),
                })
                .collect();
            match cli.format {
                Format::Text => {
                    for e in &entries {
                        let grid: Vec<String> = e
                            .params
                            .iter()
                            .map(|p| {
                                let d: Vec<String> = p.defaults.iter().map(|v| v.to_string()).collect();
                                format!("{}>={} default {{{}}}", p.name, p.min, d.join(","))
                            })
                            .collect();
                        let grid = if grid.is_empty() { "-".to_string() } else { grid.join(" ") };
                        put(out, &format!("{:<16} {:<9} {:<40} {}", e.id, e.status, grid, e.description))?;
                    }
                }
                Format::Json => emit_json(out, &entries)?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// 1 if any identity disagreed, else 3 if any hit the escalation cap.
pub fn batch_exit_code(reports: &[IdentityReport]) -> i32 {
    if reports.iter().any(|r| !r.pass && !r.is_precision_failure()) {
        EXIT_MISMATCH
    } else if reports.iter().any(|r| r.is_precision_failure()) {
        EXIT_PRECISION
    } else {
        EXIT_OK
    }
}

/// Expands `k=v` and `k=a..b` (inclusive) into the Cartesian grid.
pub fn param_grid(specs: &[String]) -> Result<Vec<Params>, String> {
    let mut axes: BTreeMap<String, Vec<i64>> = BTreeMap::new();
    for spec in specs {
        let bad = || format!("bad --param `{spec}`, expected k=v or k=a..b");
        let (k, v) = spec.split_once('=').ok_or_else(bad)?;
        let k = k.trim();
        if k.is_empty() {
            return Err(bad());
        }
        let values: Vec<i64> = match v.split_once("..") {
            Some((a, b)) => {
                let a: i64 = a.trim().parse().map_err(|_| bad())?;
                let b: i64 = b.trim().parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                (a..=b).collect()
            }
            None => vec![v.trim().parse().map_err(|_| bad())?],
        };
        if axes.insert(k.to_string(), values).is_some() {
            return Err(format!("parameter `{k}` given twice"));
        }
    }
    let axes: Vec<(String, Vec<i64>)> = axes.into_iter().collect();
    Ok(cartesian(&axes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(specs: &[&str]) -> Vec<Params> {
        let v: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
        match param_grid(&v) {
            Ok(g) => g,
            Err(_) => panic!("bad grid"),
        }
    }

    #[test]
    fn grid_expansion() {
        let g = grid(&["l=2..4", "s=1..3"]);
        assert_eq!(g.len(), 9);
        assert_eq!(g[0]["l"], 2);
        assert_eq!(g[8]["s"], 3);
        assert_eq!(grid(&["m=5"]).len(), 1);
    }

    #[test]
    fn grid_rejects_garbage() {
        for bad in ["l", "=3", "l=x", "l=3..1", "l=1..y"] {
            assert!(param_grid(&[bad.to_string()]).is_err(), "{bad}");
        }
        assert!(param_grid(&["l=1".to_string(), "l=2".to_string()]).is_err());
    }
}
