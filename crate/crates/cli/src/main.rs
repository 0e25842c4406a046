//! `wonderful`: reports, tables and checks for wonderful compactifications
//! of adjoint symmetric spaces.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use wonderful_core::catalog::{Catalog, Instance, Params};
use wonderful_core::names::Style;
use wonderful_core::record::Record;
use wonderful_core::report::{Report, TableRow};
use wonderful_core::validate::{validate, CheckResult, CHECKS};
use wonderful_core::{CartanType, Error, RootSystem};

#[derive(Parser)]
#[command(name = "wonderful", version, about = "Minimal rational curves on wonderful compactifications")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one family at given parameters.
    Report {
        #[arg(long)]
        family: String,
        /// Comma separated `k=v` pairs, e.g. `n=5` or `n=4,r=1`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// ASCII names instead of Unicode in text output.
        #[arg(long)]
        ascii: bool,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// The classification table up to a rank.
    Table {
        #[arg(long)]
        max_rank: usize,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        ascii: bool,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Validate every instance up to a rank; exit 1 on any failure.
    Check {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Root system summary.
    Roots {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        /// Print every positive root.
        #[arg(long)]
        list: bool,
    },
}

/// Failures mapped to exit codes: usage 2, validation 1.
enum Failure {
    Usage(String),
    Validation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load(path: &Option<PathBuf>) -> Result<Catalog, Failure> {
    match path {
        Some(p) => Ok(Catalog::load(p)?),
        None => Ok(Catalog::embedded()),
    }
}

fn parse_params(s: &str) -> Result<Params, Failure> {
    let mut out = Params::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("expected k=v, found `{item}`")))?;
        let v: i64 = v.trim().parse().map_err(|_| Failure::Usage(format!("`{v}` is not an integer")))?;
        if out.insert(k.trim().to_string(), v).is_some() {
            return Err(Failure::Usage(format!("parameter `{k}` given twice")));
        }
    }
    Ok(out)
}

/// serde_json output with every non-ASCII character escaped.
fn to_json<T: Serialize>(v: &T) -> String {
    let s = serde_json::to_string_pretty(v).expect("serializable");
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        if ch.is_ascii() {
            out.push(ch);
        } else {
            let mut buf = [0u16; 2];
            for unit in ch.encode_utf16(&mut buf) {
                out.push_str(&format!("\\u{unit:04x}"));
            }
        }
    }
    out
}

fn style(ascii: bool) -> Style {
    if ascii {
        Style::Ascii
    } else {
        Style::Unicode
    }
}

fn build(inst: Instance) -> Result<Record, Failure> {
    let id = inst.id();
    Record::build(inst).map_err(|f| Failure::Validation(format!("{id}: {} failed: {}", f.stage, f.error)))
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Report { family, params, format, ascii, catalog } => {
            let cat = load(&catalog)?;
            let inst = cat.instantiate(&family, &parse_params(&params)?)?;
            let rec = build(inst)?;
            let st = match format {
                Format::Json => Style::Unicode,
                Format::Text => style(ascii),
            };
            let report = Report::new(&rec, &cat.version, st)?;
            Ok(match format {
                Format::Json => to_json(&report),
                Format::Text => report.to_text(),
            })
        }
        Command::Table { max_rank, family, format, ascii, catalog } => {
            let cat = load(&catalog)?;
            let mut all = cat.enumerate(max_rank)?;
            if let Some(f) = &family {
                if !cat.labels().iter().any(|l| l.eq_ignore_ascii_case(f)) {
                    return Err(Failure::Usage(format!("unknown family `{f}`")));
                }
                all.retain(|i| i.label.eq_ignore_ascii_case(f));
            }
            let st = match format {
                Format::Json => Style::Unicode,
                Format::Text => style(ascii),
            };
            let rows = all
                .into_par_iter()
                .map(|i| build(i).map(|r| TableRow::new(&r, st)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(match format {
                Format::Json => to_json(&rows),
                Format::Text => {
                    let mut s = format!("{}\n", TableRow::header());
                    for r in &rows {
                        s.push_str(&r.to_text());
                        s.push('\n');
                    }
                    s
                }
            })
        }
        Command::Check { max_rank, catalog } => {
            // broken data is a validation failure here, not a usage error
            let data = |e: Error| match e {
                Error::Catalog(m) => Failure::Validation(format!("FAIL catalog: {m}")),
                e => Failure::from(e),
            };
            let cat = match &catalog {
                Some(p) => Catalog::load(p).map_err(data)?,
                None => Catalog::embedded(),
            };
            let all = cat.enumerate(max_rank).map_err(data)?;
            let results: Vec<(String, Vec<CheckResult>)> =
                all.par_iter().map(|i| (i.id(), validate(i))).collect();
            let mut s = format!("catalog {} | {} instances up to rank {max_rank}\n", cat.version, results.len());
            let mut failures = Vec::new();
            for name in CHECKS {
                let (mut pass, mut fail) = (0, 0);
                for (id, res) in &results {
                    for r in res.iter().filter(|r| r.name == name) {
                        if r.passed {
                            pass += 1;
                        } else {
                            fail += 1;
                            failures.push(format!("FAIL {id} [{}] {}", r.name, r.detail));
                        }
                    }
                }
                s.push_str(&format!("{name:<18} {pass:>5} passed {fail:>5} failed\n"));
            }
            if failures.is_empty() {
                s.push_str("all checks passed\n");
                Ok(s)
            } else {
                s.push_str(&failures.join("\n"));
                Err(Failure::Validation(s))
            }
        }
        Command::Roots { family, rank, list } => {
            let ty: CartanType = format!("{family}{rank}").parse()?;
            let rs = RootSystem::simple(ty)?;
            let mut s = format!(
                "type {ty}\nroots {}\npositive roots {}\nhighest root {}\ndim O_min {}\n",
                rs.num_roots(),
                rs.positive_roots().len(),
                rs.highest_root(),
                rs.dim_minimal_orbit()
            );
            if list {
                for r in rs.positive_roots() {
                    s.push_str(&format!("{r}\n"));
                }
            }
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Validation(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
