use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use braid_chow::export::{
    csv_numeric, csv_schur_tables, csv_series, csv_strata, latex_numeric, latex_schur_tables, latex_series,
    latex_strata, SchurTable, SchurTableRecord, StrataRecord,
};
use braid_chow::level_trees::strata_summary;
use braid_chow::moduli::m_series;
use braid_chow::numeric::{hnum_bell, hnum_from_solution, hnum_lattice, hnum_stirling, NumericTable};
use braid_chow::solver::{equivariant_table, solve_b};
use braid_chow::symfunc::schur_expand;
use braid_chow::verify::{run_verification, Fault, STRATA_MAX_N};
use braid_chow::{SymSeries, TPoly};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "braid-chow", version, about = "Equivariant Chow polynomials of braid matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Equivariant Chow polynomials H_n for 2 <= n <= max-n.
    Table(RunConfig),
    /// Numeric Chow polynomials and Euler characteristics.
    Numeric(RunConfig),
    /// The series M of compactly supported Poincaré polynomials.
    MSeries(RunConfig),
    /// Level-tree strata census for a single n.
    Strata(StrataArgs),
    /// Run every invariant check up to max-n.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct RunConfig {
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..=12))]
    max_n: u32,
    #[arg(long, value_enum, default_value_t = Method::Solve)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Basis::Schur)]
    basis: Basis,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct StrataArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=STRATA_MAX_N as i64))]
    n: u32,
    #[arg(long)]
    count_only: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..=12))]
    max_n: u32,
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<InjectedFault>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Solve,
    Stirling,
    Bell,
    Lattice,
    Strata,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Schur,
    P,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InjectedFault {
    StirlingSign,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<braid_chow::ChowError> for Failure {
    fn from(e: braid_chow::ChowError) -> Self {
        Failure::Check(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn render_series(series: &BTreeMap<usize, SymSeries>, basis: Basis, format: Format, symbol: &str) -> Outcome {
    match basis {
        Basis::P => Ok(match format {
            Format::Json => json(&series.values().map(SymSeries::to_record).collect::<Vec<_>>()),
            Format::Csv => csv_series(series),
            Format::Latex => latex_series(series, symbol),
        }),
        Basis::Schur => {
            let tables = series
                .iter()
                .map(|(n, s)| Ok((*n, schur_expand(s, *n)?)))
                .collect::<Result<BTreeMap<usize, SchurTable>, braid_chow::ChowError>>()?;
            Ok(render_schur(&tables, format, symbol))
        }
    }
}

fn render_schur(tables: &BTreeMap<usize, SchurTable>, format: Format, symbol: &str) -> String {
    match format {
        Format::Json => json(&tables.iter().map(|(n, t)| SchurTableRecord::new(*n, t)).collect::<Vec<_>>()),
        Format::Csv => csv_schur_tables(tables),
        Format::Latex => latex_schur_tables(tables, symbol),
    }
}

fn render_numeric(table: &NumericTable, format: Format) -> String {
    match format {
        Format::Json => json(&table.to_records()),
        Format::Csv => csv_numeric(table),
        Format::Latex => latex_numeric(table),
    }
}

fn cmd_table(cfg: &RunConfig) -> Outcome {
    let n_max = cfg.max_n as usize;
    let b = solve_b(&m_series(n_max)?, n_max)?;
    match cfg.basis {
        Basis::Schur => {
            let tables = (2..=n_max)
                .map(|n| Ok((n, equivariant_table(&b, n)?)))
                .collect::<Result<BTreeMap<_, _>, braid_chow::ChowError>>()?;
            Ok(render_schur(&tables, cfg.format, "\\mathrm{H}"))
        }
        Basis::P => {
            let series: BTreeMap<usize, SymSeries> = (2..=n_max).map(|n| (n, b.component(n).truncate(n))).collect();
            render_series(&series, Basis::P, cfg.format, "\\mathrm{H}")
        }
    }
}

fn cmd_m_series(cfg: &RunConfig) -> Outcome {
    let n_max = cfg.max_n as usize;
    let m = m_series(n_max)?;
    let series: BTreeMap<usize, SymSeries> = (2..=n_max).map(|n| (n, m.component(n).truncate(n))).collect();
    render_series(&series, cfg.basis, cfg.format, "M")
}

fn strata_table(n_max: usize) -> NumericTable {
    let mut polys = BTreeMap::from([(1, TPoly::one())]);
    for n in 2..=n_max {
        polys.insert(n, strata_summary(n, false).epoly());
    }
    NumericTable::from_polys(polys)
}

fn diff_report(name: &str, got: &NumericTable, reference: &NumericTable) -> Vec<String> {
    got.polys()
        .iter()
        .filter_map(|(n, p)| match reference.hnum(*n) {
            Some(r) if r == p => None,
            Some(r) => Some(format!("{name}: n={n} gives {p}, solver gives {r}")),
            None => Some(format!("{name}: n={n} has no solver value")),
        })
        .collect()
}

fn cmd_numeric(cfg: &RunConfig) -> Outcome {
    let n_max = cfg.max_n as usize;
    let solve = || -> Result<NumericTable, Failure> { Ok(hnum_from_solution(&solve_b(&m_series(n_max)?, n_max)?)) };
    let table = match cfg.method {
        Method::Solve => solve()?,
        Method::Stirling => hnum_stirling(n_max)?,
        Method::Bell => hnum_bell(n_max)?,
        Method::Lattice => hnum_lattice(n_max)?,
        Method::Strata => {
            if n_max > STRATA_MAX_N {
                return Err(Failure::Usage(format!("--method strata requires --max-n <= {STRATA_MAX_N}")));
            }
            strata_table(n_max)
        }
        Method::All => {
            let reference = solve()?;
            let mut diffs = Vec::new();
            diffs.extend(diff_report("stirling", &hnum_stirling(n_max)?, &reference));
            diffs.extend(diff_report("bell", &hnum_bell(n_max)?, &reference));
            diffs.extend(diff_report("lattice", &hnum_lattice(n_max)?, &reference));
            diffs.extend(diff_report("strata", &strata_table(n_max.min(STRATA_MAX_N)), &reference));
            if !diffs.is_empty() {
                return Err(Failure::Check(format!("numeric routes disagree:\n{}", diffs.join("\n"))));
            }
            reference
        }
    };
    Ok(render_numeric(&table, cfg.format))
}

fn cmd_strata(args: &StrataArgs) -> Outcome {
    let summary = strata_summary(args.n as usize, args.count_only);
    Ok(match args.format {
        Format::Json => json(&StrataRecord::new(&summary, args.count_only)),
        Format::Csv => csv_strata(&summary),
        Format::Latex => latex_strata(&summary),
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool), Failure> {
    let fault = args.inject_fault.map(|InjectedFault::StirlingSign| Fault::StirlingSign);
    let report = run_verification(args.max_n as usize, fault)?;
    let mut out = format!("verify --max-n {}\n", report.max_n);
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status}  {:<28} {:>9.3}s  {}\n", c.name, c.elapsed.as_secs_f64(), c.detail));
    }
    match report.first_failure() {
        None => out.push_str(&format!("all {} checks passed\n", report.checks.len())),
        Some(c) => out.push_str(&format!("first failure: {} ({})\n", c.name, c.detail)),
    }
    Ok((out, report.passed()))
}

fn emit(text: &str, path: Option<&PathBuf>) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, path) = match &cli.command {
        Command::Table(c) => (cmd_table(c).map(|s| (s, true)), c.output.as_ref()),
        Command::Numeric(c) => (cmd_numeric(c).map(|s| (s, true)), c.output.as_ref()),
        Command::MSeries(c) => (cmd_m_series(c).map(|s| (s, true)), c.output.as_ref()),
        Command::Strata(a) => (cmd_strata(a).map(|s| (s, true)), a.output.as_ref()),
        Command::Verify(a) => (cmd_verify(a), a.output.as_ref()),
    };
    match result {
        Ok((text, passed)) => {
            if let Err(e) = emit(&text, path) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(EXIT_FAILURE);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILURE)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
