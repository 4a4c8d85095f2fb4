//! Batch command-line frontend: compute/export the triangle, run any
//! verification, ingest OEIS b-files, emit machine-readable reports.
//!
//! Exit codes: 0 verified, 1 violation found, 2 usage or domain error,
//! 3 undecided at the precision cap. `JLCERT_THREADS` caps internal
//! parallelism.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use jlcert::bfile::ingest_bfile;
use jlcert::oeis::compare_oeis;
use jlcert::table_io;
use jlcert::ReportDocument;
use jlcert_core::certifier::{self, CertifyConfig};
use jlcert_core::oracle;
use jlcert_core::recurrences::all_identities;
use jlcert_core::report::VerificationReport;
use jlcert_core::triangle::{scan_delta_signs, scan_log_concavity, Engine, JLTable};

#[derive(Parser)]
#[command(
    name = "jlcert",
    version,
    about = "Exact computation and verification of the Jaco-Lucas triangle (OEIS A245962)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the triangle and print it
    Table(TableArgs),
    /// Run a verification suite and report
    Verify(VerifyArgs),
    /// Cross-check the closed form against brute-force enumeration
    Oracle(OracleArgs),
    /// Compare against local OEIS b-files
    Oeis {
        #[command(subcommand)]
        command: OeisCommand,
    },
}

#[derive(Args)]
struct TableArgs {
    /// Deepest row to compute
    #[arg(long, default_value_t = 18)]
    n_max: i64,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    /// Construction engine
    #[arg(long, value_enum, default_value_t = EngineArg::RecColumns)]
    engine: EngineArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    ClosedForm,
    RecColumns,
    RecRows,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::ClosedForm => Engine::ClosedForm,
            EngineArg::RecColumns => Engine::RecColumns,
            EngineArg::RecRows => Engine::RecRows,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(value_enum)]
    what: VerifyWhat,
    /// Scan depth (defaults: 300 for bound scans, 500 for table scans)
    #[arg(long)]
    n_max: Option<i64>,
    /// Range of the diagonal-recurrence checks
    #[arg(long)]
    k_max: Option<i64>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyWhat {
    LogConcavity,
    Mode,
    Recurrences,
    Bounds,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct OracleArgs {
    /// Deepest string length to enumerate
    #[arg(long, default_value_t = 14)]
    n_max: i64,
    /// Enumeration cap (the search visits about 2^n nodes)
    #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
    cap: i64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Subcommand)]
enum OeisCommand {
    /// Compare a local b-file against the computed triangle (A245962)
    /// or run empirical row scans (A037027, A073370)
    Compare {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long)]
        id: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Table(args) => run_table(args),
        Command::Verify(args) => run_verify(args),
        Command::Oracle(args) => run_oracle(args),
        Command::Oeis { command } => run_oeis(command),
    };
    match code {
        Ok(c) => ExitCode::from(c as u8),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Honors `JLCERT_THREADS` as a cap on internal parallelism.
fn init_thread_pool() {
    if let Ok(v) = std::env::var("JLCERT_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn run_table(args: TableArgs) -> Result<i32, String> {
    let table = JLTable::build(args.n_max, args.engine.into()).map_err(|e| e.to_string())?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match args.format {
        TableFormat::Csv => table_io::write_csv(&table, &mut out).map_err(|e| e.to_string())?,
        TableFormat::Json => {
            let doc = table_io::to_document(&table);
            serde_json::to_writer_pretty(&mut out, &doc).map_err(|e| e.to_string())?;
            writeln!(out).map_err(|e| e.to_string())?;
        }
    }
    Ok(0)
}

fn emit(doc: &ReportDocument, format: ReportFormat) -> Result<i32, String> {
    match format {
        ReportFormat::Text => print!("{}", doc.render_text()),
        ReportFormat::Json => {
            println!("{}", serde_json::to_string_pretty(doc).map_err(|e| e.to_string())?)
        }
    }
    Ok(doc.exit_code())
}

fn config_for(n_max: Option<i64>, k_max: Option<i64>) -> CertifyConfig {
    let mut c = CertifyConfig::default();
    if let Some(n) = n_max {
        c.cert_n_max = n;
        c.table_n_max = n;
        c.engine_check_n_max = c.engine_check_n_max.min(n);
        c.recurrence_n_max = c.recurrence_n_max.min(n);
        c.oracle_n_max = c.oracle_n_max.min(n);
        c.monotone_k_max = c.monotone_k_max.min(((n - 5) / 6).max(0));
        c.diag_k_max = c.diag_k_max.min(((n - 16) / 6).max(0));
        c.fallback_n_max = n;
    }
    if let Some(k) = k_max {
        c.diag_k_max = k;
        c.monotone_k_max = k;
    }
    c
}

fn run_verify(args: VerifyArgs) -> Result<i32, String> {
    let config = config_for(args.n_max, args.k_max);
    let mut params = BTreeMap::new();
    params.insert("n_max".into(), config.table_n_max.to_string());
    params.insert("k_max".into(), config.diag_k_max.to_string());

    let (name, report) = match args.what {
        VerifyWhat::All => (
            "verify all",
            certifier::certify_all(&config).map_err(|e| e.to_string())?,
        ),
        VerifyWhat::LogConcavity => {
            let table = build_table(config.table_n_max + 1)?;
            let mut report = certifier::certify_log_concavity(&table, config.table_n_max);
            let start = Instant::now();
            let mut check = scan_log_concavity(&table).into_check("log-concavity-scan");
            check.duration_ms = start.elapsed().as_millis();
            report.push(check);
            ("verify log-concavity", report)
        }
        VerifyWhat::Mode => {
            let table = build_table(config.table_n_max)?;
            let mut report = VerificationReport::new();
            report.push(certifier::verify_mode(&table, config.table_n_max));
            let (low, high) = scan_delta_signs(&table);
            report.push(low.into_check("delta-sign-low-region"));
            report.push(high.into_check("delta-sign-high-region"));
            ("verify mode", report)
        }
        VerifyWhat::Recurrences => {
            let depth = (config.recurrence_n_max + 2).max(6 * (config.diag_k_max + 2) + 4);
            let table = build_table(depth)?;
            let mut report = VerificationReport::new();
            for spec in all_identities() {
                let start = Instant::now();
                let mut check = spec.scan(&table, config.recurrence_n_max, config.diag_k_max);
                check.duration_ms = start.elapsed().as_millis();
                report.push(check);
            }
            ("verify recurrences", report)
        }
        VerifyWhat::Bounds => {
            let table = build_table(config.cert_n_max + 1)?;
            let mut report = certifier::verify_lower_bound(&table, config.cert_n_max);
            report.merge(certifier::verify_window_bounds(
                &table,
                config.cert_n_max,
                config.width_cap,
            ));
            report.push(certifier::verify_edge_bound_dominance(config.cert_n_max));
            ("verify bounds", report)
        }
    };
    emit(&ReportDocument::new(name, params, report), args.format)
}

fn build_table(n_max: i64) -> Result<JLTable, String> {
    JLTable::build(n_max, Engine::RecColumns).map_err(|e| e.to_string())
}

fn run_oracle(args: OracleArgs) -> Result<i32, String> {
    let start = Instant::now();
    let mut check =
        oracle::cross_check_oracle(args.n_max, args.cap).map_err(|e| e.to_string())?;
    check.duration_ms = start.elapsed().as_millis();
    let mut report = VerificationReport::new();
    report.push(check);
    let mut params = BTreeMap::new();
    params.insert("n_max".into(), args.n_max.to_string());
    params.insert("cap".into(), args.cap.to_string());
    emit(&ReportDocument::new("oracle", params, report), args.format)
}

fn run_oeis(command: OeisCommand) -> Result<i32, String> {
    match command {
        OeisCommand::Compare { bfile, id, format } => {
            let parsed = ingest_bfile(&bfile, Some(id.clone())).map_err(|e| e.to_string())?;
            let report = compare_oeis(&parsed, &id)?;
            let mut params = BTreeMap::new();
            params.insert("bfile".into(), bfile.display().to_string());
            params.insert("id".into(), id);
            emit(&ReportDocument::new("oeis compare", params, report), format)
        }
    }
}
