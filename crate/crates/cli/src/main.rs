//! Command-line front-end: reads a job document, runs the requested
//! analysis and prints it in human or machine form.
//!
//! Exit codes: 0 on success, 2 on any input error, 3 when `--strict` is
//! set and a printed section is UNKNOWN or skipped for lack of an asserted
//! hypothesis.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qhsing_core::{
    parse_job, render_report, run_job, JobSpec, ReportFormat, SingularityReport, TruncationPolicy,
    Verdict,
};

#[derive(Parser)]
#[command(
    name = "qhsing",
    version,
    about = "Singularity type, plurigenera and log Kodaira dimension of \
             quasihomogeneous complete intersections and Pfaffian rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the lc / l2lt / lt / rational verdicts
    Classify(JobArgs),
    /// Print the plurigenera table (delta_m, lambda_m)
    Plurigenera(JobArgs),
    /// Print the log Kodaira dimension and the log plurigenera
    Kodaira(JobArgs),
    /// Print the expanded Hilbert series coefficients
    Hilbert(JobArgs),
    /// Print the full report
    Report(JobArgs),
}

impl Command {
    fn args(&self) -> &JobArgs {
        match self {
            Command::Classify(a)
            | Command::Plurigenera(a)
            | Command::Kodaira(a)
            | Command::Hilbert(a)
            | Command::Report(a) => a,
        }
    }
}

#[derive(Args)]
struct JobArgs {
    /// Path to the job document (JSON)
    #[arg(long)]
    input: PathBuf,

    /// Override the job's table depth
    #[arg(long = "max-m", value_name = "INT")]
    max_m: Option<u64>,

    /// Override the truncation: "auto" or an integer
    #[arg(long, value_name = "INT|auto", value_parser = truncation_from_str)]
    truncation: Option<TruncationPolicy>,

    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Exit with status 3 when a hypothesis-gated verdict is UNKNOWN
    #[arg(long)]
    strict: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

fn truncation_from_str(s: &str) -> Result<TruncationPolicy, String> {
    if s == "auto" {
        return Ok(TruncationPolicy::Auto);
    }
    u64::from_str(s)
        .map(TruncationPolicy::Fixed)
        .map_err(|_| format!("expected \"auto\" or a non-negative integer, got \"{s}\""))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command) -> Result<ExitCode, String> {
    let args = command.args();
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| format!("cannot read {}: {e}", args.input.display()))?;
    let mut job = parse_job(&text).map_err(|e| e.to_string())?;
    if let Some(max_m) = args.max_m {
        if max_m == 0 || max_m as i64 > qhsing_core::report::MAX_TABLE_DEPTH {
            return Err(format!(
                "--max-m must be in 1..={}",
                qhsing_core::report::MAX_TABLE_DEPTH
            ));
        }
        job.max_m = max_m;
    }
    if let Some(truncation) = args.truncation {
        job.truncation = truncation;
    }

    let (output, violation) = match command {
        Command::Hilbert(_) => (render_hilbert(&job, args.format)?, false),
        _ => {
            let report = run_job(&job).map_err(|e| e.to_string())?;
            let violation = strict_violation(command, &report);
            (render_section(command, &report, args.format), violation)
        }
    };

    emit(&args.input, args.format, &output)?;
    if args.strict && violation {
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

/// Write to stdout, or into the directory named by QHSING_OUTPUT_DIR.
fn emit(input: &Path, format: Format, output: &str) -> Result<(), String> {
    match std::env::var_os("QHSING_OUTPUT_DIR") {
        None => {
            print!("{output}");
            Ok(())
        }
        Some(dir) => {
            let stem = input
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "report".to_string());
            let ext = match format {
                Format::Human => "txt",
                Format::Machine => "json",
            };
            let path = PathBuf::from(dir).join(format!("{stem}.{ext}"));
            std::fs::write(&path, output)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
    }
}

fn unknown_for_missing_hypothesis(v: &Verdict) -> bool {
    v.reason().is_some_and(|r| r.contains("not asserted"))
}

/// A printed section is a strict violation when it is UNKNOWN or skipped
/// because of a hypothesis the user could have asserted.
fn strict_violation(command: &Command, report: &SingularityReport) -> bool {
    let verdicts = [
        &report.verdicts.lc,
        &report.verdicts.l2lt,
        &report.verdicts.lt,
        &report.verdicts.rational,
    ]
    .into_iter()
    .any(unknown_for_missing_hypothesis);
    let kbar_unknown = matches!(
        &report.kodaira.kbar,
        qhsing_core::KodairaDimension::Unknown { reason } if reason.contains("not asserted")
    );
    let plurigenera_skipped = report
        .diagnostics
        .iter()
        .any(|d| d.starts_with("plurigenera: skipped") && d.contains("not asserted"));
    match command {
        Command::Classify(_) => verdicts,
        Command::Plurigenera(_) => plurigenera_skipped,
        Command::Kodaira(_) => kbar_unknown,
        Command::Report(_) => verdicts || kbar_unknown || plurigenera_skipped,
        Command::Hilbert(_) => false,
    }
}

#[derive(Serialize)]
struct ClassifySection<'a> {
    n_a: i64,
    m0: u64,
    verdicts: &'a qhsing_core::Verdicts,
    diagnostics: &'a [String],
}

#[derive(Serialize)]
struct PlurigeneraSection<'a> {
    plurigenera: &'a [qhsing_core::PlurigeneraRow],
    diagnostics: &'a [String],
}

#[derive(Serialize)]
struct KodairaSection<'a> {
    kodaira: &'a qhsing_core::KodairaReport,
    diagnostics: &'a [String],
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("sections always serialize");
    out.push('\n');
    out
}

fn render_section(command: &Command, report: &SingularityReport, format: Format) -> String {
    if let Command::Report(_) = command {
        let fmt = match format {
            Format::Human => ReportFormat::Human,
            Format::Machine => ReportFormat::Machine,
        };
        return render_report(report, fmt);
    }
    match (command, format) {
        (Command::Classify(_), Format::Machine) => to_json(&ClassifySection {
            n_a: report.n_a,
            m0: report.m0,
            verdicts: &report.verdicts,
            diagnostics: &report.diagnostics,
        }),
        (Command::Classify(_), Format::Human) => {
            let mut out = String::new();
            out.push_str(&format!("N_A = {}   (m0 = {})\n", report.n_a, report.m0));
            out.push_str(&format!("lc       : {}\n", report.verdicts.lc));
            out.push_str(&format!("l2lt     : {}\n", report.verdicts.l2lt));
            out.push_str(&format!("lt       : {}\n", report.verdicts.lt));
            out.push_str(&format!("rational : {}\n", report.verdicts.rational));
            out
        }
        (Command::Plurigenera(_), Format::Machine) => to_json(&PlurigeneraSection {
            plurigenera: &report.plurigenera,
            diagnostics: &report.diagnostics,
        }),
        (Command::Plurigenera(_), Format::Human) => {
            let mut out = String::new();
            if report.plurigenera.is_empty() {
                out.push_str("plurigenera not computed:\n");
                for d in &report.diagnostics {
                    out.push_str(&format!("  - {d}\n"));
                }
            } else {
                out.push_str(&format!("{:>5} {:>12} {:>12}\n", "m", "delta", "lambda"));
                for row in &report.plurigenera {
                    out.push_str(&format!(
                        "{:>5} {:>12} {:>12}\n",
                        row.m,
                        row.delta.to_string(),
                        row.lambda.to_string()
                    ));
                }
            }
            out
        }
        (Command::Kodaira(_), Format::Machine) => to_json(&KodairaSection {
            kodaira: &report.kodaira,
            diagnostics: &report.diagnostics,
        }),
        (Command::Kodaira(_), Format::Human) => {
            let mut out = String::new();
            out.push_str(&format!("kbar = {}\n", report.kodaira.kbar));
            for p in &report.kodaira.pbar {
                out.push_str(&format!("pbar({}) = {}\n", p.m, p.value));
            }
            out
        }
        (Command::Report(_) | Command::Hilbert(_), _) => unreachable!("handled above"),
    }
}

fn render_hilbert(job: &JobSpec, format: Format) -> Result<String, String> {
    let (ring, shift) = job.build().map_err(|e| e.to_string())?;
    let t = job.resolve_truncation(&shift).map_err(|e| e.to_string())?;
    let series = ring.hilbert(t).map_err(|e| e.to_string())?;
    match format {
        Format::Machine => {
            let coeffs: Vec<serde_json::Value> = series
                .coeffs()
                .iter()
                .map(|c| {
                    serde_json::Number::from_str(&c.to_string())
                        .map(serde_json::Value::Number)
                        .expect("decimal integers parse as JSON numbers")
                })
                .collect();
            let doc = serde_json::json!({
                "truncation": t,
                "n_a": shift.n(),
                "coeffs": coeffs,
            });
            let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
            out.push('\n');
            Ok(out)
        }
        Format::Human => {
            let mut out = String::new();
            out.push_str(&format!("N_A = {}, truncation = {t}\n", shift.n()));
            out.push_str(&format!("{:>6} {:>14}\n", "degree", "dim"));
            for (k, c) in series.coeffs().iter().enumerate() {
                out.push_str(&format!("{:>6} {:>14}\n", k, c.to_string()));
            }
            Ok(out)
        }
    }
}
