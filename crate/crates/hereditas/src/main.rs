use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hereditas::job::{demo_spec, run_job, verify_report, JobSpec, Report};

/// Exact-arithmetic workbench for splitting certificates, Ext/Tor duality
/// and torsion-class verification over Z, Z/n, F_p and finite-dimensional
/// F_p-algebras.
#[derive(Parser)]
#[command(name = "hereditas", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a JSON job specification.
    Run {
        spec: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Re-verify the certificates in a report by multiplication alone.
    Verify { report: PathBuf },
    /// Run a built-in job: z, z4, z6, f2, a2-quiver.
    Demo {
        name: String,
        #[command(flatten)]
        overrides: Overrides,
    },
}

#[derive(clap::Args)]
struct Overrides {
    /// Random seed for sampled searches.
    #[arg(long)]
    seed: Option<u64>,
    /// Maximum matrix dimension for bounded searches.
    #[arg(long)]
    bound: Option<usize>,
    /// Worker-thread hint; jobs here are small enough to run on one.
    #[arg(long)]
    jobs: Option<usize>,
    /// Report destination (defaults to the job's output path or stdout).
    #[arg(long)]
    output: Option<PathBuf>,
}

fn apply_overrides(job: &mut JobSpec, ov: &Overrides) {
    if let Some(seed) = ov.seed {
        job.seed = Some(seed);
    }
    if let Some(b) = ov.bound {
        let mut bound = job.bound.clone().unwrap_or_default();
        bound.max_rows = b;
        bound.max_cols = b;
        job.bound = Some(bound);
    }
    if let Some(path) = &ov.output {
        job.output = Some(path.display().to_string());
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)
}

fn emit(report: &Report) -> Result<u8, hereditas::Error> {
    let json = serde_json::to_string_pretty(report)?;
    println!("{json}");
    Ok(report.exit_code as u8)
}

fn execute(mut job: JobSpec, ov: &Overrides) -> Result<u8, hereditas::Error> {
    apply_overrides(&mut job, ov);
    let report = run_job(&job)?;
    if let Some(path) = &job.output {
        let json = serde_json::to_string_pretty(&report)?;
        write_atomic(Path::new(path), json.as_bytes())?;
        eprintln!("report written to {path}");
        Ok(report.exit_code as u8)
    } else {
        emit(&report)
    }
}

fn run() -> Result<u8, hereditas::Error> {
    match Cli::parse().command {
        Command::Run { spec, overrides } => {
            let text = std::fs::read_to_string(&spec)?;
            let job: JobSpec = serde_json::from_str(&text)?;
            execute(job, &overrides)
        }
        Command::Verify { report } => {
            let text = std::fs::read_to_string(&report)?;
            let report: Report = serde_json::from_str(&text)?;
            let outcome = verify_report(&report)?;
            match outcome.failure {
                None => {
                    println!("verified {} certificate(s)", outcome.checked);
                    Ok(0)
                }
                Some(what) => {
                    println!("{what}");
                    Ok(1)
                }
            }
        }
        Command::Demo { name, overrides } => {
            let job = demo_spec(&name).ok_or_else(|| {
                hereditas::Error::BadInput(format!(
                    "unknown demo {name:?} (available: z, z4, z6, f2, a2-quiver)"
                ))
            })?;
            execute(job, &overrides)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
