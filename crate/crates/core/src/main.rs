use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use flagstrat::cli::{render_text, run, write_atomic, JobConfig, Task};
use flagstrat::Error;

/// Root-system combinatorics for elliptic orbits, driven by a TOML job file.
#[derive(Debug, Parser)]
#[command(name = "flagstrat", version)]
struct Args {
    /// Job configuration (TOML).
    #[arg(long)]
    config: PathBuf,
    /// Task to run; repeat to run several. Replaces the tasks in the config.
    #[arg(long = "task", value_name = "NAME")]
    tasks: Vec<Task>,
    /// Where to write the JSON report. Overrides `output` in the config.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_name = "N")]
    weyl_cap: Option<usize>,
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
    /// Print a plain-text rendering to stdout.
    #[arg(long)]
    text: bool,
}

fn execute(args: Args) -> Result<i32, Error> {
    let mut config = JobConfig::load(&args.config)?;
    if !args.tasks.is_empty() {
        config.tasks = args.tasks;
    }
    if let Some(out) = args.out {
        config.output = Some(out);
    }
    if let Some(cap) = args.weyl_cap {
        config.weyl_cap = cap;
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    let report = run(&config)?;
    let json = report.to_json();
    match &config.output {
        Some(path) => write_atomic(path, &json)?,
        None if !args.text => print!("{json}"),
        None => {}
    }
    if args.text {
        print!("{}", render_text(&report));
    }
    let failures = report.failures();
    for f in &failures {
        eprintln!("check failed: {f}");
    }
    Ok(if failures.is_empty() { 0 } else { 4 })
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            let body = serde_json::json!({ "error": e.to_string(), "exit_code": e.exit_code() });
            eprintln!("{body}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
