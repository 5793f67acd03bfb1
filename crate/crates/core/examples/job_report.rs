//! Runs a TOML job file through the library and prints both renderings.
//!
//!     cargo run --example job_report -- crates/core/examples/jobs/g2_case_a.toml

use std::path::PathBuf;

use flagstrat::cli::{render_text, run, JobConfig};

fn main() -> flagstrat::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/jobs/g2_case_a.toml")));
    let config = JobConfig::load(&path)?;
    let report = run(&config)?;
    print!("{}", render_text(&report));
    println!("\n{} bytes of JSON, {} failed checks", report.to_json().len(), report.failures().len());
    Ok(())
}
