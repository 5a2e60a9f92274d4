//! Runs the full verification pipeline on the bundled configuration.

use k3lat::cli::{commands::verify_table, verify_paper, Config, Options};

pub fn run_example() -> k3lat::Result<()> {
    let config = Config::parse(include_str!("../configs/lambda.json"))
        .map_err(|e| k3lat::Error::Hypothesis(e.to_string()))?;
    let report = verify_paper(&config, &Options::default());
    for line in verify_table(&report) {
        println!("{line}");
    }
    println!("exit code {}", report.exit_code());
    Ok(())
}

#[allow(dead_code)]
fn main() -> k3lat::Result<()> {
    run_example()
}
