//! Builds the comparison reports, writes them as JSON, reloads them and runs
//! a convergence sweep.
//!
//! ```text
//! cargo run --release --example verify_reports [out-dir]
//! ```

use std::path::PathBuf;

use qwalk::verify::{convergence_sweep, Quantity};
use qwalk::{ComparisonReport, Scenario};

fn summarize(report: &ComparisonReport) {
    let worst = report
        .rows
        .iter()
        .max_by(|a, b| a.abs_error.total_cmp(&b.abs_error))
        .expect("non-empty report");
    println!(
        "{}: {} rows, worst {} r={:?} entry={:?} error {:.3e}, passes: {}",
        report.scenario.name,
        report.rows.len(),
        worst.quantity,
        worst.r,
        worst.entry,
        worst.abs_error,
        report.passes()
    );
}

fn main() -> qwalk::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let stamp = std::process::id();

    for scenario in [
        Scenario::hadamard_symmetric(1000),
        Scenario::grover_localized(1000),
    ] {
        let report = scenario.check(2, qwalk::quad::DEFAULT_TOLERANCE)?;
        summarize(&report);
        if let Some(loc) = report.localization {
            println!(
                "  min P(X_t=0) = {:.5} at t = {}, floor {:.5}",
                loc.min_probability, loc.t_at_min, loc.floor
            );
        }
        let path = dir.join(format!("{}-{stamp}.json", scenario.name));
        report.write_new(&path)?;
        let reloaded = ComparisonReport::from_json(&std::fs::read_to_string(&path)?)?;
        assert_eq!(reloaded, report);
        println!("  wrote and reloaded {}", path.display());
    }

    let sweep = convergence_sweep(
        &Scenario::hadamard_symmetric(0),
        &[125, 250, 500, 1000],
        Quantity::GMoment,
        Some(2),
        None,
    )?;
    for p in &sweep.convergence {
        println!("g-moment r=2, t = {:4}: error {:.3e}", p.t, p.abs_error);
    }
    println!(
        "final error no worse than initial: {:?}",
        sweep.final_not_worse
    );
    Ok(())
}
