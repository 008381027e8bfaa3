//! Runs the full verification suite programmatically and prints the report
//! table, like `nilo verify` does.
//!
//! Run with `cargo run --release --example verify_all`.

use nilpotent_orbits::verify::{run_check, CheckId, DEFAULT_A_OFFSET};

fn main() -> nilpotent_orbits::Result<()> {
    let max_rank = 6;
    println!(
        "{:<5} {:<6} {:>10} {:>9} {:>11}  description",
        "check", "result", "instances", "failures", "elapsed_ms"
    );
    let mut all_clean = true;
    for id in CheckId::ALL {
        let report = run_check(id, max_rank, DEFAULT_A_OFFSET)?;
        all_clean &= report.passed();
        println!(
            "{:<5} {:<6} {:>10} {:>9} {:>11}  {}",
            report.id.to_string(),
            if report.passed() { "PASS" } else { "FAIL" },
            report.instances,
            report.failures,
            report.elapsed.as_millis(),
            report.id.description(),
        );
        for witness in &report.witnesses {
            println!("      witness: {:?}", witness.input);
        }
    }
    println!(
        "\n{}",
        if all_clean {
            "every check passed"
        } else {
            "FAILING CHECKS FOUND"
        }
    );
    Ok(())
}
