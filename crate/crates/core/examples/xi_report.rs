//! Observational table for the Ξ loops on Gr(4,8): which seed Plückers
//! pull back to Plückers, and whether Ξ1Ξ2Ξ1 and Ξ2Ξ1Ξ2 agree on them.
//!
//! ```text
//! cargo run --release --example xi_report
//! ```

use legmon::default_field;
use legmon::explorer::{xi_pluecker_report, DEFAULT_POINTS};

fn main() -> legmon::Result<()> {
    let r = xi_pluecker_report(DEFAULT_POINTS, 0, default_field()?)?;
    println!(
        "audited {} exchange steps, {} failures",
        r.steps_checked, r.step_check_failures
    );
    for row in r.pullbacks.iter().filter(|x| !x.equals.is_empty()) {
        println!(
            "{:<10} {} ↦ {}",
            row.word.to_string(),
            row.pluecker,
            row.equals.join(", ")
        );
    }
    println!("\nX1 X2 X1 vs X2 X1 X2");
    for c in &r.braid_comparison {
        println!(
            "  {}  {:>2}/{}  {}",
            c.pluecker, c.equal_points, c.total, c.verdict
        );
    }
    Ok(())
}
