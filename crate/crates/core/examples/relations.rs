//! The `ℤ3` and `ℤ2` relations `a³ = 1`, `b² = 1` checked on the orbit of
//! `Δ = P147`, with every probe of at most two syllables.
//!
//! ```text
//! cargo run --release --example relations
//! ```

use legmon::default_field;
use legmon::explorer::{verify_relations, DEFAULT_POINTS, DEFAULT_RELATIONS_SEED};

fn main() -> legmon::Result<()> {
    let report = verify_relations(DEFAULT_POINTS, DEFAULT_RELATIONS_SEED, default_field()?)?;
    for c in &report.checks {
        println!(
            "{:<4} probe {:<6} {:>3} pass {:>3} fail",
            c.relation,
            c.probe.to_string(),
            c.passed,
            c.failed
        );
    }
    println!(
        "resampled {} points; all passed: {}",
        report.resampled, report.all_passed
    );
    Ok(())
}
