//! Witness search for every nontrivial reduced word of `ℤ3 ∗ ℤ2` up to six
//! syllables.
//!
//! ```text
//! cargo run --release --example faithfulness
//! ```

use legmon::default_field;
use legmon::explorer::{
    faithfulness_sweep, DEFAULT_MAX_SYLLABLES, DEFAULT_POINTS, DEFAULT_PROBE_BUDGET,
    DEFAULT_SWEEP_SEED,
};

fn main() -> legmon::Result<()> {
    let report = faithfulness_sweep(
        DEFAULT_MAX_SYLLABLES,
        DEFAULT_PROBE_BUDGET,
        DEFAULT_POINTS,
        DEFAULT_SWEEP_SEED,
        default_field()?,
    )?;
    for w in &report.witnesses {
        println!(
            "{:<24} probe {:<12} {} != {}",
            w.word.to_string(),
            w.probe.to_string(),
            w.lhs_q,
            w.rhs_q
        );
    }
    println!(
        "separated {}/{} words ({:.0}%)",
        report.separated,
        report.words,
        100.0 * report.fraction
    );
    for w in &report.unseparated {
        println!("unseparated: {w}");
    }
    Ok(())
}
