//! Replays the built-in Legendrian loops and a hand-written move script.
//!
//! ```text
//! cargo run --example loop_scripts
//! ```

use legmon::braid::{parse_script, torus_word};
use legmon::{builtin_script, verify_loop, Builtin, MoveScript};

const KALMAN: &str = "\
# δ² on (σ1σ2)^9: two cyclic shifts
shift
shift
";

fn main() -> legmon::Result<()> {
    let sigma1 = builtin_script(Builtin::Sigma1, 2, None)?;
    println!("{}", sigma1.to_source());
    println!("{}\n", verify_loop(&sigma1)?);

    for name in [Builtin::Xi1, Builtin::Xi2, Builtin::Xi3] {
        for s in 1..=3 {
            let script = builtin_script(name, s, None)?;
            let report = verify_loop(&script)?;
            println!(
                "{name} s={s}: {} moves on {} letters, loop: {}",
                script.moves.len(),
                script.base.len(),
                report.is_loop
            );
        }
    }

    let custom = MoveScript::new(torus_word(3, 9), parse_script(KALMAN)?);
    println!("\ncustom script closes: {}", verify_loop(&custom)?.is_loop);

    match parse_script("shift\nr3x 4") {
        Err(e) => println!("parse error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
