//! Reconstructs the cyclic flag tuple of a framed point along
//! (σ1σ2)^9 and checks the relative-position conditions.
//!
//! ```text
//! cargo run --example bott_samelson
//! ```

use legmon::moduli::{flags_from_point, validate_bott_samelson};
use legmon::{random_point, Family, Field};

fn main() -> legmon::Result<()> {
    let p = random_point(Family::T36, Field::Q, 3)?;
    let flags = flags_from_point(&p)?;
    let word = Family::T36.braid();
    for (m, flag) in flags.flags.iter().enumerate() {
        println!("{m:>2} σ{}  {} ⊂ {}", word.letters()[m], flag[0], flag[1]);
    }
    println!("Bott–Samelson: {}", validate_bott_samelson(&flags, &word)?);

    let mut broken = flags.clone();
    broken.flags[5] = broken.flags[4].clone();
    println!(
        "with a repeated flag: {}",
        validate_bott_samelson(&broken, &word)?
    );

    let q = random_point(Family::T44, Field::Q, 3)?;
    let flags = flags_from_point(&q)?;
    println!(
        "Gr(4,8): {} flags, Bott–Samelson: {}",
        flags.len(),
        validate_bott_samelson(&flags, &Family::T44.braid())?
    );
    Ok(())
}
