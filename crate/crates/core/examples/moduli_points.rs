//! Sampling framed points of Gr(3,9) and Gr(4,8), their validity reports,
//! Plücker coordinates and the JSON point format.
//!
//! ```text
//! cargo run --example moduli_points
//! ```

use legmon::moduli::cyclic_minors;
use legmon::{pluecker, random_point, validate_point, Family, Field, ModuliPoint, PlueckerIndex};

fn main() -> legmon::Result<()> {
    let p = random_point(Family::T36, Field::Q, 2024)?;
    println!("{}", p.matrix());
    let report = validate_point(&p);
    for (i, m) in &report.minors {
        println!("cyclic minor at {i}: {m}");
    }
    println!("valid: {}", report.is_valid());

    for idx in ["147", "258", "369"] {
        let idx = PlueckerIndex::parse(Family::T36, idx)?;
        println!("{idx} = {}", pluecker(&p, &idx)?);
    }

    let f = Field::prime(998_244_353)?;
    let reduced = p.to_field(f)?;
    println!(
        "\nreduced mod 998244353, still valid: {}",
        validate_point(&reduced).is_valid()
    );

    let q = random_point(Family::T44, f, 1)?;
    let json = q.to_json()?;
    println!("{json}");
    assert_eq!(ModuliPoint::from_json(&json)?, q);
    println!("Gr(4,8) minors: {}", cyclic_minors(&q).len());
    Ok(())
}
