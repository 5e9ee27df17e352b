//! The pullback identities of A, Σ1 and B on P147, P258, P369, checked
//! exactly on random points over 𝔽p and on a few over ℚ.
//!
//! ```text
//! cargo run --release --example pullbacks
//! ```

use legmon::{act_word, pluecker, random_point, Family, Field, GroupWord, PlueckerIndex};

const IDENTITIES: [(&str, &str, &str); 7] = [
    ("A", "147", "258"),
    ("A2", "147", "369"),
    ("A A A", "147", "147"),
    ("S1", "369", "369"),
    ("S1", "147", "258"),
    ("B", "147", "369"),
    ("B B", "147", "147"),
];

fn main() -> legmon::Result<()> {
    let fields = [(Field::prime(2_147_483_647)?, 100), (Field::Q, 5)];
    for (word, i, j) in IDENTITIES {
        let w: GroupWord = word.parse()?;
        let (pi, pj) = (
            PlueckerIndex::parse(Family::T36, i)?,
            PlueckerIndex::parse(Family::T36, j)?,
        );
        let mut checked = 0;
        for (field, n) in fields {
            for seed in 0..n {
                let p = random_point(Family::T36, field, seed)?;
                assert_eq!(pluecker(&act_word(&p, &w)?, &pi)?, pluecker(&p, &pj)?);
                checked += 1;
            }
        }
        println!("P{i} ∘ ({word}) = P{j}   on {checked} points");
    }
    Ok(())
}
