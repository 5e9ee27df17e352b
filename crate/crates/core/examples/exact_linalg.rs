//! Exact scalars, determinants, subspace intersections and the Λ²
//! normalization used by the loop maps, over ℚ and 𝔽p.
//!
//! ```text
//! cargo run --example exact_linalg
//! ```

use legmon::linalg::{determinant, intersect, wedge_normalize, Matrix, Subspace, Vector};
use legmon::Field;

fn vector(field: Field, xs: &[i64]) -> Vector {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

fn main() -> legmon::Result<()> {
    let f7 = Field::prime(7)?;
    let three = f7.from_i64(3);
    println!("3⁻¹ in F7 = {}", three.inverse()?);
    println!(
        "1/3 reduced mod 7 = {}",
        f7.convert(&Field::Q.parse("1/3")?)?
    );

    for field in [Field::Q, Field::prime(2_147_483_647)?] {
        println!("\nover {field}");
        let cols = [
            vector(field, &[2, 0, 1]),
            vector(field, &[1, 3, 0]),
            vector(field, &[0, 1, 4]),
        ];
        let m = Matrix::from_columns(field, 3, &cols)?;
        println!("det = {}", determinant(&m)?);

        let e = |i: usize| {
            let mut v = vector(field, &[0, 0, 0]);
            v[i] = field.one();
            v
        };
        let plane = Subspace::span(field, 3, &[e(0), e(1)])?;
        let other = Subspace::span(field, 3, &[e(2), vector(field, &[1, 1, 1])])?;
        let line = intersect(&plane, &other)?;
        println!("<e1,e2> ∩ <e3,e1+e2+e3> = {line}");

        let dir = line.basis_vectors().remove(0);
        let u = wedge_normalize(&e(0), &e(1), &dir)?;
        println!(
            "normalized so that e1∧e2 = e2∧u: u = {}",
            legmon::linalg::format_vector(&u)
        );
    }
    Ok(())
}
