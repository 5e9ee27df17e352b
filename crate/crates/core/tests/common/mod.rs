//! Oracles, strategies and property bodies shared by the property suite and
//! the acceptance run.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use legmon::linalg::{determinant, intersect, wedge2, wedge_normalize, Matrix, Subspace, Vector};
use legmon::{act_shift, act_sigma1, act_xi, random_point, Family, Field, FieldScalar};

pub type Check = Result<(), TestCaseError>;

pub const P31: u64 = 2_147_483_647;
pub const PRIMES: [u64; 4] = [2, 7, 65_537, P31];

pub fn fp() -> Field {
    Field::Fp { p: P31 }
}

pub fn scalar(field: Field) -> BoxedStrategy<FieldScalar> {
    match field {
        Field::Fp { p } => (0..p).prop_map(move |v| field.from_i64(v as i64)).boxed(),
        Field::Q => (-50i64..50, 1i64..20)
            .prop_map(|(n, d)| Field::Q.from_i64(n).div(&Field::Q.from_i64(d)).unwrap())
            .boxed(),
    }
}

pub fn any_field() -> impl Strategy<Value = Field> {
    prop_oneof![
        prop::sample::select(PRIMES.to_vec()).prop_map(|p| Field::Fp { p }),
        Just(Field::Q),
    ]
}

pub fn triple() -> impl Strategy<Value = (FieldScalar, FieldScalar, FieldScalar)> {
    any_field().prop_flat_map(|f| (scalar(f), scalar(f), scalar(f)))
}

pub fn small_matrix(field: Field, n: usize) -> BoxedStrategy<Matrix> {
    prop::collection::vec(-4i64..5, n * n)
        .prop_map(move |xs| {
            Matrix::new(field, n, n, xs.iter().map(|&x| field.from_i64(x)).collect()).unwrap()
        })
        .boxed()
}

pub fn any_small_matrix() -> impl Strategy<Value = Matrix> {
    (
        prop_oneof![
            Just(Field::Q),
            Just(Field::Fp { p: 7 }),
            Just(Field::Fp { p: P31 })
        ],
        1usize..5,
    )
        .prop_flat_map(|(f, n)| small_matrix(f, n))
}

pub fn int_vectors(dim: usize, max_len: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..3, dim), 0..max_len)
}

/// Σ over permutations of sign · Π a[σ(c), c].
pub fn leibniz(m: &Matrix) -> FieldScalar {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = m.rows();
    let f = m.field();
    let mut acc = f.zero();
    for p in perms(n) {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let mut term = f.one();
        for (c, &r) in p.iter().enumerate() {
            term = &term * m.get(r, c);
        }
        acc = if inversions % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// Counts words over {A, A2, B} of length ≤ n by generating every string and
/// keeping those where B and the A-syllables alternate.
pub fn brute_force_reduced(n: usize) -> usize {
    let alphabet = ["A", "A2", "B"];
    let alternates = |w: &Vec<&str>| w.windows(2).all(|p| (p[0] == "B") != (p[1] == "B"));
    let mut count = 0;
    let mut all: Vec<Vec<&str>> = vec![vec![]];
    for len in 0..=n {
        count += all.iter().filter(|w| alternates(w)).count();
        if len == n {
            break;
        }
        all = all
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |g| {
                    let mut x = w.clone();
                    x.push(*g);
                    x
                })
            })
            .collect();
    }
    count
}

pub fn field_axioms(a: &FieldScalar, b: &FieldScalar, c: &FieldScalar) -> Check {
    let f = a.field();
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a + &f.zero(), a.clone());
    prop_assert_eq!(a * &f.one(), a.clone());
    prop_assert!((a + &(-a)).is_zero());
    if a.is_zero() {
        prop_assert!(a.inverse().is_err());
    } else {
        prop_assert!((a * &a.inverse().unwrap()).is_one());
    }
    Ok(())
}

pub fn determinant_matches_leibniz(m: &Matrix) -> Check {
    prop_assert_eq!(determinant(m).unwrap(), leibniz(m));
    Ok(())
}

fn with_column(m: &Matrix, c: usize, v: Vector) -> Matrix {
    let mut cols = m.columns();
    cols[c] = v;
    Matrix::from_columns(m.field(), m.rows(), &cols).unwrap()
}

/// Swapping two columns negates, repeating one kills, and the determinant is
/// linear in column `a`.
pub fn determinant_alternating_multilinear(
    m: &Matrix,
    extra: &[i64],
    lambda: i64,
    a: usize,
    b: usize,
) -> Check {
    let f = m.field();
    let d = determinant(m).unwrap();
    if a != b {
        let mut cols = m.columns();
        cols.swap(a, b);
        let swapped = Matrix::from_columns(f, m.rows(), &cols).unwrap();
        prop_assert_eq!(determinant(&swapped).unwrap(), -&d);
        prop_assert!(determinant(&with_column(m, b, m.column(a)))
            .unwrap()
            .is_zero());
    }
    let x: Vector = extra.iter().map(|&v| f.from_i64(v)).collect();
    let l = f.from_i64(lambda);
    let mixed: Vector = m
        .column(a)
        .iter()
        .zip(&x)
        .map(|(c, y)| &(&l * c) + y)
        .collect();
    let lhs = determinant(&with_column(m, a, mixed)).unwrap();
    let rhs = &(&l * &d) + &determinant(&with_column(m, a, x)).unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn intersect_laws(xs: &[Vec<i64>], ys: &[Vec<i64>], f: Field) -> Check {
    let to = |vs: &[Vec<i64>]| -> Vec<Vector> {
        vs.iter()
            .map(|v| v.iter().map(|&x| f.from_i64(x)).collect())
            .collect()
    };
    let a = Subspace::span(f, 4, &to(xs)).unwrap();
    let b = Subspace::span(f, 4, &to(ys)).unwrap();
    let ab = intersect(&a, &b).unwrap();
    prop_assert_eq!(&ab, &intersect(&b, &a).unwrap());
    prop_assert_eq!(&intersect(&a, &a).unwrap(), &a);
    prop_assert!(ab.is_subspace_of(&a) && ab.is_subspace_of(&b));
    // dim(A ∩ B) = dim A + dim B - rank[A | B]
    let mut all = a.basis_vectors();
    all.extend(b.basis_vectors());
    let sum_rank = if all.is_empty() {
        0
    } else {
        Matrix::from_columns(f, 4, &all).unwrap().rank()
    };
    prop_assert_eq!(ab.dim(), a.dim() + b.dim() - sum_rank);
    Ok(())
}

pub fn wedge_normalize_exact(v1: &[i64], v2: &[i64], s: i64, t: i64) -> Check {
    let f = Field::Q;
    let v1: Vector = v1.iter().map(|&x| f.from_i64(x)).collect();
    let v2: Vector = v2.iter().map(|&x| f.from_i64(x)).collect();
    let dir: Vector = v1
        .iter()
        .zip(&v2)
        .map(|(a, b)| &(&f.from_i64(s) * a) + &(&f.from_i64(t) * b))
        .collect();
    match wedge_normalize(&v1, &v2, &dir) {
        Ok(u) => {
            prop_assert_eq!(wedge2(&v1, &v2), wedge2(&v2, &u));
            prop_assert!(wedge2(&u, &dir).iter().all(FieldScalar::is_zero));
        }
        Err(e) => {
            let flat = wedge2(&v1, &v2).iter().all(FieldScalar::is_zero)
                || wedge2(&v2, &dir).iter().all(FieldScalar::is_zero);
            prop_assert!(flat, "unexpected error {}", e);
        }
    }
    Ok(())
}

pub fn point_shift_by_n(seed: u64, j: i64) -> Check {
    let p = random_point(Family::T36, fp(), seed).unwrap();
    let mut x = p.clone();
    for _ in 0..9 {
        x = act_shift(&x, 1);
    }
    prop_assert_eq!(&x, &p);
    prop_assert_eq!(act_shift(&act_shift(&p, j), -j), p);
    Ok(())
}

pub fn sigma1_window_equivariance(seed: u64) -> Check {
    let p = random_point(Family::T36, fp(), seed).unwrap();
    prop_assert_eq!(
        act_sigma1(&act_shift(&p, 3)).unwrap(),
        act_shift(&act_sigma1(&p).unwrap(), 3)
    );
    Ok(())
}

pub fn xi_window_equivariance(seed: u64, i: u8) -> Check {
    let p = random_point(Family::T44, fp(), seed).unwrap();
    prop_assert_eq!(
        act_xi(&act_shift(&p, 4), i).unwrap(),
        act_shift(&act_xi(&p, i).unwrap(), 4)
    );
    Ok(())
}
