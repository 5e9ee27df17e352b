//! Small exact linear algebra: matrices over a [`Field`], subspaces in a
//! canonical echelon form, intersections, and the `Λ²` normalization that
//! pins the new vector produced by each loop.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldScalar};

pub type Vector = Vec<FieldScalar>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldScalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<FieldScalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(x) = data.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(
                field.to_string(),
                x.field().to_string(),
            ));
        }
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds an `n × columns.len()` matrix; every column must have length `n`.
    pub fn from_columns(field: Field, n: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(field, n, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "column {c} has length {}, expected {n}",
                    col.len()
                )));
            }
            for (r, x) in col.iter().enumerate() {
                if x.field() != field {
                    return Err(Error::FieldMismatch(
                        field.to_string(),
                        x.field().to_string(),
                    ));
                }
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: FieldScalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[FieldScalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                (0..self.cols).fold(self.field.zero(), |acc, c| &acc + &(self.get(r, c) * &v[c]))
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref()
    }

    /// In-place reduced row echelon form; returns the rank.
    fn rref(&mut self) -> usize {
        let mut pivot_row = 0;
        for c in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(p) = (pivot_row..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            self.swap_rows(p, pivot_row);
            let inv = self.get(pivot_row, c).inverse().expect("pivot is nonzero");
            for j in c..self.cols {
                let x = self.get(pivot_row, j) * &inv;
                self.set(pivot_row, j, x);
            }
            for r in 0..self.rows {
                if r == pivot_row || self.get(r, c).is_zero() {
                    continue;
                }
                let f = self.get(r, c).clone();
                for j in c..self.cols {
                    let x = self.get(r, j) - &(&f * self.get(pivot_row, j));
                    self.set(r, j, x);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_bare()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact determinant by Gaussian elimination.
pub fn determinant(m: &Matrix) -> Result<FieldScalar> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut det = m.field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else {
            return Ok(m.field.zero());
        };
        if p != c {
            a.swap_rows(p, c);
            det = -det;
        }
        let pivot = a.get(c, c).clone();
        det = &det * &pivot;
        let inv = pivot.inverse()?;
        for r in c + 1..n {
            if a.get(r, c).is_zero() {
                continue;
            }
            let f = a.get(r, c) * &inv;
            for j in c..n {
                let x = a.get(r, j) - &(&f * a.get(c, j));
                a.set(r, j, x);
            }
        }
    }
    Ok(det)
}

/// Determinant of the square matrix with the given columns.
pub fn det_of_columns(field: Field, columns: &[&Vector]) -> Result<FieldScalar> {
    let n = columns.len();
    let owned: Vec<Vector> = columns.iter().map(|c| (*c).clone()).collect();
    determinant(&Matrix::from_columns(field, n, &owned)?)
}

/// A linear subspace of `field^n`, stored by a basis in reduced column
/// echelon form (pivots top-down), so equal subspaces have equal bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn span(field: Field, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        let mut rows = Matrix::from_columns(field, ambient, vectors)?.transpose();
        let rank = rows.rref();
        let basis: Vec<Vector> = (0..rank)
            .map(|r| (0..ambient).map(|c| rows.get(r, c).clone()).collect())
            .collect();
        Ok(Self {
            ambient,
            basis: Matrix::from_columns(field, ambient, &basis)?,
        })
    }

    pub fn zero(field: Field, ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(field, ambient, 0),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    pub fn field(&self) -> Field {
        self.basis.field
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.columns()
    }

    pub fn contains(&self, v: &[FieldScalar]) -> bool {
        let mut cols = self.basis_vectors();
        cols.push(v.to_vec());
        match Matrix::from_columns(self.field(), self.ambient, &cols) {
            Ok(m) => m.rank() == self.dim(),
            Err(_) => false,
        }
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis_vectors().iter().all(|v| other.contains(v))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self
            .basis_vectors()
            .iter()
            .map(|v| format_vector(v))
            .collect();
        write!(f, "<{}>", vs.join(", "))
    }
}

pub fn format_vector(v: &[FieldScalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_bare()).collect();
    format!("({})", parts.join(", "))
}

/// Null space of `m` (as a subspace of `field^cols`).
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let field = m.field;
    let mut a = m.clone();
    let rank = a.rref();
    let mut pivots = Vec::with_capacity(rank);
    for r in 0..rank {
        let c = (0..a.cols)
            .find(|&c| !a.get(r, c).is_zero())
            .expect("nonzero row has a pivot");
        pivots.push(c);
    }
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    let vectors: Vec<Vector> = free
        .iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); a.cols];
            v[fc] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a.get(r, fc);
            }
            v
        })
        .collect();
    Subspace::span(field, a.cols, &vectors).expect("kernel vectors have the right length")
}

pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch(format!(
            "ambient dimensions {} and {}",
            a.ambient, b.ambient
        )));
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(
            a.field().to_string(),
            b.field().to_string(),
        ));
    }
    let field = a.field();
    let n = a.ambient;
    let mut cols = a.basis_vectors();
    cols.extend(
        b.basis_vectors()
            .into_iter()
            .map(|v| v.iter().map(|x| -x).collect()),
    );
    let system = Matrix::from_columns(field, n, &cols)?;
    let ker = kernel_basis(&system);
    let da = a.dim();
    let vectors = ker
        .basis_vectors()
        .iter()
        .map(|x| a.basis.apply(&x[..da]))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(field, n, &vectors)
}

/// Coordinates of `x ∧ y` in `Λ²`, indexed by pairs `i < j` in
/// lexicographic order.
pub fn wedge2(x: &[FieldScalar], y: &[FieldScalar]) -> Vector {
    let n = x.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(&(&x[i] * &y[j]) - &(&x[j] * &y[i]));
        }
    }
    out
}

/// The multiple `u = c · direction` with `v1 ∧ v2 = v2 ∧ u`.
pub fn wedge_normalize(
    v1: &[FieldScalar],
    v2: &[FieldScalar],
    direction: &[FieldScalar],
) -> Result<Vector> {
    if v1.len() != v2.len() || v2.len() != direction.len() {
        return Err(Error::DimensionMismatch("wedge_normalize arguments".into()));
    }
    let target = wedge2(v1, v2);
    if target.iter().all(FieldScalar::is_zero) {
        return Err(Error::DegenerateNormalization("v1 ∧ v2 = 0".into()));
    }
    let unit = wedge2(v2, direction);
    let Some(k) = unit.iter().position(|x| !x.is_zero()) else {
        return Err(Error::DegenerateNormalization(
            "direction lies on the line of v2".into(),
        ));
    };
    let c = target[k].div(&unit[k])?;
    if target.iter().zip(&unit).any(|(t, u)| t != &(&c * u)) {
        return Err(Error::DegenerateNormalization(
            "direction is not in the plane of v1 and v2".into(),
        ));
    }
    Ok(direction.iter().map(|x| &c * x).collect())
}
