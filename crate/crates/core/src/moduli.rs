//! Framed points of the moduli spaces for `Λ(3,6)` and `Λ(4,4)`, realized as
//! `k × N` column matrices inside `Gr(3,9)` and `Gr(4,8)`.
//!
//! The columns are the framed vectors themselves; nothing is quotiented out.
//! A point is valid when every cyclically consecutive `k × k` minor is
//! nonzero and every loop action of its family is defined at it.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{torus_word, BraidWord};
use crate::error::{Error, Result};
use crate::field::{Field, FieldScalar};
use crate::linalg::{det_of_columns, Matrix, Subspace, Vector};
use crate::monodromy;

/// Retry bound for [`random_point`].
pub const MAX_SAMPLING_ATTEMPTS: usize = 10_000;

/// Rational samples use integer entries in `[-Q_SAMPLE_BOUND, Q_SAMPLE_BOUND]`.
pub const Q_SAMPLE_BOUND: i64 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `Λ(3,6)`, braid `(σ1σ2)^9`, points of `Gr(3,9)`.
    T36,
    /// `Λ(4,4)`, braid `(σ1σ2σ3)^8`, points of `Gr(4,8)`.
    T44,
}

impl Family {
    pub fn k(self) -> usize {
        match self {
            Family::T36 => 3,
            Family::T44 => 4,
        }
    }

    pub fn n(self) -> usize {
        match self {
            Family::T36 => 9,
            Family::T44 => 8,
        }
    }

    /// The braid word whose Bott–Samelson cell this family parametrizes.
    pub fn braid(self) -> BraidWord {
        match self {
            Family::T36 => torus_word(3, 9),
            Family::T44 => torus_word(4, 8),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::T36 => "T36",
            Family::T44 => "T44",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T36" => Ok(Family::T36),
            "T44" => Ok(Family::T44),
            _ => Err(Error::BadToken(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliPoint {
    family: Family,
    columns: Matrix,
}

impl ModuliPoint {
    pub fn new(family: Family, columns: Matrix) -> Result<Self> {
        if columns.rows() != family.k() || columns.cols() != family.n() {
            return Err(Error::DimensionMismatch(format!(
                "{family} needs a {}x{} matrix, got {}x{}",
                family.k(),
                family.n(),
                columns.rows(),
                columns.cols()
            )));
        }
        Ok(Self { family, columns })
    }

    pub fn from_vectors(family: Family, field: Field, vectors: &[Vector]) -> Result<Self> {
        if vectors.len() != family.n() {
            return Err(Error::DimensionMismatch(format!(
                "{family} needs {} vectors, got {}",
                family.n(),
                vectors.len()
            )));
        }
        Self::new(family, Matrix::from_columns(field, family.k(), vectors)?)
    }

    /// Builds a point from integer columns.
    pub fn from_ints(family: Family, field: Field, columns: &[Vec<i64>]) -> Result<Self> {
        let vs: Vec<Vector> = columns
            .iter()
            .map(|c| c.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_vectors(family, field, &vs)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn field(&self) -> Field {
        self.columns.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.columns
    }

    /// Column `v_j`, 1-based, read cyclically.
    pub fn v(&self, j: usize) -> Vector {
        let n = self.family.n();
        self.columns.column((j + n - 1) % n)
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.columns.columns()
    }

    /// Determinant of the columns at the given 1-based indices, in the order
    /// given (unsorted and cyclic indices allowed).
    pub fn minor(&self, idx: &[usize]) -> Result<FieldScalar> {
        if idx.len() != self.family.k() {
            return Err(Error::BadIndex(
                idx.to_vec(),
                format!("need {} indices", self.family.k()),
            ));
        }
        let cols: Vec<Vector> = idx.iter().map(|&j| self.v(j)).collect();
        let refs: Vec<&Vector> = cols.iter().collect();
        det_of_columns(self.field(), &refs)
    }

    /// Maps every entry into `field` (e.g. reduces a rational point mod p).
    pub fn to_field(&self, field: Field) -> Result<ModuliPoint> {
        let vs = self
            .vectors()
            .iter()
            .map(|c| {
                c.iter()
                    .map(|x| field.convert(x))
                    .collect::<Result<Vector>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_vectors(self.family, field, &vs)
    }

    pub fn scaled(&self, lambda: &FieldScalar) -> ModuliPoint {
        let vs: Vec<Vector> = self
            .vectors()
            .iter()
            .map(|c| c.iter().map(|x| x * lambda).collect())
            .collect();
        Self::from_vectors(self.family, self.field(), &vs).expect("same shape")
    }

    fn to_file(&self) -> PointFile {
        PointFile {
            family: self.family,
            field: self.field(),
            columns: self
                .vectors()
                .iter()
                .map(|c| c.iter().map(FieldScalar::to_bare).collect())
                .collect(),
        }
    }

    fn from_file(file: PointFile) -> Result<ModuliPoint> {
        let field = match file.field {
            Field::Fp { p } => Field::prime(p)?,
            Field::Q => Field::Q,
        };
        let vs = file
            .columns
            .iter()
            .map(|c| c.iter().map(|s| field.parse(s)).collect::<Result<Vector>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_vectors(file.family, field, &vs)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_file())?)
    }

    pub fn from_json(text: &str) -> Result<ModuliPoint> {
        Self::from_file(serde_json::from_str(text)?)
    }
}

impl Serialize for ModuliPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ModuliPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::from_file(PointFile::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// On-disk point format. Entries are scalar strings in the declared field.
#[derive(Debug, Serialize, Deserialize)]
struct PointFile {
    family: Family,
    field: Field,
    columns: Vec<Vec<String>>,
}

/// Strictly increasing 1-based column indices, one per row of the point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlueckerIndex(Vec<usize>);

impl PlueckerIndex {
    pub fn new(family: Family, idx: &[usize]) -> Result<Self> {
        if idx.len() != family.k() {
            return Err(Error::BadIndex(
                idx.to_vec(),
                format!("{family} needs {} indices", family.k()),
            ));
        }
        if idx.iter().any(|&i| i == 0 || i > family.n()) {
            return Err(Error::BadIndex(
                idx.to_vec(),
                format!("indices must be in 1..={}", family.n()),
            ));
        }
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadIndex(
                idx.to_vec(),
                "indices must be strictly increasing".into(),
            ));
        }
        Ok(Self(idx.to_vec()))
    }

    /// Parses `1,4,7` or `147` style indices.
    pub fn parse(family: Family, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        let idx: Vec<usize> = if parts.len() == 1 && parts[0].len() == family.k() {
            parts[0]
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::BadToken(s.into()))
                })
                .collect::<Result<_>>()?
        } else {
            parts
                .iter()
                .map(|t| t.parse().map_err(|_| Error::BadToken(s.into())))
                .collect::<Result<_>>()?
        };
        Self::new(family, &idx)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// All `N choose k` increasing index sets in lexicographic order.
    pub fn all(family: Family) -> Vec<PlueckerIndex> {
        fn rec(
            start: usize,
            n: usize,
            k: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<PlueckerIndex>,
        ) {
            if cur.len() == k {
                out.push(PlueckerIndex(cur.clone()));
                return;
            }
            for i in start..=n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, family.n(), family.k(), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for PlueckerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P")?;
        for i in &self.0 {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

pub fn pluecker(p: &ModuliPoint, idx: &PlueckerIndex) -> Result<FieldScalar> {
    if idx.0.len() != p.family.k() || idx.0.iter().any(|&i| i > p.family.n()) {
        return Err(Error::BadIndex(
            idx.0.clone(),
            format!("not an index for {}", p.family),
        ));
    }
    p.minor(&idx.0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    /// `(first index, value)` of each cyclic consecutive minor `P_{i,…,i+k-1}`.
    pub minors: Vec<(usize, FieldScalar)>,
    pub minors_nonzero: bool,
    /// Whether the family's loop maps are defined at the point. Only
    /// computed when the minors are all nonzero.
    pub loops_defined: bool,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.minors_nonzero && self.loops_defined
    }
}

pub fn cyclic_minors(p: &ModuliPoint) -> Vec<(usize, FieldScalar)> {
    let (k, n) = (p.family.k(), p.family.n());
    (1..=n)
        .map(|i| {
            let idx: Vec<usize> = (0..k).map(|t| i + t).collect();
            (i, p.minor(&idx).expect("k indices"))
        })
        .collect()
}

pub fn validate_point(p: &ModuliPoint) -> ValidityReport {
    let minors = cyclic_minors(p);
    let minors_nonzero = minors.iter().all(|(_, m)| !m.is_zero());
    let loops_defined = minors_nonzero && monodromy::loops_defined(p);
    ValidityReport {
        minors,
        minors_nonzero,
        loops_defined,
    }
}

/// Deterministic rejection sampler. Residues are uniform in `[0, p)`;
/// rationals are integers in `[-Q_SAMPLE_BOUND, Q_SAMPLE_BOUND]`.
pub fn random_point(family: Family, field: Field, seed: u64) -> Result<ModuliPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_SAMPLING_ATTEMPTS {
        let cols: Vec<Vector> = (0..family.n())
            .map(|_| {
                (0..family.k())
                    .map(|_| match field {
                        Field::Fp { p } => field.from_i64(rng.gen_range(0..p) as i64),
                        Field::Q => field.from_i64(rng.gen_range(-Q_SAMPLE_BOUND..=Q_SAMPLE_BOUND)),
                    })
                    .collect()
            })
            .collect();
        let point = ModuliPoint::from_vectors(family, field, &cols)?;
        if validate_point(&point).is_valid() {
            return Ok(point);
        }
    }
    Err(Error::SamplingExhausted(MAX_SAMPLING_ATTEMPTS))
}

/// A complete flag `V^(1) ⊂ … ⊂ V^(k-1)` in `field^k`.
pub type Flag = Vec<Subspace>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagTuple {
    pub ambient: usize,
    pub flags: Vec<Flag>,
}

impl FlagTuple {
    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }
}

/// Reconstructs the Bott–Samelson flag tuple along `(σ1⋯σ_{k-1})^N`.
///
/// The word splits into `N` blocks of `k - 1` letters, block `j` carrying the
/// line `⟨v_j⟩`. At offset `r` inside block `j` the level-`d` subspace is
///
/// * `⟨v_j, …, v_{j+d-1}⟩` when `d ≤ r + 1`,
/// * `⟨v_{j-1}, …, v_{j+d-2}⟩` otherwise,
///
/// indices cyclic. For `k = 3` this reads `V^(1)_{2j-1} = V^(1)_{2j} = ⟨v_j⟩`
/// and `V^(2)_{2j} = V^(2)_{2j+1} = ⟨v_j, v_{j+1}⟩`. Passing from flag `m`
/// to flag `m + 1` changes exactly the level named by letter `m + 1`, so the
/// line moves at `σ1`, the plane at `σ2` and the 3-space at `σ3`.
pub fn flags_from_point(p: &ModuliPoint) -> Result<FlagTuple> {
    let report = validate_point(p);
    if !report.minors_nonzero {
        let bad: Vec<usize> = report
            .minors
            .iter()
            .filter(|(_, m)| m.is_zero())
            .map(|(i, _)| *i)
            .collect();
        return Err(Error::InvalidPoint(format!(
            "cyclic minors vanish at {bad:?}"
        )));
    }
    let (k, n) = (p.family.k(), p.family.n());
    let field = p.field();
    let mut flags = Vec::with_capacity(n * (k - 1));
    for j in 1..=n {
        for r in 0..k - 1 {
            let mut flag = Vec::with_capacity(k - 1);
            for d in 1..k {
                let first = if d <= r + 1 { j } else { j + n - 1 };
                let vs: Vec<Vector> = (0..d).map(|t| p.v(first + t)).collect();
                flag.push(Subspace::span(field, k, &vs)?);
            }
            flags.push(flag);
        }
    }
    Ok(FlagTuple { ambient: k, flags })
}

/// Checks the cyclic Bott–Samelson conditions of `f` along `w`: every flag
/// is complete and nested, and flags `m` and `m + 1` (cyclically) differ in
/// exactly the subspace whose dimension is letter `m + 1`.
pub fn validate_bott_samelson(f: &FlagTuple, w: &BraidWord) -> Result<bool> {
    if f.len() != w.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} flags for a word of length {}",
            f.len(),
            w.len()
        )));
    }
    let k = f.ambient;
    if w.strands() as usize != k {
        return Err(Error::DimensionMismatch(format!(
            "flags in dimension {k} for a braid on {} strands",
            w.strands()
        )));
    }
    for flag in &f.flags {
        if flag.len() != k - 1 {
            return Ok(false);
        }
        for (d, s) in flag.iter().enumerate() {
            if s.ambient() != k || s.dim() != d + 1 {
                return Ok(false);
            }
            if d > 0 && !flag[d - 1].is_subspace_of(s) {
                return Ok(false);
            }
        }
    }
    let l = f.len();
    for m in 0..l {
        let next = (m + 1) % l;
        let level = w.letters()[next] as usize;
        for d in 1..k {
            let same = f.flags[m][d - 1] == f.flags[next][d - 1];
            if same == (d == level) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
