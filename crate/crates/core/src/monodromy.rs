//! Exact point maps induced by the Legendrian loops.
//!
//! Every loop except the shift replaces, in each window of `k` columns, one
//! vector by a new vector `u` cut out by an intersection
//!
//! ```text
//! u ∈ ⟨v_i, v_{i+1}⟩ ∩ ⟨v_{i+2}, …, v_{i+k}⟩,     v_i ∧ v_{i+1} = v_{i+1} ∧ u
//! ```
//!
//! and the window `(…, v_i, v_{i+1}, …)` becomes `(…, v_{i+1}, u, …)`.
//! `Σ1` is the case `k = 3, i = 1` on three windows of `Gr(3,9)`;
//! `Ξ1, Ξ2, Ξ3` are `k = 4, i = 1, 2, 3` on two windows of `Gr(4,8)`.
//! All intersections are taken on the input point.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{intersect, wedge2, wedge_normalize, Subspace, Vector};
use crate::moduli::{cyclic_minors, Family, ModuliPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LoopGenerator {
    /// `δ²`: columns rotate left by one.
    A,
    /// `A²`: columns rotate left by two.
    A2,
    /// `Σ1 ∘ δ²`, i.e. shift by one, then `Σ1`.
    B,
    Sigma1,
    ShiftBy(i64),
    Xi1,
    Xi2,
    Xi3,
}

impl LoopGenerator {
    /// The family the generator acts on; `None` for shifts, which act on both.
    pub fn family(self) -> Option<Family> {
        match self {
            LoopGenerator::A | LoopGenerator::A2 | LoopGenerator::B | LoopGenerator::Sigma1 => {
                Some(Family::T36)
            }
            LoopGenerator::Xi1 | LoopGenerator::Xi2 | LoopGenerator::Xi3 => Some(Family::T44),
            LoopGenerator::ShiftBy(_) => None,
        }
    }
}

impl fmt::Display for LoopGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopGenerator::A => write!(f, "A"),
            LoopGenerator::A2 => write!(f, "A2"),
            LoopGenerator::B => write!(f, "B"),
            LoopGenerator::Sigma1 => write!(f, "S1"),
            LoopGenerator::ShiftBy(j) => write!(f, "SH({j})"),
            LoopGenerator::Xi1 => write!(f, "X1"),
            LoopGenerator::Xi2 => write!(f, "X2"),
            LoopGenerator::Xi3 => write!(f, "X3"),
        }
    }
}

impl FromStr for LoopGenerator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => LoopGenerator::A,
            "A2" => LoopGenerator::A2,
            "B" => LoopGenerator::B,
            "S1" => LoopGenerator::Sigma1,
            "X1" => LoopGenerator::Xi1,
            "X2" => LoopGenerator::Xi2,
            "X3" => LoopGenerator::Xi3,
            _ => {
                let j = s
                    .strip_prefix("SH(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|j| j.trim().parse().ok())
                    .ok_or_else(|| Error::BadToken(s.to_string()))?;
                LoopGenerator::ShiftBy(j)
            }
        })
    }
}

/// Generators applied left to right: `[g1, g2]` maps `p` to `g2(g1(p))`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupWord(pub Vec<LoopGenerator>);

impl GroupWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn generators(&self) -> &[LoopGenerator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &GroupWord) -> GroupWord {
        let mut g = self.0.clone();
        g.extend_from_slice(&other.0);
        GroupWord(g)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for GroupWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" {
            return Ok(GroupWord::empty());
        }
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(GroupWord)
    }
}

impl Serialize for GroupWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Columns rotate left by `j` (taken mod `N`): new `v_c = v_{c+j}`.
pub fn act_shift(p: &ModuliPoint, j: i64) -> ModuliPoint {
    let n = p.family().n();
    let mut vs = p.vectors();
    vs.rotate_left(j.rem_euclid(n as i64) as usize);
    ModuliPoint::from_vectors(p.family(), p.field(), &vs).expect("same shape")
}

/// One window exchange: generator `i` inside the window starting at
/// 0-based column `start`.
#[derive(Debug, Clone, Copy)]
struct Exchange {
    start: usize,
    i: usize,
}

impl Exchange {
    /// 0-based column of `v_i`.
    fn a(self) -> usize {
        self.start + self.i - 1
    }
}

fn exchanges(family: Family, i: usize) -> Vec<Exchange> {
    let k = family.k();
    (0..family.n() / k)
        .map(|w| Exchange { start: w * k, i })
        .collect()
}

fn plane_and_complement(vs: &[Vector], k: usize, a: usize) -> Result<(Subspace, Subspace)> {
    let n = vs.len();
    let field = vs[0][0].field();
    let plane = Subspace::span(field, k, &[vs[a].clone(), vs[(a + 1) % n].clone()])?;
    let rest: Vec<Vector> = (2..=k).map(|t| vs[(a + t) % n].clone()).collect();
    let other = Subspace::span(field, k, &rest)?;
    Ok((plane, other))
}

fn span_label(n: usize, a: usize, lo: usize, hi: usize) -> String {
    let parts: Vec<String> = (lo..=hi).map(|t| format!("v{}", (a + t) % n + 1)).collect();
    parts.join(",")
}

/// Applies all window exchanges for generator `i` (window size = `k`).
fn exchange_all(p: &ModuliPoint, i: usize) -> Result<ModuliPoint> {
    let family = p.family();
    let (k, n) = (family.k(), family.n());
    let vs = p.vectors();
    let mut out = vs.clone();
    for (w, ex) in exchanges(family, i).into_iter().enumerate() {
        let a = ex.a();
        let b = (a + 1) % n;
        let (plane, other) = plane_and_complement(&vs, k, a)?;
        let meet = intersect(&plane, &other)?;
        if meet.dim() != 1 {
            return Err(Error::DegenerateIntersection {
                which: format!("u{}", w + 1),
                left: span_label(n, a, 0, 1),
                right: span_label(n, a, 2, k),
                dim: meet.dim(),
            });
        }
        let dir = meet.basis_vectors().remove(0);
        let u = wedge_normalize(&vs[a], &vs[b], &dir).map_err(|e| match e {
            Error::DegenerateNormalization(m) => {
                Error::DegenerateNormalization(format!("u{}: {m}", w + 1))
            }
            e => e,
        })?;
        out[a] = vs[b].clone();
        out[b] = u;
    }
    ModuliPoint::from_vectors(family, p.field(), &out)
}

fn require_family(p: &ModuliPoint, g: LoopGenerator) -> Result<()> {
    match g.family() {
        Some(f) if f != p.family() => Err(Error::FamilyMismatch {
            generator: g.to_string(),
            family: p.family().to_string(),
        }),
        _ => Ok(()),
    }
}

/// `(v1,…,v9) ↦ (v2,u1,v3; v5,u2,v6; v8,u3,v9)`.
pub fn act_sigma1(p: &ModuliPoint) -> Result<ModuliPoint> {
    require_family(p, LoopGenerator::Sigma1)?;
    exchange_all(p, 1)
}

/// `Ξ_i` for `i ∈ {1, 2, 3}` on `Gr(4,8)`.
pub fn act_xi(p: &ModuliPoint, i: u8) -> Result<ModuliPoint> {
    let g = match i {
        1 => LoopGenerator::Xi1,
        2 => LoopGenerator::Xi2,
        3 => LoopGenerator::Xi3,
        _ => {
            return Err(Error::Precondition(format!(
                "Ξ index must be 1, 2 or 3, got {i}"
            )))
        }
    };
    require_family(p, g)?;
    exchange_all(p, i as usize)
}

pub fn act_generator(p: &ModuliPoint, g: LoopGenerator) -> Result<ModuliPoint> {
    require_family(p, g)?;
    match g {
        LoopGenerator::A => Ok(act_shift(p, 1)),
        LoopGenerator::A2 => Ok(act_shift(p, 2)),
        LoopGenerator::ShiftBy(j) => Ok(act_shift(p, j)),
        LoopGenerator::Sigma1 => act_sigma1(p),
        LoopGenerator::B => act_sigma1(&act_shift(p, 1)),
        LoopGenerator::Xi1 => act_xi(p, 1),
        LoopGenerator::Xi2 => act_xi(p, 2),
        LoopGenerator::Xi3 => act_xi(p, 3),
    }
}

pub fn act_word(p: &ModuliPoint, w: &GroupWord) -> Result<ModuliPoint> {
    if let Some(g) =
        w.0.iter()
            .find(|g| g.family().is_some_and(|f| f != p.family()))
    {
        return Err(Error::FamilyMismatch {
            generator: g.to_string(),
            family: p.family().to_string(),
        });
    }
    let mut cur = p.clone();
    for (t, &g) in w.0.iter().enumerate() {
        cur = act_generator(&cur, g).map_err(|cause| Error::WordDegenerate {
            word: w.to_string(),
            prefix: GroupWord(w.0[..t].to_vec()).to_string(),
            cause: Box::new(cause),
        })?;
    }
    Ok(cur)
}

/// Whether every loop of the point's family is defined at `p`: `Σ1` at
/// `p`, `A p` and `A² p` for `T36`; `Ξ1, Ξ2, Ξ3` at `p` for `T44`.
pub fn loops_defined(p: &ModuliPoint) -> bool {
    match p.family() {
        Family::T36 => (0..3).all(|j| exchange_all(&act_shift(p, j), 1).is_ok()),
        Family::T44 => (1..=3).all(|i| exchange_all(p, i).is_ok()),
    }
}

/// Post-hoc audit of one exchange step `p ↦ q` for generator `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeCheck {
    /// Each `u` lies in `⟨v_i, v_{i+1}⟩`.
    pub in_plane: bool,
    /// Each `u` lies in `⟨v_{i+2}, …, v_{i+k}⟩`.
    pub in_complement: bool,
    /// Each `v_i ∧ v_{i+1} = v_{i+1} ∧ u`.
    pub wedge: bool,
    /// The untouched columns are carried over and `v_{i+1}` moved into place.
    pub layout: bool,
    pub output_minors_nonzero: bool,
}

impl ExchangeCheck {
    pub fn all_ok(&self) -> bool {
        self.in_plane
            && self.in_complement
            && self.wedge
            && self.layout
            && self.output_minors_nonzero
    }
}

/// Audits `q = exchange_i(p)` against the defining conditions, recomputing
/// membership by span ranks rather than through the intersection routine.
pub fn check_exchange(p: &ModuliPoint, q: &ModuliPoint, i: usize) -> Result<ExchangeCheck> {
    if p.family() != q.family() {
        return Err(Error::FamilyMismatch {
            generator: format!("exchange {i}"),
            family: q.family().to_string(),
        });
    }
    let family = p.family();
    let (k, n) = (family.k(), family.n());
    let vs = p.vectors();
    let ws = q.vectors();
    let mut check = ExchangeCheck {
        in_plane: true,
        in_complement: true,
        wedge: true,
        layout: true,
        output_minors_nonzero: cyclic_minors(q).iter().all(|(_, m)| !m.is_zero()),
    };
    let mut touched = vec![false; n];
    for ex in exchanges(family, i) {
        let a = ex.a();
        let b = (a + 1) % n;
        touched[a] = true;
        touched[b] = true;
        let u = &ws[b];
        let (plane, other) = plane_and_complement(&vs, k, a)?;
        check.in_plane &= plane.contains(u);
        check.in_complement &= other.contains(u);
        check.wedge &= wedge2(&vs[a], &vs[b]) == wedge2(&vs[b], u);
        check.layout &= ws[a] == vs[b];
    }
    for c in 0..n {
        if !touched[c] {
            check.layout &= ws[c] == vs[c];
        }
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, DEFAULT_PRIME};
    use crate::moduli::{pluecker, random_point, validate_point, PlueckerIndex};

    fn fp() -> Field {
        Field::Fp { p: DEFAULT_PRIME }
    }

    fn p_idx(f: Family, s: &str) -> PlueckerIndex {
        PlueckerIndex::parse(f, s).unwrap()
    }

    #[test]
    fn word_tokens_round_trip() {
        let w: GroupWord = "A A2 B S1 SH(-2) X1 X2 X3".parse().unwrap();
        assert_eq!(w.len(), 8);
        assert_eq!(w.0[4], LoopGenerator::ShiftBy(-2));
        assert_eq!(w.to_string().parse::<GroupWord>().unwrap(), w);
        assert!("A C".parse::<GroupWord>().is_err());
        assert!("SH(x)".parse::<GroupWord>().is_err());
        assert_eq!("".parse::<GroupWord>().unwrap(), GroupWord::empty());
    }

    #[test]
    fn shift_by_n_is_identity() {
        let p = random_point(Family::T36, fp(), 4).unwrap();
        assert_eq!(act_shift(&p, 9), p);
        assert_eq!(act_shift(&p, -1), act_shift(&p, 8));
        assert_eq!(act_shift(&p, 1).v(1), p.v(2));
    }

    #[test]
    fn sigma1_pullbacks() {
        let f = Family::T36;
        for seed in 0..20 {
            let p = random_point(f, fp(), seed).unwrap();
            let q = act_sigma1(&p).unwrap();
            assert_eq!(
                pluecker(&q, &p_idx(f, "147")).unwrap(),
                pluecker(&p, &p_idx(f, "258")).unwrap()
            );
            assert_eq!(
                pluecker(&q, &p_idx(f, "369")).unwrap(),
                pluecker(&p, &p_idx(f, "369")).unwrap()
            );
            assert!(check_exchange(&p, &q, 1).unwrap().all_ok());
        }
    }

    #[test]
    fn b_pullbacks() {
        let f = Family::T36;
        let b: GroupWord = "B".parse().unwrap();
        let bb: GroupWord = "B B".parse().unwrap();
        for seed in 0..20 {
            let p = random_point(f, fp(), seed).unwrap();
            let d = pluecker(&p, &p_idx(f, "147")).unwrap();
            assert_eq!(
                pluecker(&act_word(&p, &b).unwrap(), &p_idx(f, "147")).unwrap(),
                pluecker(&p, &p_idx(f, "369")).unwrap()
            );
            assert_eq!(
                pluecker(&act_word(&p, &bb).unwrap(), &p_idx(f, "147")).unwrap(),
                d
            );
        }
    }

    #[test]
    fn doctored_sigma1_point_names_u1() {
        // <v1, v2> = <v3, v4>
        let cols = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![1, 1, 0],
            vec![1, 2, 0],
            vec![0, 0, 1],
            vec![1, 3, 7],
            vec![2, 1, 5],
            vec![3, 1, 1],
            vec![1, 4, 2],
        ];
        let p = ModuliPoint::from_ints(Family::T36, Field::Q, &cols).unwrap();
        match act_sigma1(&p).unwrap_err() {
            Error::DegenerateIntersection { which, dim, .. } => {
                assert_eq!(which, "u1");
                assert_eq!(dim, 2);
            }
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn xi1_standard_window() {
        let q = Field::Q;
        let cols = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![1, 1, 1, 1],
            vec![1, 2, 3, 5],
            vec![2, -1, 4, 1],
            vec![1, 3, -2, 7],
        ];
        let p = ModuliPoint::from_ints(Family::T44, q, &cols).unwrap();
        let out = act_xi(&p, 1).unwrap();
        assert_eq!(out.v(1), p.v(2));
        assert_eq!(
            out.v(2),
            vec![q.from_i64(-1), q.from_i64(-1), q.zero(), q.zero()]
        );
        assert!(check_exchange(&p, &out, 1).unwrap().all_ok());
    }

    #[test]
    fn xi_degenerate_when_plane_inside_complement() {
        // <v1, v2> ⊂ <v3, v4, v5>
        let cols = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![1, 1, 0, 0],
            vec![1, -1, 0, 0],
            vec![0, 0, 1, 1],
            vec![1, 2, 3, 5],
            vec![2, -1, 4, 1],
            vec![1, 3, -2, 7],
        ];
        let p = ModuliPoint::from_ints(Family::T44, Field::Q, &cols).unwrap();
        assert!(matches!(
            act_xi(&p, 1),
            Err(Error::DegenerateIntersection { ref which, dim: 2, .. }) if which == "u1"
        ));
    }

    #[test]
    fn xi_outputs_are_valid_and_audited() {
        for seed in 0..10 {
            let p = random_point(Family::T44, fp(), seed).unwrap();
            for i in 1..=3u8 {
                let q = act_xi(&p, i).unwrap();
                assert!(check_exchange(&p, &q, i as usize).unwrap().all_ok());
                assert!(validate_point(&q).minors_nonzero);
            }
        }
    }

    #[test]
    fn family_mismatch() {
        let p = random_point(Family::T44, fp(), 0).unwrap();
        assert!(matches!(act_sigma1(&p), Err(Error::FamilyMismatch { .. })));
        let q = random_point(Family::T36, fp(), 0).unwrap();
        assert!(matches!(
            act_word(&q, &"A X1".parse().unwrap()),
            Err(Error::FamilyMismatch { .. })
        ));
        assert!(act_xi(&p, 4).is_err());
    }

    #[test]
    fn failing_prefix_is_reported() {
        let cols = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![1, 1, 0],
            vec![1, 2, 0],
            vec![0, 0, 1],
            vec![1, 3, 7],
            vec![2, 1, 5],
            vec![3, 1, 1],
            vec![1, 4, 2],
        ];
        let p = ModuliPoint::from_ints(Family::T36, Field::Q, &cols).unwrap();
        let p = act_shift(&p, -2);
        let err = act_word(&p, &"A A S1".parse().unwrap()).unwrap_err();
        assert!(err.is_degeneracy());
        match err {
            Error::WordDegenerate { prefix, .. } => assert_eq!(prefix, "A A"),
            e => panic!("unexpected {e}"),
        }
    }
}
