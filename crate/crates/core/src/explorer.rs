//! Orbit exploration for the modular group `⟨A, B⟩ ≅ ℤ3 ∗ ℤ2` acting on
//! `Gr(3,9)`, and the observational `Ξ` report on `Gr(4,8)`.
//!
//! Everything here evaluates the orbit function `Δ = P147` along words. A
//! separation witness for a word `w` is a probe `u` and a point `p` with
//! `Δ(u(w(p))) ≠ Δ(u(p))`; such a witness is found over `𝔽p` and confirmed
//! over `ℚ` on the same integer point.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldScalar};
use crate::moduli::{pluecker, random_point, validate_point, Family, ModuliPoint, PlueckerIndex};
use crate::monodromy::{act_generator, act_word, check_exchange, GroupWord, LoopGenerator};

/// Default number of sample points for every harness.
pub const DEFAULT_POINTS: usize = 32;
pub const DEFAULT_RELATIONS_SEED: u64 = 7;
pub const DEFAULT_SWEEP_SEED: u64 = 11;
pub const DEFAULT_PROBE_BUDGET: usize = 4;
pub const DEFAULT_MAX_SYLLABLES: usize = 6;

/// Give up after this many rejected samples per requested point.
const RESAMPLE_FACTOR: usize = 100;

/// `Δ = P147`.
pub fn delta(p: &ModuliPoint) -> Result<FieldScalar> {
    pluecker(p, &PlueckerIndex::new(Family::T36, &[1, 4, 7])?)
}

fn is_a(g: LoopGenerator) -> bool {
    matches!(g, LoopGenerator::A | LoopGenerator::A2)
}

/// Whether `w` is a reduced word over the syllables `a = A`, `a² = A2`,
/// `b = B`: no two neighbours from the same free factor.
pub fn is_reduced(w: &GroupWord) -> bool {
    let gens = w.generators();
    gens.iter()
        .all(|&g| matches!(g, LoopGenerator::A | LoopGenerator::A2 | LoopGenerator::B))
        && gens.windows(2).all(|p| is_a(p[0]) != is_a(p[1]))
}

/// All reduced words with at most `max_syllables` syllables, shortest
/// first, then lexicographic in `a < a² < b`.
pub fn reduced_words(max_syllables: usize) -> Vec<GroupWord> {
    let mut out = vec![GroupWord::empty()];
    let mut layer = vec![GroupWord::empty()];
    for _ in 0..max_syllables {
        let mut next = Vec::new();
        for w in &layer {
            let last = w.generators().last().copied();
            let options: &[LoopGenerator] = match last {
                None => &[LoopGenerator::A, LoopGenerator::A2, LoopGenerator::B],
                Some(LoopGenerator::B) => &[LoopGenerator::A, LoopGenerator::A2],
                Some(_) => &[LoopGenerator::B],
            };
            for &g in options {
                let mut gens = w.generators().to_vec();
                gens.push(g);
                next.push(GroupWord(gens));
            }
        }
        next.sort_by_key(|w| w.generators().iter().map(|g| rank(*g)).collect::<Vec<_>>());
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn rank(g: LoopGenerator) -> u8 {
    match g {
        LoopGenerator::A => 0,
        LoopGenerator::A2 => 1,
        _ => 2,
    }
}

/// An integer point and its image in the working field.
#[derive(Debug, Clone)]
struct Sample {
    q: ModuliPoint,
    fp: ModuliPoint,
}

/// Draws `n` rational points with small integer entries that stay valid in
/// `field`, plus the number of candidates rejected.
fn sample_t36(n: usize, seed: u64, field: Field) -> Result<(Vec<Sample>, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    let mut rejected = 0;
    while out.len() < n {
        if rejected > RESAMPLE_FACTOR * n.max(1) {
            return Err(Error::SamplingExhausted(rejected));
        }
        let q = random_point(Family::T36, Field::Q, rng.next_u64())?;
        let fp = q.to_field(field)?;
        if validate_point(&fp).is_valid() {
            out.push(Sample { q, fp });
        } else {
            rejected += 1;
        }
    }
    Ok((out, rejected))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub probe: GroupWord,
    /// `"a^3"` or `"b^2"`.
    pub relation: String,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub field: Field,
    pub seed: u64,
    pub n_points: usize,
    /// Points dropped because some evaluation degenerated.
    pub resampled: usize,
    pub checks: Vec<RelationCheck>,
    pub all_passed: bool,
}

/// Checks `Δ(u(a³p)) = Δ(u(p))` and `Δ(u(b²p)) = Δ(u(p))` for every probe
/// `u` with at most two syllables.
pub fn verify_relations(n_points: usize, seed: u64, field: Field) -> Result<RelationReport> {
    if n_points == 0 {
        return Err(Error::Precondition("n_points must be at least 1".into()));
    }
    let probes = reduced_words(2);
    let a3: GroupWord = "A A A".parse()?;
    let b2: GroupWord = "B B".parse()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut resampled = 0;
    // results[probe] = (a3 passes, b2 passes) per point
    let mut rows: Vec<Vec<(bool, bool)>> = Vec::with_capacity(n_points);
    while rows.len() < n_points {
        if resampled > RESAMPLE_FACTOR * n_points {
            return Err(Error::SamplingExhausted(resampled));
        }
        let (mut batch, rejected) = sample_t36(1, rng.next_u64(), field)?;
        resampled += rejected;
        let p = batch.remove(0).fp;
        let row: Result<Vec<(bool, bool)>> = probes
            .iter()
            .map(|u| {
                let base = delta(&act_word(&p, u)?)?;
                let x = delta(&act_word(&p, &a3.then(u))?)?;
                let y = delta(&act_word(&p, &b2.then(u))?)?;
                Ok((x == base, y == base))
            })
            .collect();
        match row {
            Ok(r) => rows.push(r),
            Err(e) if e.is_degeneracy() => resampled += 1,
            Err(e) => return Err(e),
        }
    }
    let mut checks = Vec::new();
    for (i, u) in probes.iter().enumerate() {
        for (rel, pick) in [("a^3", 0), ("b^2", 1)] {
            let passed = rows
                .iter()
                .filter(|r| if pick == 0 { r[i].0 } else { r[i].1 })
                .count();
            checks.push(RelationCheck {
                probe: u.clone(),
                relation: rel.to_string(),
                passed,
                failed: n_points - passed,
            });
        }
    }
    let all_passed = checks.iter().all(|c| c.failed == 0);
    Ok(RelationReport {
        field,
        seed,
        n_points,
        resampled,
        checks,
        all_passed,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SeparationWitness {
    pub word: GroupWord,
    pub probe: GroupWord,
    /// The point in the working field.
    pub point: ModuliPoint,
    /// `Δ(u(w(p)))`.
    pub lhs: FieldScalar,
    /// `Δ(u(p))`.
    pub rhs: FieldScalar,
    /// The same integer point over `ℚ`.
    pub point_q: ModuliPoint,
    pub lhs_q: FieldScalar,
    pub rhs_q: FieldScalar,
}

impl SeparationWitness {
    fn values(w: &GroupWord, u: &GroupWord, p: &ModuliPoint) -> Result<(FieldScalar, FieldScalar)> {
        Ok((delta(&act_word(p, &w.then(u))?)?, delta(&act_word(p, u)?)?))
    }

    /// Re-evaluates both sides in both fields; true iff every stored value is
    /// reproduced and the two sides differ.
    pub fn replay(&self) -> Result<bool> {
        let (l, r) = Self::values(&self.word, &self.probe, &self.point)?;
        let (lq, rq) = Self::values(&self.word, &self.probe, &self.point_q)?;
        Ok(l == self.lhs
            && r == self.rhs
            && lq == self.lhs_q
            && rq == self.rhs_q
            && lq != rq
            && l != r)
    }

    pub fn verified_over_q(&self) -> bool {
        self.lhs_q != self.rhs_q
    }
}

/// Shared sample and probe table for a batch of searches.
struct Searcher {
    probes: Vec<GroupWord>,
    samples: Vec<Sample>,
    /// `rhs[probe][point] = Δ(u(p))`, `None` where undefined.
    rhs: Vec<Vec<Option<FieldScalar>>>,
}

impl Searcher {
    fn new(probe_budget: usize, n_points: usize, seed: u64, field: Field) -> Result<(Self, usize)> {
        let (samples, rejected) = sample_t36(n_points, seed, field)?;
        let probes = reduced_words(probe_budget);
        let rhs = probes
            .iter()
            .map(|u| {
                samples
                    .iter()
                    .map(|s| act_word(&s.fp, u).and_then(|x| delta(&x)).ok())
                    .collect()
            })
            .collect();
        Ok((
            Self {
                probes,
                samples,
                rhs,
            },
            rejected,
        ))
    }

    /// Probes by increasing length on the outside, points on the inside.
    fn search(&self, w: &GroupWord) -> Result<Option<SeparationWitness>> {
        let images: Vec<Option<ModuliPoint>> = self
            .samples
            .iter()
            .map(|s| act_word(&s.fp, w).ok())
            .collect();
        for (pi, u) in self.probes.iter().enumerate() {
            for (j, s) in self.samples.iter().enumerate() {
                let (Some(rhs), Some(wp)) = (&self.rhs[pi][j], &images[j]) else {
                    continue;
                };
                let Ok(lhs) = act_word(wp, u).and_then(|x| delta(&x)) else {
                    continue;
                };
                if &lhs == rhs {
                    continue;
                }
                let (lhs_q, rhs_q) = match SeparationWitness::values(w, u, &s.q) {
                    Ok(v) => v,
                    Err(e) if e.is_degeneracy() => continue,
                    Err(e) => return Err(e),
                };
                if lhs_q == rhs_q {
                    continue;
                }
                return Ok(Some(SeparationWitness {
                    word: w.clone(),
                    probe: u.clone(),
                    point: s.fp.clone(),
                    lhs,
                    rhs: rhs.clone(),
                    point_q: s.q.clone(),
                    lhs_q,
                    rhs_q,
                }));
            }
        }
        Ok(None)
    }
}

fn require_nontrivial_reduced(w: &GroupWord) -> Result<()> {
    if w.is_empty() || !is_reduced(w) {
        return Err(Error::Precondition(format!(
            "expected a nonempty reduced word over A, A2, B, got {w}"
        )));
    }
    Ok(())
}

/// Searches probes of at most `probe_budget` syllables over `n_points`
/// sampled points. `Ok(None)` means nothing was found within budget.
pub fn separate(
    w: &GroupWord,
    probe_budget: usize,
    n_points: usize,
    seed: u64,
    field: Field,
) -> Result<Option<SeparationWitness>> {
    require_nontrivial_reduced(w)?;
    let (searcher, _) = Searcher::new(probe_budget, n_points, seed, field)?;
    searcher.search(w)
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub max_syllables: usize,
    pub probe_budget: usize,
    pub n_points: usize,
    pub seed: u64,
    pub field: Field,
    pub resampled: usize,
    pub words: usize,
    pub separated: usize,
    pub fraction: f64,
    pub witnesses: Vec<SeparationWitness>,
    pub unseparated: Vec<GroupWord>,
}

impl SweepReport {
    pub fn complete(&self) -> bool {
        self.unseparated.is_empty()
    }
}

/// Runs [`separate`] on every nontrivial reduced word with at most
/// `max_syllables` syllables, sharing one sample across words.
pub fn faithfulness_sweep(
    max_syllables: usize,
    probe_budget: usize,
    n_points: usize,
    seed: u64,
    field: Field,
) -> Result<SweepReport> {
    if max_syllables == 0 {
        return Err(Error::Precondition(
            "max_syllables must be at least 1".into(),
        ));
    }
    let (searcher, resampled) = Searcher::new(probe_budget, n_points, seed, field)?;
    let words: Vec<GroupWord> = reduced_words(max_syllables).into_iter().skip(1).collect();
    let found: Vec<Option<SeparationWitness>> = words
        .par_iter()
        .map(|w| searcher.search(w))
        .collect::<Result<_>>()?;
    let mut witnesses = Vec::new();
    let mut unseparated = Vec::new();
    for (w, f) in words.iter().zip(found) {
        match f {
            Some(x) => witnesses.push(x),
            None => unseparated.push(w.clone()),
        }
    }
    Ok(SweepReport {
        max_syllables,
        probe_budget,
        n_points,
        seed,
        field,
        resampled,
        words: words.len(),
        separated: witnesses.len(),
        fraction: witnesses.len() as f64 / words.len() as f64,
        witnesses,
        unseparated,
    })
}

/// The nine Plücker coordinates of the `Gr(4,8)` seed.
pub const XI_SEED: [[usize; 4]; 9] = [
    [1, 3, 7, 8],
    [2, 3, 4, 8],
    [2, 3, 6, 7],
    [4, 6, 7, 8],
    [3, 4, 5, 7],
    [2, 3, 4, 7],
    [2, 3, 7, 8],
    [3, 6, 7, 8],
    [3, 4, 6, 7],
];

pub const XI_WORDS: [&str; 7] = [
    "X1", "X2", "X3", "X1 X2 X1", "X2 X1 X2", "X3 X2", "X3 X2 X1",
];

#[derive(Debug, Clone, Serialize)]
pub struct XiPullback {
    pub word: GroupWord,
    pub pluecker: String,
    /// Plücker coordinates `P_J` with `P(w(p)) = P_J(p)` on every sample.
    pub equals: Vec<String>,
    /// Those with `P(w(p)) = -P_J(p)` on every sample.
    pub equals_negated: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct XiComparison {
    pub pluecker: String,
    /// Samples where `P(Ξ1Ξ2Ξ1 p) = P(Ξ2Ξ1Ξ2 p)`.
    pub equal_points: usize,
    pub total: usize,
    pub verdict: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct XiReport {
    pub field: Field,
    pub seed: u64,
    pub n_points: usize,
    pub resampled: usize,
    /// Exchange steps audited against their defining conditions.
    pub steps_checked: usize,
    pub step_check_failures: usize,
    pub pullbacks: Vec<XiPullback>,
    pub braid_comparison: Vec<XiComparison>,
}

/// Evaluates the seed Plückers after each `Ξ` word on sampled `Gr(4,8)`
/// points, auditing every exchange step. Observational only.
pub fn xi_pluecker_report(n_points: usize, seed: u64, field: Field) -> Result<XiReport> {
    if n_points == 0 {
        return Err(Error::Precondition("n_points must be at least 1".into()));
    }
    let words: Vec<GroupWord> = XI_WORDS.iter().map(|s| s.parse()).collect::<Result<_>>()?;
    let seed_idx: Vec<PlueckerIndex> = XI_SEED
        .iter()
        .map(|i| PlueckerIndex::new(Family::T44, i))
        .collect::<Result<_>>()?;
    let all_idx = PlueckerIndex::all(Family::T44);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut resampled = 0;
    let mut steps_checked = 0;
    let mut failures = 0;
    let mut points = Vec::with_capacity(n_points);
    // images[point][word]
    let mut images: Vec<Vec<ModuliPoint>> = Vec::with_capacity(n_points);
    while points.len() < n_points {
        if resampled > RESAMPLE_FACTOR * n_points {
            return Err(Error::SamplingExhausted(resampled));
        }
        let p = random_point(Family::T44, field, rng.next_u64())?;
        let mut row = Vec::with_capacity(words.len());
        let mut checked = 0;
        let mut failed = 0;
        let mut degenerate = false;
        'words: for w in &words {
            let mut cur = p.clone();
            for &g in w.generators() {
                let i = match g {
                    LoopGenerator::Xi1 => 1,
                    LoopGenerator::Xi2 => 2,
                    _ => 3,
                };
                match act_generator(&cur, g) {
                    Ok(next) => {
                        checked += 1;
                        if !check_exchange(&cur, &next, i)?.all_ok() {
                            failed += 1;
                        }
                        cur = next;
                    }
                    Err(e) if e.is_degeneracy() => {
                        degenerate = true;
                        break 'words;
                    }
                    Err(e) => return Err(e),
                }
            }
            row.push(cur);
        }
        if degenerate {
            resampled += 1;
            continue;
        }
        steps_checked += checked;
        failures += failed;
        points.push(p);
        images.push(row);
    }

    let base: Vec<Vec<FieldScalar>> = all_idx
        .iter()
        .map(|j| points.iter().map(|p| pluecker(p, j)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut pullbacks = Vec::new();
    for (wi, w) in words.iter().enumerate() {
        for idx in &seed_idx {
            let vals: Vec<FieldScalar> = images
                .iter()
                .map(|row| pluecker(&row[wi], idx))
                .collect::<Result<_>>()?;
            let neg: Vec<FieldScalar> = vals.iter().map(|x| -x).collect();
            pullbacks.push(XiPullback {
                word: w.clone(),
                pluecker: idx.to_string(),
                equals: all_idx
                    .iter()
                    .zip(&base)
                    .filter(|(_, b)| **b == vals)
                    .map(|(j, _)| j.to_string())
                    .collect(),
                equals_negated: all_idx
                    .iter()
                    .zip(&base)
                    .filter(|(_, b)| **b == neg)
                    .map(|(j, _)| j.to_string())
                    .collect(),
            });
        }
    }

    let (l, r) = (3, 4); // X1 X2 X1, X2 X1 X2
    let braid_comparison = seed_idx
        .iter()
        .map(|idx| {
            let equal_points = images
                .iter()
                .map(|row| Ok(pluecker(&row[l], idx)? == pluecker(&row[r], idx)?))
                .collect::<Result<Vec<bool>>>()?
                .into_iter()
                .filter(|&e| e)
                .count();
            Ok(XiComparison {
                pluecker: idx.to_string(),
                equal_points,
                total: n_points,
                verdict: if equal_points == n_points {
                    "equal"
                } else {
                    "differ"
                }
                .to_string(),
            })
        })
        .collect::<Result<_>>()?;

    Ok(XiReport {
        field,
        seed,
        n_points,
        resampled,
        steps_checked,
        step_check_failures: failures,
        pullbacks,
        braid_comparison,
    })
}
