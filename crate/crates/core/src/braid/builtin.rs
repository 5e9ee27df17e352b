//! The loop scripts for the torus links `Λ(3, 3s)` and `Λ(4, 4s)`.
//!
//! Each loop is a list of steps on one window of the braid word; a step is
//! either a global cyclic shift or a handful of local moves that are repeated
//! in every window, left to right. Positions are window-local and 1-based.

use std::fmt;
use std::str::FromStr;

use super::{BraidWord, Move, MoveScript};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    Sigma1,
    Xi1,
    Xi2,
    Xi3,
    /// `δ^{k-1}`: `k - 1` cyclic shifts.
    DeltaPower,
}

impl Builtin {
    pub const LOOPS: [Builtin; 4] = [Builtin::Sigma1, Builtin::Xi1, Builtin::Xi2, Builtin::Xi3];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Sigma1 => "sigma1",
            Builtin::Xi1 => "xi1",
            Builtin::Xi2 => "xi2",
            Builtin::Xi3 => "xi3",
            Builtin::DeltaPower => "delta_power",
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "sigma1" => Builtin::Sigma1,
            "xi1" => Builtin::Xi1,
            "xi2" => Builtin::Xi2,
            "xi3" => Builtin::Xi3,
            "delta_power" | "delta" => Builtin::DeltaPower,
            _ => return Err(Error::UnknownBuiltin(s.to_string())),
        })
    }
}

/// `(σ_1 σ_2 ⋯ σ_{k-1})^m`.
pub fn torus_word(k: u8, m: usize) -> BraidWord {
    let period: Vec<u8> = (1..k).collect();
    BraidWord::new(k, period.repeat(m)).expect("torus word letters are in range")
}

enum Step {
    Shift,
    Local(&'static [Move]),
}

use Move::{Comm as C, R3A as A, R3D as D};
use Step::{Local as L, Shift as S};

// Window (σ1σ2)^3: shift, then R3d, then R3a.
const SIGMA1: &[Step] = &[S, L(&[D(1)]), L(&[A(4)])];

// Window (σ1σ2σ3)^4.
const XI1: &[Step] = &[
    S,
    L(&[C(2)]),
    L(&[D(3)]),
    L(&[D(1)]),
    L(&[C(3)]),
    L(&[C(11)]),
    L(&[A(9)]),
    L(&[A(7)]),
    L(&[C(6)]),
];

const XI2: &[Step] = &[
    L(&[C(3)]),
    L(&[A(1)]),
    S,
    L(&[C(5)]),
    L(&[D(6)]),
    L(&[D(4)]),
    L(&[A(10)]),
    L(&[C(6), C(9)]),
];

const XI3: &[Step] = &[
    L(&[C(3)]),
    L(&[A(1)]),
    L(&[A(3)]),
    L(&[C(2)]),
    L(&[C(6), C(5)]),
    L(&[A(3)]),
    L(&[A(1)]),
    L(&[C(3)]),
    L(&[D(4)]),
    L(&[D(2)]),
    L(&[C(4)]),
    L(&[C(9)]),
    L(&[D(10)]),
    L(&[D(8)]),
    L(&[C(10)]),
    S,
];

fn expand(steps: &[Step], window: usize, windows: usize) -> Vec<Move> {
    let mut out = Vec::new();
    for step in steps {
        match step {
            Step::Shift => out.push(Move::Shift),
            Step::Local(moves) => {
                for w in 0..windows {
                    let off = w * window;
                    out.extend(moves.iter().map(|&m| match m {
                        Move::Comm(p) => Move::Comm(p + off),
                        Move::R3A(p) => Move::R3A(p + off),
                        Move::R3D(p) => Move::R3D(p + off),
                        Move::Shift => Move::Shift,
                    }));
                }
            }
        }
    }
    out
}

/// A built-in loop script with window parameter `s ≥ 1`.
///
/// `sigma1` lives on `(σ1σ2)^{3(s+1)}`, the `xi` loops on
/// `(σ1σ2σ3)^{4(s+1)}`. `delta_power` uses `k` strands (default 3) on
/// `(σ1⋯σ_{k-1})^{k(s+1)}` and consists of `k - 1` shifts.
pub fn builtin_script(name: Builtin, s: usize, k_for_delta: Option<u8>) -> Result<MoveScript> {
    if s < 1 {
        return Err(Error::Precondition(format!(
            "window parameter s must be >= 1, got {s}"
        )));
    }
    let windows = s + 1;
    let script = match name {
        Builtin::Sigma1 => MoveScript::new(torus_word(3, 3 * windows), expand(SIGMA1, 6, windows)),
        Builtin::Xi1 => MoveScript::new(torus_word(4, 4 * windows), expand(XI1, 12, windows)),
        Builtin::Xi2 => MoveScript::new(torus_word(4, 4 * windows), expand(XI2, 12, windows)),
        Builtin::Xi3 => MoveScript::new(torus_word(4, 4 * windows), expand(XI3, 12, windows)),
        Builtin::DeltaPower => {
            let k = k_for_delta.unwrap_or(3);
            if k < 2 {
                return Err(Error::Precondition(format!(
                    "delta_power needs k >= 2, got {k}"
                )));
            }
            MoveScript::new(
                torus_word(k, k as usize * windows),
                vec![Move::Shift; k as usize - 1],
            )
        }
    };
    Ok(script.named(name.name()))
}
