//! Positive braid words and the three length-preserving Legendrian moves:
//! cyclic shift, commutation of distant generators, and Reidemeister III in
//! either direction.
//!
//! Positions are 1-based and never wrap; the cyclic reading of a braid
//! closure is reached only through explicit shifts.

mod builtin;
mod script;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use builtin::{builtin_script, torus_word, Builtin};
pub use script::{parse_script, verify_loop, LoopReport, MoveScript, ScriptError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: u8,
    letters: Vec<u8>,
}

impl BraidWord {
    pub fn new(strands: u8, letters: Vec<u8>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Precondition(format!(
                "a braid needs at least 2 strands, got {strands}"
            )));
        }
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= strands) {
            return Err(Error::GeneratorOutOfRange {
                index: bad,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> u8 {
        self.strands
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The braid word followed by one more crossing `σ_i`.
    ///
    /// This is the braid-word shadow of the exact cobordism that adds a
    /// crossing; appending `σ_1, …, σ_{k-1}` in turn takes
    /// `(σ_1⋯σ_{k-1})^m` to `(σ_1⋯σ_{k-1})^{m+1}`.
    pub fn append_generator(&self, i: u8) -> Result<BraidWord> {
        if i == 0 || i >= self.strands {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                strands: self.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.push(i);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn apply(&self, mv: Move) -> Result<BraidWord> {
        apply_move(self, mv)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses letters separated by spaces or commas; the strand count is
    /// one more than the largest letter.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u8>().map_err(|_| Error::BadToken(t.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let strands = letters.iter().copied().max().unwrap_or(1).saturating_add(1);
        BraidWord::new(strands.max(2), letters)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    /// First letter moves to the end.
    Shift,
    /// Swap the letters at `pos` and `pos + 1`; they must differ by at least 2.
    Comm(usize),
    /// `(i, i+1, i)` at `pos` becomes `(i+1, i, i+1)`.
    R3A(usize),
    /// `(i+1, i, i+1)` at `pos` becomes `(i, i+1, i)`.
    R3D(usize),
}

impl Move {
    /// The move undoing `self` on the word `self` produced. Shift has no
    /// single-step inverse; its inverse is `len - 1` further shifts.
    pub fn local_inverse(self) -> Option<Move> {
        match self {
            Move::Shift => None,
            Move::Comm(p) => Some(Move::Comm(p)),
            Move::R3A(p) => Some(Move::R3D(p)),
            Move::R3D(p) => Some(Move::R3A(p)),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Shift => write!(f, "shift"),
            Move::Comm(p) => write!(f, "comm {p}"),
            Move::R3A(p) => write!(f, "r3a {p}"),
            Move::R3D(p) => write!(f, "r3d {p}"),
        }
    }
}

pub fn apply_move(word: &BraidWord, mv: Move) -> Result<BraidWord> {
    let w = &word.letters;
    let illegal = |position: usize, width: usize, expected: &str| Error::IllegalMove {
        mv: mv.to_string(),
        position,
        found: w
            .get(position.saturating_sub(1)..(position - 1 + width).min(w.len()))
            .unwrap_or(&[])
            .to_vec(),
        expected: expected.to_string(),
    };
    let mut letters = w.clone();
    match mv {
        Move::Shift => {
            if !letters.is_empty() {
                letters.rotate_left(1);
            }
        }
        Move::Comm(pos) => {
            if pos == 0 || pos + 1 > w.len() {
                return Err(illegal(pos.max(1), 2, "two letters inside the word"));
            }
            let (a, b) = (w[pos - 1], w[pos]);
            if a.abs_diff(b) < 2 {
                return Err(illegal(pos, 2, "letters differing by at least 2"));
            }
            letters.swap(pos - 1, pos);
        }
        Move::R3A(pos) | Move::R3D(pos) => {
            if pos == 0 || pos + 2 > w.len() {
                return Err(illegal(pos.max(1), 3, "three letters inside the word"));
            }
            let (a, b, c) = (w[pos - 1], w[pos], w[pos + 1]);
            let ok = match mv {
                Move::R3A(_) => a == c && b == a + 1,
                _ => a == c && a == b + 1,
            };
            if !ok {
                let want = if matches!(mv, Move::R3A(_)) {
                    "the pattern (i, i+1, i)"
                } else {
                    "the pattern (i+1, i, i+1)"
                };
                return Err(illegal(pos, 3, want));
            }
            letters[pos - 1] = b;
            letters[pos] = a;
            letters[pos + 1] = b;
        }
    }
    Ok(BraidWord {
        strands: word.strands,
        letters,
    })
}
