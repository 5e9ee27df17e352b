use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::{apply_move, BraidWord, Move};
use crate::error::{Error, Result};

/// A base word and the moves replayed from it. A script whose replay ends
/// on its base word is a loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveScript {
    pub name: Option<String>,
    pub base: BraidWord,
    pub moves: Vec<Move>,
}

impl MoveScript {
    pub fn new(base: BraidWord, moves: Vec<Move>) -> Self {
        Self {
            name: None,
            base,
            moves,
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Renders the moves in the script language, one per line.
    pub fn to_source(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("# {name} on {}\n", self.base));
        }
        for m in &self.moves {
            out.push_str(&m.to_string());
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown move {keyword:?} at {line}:{column}")]
    UnknownMove {
        line: usize,
        column: usize,
        keyword: String,
    },
    #[error("syntax error at {line}:{column}: positions start at 1")]
    NonPositivePosition { line: usize, column: usize },
}

/// Parses the move language: one move per line, `#` starts a comment, blank
/// lines are skipped.
///
/// ```text
/// move := "shift" | "comm" INT | "r3a" INT | "r3d" INT
/// ```
///
/// Legality against a base word is not checked here.
pub fn parse_script(text: &str) -> Result<Vec<Move>, ScriptError> {
    let mut moves = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let body = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(body);
        let Some(&(col, kw)) = tokens.first() else {
            continue;
        };
        let needs_pos = match kw {
            "shift" => false,
            "comm" | "r3a" | "r3d" => true,
            _ => {
                return Err(ScriptError::UnknownMove {
                    line,
                    column: col,
                    keyword: kw.to_string(),
                })
            }
        };
        if !needs_pos {
            if let Some(&(column, extra)) = tokens.get(1) {
                return Err(ScriptError::Syntax {
                    line,
                    column,
                    message: format!("unexpected {extra:?} after shift"),
                });
            }
            moves.push(Move::Shift);
            continue;
        }
        let Some(&(pcol, ptok)) = tokens.get(1) else {
            return Err(ScriptError::Syntax {
                line,
                column: col + kw.len(),
                message: format!("{kw} needs a position"),
            });
        };
        if let Some(&(column, extra)) = tokens.get(2) {
            return Err(ScriptError::Syntax {
                line,
                column,
                message: format!("unexpected {extra:?}"),
            });
        }
        let pos: i64 = ptok.parse().map_err(|_| ScriptError::Syntax {
            line,
            column: pcol,
            message: format!("expected an integer position, got {ptok:?}"),
        })?;
        if pos < 1 {
            return Err(ScriptError::NonPositivePosition { line, column: pcol });
        }
        let pos = pos as usize;
        moves.push(match kw {
            "comm" => Move::Comm(pos),
            "r3a" => Move::R3A(pos),
            _ => Move::R3D(pos),
        });
    }
    Ok(moves)
}

/// Whitespace-separated tokens with 1-based columns.
fn tokenize(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(st)) => {
                out.push((s[..st].chars().count() + 1, &s[st..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((s[..st].chars().count() + 1, &s[st..]));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoopReport {
    pub is_loop: bool,
    /// The base word followed by the word after each move.
    pub trace: Vec<BraidWord>,
}

impl fmt::Display for LoopReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.trace.iter().enumerate() {
            writeln!(f, "{i:>3}  {w}")?;
        }
        write!(f, "loop: {}", if self.is_loop { "yes" } else { "no" })
    }
}

/// Replays every move from the base word, failing at the first illegal one.
pub fn verify_loop(script: &MoveScript) -> Result<LoopReport> {
    let mut trace = vec![script.base.clone()];
    let mut cur = script.base.clone();
    for (j, &m) in script.moves.iter().enumerate() {
        cur = apply_move(&cur, m).map_err(|cause| Error::IllegalStep {
            step: j + 1,
            cause: Box::new(cause),
            trace: trace.clone(),
        })?;
        trace.push(cur.clone());
    }
    Ok(LoopReport {
        is_loop: cur == script.base,
        trace,
    })
}
