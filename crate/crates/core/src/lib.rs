//! Exact computations for Legendrian loops on torus links `Λ(3,6)` and
//! `Λ(4,4)`: braid-move scripts, framed points of the Bott–Samelson moduli
//! spaces, the point maps induced by the loops, and orbit exploration for the
//! modular group they generate.

pub mod braid;
pub mod error;
pub mod explorer;
pub mod field;
pub mod linalg;
pub mod moduli;
pub mod monodromy;

pub use braid::{apply_move, builtin_script, verify_loop, BraidWord, Builtin, Move, MoveScript};
pub use error::{Error, Result};
pub use field::{default_field, Field, FieldScalar};
pub use moduli::{pluecker, random_point, validate_point, Family, ModuliPoint, PlueckerIndex};
pub use monodromy::{act_shift, act_sigma1, act_word, act_xi, GroupWord, LoopGenerator};
