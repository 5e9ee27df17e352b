//! Exact scalars: arbitrary-precision rationals and residues modulo a prime.
//!
//! Every identity check in the crate goes through this module, so all
//! comparisons are exact. A scalar carries its field; mixing fields inside a
//! single expression is a programming error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Mersenne prime 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Environment variable that overrides [`DEFAULT_PRIME`] in [`default_field`].
pub const PRIME_ENV: &str = "LEGMON_PRIME";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    /// Integers modulo a prime `p < 2^32`.
    Fp { p: u64 },
    /// The rationals.
    Q,
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime_u32(p) {
            Ok(Field::Fp { p })
        } else {
            Err(Error::BadModulus(p))
        }
    }

    pub fn zero(&self) -> FieldScalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldScalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldScalar {
        match *self {
            Field::Fp { p } => FieldScalar::Prime {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
            Field::Q => FieldScalar::Rational(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldScalar {
        match *self {
            Field::Fp { p } => {
                let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                FieldScalar::Prime {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
            Field::Q => FieldScalar::Rational(BigRational::from_integer(v.clone())),
        }
    }

    /// Parses a scalar written either in the field's canonical form or as a
    /// bare integer / fraction that is then mapped into this field.
    pub fn parse(&self, s: &str) -> Result<FieldScalar> {
        let x: FieldScalar = s.parse()?;
        self.convert(&x)
    }

    /// Maps `x` into this field. Rationals reduce modulo `p` when the
    /// denominator is invertible; residues only convert to the same field.
    pub fn convert(&self, x: &FieldScalar) -> Result<FieldScalar> {
        match (self, x) {
            (Field::Q, FieldScalar::Rational(_)) => Ok(x.clone()),
            (Field::Fp { p }, FieldScalar::Prime { modulus, .. }) if p == modulus => Ok(x.clone()),
            (Field::Fp { .. }, FieldScalar::Rational(r)) => {
                let num = self.from_bigint(r.numer());
                let den = self.from_bigint(r.denom());
                Ok(&num * &den.inverse()?)
            }
            _ => Err(Error::FieldMismatch(
                self.to_string(),
                x.field().to_string(),
            )),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Fp { p } => write!(f, "F_{p}"),
            Field::Q => write!(f, "Q"),
        }
    }
}

/// The prime field selected by `LEGMON_PRIME`, or `F_{2^31-1}`.
pub fn default_field() -> Result<Field> {
    match std::env::var(PRIME_ENV) {
        Ok(s) => {
            let p: u64 = s
                .trim()
                .parse()
                .map_err(|_| Error::ScalarParse(s.clone()))?;
            Field::prime(p)
        }
        Err(_) => Ok(Field::Fp { p: DEFAULT_PRIME }),
    }
}

fn is_prime_u32(p: u64) -> bool {
    if !(2..1 << 32).contains(&p) {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    /// Always in lowest terms with positive denominator (maintained by `num-rational`).
    Rational(BigRational),
    Prime {
        value: u64,
        modulus: u64,
    },
}

impl FieldScalar {
    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Rational(_) => Field::Q,
            FieldScalar::Prime { modulus, .. } => Field::Fp { p: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_zero(),
            FieldScalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_one(),
            FieldScalar::Prime { value, .. } => *value == 1,
        }
    }

    pub fn inverse(&self) -> Result<FieldScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(r.recip()),
            FieldScalar::Prime { value, modulus } => FieldScalar::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &FieldScalar) -> Result<FieldScalar> {
        Ok(self * &other.inverse()?)
    }

    /// Canonical text form: `a/b` (or `a`) for rationals, `v mod p` for residues.
    pub fn to_canonical(&self) -> String {
        self.to_string()
    }

    /// The bare value without the modulus suffix, used inside point files
    /// where the field is declared once.
    pub fn to_bare(&self) -> String {
        match self {
            FieldScalar::Rational(_) => self.to_string(),
            FieldScalar::Prime { value, .. } => value.to_string(),
        }
    }

    /// Bit size of the numerator plus denominator; 0 for residues.
    pub fn height_bits(&self) -> u64 {
        match self {
            FieldScalar::Rational(r) => r.numer().bits() + r.denom().bits(),
            FieldScalar::Prime { .. } => 0,
        }
    }

    fn check_same(&self, other: &FieldScalar) {
        if let (FieldScalar::Prime { modulus: a, .. }, FieldScalar::Prime { modulus: b, .. }) =
            (self, other)
        {
            if a == b {
                return;
            }
        } else if matches!(
            (self, other),
            (FieldScalar::Rational(_), FieldScalar::Rational(_))
        ) {
            return;
        }
        panic!(
            "{}",
            Error::FieldMismatch(self.field().to_string(), other.field().to_string())
        );
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldScalar::Prime { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

impl FromStr for FieldScalar {
    type Err = Error;

    /// Accepts `a`, `a/b` (rationals) and `v mod p` (residues).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ScalarParse(s.to_string());
        let t = s.trim();
        if let Some((v, p)) = t.split_once("mod") {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let field = Field::prime(p)?;
            let v: BigInt = v.trim().parse().map_err(|_| bad())?;
            return Ok(field.from_bigint(&v));
        }
        let r = match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
        };
        Ok(FieldScalar::Rational(r))
    }
}

impl<'a> Add<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &FieldScalar) -> FieldScalar {
        self.check_same(rhs);
        match (self, rhs) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a + b),
            (FieldScalar::Prime { value: a, modulus }, FieldScalar::Prime { value: b, .. }) => {
                FieldScalar::Prime {
                    value: (a + b) % modulus,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        self.check_same(rhs);
        match (self, rhs) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a - b),
            (FieldScalar::Prime { value: a, modulus }, FieldScalar::Prime { value: b, .. }) => {
                FieldScalar::Prime {
                    value: (a + modulus - b) % modulus,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &FieldScalar) -> FieldScalar {
        self.check_same(rhs);
        match (self, rhs) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a * b),
            (FieldScalar::Prime { value: a, modulus }, FieldScalar::Prime { value: b, .. }) => {
                FieldScalar::Prime {
                    value: a * b % modulus,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(-a),
            FieldScalar::Prime { value, modulus } => FieldScalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: &FieldScalar) -> FieldScalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

impl Serialize for FieldScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
