//! Coefficient fields for exact linear algebra.
//!
//! Everything in [`crate::homology`] is generic over [`Field`]. Two
//! implementations ship: [`Gf2`] and arbitrary-precision rationals
//! ([`crate::Rational`]). `Ratio<i64>` also satisfies the trait and is handy
//! in tests, but may overflow on large inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// An exact field. Division is only ever applied to a nonzero divisor.
pub trait Field:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Send + Sync
{
    fn inverse(&self) -> Self;

    /// Image of an integer incidence coefficient.
    fn from_sign(sign: i8) -> Self {
        match sign {
            0 => Self::zero(),
            s if s > 0 => Self::one(),
            _ => -Self::one(),
        }
    }
}

/// The two-element field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gf2(pub bool);

// addition is xor, multiplication is and
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Gf2 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Gf2(self.0 & rhs.0)
    }
}

impl Neg for Gf2 {
    type Output = Self;
    fn neg(self) -> Self {
        self
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2(true)
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 as u8)
    }
}

impl Field for Gf2 {
    fn inverse(&self) -> Self {
        assert!(self.0, "division by zero in GF(2)");
        *self
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Signed + fmt::Debug + Send + Sync,
{
    fn inverse(&self) -> Self {
        self.recip()
    }
}

/// Runtime selector for the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Gf2,
    Rational,
}

impl FieldKind {
    pub fn name(&self) -> &'static str {
        match self {
            FieldKind::Gf2 => "gf2",
            FieldKind::Rational => "rational",
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FieldKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" | "f2" | "z2" => Ok(FieldKind::Gf2),
            "rational" | "q" => Ok(FieldKind::Rational),
            other => Err(format!("unknown field '{other}' (expected gf2 or rational)")),
        }
    }
}

/// Rationals with big-integer numerator and denominator.
pub type BigRational = Ratio<BigInt>;
