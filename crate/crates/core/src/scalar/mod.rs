//! Exact coefficient fields.
//!
//! Everything downstream is generic over [`Field`]. Two implementations are
//! provided: the rationals ([`Rational`], a `BigRational`) and the field of
//! rational functions in one indeterminate `q` over the rationals
//! ([`RatFunc`]). Mixing the two is a type error; converting a literal that
//! mentions `q` into [`Rational`] is reported as [`Error::FieldMismatch`].

mod literal;
mod matrix;
mod poly;
mod ratfunc;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
pub use num_traits::{One, Zero};
use num_traits::Signed;

use crate::error::{Error, Result};

pub use literal::parse_literal;
pub use matrix::{trace_invariant, FieldMatrix};
pub use poly::QPoly;
pub use ratfunc::RatFunc;

pub type Rational = BigRational;

/// Which concrete field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Rationals,
    RationalFunctions,
}

impl FieldKind {
    pub fn name(self) -> &'static str {
        match self {
            FieldKind::Rationals => "rationals",
            FieldKind::RationalFunctions => "rational-functions-in-q",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "rationals" => Some(FieldKind::Rationals),
            "rational-functions-in-q" => Some(FieldKind::RationalFunctions),
            _ => None,
        }
    }
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// An exact, computable field.
///
/// Values are always kept in canonical form, so `==` decides equality in the
/// field. `Display` prints the scalar literal grammar accepted by
/// [`parse_literal`].
pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    const KIND: FieldKind;

    /// Multiplicative inverse.
    fn inv(&self) -> Result<Self>;

    /// Embeds a rational number.
    fn from_rational(r: Rational) -> Self;

    /// Embeds an element of `Q(q)`; fails if it is not in this field.
    fn from_ratfunc(r: &RatFunc) -> Result<Self>;

    /// Lifts to `Q(q)`.
    fn to_ratfunc(&self) -> RatFunc;

    /// A rough size measure used for pivot selection (smaller is cheaper).
    fn weight(&self) -> usize;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * other.inv()?)
    }

    fn parse(literal: &str) -> Result<Self> {
        Self::from_ratfunc(&parse_literal(literal)?)
    }

    /// Evaluates the indeterminate at `r` (identity on the rationals).
    fn specialize(&self, r: &Rational) -> Result<Rational> {
        self.to_ratfunc().eval(r)
    }
}

impl Field for Rational {
    const KIND: FieldKind = FieldKind::Rationals;

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(self.recip())
        }
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn from_ratfunc(r: &RatFunc) -> Result<Self> {
        r.as_constant().ok_or_else(|| {
            Error::FieldMismatch(format!("`{r}` is not a rational number"))
        })
    }

    fn to_ratfunc(&self) -> RatFunc {
        RatFunc::constant(self.clone())
    }

    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

pub(crate) fn rational_is_negative(r: &Rational) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals_reject_q() {
        assert_eq!(Rational::parse("3/4").unwrap(), Rational::new(3.into(), 4.into()));
        assert!(matches!(Rational::parse("q+1"), Err(Error::FieldMismatch(_))));
        // q/q is a constant after canonicalisation
        assert_eq!(Rational::parse("q/q").unwrap(), Rational::one());
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(Rational::zero().inv(), Err(Error::ZeroInverse));
        assert_eq!(RatFunc::zero().inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn field_kind_names_roundtrip() {
        for k in [FieldKind::Rationals, FieldKind::RationalFunctions] {
            assert_eq!(FieldKind::from_name(k.name()), Some(k));
        }
    }
}
