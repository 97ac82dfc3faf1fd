use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{Field, FieldKind, QPoly, Rational};
use crate::error::{Error, Result};

/// An element of `Q(q)` in canonical form: `gcd(num, den) = 1`, `den` monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    /// Builds `num / den` and canonicalises.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else if g.is_monomial() {
            let k = g.degree().unwrap();
            (num.shift_down(k), den.shift_down(k))
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading().unwrap().clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc {
            num: QPoly::constant(c),
            den: QPoly::one(),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc {
            num: p,
            den: QPoly::one(),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(QPoly::monomial(Rational::one(), 1))
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_one() {
            Some(self.num.coeffs().first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = QPoly::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc {
                num: QPoly::one(),
                den: m,
            }
        }
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..k.unsigned_abs() {
            acc *= &base;
        }
        Ok(acc)
    }

    /// Evaluates at `q = x`.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.num.eval(x) / d)
    }

    fn add_ref(&self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Self::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::canonical(num, &self.den * &rhs.den)
    }

    fn mul_ref(&self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc {
                num: &self.num * &rhs.num,
                den: QPoly::one(),
            };
        }
        Self::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self.add_ref(&rhs)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self.add_ref(&-rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self.mul_ref(&rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = self.add_ref(&-rhs.clone());
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = self.mul_ref(rhs);
    }
}

impl Field for RatFunc {
    const KIND: FieldKind = FieldKind::RationalFunctions;

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    fn from_rational(r: Rational) -> Self {
        RatFunc::constant(r)
    }

    fn from_ratfunc(r: &RatFunc) -> Result<Self> {
        Ok(r.clone())
    }

    fn to_ratfunc(&self) -> RatFunc {
        self.clone()
    }

    fn weight(&self) -> usize {
        let w = |p: &QPoly| {
            p.coeffs()
                .iter()
                .map(|c| (c.numer().bits() + c.denom().bits()) as usize + 1)
                .sum::<usize>()
        };
        w(&self.num) + w(&self.den)
    }
}

/// Literal grammar: `num`, or `(num)/(den)` with parentheses only around
/// multi-term polynomials.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let simple = |p: &QPoly| p.is_monomial() && p.leading().is_some_and(|c| c.is_integer());
        if simple(&self.num) {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if simple(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}
