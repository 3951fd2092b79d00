//! Exact integer and rational arithmetic.
//!
//! Every other module is written against [`Integer`] and [`Rational`]; nothing
//! in the crate uses fixed-width or floating-point quantities for results.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Greatest common divisor, always non-negative. `gcd(0, 0) = 0`.
pub fn gcd(a: &Integer, b: &Integer) -> Integer {
    let mut x = a.abs();
    let mut y = b.abs();
    while !y.is_zero() {
        let r = &x % &y;
        x = y;
        y = r;
    }
    x
}

/// Bezout coefficients by the Euclidean recursion.
///
/// Returns `(g, x, y)` with `g = gcd(a, b) >= 0` and `a*x + b*y = g`. The
/// coefficients are whatever the recursion produces; no minimisation is
/// applied here.
pub fn extended_gcd(a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
    if b.is_zero() {
        return if a.is_negative() {
            (-a, -Integer::one(), Integer::zero())
        } else {
            (a.clone(), Integer::one(), Integer::zero())
        };
    }
    // floor division keeps a = q*b + r with 0 <= r < |b| when b > 0
    let (q, r) = a.div_mod_floor(b);
    let (g, x1, y1) = extended_gcd(b, &r);
    let y = &x1 - &q * &y1;
    (g, y1, y)
}

/// Exact fraction, always reduced with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `n/d` in lowest terms.
    pub fn new(n: Integer, d: Integer) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(n, d)))
    }

    pub fn from_integer(n: Integer) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    /// Smallest integer not less than `self`.
    pub fn ceil(&self) -> Integer {
        self.0.ceil().to_integer()
    }

    /// Largest integer not greater than `self`.
    pub fn floor(&self) -> Integer {
        self.0.floor().to_integer()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }
}

/// `n/d` in canonical form; fails only when `d = 0`.
pub fn rational_make(n: Integer, d: Integer) -> Result<Rational> {
    Rational::new(n, d)
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(Integer::from(n))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl PartialEq<Integer> for Rational {
    fn eq(&self, other: &Integer) -> bool {
        self.is_integer() && self.numer() == other
    }
}

impl PartialOrd<Integer> for Rational {
    fn partial_cmp(&self, other: &Integer) -> Option<Ordering> {
        Some((self.numer()).cmp(&(other * self.denom())))
    }
}

/// Renders `p/q`, or just `p` when the denominator is 1.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("invalid integer literal {0:?}")]
    Integer(String),
    #[error("denominator must be positive in {0:?}")]
    Denominator(String),
}

/// Accepts `p` or `p/q` with `q > 0`.
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parse = |t: &str| {
            Integer::from_str(t.trim()).map_err(|_| ParseRationalError::Integer(t.to_string()))
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse(s)?)),
            Some((n, d)) => {
                let n = parse(n)?;
                let d = parse(d)?;
                if !d.is_positive() {
                    return Err(ParseRationalError::Denominator(s.to_string()));
                }
                Ok(Rational(BigRational::new(n, d)))
            }
        }
    }
}
