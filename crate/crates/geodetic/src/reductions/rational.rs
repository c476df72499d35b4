//! Exact rationals for interval endpoints.
//!
//! Gadget coordinates are built from repeated midpoints and ε-offsets, so
//! denominators grow with the depth of the construction; an arbitrary
//! precision backing keeps every comparison exact.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

/// A reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// `num / den`; `None` when `den = 0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Option<Self> {
        let den = den.into();
        if den.is_zero() {
            return None;
        }
        Some(Rational(BigRational::new(num.into(), den)))
    }

    /// The integer `k`.
    pub fn integer(k: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(k)))
    }

    /// Zero.
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    /// One.
    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `(self + other) / 2`.
    pub fn midpoint(&self, other: &Rational) -> Rational {
        Rational((&self.0 + &other.0) / BigInt::from(2))
    }

    /// Reduced numerator.
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Reduced (positive) denominator.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// True for negative values.
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $f(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $f(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $f(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
    };
}
binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = String;
    /// Parses `a/b` or a bare integer `a`.
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| BigInt::from_str(t.trim()).map_err(|e| format!("bad integer {t:?}: {e}"));
        match s.split_once('/') {
            Some((a, b)) => Rational::new(parse(a)?, parse(b)?).ok_or_else(|| "zero denominator".into()),
            None => Ok(Rational(BigRational::from_integer(parse(s)?))),
        }
    }
}

/// Serialized as a `[numerator, denominator]` pair of decimal integer
/// strings, so arbitrarily large values round-trip bit-exactly.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.numer().to_string(), self.denom().to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [num, den] = <[String; 2]>::deserialize(d)?;
        format!("{num}/{den}").parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_exact() {
        let a = Rational::new(2, 4).unwrap();
        assert_eq!(a.numer(), &BigInt::from(1));
        assert_eq!(a.denom(), &BigInt::from(2));
        let b = Rational::new(1, -3).unwrap();
        assert!(b.is_negative());
        assert_eq!(b.denom(), &BigInt::from(3));
        assert_eq!(&a + &b, Rational::new(1, 6).unwrap());
        assert_eq!(&a - &b, Rational::new(5, 6).unwrap());
        assert_eq!(&a * &b, Rational::new(-1, 6).unwrap());
        assert_eq!(&a / &b, Rational::new(-3, 2).unwrap());
        assert_eq!(a.midpoint(&Rational::integer(1)), Rational::new(3, 4).unwrap());
        assert!(Rational::new(1, 0).is_none());
        assert_eq!("6/8".parse::<Rational>().unwrap(), Rational::new(3, 4).unwrap());
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::integer(7));
    }
}
