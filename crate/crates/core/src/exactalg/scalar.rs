//! Coefficient field abstraction.
//!
//! Everything in the crate is generic over [`Scalar`], an exact field of
//! characteristic zero. The production instantiation is [`Rational`]
//! (arbitrary precision); the machine-word ratios are useful for quick
//! cross-checks at small orders where overflow cannot happen.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, Zero};

/// Arbitrary-precision rational number, always stored in lowest terms.
pub type Rational = BigRational;

/// An exact field element usable as a polynomial coefficient.
pub trait Scalar:
    Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static + Num + std::ops::Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// `self * n` for a machine integer; implementations avoid the full
    /// field multiplication where they can.
    fn mul_int(&self, n: i64) -> Self {
        self.clone() * Self::from_int(n)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        let lhs = std::mem::replace(self, Self::zero());
        *self = lhs + other.clone();
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// `self^n` for a non-negative exponent.
    fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul_ref(self);
        }
        acc
    }

    fn is_negative(&self) -> bool;

    /// Canonical `"p/q"` text form with `q > 0`.
    fn to_fraction_string(&self) -> String;

    /// Parses `"p/q"` or a bare integer `"p"`.
    fn parse_fraction(text: &str) -> Option<Self>;
}

fn split_fraction(text: &str) -> (&str, Option<&str>) {
    match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text.trim(), None),
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_frac(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn mul_int(&self, n: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        if self.denom().is_one() {
            return BigRational::from_integer(self.numer() * n);
        }
        let g = self.denom().gcd(&BigInt::from(n));
        if g.is_one() {
            BigRational::new_raw(self.numer() * n, self.denom().clone())
        } else {
            BigRational::new_raw(self.numer() * (BigInt::from(n) / &g), self.denom() / &g)
        }
    }

    fn add_assign_ref(&mut self, other: &Self) {
        if self.denom().is_one() && other.denom().is_one() {
            *self = BigRational::from_integer(self.numer() + other.numer());
        } else {
            *self += other;
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_fraction(text: &str) -> Option<Self> {
        let (n, d) = split_fraction(text);
        let num: BigInt = n.parse().ok()?;
        let den: BigInt = match d {
            Some(d) => d.parse().ok()?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(num, den))
    }
}

macro_rules! machine_ratio_scalar {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            fn from_int(n: i64) -> Self {
                Ratio::from_integer(n as $int)
            }

            fn from_frac(num: i64, den: i64) -> Self {
                Ratio::new(num as $int, den as $int)
            }

            fn is_negative(&self) -> bool {
                *self < Ratio::from_integer(0)
            }

            fn to_fraction_string(&self) -> String {
                format!("{}/{}", self.numer(), self.denom())
            }

            fn parse_fraction(text: &str) -> Option<Self> {
                let (n, d) = split_fraction(text);
                let num: $int = n.parse().ok()?;
                let den: $int = match d {
                    Some(d) => d.parse().ok()?,
                    None => 1,
                };
                if den == 0 {
                    return None;
                }
                Some(Ratio::new(num, den))
            }
        }
    };
}

machine_ratio_scalar!(i64);
machine_ratio_scalar!(i128);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_text_round_trip() {
        let q = Rational::from_frac(-9, 512);
        assert_eq!(q.to_fraction_string(), "-9/512");
        assert_eq!(Rational::parse_fraction("-18/1024"), Some(q));
        assert_eq!(Rational::parse_fraction("7"), Some(Rational::from_int(7)));
        assert_eq!(Rational::parse_fraction("1/0"), None);
        assert_eq!(Rational::parse_fraction("x/2"), None);
    }

    #[test]
    fn mul_int_keeps_lowest_terms() {
        let q = Rational::from_frac(3, 16);
        assert_eq!(q.mul_int(8), Rational::from_frac(3, 2));
        assert_eq!(q.mul_int(-32), Rational::from_int(-6));
        assert_eq!(q.mul_int(0), Rational::zero());
        let r = Ratio::<i64>::from_frac(3, 16);
        assert_eq!(r.mul_int(8), Ratio::new(3, 2));
    }
}
