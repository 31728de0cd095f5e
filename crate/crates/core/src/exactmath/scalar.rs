use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Commutative ring with unit. Every coefficient type in the crate is one of these.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Image of an integer under the unique ring map from Z.
    fn from_int(v: i64) -> Self {
        // double-and-add keeps this cheap for the small constants we need
        let mut acc = Self::zero();
        let mut base = Self::one();
        let mut k = v.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc + base.clone();
            }
            base = base.clone() + base;
            k >>= 1;
        }
        if v < 0 {
            -acc
        } else {
            acc
        }
    }

    fn is_zero_ref(&self) -> bool {
        self.is_zero()
    }
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = T> {}

/// A field of fractions over an integer ring, so elimination can run fraction-free
/// on integer rows and only divide at back-substitution.
pub trait ExactField: Field {
    type Int: Clone + Integer + Signed + Debug;

    fn numer_int(&self) -> Self::Int;
    fn denom_int(&self) -> Self::Int;
    fn from_ratio(numer: Self::Int, denom: Self::Int) -> Self;
}

impl<T> ExactField for Ratio<T>
where
    T: Clone + Integer + Signed + Debug,
{
    type Int = T;

    fn numer_int(&self) -> T {
        self.numer().clone()
    }

    fn denom_int(&self) -> T {
        self.denom().clone()
    }

    fn from_ratio(numer: T, denom: T) -> Self {
        Ratio::new(numer, denom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn from_int_matches_native() {
        for v in [-17i64, -2, -1, 0, 1, 2, 5, 1024, 999] {
            assert_eq!(<i64 as Ring>::from_int(v), v);
            assert_eq!(Rational::from_int(v), Rational::from_integer(v.into()));
            assert_eq!(<f64 as Ring>::from_int(v), v as f64);
        }
    }

    #[test]
    fn exact_field_roundtrip() {
        let q = Ratio::<i64>::new(-6, 4);
        assert_eq!(q.numer_int(), -3);
        assert_eq!(q.denom_int(), 2);
        assert_eq!(Ratio::<i64>::from_ratio(-3, 2), q);
    }
}
