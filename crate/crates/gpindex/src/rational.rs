//! Exact fractions on 128-bit integers with overflow detection.
//!
//! Every GP value is an integer or a half-integer, so intermediates stay far
//! below the 128-bit range; overflow still surfaces as an error rather than a
//! wrapped value.

use crate::error::{Error, Result};
use std::fmt;

/// Fraction in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };

    pub fn new(num: i128, den: i128) -> Result<Rational> {
        if den == 0 {
            return Err(Error::Overflow);
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
        Ok(Rational {
            num: sign * num / g,
            den: den.checked_abs().ok_or(Error::Overflow)? / g,
        })
    }

    pub fn from_integer(n: i128) -> Rational {
        Rational { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn checked_add(&self, other: &Rational) -> Result<Rational> {
        let num = self
            .num
            .checked_mul(other.den)
            .and_then(|a| other.num.checked_mul(self.den).and_then(|b| a.checked_add(b)))
            .ok_or(Error::Overflow)?;
        let den = self.den.checked_mul(other.den).ok_or(Error::Overflow)?;
        Rational::new(num, den)
    }

    pub fn checked_mul(&self, other: &Rational) -> Result<Rational> {
        let num = self.num.checked_mul(other.num).ok_or(Error::Overflow)?;
        let den = self.den.checked_mul(other.den).ok_or(Error::Overflow)?;
        Rational::new(num, den)
    }

    pub fn checked_mul_int(&self, k: i128) -> Result<Rational> {
        let num = self.num.checked_mul(k).ok_or(Error::Overflow)?;
        Rational::new(num, self.den)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalizes_to_lowest_terms() {
        let r = Rational::new(10, 4).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (5, 2));
        let r = Rational::new(-6, -4).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (3, 2));
        let r = Rational::new(3, -6).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (-1, 2));
        assert!(Rational::new(0, 5).unwrap().is_integer());
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Rational::new(1, 2).unwrap();
        let b = Rational::new(1, 3).unwrap();
        assert_eq!(a.checked_add(&b).unwrap(), Rational::new(5, 6).unwrap());
        assert_eq!(a.checked_mul(&b).unwrap(), Rational::new(1, 6).unwrap());
        assert_eq!(a.checked_mul_int(4).unwrap(), Rational::from_integer(2));
    }

    #[test]
    fn overflow_detected() {
        let big = Rational::from_integer(i128::MAX);
        assert_eq!(big.checked_add(&Rational::from_integer(1)), Err(Error::Overflow));
        assert_eq!(big.checked_mul_int(2), Err(Error::Overflow));
    }

    proptest! {
        #[test]
        fn add_commutes_and_stays_reduced(
            a in -1000i128..1000, b in 1i128..1000,
            c in -1000i128..1000, d in 1i128..1000,
        ) {
            let x = Rational::new(a, b).unwrap();
            let y = Rational::new(c, d).unwrap();
            let s = x.checked_add(&y).unwrap();
            prop_assert_eq!(s, y.checked_add(&x).unwrap());
            let g = super::gcd(s.numerator().unsigned_abs(), s.denominator().unsigned_abs());
            prop_assert!(g == 1 || s.numerator() == 0);
            prop_assert!(s.denominator() >= 1);
        }
    }
}
