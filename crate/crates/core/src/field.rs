//! Scalar traits shared by the whole engine.
//!
//! [`RingElem`] is the minimal interface used by dense matrices: it is
//! implemented by coefficient fields and by polynomials, which carry their
//! ring context and therefore cannot produce a context-free zero. Elements
//! build zeros and ones "like themselves" instead.
//!
//! [`Field`] is the stronger, context-free interface required of polynomial
//! coefficients. Every `Field` is a [`FieldElem`].

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

use crate::Rational;

/// A commutative ring element that knows how to build its own zero and one.
pub trait RingElem: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Embeds an exact rational constant into the ring of `self`.
    fn rational_like(&self, q: &Rational) -> Self;
}

/// A ring element with exact division by nonzero elements.
pub trait FieldElem: RingElem {
    /// `None` when `other` is zero.
    fn div_ref(&self, other: &Self) -> Option<Self>;
}

/// An exact, context-free coefficient field.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    /// Splits off the printing sign: `(true, |c|)` for negative `c`.
    fn sign_split(&self) -> (bool, Self) {
        (false, self.clone())
    }

    /// Scalar that makes `coeffs` (leading coefficient first) canonical.
    /// The default makes the leading coefficient one.
    fn normalizer(coeffs: &[Self]) -> Self {
        Self::one() / coeffs[0].clone()
    }
}

impl<T> Field for Ratio<T>
where
    T: Integer + Signed + Clone + Debug + Display + FromPrimitive + Send + Sync,
{
    fn from_rational(q: &Rational) -> Self {
        let conv = |b: &num_bigint::BigInt| {
            T::from_i128(i128::try_from(b).expect("rational constant out of range"))
                .expect("rational constant out of range")
        };
        Ratio::new(conv(q.numer()), conv(q.denom()))
    }

    fn sign_split(&self) -> (bool, Self) {
        (self.is_negative(), self.abs())
    }

    /// Clears denominators and the content, leaving the leading coefficient positive.
    fn normalizer(coeffs: &[Self]) -> Self {
        let mut den = T::one();
        let mut num = T::zero();
        for c in coeffs {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        if num.is_zero() {
            return Self::one();
        }
        let s = Ratio::new(den, num);
        if coeffs[0].is_negative() {
            -s
        } else {
            s
        }
    }
}

impl<F: Field> RingElem for F {
    fn zero_like(&self) -> Self {
        F::zero()
    }
    fn one_like(&self) -> Self {
        F::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
    fn neg_ref(&self) -> Self {
        -self.clone()
    }
    fn rational_like(&self, q: &Rational) -> Self {
        F::from_rational(q)
    }
}

impl<F: Field> FieldElem for F {
    fn div_ref(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self.clone() / other.clone())
        }
    }
}

/// Parses an exact rational from `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().ok()?;
    let d: num_bigint::BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Ratio::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rationals_stay_reduced() {
        let r = q(6, -4);
        assert_eq!(r.numer(), &(-3).into());
        assert_eq!(r.denom(), &2.into());
        assert_eq!(q(0, 5), q(0, 1));
    }

    #[test]
    fn normalizer_clears_denominators() {
        let cs = [q(-1, 2), q(3, 4)];
        let s = Rational::normalizer(&cs);
        assert_eq!(s, q(-4, 1));
        assert_eq!(cs[0].clone() * s.clone(), q(2, 1));
        assert_eq!(cs[1].clone() * s, q(-3, 1));
    }

    #[test]
    fn small_ratios_are_fields_too() {
        let a: Ratio<i64> = Field::from_rational(&q(3, 7));
        assert_eq!(a, Ratio::new(3, 7));
        assert_eq!(<Ratio<i64> as Field>::normalizer(&[Ratio::new(2, 3)]), Ratio::new(3, 2));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("-3/6"), Some(q(-1, 2)));
        assert_eq!(parse_rational("7"), Some(q(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
