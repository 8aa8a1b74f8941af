use std::fmt;

use crate::field::{FieldElem, RingElem};
use crate::polyalg::Ctx;
use crate::{Poly, Rational};

/// Quotient of two rational polynomials. Not kept in lowest terms: equality
/// is decided by cross-multiplication, and a denominator is cancelled only
/// when it divides the numerator exactly.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RationalFunction { num, den };
        r.simplify();
        r
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.ctx());
        RationalFunction { num: p, den }
    }

    pub fn var(ctx: &Ctx, name: &str) -> crate::Result<Self> {
        Ok(Self::from_poly(Poly::var(ctx, name)?))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    /// The polynomial represented, when the denominator divides out.
    pub fn to_polynomial(&self) -> Option<Poly> {
        self.num.exact_div(&self.den).ok().flatten()
    }

    fn simplify(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one(self.num.ctx());
            return;
        }
        if self.den.is_constant() {
            let c = self.den.constant_term();
            self.num = self.num.scale(&(Rational::from_integer(1.into()) / c));
            self.den = Poly::one(self.num.ctx());
            return;
        }
        if let Ok(Some(q)) = self.num.exact_div(&self.den) {
            self.num = q;
            self.den = Poly::one(self.num.ctx());
        }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl RingElem for RationalFunction {
    fn zero_like(&self) -> Self {
        RationalFunction::from_poly(Poly::zero(self.num.ctx()))
    }
    fn one_like(&self) -> Self {
        RationalFunction::from_poly(Poly::one(self.num.ctx()))
    }
    fn is_zero_elem(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RationalFunction::new(&self.num + &other.num, self.den.clone());
        }
        RationalFunction::new(&(&self.num * &other.den) + &(&other.num * &self.den), &self.den * &other.den)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return self.zero_like();
        }
        RationalFunction::new(&self.num * &other.num, &self.den * &other.den)
    }
    fn neg_ref(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
    fn rational_like(&self, q: &Rational) -> Self {
        RationalFunction::from_poly(Poly::constant(self.num.ctx(), q.clone()))
    }
}

impl FieldElem for RationalFunction {
    fn div_ref(&self, other: &Self) -> Option<Self> {
        if other.num.is_zero() {
            return None;
        }
        Some(RationalFunction::new(&self.num * &other.den, &self.den * &other.num))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
