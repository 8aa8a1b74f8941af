use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, RingElem};
use crate::polyalg::context::{same_ctx, Ctx};
use crate::Rational;

/// Dense exponent vector, one entry per context variable.
pub type Monomial = Vec<u32>;

/// Sparse polynomial over a [`Field`] in a weighted ring context.
#[derive(Clone, Debug)]
pub struct Polynomial<C> {
    ctx: Ctx,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Field> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

pub fn monomial_weight(ctx: &Ctx, m: &[u32]) -> u64 {
    m.iter().enumerate().map(|(i, &e)| e as u64 * ctx.weight(i) as u64).sum()
}

/// Canonical printing order: decreasing weighted degree, then larger exponents
/// of later context variables first.
pub fn print_order(ctx: &Ctx, a: &[u32], b: &[u32]) -> Ordering {
    monomial_weight(ctx, b).cmp(&monomial_weight(ctx, a)).then_with(|| b.iter().rev().cmp(a.iter().rev()))
}

impl<C: Field> Polynomial<C> {
    pub fn zero(ctx: &Ctx) -> Self {
        Polynomial { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &Ctx, c: C) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(vec![0; ctx.len()], c);
        }
        p
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, C::one())
    }

    pub fn from_int(ctx: &Ctx, n: i64) -> Self {
        Self::constant(ctx, C::from_i64(n))
    }

    pub fn var_at(ctx: &Ctx, i: usize) -> Self {
        let mut m = vec![0; ctx.len()];
        m[i] = 1;
        Self::monomial(ctx, m, C::one())
    }

    pub fn var(ctx: &Ctx, name: &str) -> Result<Self> {
        Ok(Self::var_at(ctx, ctx.require(name)?))
    }

    pub fn monomial(ctx: &Ctx, m: Monomial, c: C) -> Self {
        assert_eq!(m.len(), ctx.len(), "exponent vector length");
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(ctx: &Ctx, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.len(), self.ctx.len());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    /// Terms in canonical printing order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| print_order(&self.ctx, a.0, b.0));
        v
    }

    pub fn coeff(&self, m: &[u32]) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&vec![0; self.ctx.len()])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    /// Indices of variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ctx.len()).filter(|&i| self.terms.keys().any(|m| m[i] > 0)).collect()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m[var] > 0)
    }

    /// Common weighted degree of all terms.
    pub fn weighted_degree(&self) -> Result<u64> {
        let mut it = self.terms.keys().map(|m| monomial_weight(&self.ctx, m));
        let d = it.next().ok_or(Error::ZeroPolynomial)?;
        if it.all(|e| e == d) {
            Ok(d)
        } else {
            Err(Error::Inhomogeneous(self.to_string()))
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weighted_degree().is_ok()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ctx(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut r = Self::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                r.add_term(m, ca.clone() * cb.clone());
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &[u32], c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.iter().zip(mono).map(|(x, y)| x + y).collect(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Scalar multiple with integer coprime coefficients and positive leading
    /// coefficient in printing order (monic for fields without a content).
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<C> = self.sorted_terms().into_iter().map(|(_, c)| c.clone()).collect();
        self.scale(&C::normalizer(&coeffs))
    }

    /// Divides by the coefficient of the first term in printing order.
    pub fn monic(&self) -> Self {
        match self.sorted_terms().first() {
            Some((_, c)) => self.scale(&(C::one() / (*c).clone())),
            None => self.clone(),
        }
    }

    /// Image under the substitution `var ↦ image`; unbound variables stay.
    /// Images must live in the same context.
    pub fn substitute(&self, bindings: &HashMap<String, Polynomial<C>>) -> Result<Self> {
        self.map_into(&self.ctx.clone(), bindings)
    }

    /// Ring homomorphism into `target`: bound variables go to their images,
    /// every other variable to the same-named variable of `target`.
    pub fn map_into(&self, target: &Ctx, bindings: &HashMap<String, Polynomial<C>>) -> Result<Self> {
        let n = self.ctx.len();
        let mut images: Vec<Polynomial<C>> = Vec::with_capacity(n);
        for v in self.ctx.vars() {
            let img = match bindings.get(&v.name) {
                Some(p) => {
                    if !same_ctx(p.ctx(), target) {
                        return Err(Error::ContextMismatch);
                    }
                    p.clone()
                }
                None => match target.index_of(&v.name) {
                    Some(j) => Polynomial::var_at(target, j),
                    None => {
                        if self.involves(self.ctx.index_of(&v.name).unwrap()) {
                            return Err(Error::UnboundVariable(v.name.clone()));
                        }
                        Polynomial::zero(target)
                    }
                },
            };
            images.push(img);
        }
        Ok(self.apply_images(target, &images))
    }

    /// Ring homomorphism given by one image per variable of `self`.
    pub fn apply_images(&self, target: &Ctx, images: &[Polynomial<C>]) -> Self {
        let mut cache: HashMap<(usize, u32), Polynomial<C>> = HashMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = cache.entry((i, e)).or_insert_with(|| images[i].pow(e)).clone();
                t = &t * &pw;
                if t.is_zero() {
                    break;
                }
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        out
    }

    /// Replace the named variables by constants, staying in the same context.
    pub fn specialize(&self, values: &HashMap<String, C>) -> Result<Self> {
        let mut b = HashMap::new();
        for (k, v) in values {
            self.ctx.require(k)?;
            b.insert(k.clone(), Polynomial::constant(&self.ctx, v.clone()));
        }
        self.substitute(&b)
    }

    /// Full evaluation; every occurring variable must receive a value.
    pub fn evaluate(&self, values: &HashMap<String, C>) -> Result<C> {
        let mut vals = Vec::with_capacity(self.ctx.len());
        for (i, v) in self.ctx.vars().iter().enumerate() {
            match values.get(&v.name) {
                Some(x) => vals.push(Some(x.clone())),
                None if self.involves(i) => return Err(Error::UnboundVariable(v.name.clone())),
                None => vals.push(None),
            }
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t * vals[i].clone().unwrap();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Same polynomial viewed in a context that contains all occurring variables.
    pub fn transport(&self, target: &Ctx) -> Result<Self> {
        self.map_into(target, &HashMap::new())
    }

    /// Coefficients with respect to the variables in `vars`: maps an exponent
    /// vector over `vars` to the polynomial coefficient (with those variables
    /// set to zero exponent).
    pub fn coefficients_in(&self, vars: &[usize]) -> BTreeMap<Vec<u32>, Polynomial<C>> {
        let mut out: BTreeMap<Vec<u32>, Polynomial<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = vars.iter().map(|&i| m[i]).collect();
            let mut rest = m.clone();
            for &i in vars {
                rest[i] = 0;
            }
            out.entry(key).or_insert_with(|| Polynomial::zero(&self.ctx)).add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Polynomial::zero(&self.ctx);
        for (m, c) in &self.terms {
            if m[var] > 0 {
                let mut mm = m.clone();
                mm[var] -= 1;
                out.add_term(mm, c.clone() * C::from_i64(m[var] as i64));
            }
        }
        out
    }

    /// Exact quotient `self / d`, if `d` divides `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        self.check(d)?;
        if d.is_zero() {
            return Ok(None);
        }
        let lex_lead = |p: &Polynomial<C>| p.terms.keys().next_back().cloned();
        let dl = lex_lead(d).unwrap();
        let dc = d.terms[&dl].clone();
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(&self.ctx);
        while let Some(rl) = lex_lead(&rem) {
            if !rl.iter().zip(&dl).all(|(a, b)| a >= b) {
                return Ok(None);
            }
            let m: Monomial = rl.iter().zip(&dl).map(|(a, b)| a - b).collect();
            let c = rem.terms[&rl].clone() / dc.clone();
            rem = rem.try_sub(&d.mul_monomial(&m, &c))?;
            quo.add_term(m, c);
        }
        Ok(Some(quo))
    }
}

impl Polynomial<Rational> {
    /// Coefficients in printing order as rationals; convenience for callers.
    pub fn coefficients(&self) -> Vec<Rational> {
        self.sorted_terms().into_iter().map(|(_, c)| c.clone()).collect()
    }
}

impl<C: Field> RingElem for Polynomial<C> {
    fn zero_like(&self) -> Self {
        Polynomial::zero(&self.ctx)
    }
    fn one_like(&self) -> Self {
        Polynomial::one(&self.ctx)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn rational_like(&self, q: &Rational) -> Self {
        Polynomial::constant(&self.ctx, C::from_rational(q))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<C: Field> $tr<&Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                self.$checked(rhs).expect("polynomial operands from different contexts")
            }
        }
        impl<C: Field> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<C: Field> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}

impl<C: Field> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}
