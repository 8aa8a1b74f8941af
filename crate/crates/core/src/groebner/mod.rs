//! Buchberger kernel: reduced Gröbner bases, normal forms, elimination,
//! quotient dimensions and Hilbert series of graded quotients.

mod basis;
mod order;

pub use basis::{buchberger, GroebnerBasis};
pub use order::MonomialOrder;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyalg::{hilbert_series_monomial_quotient, Ctx, HilbertSeries, Monomial, Polynomial};

/// Dimension of a quotient ring as a vector space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for QuotientDimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuotientDimension::Finite(n) => write!(f, "{n}"),
            QuotientDimension::Infinite => write!(f, "infinite"),
        }
    }
}

fn nonzero<C: Field>(gens: &[Polynomial<C>]) -> Vec<Polynomial<C>> {
    gens.iter().filter(|g| !g.is_zero()).cloned().collect()
}

/// Generators of `⟨gens⟩ ∩ k[variables outside drop]`, in the same context.
pub fn eliminate<C: Field>(gens: &[Polynomial<C>], drop: &[usize]) -> Result<Vec<Polynomial<C>>> {
    let gens = nonzero(gens);
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let order = if drop.is_empty() {
        MonomialOrder::weighted_degrevlex(first.ctx())
    } else {
        MonomialOrder::elimination(first.ctx(), drop)
    };
    let gb = buchberger(&gens, &order)?;
    Ok(gb.generators().iter().filter(|g| drop.iter().all(|&v| !g.involves(v))).map(|g| g.primitive()).collect())
}

/// Elimination followed by transport into the context without `drop`.
pub fn eliminate_into<C: Field>(gens: &[Polynomial<C>], drop: &[usize]) -> Result<(Ctx, Vec<Polynomial<C>>)> {
    let ctx = gens.first().ok_or(Error::SizeMismatch { expected: 1, got: 0 })?.ctx().clone();
    let target = ctx.without(drop);
    let kept = eliminate(gens, drop)?;
    let moved = kept.iter().map(|g| g.transport(&target)).collect::<Result<Vec<_>>>()?;
    Ok((target, moved))
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Number of standard monomials for the given leading monomials.
pub fn staircase_size(leads: &[Monomial], nvars: usize) -> QuotientDimension {
    if leads.iter().any(|m| m.iter().all(|&e| e == 0)) {
        return QuotientDimension::Finite(0);
    }
    let mut bounds = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let pure = leads.iter().filter(|m| m.iter().enumerate().all(|(i, &e)| i == v || e == 0)).map(|m| m[v]).min();
        match pure {
            Some(b) => bounds.push(b),
            None => return QuotientDimension::Infinite,
        }
    }
    fn rec(i: usize, m: &mut Vec<u32>, bounds: &[u32], leads: &[Monomial]) -> u64 {
        if leads.iter().any(|l| divides(l, m)) {
            return 0;
        }
        if i == bounds.len() {
            return 1;
        }
        let mut total = 0;
        for e in 0..bounds[i] {
            m[i] = e;
            let c = rec(i + 1, m, bounds, leads);
            total += c;
        }
        m[i] = 0;
        total
    }
    let mut m = vec![0; nvars];
    QuotientDimension::Finite(rec(0, &mut m, &bounds, leads))
}

/// Vector-space dimension of `k[ctx]/⟨gens⟩`, using the given order.
pub fn quotient_dimension_with<C: Field>(gens: &[Polynomial<C>], order: &MonomialOrder) -> Result<QuotientDimension> {
    let gens = nonzero(gens);
    let Some(first) = gens.first() else {
        return Err(Error::SizeMismatch { expected: 1, got: 0 });
    };
    let n = first.ctx().len();
    let gb = buchberger(&gens, order)?;
    Ok(staircase_size(&gb.leading_monomials(), n))
}

/// Vector-space dimension of `k[ctx]/⟨gens⟩`. Every context variable counts,
/// so parameters must already be specialized away.
pub fn quotient_dimension<C: Field>(gens: &[Polynomial<C>]) -> Result<QuotientDimension> {
    let gens = nonzero(gens);
    let Some(first) = gens.first() else {
        return Ok(QuotientDimension::Infinite);
    };
    let order = MonomialOrder::weighted_degrevlex(first.ctx());
    quotient_dimension_with(&gens, &order)
}

/// Hilbert series of the graded quotient by a homogeneous ideal.
pub fn hilbert_series_ideal<C: Field>(gens: &[Polynomial<C>]) -> Result<HilbertSeries> {
    let gens = nonzero(gens);
    let Some(first) = gens.first() else {
        return Err(Error::SizeMismatch { expected: 1, got: 0 });
    };
    let ctx = first.ctx().clone();
    for g in &gens {
        g.weighted_degree()?;
    }
    let gb = buchberger(&gens, &MonomialOrder::weighted_degrevlex(&ctx))?;
    Ok(hilbert_series_monomial_quotient(&gb.leading_monomials(), &ctx.weights()))
}

/// Whether two generating sets define the same ideal.
pub fn ideals_equal<C: Field>(a: &[Polynomial<C>], b: &[Polynomial<C>]) -> Result<bool> {
    let (a, b) = (nonzero(a), nonzero(b));
    match (a.first(), b.first()) {
        (None, None) => return Ok(true),
        (None, _) | (_, None) => return Ok(false),
        _ => {}
    }
    let ctx = a[0].ctx().clone();
    let order = MonomialOrder::weighted_degrevlex(&ctx);
    let ga = buchberger(&a, &order)?;
    let gb = buchberger(&b, &order)?;
    for p in &b {
        if !ga.contains(p)? {
            return Ok(false);
        }
    }
    for p in &a {
        if !gb.contains(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every element of `sub` lies in the ideal generated by `gens`.
pub fn ideal_contains_all<C: Field>(gens: &[Polynomial<C>], sub: &[Polynomial<C>]) -> Result<bool> {
    let gens = nonzero(gens);
    if gens.is_empty() {
        return Ok(sub.iter().all(|p| p.is_zero()));
    }
    let gb = buchberger(&gens, &MonomialOrder::weighted_degrevlex(gens[0].ctx()))?;
    for p in sub {
        if !gb.contains(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Applies `var ↦ -var` to the listed variables.
pub fn negate_vars<C: Field>(p: &Polynomial<C>, vars: &[usize]) -> Polynomial<C> {
    let ctx = p.ctx().clone();
    let mut b = HashMap::new();
    for &v in vars {
        b.insert(ctx.var(v).name.clone(), -Polynomial::var_at(&ctx, v));
    }
    p.substitute(&b).expect("same-context substitution")
}
