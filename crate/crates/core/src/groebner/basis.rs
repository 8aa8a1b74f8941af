use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::order::MonomialOrder;
use crate::polyalg::{Ctx, Monomial, Polynomial};

/// Terms sorted ascending in the monomial order, so the leading term is last.
#[derive(Clone, Debug)]
pub(crate) struct Sorted<C> {
    pub(crate) terms: Vec<(Monomial, C)>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn quotient(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

impl<C: Field> Sorted<C> {
    pub(crate) fn from_poly(p: &Polynomial<C>, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, C)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.compare(&a.0, &b.0));
        Sorted { terms }
    }

    pub(crate) fn to_poly(&self, ctx: &Ctx) -> Polynomial<C> {
        Polynomial::from_terms(ctx, self.terms.iter().cloned())
    }

    pub(crate) fn lead(&self) -> Option<&(Monomial, C)> {
        self.terms.last()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self - c · x^m · g`, merging two sorted term lists.
    fn sub_mul(&self, c: &C, m: &[u32], g: &Sorted<C>, order: &MonomialOrder) -> Self {
        let shifted = g
            .terms
            .iter()
            .map(|(gm, gc)| (gm.iter().zip(m).map(|(x, y)| x + y).collect::<Monomial>(), -(c.clone() * gc.clone())));
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().cloned().peekable();
        let mut b = shifted.peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.compare(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap()),
                Ordering::Greater => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m1, c1) = a.next().unwrap();
                    let (_, c2) = b.next().unwrap();
                    let s = c1 + c2;
                    if !s.is_zero() {
                        out.push((m1, s));
                    }
                }
            }
        }
        Sorted { terms: out }
    }

    fn normalized(mut self) -> Self {
        if self.terms.is_empty() {
            return self;
        }
        let coeffs: Vec<C> = self.terms.iter().rev().map(|t| t.1.clone()).collect();
        let s = C::normalizer(&coeffs);
        for t in &mut self.terms {
            t.1 = t.1.clone() * s.clone();
        }
        self
    }

    fn make_monic(mut self) -> Self {
        if let Some((_, lc)) = self.terms.last().cloned() {
            let inv = C::one() / lc;
            for t in &mut self.terms {
                t.1 = t.1.clone() * inv.clone();
            }
        }
        self
    }
}

/// Complete reduction of `p` modulo `basis`. With `tail = false` only the
/// leading term is reduced until it is irreducible.
pub(crate) fn reduce<C: Field>(p: Sorted<C>, basis: &[Sorted<C>], order: &MonomialOrder, tail: bool) -> Sorted<C> {
    let mut p = p;
    let mut rem: Vec<(Monomial, C)> = Vec::new();
    while let Some((lm, lc)) = p.terms.last().cloned() {
        let reducer = basis.iter().find(|g| g.lead().is_some_and(|(gm, _)| divides(gm, &lm)));
        match reducer {
            Some(g) => {
                let (gm, gc) = g.lead().unwrap();
                let c = lc / gc.clone();
                p = p.sub_mul(&c, &quotient(&lm, gm), g, order);
            }
            None => {
                if !tail {
                    break;
                }
                rem.push(p.terms.pop().unwrap());
            }
        }
    }
    if tail {
        rem.reverse();
        Sorted { terms: rem }
    } else {
        p
    }
}

/// A Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<C> {
    ctx: Ctx,
    generators: Vec<Polynomial<C>>,
    sorted: Vec<Sorted<C>>,
    order: MonomialOrder,
    reduced: bool,
}

impl<C: Field> GroebnerBasis<C> {
    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().filter_map(|s| s.lead().map(|t| t.0.clone())).collect()
    }

    /// Fully reduced remainder of `p`.
    pub fn normal_form(&self, p: &Polynomial<C>) -> Result<Polynomial<C>> {
        if p.ctx() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        let s = Sorted::from_poly(p, &self.order);
        Ok(reduce(s, &self.sorted, &self.order, true).to_poly(&self.ctx))
    }

    pub fn contains(&self, p: &Polynomial<C>) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Normal form along a caller-chosen reduction path: `pick(k)` returns an
    /// index below `k` and selects, at every step, which reducible term and
    /// which reducer to use.
    pub fn normal_form_by(&self, p: &Polynomial<C>, pick: &mut dyn FnMut(usize) -> usize) -> Result<Polynomial<C>> {
        if p.ctx() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        let leads = self.leading_monomials();
        let mut p = p.clone();
        loop {
            let reducible: Vec<Monomial> =
                p.terms().filter(|(m, _)| leads.iter().any(|l| divides(l, m))).map(|(m, _)| m.clone()).collect();
            if reducible.is_empty() {
                return Ok(p);
            }
            let m = &reducible[pick(reducible.len())];
            let cands: Vec<usize> = (0..leads.len()).filter(|&i| divides(&leads[i], m)).collect();
            let gi = cands[pick(cands.len())];
            let g = &self.sorted[gi];
            let (gm, gc) = g.lead().unwrap();
            let c = p.coeff(m) / gc.clone();
            p = &p - &self.generators[gi].mul_monomial(&quotient(m, gm), &c);
        }
    }
}

fn lead_of<C: Field>(s: &Sorted<C>) -> &Monomial {
    &s.lead().expect("nonzero basis element").0
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed by the normal strategy (smallest lcm first, ties by
/// index) with Buchberger's coprime and chain criteria. Every new element is
/// made primitive.
pub fn buchberger<C: Field>(gens: &[Polynomial<C>], order: &MonomialOrder) -> Result<GroebnerBasis<C>> {
    let ctx = gens.first().ok_or(Error::SizeMismatch { expected: 1, got: 0 })?.ctx().clone();
    if gens.iter().any(|g| g.ctx() != &ctx) {
        return Err(Error::ContextMismatch);
    }
    let mut basis: Vec<Sorted<C>> = Vec::new();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

    let insert = |h: Sorted<C>,
                  basis: &mut Vec<Sorted<C>>,
                  pending: &mut Vec<(usize, usize)>,
                  set: &mut HashSet<(usize, usize)>| {
        let t = basis.len();
        basis.push(h);
        for i in 0..t {
            pending.push((i, t));
            set.insert((i, t));
        }
    };

    for g in gens {
        let s = Sorted::from_poly(g, order);
        let r = reduce(s, &basis, order, true).normalized();
        if !r.is_zero() {
            insert(r, &mut basis, &mut pending, &mut pending_set);
        }
    }

    while !pending.is_empty() {
        let best = (0..pending.len())
            .min_by(|&x, &y| {
                let (i1, j1) = pending[x];
                let (i2, j2) = pending[y];
                let l1 = lcm(lead_of(&basis[i1]), lead_of(&basis[j1]));
                let l2 = lcm(lead_of(&basis[i2]), lead_of(&basis[j2]));
                order.compare(&l1, &l2).then((j1, i1).cmp(&(j2, i2)))
            })
            .unwrap();
        let (i, j) = pending.swap_remove(best);
        pending_set.remove(&(i, j));
        let (mi, mj) = (lead_of(&basis[i]).clone(), lead_of(&basis[j]).clone());
        if coprime(&mi, &mj) {
            continue;
        }
        let l = lcm(&mi, &mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(lead_of(&basis[k]), &l)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let (gi, gj) = (&basis[i], &basis[j]);
        let ci = gi.lead().unwrap().1.clone();
        let cj = gj.lead().unwrap().1.clone();
        // S = x^(l-mi)/ci · gi - x^(l-mj)/cj · gj
        let zero = Sorted { terms: Vec::new() };
        let s = zero.sub_mul(&(-(C::one() / ci)), &quotient(&l, &mi), gi, order).sub_mul(
            &(C::one() / cj),
            &quotient(&l, &mj),
            gj,
            order,
        );
        let r = reduce(s, &basis, order, true).normalized();
        if r.is_zero() {
            continue;
        }
        let unit = r.terms.len() == 1 && r.terms[0].0.iter().all(|&e| e == 0);
        insert(r, &mut basis, &mut pending, &mut pending_set);
        if unit {
            break;
        }
    }

    // Minimalize, then interreduce.
    let mut keep: Vec<Sorted<C>> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = lead_of(g);
        let redundant =
            basis.iter().enumerate().any(|(k, h)| k != idx && divides(lead_of(h), lm) && (lead_of(h) != lm || k < idx));
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced: Vec<Sorted<C>> = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<Sorted<C>> = keep.iter().enumerate().filter(|&(o, _)| o != k).map(|(_, g)| g.clone()).collect();
        let r = reduce(keep[k].clone(), &others, order, true).make_monic();
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.compare(lead_of(b), lead_of(a)));
    let generators = reduced.iter().map(|s| s.to_poly(&ctx)).collect();
    Ok(GroebnerBasis { ctx, generators, sorted: reduced, order: order.clone(), reduced: true })
}
