//! Rational points of zero-dimensional systems: lex Gröbner basis, rational
//! roots of the last eliminant, back-substitution.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, MonomialOrder};
use crate::polyalg::Ctx;
use crate::{Poly, Rational};

/// Dense univariate polynomial, lowest degree first.
type Dense = Vec<Rational>;

fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn rem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap().clone() / lb.clone();
        for (i, bc) in b.iter().enumerate() {
            r[k + i] = r[k + i].clone() - c.clone() * bc.clone();
        }
        r = trim(r);
    }
    r
}

fn gcd(a: &Dense, b: &Dense) -> Dense {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn eval(p: &Dense, x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// Positive divisors of `n`, or `None` if `n` is too large to factor by trial
/// division.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return Some(vec![BigInt::one()]);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if d > 10_000_000 {
            return None;
        }
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Some(small)
}

/// Distinct rational roots of a univariate polynomial, and the degree of its
/// square-free part.
pub fn rational_roots(p: &[Rational]) -> Result<(Vec<Rational>, usize)> {
    let p = trim(p.to_vec());
    if p.len() <= 1 {
        return Ok((Vec::new(), 0));
    }
    let deriv: Dense =
        p.iter().enumerate().skip(1).map(|(i, c)| c.clone() * Rational::from_integer(i.into())).collect();
    let g = gcd(&p, &deriv);
    let sqfree_deg = (p.len() - 1) - (g.len() - 1);
    // Integer coefficients, with the power of x factored out.
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c.clone() * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let a0 = &ints[low];
    let an = ints.last().unwrap();
    if ints.len() - low > 1 {
        let (Some(num), Some(den)) = (divisors(a0), divisors(an)) else {
            return Err(Error::ComponentsUnavailable("coefficients too large for rational root search".into()));
        };
        for a in &num {
            for b in &den {
                for s in [1i64, -1] {
                    let r = Rational::new(a.clone() * BigInt::from(s), b.clone());
                    if !roots.contains(&r) && eval(&p, &r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    Ok((roots, sqfree_deg))
}

fn to_dense(p: &Poly, var: usize) -> Dense {
    let mut d = vec![Rational::zero(); p.degree_in(var) as usize + 1];
    for (m, c) in p.terms() {
        d[m[var] as usize] = c.clone();
    }
    d
}

/// All points of a zero-dimensional system, provided they are rational.
/// Points are assignments to every variable of `ctx`, sorted.
pub fn rational_points(system: &[Poly], ctx: &Ctx) -> Result<Vec<Vec<Rational>>> {
    let vars: Vec<usize> = (0..ctx.len()).collect();
    let mut out = Vec::new();
    solve_rec(system.to_vec(), ctx, &vars, &mut HashMap::new(), &mut out)?;
    out.sort();
    Ok(out)
}

fn solve_rec(
    system: Vec<Poly>,
    ctx: &Ctx,
    vars: &[usize],
    fixed: &mut HashMap<usize, Rational>,
    out: &mut Vec<Vec<Rational>>,
) -> Result<()> {
    let system: Vec<Poly> = system.into_iter().filter(|p| !p.is_zero()).collect();
    if system.iter().any(|p| p.is_constant()) {
        return Ok(());
    }
    let Some(&last) = vars.last() else {
        out.push((0..ctx.len()).map(|i| fixed[&i].clone()).collect());
        return Ok(());
    };
    if system.is_empty() {
        return Err(Error::PositiveDimensionalFiber);
    }
    let gb = buchberger(&system, &MonomialOrder::lex_with(vars.to_vec()))?;
    if gb.is_unit() {
        return Ok(());
    }
    let uni = gb.generators().iter().find(|g| g.support() == vec![last]).ok_or(Error::PositiveDimensionalFiber)?;
    let dense = to_dense(uni, last);
    let (roots, sqfree) = rational_roots(&dense)?;
    if roots.len() < sqfree {
        return Err(Error::ComponentsUnavailable(format!("eliminant {uni} has irrational roots")));
    }
    for r in roots {
        let mut b = HashMap::new();
        b.insert(ctx.var(last).name.clone(), Poly::constant(ctx, r.clone()));
        let next = gb.generators().iter().map(|g| g.substitute(&b)).collect::<Result<Vec<_>>>()?;
        fixed.insert(last, r);
        solve_rec(next, ctx, &vars[..vars.len() - 1], fixed, out)?;
        fixed.remove(&last);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qq};

    #[test]
    fn roots_of_products() {
        // (x - 1/2)(x + 3)^2 x = x^4 + 11/2 x^3 + 6 x^2 - 9/2 x
        let p = vec![q(0), qq(-9, 2), q(6), qq(11, 2), q(1)];
        let (roots, sq) = rational_roots(&p).unwrap();
        assert_eq!(roots, vec![q(-3), q(0), qq(1, 2)]);
        assert_eq!(sq, 3);
        let (roots, sq) = rational_roots(&[q(-2), q(0), q(1)]).unwrap();
        assert!(roots.is_empty());
        assert_eq!(sq, 2);
    }
}
