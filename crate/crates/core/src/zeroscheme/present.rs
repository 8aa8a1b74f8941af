use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groebner::{eliminate_into, hilbert_series_ideal};
use crate::polyalg::{Ctx, HilbertSeries};
use crate::zeroscheme::ZeroSchemeIdeal;
use crate::{q, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Triangular substitution (eliminates whatever it can).
    #[default]
    Auto,
    Triangular,
    /// Block-order elimination of the same coordinates.
    Groebner,
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "triangular" => Ok(Strategy::Triangular),
            "groebner" => Ok(Strategy::Groebner),
            _ => Err(Error::Grammar { input: s.into(), msg: "expected auto, triangular or groebner".into() }),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Auto => "auto",
            Strategy::Triangular => "triangular",
            Strategy::Groebner => "groebner",
        })
    }
}

/// An eliminated presentation of the coordinate ring of the zero scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct Presentation {
    /// Parameters followed by the kept cell coordinates.
    pub ctx: Ctx,
    pub kept: Vec<String>,
    pub relations: Vec<Poly>,
    /// Eliminated coordinates as polynomials in `ctx` (triangular only).
    pub substitutions: Vec<(String, Poly)>,
    pub strategy: Strategy,
}

/// A generator `c·x + r` with `c` a nonzero constant and `x` absent from `r`.
fn linear_in(g: &Poly, x: usize) -> Option<Poly> {
    let mut lin = None;
    for (m, c) in g.terms() {
        if m[x] == 0 {
            continue;
        }
        let pure = m[x] == 1 && m.iter().enumerate().all(|(i, &e)| i == x || e == 0);
        if !pure || lin.is_some() {
            return None;
        }
        lin = Some(c.clone());
    }
    let c = lin?;
    let x_poly = Poly::var_at(g.ctx(), x).scale(&c);
    Some((g - &x_poly).scale(&(-(q(1) / c))))
}

struct Triangular {
    gens: Vec<Poly>,
    subs: Vec<(usize, Poly)>,
}

/// Repeatedly solves some generator for the latest cell coordinate occurring
/// in it only linearly, and substitutes.
fn triangulate(ideal: &ZeroSchemeIdeal) -> Result<Triangular> {
    let ctx = &ideal.ctx;
    let mut gens: Vec<Poly> = ideal.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut subs: Vec<(usize, Poly)> = Vec::new();
    let cells = ideal.cells();
    loop {
        let mut choice = None;
        'outer: for &x in cells.iter().rev() {
            if subs.iter().any(|(v, _)| *v == x) {
                continue;
            }
            for (gi, g) in gens.iter().enumerate() {
                if let Some(expr) = linear_in(g, x) {
                    choice = Some((gi, x, expr));
                    break 'outer;
                }
            }
        }
        let Some((gi, x, expr)) = choice else { break };
        gens.remove(gi);
        let mut b = HashMap::new();
        b.insert(ctx.var(x).name.clone(), expr.clone());
        gens = gens.iter().map(|g| g.substitute(&b)).collect::<Result<Vec<_>>>()?;
        gens.retain(|g| !g.is_zero());
        for (_, e) in subs.iter_mut() {
            *e = e.substitute(&b)?;
        }
        subs.push((x, expr));
    }
    Ok(Triangular { gens, subs })
}

/// Eliminated presentation: kept variables, relations, and (for the
/// triangular route) the eliminated coordinates in terms of the kept ones.
pub fn present(ideal: &ZeroSchemeIdeal, strategy: Strategy) -> Result<Presentation> {
    let ctx = &ideal.ctx;
    let tri = triangulate(ideal)?;
    let drop: Vec<usize> = {
        let mut d: Vec<usize> = tri.subs.iter().map(|(v, _)| *v).collect();
        d.sort_unstable();
        d
    };
    let target = ctx.without(&drop);
    let kept: Vec<String> =
        ideal.cells().into_iter().filter(|c| !drop.contains(c)).map(|c| ctx.var(c).name.clone()).collect();
    match strategy {
        Strategy::Auto | Strategy::Triangular => {
            let relations =
                tri.gens.iter().map(|g| Ok(g.transport(&target)?.primitive())).collect::<Result<Vec<_>>>()?;
            let mut substitutions = Vec::new();
            for (v, e) in &tri.subs {
                substitutions.push((ctx.var(*v).name.clone(), e.transport(&target)?));
            }
            let order: Vec<String> = ideal.cells().iter().map(|&c| ctx.var(c).name.clone()).collect();
            substitutions.sort_by_key(|(n, _)| order.iter().position(|o| o == n));
            Ok(Presentation { ctx: target, kept, relations, substitutions, strategy })
        }
        Strategy::Groebner => {
            let (t2, relations) = eliminate_into(&ideal.generators, &drop)?;
            debug_assert_eq!(t2, target);
            Ok(Presentation { ctx: target, kept, relations, substitutions: Vec::new(), strategy })
        }
    }
}

impl Presentation {
    /// Hilbert series of the presented ring.
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        if self.relations.is_empty() {
            return Ok(crate::polyalg::hilbert_series_monomial_quotient(&[], &self.ctx.weights()));
        }
        hilbert_series_ideal(&self.relations)
    }

    /// Parameter indices of the presentation ring.
    pub fn params(&self) -> Vec<usize> {
        self.ctx.params()
    }

    /// Hilbert numerator over the parameter ring, i.e. the Poincaré
    /// polynomial when the ring is free over the parameters.
    pub fn hilbert_numerator(&self) -> Result<Vec<i64>> {
        let hs = self.hilbert_series()?;
        let w: Vec<u32> = self.params().iter().map(|&p| self.ctx.weight(p)).collect();
        hs.numerator_over(&w)
            .ok_or_else(|| Error::Unsupported(format!("Hilbert series {hs} is not a polynomial over the parameters")))
    }

    /// Rank over the parameter ring.
    pub fn rank(&self) -> Result<i64> {
        Ok(self.hilbert_numerator()?.iter().sum())
    }
}
