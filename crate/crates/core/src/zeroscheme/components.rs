//! Fixed-point components over the regular torus: polynomial sections of the
//! zero scheme over the parameter space, one per fixed point.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::groebner::{hilbert_series_ideal, quotient_dimension, QuotientDimension};
use crate::liealg::unipotent_conjugator_of;
use crate::matrix::Matrix;
use crate::polyalg::{Ctx, HilbertSeries, RationalFunction, RingContext, Role, Variable};
use crate::zeroscheme::{present, rational_points, Strategy, ZeroSchemeIdeal};
use crate::{Poly, Rational};

/// One component: every cell coordinate as a polynomial in the torus
/// parameters, with the fixed point it passes through when known.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub values: BTreeMap<String, Poly>,
    /// Column frame of the fixed point `ζ_i` with `M_w ζ_i` on this component.
    pub label: Option<Vec<usize>>,
}

/// Monomials of the given weighted degree in a context.
fn monomials_of_degree(ctx: &Ctx, degree: u64) -> Vec<Vec<u32>> {
    fn rec(ctx: &Ctx, i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == ctx.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = ctx.weight(i) as u64;
        let mut e = 0;
        while e * w <= left {
            cur.push(e as u32);
            rec(ctx, i + 1, left - e * w, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(ctx, 0, degree, &mut Vec::new(), &mut out);
    out
}

/// The ring of torus parameters of the ideal.
pub fn parameter_ctx(ideal: &ZeroSchemeIdeal) -> Ctx {
    ideal.ctx.sub_context(&ideal.params())
}

/// Components of `Z` over the regular torus, found as polynomial solutions
/// of the eliminated relations: each kept coordinate is written as a generic
/// homogeneous polynomial of its weight in the parameters, the identities in
/// the parameters become a zero-dimensional system in the unknown
/// coefficients, and the eliminated coordinates follow by back-substitution.
pub fn components_over_regular(ideal: &ZeroSchemeIdeal) -> Result<Vec<Component>> {
    if !ideal.is_torus_family() {
        return Err(Error::ComponentsUnavailable(format!("{} is not a torus family", ideal.family)));
    }
    let pres = present(ideal, Strategy::Triangular)?;
    let pctx = parameter_ctx(ideal);
    let np = pctx.len();

    // Unknown coefficients, placed after the presentation variables.
    let mut unknowns: Vec<(usize, Vec<u32>)> = Vec::new();
    for (k, name) in pres.kept.iter().enumerate() {
        let w = pres.ctx.weight(pres.ctx.require(name)?) as u64;
        for m in monomials_of_degree(&pctx, w) {
            unknowns.push((k, m));
        }
    }
    let uvars: Vec<Variable> = (0..unknowns.len()).map(|i| Variable::new(format!("u{i}"), 2, Role::Cell)).collect();
    let big = pctx.extended(uvars.clone())?;
    let uctx = RingContext::new(uvars)?;

    let mut ansatz = vec![Poly::zero(&big); pres.kept.len()];
    for (i, (k, m)) in unknowns.iter().enumerate() {
        let mut mono = m.clone();
        mono.resize(big.len(), 0);
        mono[np + i] = 1;
        ansatz[*k] = &ansatz[*k] + &Poly::monomial(&big, mono, Rational::from_integer(1.into()));
    }
    let mut b = HashMap::new();
    for (name, a) in pres.kept.iter().zip(&ansatz) {
        b.insert(name.clone(), a.clone());
    }
    for (i, v) in pctx.vars().iter().enumerate() {
        b.insert(v.name.clone(), Poly::var_at(&big, i));
    }
    let pidx: Vec<usize> = (0..np).collect();
    let images: Vec<Poly> =
        (0..big.len()).map(|j| if j < np { Poly::zero(&uctx) } else { Poly::var_at(&uctx, j - np) }).collect();
    let mut system = Vec::new();
    for r in &pres.relations {
        let img = r.map_into(&big, &b)?;
        system.extend(img.coefficients_in(&pidx).into_values().map(|c| c.apply_images(&uctx, &images)));
    }
    let points = if unknowns.is_empty() { vec![Vec::new()] } else { rational_points(&system, &uctx)? };
    if unknowns.is_empty() && system.iter().any(|p| !p.is_zero()) {
        return Ok(Vec::new());
    }

    let chi = ideal.chart.kind.euler_characteristic() as usize;
    if points.len() != chi {
        return Err(Error::ComponentsUnavailable(format!(
            "found {} polynomial sections, expected {chi}",
            points.len()
        )));
    }
    let labelled = fixed_point_components(ideal).ok();
    let mut out = Vec::with_capacity(points.len());
    for pt in points {
        let mut kept_vals: Vec<Poly> = vec![Poly::zero(&pctx); pres.kept.len()];
        for (val, (k, m)) in pt.iter().zip(&unknowns) {
            kept_vals[*k] = &kept_vals[*k] + &Poly::monomial(&pctx, m.clone(), val.clone());
        }
        let mut bind = HashMap::new();
        for (name, v) in pres.kept.iter().zip(&kept_vals) {
            bind.insert(name.clone(), v.clone());
        }
        for v in pctx.vars() {
            bind.insert(v.name.clone(), Poly::var(&pctx, &v.name)?);
        }
        let mut values = BTreeMap::new();
        for (name, v) in pres.kept.iter().zip(&kept_vals) {
            values.insert(name.clone(), v.clone());
        }
        for (name, e) in &pres.substitutions {
            values.insert(name.clone(), e.map_into(&pctx, &bind)?);
        }
        let label = labelled.as_ref().and_then(|l| l.iter().find(|c| c.values == values).and_then(|c| c.label.clone()));
        out.push(Component { values, label });
    }
    sort_components(&ideal.chart.cell_coords, &mut out);
    Ok(out)
}

fn sort_components(order: &[String], comps: &mut [Component]) {
    comps.sort_by_key(|c| (c.label.clone(), order.iter().map(|n| c.values[n].to_string()).collect_vec()));
}

/// The points `M_w ζ_i` for every torus-fixed frame `ζ_i`, computed over the
/// field of rational functions in the torus parameters.
pub fn fixed_point_components(ideal: &ZeroSchemeIdeal) -> Result<Vec<Component>> {
    if !ideal.is_torus_family() {
        return Err(Error::ComponentsUnavailable(format!("{} is not a torus family", ideal.family)));
    }
    let frames = ideal
        .chart
        .fixed_point_frames()
        .ok_or_else(|| Error::ComponentsUnavailable(format!("no fixed-point frames on {}", ideal.chart)))?;
    let pctx = parameter_ctx(ideal);
    let zero = RationalFunction::from_poly(Poly::zero(&pctx));
    let n = ideal.family.n;
    let mut w = Matrix::zeros_like(&zero, n, n);
    for d in &ideal.family.directions {
        let p = Poly::var(&pctx, &d.name)?;
        w = w.try_add(&d.element.matrix().map(&zero, |c| RationalFunction::from_poly(p.scale(c))))?;
    }
    let m = unipotent_conjugator_of(&w)?;
    let mut out = Vec::with_capacity(frames.len());
    for frame in frames {
        let mut y = Matrix::zeros_like(&zero, n, frame.len());
        for (j, &r) in frame.iter().enumerate() {
            for i in 0..n {
                y.set(i, j, m.get(i, r).clone());
            }
        }
        let coords = ideal.chart.coordinates_of_frame(&y)?;
        let mut values = BTreeMap::new();
        for (name, c) in ideal.chart.cell_coords.iter().zip(coords) {
            let p = c
                .to_polynomial()
                .ok_or_else(|| Error::ComponentsUnavailable(format!("coordinate {name} of M_w ζ is not polynomial")))?;
            values.insert(name.clone(), p);
        }
        out.push(Component { values, label: Some(frame) });
    }
    Ok(out)
}

/// Torus fiber of `Z` at rational parameter values.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedPointSolution {
    pub w: Vec<Rational>,
    pub points: Vec<BTreeMap<String, Rational>>,
    pub labels: Option<Vec<Vec<usize>>>,
}

/// Solves the fiber over `values` exactly; labels points by the fixed-point
/// components when those are available.
pub fn solve_fiber(ideal: &ZeroSchemeIdeal, values: &[Rational]) -> Result<FixedPointSolution> {
    let (cctx, gens) = ideal.fiber_generators(values)?;
    let raw = rational_points(&gens, &cctx)?;
    let names = cctx.names();
    let points: Vec<BTreeMap<String, Rational>> =
        raw.into_iter().map(|p| names.iter().cloned().zip(p).collect()).collect();
    let labels = fixed_point_components(ideal).ok().and_then(|comps| {
        let pvals: HashMap<String, Rational> =
            ideal.params().iter().map(|&i| ideal.ctx.var(i).name.clone()).zip(values.iter().cloned()).collect();
        points
            .iter()
            .map(|pt| {
                comps
                    .iter()
                    .find(|c| c.values.iter().all(|(k, p)| p.evaluate(&pvals).ok().as_ref() == pt.get(k)))
                    .and_then(|c| c.label.clone())
            })
            .collect::<Option<Vec<_>>>()
    });
    Ok(FixedPointSolution { w: values.to_vec(), points, labels })
}

/// Compares `HS(C[Z]) · ∏(1 − t^{deg p})` over the parameters with the
/// Poincaré polynomial of `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct PoincareCheck {
    pub pass: bool,
    pub series: HilbertSeries,
    pub numerator: Option<Vec<i64>>,
    pub betti: Vec<i64>,
}

pub fn poincare_check(ideal: &ZeroSchemeIdeal, betti: &[i64]) -> Result<PoincareCheck> {
    let series = hilbert_series_ideal(&ideal.generators)?;
    let w: Vec<u32> = ideal.params().iter().map(|&p| ideal.ctx.weight(p)).collect();
    let numerator = series.numerator_over(&w);
    let trim = |v: &[i64]| {
        let mut v = v.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    let pass = numerator.as_deref().map(trim) == Some(trim(betti));
    Ok(PoincareCheck { pass, series, numerator, betti: betti.to_vec() })
}

/// Whether the fiber over `values` is reduced: its length equals the number
/// of distinct points.
pub fn fiber_is_reduced(ideal: &ZeroSchemeIdeal, values: &[Rational]) -> Result<bool> {
    let (_, gens) = ideal.fiber_generators(values)?;
    let QuotientDimension::Finite(d) = quotient_dimension(&gens)? else {
        return Err(Error::PositiveDimensionalFiber);
    };
    Ok(solve_fiber(ideal, values)?.points.len() as u64 == d)
}
