//! Moment graphs of torus actions and edge-compatible polynomial tuples.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, MonomialOrder};
use crate::matrix::Matrix;
use crate::polyalg::{Ctx, Monomial, RingContext, Role, Variable};
use crate::zeroscheme::{components_over_regular, Component, ZeroSchemeIdeal};
use crate::{q, Poly, Rational};

/// An edge between two fixed points, labelled by the linear form cutting out
/// the kernel of the torus on the connecting curve.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub form: Poly,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct GKMGraph {
    pub ctx: Ctx,
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    i: usize,
    j: usize,
    form: String,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    params: Vec<String>,
    vertices: Vec<String>,
    edges: Vec<EdgeJson>,
}

impl From<GKMGraph> for GraphJson {
    fn from(g: GKMGraph) -> Self {
        GraphJson {
            params: g.ctx.names(),
            vertices: g.vertices,
            edges: g.edges.into_iter().map(|e| EdgeJson { i: e.i, j: e.j, form: e.form.to_string() }).collect(),
        }
    }
}

impl TryFrom<GraphJson> for GKMGraph {
    type Error = Error;
    fn try_from(g: GraphJson) -> Result<Self> {
        let ctx = torus_ctx(&g.params)?;
        let edges = g
            .edges
            .into_iter()
            .map(|e| Ok(Edge { i: e.i, j: e.j, form: Poly::parse(&ctx, &e.form)? }))
            .collect::<Result<Vec<_>>>()?;
        Ok(GKMGraph { ctx, vertices: g.vertices, edges })
    }
}

fn torus_ctx(names: &[String]) -> Result<Ctx> {
    RingContext::new(names.iter().map(|n| Variable::new(n.clone(), 2, Role::TorusParam)).collect())
}

/// Scales a nonzero linear form to be primitive with its first nonzero
/// coefficient (in context order) positive.
pub fn normalize_form(p: &Poly) -> Poly {
    let p = p.primitive();
    let first = (0..p.ctx().len()).find_map(|i| {
        let mut m = vec![0; p.ctx().len()];
        m[i] = 1;
        let c = p.coeff(&m);
        (c != q(0)).then_some(c)
    });
    match first {
        Some(c) if c < q(0) => -&p,
        _ => p,
    }
}

impl GKMGraph {
    /// Torus rank.
    pub fn rank(&self) -> usize {
        self.ctx.len()
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        self.edges.iter().any(|e| (e.i, e.j) == (i.min(j), i.max(j)))
    }
}

/// Moment graph of `P^n` under the diagonal torus of `sl_{n+1}`: all pairs of
/// coordinate points, with forms `v_i − v_j` and `v_0 = 0`.
pub fn moment_graph_pn(n: usize) -> Result<GKMGraph> {
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let ctx = torus_ctx(&names)?;
    let v = |i: usize| if i == 0 { Poly::zero(&ctx) } else { Poly::var_at(&ctx, i - 1) };
    let mut edges = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            edges.push(Edge { i, j, form: normalize_form(&(&v(i) - &v(j))) });
        }
    }
    Ok(GKMGraph { ctx, vertices: (0..=n).map(|i| format!("z{i}")).collect(), edges })
}

/// A tuple of polynomials in the torus parameters, one per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseClass {
    pub values: Vec<Poly>,
}

/// Outcome of the edge congruence test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkmCheck {
    pub pass: bool,
    pub failing: Vec<(usize, usize)>,
}

/// For every edge `(i, j)`, whether `f_i − f_j` is divisible by its form.
pub fn is_gkm_class(g: &GKMGraph, c: &PiecewiseClass) -> Result<GkmCheck> {
    if c.values.len() != g.vertices.len() {
        return Err(Error::SizeMismatch { expected: g.vertices.len(), got: c.values.len() });
    }
    let mut failing = Vec::new();
    for e in &g.edges {
        let d = c.values[e.i].transport(&g.ctx)?.try_sub(&c.values[e.j].transport(&g.ctx)?)?;
        if d.exact_div(&e.form)?.is_none() {
            failing.push((e.i, e.j));
        }
    }
    Ok(GkmCheck { pass: failing.is_empty(), failing })
}

fn vertex_name(c: &Component, k: usize) -> String {
    match &c.label {
        Some(f) => format!("z{}", f.iter().map(|i| i.to_string()).collect::<String>()),
        None => format!("p{k}"),
    }
}

/// Components over the regular torus with vertex names.
fn named_components(ideal: &ZeroSchemeIdeal) -> Result<(Vec<String>, Vec<Component>)> {
    let comps = components_over_regular(ideal)?;
    let names = comps.iter().enumerate().map(|(k, c)| vertex_name(c, k)).collect();
    Ok((names, comps))
}

/// Values of a cell coordinate on the fixed-point components, in component
/// order; the vertex names come with it.
pub fn localize_presentation(ideal: &ZeroSchemeIdeal, coordinate: &str) -> Result<(Vec<String>, PiecewiseClass)> {
    ideal.ctx.require(coordinate)?;
    let (names, comps) = named_components(ideal)?;
    let values = comps
        .iter()
        .map(|c| c.values.get(coordinate).cloned().ok_or_else(|| Error::UnknownVariable(coordinate.into())))
        .collect::<Result<Vec<_>>>()?;
    Ok((names, PiecewiseClass { values }))
}

/// Graph on the fixed-point components with an edge wherever two components
/// meet along a hyperplane of the torus, labelled by that hyperplane.
pub fn collision_graph(ideal: &ZeroSchemeIdeal) -> Result<GKMGraph> {
    let (vertices, comps) = named_components(ideal)?;
    let pctx = comps
        .first()
        .and_then(|c| c.values.values().next())
        .map(|p| p.ctx().clone())
        .ok_or_else(|| Error::ComponentsUnavailable("no components".into()))?;
    let order = MonomialOrder::weighted_degrevlex(&pctx);
    let mut edges = Vec::new();
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            let diffs: Vec<Poly> =
                comps[i].values.iter().map(|(k, p)| p - &comps[j].values[k]).filter(|d| !d.is_zero()).collect();
            if diffs.is_empty() {
                return Err(Error::ComponentsUnavailable(format!("components {i} and {j} coincide")));
            }
            let gb = buchberger(&diffs, &order)?;
            if let [g] = gb.generators() {
                if g.weighted_degree()? == 2 {
                    edges.push(Edge { i, j, form: normalize_form(g) });
                }
            }
        }
    }
    Ok(GKMGraph { ctx: pctx, vertices, edges })
}

/// Monomials of total degree `d` in `nvars` variables.
fn monomials(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for mut rest in monomials(nvars - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Dimension of the space of edge-compatible tuples of homogeneous
/// polynomials of degree `d` (t-degree `2d`).
pub fn piecewise_dimension(g: &GKMGraph, d: u32) -> Result<usize> {
    let ctx = &g.ctx;
    let r = ctx.len();
    let monos = monomials(r, d);
    let nv = g.vertices.len();
    let ncols = nv * monos.len();
    // One linear condition per (edge, monomial on the hyperplane).
    let mut rows: BTreeMap<(usize, Monomial), Vec<(usize, Rational)>> = BTreeMap::new();
    for (ei, e) in g.edges.iter().enumerate() {
        // Restrict to the hyperplane form = 0 by solving for its first variable.
        let p = (0..r).find(|&i| e.form.degree_in(i) > 0).ok_or(Error::ZeroPolynomial)?;
        let mut unit = vec![0; r];
        unit[p] = 1;
        let c = e.form.coeff(&unit);
        let rest = &e.form - &Poly::var_at(ctx, p).scale(&c);
        let image = rest.scale(&(-(q(1) / c)));
        let mut b = HashMap::new();
        b.insert(ctx.var(p).name.clone(), image);
        for (ai, m) in monos.iter().enumerate() {
            let img = Poly::monomial(ctx, m.clone(), q(1)).substitute(&b)?;
            for (bm, bc) in img.terms() {
                let row = rows.entry((ei, bm.clone())).or_default();
                row.push((e.i * monos.len() + ai, bc.clone()));
                row.push((e.j * monos.len() + ai, -bc.clone()));
            }
        }
    }
    if rows.is_empty() {
        return Ok(ncols);
    }
    let mut m = Matrix::<Rational>::zeros(rows.len(), ncols);
    for (ri, entries) in rows.values().enumerate() {
        for (col, v) in entries {
            let cur = m.get(ri, *col).clone();
            m.set(ri, *col, cur + v.clone());
        }
    }
    Ok(ncols - m.rank())
}
