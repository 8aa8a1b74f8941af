use std::collections::HashMap;

use crate::charts::{vector_field, ChartDescriptor};
use crate::error::{Error, Result};
use crate::groebner::{negate_vars, quotient_dimension, QuotientDimension};
use crate::polyalg::{Ctx, Role};
use crate::zeroscheme::{FamilyKind, MatrixFamily};
use crate::{Poly, Rational};

/// Ideal of the zero scheme of the total vector field of a family on a chart.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSchemeIdeal {
    pub chart: ChartDescriptor,
    pub family: MatrixFamily,
    pub ctx: Ctx,
    pub generators: Vec<Poly>,
}

/// Zero-scheme ideal over a torus family.
pub fn borel_ideal(chart: &ChartDescriptor, family: &MatrixFamily) -> Result<ZeroSchemeIdeal> {
    if !family.kind.is_torus() {
        return Err(Error::Unsupported(format!("{family} is not a torus family")));
    }
    zero_scheme_ideal(chart, family)
}

/// Zero-scheme ideal over a Kostant-type family.
pub fn kostant_ideal(chart: &ChartDescriptor, family: &MatrixFamily) -> Result<ZeroSchemeIdeal> {
    if family.kind.is_torus() {
        return Err(Error::Unsupported(format!("{family} is not a Kostant family")));
    }
    zero_scheme_ideal(chart, family)
}

/// Zero-scheme ideal for any supported family.
pub fn zero_scheme_ideal(chart: &ChartDescriptor, family: &MatrixFamily) -> Result<ZeroSchemeIdeal> {
    let vf = vector_field(chart, family)?;
    Ok(ZeroSchemeIdeal { chart: chart.clone(), family: family.clone(), ctx: vf.ctx, generators: vf.components })
}

impl ZeroSchemeIdeal {
    pub fn params(&self) -> Vec<usize> {
        self.ctx.params()
    }

    pub fn cells(&self) -> Vec<usize> {
        self.ctx.cells()
    }

    pub fn torus_params(&self) -> Vec<usize> {
        self.ctx.indices_with(|v| v.role == Role::TorusParam)
    }

    /// Degree of every generator, asserting `deg g_i = a_i + 2`.
    pub fn homogeneity_report(&self) -> Result<Vec<u64>> {
        let mut out = Vec::with_capacity(self.generators.len());
        for (i, g) in self.generators.iter().enumerate() {
            let expected = self.chart.bb_weights[i] as i64 + 2;
            match g.weighted_degree() {
                Ok(d) if d as i64 == expected => out.push(d),
                Ok(d) => return Err(Error::HomogeneityViolation { index: i, expected, got: d.to_string() }),
                Err(Error::ZeroPolynomial) => out.push(expected as u64),
                Err(_) => return Err(Error::HomogeneityViolation { index: i, expected, got: "inhomogeneous".into() }),
            }
        }
        Ok(out)
    }

    /// Dimension of the quotient by generators plus all parameters; finite for
    /// a regular sequence.
    pub fn regular_sequence_staircase(&self) -> Result<QuotientDimension> {
        let mut gens = self.generators.clone();
        for p in self.params() {
            gens.push(Poly::var_at(&self.ctx, p));
        }
        quotient_dimension(&gens)
    }

    /// Generators specialized at parameter values, in the cell-only ring.
    pub fn fiber_generators(&self, values: &[Rational]) -> Result<(Ctx, Vec<Poly>)> {
        let params = self.params();
        if values.len() != params.len() {
            return Err(Error::SizeMismatch { expected: params.len(), got: values.len() });
        }
        let target = self.ctx.sub_context(&self.cells());
        let mut b = HashMap::new();
        for (&p, v) in params.iter().zip(values) {
            b.insert(self.ctx.var(p).name.clone(), Poly::constant(&target, v.clone()));
        }
        let gens = self.generators.iter().map(|g| g.map_into(&target, &b)).collect::<Result<Vec<_>>>()?;
        Ok((target, gens))
    }

    /// `dim_ℚ` of the fiber over the given parameter values.
    pub fn fiber_dimension(&self, values: &[Rational]) -> Result<u64> {
        let (_, gens) = self.fiber_generators(values)?;
        match quotient_dimension(&gens)? {
            QuotientDimension::Finite(d) => Ok(d),
            QuotientDimension::Infinite => Err(Error::PositiveDimensionalFiber),
        }
    }

    /// Applies `v ↦ −v` to every torus parameter.
    pub fn flip_sign(&self, p: &Poly) -> Poly {
        let tp: Vec<usize> = p.ctx().indices_with(|v| v.role == Role::TorusParam);
        negate_vars(p, &tp)
    }

    pub fn is_torus_family(&self) -> bool {
        matches!(self.family.kind, FamilyKind::BorelTorus | FamilyKind::PrincipalSL2Torus)
    }
}
