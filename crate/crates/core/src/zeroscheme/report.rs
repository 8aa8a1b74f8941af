//! Serializable summaries of a zero scheme and its presentation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::polyalg::format_t_poly;
use crate::zeroscheme::{components_over_regular, present, Strategy, ZeroSchemeIdeal};
use crate::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarEntry {
    pub name: String,
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReport {
    pub params: Vec<VarEntry>,
    pub cells: Vec<VarEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub kept: Vec<String>,
    pub relations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub variety: String,
    pub family: String,
    pub ring: RingReport,
    pub generators: Vec<String>,
    pub presentation: PresentationReport,
    pub rank: i64,
    pub hilbert_numerator: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<BTreeMap<String, String>>>,
}

/// Output options for [`build_report`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub strategy: Strategy,
    /// Print with `v ↦ −v` applied to the torus parameters.
    pub flip_sign: bool,
    pub components: bool,
}

pub fn build_report(ideal: &ZeroSchemeIdeal, opts: ReportOptions) -> Result<Report> {
    let show = |p: &Poly, normalize: bool| {
        let p = if opts.flip_sign { ideal.flip_sign(p) } else { p.clone() };
        if normalize { p.primitive() } else { p }.to_string()
    };
    let entries = |idx: Vec<usize>| {
        idx.into_iter().map(|i| VarEntry { name: ideal.ctx.var(i).name.clone(), weight: ideal.ctx.weight(i) }).collect()
    };
    let pres = present(ideal, opts.strategy)?;
    let components = if opts.components {
        let comps = components_over_regular(ideal)?;
        Some(comps.iter().map(|c| c.values.iter().map(|(k, v)| (k.clone(), show(v, false))).collect()).collect())
    } else {
        None
    };
    Ok(Report {
        variety: ideal.chart.to_string(),
        family: ideal.family.to_string(),
        ring: RingReport { params: entries(ideal.params()), cells: entries(ideal.cells()) },
        generators: ideal.generators.iter().map(|g| show(g, false)).collect(),
        presentation: PresentationReport {
            kept: pres.kept.clone(),
            relations: pres.relations.iter().map(|r| show(r, true)).collect(),
        },
        rank: pres.rank()?,
        hilbert_numerator: pres.hilbert_numerator()?,
        components,
    })
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = |v: &[VarEntry]| v.iter().map(|e| format!("{}:{}", e.name, e.weight)).collect::<Vec<_>>().join(" ");
        writeln!(f, "variety: {}", self.variety)?;
        writeln!(f, "family: {}", self.family)?;
        writeln!(f, "params: {}", vars(&self.ring.params))?;
        writeln!(f, "cells: {}", vars(&self.ring.cells))?;
        writeln!(f, "generators:")?;
        for g in &self.generators {
            writeln!(f, "  {g}")?;
        }
        writeln!(f, "kept: {}", self.presentation.kept.join(" "))?;
        writeln!(f, "relations:")?;
        for r in &self.presentation.relations {
            writeln!(f, "  {r}")?;
        }
        writeln!(f, "rank: {}", self.rank)?;
        write!(f, "hilbert numerator: {}", format_t_poly(&self.hilbert_numerator))?;
        if let Some(comps) = &self.components {
            writeln!(f)?;
            write!(f, "components:")?;
            for c in comps {
                let parts: Vec<String> = c.iter().map(|(k, v)| format!("{k} = {v}")).collect();
                write!(f, "\n  {}", parts.join(", "))?;
            }
        }
        Ok(())
    }
}
