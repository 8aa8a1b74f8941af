use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// What a ring variable stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    /// Coordinate on the torus 𝔱 (weight 2).
    TorusParam,
    /// Coordinate on a Kostant section, i.e. an invariant polynomial.
    InvariantParam,
    /// Coordinate on the open cell of the variety.
    Cell,
}

impl Role {
    pub fn is_param(self) -> bool {
        !matches!(self, Role::Cell)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub weight: u32,
    pub role: Role,
}

impl Variable {
    pub fn new(name: impl Into<String>, weight: u32, role: Role) -> Self {
        Variable { name: name.into(), weight, role }
    }
}

/// Ordered, weighted variables of a graded polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    vars: Vec<Variable>,
}

pub type Ctx = Arc<RingContext>;

impl RingContext {
    pub fn new(vars: Vec<Variable>) -> Result<Ctx> {
        for (i, v) in vars.iter().enumerate() {
            if v.weight == 0 || v.weight % 2 == 1 {
                return Err(Error::BadWeight { name: v.name.clone(), weight: v.weight });
            }
            if vars[..i].iter().any(|u| u.name == v.name) {
                return Err(Error::DuplicateVariable(v.name.clone()));
            }
            if v.name.is_empty()
                || !v.name.chars().next().unwrap().is_alphabetic()
                || !v.name.chars().all(|c| c.is_alphanumeric() || c == '_')
            {
                return Err(Error::Grammar { input: v.name.clone(), msg: "not an identifier".into() });
            }
        }
        Ok(Arc::new(RingContext { vars }))
    }

    /// Cell-coordinate variables with the given names and weights.
    pub fn with_weights(spec: &[(&str, u32)]) -> Result<Ctx> {
        Self::new(spec.iter().map(|&(n, w)| Variable::new(n, w, Role::Cell)).collect())
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn var(&self, i: usize) -> &Variable {
        &self.vars[i]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.vars[i].weight
    }

    pub fn weights(&self) -> Vec<u32> {
        self.vars.iter().map(|v| v.weight).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name.clone()).collect()
    }

    pub fn indices_with(&self, pred: impl Fn(&Variable) -> bool) -> Vec<usize> {
        (0..self.len()).filter(|&i| pred(&self.vars[i])).collect()
    }

    pub fn params(&self) -> Vec<usize> {
        self.indices_with(|v| v.role.is_param())
    }

    pub fn cells(&self) -> Vec<usize> {
        self.indices_with(|v| v.role == Role::Cell)
    }

    /// Context on the listed variables, in the listed order.
    pub fn sub_context(&self, keep: &[usize]) -> Ctx {
        Arc::new(RingContext { vars: keep.iter().map(|&i| self.vars[i].clone()).collect() })
    }

    pub fn without(&self, drop: &[usize]) -> Ctx {
        let keep: Vec<usize> = (0..self.len()).filter(|i| !drop.contains(i)).collect();
        self.sub_context(&keep)
    }

    /// Ring with the listed extra variables appended.
    pub fn extended(&self, extra: Vec<Variable>) -> Result<Ctx> {
        let mut vars = self.vars.clone();
        vars.extend(extra);
        RingContext::new(vars)
    }
}

pub(crate) fn same_ctx(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
