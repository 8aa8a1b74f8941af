use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::liealg::{KostantSection, LieElement, PrincipalTriple};
use crate::matrix::Matrix;
use crate::polyalg::{Ctx, Role, Variable};
use crate::{q, qq, Poly, PolyMatrix, QMatrix, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `e + 𝔱` in `sl_n`.
    BorelTorus,
    /// `e + C(f)` in `sl_n`.
    KostantSection,
    /// `e + v h` for the principal triple.
    PrincipalSL2Torus,
    /// `e + t f` for the principal triple.
    PrincipalSL2Kostant,
}

impl FamilyKind {
    pub fn is_torus(self) -> bool {
        matches!(self, FamilyKind::BorelTorus | FamilyKind::PrincipalSL2Torus)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::BorelTorus => "borel",
            FamilyKind::KostantSection => "kostant",
            FamilyKind::PrincipalSL2Torus => "psl2-borel",
            FamilyKind::PrincipalSL2Kostant => "psl2-kostant",
        })
    }
}

/// One parameter direction of an affine family.
#[derive(Debug, Clone, PartialEq)]
pub struct Direction {
    pub name: String,
    pub weight: u32,
    pub element: LieElement,
}

/// The affine family `e + Σ p_i · direction_i` of matrices in `sl_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFamily {
    pub kind: FamilyKind,
    pub n: usize,
    pub base: LieElement,
    pub directions: Vec<Direction>,
}

impl MatrixFamily {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Grammar { input: format!("{kind}:{n}"), msg: "need n >= 2".into() });
        }
        let triple = PrincipalTriple::new(n);
        let directions = match kind {
            FamilyKind::BorelTorus => (1..n)
                .map(|i| {
                    let mut m = QMatrix::identity(n).scale(&qq(-1, n as i64));
                    m.set(i, i, m.get(i, i).clone() + q(1));
                    Direction { name: format!("v{i}"), weight: 2, element: LieElement::new(m).unwrap() }
                })
                .collect(),
            FamilyKind::KostantSection => {
                let s = KostantSection::new(n);
                s.basis
                    .iter()
                    .zip(&s.params)
                    .map(|(b, (name, w))| Direction { name: name.clone(), weight: *w, element: b.clone() })
                    .collect()
            }
            FamilyKind::PrincipalSL2Torus => {
                vec![Direction { name: "v".into(), weight: 2, element: triple.h.clone() }]
            }
            FamilyKind::PrincipalSL2Kostant => {
                vec![Direction { name: "t".into(), weight: 4, element: triple.f.clone() }]
            }
        };
        Ok(MatrixFamily { kind, n, base: triple.e, directions })
    }

    pub fn param_role(&self) -> Role {
        if self.kind.is_torus() {
            Role::TorusParam
        } else {
            Role::InvariantParam
        }
    }

    pub fn param_names(&self) -> Vec<String> {
        self.directions.iter().map(|d| d.name.clone()).collect()
    }

    pub fn param_variables(&self) -> Vec<Variable> {
        self.directions.iter().map(|d| Variable::new(d.name.clone(), d.weight, self.param_role())).collect()
    }

    /// `e + Σ p_i · direction_i` with the parameters as variables of `ctx`.
    pub fn symbolic(&self, ctx: &Ctx) -> Result<PolyMatrix> {
        let zero = Poly::zero(ctx);
        let mut m = self.base.matrix().map(&zero, |c| Poly::constant(ctx, c.clone()));
        for d in &self.directions {
            let p = Poly::var(ctx, &d.name)?;
            let dm = d.element.matrix().map(&zero, |c| p.scale(c));
            m = m.try_add(&dm)?;
        }
        Ok(m)
    }

    /// The matrix at rational parameter values.
    pub fn at(&self, values: &[Rational]) -> Result<QMatrix> {
        if values.len() != self.directions.len() {
            return Err(Error::SizeMismatch { expected: self.directions.len(), got: values.len() });
        }
        let mut m: Matrix<Rational> = self.base.matrix().clone();
        for (d, c) in self.directions.iter().zip(values) {
            m = m.try_add(&d.element.matrix().scale(c))?;
        }
        Ok(m)
    }

    /// Grading consistency: `weight = 2 − (ad_h weight of the direction)`.
    pub fn weights_consistent(&self) -> bool {
        let h = PrincipalTriple::new(self.n).h;
        self.directions.iter().all(|d| d.element.weight_under(&h) == Some(q(2) - q(d.weight as i64)))
    }
}

impl fmt::Display for MatrixFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::BorelTorus | FamilyKind::KostantSection => write!(f, "{}:sl{}", self.kind, self.n),
            _ => write!(f, "{}:{}", self.kind, self.n),
        }
    }
}

impl FromStr for MatrixFamily {
    type Err = Error;

    /// `borel:slN`, `kostant:slN`, `psl2-borel:N`, `psl2-kostant:N`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Grammar { input: s.to_string(), msg: msg.to_string() };
        let (head, rest) = s.trim().split_once(':').ok_or_else(|| bad("expected `kind:size`"))?;
        let (kind, num) = match head {
            "borel" => (FamilyKind::BorelTorus, rest.strip_prefix("sl").ok_or_else(|| bad("expected `slN`"))?),
            "kostant" => (FamilyKind::KostantSection, rest.strip_prefix("sl").ok_or_else(|| bad("expected `slN`"))?),
            "psl2-borel" => (FamilyKind::PrincipalSL2Torus, rest),
            "psl2-kostant" => (FamilyKind::PrincipalSL2Kostant, rest),
            _ => return Err(bad("unknown family kind")),
        };
        let n: usize = num.trim().parse().map_err(|_| bad("size is not an integer"))?;
        MatrixFamily::new(kind, n).map_err(|_| bad("need n >= 2"))
    }
}
