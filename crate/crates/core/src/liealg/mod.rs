//! The Lie algebra `sl_n` with exact entries: principal sl₂-triples,
//! regularity, Kostant sections, root data, the Weyl group, and the solvers
//! for the unipotent conjugator `M_w` and the Kostant conjugator `A(w)`.

mod conj;
mod kostant;
mod roots;
mod torus;
mod triple;

pub use conj::{
    conjugates_to, solve_kostant_conjugator, solve_unipotent_conjugator, unipotent_conjugator_of, KostantConjugation,
};
pub use kostant::embed;
pub use kostant::KostantSection;
pub use roots::RootData;
pub use torus::{weyl_orbit, TorusElement};
pub use triple::PrincipalTriple;

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElem, RingElem};
use crate::matrix::Matrix;
use crate::{q, QMatrix, Rational};

/// Traceless rational `n × n` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct LieElement {
    m: QMatrix,
}

impl LieElement {
    pub fn new(m: QMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::SizeMismatch { expected: m.rows(), got: m.cols() });
        }
        if m.trace() != q(0) {
            return Err(Error::Unsupported(format!("matrix {m} is not traceless")));
        }
        Ok(LieElement { m })
    }

    pub fn zero(n: usize) -> Self {
        LieElement { m: QMatrix::zeros(n, n) }
    }

    /// `E_ij` (0-based), which is traceless for `i != j`.
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        assert_ne!(i, j, "diagonal elementary matrices are not traceless");
        let mut m = QMatrix::zeros(n, n);
        m.set(i, j, q(1));
        LieElement { m }
    }

    pub fn diagonal(entries: &[Rational]) -> Result<Self> {
        Self::new(QMatrix::diagonal(entries))
    }

    pub fn n(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> QMatrix {
        self.m
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(LieElement { m: self.m.try_add(&other.m)? })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(LieElement { m: self.m.try_sub(&other.m)? })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LieElement { m: self.m.scale(c) }
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        Ok(LieElement { m: self.m.commutator(&other.m)? })
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: &QMatrix) -> Result<Self> {
        let inv = g.inverse()?;
        Ok(LieElement { m: g.try_mul(&self.m)?.try_mul(&inv)? })
    }

    /// Common ad-eigenvalue of the nonzero entries under a diagonal `h`, if the
    /// element is an ad_h weight vector.
    pub fn weight_under(&self, h: &LieElement) -> Option<Rational> {
        let n = self.n();
        let mut weight: Option<Rational> = None;
        for i in 0..n {
            for j in 0..n {
                if self.m.get(i, j) == &q(0) {
                    continue;
                }
                let w = h.m.get(i, i).clone() - h.m.get(j, j).clone();
                match &weight {
                    None => weight = Some(w),
                    Some(x) if *x != w => return None,
                    _ => {}
                }
            }
        }
        Some(weight.unwrap_or_else(|| q(0)))
    }

    pub fn is_regular(&self) -> bool {
        centralizer_dimension(&self.m) == self.n() - 1
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.m)
    }
}

/// Coordinates of a traceless matrix in the basis
/// `{E_ij : i != j} ∪ {E_ii - E_{i+1,i+1}}`.
pub(crate) fn sl_coordinates<E: RingElem>(m: &Matrix<E>) -> Vec<E> {
    let n = m.rows();
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(m.get(i, j).clone());
            }
        }
    }
    let mut acc = m.zero_elem().clone();
    for i in 0..n - 1 {
        acc = acc.add_ref(m.get(i, i));
        out.push(acc.clone());
    }
    out
}

/// The basis matching [`sl_coordinates`].
pub(crate) fn sl_basis(n: usize) -> Vec<QMatrix> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = QMatrix::zeros(n, n);
                m.set(i, j, q(1));
                out.push(m);
            }
        }
    }
    for i in 0..n - 1 {
        let mut m = QMatrix::zeros(n, n);
        m.set(i, i, q(1));
        m.set(i + 1, i + 1, q(-1));
        out.push(m);
    }
    out
}

/// Matrix of `ad_x` on `sl_n` in the basis of [`sl_basis`].
pub(crate) fn adjoint_matrix<E: FieldElem>(x: &Matrix<E>) -> Matrix<E> {
    let n = x.rows();
    let zero = x.zero_elem().clone();
    let basis = sl_basis(n);
    let dim = basis.len();
    let mut ad = Matrix::zeros_like(&zero, dim, dim);
    for (col, b) in basis.iter().enumerate() {
        let be = b.map(&zero, |c| zero.rational_like(c));
        let img = x.commutator(&be).expect("square matrices of equal size");
        for (row, v) in sl_coordinates(&img).into_iter().enumerate() {
            ad.set(row, col, v);
        }
    }
    ad
}

/// `dim ker(ad_x)` on `sl_n`.
pub fn centralizer_dimension<E: FieldElem>(x: &Matrix<E>) -> usize {
    let ad = adjoint_matrix(x);
    ad.cols() - ad.rank()
}
