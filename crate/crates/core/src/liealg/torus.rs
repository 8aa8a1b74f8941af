use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::matrix::Matrix;
use crate::{q, Rational};

/// Point `(v₁, …, v_{n-1})` of the diagonal torus of `sl_n`, realizing
/// `diag(0, v₁, …, v_{n-1}) - (Σ v_i / n) I`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusElement<F> {
    coords: Vec<F>,
}

impl<F: FieldElem> TorusElement<F> {
    pub fn new(coords: Vec<F>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::SizeMismatch { expected: 1, got: 0 });
        }
        Ok(TorusElement { coords })
    }

    /// From the diagonal of a traceless matrix (or any diagonal, up to the
    /// central shift).
    pub fn from_diagonal(d: &[F]) -> Result<Self> {
        if d.len() < 2 {
            return Err(Error::SizeMismatch { expected: 2, got: d.len() });
        }
        Self::new(d[1..].iter().map(|x| x.sub_ref(&d[0])).collect())
    }

    pub fn n(&self) -> usize {
        self.coords.len() + 1
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    /// The traceless diagonal.
    pub fn diagonal(&self) -> Vec<F> {
        let t = &self.coords[0];
        let n = self.n();
        let mut sum = t.zero_like();
        for c in &self.coords {
            sum = sum.add_ref(c);
        }
        let mean = sum.mul_ref(&t.rational_like(&Rational::new(1.into(), (n as i64).into())));
        let mut d = vec![mean.neg_ref()];
        d.extend(self.coords.iter().map(|c| c.sub_ref(&mean)));
        d
    }

    pub fn matrix(&self) -> Matrix<F> {
        let d = self.diagonal();
        let z = d[0].zero_like();
        Matrix::from_fn(&z, d.len(), d.len(), |i, j| if i == j { d[i].clone() } else { z.clone() })
    }
}

/// All diagonal permutations of `w`, deduplicated, first occurrence order.
pub fn weyl_orbit(w: &TorusElement<Rational>) -> Vec<TorusElement<Rational>> {
    let d = w.diagonal();
    let mut out: Vec<TorusElement<Rational>> = Vec::new();
    for p in (0..d.len()).permutations(d.len()) {
        let pd: Vec<Rational> = p.iter().map(|&i| d[i].clone()).collect();
        let t = TorusElement::from_diagonal(&pd).expect("n >= 2");
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

impl TorusElement<Rational> {
    pub fn from_ints(v: &[i64]) -> Result<Self> {
        Self::new(v.iter().map(|&x| q(x)).collect())
    }
}
