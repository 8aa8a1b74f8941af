use crate::error::{Error, Result};
use crate::liealg::LieElement;
use crate::polyalg::Ctx;
use crate::{q, Poly, QMatrix};

/// Type-A root data of `sl_n` in torus coordinates `v₁, …, v_{n-1}`
/// (with `v₀ = 0`).
#[derive(Clone, Debug, PartialEq)]
pub struct RootData {
    pub n: usize,
    /// Coefficients of `α_i` on `(v₁, …, v_{n-1})`: `α_i = v_{i-1} - v_i`.
    pub simple_roots: Vec<Vec<i64>>,
    /// `h_i = E_ii - E_{i+1,i+1}`.
    pub coroots: Vec<LieElement>,
    /// `b_jk = α_j(h_k)`.
    pub cartan: Vec<Vec<i64>>,
}

impl RootData {
    pub fn sl(n: usize) -> Self {
        assert!(n >= 2);
        let r = n - 1;
        let simple_roots = (1..=r)
            .map(|i| {
                let mut a = vec![0i64; r];
                if i >= 2 {
                    a[i - 2] = 1;
                }
                a[i - 1] = -1;
                a
            })
            .collect();
        let coroots: Vec<LieElement> = (0..r)
            .map(|i| {
                let mut m = QMatrix::zeros(n, n);
                m.set(i, i, q(1));
                m.set(i + 1, i + 1, q(-1));
                LieElement::new(m).unwrap()
            })
            .collect();
        let mut rd = RootData { n, simple_roots, coroots, cartan: Vec::new() };
        rd.cartan = (0..r).map(|j| (0..r).map(|k| rd.pairing(j, &rd.coroots[k])).collect()).collect();
        rd
    }

    pub fn rank(&self) -> usize {
        self.n - 1
    }

    /// `α_j(x)` for diagonal `x` (0-based `j`): `x_jj - x_{j+1,j+1}`.
    pub fn pairing(&self, j: usize, x: &LieElement) -> i64 {
        let d = x.matrix().get(j, j).clone() - x.matrix().get(j + 1, j + 1).clone();
        assert!(d.is_integer(), "non-integral pairing");
        i64::try_from(d.to_integer()).expect("small pairing")
    }

    /// 1-based index check.
    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::BadRootIndex { index: i, rank: self.rank() });
        }
        Ok(())
    }

    /// `b` entry for 1-based simple root indices.
    pub fn b(&self, j: usize, k: usize) -> i64 {
        self.cartan[j - 1][k - 1]
    }

    /// `α_i` (1-based) as a linear polynomial in the named torus parameters.
    pub fn root_poly(&self, i: usize, ctx: &Ctx, params: &[String]) -> Result<Poly> {
        self.check_index(i)?;
        let mut p = Poly::zero(ctx);
        for (k, &c) in self.simple_roots[i - 1].iter().enumerate() {
            if c != 0 {
                p = &p + &Poly::var(ctx, &params[k])?.scale(&q(c));
            }
        }
        Ok(p)
    }
}
