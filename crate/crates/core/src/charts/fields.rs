use crate::charts::{ChartDescriptor, ChartKind};
use crate::error::{Error, Result};
use crate::field::RingElem;
use crate::liealg::RootData;
use crate::matrix::Matrix;
use crate::polyalg::{Ctx, RingContext, Variable};
use crate::zeroscheme::{FamilyKind, MatrixFamily};
use crate::{q, Poly, PolyMatrix};

/// Components of the vector field of a family on a chart, one per cell
/// coordinate, in the combined parameter and cell ring.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    pub chart: ChartDescriptor,
    pub ctx: Ctx,
    pub components: Vec<Poly>,
}

/// Parameters of the family first, then the cell coordinates.
pub(crate) fn combined_ctx(chart: &ChartDescriptor, family: &MatrixFamily) -> Result<Ctx> {
    let mut vars = family.param_variables();
    for (name, &w) in chart.cell_coords.iter().zip(&chart.bb_weights) {
        vars.push(Variable::new(name.clone(), w, crate::polyalg::Role::Cell));
    }
    RingContext::new(vars)
}

/// The vector field of the family on the chart.
pub fn vector_field(chart: &ChartDescriptor, family: &MatrixFamily) -> Result<VectorField> {
    if family.n != chart.ambient() {
        return Err(Error::SizeMismatch { expected: chart.ambient(), got: family.n });
    }
    let ctx = combined_ctx(chart, family)?;
    let components = if let ChartKind::BottSamelson { word, rank } = &chart.kind {
        if family.kind != FamilyKind::BorelTorus {
            return Err(Error::Unsupported(format!(
                "Bott-Samelson fields exist only on e + t, not on the {} family",
                family.kind
            )));
        }
        let params: Vec<String> = family.directions.iter().map(|d| d.name.clone()).collect();
        bs_vector_field(word, &RootData::sl(rank + 1), &ctx, &params)?
    } else {
        let a = family.symbolic(&ctx)?;
        vector_field_of_matrix(chart, &ctx, &a)?
    };
    Ok(VectorField { chart: chart.clone(), ctx, components })
}

/// Field of a single matrix `A` (entries in `ctx`) on a matrix chart.
pub fn vector_field_of_matrix(chart: &ChartDescriptor, ctx: &Ctx, a: &PolyMatrix) -> Result<Vec<Poly>> {
    let n = chart.ambient();
    if a.rows() != n || a.cols() != n {
        return Err(Error::SizeMismatch { expected: n, got: a.rows() });
    }
    match &chart.kind {
        ChartKind::ProjectiveSpace { .. } => projective_field(chart, ctx, a),
        ChartKind::Grassmannian { k, .. } => riccati_field(chart, ctx, a, *k),
        ChartKind::PartialFlag { .. } => flag_field(chart, ctx, a),
        ChartKind::BottSamelson { .. } => Err(Error::Unsupported("matrix fields on Bott-Samelson charts".into())),
    }
}

/// `V(x_i) = (Az)_i − x_i (Az)_0` at `z = (1, x)`.
fn projective_field(chart: &ChartDescriptor, ctx: &Ctx, a: &PolyMatrix) -> Result<Vec<Poly>> {
    let mut z = vec![Poly::one(ctx)];
    for name in &chart.cell_coords {
        z.push(Poly::var(ctx, name)?);
    }
    let az = a.mul_vec(&z)?;
    Ok((1..z.len()).map(|i| &az[i] - &(&z[i] * &az[0])).collect())
}

/// `V(X) = A₂₁ + A₂₂X − XA₁₁ − XA₁₂X` on the chart `[I_k; X]`.
fn riccati_field(chart: &ChartDescriptor, ctx: &Ctx, a: &PolyMatrix, k: usize) -> Result<Vec<Poly>> {
    let n = chart.ambient();
    let top: Vec<usize> = (0..k).collect();
    let bot: Vec<usize> = (k..n).collect();
    let (a11, a12, a21, a22) =
        (a.submatrix(&top, &top), a.submatrix(&top, &bot), a.submatrix(&bot, &top), a.submatrix(&bot, &bot));
    let zero = Poly::zero(ctx);
    let mut x = Matrix::zeros_like(&zero, n - k, k);
    for (name, &(r, c)) in chart.cell_coords.iter().zip(&chart.positions) {
        x.set(r - k, c, Poly::var(ctx, name)?);
    }
    let v = a21.try_add(&a22.try_mul(&x)?)?.try_sub(&x.try_mul(&a11)?)?.try_sub(&x.try_mul(&a12)?.try_mul(&x)?)?;
    Ok(chart.positions.iter().map(|&(r, c)| v.get(r - k, c).clone()).collect())
}

/// Inverse of a unipotent matrix `I + N` as `Σ (−N)^k`.
fn unipotent_inverse<E: RingElem>(l: &Matrix<E>) -> Result<Matrix<E>> {
    let n = l.rows();
    let z = l.zero_elem().clone();
    let id = Matrix::identity_like(&z, n);
    let neg_n = id.try_sub(l)?;
    let mut term = id.clone();
    let mut acc = id;
    for _ in 1..n {
        term = term.try_mul(&neg_n)?;
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

/// `V(L) = L · π_<(L⁻¹ A L)` for block lower unitriangular `L`. Also valid for
/// P^n and Gr, whose charts are one-block special cases.
pub fn flag_field(chart: &ChartDescriptor, ctx: &Ctx, a: &PolyMatrix) -> Result<Vec<Poly>> {
    let n = chart.ambient();
    let l = chart.coordinate_matrix(ctx)?;
    let p = unipotent_inverse(&l)?.try_mul(a)?.try_mul(&l)?;
    let zero = Poly::zero(ctx);
    let mut lower = Matrix::zeros_like(&zero, n, n);
    for &(r, c) in &chart.positions {
        lower.set(r, c, p.get(r, c).clone());
    }
    let v = l.try_mul(&lower)?;
    Ok(chart.positions.iter().map(|&(r, c)| v.get(r, c).clone()).collect())
}

/// Component `j`: `−Σ_{k<j} b_{jk} x_k x_j − α_{i_j}(w) x_j − x_j²` with
/// `b_{jk} = α_{i_j}(h_{i_k})`, for `w` the symbolic torus point with
/// coordinates `params`.
pub fn bs_vector_field(word: &[usize], rd: &RootData, ctx: &Ctx, params: &[String]) -> Result<Vec<Poly>> {
    for &i in word {
        rd.check_index(i)?;
    }
    let xs: Vec<Poly> = (1..=word.len()).map(|j| Poly::var(ctx, &format!("x{j}"))).collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(word.len());
    for (j, &ij) in word.iter().enumerate() {
        let xj = &xs[j];
        let mut comp = -&(&rd.root_poly(ij, ctx, params)? * xj) - xj * xj;
        for (k, &ik) in word[..j].iter().enumerate() {
            let b = rd.b(ij, ik);
            comp = &comp - &(&xs[k] * xj).scale(&q(b));
        }
        out.push(comp);
    }
    Ok(out)
}
