use crate::error::{Error, Result};
use crate::field::{FieldElem, RingElem};
use crate::liealg::kostant::embed;
use crate::liealg::{KostantSection, TorusElement};
use crate::matrix::Matrix;

fn root_name(i: usize, j: usize) -> String {
    if i == 0 {
        format!("v{j}")
    } else {
        format!("v{j} - v{i}")
    }
}

/// The upper unitriangular `M` with `M w M⁻¹ = e + w`.
///
/// Entry `(i, j)` of `M w = (e + w) M` reads `m_ij (d_j - d_i) = m_{i+1,j}`,
/// solved upwards from the diagonal one superdiagonal at a time.
pub fn solve_unipotent_conjugator<F: FieldElem>(w: &TorusElement<F>) -> Result<Matrix<F>> {
    let d = w.diagonal();
    let n = d.len();
    let z = d[0].zero_like();
    let mut m = Matrix::identity_like(&z, n);
    for k in 1..n {
        for i in 0..n - k {
            let j = i + k;
            let diff = d[j].sub_ref(&d[i]);
            let below = if i + 1 < n { m.get(i + 1, j).clone() } else { z.clone() };
            let v = below.div_ref(&diff).ok_or_else(|| Error::NonRegular { root: root_name(i, j) })?;
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// Same as [`solve_unipotent_conjugator`] for a diagonal matrix.
pub fn unipotent_conjugator_of<F: FieldElem>(w: &Matrix<F>) -> Result<Matrix<F>> {
    let d: Vec<F> = (0..w.rows()).map(|i| w.get(i, i).clone()).collect();
    solve_unipotent_conjugator(&TorusElement::from_diagonal(&d)?)
}

/// Whether `g x g⁻¹ = y`, checked as `g x = y g`.
pub fn conjugates_to<E: RingElem>(g: &Matrix<E>, x: &Matrix<E>, y: &Matrix<E>) -> bool {
    g.try_mul(x).ok() == y.try_mul(g).ok()
}

fn level<E: RingElem>(m: &Matrix<E>, l: usize) -> Vec<E> {
    (0..m.rows() - l).map(|i| m.get(i + l, i).clone()).collect()
}

fn level_matrix<E: RingElem>(z: &E, n: usize, l: usize, entries: &[E]) -> Matrix<E> {
    let mut m = Matrix::zeros_like(z, n, n);
    for (i, v) in entries.iter().enumerate() {
        m.set(i + l, i, v.clone());
    }
    m
}

/// Result of conjugating `e + w` into the Kostant slice.
#[derive(Clone, Debug, PartialEq)]
pub struct KostantConjugation<F> {
    /// Lower unitriangular conjugator `A(w)`.
    pub a: Matrix<F>,
    /// `χ(w) = A (e + w) A⁻¹ ∈ S`.
    pub chi: Matrix<F>,
    /// Slice coordinates `(c₂, …, c_n)` of `χ(w)`.
    pub coords: Vec<F>,
}

/// Solves `A (e + w) = χ A` with `A = I + A₁ + A₂ + …` (`A_m` on the m-th
/// subdiagonal) and `χ = e + Σ c_{k+1} b_k`, one subdiagonal level at a time:
/// level 0 gives `[e, A₁] = w`, level `L ≥ 1` gives
/// `[e, A_{L+1}] + c_{L+1} b_L = A_L w - Σ_{k<L} c_{k+1} b_k A_{L-k}`.
pub fn solve_kostant_conjugator<F: FieldElem>(
    w: &TorusElement<F>,
    s: &KostantSection,
) -> Result<KostantConjugation<F>> {
    let n = w.n();
    if n != s.n {
        return Err(Error::SizeMismatch { expected: s.n, got: n });
    }
    let wm = w.matrix();
    let z = wm.zero_elem().clone();
    let one = z.one_like();
    let e = embed(&z, s.triple.e.matrix());
    let basis: Vec<Matrix<F>> = s.basis.iter().map(|b| embed(&z, b.matrix())).collect();

    let mut a_levels: Vec<Matrix<F>> = vec![Matrix::zeros_like(&z, n, n)];
    let mut c_terms: Vec<Matrix<F>> = vec![Matrix::zeros_like(&z, n, n)];
    let mut coords = Vec::with_capacity(n - 1);

    for l in 0..n {
        let new_a = n - l - 1;
        let with_c = l >= 1;
        let unknowns = new_a + usize::from(with_c);
        let rows = n - l;
        let mut map = Matrix::zeros_like(&z, rows, unknowns);
        for u in 0..new_a {
            let mut unit = vec![z.clone(); new_a];
            unit[u] = one.clone();
            let au = level_matrix(&z, n, l + 1, &unit);
            let img = level(&e.commutator(&au)?, l);
            for (r, v) in img.into_iter().enumerate() {
                map.set(r, u, v);
            }
        }
        if with_c {
            for (r, v) in level(&basis[l - 1], l).into_iter().enumerate() {
                map.set(r, new_a, v);
            }
        }
        let rhs = if l == 0 {
            level(&wm, 0)
        } else {
            let mut acc = a_levels[l].try_mul(&wm)?;
            for k in 1..l {
                acc = acc.try_sub(&c_terms[k].try_mul(&a_levels[l - k])?)?;
            }
            level(&acc, l)
        };
        let x =
            map.solve(&rhs)?.ok_or_else(|| Error::Unsupported("Kostant conjugation system is inconsistent".into()))?;
        if new_a > 0 {
            a_levels.push(level_matrix(&z, n, l + 1, &x[..new_a]));
        }
        if with_c {
            let c = x[new_a].clone();
            c_terms.push(basis[l - 1].scale(&c));
            coords.push(c);
        }
    }

    let mut a = Matrix::identity_like(&z, n);
    for m in &a_levels[1..] {
        a = a.try_add(m)?;
    }
    let chi = s.point(&z, &coords);
    let x = e.try_add(&wm)?;
    if !conjugates_to(&a, &x, &chi) {
        return Err(Error::Unsupported("Kostant conjugation failed to verify".into()));
    }
    Ok(KostantConjugation { a, chi, coords })
}
