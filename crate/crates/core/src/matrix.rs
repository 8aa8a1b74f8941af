//! Dense matrices over any [`RingElem`], with exact Gaussian elimination
//! over [`FieldElem`] entries.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem, RingElem};
use crate::Rational;

/// Row-major dense matrix. Carries a zero of its entry ring so that empty and
/// freshly built matrices know where they live.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    zero: E,
    data: Vec<E>,
}

impl<E: RingElem> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        let zero = value.zero_like();
        Matrix { rows, cols, zero, data: vec![value; rows * cols] }
    }

    pub fn zeros_like(template: &E, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, template.zero_like())
    }

    pub fn identity_like(template: &E, n: usize) -> Self {
        let mut m = Self::zeros_like(template, n, n);
        for i in 0..n {
            m.set(i, i, template.one_like());
        }
        m
    }

    pub fn from_fn(template: &E, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, zero: template.zero_like(), data }
    }

    pub fn from_rows(template: &E, rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::SizeMismatch { expected: c, got: bad.len() });
        }
        Ok(Matrix { rows: r, cols: c, zero: template.zero_like(), data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn zero_elem(&self) -> &E {
        &self.zero
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<F: RingElem>(&self, template: &F, f: impl Fn(&E) -> F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, zero: template.zero_like(), data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(&self.zero, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero_elem())
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::SizeMismatch { expected: self.rows * self.cols, got: other.rows * other.cols });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Matrix::from_fn(&self.zero, self.rows, self.cols, |i, j| self.get(i, j).add_ref(other.get(i, j))))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Matrix::from_fn(&self.zero, self.rows, self.cols, |i, j| self.get(i, j).sub_ref(other.get(i, j))))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Matrix::zeros_like(&self.zero, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero_elem() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[E]) -> Result<Vec<E>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.zero.clone();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero_elem() && !b.is_zero_elem() {
                        acc = acc.add_ref(&a.mul_ref(b));
                    }
                }
                acc
            })
            .collect())
    }

    pub fn scale(&self, c: &E) -> Self {
        self.map(&self.zero, |x| x.mul_ref(c))
    }

    pub fn neg(&self) -> Self {
        self.map(&self.zero, |x| x.neg_ref())
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn trace(&self) -> E {
        let mut acc = self.zero.clone();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add_ref(self.get(i, i));
        }
        acc
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(&self.zero, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }
}

impl<E: FieldElem> Matrix<E> {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero_elem()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).one_like().div_ref(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).mul_ref(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero_elem() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero_elem() {
                        continue;
                    }
                    let v = m.get(i, j).sub_ref(&f.mul_ref(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<E>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.zero.clone(); self.cols];
                v[f] = self.zero.one_like();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = m.get(r, f).neg_ref();
                }
                v
            })
            .collect()
    }

    /// One solution of `self · x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[E]) -> Result<Option<Vec<E>>> {
        if b.len() != self.rows {
            return Err(Error::SizeMismatch { expected: self.rows, got: b.len() });
        }
        let aug = Matrix::from_fn(&self.zero, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.zero.clone(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = m.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::SizeMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        let aug = Matrix::from_fn(&self.zero, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.zero.one_like()
            } else {
                self.zero.clone()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(&self.zero, n, n, |i, j| m.get(i, n + j).clone()))
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::zeros_like(&F::zero(), rows, cols)
    }

    pub fn identity(n: usize) -> Self {
        Self::identity_like(&F::zero(), n)
    }

    pub fn from_fn_field(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> F) -> Self {
        Self::from_fn(&F::zero(), rows, cols, f)
    }

    pub fn diagonal(d: &[F]) -> Self {
        Self::from_fn_field(d.len(), d.len(), |i, j| if i == j { d[i].clone() } else { F::zero() })
    }
}

impl Matrix<Rational> {
    /// Integer-entry convenience constructor.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r: Vec<Vec<Rational>> =
            rows.iter().map(|row| row.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
        Matrix::from_rows(&Rational::from_integer(0.into()), r).expect("ragged rows")
    }
}

impl<E: RingElem + fmt::Display> fmt::Display for Matrix<E> {
    /// Row-major nested lists.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_kernel() {
        let a = Matrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.try_mul(&inv).unwrap(), Matrix::identity(2));
        let s = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(s.rank(), 1);
        let k = s.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(s.mul_vec(&v).unwrap().iter().all(|x| *x == Rational::from_integer(0.into())));
        }
        assert_eq!(s.try_mul(&a), Err(Error::SizeMismatch { expected: 3, got: 2 }));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = Matrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        let one = Rational::from_integer(1.into());
        assert!(a.solve(&[one.clone(), one.clone()]).unwrap().is_none());
        let x = a.solve(&[one.clone(), one.clone() + one.clone()]).unwrap().unwrap();
        assert_eq!(x[0].clone() + x[1].clone(), one);
    }

    #[test]
    fn display_is_nested_lists() {
        let a = Matrix::from_int_rows(&[&[1, -2], &[0, 3]]);
        assert_eq!(a.to_string(), "[[1, -2], [0, 3]]");
    }
}
