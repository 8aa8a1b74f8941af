use crate::field::RingElem;
use crate::liealg::{LieElement, PrincipalTriple};
use crate::matrix::Matrix;
use crate::{q, QMatrix, Rational};

/// The slice `S = e + C(f)` with basis vector `k` (0-based) on the
/// `(k+1)`-th subdiagonal and parameter `c_{k+2}` of weight `2(k+2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct KostantSection {
    pub n: usize,
    pub triple: PrincipalTriple,
    pub basis: Vec<LieElement>,
    pub params: Vec<(String, u32)>,
}

impl KostantSection {
    /// Kernel of `ad_f`, one vector per ad_h weight, scaled so that its entry
    /// in the lowest row is 1.
    pub fn new(n: usize) -> Self {
        let triple = PrincipalTriple::new(n);
        let f = triple.f.matrix();
        let mut basis = Vec::new();
        for k in 1..n {
            let slots: Vec<(usize, usize)> = (0..n - k).map(|i| (i + k, i)).collect();
            let mut map = QMatrix::zeros(n * n, slots.len());
            for (col, &(r, c)) in slots.iter().enumerate() {
                let mut x = QMatrix::zeros(n, n);
                x.set(r, c, q(1));
                let img = f.commutator(&x).unwrap();
                for (idx, v) in img.entries().iter().enumerate() {
                    map.set(idx, col, v.clone());
                }
            }
            let ker = map.kernel();
            assert_eq!(ker.len(), 1, "weight spaces of C(f) are lines");
            let v = &ker[0];
            let scale = q(1) / v[slots.len() - 1].clone();
            let mut b = QMatrix::zeros(n, n);
            for (&(r, c), x) in slots.iter().zip(v) {
                b.set(r, c, x.clone() * scale.clone());
            }
            basis.push(LieElement::new(b).unwrap());
        }
        let params = (2..=n).map(|k| (format!("c{k}"), 2 * k as u32)).collect();
        KostantSection { n, triple, basis, params }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `e + Σ values[k] · basis[k]`.
    pub fn point<E: RingElem>(&self, template: &E, values: &[E]) -> Matrix<E> {
        let mut m = embed(template, self.triple.e.matrix());
        for (b, c) in self.basis.iter().zip(values) {
            let bm = embed(template, b.matrix()).scale(c);
            m = m.try_add(&bm).unwrap();
        }
        m
    }

    /// Coordinates of `x` if `x ∈ S`.
    pub fn coordinates<E: RingElem>(&self, x: &Matrix<E>) -> Option<Vec<E>> {
        let z = x.zero_elem().clone();
        let n = self.n;
        let mut coords = Vec::with_capacity(self.rank());
        for b in &self.basis {
            let (r, c) = (n - 1, n - 1 - b_level(b));
            coords.push(x.get(r, c).clone());
        }
        let back = self.point(&z, &coords);
        if &back == x {
            Some(coords)
        } else {
            None
        }
    }

    /// Rational point `e + Σ values[k] · basis[k]` of the slice.
    pub fn rational_point(&self, values: &[Rational]) -> LieElement {
        LieElement::new(self.point(&q(0), values)).expect("slice points are traceless")
    }

    /// Whether `x` lies in the slice.
    pub fn contains<E: RingElem>(&self, x: &Matrix<E>) -> bool {
        self.coordinates(x).is_some()
    }
}

fn b_level(b: &LieElement) -> usize {
    let n = b.n();
    (1..n).find(|&k| (0..n - k).any(|i| b.matrix().get(i + k, i) != &q(0))).unwrap()
}

/// Rational matrix embedded entrywise into the ring of `template`.
pub fn embed<E: RingElem>(template: &E, m: &QMatrix) -> Matrix<E> {
    m.map(template, |x| template.rational_like(x))
}
