use crate::liealg::LieElement;
use crate::{q, QMatrix};

/// The principal sl₂-triple of `sl_n`: `e` has superdiagonal ones,
/// `h = diag(n-1, n-3, …, 1-n)` and `f_{i+1,i} = i(n-i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PrincipalTriple {
    pub n: usize,
    pub e: LieElement,
    pub h: LieElement,
    pub f: LieElement,
}

impl PrincipalTriple {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "sl_n needs n >= 2");
        let mut e = QMatrix::zeros(n, n);
        let mut f = QMatrix::zeros(n, n);
        let mut h = QMatrix::zeros(n, n);
        for i in 0..n {
            h.set(i, i, q(n as i64 - 1 - 2 * i as i64));
        }
        for i in 0..n - 1 {
            e.set(i, i + 1, q(1));
            let k = (i + 1) as i64;
            f.set(i + 1, i, q(k * (n as i64 - k)));
        }
        PrincipalTriple {
            n,
            e: LieElement::new(e).unwrap(),
            h: LieElement::new(h).unwrap(),
            f: LieElement::new(f).unwrap(),
        }
    }

    /// Whether `[h,e] = 2e`, `[h,f] = -2f` and `[e,f] = h` hold exactly.
    pub fn relations_hold(&self) -> bool {
        let he = self.h.bracket(&self.e).unwrap();
        let hf = self.h.bracket(&self.f).unwrap();
        let ef = self.e.bracket(&self.f).unwrap();
        he == self.e.scale(&q(2)) && hf == self.f.scale(&q(-2)) && ef == self.h
    }
}
