use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polyalg::poly::Monomial;

/// `numerator(t) / ∏ (1 - t^d)` with integer numerator coefficients indexed by
/// t-degree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: Vec<i64>,
    pub denominator_weights: Vec<u32>,
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mul_one_minus(p: &[i64], d: u32) -> Vec<i64> {
    let d = d as usize;
    let mut out = vec![0; p.len() + d];
    for (i, &c) in p.iter().enumerate() {
        out[i] += c;
        out[i + d] -= c;
    }
    trim(out)
}

/// Exact quotient by `1 - t^d`, if any.
fn div_one_minus(p: &[i64], d: u32) -> Option<Vec<i64>> {
    let d = d as usize;
    if p.is_empty() {
        return Some(Vec::new());
    }
    let mut q = vec![0i64; p.len()];
    for i in 0..p.len() {
        q[i] = p[i] + if i >= d { q[i - d] } else { 0 };
    }
    if p.len() < d {
        return None;
    }
    if q[p.len() - d..].iter().any(|&c| c != 0) {
        return None;
    }
    q.truncate(p.len() - d);
    Some(trim(q))
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn shift(p: &[i64], d: u64) -> Vec<i64> {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; d as usize];
    out.extend_from_slice(p);
    out
}

fn poly_sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let neg: Vec<i64> = b.iter().map(|x| -x).collect();
    poly_sub(a, &neg)
}

impl HilbertSeries {
    pub fn new(numerator: Vec<i64>, mut denominator_weights: Vec<u32>) -> Self {
        denominator_weights.sort_unstable();
        HilbertSeries { numerator: trim(numerator), denominator_weights }
    }

    pub fn zero() -> Self {
        HilbertSeries::new(Vec::new(), Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Power-series coefficients of t^0 ..= t^upto.
    pub fn expand(&self, upto: usize) -> Vec<i64> {
        let mut s = vec![0i64; upto + 1];
        for (i, &c) in self.numerator.iter().enumerate().take(upto + 1) {
            s[i] = c;
        }
        for &d in &self.denominator_weights {
            let d = d as usize;
            for i in d..=upto {
                s[i] += s[i - d];
            }
        }
        s
    }

    /// Cancels every denominator factor that divides the numerator.
    pub fn reduced(&self) -> Self {
        let mut num = self.numerator.clone();
        let mut den = Vec::new();
        for &d in self.denominator_weights.iter().rev() {
            match div_one_minus(&num, d) {
                Some(q) if !num.is_empty() => num = q,
                _ => den.push(d),
            }
        }
        if num.is_empty() {
            return HilbertSeries::zero();
        }
        HilbertSeries::new(num, den)
    }

    /// Numerator when the series is written over `∏ (1 - t^w)` for `weights`,
    /// if that numerator is a polynomial.
    pub fn numerator_over(&self, weights: &[u32]) -> Option<Vec<i64>> {
        let mut num = self.numerator.clone();
        for &w in weights {
            num = mul_one_minus(&num, w);
        }
        for &d in &self.denominator_weights {
            num = div_one_minus(&num, d)?;
        }
        Some(num)
    }

    /// Rewrites the series over the given denominator, when possible.
    pub fn over(&self, weights: &[u32]) -> Option<Self> {
        self.numerator_over(weights).map(|n| HilbertSeries::new(n, weights.to_vec()))
    }

    /// Value of the numerator at t = 1 (a rank, once the denominator matches a
    /// polynomial ring of parameters).
    pub fn numerator_at_one(&self) -> i64 {
        self.numerator.iter().sum()
    }
}

impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        let mut a = self.numerator.clone();
        for &d in &other.denominator_weights {
            a = mul_one_minus(&a, d);
        }
        let mut b = other.numerator.clone();
        for &d in &self.denominator_weights {
            b = mul_one_minus(&b, d);
        }
        a == b
    }
}

pub fn format_t_poly(p: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in p.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let first = s.is_empty();
        let (neg, a) = (c < 0, c.unsigned_abs());
        s.push_str(match (first, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        let mono = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        if mono.is_empty() {
            s.push_str(&a.to_string());
        } else if a == 1 {
            s.push_str(&mono);
        } else {
            s.push_str(&format!("{a}*{mono}"));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format_t_poly(&self.numerator);
        if self.denominator_weights.is_empty() || self.is_zero() {
            return write!(f, "{num}");
        }
        let mut den: String = self.denominator_weights.iter().map(|d| format!("(1 - t^{d})")).collect();
        if self.denominator_weights.len() > 1 {
            den = format!("({den})");
        }
        if self.numerator.iter().filter(|&&c| c != 0).count() > 1 {
            write!(f, "({num})/{den}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Minimal generators of the monomial ideal spanned by `gens`.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut g: Vec<Monomial> = gens.to_vec();
    g.sort();
    g.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for (i, m) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(j, d)| j != i && divides(d, m) && d != m);
        if !redundant {
            out.push(m.clone());
        }
    }
    out
}

fn wdeg(m: &[u32], w: &[u32]) -> u64 {
    m.iter().zip(w).map(|(&e, &x)| e as u64 * x as u64).sum()
}

/// Hilbert numerator of `k[vars]/(gens)` over the denominator `∏(1 - t^{w_i})`.
fn hilbert_numerator(gens: Vec<Monomial>, w: &[u32]) -> Vec<i64> {
    let gens = minimalize(&gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.iter().all(|&e| e == 0)) {
        return Vec::new();
    }
    // A generator sharing no variable with the others splits off as a factor.
    for (i, m) in gens.iter().enumerate() {
        let coprime = gens.iter().enumerate().all(|(j, g)| j == i || m.iter().zip(g).all(|(a, b)| *a == 0 || *b == 0));
        if coprime {
            let rest: Vec<Monomial> =
                gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            let mut one_minus = vec![1i64];
            one_minus = shift_sub(&one_minus, wdeg(m, w));
            return poly_mul(&one_minus, &hilbert_numerator(rest, w));
        }
    }
    // Pivot on the variable occurring in most generators, at its smallest
    // positive exponent: N(J) = N(J + (p)) + t^deg(p) N(J : p).
    let n = w.len();
    let var = (0..n).max_by_key(|&i| (gens.iter().filter(|m| m[i] > 0).count(), std::cmp::Reverse(i))).unwrap();
    let e = gens.iter().filter(|m| m[var] > 0).map(|m| m[var]).min().unwrap();
    let mut p = vec![0u32; n];
    p[var] = e;
    let mut with_p: Vec<Monomial> = gens.iter().filter(|m| m[var] < e).cloned().collect();
    with_p.push(p.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut q = m.clone();
            q[var] = q[var].saturating_sub(e);
            q
        })
        .collect();
    let a = hilbert_numerator(with_p, w);
    let b = hilbert_numerator(colon, w);
    poly_add(&a, &shift(&b, wdeg(&p, w)))
}

fn shift_sub(one: &[i64], d: u64) -> Vec<i64> {
    poly_sub(one, &shift(&[1], d))
}

/// Hilbert series of the ring with variable weights `weights` modulo the
/// monomial ideal generated by `gens`.
pub fn hilbert_series_monomial_quotient(gens: &[Monomial], weights: &[u32]) -> HilbertSeries {
    let num = hilbert_numerator(gens.to_vec(), weights);
    if num.is_empty() {
        return HilbertSeries::zero();
    }
    HilbertSeries::new(num, weights.to_vec())
}

/// Number of monomials outside the ideal, by weighted degree through `upto`.
pub fn count_standard_monomials(gens: &[Monomial], weights: &[u32], upto: u64) -> Vec<i64> {
    let mut counts = vec![0i64; upto as usize + 1];
    let mut m = vec![0u32; weights.len()];
    fn rec(i: usize, deg: u64, m: &mut Vec<u32>, gens: &[Monomial], w: &[u32], upto: u64, counts: &mut [i64]) {
        if i == w.len() {
            if !gens.iter().any(|g| divides(g, m)) {
                counts[deg as usize] += 1;
            }
            return;
        }
        let mut d = deg;
        m[i] = 0;
        while d <= upto {
            rec(i + 1, d, m, gens, w, upto, counts);
            m[i] += 1;
            d += w[i] as u64;
        }
        m[i] = 0;
    }
    rec(0, 0, &mut m, gens, weights, upto, &mut counts);
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_squared_in_two_variables() {
        let hs = hilbert_series_monomial_quotient(&[vec![0, 2]], &[2, 2]);
        assert_eq!(hs, HilbertSeries::new(vec![1, 0, 1], vec![2]));
        assert_eq!(hs.reduced().to_string(), "(1 + t^2)/(1 - t^2)");
    }

    #[test]
    fn unit_and_empty_ideals() {
        assert!(hilbert_series_monomial_quotient(&[vec![0]], &[2]).is_zero());
        let free = hilbert_series_monomial_quotient(&[], &[2]);
        assert_eq!(free, HilbertSeries::new(vec![1], vec![2]));
    }

    #[test]
    fn division_by_one_minus() {
        assert_eq!(div_one_minus(&[1, 0, 0, 0, -1], 2), Some(vec![1, 0, 1]));
        assert_eq!(div_one_minus(&[1, 0, 1], 2), None);
        let hs = HilbertSeries::new(vec![1, 0, 0, 0, -1], vec![2, 2]);
        assert_eq!(hs.reduced(), HilbertSeries::new(vec![1, 0, 1], vec![2]));
        assert_eq!(hs.numerator_over(&[2, 2]), Some(vec![1, 0, 0, 0, -1]));
    }

    #[test]
    fn expansion_counts_monomials() {
        let gens = vec![vec![2, 1, 0], vec![0, 3, 1], vec![1, 0, 2]];
        let w = [2, 4, 2];
        let hs = hilbert_series_monomial_quotient(&gens, &w);
        assert_eq!(hs.expand(24), count_standard_monomials(&gens, &w, 24));
    }
}
