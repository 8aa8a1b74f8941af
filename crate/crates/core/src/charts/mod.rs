//! Varieties with a chart on the open cell of the `e`-fixed point, their
//! Białynicki-Birula weights, and the vector fields of the `sl_n` action.

mod fields;

pub use fields::{bs_vector_field, flag_field, vector_field, vector_field_of_matrix, VectorField};

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::liealg::{LieElement, PrincipalTriple, RootData};
use crate::matrix::Matrix;
use crate::polyalg::{HilbertSeries, RingContext, Role, Variable};
use crate::{q, Poly, PolyMatrix};

/// The varieties the engine knows how to chart.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ChartKind {
    /// `P^n`, acted on by `sl_{n+1}`.
    ProjectiveSpace { n: usize },
    /// `Gr(k, n)` of k-planes in `C^n`.
    Grassmannian { k: usize, n: usize },
    /// Flags `V_{d_1} ⊂ … ⊂ V_{d_m}` in `C^n`.
    PartialFlag { dims: Vec<usize>, n: usize },
    /// Bott–Samelson variety of a word of simple roots of `sl_{rank+1}`.
    BottSamelson { word: Vec<usize>, rank: usize },
}

/// A variety, its cell coordinates and their weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartDescriptor {
    pub kind: ChartKind,
    pub cell_coords: Vec<String>,
    /// Matrix position `(row, col)` of each coordinate (matrix charts only).
    pub positions: Vec<(usize, usize)>,
    pub bb_weights: Vec<u32>,
}

fn letter(c: usize) -> String {
    const L: [&str; 3] = ["x", "y", "z"];
    L.get(c).map_or_else(|| format!("w{}_", c + 1), |s| s.to_string())
}

impl ChartKind {
    /// Matrix size of the acting `sl_n`.
    pub fn ambient(&self) -> usize {
        match self {
            ChartKind::ProjectiveSpace { n } => n + 1,
            ChartKind::Grassmannian { n, .. } | ChartKind::PartialFlag { n, .. } => *n,
            ChartKind::BottSamelson { rank, .. } => rank + 1,
        }
    }

    /// Partial dimensions of the flag (a single one for P^n and Gr).
    pub fn dims(&self) -> Option<Vec<usize>> {
        match self {
            ChartKind::ProjectiveSpace { .. } => Some(vec![1]),
            ChartKind::Grassmannian { k, .. } => Some(vec![*k]),
            ChartKind::PartialFlag { dims, .. } => Some(dims.clone()),
            ChartKind::BottSamelson { .. } => None,
        }
    }

    fn block_of(&self, i: usize) -> usize {
        let dims = self.dims().unwrap();
        dims.iter().filter(|&&d| d <= i).count()
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Grammar { input: self.to_string(), msg: msg.into() });
        match self {
            ChartKind::ProjectiveSpace { n } if *n == 0 => bad("P^0 has no cell"),
            ChartKind::Grassmannian { k, n } if *k == 0 || k >= n => bad("need 0 < k < n"),
            ChartKind::PartialFlag { dims, n } => {
                if dims.is_empty()
                    || dims[0] == 0
                    || dims.windows(2).any(|w| w[0] >= w[1])
                    || *dims.last().unwrap() >= *n
                {
                    bad("need 0 < d_1 < … < d_m < n")
                } else {
                    Ok(())
                }
            }
            ChartKind::BottSamelson { word, rank } => {
                if *rank == 0 {
                    return bad("rank must be positive");
                }
                if word.is_empty() {
                    return bad("empty word");
                }
                for &i in word {
                    if i == 0 || i > *rank {
                        return Err(Error::BadRootIndex { index: i, rank: *rank });
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    fn coordinates(&self) -> (Vec<String>, Vec<(usize, usize)>) {
        match self {
            ChartKind::ProjectiveSpace { n } => {
                ((1..=*n).map(|i| format!("x{i}")).collect(), (1..=*n).map(|i| (i, 0)).collect())
            }
            ChartKind::Grassmannian { k, n } => {
                let mut names = Vec::new();
                let mut pos = Vec::new();
                for r in 0..n - k {
                    for c in 0..*k {
                        names.push(if *k <= 3 {
                            format!("{}{}", letter(c), r + 1)
                        } else {
                            format!("x{}_{}", r + 1, c + 1)
                        });
                        pos.push((k + r, c));
                    }
                }
                (names, pos)
            }
            ChartKind::PartialFlag { n, .. } => {
                let mut pos = Vec::new();
                for j in 0..*n {
                    for i in j + 1..*n {
                        if self.block_of(i) > self.block_of(j) {
                            pos.push((i, j));
                        }
                    }
                }
                let names = if matches!(self, ChartKind::PartialFlag { dims, n: 3 } if dims == &[1, 2]) {
                    vec!["a".into(), "b".into(), "c".into()]
                } else if *n <= 9 {
                    pos.iter().map(|(i, j)| format!("l{}{}", i + 1, j + 1)).collect()
                } else {
                    pos.iter().map(|(i, j)| format!("l{}_{}", i + 1, j + 1)).collect()
                };
                (names, pos)
            }
            ChartKind::BottSamelson { word, .. } => ((1..=word.len()).map(|i| format!("x{i}")).collect(), Vec::new()),
        }
    }

    /// Poincaré polynomial of ordinary cohomology, by t-degree.
    pub fn poincare_polynomial(&self) -> Vec<i64> {
        match self {
            ChartKind::BottSamelson { word, .. } => {
                let mut p = vec![1i64];
                for _ in word {
                    let mut next = vec![0; p.len() + 2];
                    for (i, c) in p.iter().enumerate() {
                        next[i] += c;
                        next[i + 2] += c;
                    }
                    p = next;
                }
                p
            }
            _ => {
                let n = self.ambient();
                let dims = self.dims().unwrap();
                let mut blocks = Vec::new();
                let mut prev = 0;
                for &d in dims.iter().chain(std::iter::once(&n)) {
                    blocks.push(d - prev);
                    prev = d;
                }
                // q-multinomial in q = t²: ∏_{i≤n} (1 - t^{2i}) / ∏_blocks ∏_{i≤s} (1 - t^{2i}).
                let mut num = vec![1i64];
                for i in 1..=n {
                    let mut next = vec![0; num.len() + 2 * i];
                    for (j, c) in num.iter().enumerate() {
                        next[j] += c;
                        next[j + 2 * i] -= c;
                    }
                    num = next;
                }
                let dens: Vec<u32> = blocks.iter().flat_map(|&s| (1..=s).map(|i| 2 * i as u32)).collect();
                HilbertSeries::new(num, dens).numerator_over(&[]).expect("q-multinomials are polynomials")
            }
        }
    }

    /// Number of torus-fixed points, i.e. the Euler characteristic.
    pub fn euler_characteristic(&self) -> u64 {
        self.poincare_polynomial().iter().sum::<i64>() as u64
    }

    pub fn dimension(&self) -> usize {
        self.coordinates().0.len()
    }
}

impl fmt::Display for ChartKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChartKind::ProjectiveSpace { n } => write!(f, "pn:{n}"),
            ChartKind::Grassmannian { k, n } => write!(f, "gr:{k},{n}"),
            ChartKind::PartialFlag { dims, n } => {
                if *dims == (1..*n).collect::<Vec<_>>() {
                    write!(f, "flag:{n}")
                } else {
                    write!(f, "flag:{}@{n}", dims.iter().join(","))
                }
            }
            ChartKind::BottSamelson { word, rank } => write!(f, "bs:{}@sl{}", word.iter().join(","), rank + 1),
        }
    }
}

fn grammar<T>(input: &str, msg: &str) -> Result<T> {
    Err(Error::Grammar { input: input.to_string(), msg: msg.to_string() })
}

fn parse_list(input: &str, s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().or_else(|_| grammar(input, &format!("`{x}` is not a non-negative integer"))))
        .collect()
}

impl FromStr for ChartKind {
    type Err = Error;

    /// `pn:N`, `gr:K,N`, `flag:N`, `flag:D1,…,Dm@N`, `bs:I1,…,Il@slN`.
    fn from_str(s: &str) -> Result<Self> {
        let Some((head, rest)) = s.trim().split_once(':') else {
            return grammar(s, "expected `kind:arguments`");
        };
        let kind = match head {
            "pn" => {
                let v = parse_list(s, rest)?;
                if v.len() != 1 {
                    return grammar(s, "pn takes one argument");
                }
                ChartKind::ProjectiveSpace { n: v[0] }
            }
            "gr" => {
                let v = parse_list(s, rest)?;
                if v.len() != 2 {
                    return grammar(s, "gr takes k,n");
                }
                ChartKind::Grassmannian { k: v[0], n: v[1] }
            }
            "flag" => match rest.split_once('@') {
                None => {
                    let v = parse_list(s, rest)?;
                    if v.len() != 1 || v[0] < 2 {
                        return grammar(s, "flag:N needs N >= 2");
                    }
                    ChartKind::PartialFlag { dims: (1..v[0]).collect(), n: v[0] }
                }
                Some((d, n)) => {
                    let n = parse_list(s, n)?;
                    if n.len() != 1 {
                        return grammar(s, "expected one ambient size after `@`");
                    }
                    ChartKind::PartialFlag { dims: parse_list(s, d)?, n: n[0] }
                }
            },
            "bs" => {
                let Some((w, g)) = rest.split_once('@') else {
                    return grammar(s, "expected `bs:word@slN`");
                };
                let Some(n) = g.trim().strip_prefix("sl") else {
                    return grammar(s, "expected `slN` after `@`");
                };
                let n = parse_list(s, n)?;
                if n.len() != 1 || n[0] < 2 {
                    return grammar(s, "need slN with N >= 2");
                }
                ChartKind::BottSamelson { word: parse_list(s, w)?, rank: n[0] - 1 }
            }
            _ => return grammar(s, "unknown variety kind"),
        };
        kind.validate()?;
        Ok(kind)
    }
}

/// Coordinate ring with only cell coordinates, all of weight 2; used before
/// the real weights are known.
fn provisional_ctx(names: &[String]) -> crate::polyalg::Ctx {
    RingContext::new(names.iter().map(|n| Variable::new(n.clone(), 2, Role::Cell)).collect()).expect("valid names")
}

impl ChartDescriptor {
    pub fn new(kind: ChartKind) -> Result<Self> {
        kind.validate()?;
        let (cell_coords, positions) = kind.coordinates();
        let mut chart = ChartDescriptor { kind, cell_coords, positions, bb_weights: Vec::new() };
        let triple = PrincipalTriple::new(chart.kind.ambient());
        let a = bb_weights(&chart, &triple.h)?;
        for (name, &w) in chart.cell_coords.iter().zip(&a) {
            if w <= 0 || w % 2 != 0 {
                return Err(Error::BadBbWeight { name: name.clone(), weight: w });
            }
        }
        chart.bb_weights = a.into_iter().map(|w| w as u32).collect();
        Ok(chart)
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.parse()?)
    }

    pub fn dimension(&self) -> usize {
        self.cell_coords.len()
    }

    pub fn ambient(&self) -> usize {
        self.kind.ambient()
    }

    pub fn is_bott_samelson(&self) -> bool {
        matches!(self.kind, ChartKind::BottSamelson { .. })
    }

    /// Scaling factor of each coordinate under the diagonal torus element
    /// `diag(g)`: `x ↦ (g_row / g_col) x`.
    pub fn torus_scaling<F: FieldElem>(&self, g: &[F]) -> Result<Vec<F>> {
        if self.is_bott_samelson() {
            return Err(Error::Unsupported("torus scaling on Bott-Samelson charts".into()));
        }
        self.positions.iter().map(|&(r, c)| g[r].div_ref(&g[c]).ok_or(Error::Singular)).collect()
    }

    /// Torus-fixed points as column frames: the flag is spanned by the
    /// standard basis vectors in the listed order, grouped by block.
    pub fn fixed_point_frames(&self) -> Option<Vec<Vec<usize>>> {
        let dims = self.kind.dims()?;
        let n = self.ambient();
        let mut bounds = dims.clone();
        bounds.push(n);
        let frames = (0..n)
            .permutations(n)
            .filter(|p| {
                let mut prev = 0;
                bounds.iter().all(|&b| {
                    let ok = p[prev..b].windows(2).all(|w| w[0] < w[1]);
                    prev = b;
                    ok
                })
            })
            .map(|p| p[..*dims.last().unwrap()].to_vec())
            .collect();
        Some(frames)
    }

    /// Chart coordinates of the flag spanned by the columns of `frame`
    /// (an `n × d_m` matrix), if the flag lies in the cell.
    pub fn coordinates_of_frame<F: FieldElem>(&self, frame: &Matrix<F>) -> Result<Vec<F>> {
        let dims = self.kind.dims().ok_or_else(|| Error::Unsupported("frames on Bott-Samelson charts".into()))?;
        let n = self.ambient();
        let z = frame.zero_elem().clone();
        let mut l = Matrix::identity_like(&z, n);
        let mut prev = 0;
        for &d in &dims {
            let cols: Vec<usize> = (0..d).collect();
            let all: Vec<usize> = (0..n).collect();
            let m = frame.submatrix(&all, &cols);
            let top = frame.submatrix(&cols, &cols);
            let p = m.try_mul(&top.inverse()?)?;
            for i in 0..n {
                for j in prev..d {
                    l.set(i, j, p.get(i, j).clone());
                }
            }
            prev = d;
        }
        Ok(self.positions.iter().map(|&(r, c)| l.get(r, c).clone()).collect())
    }

    /// The chart's coordinate matrix (`z`, `[I; X]` or `L`) in `ctx`.
    pub(crate) fn coordinate_matrix(&self, ctx: &crate::polyalg::Ctx) -> Result<PolyMatrix> {
        let n = self.ambient();
        let zero = Poly::zero(ctx);
        let mut l = Matrix::identity_like(&zero, n);
        for (name, &(r, c)) in self.cell_coords.iter().zip(&self.positions) {
            l.set(r, c, Poly::var(ctx, name)?);
        }
        Ok(l)
    }
}

impl fmt::Display for ChartDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}

/// `a_i = −(coefficient of x_i in component i of V_h)`, for diagonal `h`.
pub fn bb_weights(chart: &ChartDescriptor, h: &LieElement) -> Result<Vec<i64>> {
    if let ChartKind::BottSamelson { word, rank } = &chart.kind {
        let rd = RootData::sl(rank + 1);
        return word.iter().map(|&i| Ok(rd.pairing(i - 1, h))).collect();
    }
    let ctx = provisional_ctx(&chart.cell_coords);
    let hm = h.matrix().map(&Poly::zero(&ctx), |c| Poly::constant(&ctx, c.clone()));
    let comps = vector_field_of_matrix(chart, &ctx, &hm)?;
    let mut out = Vec::with_capacity(comps.len());
    for (i, comp) in comps.iter().enumerate() {
        let mut m = vec![0u32; ctx.len()];
        m[i] = 1;
        let c = comp.coeff(&m);
        if comp.len() != usize::from(c != q(0)) || !c.is_integer() {
            return Err(Error::NotDiagonalLinear(chart.cell_coords[i].clone()));
        }
        out.push(-i64::try_from(c.to_integer()).map_err(|_| Error::NotDiagonalLinear(chart.cell_coords[i].clone()))?);
    }
    Ok(out)
}
