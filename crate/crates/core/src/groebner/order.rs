use std::cmp::Ordering;

use crate::polyalg::Ctx;

/// Term orders on exponent vectors of a fixed context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Lexicographic; `priority` lists variables from most to least significant.
    Lex { priority: Vec<usize> },
    /// Weighted degree, ties broken reverse-lexicographically along `priority`.
    WeightedDegRevLex { weights: Vec<u32>, priority: Vec<usize> },
    /// Lex on `block_a`, then weighted degrevlex on `block_b`. Eliminates `block_a`.
    Elimination { block_a: Vec<usize>, block_b: Vec<usize>, weights: Vec<u32> },
}

fn wdeg(m: &[u32], w: &[u32], vars: &[usize]) -> u64 {
    vars.iter().map(|&i| m[i] as u64 * w[i] as u64).sum()
}

fn lex_on(a: &[u32], b: &[u32], vars: &[usize]) -> Ordering {
    for &i in vars {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

fn wdrl_on(a: &[u32], b: &[u32], w: &[u32], vars: &[usize]) -> Ordering {
    wdeg(a, w, vars).cmp(&wdeg(b, w, vars)).then_with(|| {
        for &i in vars.iter().rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => {}
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    /// Lex with context variable order (first variable largest).
    pub fn lex(ctx: &Ctx) -> Self {
        MonomialOrder::Lex { priority: (0..ctx.len()).collect() }
    }

    pub fn lex_with(priority: Vec<usize>) -> Self {
        MonomialOrder::Lex { priority }
    }

    /// Weighted degrevlex with the context grading.
    pub fn weighted_degrevlex(ctx: &Ctx) -> Self {
        MonomialOrder::WeightedDegRevLex { weights: ctx.weights(), priority: (0..ctx.len()).collect() }
    }

    /// Block order eliminating `drop`.
    pub fn elimination(ctx: &Ctx, drop: &[usize]) -> Self {
        let mut block_a: Vec<usize> = drop.to_vec();
        block_a.sort_unstable();
        block_a.dedup();
        let block_b = (0..ctx.len()).filter(|i| !block_a.contains(i)).collect();
        MonomialOrder::Elimination { block_a, block_b, weights: ctx.weights() }
    }

    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex { priority } => lex_on(a, b, priority),
            MonomialOrder::WeightedDegRevLex { weights, priority } => wdrl_on(a, b, weights, priority),
            MonomialOrder::Elimination { block_a, block_b, weights } => {
                lex_on(a, b, block_a).then_with(|| wdrl_on(a, b, weights, block_b))
            }
        }
    }

    /// Whether the order refines the weighted degree of `ctx`.
    pub fn is_graded_for(&self, ctx: &Ctx) -> bool {
        matches!(self, MonomialOrder::WeightedDegRevLex { weights, .. } if *weights == ctx.weights())
    }
}
