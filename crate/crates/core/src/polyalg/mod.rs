//! Exact sparse polynomials over weighted graded ring contexts, and Hilbert
//! series of monomial quotients.

mod context;
mod hilbert;
mod poly;
mod ratfunc;
mod text;

pub use context::{Ctx, RingContext, Role, Variable};
pub use hilbert::{
    count_standard_monomials, format_t_poly, hilbert_series_monomial_quotient, minimalize, HilbertSeries,
};
pub use poly::{monomial_weight, print_order, Monomial, Polynomial};
pub use ratfunc::RationalFunction;
