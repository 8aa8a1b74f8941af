//! Exact computer algebra for equivariant cohomology of flag-type varieties,
//! realized as coordinate rings of zero schemes of vector fields.
//!
//! The pipeline: build a family of matrices in `sl_n` ([`liealg`]), turn it
//! into a vector field on the open cell of a variety ([`charts`]), take the
//! ideal of its zeros and eliminate ([`zeroscheme`], [`groebner`]), then
//! compare with moment-graph data ([`gkm`]).
//!
//! All arithmetic is exact. The engine is generic over coefficient fields via
//! [`Field`]; the aliases below fix the rational instance used throughout.

pub mod charts;
pub mod error;
pub mod field;
pub mod gkm;
pub mod golden;
pub mod groebner;
pub mod liealg;
pub mod matrix;
pub mod polyalg;
pub mod zeroscheme;

pub use error::{Error, Result};
pub use field::{Field, FieldElem, RingElem};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
/// Polynomials with rational coefficients.
pub type Poly = polyalg::Polynomial<Rational>;
/// Rational matrices.
pub type QMatrix = matrix::Matrix<Rational>;
/// Matrices of rational polynomials.
pub type PolyMatrix = matrix::Matrix<Poly>;
/// Gröbner bases over the rationals.
pub type QGroebnerBasis = groebner::GroebnerBasis<Rational>;

/// Integer as a rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `n / d` as a rational.
pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
