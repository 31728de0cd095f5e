//! Exact arithmetic: ring traits, sparse polynomials, fraction-free linear algebra.

pub mod lincomb;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod span;

pub use lincomb::LinComb;
pub use matrix::Matrix;
pub use poly::{difference_product, Monomial, Poly};
pub use scalar::{ExactField, Field, Ring};
pub use span::{rank_of, SpanBasis};
