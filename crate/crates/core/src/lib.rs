//! Non-crossing tableaux and their relatives, with exact arithmetic.

pub mod bidet;
pub mod brute;
pub mod combinat;
pub mod error;
pub mod exactmath;
pub mod grass;
pub mod json;
pub mod specht;
pub mod tlalg;
pub mod verify;

pub use error::{Error, Result};

/// Arbitrary-precision rational, the default coefficient field.
pub type Rational = num_rational::BigRational;
/// Sparse multivariate polynomial with rational coefficients.
pub type ExactPoly = exactmath::Poly<Rational>;
/// Dense rational matrix.
pub type ExactMatrix = exactmath::Matrix<Rational>;
