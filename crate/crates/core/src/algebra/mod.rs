//! Exact scalar, matrix, minor and Laurent polynomial arithmetic.

pub mod laurent;
pub mod matrix;
pub mod minors;
pub mod scalar;

pub use laurent::{LaurentPoly, Monomial, Var};
pub use matrix::ExactMatrix;
pub use minors::{adjacent_minor, dodgson_check, minor, rank};
pub use scalar::Scalar;
