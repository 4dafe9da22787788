//! Exact scalars over Q(ζ_n) and dense exact linear algebra.

mod field;
mod matrix;
mod parse;

pub use field::{cyclotomic_polynomial, invert_scalar, FieldSpec, Scalar};
pub use matrix::{basis_vector, dot, is_zero_vector, scale_vector, zero_vector, Matrix, Vector};
pub use parse::parse_scalar;
