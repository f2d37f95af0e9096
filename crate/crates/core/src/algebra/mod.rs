//! Exact fields and dense linear algebra over them.

mod field;
mod matrix;

pub use field::{is_prime, Field, FieldConfig, PrimeField, Rationals, DEFAULT_MODULUS};
pub use matrix::{in_span, Matrix, Subspace};
