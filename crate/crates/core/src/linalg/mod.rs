//! Dense matrices over the integers with exact arithmetic.

mod matrix;
mod snf;

pub use matrix::IntMatrix;
pub use snf::{cokernel, column_span_contains, invariant_factors, smith_normal_form, SnfResult};
