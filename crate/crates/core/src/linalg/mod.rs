//! Exact linear algebra over the rationals and cyclotomic fields.

pub mod field;
pub mod matrix;
pub mod subquotient;

pub use field::{cyclotomic_polynomial, make_field, FieldDescriptor, FieldKind, Rational, Scalar};
pub use matrix::{vector, Matrix};
pub use subquotient::{subquotient, SubquotientSpace};
