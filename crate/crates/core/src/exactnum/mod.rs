//! Exact rational and cyclotomic-field arithmetic.

pub mod arith;
mod cyclotomic;
mod linalg;
mod matrix;
mod poly;

pub use cyclotomic::{sum_primitive_roots, Cyclotomic};
pub use matrix::{companion_matrix, Matrix, Scalar};
pub use poly::{cyclotomic_polynomial, poly_divrem_monic, poly_mul, x_pow_minus_one, CyclotomicPoly, IntPoly};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;
