//! Exact scalar, polynomial, rational-function, matrix and truncated-series
//! arithmetic.

pub mod blocks;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod series;

pub use blocks::{column_constant_inverse, is_column_constant, row_sum, schur_complement, Pivot};
pub use field::{rat, Field, IntegralDomain, Rational, Ring, Scalar};
pub use matrix::Matrix;
pub use poly::{poly_gcd, poly_lcm, Poly};
pub use ratfunc::{QFunc, RatFunc};
pub use series::TruncatedSeries;
