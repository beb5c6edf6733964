//! Exact multivariate polynomials over the rationals.
//!
//! Variables are `x0 > x1 > ... > xn`; every ordering question is answered
//! by the degree reverse lexicographic order.

mod change;
mod monomial;
mod parse;
mod poly;

pub use change::LinearChange;
pub use monomial::{graded_basis, graded_dimension, Monomial, MAX_VARS};
pub use parse::{infer_nvars, parse_polynomial, parse_polynomial_list};
pub use poly::{rat, Polynomial, Rational};
