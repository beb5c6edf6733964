//! Exact graded commutative algebra over the rationals: Groebner bases,
//! syzygies, generic initial ideals, Hilbert series, Lefschetz properties
//! of graded quotients and freeness of line and hyperplane arrangements.

pub mod arrangement;
pub mod error;
pub mod gin;
pub mod groebner;
pub mod hilbert;
pub mod lefschetz;
pub mod linalg;
pub mod polyring;
pub mod random;
pub mod syzygy;

pub use error::{Error, Result};
pub use gin::{rgin, GinCertificate, GinOptions};
pub use groebner::{GroebnerBasis, Ideal, MonomialIdeal};
pub use polyring::{LinearChange, Monomial, Polynomial, Rational};
