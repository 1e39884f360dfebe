//! Exact scalar arithmetic, sparse multivariate polynomials, dense linear
//! algebra, and the polynomial expression parser.

pub mod field;
pub mod matrix;
pub mod parse;
pub mod poly;

pub use field::{Field, Scalar};
pub use matrix::{LinSolve, Matrix};
pub use parse::parse_poly;
pub use poly::{Coeff, CoeffRing, Mono, MultiPoly};
