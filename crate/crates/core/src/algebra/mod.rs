//! Exact arithmetic: sparse multivariate polynomials over the integers,
//! univariate interpolation, rational rank and Smith normal form.

mod interp;
mod matrix;
mod poly;
mod scaled;

pub use interp::{interpolate_counts, interpolate_counts_rational, interpolate_rational, interpolate_univariate};
pub use matrix::{IntMatrix, RationalMatrix};
pub use poly::{Exponents, MultiPoly, TermJson, Var, NVARS};
pub use scaled::ScaledPoly;
