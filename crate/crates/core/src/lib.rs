//! Riley polynomials, Alexander polynomials and A-polynomials of two-bridge knots,
//! computed exactly over big integers with a floating-point cross-check.

pub mod error;
pub mod exactalg;
pub mod knotspec;
pub mod rileycore;
pub mod apoly;
pub mod alexander;
pub mod numcheck;
pub mod cli;

pub use error::RileyError;
pub use exactalg::{Bivar, LamPoly, Laurent, Mat2, Poly, Var};

use num_bigint::BigInt;

/// Laurent polynomial in M over the integers.
pub type LaurentInt = Laurent<BigInt>;
/// Polynomial in a trace variable over Z[M, M^-1].
pub type LamPolyInt = LamPoly<BigInt>;
/// Polynomial in (L, M) over the integers.
pub type BivarInt = Bivar<BigInt>;
/// Untagged polynomial in a trace variable over Z[M, M^-1].
pub type TracePoly = Poly<LaurentInt>;
