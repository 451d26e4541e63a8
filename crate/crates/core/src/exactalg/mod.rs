//! Exact polynomial arithmetic: Laurent polynomials in M, polynomials over them in a
//! trace variable, bivariate output polynomials in (L, M), and resultants.

pub mod bivar;
pub mod json;
mod kron;
pub mod lampoly;
pub mod laurent;
pub mod mat2;
pub mod modp;
pub mod poly;
pub mod resultant;
pub mod ring;

pub use bivar::{Bivar, Multiplicities, UnitReport};
pub use json::{JsonPoly, JsonTerm};
pub use lampoly::{LamPoly, Var};
pub use laurent::Laurent;
pub use mat2::Mat2;
pub use poly::Poly;
pub use ring::{ExactDiv, GcdRing, Ring, ToComplex};

#[cfg(test)]
mod tests;
