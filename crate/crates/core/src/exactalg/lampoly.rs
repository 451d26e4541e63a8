use super::laurent::{monomial, write_terms, Laurent};
use super::poly::Poly;
use super::ring::Ring;
use crate::error::RileyError;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which trace variable a polynomial is written in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Var {
    /// lambda~ = lambda + z^2 = tr(xy) - 2
    #[serde(rename = "Ltilde")]
    LTilde,
    #[serde(rename = "lambda")]
    Lambda,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::LTilde => "Ltilde",
            Var::Lambda => "lambda",
        }
    }
}

/// Polynomial in a trace variable with Laurent-in-M coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LamPoly<R = BigInt> {
    pub var: Var,
    pub poly: Poly<Laurent<R>>,
}

impl<R: Ring> LamPoly<R> {
    pub fn new(var: Var, poly: Poly<Laurent<R>>) -> Self {
        LamPoly { var, poly }
    }

    fn check(&self, o: &Self) -> Result<(), RileyError> {
        if self.var == o.var {
            Ok(())
        } else {
            Err(RileyError::TagMismatch(self.var.name(), o.var.name()))
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, RileyError> {
        self.check(o)?;
        Ok(Self::new(self.var, self.poly.add_ref(&o.poly)))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, RileyError> {
        self.check(o)?;
        Ok(Self::new(self.var, self.poly.sub_ref(&o.poly)))
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, RileyError> {
        self.check(o)?;
        Ok(Self::new(self.var, self.poly.mul_ref(&o.poly)))
    }

    /// M -> M^-1 on every coefficient.
    pub fn bar(&self) -> Self {
        Self::new(self.var, self.poly.map(|c| c.bar()))
    }

    /// Rewrite in the other trace variable (lambda~ = lambda + z^2).
    pub fn convert(&self, to: Var) -> Self {
        if to == self.var {
            return self.clone();
        }
        let z2 = Laurent::<R>::z().mul_ref(&Laurent::z());
        let shift = match to {
            Var::Lambda => z2,
            Var::LTilde => -z2,
        };
        Self::new(to, self.poly.taylor_shift(&shift))
    }

    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Nonzero (lam-degree, M-exponent, coefficient) triples.
    pub fn terms(&self) -> Vec<(usize, i64, R)> {
        let mut out = Vec::new();
        for (k, c) in self.poly.coeffs().iter().enumerate() {
            for (e, a) in c.terms() {
                out.push((k, e, a.clone()));
            }
        }
        out
    }
}

impl<R: Ring + fmt::Display> fmt::Display for LamPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.var {
            Var::LTilde => "Lt",
            Var::Lambda => "lam",
        };
        let mut t: Vec<_> = self.terms();
        t.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
        write_terms(
            f,
            t.into_iter().map(|(k, e, a)| {
                let mono = [monomial(v, k as i64), monomial("M", e)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect::<Vec<_>>()
                    .join("*");
                (a.to_string(), mono)
            }),
        )
    }
}

impl<R: Ring> LamPoly<R> {
    pub fn zero(var: Var) -> Self {
        Self::new(var, Poly::zero())
    }
}
