//! JSON term lists: {"var": "Ltilde" | "lambda" | "L", "terms": [{"L", "M", "lam", "coeff"}]},
//! coefficients as decimal strings. Exponents a polynomial does not use are written as 0.

use super::bivar::Bivar;
use super::lampoly::{LamPoly, Var};
use super::laurent::Laurent;
use super::poly::Poly;
use super::ring::Ring;
use num_traits::Zero;
use crate::error::RileyError;
use serde::{Deserialize, Serialize};
use std::fmt::Display;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    #[serde(rename = "L")]
    pub l: u64,
    #[serde(rename = "M")]
    pub m: i64,
    pub lam: u64,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonPoly {
    pub var: String,
    pub terms: Vec<JsonTerm>,
}

fn parse_coeff<R: FromStr>(s: &str) -> Result<R, RileyError> {
    s.parse().map_err(|_| RileyError::Parse(format!("bad coefficient {s:?}")))
}

impl<R: Ring + Display + FromStr> LamPoly<R> {
    /// Terms in increasing (lam, M) order.
    pub fn to_json(&self) -> JsonPoly {
        let terms = self
            .terms()
            .into_iter()
            .map(|(k, e, a)| JsonTerm { l: 0, m: e, lam: k as u64, coeff: a.to_string() })
            .collect();
        JsonPoly { var: self.var.name().into(), terms }
    }

    pub fn from_json(j: &JsonPoly) -> Result<Self, RileyError> {
        let var = match j.var.as_str() {
            "Ltilde" => Var::LTilde,
            "lambda" => Var::Lambda,
            v => return Err(RileyError::Parse(format!("unknown trace variable {v:?}"))),
        };
        let mut p = Poly::<Laurent<R>>::zero();
        for t in &j.terms {
            if t.l != 0 {
                return Err(RileyError::Parse("L exponent in a trace polynomial".into()));
            }
            let c = Laurent::monomial(parse_coeff(&t.coeff)?, t.m);
            p.add_assign_ref(&Poly::monomial(c, t.lam as usize));
        }
        Ok(LamPoly::new(var, p))
    }
}

impl<R: Ring + Display + FromStr> Bivar<R> {
    /// Terms in increasing (L, M) order.
    pub fn to_json(&self) -> JsonPoly {
        let terms = self
            .terms()
            .into_iter()
            .map(|(l, m, a)| JsonTerm { l: l as u64, m: m as i64, lam: 0, coeff: a.to_string() })
            .collect();
        JsonPoly { var: "L".into(), terms }
    }

    pub fn from_json(j: &JsonPoly) -> Result<Self, RileyError> {
        if j.var != "L" {
            return Err(RileyError::Parse(format!("expected var \"L\", found {:?}", j.var)));
        }
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.lam != 0 || t.m < 0 {
                return Err(RileyError::Parse("A-polynomial terms need lam = 0 and M >= 0".into()));
            }
            terms.push((t.l as usize, t.m as usize, parse_coeff(&t.coeff)?));
        }
        Ok(Bivar::from_terms(terms))
    }
}
