//! A-polynomials: eliminate lambda~ between the Riley polynomial f and the longitude relation
//! L M^{2 sigma} gbar + g = 0.

#[cfg(test)]
mod tests;

use crate::error::RileyError;
use crate::exactalg::resultant::{resultant_evalinterp, resultant_prs_tri, resultant_sylvester, TriPoly};
use crate::exactalg::{Bivar, GcdRing, LamPoly, Multiplicities, Poly, Ring, UnitReport, Var};
use crate::knotspec::{epsilon_from_fraction, EpsilonSeq, TwoBridgeFraction};
use crate::rileycore::{riley_recursive, RileyPair};
use crate::{BivarInt, LamPolyInt, TracePoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// f together with the longitude relation, stored by powers of L: elim = sum_j L^j elim[j].
#[derive(Clone, Debug, PartialEq)]
pub struct LongitudePair {
    pub f: LamPolyInt,
    pub elim: Vec<LamPolyInt>,
    pub sigma: i64,
}

/// lambda~ g^2 M^{-2 sigma} reduced modulo f; equals L on the representation variety.
#[derive(Clone, Debug, PartialEq)]
pub struct LongitudeWitness {
    pub l_value_mod_f: LamPolyInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Prs,
    Evalinterp,
    Both,
    /// Sylvester determinant; the oracle, slow beyond small knots.
    Sylvester,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct APolyOptions {
    pub strategy: Strategy,
    pub squarefree: bool,
}

impl Default for APolyOptions {
    fn default() -> Self {
        APolyOptions { strategy: Strategy::Prs, squarefree: false }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct APolyResult {
    /// Res(f, elim) after each input was multiplied by the least M-power clearing denominators.
    pub raw: BivarInt,
    pub normalized: BivarInt,
    /// Present when requested in the options.
    pub squarefree: Option<BivarInt>,
    pub multiplicities: Multiplicities<BigInt>,
    pub unit_report: UnitReport<BigInt>,
    /// Set when an L - 1 factor appears; it is reported and kept.
    pub abelian_factor: bool,
}

fn tp(p: &TracePoly) -> LamPolyInt {
    LamPoly::new(Var::LTilde, p.clone())
}

pub fn longitude_pair(pair: &RileyPair, eps: &EpsilonSeq) -> LongitudePair {
    let sigma = eps.sigma();
    let g = &pair.g.poly;
    let gbar = g.map(|c| c.bar());
    let l1 = gbar.map(|c| c.shift(2 * sigma));
    LongitudePair { f: pair.f.clone(), elim: vec![tp(g), tp(&l1)], sigma }
}

/// Remainder of p modulo f, whose leading coefficient is a unit of Z[M, M^-1].
fn rem_unit_lc(p: &TracePoly, f: &TracePoly) -> TracePoly {
    p.divrem_exact(f).expect("leading coefficient of f is a unit").1
}

pub fn longitude_witness(lp: &LongitudePair) -> LongitudeWitness {
    let f = &lp.f.poly;
    let g = lp.elim[0].poly.clone();
    let w = Poly::x().mul_ref(&g).mul_ref(&g);
    let w = rem_unit_lc(&w, f).map(|c| c.shift(-2 * lp.sigma));
    LongitudeWitness { l_value_mod_f: tp(&w) }
}

/// The alternative relation L - witness, linear in L.
pub fn witness_relation(lp: &LongitudePair) -> Vec<LamPolyInt> {
    let w = longitude_witness(lp).l_value_mod_f.poly;
    vec![tp(&-w), tp(&TracePoly::one())]
}

/// Lift to Z[L][M] coefficients after multiplying by the least power of M that clears
/// negative exponents.
fn clear_denominators(by_l: &[&TracePoly]) -> TriPoly {
    let lo = by_l
        .iter()
        .flat_map(|p| p.coeffs().iter().filter_map(|c| c.min_exp()))
        .min()
        .unwrap_or(0);
    let deg = by_l.iter().map(|p| p.deg()).max().unwrap_or(-1);
    let mut out = Vec::new();
    for k in 0..=deg.max(-1) {
        let k = k as usize;
        let in_l: Vec<Poly<BigInt>> = by_l
            .iter()
            .map(|p| p.coeff(k).shift(-lo).to_poly().expect("cleared"))
            .collect();
        out.push(Poly::new(in_l));
    }
    Poly::new(out)
}

/// f and the relation as trivariate integer inputs, denominators cleared.
pub fn tri_inputs(lp: &LongitudePair, rel: &[LamPolyInt]) -> (TriPoly, TriPoly) {
    (f_tri(lp), elim_tri(rel))
}

fn f_tri(lp: &LongitudePair) -> TriPoly {
    clear_denominators(&[&lp.f.poly])
}

fn elim_tri(rel: &[LamPolyInt]) -> TriPoly {
    let refs: Vec<&TracePoly> = rel.iter().map(|p| &p.poly).collect();
    clear_denominators(&refs)
}

/// Resultant in lambda~ of two inputs by the chosen route.
pub fn resultant_lambda(a: &TriPoly, b: &TriPoly, strategy: Strategy) -> Result<BivarInt, RileyError> {
    if a.is_zero() || b.is_zero() {
        return Err(RileyError::EmptyInput);
    }
    Ok(match strategy {
        Strategy::Prs => resultant_prs_tri(a, b),
        Strategy::Evalinterp => resultant_evalinterp(a, b),
        Strategy::Sylvester => Bivar::new(resultant_sylvester(a, b)),
        Strategy::Both => {
            let p = resultant_prs_tri(a, b);
            if p != resultant_evalinterp(a, b) {
                return Err(RileyError::StrategyMismatch);
            }
            p
        }
    })
}

/// Res(f, relation) followed by normalization and, optionally, the squarefree part.
pub fn eliminate_with(lp: &LongitudePair, rel: &[LamPolyInt], opts: APolyOptions) -> Result<APolyResult, RileyError> {
    let (a, b) = (f_tri(lp), elim_tri(rel));
    let raw = resultant_lambda(&a, &b, opts.strategy)?;
    if raw.is_zero() {
        let g = a.gcd(&b);
        return Err(RileyError::Degenerate(format!("{:?}", g.coeffs())));
    }
    let (normalized, unit_report) = raw.content_and_units();
    let (squarefree, multiplicities) = if opts.squarefree {
        let (s, m) = normalized.squarefree_part();
        (Some(s.normalized()), m)
    } else {
        (None, Multiplicities { factors: Vec::new() })
    };
    let abelian_factor = has_abelian_factor(&normalized);
    Ok(APolyResult { raw, normalized, squarefree, multiplicities, unit_report, abelian_factor })
}

pub fn eliminate(lp: &LongitudePair, opts: APolyOptions) -> Result<APolyResult, RileyError> {
    eliminate_with(lp, &lp.elim, opts)
}

pub fn a_polynomial_eps(eps: &EpsilonSeq, opts: APolyOptions) -> Result<APolyResult, RileyError> {
    let pair = riley_recursive(eps);
    eliminate(&longitude_pair(&pair, eps), opts)
}

pub fn a_polynomial(fr: TwoBridgeFraction, opts: APolyOptions) -> Result<APolyResult, RileyError> {
    a_polynomial_eps(&epsilon_from_fraction(fr), opts)
}

/// True when L - 1 divides a.
fn has_abelian_factor(a: &BivarInt) -> bool {
    let mut s = Poly::<BigInt>::zero();
    for r in a.p.coeffs() {
        s.add_assign_ref(r);
    }
    s.is_zero()
}

/// A(L, M) -> A(L, M^-1), renormalized.
pub fn mirror_image(a: &BivarInt) -> BivarInt {
    a.reflect_m().normalized()
}
