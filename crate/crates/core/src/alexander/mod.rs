//! Alexander polynomials of kmot groups by five independent formulas, all carried in
//! u = t^{1/2} so half-integer powers of t stay exact.

#[cfg(test)]
mod tests;

use crate::error::RileyError;
use crate::exactalg::laurent::{monomial, write_terms};
use crate::exactalg::{Ring, Var};
use crate::knotspec::{EpsilonSeq, HalfSeq};
use crate::rileycore::RileyPair;
use crate::{LaurentInt, TracePoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;

/// A Laurent polynomial in u with t = u^2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymLaurent {
    pub poly: LaurentInt,
}

fn u_pow(e: i64) -> LaurentInt {
    LaurentInt::m_pow(e)
}

fn int(v: i64) -> LaurentInt {
    LaurentInt::constant(BigInt::from(v))
}

impl SymLaurent {
    pub fn new(poly: LaurentInt) -> Self {
        SymLaurent { poly }
    }

    /// Multiply by the unit +-u^k that centres the exponents and makes the value at u = 1
    /// positive. For knot groups this is the +-t^k giving Delta(t) = Delta(1/t), Delta(1) = 1.
    pub fn normalized(&self) -> Self {
        let (Some(lo), Some(hi)) = (self.poly.min_exp(), self.poly.max_exp()) else {
            return self.clone();
        };
        let mut p = self.poly.shift(-(lo + hi).div_euclid(2));
        if self.at_one().is_negative() {
            p = -p;
        }
        SymLaurent { poly: p }
    }

    /// Value at t = 1.
    pub fn at_one(&self) -> BigInt {
        self.poly.coeffs().iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.poly.is_symmetric()
    }

    /// The polynomial in t, when every u-exponent is even.
    pub fn to_t(&self) -> Option<LaurentInt> {
        self.poly.halve_var()
    }

    pub fn from_t(p: &LaurentInt) -> Self {
        SymLaurent { poly: p.square_var() }
    }
}

/// Ascending powers of t, falling back to u = t^(1/2) for odd u-exponents.
impl fmt::Display for SymLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        match self.to_t() {
            Some(t) => write_terms(f, t.terms().map(|(e, a)| (a.to_string(), monomial("t", e)))),
            None => write_terms(f, self.poly.terms().map(|(e, a)| (a.to_string(), monomial("u", e)))),
        }
    }
}

/// f at lambda~ = z^2 with M read as u.
fn at_lambda_zero(f: &TracePoly) -> LaurentInt {
    let z = LaurentInt::z();
    f.eval(&z.mul_ref(&z))
}

/// Delta(M^2) = f(lambda = 0).
pub fn alexander_from_riley(pair: &RileyPair) -> SymLaurent {
    let f = pair.f.convert(Var::LTilde);
    SymLaurent::new(at_lambda_zero(&f.poly)).normalized()
}

/// Exponents hat(k) = -sigma + eps_k + 2 sum_{i<k} eps_i for k = 1..alpha-1.
pub fn hat_exponents(eps: &EpsilonSeq) -> Vec<i64> {
    let sigma = eps.sigma();
    let mut acc = 0;
    let mut out = Vec::with_capacity(eps.len());
    for k in 1..=eps.len() {
        out.push(-sigma + eps.eps(k) + 2 * acc);
        acc += eps.eps(k);
    }
    out
}

/// M^sigma - z sum_{k odd} eps_k M^{hat(k)}.
pub fn alexander_sigma(eps: &EpsilonSeq) -> SymLaurent {
    let hats = hat_exponents(eps);
    let mut s = LaurentInt::zero();
    for k in (1..=eps.len()).step_by(2) {
        s.add_assign_ref(&LaurentInt::monomial(BigInt::from(eps.eps(k)), hats[k - 1]));
    }
    SymLaurent::new(u_pow(eps.sigma()).sub_ref(&LaurentInt::z().mul_ref(&s))).normalized()
}

/// t^{-sigma/2} sum_{k=0}^{alpha-1} (-1)^k t^{eps_1 + ... + eps_k}.
pub fn alexander_minkus(eps: &EpsilonSeq) -> SymLaurent {
    let mut s = LaurentInt::zero();
    let mut partial = 0;
    for k in 0..eps.alpha() {
        if k > 0 {
            partial += eps.eps(k);
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        s.add_assign_ref(&LaurentInt::monomial(BigInt::from(sign), 2 * partial));
    }
    SymLaurent::new(s.shift(-eps.sigma())).normalized()
}

/// Initial values g_0 = a, g_1 = b of g_{k+1} = x g_k - g_{k-1}, evaluated at index n.
#[derive(Clone, Debug, PartialEq)]
pub struct ChebSpec {
    pub init_a: LaurentInt,
    pub init_b: LaurentInt,
    pub n: usize,
}

impl ChebSpec {
    /// s_n = Ch_n(0, 1).
    pub fn s(n: usize) -> Self {
        ChebSpec { init_a: int(0), init_b: int(1), n }
    }

    /// t_n = Ch_n(2, x).
    pub fn t(n: usize, x: &LaurentInt) -> Self {
        ChebSpec { init_a: int(2), init_b: x.clone(), n }
    }

    /// v_n = Ch_n(1, x - 1).
    pub fn v(n: usize, x: &LaurentInt) -> Self {
        ChebSpec { init_a: int(1), init_b: x.sub_ref(&int(1)), n }
    }
}

pub fn chebyshev_eval(spec: &ChebSpec, x: &LaurentInt) -> LaurentInt {
    let (mut prev, mut cur) = (spec.init_a.clone(), spec.init_b.clone());
    if spec.n == 0 {
        return prev;
    }
    for _ in 1..spec.n {
        let next = x.mul_ref(&cur).sub_ref(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// t + t^-1 in u.
fn t_plus_inv() -> LaurentInt {
    u_pow(2).add_ref(&u_pow(-2))
}

/// t^m + t^-m as the Chebyshev value t_{|m|}(t + t^-1).
fn cheb_t_power(m: i64) -> LaurentInt {
    let x = t_plus_inv();
    chebyshev_eval(&ChebSpec::t(m.unsigned_abs() as usize, &x), &x)
}

/// Delta_n = (-1)^n + sum_{i=1}^n (-1)^{n-i} (t^{beta_i} + t^{-beta_i}).
pub fn alexander_chebyshev(h: &HalfSeq) -> SymLaurent {
    let n = h.n();
    let sign = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    let mut s = int(sign(n));
    for (i, b) in h.beta_seq().into_iter().enumerate() {
        let term = cheb_t_power(b);
        if sign(n - i - 1) > 0 {
            s.add_assign_ref(&term);
        } else {
            s.sub_assign_ref(&term);
        }
    }
    SymLaurent::new(s).normalized()
}

/// nu_k = 1 + sum_{i=1}^{alpha-1} eps_{k+i} for k = 1..alpha-1, with eps_0 = 1 and
/// eps_{alpha+i} = -eps_i.
pub fn fukuhara_nu(eps: &EpsilonSeq) -> Vec<i64> {
    let alpha = eps.alpha();
    let ext = |j: usize| -> i64 {
        let base = |j: usize| if j == 0 { 1 } else { eps.eps(j) };
        if j < alpha {
            base(j)
        } else {
            -base(j - alpha)
        }
    };
    (1..alpha).map(|k| 1 + (1..alpha).map(|i| ext(k + i)).sum::<i64>()).collect()
}

/// 4 Delta = 2(t^{-sigma/2} + t^{sigma/2}) - (t^{-1/2} - t^{1/2}) sum_k (-1)^k eps_k (t^{-nu_k/2} - t^{nu_k/2}),
/// accumulated over the integers and then divided by 4.
pub fn alexander_fukuhara(eps: &EpsilonSeq) -> Result<SymLaurent, RileyError> {
    let sigma = eps.sigma();
    let mut sum = LaurentInt::zero();
    for (k, nu) in (1..).zip(fukuhara_nu(eps)) {
        let sign = if k % 2 == 0 { 1 } else { -1 } * eps.eps(k);
        let term = u_pow(-nu).sub_ref(&u_pow(nu));
        sum.add_assign_ref(&term.scale(&BigInt::from(sign)));
    }
    let four = u_pow(-sigma)
        .add_ref(&u_pow(sigma))
        .scale(&BigInt::from(2))
        .sub_ref(&u_pow(-1).sub_ref(&u_pow(1)).mul_ref(&sum));
    let four_big = BigInt::from(4);
    let mut c = Vec::with_capacity(four.coeffs().len());
    for (e, a) in four.terms() {
        let (q, r) = a.div_rem(&four_big);
        if !r.is_zero() {
            return Err(RileyError::NonIntegral(format!("coefficient {a} of u^{e} in 4*Delta for {eps}")));
        }
        c.push((e, q));
    }
    let mut out = LaurentInt::zero();
    for (e, q) in c {
        out.add_assign_ref(&LaurentInt::monomial(q, e));
    }
    Ok(SymLaurent::new(out).normalized())
}

#[derive(Clone, Debug, Serialize)]
pub struct QCheck {
    pub n: usize,
    pub name: String,
    pub passed: bool,
}

/// Prefix checks for Q_n = Delta_n + Delta_{n-1}.
#[derive(Clone, Debug, Serialize)]
pub struct QReport {
    pub half: Vec<i8>,
    pub checks: Vec<QCheck>,
}

impl QReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Delta_k from the Riley history, for every prefix k = 0..=n, without renormalizing.
pub fn prefix_alexanders(h: &HalfSeq) -> Vec<LaurentInt> {
    let pair = crate::rileycore::riley_recursive_half(h);
    (0..=h.n()).map(|k| at_lambda_zero(pair.f_k(k))).collect()
}

/// Verifies, for every prefix of h, that Delta_k(1) = 1, that
/// Q_k = alpha_k Q_{k-1} - delta_k Q_{k-2} with alpha_k = (delta_k + 1)/2 (t + t^-1) and Q_0 = 2,
/// and that Q_k = t^{beta_k} + t^{-beta_k}.
pub fn q_recursion_check(h: &HalfSeq) -> QReport {
    let d = prefix_alexanders(h);
    let delta = h.delta();
    let beta = h.beta_seq();
    let mut q = vec![int(2)];
    q.extend((1..d.len()).map(|k| d[k].add_ref(&d[k - 1])));
    let mut checks = Vec::new();
    for k in 0..d.len() {
        checks.push(QCheck {
            n: k,
            name: "Delta_n(1) = 1 and Delta_n palindromic".into(),
            passed: SymLaurent::new(d[k].clone()).at_one().is_one() && d[k].is_symmetric(),
        });
    }
    for k in 1..d.len() {
        let b = beta[k - 1];
        let closed = u_pow(2 * b).add_ref(&u_pow(-2 * b));
        checks.push(QCheck { n: k, name: "Q_n = t^beta_n + t^-beta_n".into(), passed: q[k] == closed });
        checks.push(QCheck {
            n: k,
            name: "Q_n = t_{beta_n}(t + t^-1)".into(),
            passed: q[k] == cheb_t_power(b),
        });
        if k >= 2 {
            let dk = delta[k - 1];
            let alpha_k = t_plus_inv().scale(&BigInt::from((dk + 1) / 2));
            let rhs = alpha_k.mul_ref(&q[k - 1]).sub_ref(&q[k - 2].scale(&BigInt::from(dk)));
            checks.push(QCheck { n: k, name: "Q_n = alpha_n Q_{n-1} - delta_n Q_{n-2}".into(), passed: q[k] == rhs });
        }
    }
    QReport { half: h.0.clone(), checks }
}
