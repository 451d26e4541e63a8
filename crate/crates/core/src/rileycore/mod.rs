//! Riley polynomial f and companion g of a two-bridge knot group, by four independent routes,
//! plus the matrix W and the c/d coefficient families.

mod cd;
mod identities;

pub use cd::{cd_enumerate, cd_family, CdKind};
pub use identities::{identity_suite, IdentityReport, IdentityResult};

use crate::exactalg::{Laurent, LamPoly, Mat2, Poly, Ring, Var};
use crate::knotspec::{EpsilonSeq, HalfSeq};
use crate::{LaurentInt, TracePoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub(crate) fn lc(l: LaurentInt) -> TracePoly {
    Poly::constant(l)
}

pub(crate) fn mono(e: i64) -> TracePoly {
    lc(Laurent::m_pow(e))
}

pub(crate) fn int(v: i64) -> TracePoly {
    lc(Laurent::constant(BigInt::from(v)))
}

/// The trace variable itself.
pub(crate) fn var() -> TracePoly {
    Poly::x()
}

pub(crate) fn z() -> TracePoly {
    lc(Laurent::z())
}

pub(crate) fn bar(p: &TracePoly) -> TracePoly {
    p.map(|c| c.bar())
}

/// f_k and g_k for k = 0..=n, in lambda~.
#[derive(Clone, Debug, PartialEq)]
pub struct RileyPair {
    pub f: LamPoly,
    pub g: LamPoly,
    pub history: Vec<(TracePoly, TracePoly)>,
}

impl RileyPair {
    pub fn f_k(&self, k: usize) -> &TracePoly {
        &self.history[k].0
    }
    pub fn g_k(&self, k: usize) -> &TracePoly {
        &self.history[k].1
    }
}

/// Two-term recursion over the half sequence:
/// f_n = M^{2e_n} f_{n-2} + (Lt + 1 - M^{2e_n}) f_{n-1} + e_n Lt (M + M^-1) gbar_{n-1},
/// g_n = e_n M^{-e_n} f_{n-1} + M^{-2e_n} gbar_{n-1}.
pub fn riley_recursive(eps: &EpsilonSeq) -> RileyPair {
    riley_recursive_half(&eps.half())
}

pub fn riley_recursive_half(h: &HalfSeq) -> RileyPair {
    let lt = var();
    let mut hist: Vec<(TracePoly, TracePoly)> = vec![(TracePoly::one(), TracePoly::zero())];
    if h.n() >= 1 {
        let e1 = h.e(1);
        hist.push((lt.add_ref(&TracePoly::one()), mono(-e1).scale(&Laurent::constant(BigInt::from(e1)))));
    }
    let mpm = lc(Laurent::m_plus_inv());
    for k in 2..=h.n() {
        let e = h.e(k);
        let (f2, _) = &hist[k - 2];
        let (f1, g1) = &hist[k - 1];
        let gb = bar(g1);
        let m2 = mono(2 * e);
        let mut f = m2.mul_ref(f2);
        f.add_assign_ref(&lt.add_ref(&TracePoly::one()).sub_ref(&m2).mul_ref(f1));
        f.add_assign_ref(&lt.mul_ref(&mpm).mul_ref(&gb).mul_ref(&int(e)));
        let mut g = mono(-e).mul_ref(f1).mul_ref(&int(e));
        g.add_assign_ref(&mono(-2 * e).mul_ref(&gb));
        hist.push((f, g));
    }
    let (f, g) = hist.last().cloned().unwrap();
    RileyPair { f: LamPoly::new(Var::LTilde, f), g: LamPoly::new(Var::LTilde, g), history: hist }
}

/// Three-term recursion in the products delta_k = e_{k-1} e_k:
/// f_n = (Lt + (delta_n - 1)/2 z^2 + delta_n)(f_{n-1} + delta_n f_{n-2}) - delta_n f_{n-3}.
/// Seeded with f_{-1} = f_0 = 1 and f_1 = 1 + Lt, so g is never consulted.
pub fn riley_delta(eps: &EpsilonSeq) -> LamPoly {
    riley_delta_half(&eps.half())
}

pub fn riley_delta_half(h: &HalfSeq) -> LamPoly {
    let n = h.n();
    // f[k + 1] holds f_k
    let mut f: Vec<TracePoly> = vec![int(1), int(1), var().add_ref(&int(1))];
    let delta = h.delta();
    let z2 = z().mul_ref(&z());
    for k in 2..=n {
        let d = delta[k - 1];
        let mut coef = var().add_ref(&int(d));
        if d == -1 {
            coef.sub_assign_ref(&z2);
        }
        let s = f[k].add_ref(&f[k - 1].mul_ref(&int(d)));
        let next = coef.mul_ref(&s).sub_ref(&f[k - 2].mul_ref(&int(d)));
        f.push(next);
    }
    LamPoly::new(Var::LTilde, f.swap_remove(n + 1))
}

/// rho(x)^e and rho(y)^e with entries in lambda.
pub fn rho_x(e: i64) -> Mat2<TracePoly> {
    Mat2::new(mono(e), int(e), TracePoly::zero(), mono(-e))
}

pub fn rho_y(e: i64) -> Mat2<TracePoly> {
    Mat2::new(mono(e), TracePoly::zero(), var().mul_ref(&int(e)), mono(-e))
}

/// W = x^{eps_1} y^{eps_2} ... y^{eps_{alpha-1}} under rho, or with x and y exchanged
/// when `star` is set. Entries are polynomials in lambda.
pub fn w_product(eps: &[i8], star: bool) -> Mat2<TracePoly> {
    let mut w = Mat2::identity();
    for (i, &e) in eps.iter().enumerate() {
        let odd = i % 2 == 0;
        let m = if odd != star { rho_x(e as i64) } else { rho_y(e as i64) };
        w = w.mul(&m);
    }
    w
}

/// W with all entries in one trace variable.
#[derive(Clone, Debug, PartialEq)]
pub struct WMatrix {
    pub var: Var,
    pub m: Mat2<TracePoly>,
}

impl WMatrix {
    pub fn entry(&self, i: usize, j: usize) -> LamPoly {
        LamPoly::new(self.var, self.m.get(i, j).clone())
    }
}

pub fn w_matrix(eps: &EpsilonSeq, var: Var) -> WMatrix {
    convert_mat(w_product(eps.as_slice(), false), var)
}

pub fn w_star(eps: &EpsilonSeq, var: Var) -> WMatrix {
    convert_mat(w_product(eps.as_slice(), true), var)
}

pub(crate) fn convert_mat(m: Mat2<TracePoly>, var: Var) -> WMatrix {
    let m = m.map(|p| LamPoly::new(Var::Lambda, p.clone()).convert(var).poly);
    WMatrix { var, m }
}

/// f = W11 - z W12, rewritten in lambda~.
pub fn riley_direct(eps: &EpsilonSeq) -> LamPoly {
    let w = w_product(eps.as_slice(), false);
    let f = w.get(1, 1).sub_ref(&z().mul_ref(w.get(1, 2)));
    LamPoly::new(Var::Lambda, f).convert(Var::LTilde)
}

/// Diagonal matrices over lambda~ in the quandle recursion.
#[derive(Clone, Debug, PartialEq)]
pub struct Diag(pub TracePoly, pub TracePoly);

impl Diag {
    fn mul(&self, o: &Diag) -> Diag {
        Diag(self.0.mul_ref(&o.0), self.1.mul_ref(&o.1))
    }
    fn sub(&self, o: &Diag) -> Diag {
        Diag(self.0.sub_ref(&o.0), self.1.sub_ref(&o.1))
    }
    fn scale(&self, s: i64) -> Diag {
        Diag(self.0.mul_ref(&int(s)), self.1.mul_ref(&int(s)))
    }
    /// diag(M, M^-1)^k
    fn e_pow(k: i64) -> Diag {
        Diag(mono(k), mono(-k))
    }
}

/// Final F and G of the quandle recursion: F = f I and G = diag(g, -Lt gbar).
#[derive(Clone, Debug, PartialEq)]
pub struct QuandleFG {
    pub f: Diag,
    pub g: Diag,
}

pub fn quandle_fg(eps: &EpsilonSeq) -> QuandleFG {
    let lt = var();
    let ab = Diag(int(-1), lt.clone()); // [a~, b~]
    let ba = Diag(lt.mul_ref(&int(-1)), int(1)); // [b~, a~]
    let mut f = Diag(int(1), int(1));
    let mut g = Diag(TracePoly::zero(), TracePoly::zero());
    for i in 1..=eps.len() {
        let e = eps.eps(i);
        if i % 2 == 1 {
            let nf = f.mul(&Diag::e_pow(-e));
            let ng = g.mul(&Diag::e_pow(e)).sub(&ab.mul(&f).scale(e));
            f = nf;
            g = ng;
        } else {
            let nf = f.mul(&Diag::e_pow(e)).sub(&ba.mul(&g).scale(e));
            let ng = g.mul(&Diag::e_pow(-e));
            f = nf;
            g = ng;
        }
    }
    QuandleFG { f, g }
}

pub fn riley_quandle(eps: &EpsilonSeq) -> LamPoly {
    LamPoly::new(Var::LTilde, quandle_fg(eps).f.0)
}

/// Rewrite a polynomial in lambda~ whose coefficients are M -> M^-1 symmetric Laurent
/// polynomials in the basis s^j, s = z^2 = M^2 - 2 + M^-2. Returns None when some
/// coefficient is not a polynomial in s.
pub fn to_s_basis(p: &TracePoly) -> Option<Vec<Vec<BigInt>>> {
    let s = Laurent::<BigInt>::z().mul_ref(&Laurent::z());
    p.coeffs()
        .iter()
        .map(|c| {
            let mut rem = c.clone();
            let top = rem.max_exp().unwrap_or(0);
            if top < 0 || top % 2 != 0 {
                return None;
            }
            let deg = (top / 2) as usize;
            let mut out = vec![BigInt::zero(); deg + 1];
            for j in (0..=deg).rev() {
                let a = rem.coeff(2 * j as i64);
                if !a.is_zero() {
                    rem.sub_assign_ref(&s.pow(j as u32).scale(&a));
                }
                out[j] = a;
            }
            rem.is_zero().then_some(out)
        })
        .collect()
}

/// Evaluate a polynomial in s (lowest first) back to a Laurent polynomial in M.
pub fn from_s_basis(c: &[Vec<BigInt>]) -> TracePoly {
    let s = Laurent::<BigInt>::z().mul_ref(&Laurent::z());
    Poly::new(
        c.iter()
            .map(|row| Poly::new(row.clone()).eval_with(&s, |a| Laurent::constant(a.clone())))
            .collect(),
    )
}

#[cfg(test)]
mod tests;
