//! Double-precision checks tying the exact outputs to explicit SL(2, C) matrices.

mod dd;
#[cfg(test)]
mod tests;

use dd::Cdd;
use crate::error::RileyError;
use crate::exactalg::Var;
use crate::knotspec::EpsilonSeq;
use crate::rileycore::riley_recursive;
use crate::{BivarInt, LamPolyInt, TracePoly};
use nalgebra::{DMatrix, Matrix2};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub type C = Complex64;
pub type ComplexMat2 = Matrix2<C>;

/// Smallest allowed distance of M0 from 0 and +-1.
pub const M0_GUARD: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NumericRoot {
    pub m0: C,
    pub lam_tilde0: C,
    /// |f(M0, root)| divided by sum_k |f_k(M0)| |root|^k.
    pub residual: f64,
}

fn check_m0(m0: C) -> Result<(), RileyError> {
    if m0.norm() < M0_GUARD || (m0 - 1.0).norm() < M0_GUARD || (m0 + 1.0).norm() < M0_GUARD {
        return Err(RileyError::BadM0(format!("M0 = {m0} is 0 or +-1")));
    }
    Ok(())
}

fn coeffs_at(p: &TracePoly, m0: C) -> Vec<C> {
    p.coeffs().iter().map(|c| c.eval_c64(m0)).collect()
}

fn horner(c: &[C], x: C) -> C {
    c.iter().rev().fold(C::new(0.0, 0.0), |acc, &a| acc * x + a)
}

const POLISH_STEPS: usize = 8;

/// All lambda~-roots of f(M0, .) from the eigenvalues of the companion matrix, each polished
/// by Newton steps.
pub fn numeric_roots(f: &LamPolyInt, m0: C) -> Result<Vec<NumericRoot>, RileyError> {
    check_m0(m0)?;
    let c = coeffs_at(&f.convert(Var::LTilde).poly, m0);
    let Some(&lc) = c.last() else {
        return Err(RileyError::BadM0("f is zero".into()));
    };
    if lc.norm() < 1e-12 {
        return Err(RileyError::BadM0(format!("leading coefficient vanishes at M0 = {m0}")));
    }
    let d = c.len() - 1;
    let roots: Vec<C> = if d == 0 {
        Vec::new()
    } else {
        let mut comp = DMatrix::<C>::zeros(d, d);
        for i in 1..d {
            comp[(i, i - 1)] = C::new(1.0, 0.0);
        }
        for i in 0..d {
            comp[(i, d - 1)] = -c[i] / lc;
        }
        // complex Schur form is upper triangular
        comp.schur().unpack().1.diagonal().iter().cloned().collect()
    };
    // f is re-evaluated in compensated arithmetic: clustered roots lose about half the
    // digits when f is evaluated in plain double
    let cd: Vec<Cdd> = f.convert(Var::LTilde).poly.coeffs().iter().map(|p| dd::laurent_at(p, Cdd::from_c(m0))).collect();
    let dc: Vec<C> = c.iter().enumerate().skip(1).map(|(k, &a)| a * k as f64).collect();
    let value = |r: C| dd::horner(&cd, Cdd::from_c(r)).to_c();
    let residual = |v: C, r: C| {
        let scale: f64 = c.iter().enumerate().map(|(k, a)| a.norm() * r.norm().powi(k as i32)).sum();
        if v.norm() == 0.0 { 0.0 } else { v.norm() / scale }
    };
    Ok(roots
        .into_iter()
        .map(|r| {
            // Newton polish; a step is kept only when it lowers the residual
            let mut v = value(r);
            let (mut r, mut res) = (r, residual(v, r));
            for _ in 0..POLISH_STEPS {
                let d = horner(&dc, r);
                if d.norm() == 0.0 || res == 0.0 {
                    break;
                }
                let next = r - v / d;
                let next_v = value(next);
                let next_res = residual(next_v, next);
                if !(next_res < res) {
                    break;
                }
                (r, v, res) = (next, next_v, next_res);
            }
            NumericRoot { m0, lam_tilde0: r, residual: res }
        })
        .collect())
}

pub fn rho_x(m: C) -> ComplexMat2 {
    Matrix2::new(m, C::new(1.0, 0.0), C::new(0.0, 0.0), m.inv())
}

pub fn rho_y(m: C, lam: C) -> ComplexMat2 {
    Matrix2::new(m, C::new(0.0, 0.0), lam, m.inv())
}

/// Inverse of a determinant-one matrix.
fn inv_sl2(a: &ComplexMat2) -> ComplexMat2 {
    Matrix2::new(a[(1, 1)], -a[(0, 1)], -a[(1, 0)], a[(0, 0)])
}

fn signed(a: &ComplexMat2, e: i8) -> ComplexMat2 {
    if e > 0 {
        *a
    } else {
        inv_sl2(a)
    }
}

/// x^{eps_1} y^{eps_2} x^{eps_3} ..., or the word with x and y exchanged.
fn word(eps: &[i8], x: &ComplexMat2, y: &ComplexMat2, star: bool) -> ComplexMat2 {
    eps.iter().enumerate().fold(ComplexMat2::identity(), |w, (i, &e)| {
        let g = if (i % 2 == 0) != star { x } else { y };
        w * signed(g, e)
    })
}

fn lambda_of(root: &NumericRoot) -> C {
    let z = root.m0 - root.m0.inv();
    root.lam_tilde0 - z * z
}

#[derive(Clone, Debug, Serialize)]
pub struct RepresentationReport {
    /// ||W x - y W|| / (||W|| ||x|| + ||y|| ||W||).
    pub relation: f64,
    /// |tr(xy) - 2 - lambda~| / (1 + |lambda~|).
    pub trace_xy: f64,
    /// |2 - tr(x y^-1) - lambda| / (1 + |lambda|).
    pub trace_xy_inv: f64,
    /// max |det - 1| over x and y.
    pub det: f64,
    pub passed: bool,
}

pub fn representation_report(eps: &EpsilonSeq, root: &NumericRoot, tol: f64) -> RepresentationReport {
    let lam = lambda_of(root);
    let (x, y) = (rho_x(root.m0), rho_y(root.m0, lam));
    let w = word(eps.as_slice(), &x, &y, false);
    let relation = (w * x - y * w).norm() / (w.norm() * (x.norm() + y.norm()));
    let trace_xy = ((x * y).trace() - 2.0 - root.lam_tilde0).norm() / (1.0 + root.lam_tilde0.norm());
    let trace_xy_inv = (2.0 - (x * inv_sl2(&y)).trace() - lam).norm() / (1.0 + lam.norm());
    let det = (x.determinant() - 1.0).norm().max((y.determinant() - 1.0).norm());
    let passed = relation <= tol && trace_xy <= tol && trace_xy_inv <= tol && det <= 1e-10;
    RepresentationReport { relation, trace_xy, trace_xy_inv, det, passed }
}

pub fn verify_representation(eps: &EpsilonSeq, root: &NumericRoot, tol: f64) -> Result<RepresentationReport, RileyError> {
    let r = representation_report(eps, root, tol);
    if r.passed {
        Ok(r)
    } else {
        Err(RileyError::RelationFailed(format!(
            "relation {:.3e}, tr(xy) {:.3e}, tr(xy^-1) {:.3e}, det {:.3e}",
            r.relation, r.trace_xy, r.trace_xy_inv, r.det
        )))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LongitudeReport {
    /// (1,1) entry of rho(gamma) = W* W x^{-2 sigma}.
    pub l: C,
    /// |(2,1) entry| / ||rho(gamma)||.
    pub lower_left: f64,
    /// |L + g / (gbar M^{2 sigma})| / max(1, |L|).
    pub via_g: f64,
    /// |L - lambda~ g^2 M^{-2 sigma}| / max(1, |L|).
    pub via_witness: f64,
    pub passed: bool,
}


pub fn longitude_report(eps: &EpsilonSeq, g: &TracePoly, root: &NumericRoot, tol: f64) -> LongitudeReport {
    let m = root.m0;
    let lam = lambda_of(root);
    let (x, y) = (rho_x(m), rho_y(m, lam));
    let w = word(eps.as_slice(), &x, &y, false);
    let ws = word(eps.as_slice(), &x, &y, true);
    let sigma = eps.sigma() as i32;
    let mut xpow = ComplexMat2::identity();
    let xs = signed(&x, if sigma > 0 { -1 } else { 1 });
    for _ in 0..2 * sigma.abs() {
        xpow *= xs;
    }
    let gamma = ws * w * xpow;
    let l = gamma[(0, 0)];
    let lower_left = gamma[(1, 0)].norm() / gamma.norm();
    let at = |mm: Cdd| {
        let c: Vec<Cdd> = g.coeffs().iter().map(|p| dd::laurent_at(p, mm)).collect();
        dd::horner(&c, Cdd::from_c(root.lam_tilde0)).to_c()
    };
    let md = Cdd::from_c(m);
    let (gv, gbv) = (at(md), at(md.inv()));
    let m2s = m.powi(2 * sigma);
    let scale = l.norm().max(1.0);
    let via_g = (l + gv / (gbv * m2s)).norm() / scale;
    let via_witness = (l - root.lam_tilde0 * gv * gv / m2s).norm() / scale;
    let passed = lower_left <= tol && via_g <= tol && via_witness <= tol;
    LongitudeReport { l, lower_left, via_g, via_witness, passed }
}

pub fn verify_longitude(eps: &EpsilonSeq, root: &NumericRoot, tol: f64) -> Result<LongitudeReport, RileyError> {
    let g = riley_recursive(eps).g.convert(Var::LTilde).poly;
    let r = longitude_report(eps, &g, root, tol);
    if r.passed {
        Ok(r)
    } else {
        Err(RileyError::LongitudeMismatch(format!(
            "lower-left {:.3e}, via g {:.3e}, via witness {:.3e}",
            r.lower_left, r.via_g, r.via_witness
        )))
    }
}

/// |A(L, M)| relative to the largest monomial magnitude.
pub fn apoly_residual(a: &BivarInt, l: C, m: C) -> f64 {
    let mut sum = C::new(0.0, 0.0);
    let mut biggest = 0.0f64;
    for (i, j, c) in a.terms() {
        let t = l.powi(i as i32) * m.powi(j as i32) * c.to_f64().unwrap_or(f64::INFINITY);
        biggest = biggest.max(t.norm());
        sum += t;
    }
    if biggest == 0.0 {
        return 0.0;
    }
    sum.norm() / biggest
}

/// M0 = r e^{i theta} with r in [0.8, 1.6], kept away from 0 and +-1.
pub fn sample_m0(rng: &mut ChaCha8Rng) -> C {
    loop {
        let r = rng.gen_range(0.8..=1.6);
        let theta = rng.gen_range(0.0..std::f64::consts::TAU);
        let m = C::from_polar(r, theta);
        if (m - 1.0).norm() > 1e-3 && (m + 1.0).norm() > 1e-3 {
            return m;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleReport {
    pub root: NumericRoot,
    pub representation: RepresentationReport,
    pub longitude: LongitudeReport,
    /// Present when an A-polynomial was supplied.
    pub apoly: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KnotReport {
    pub eps: String,
    pub samples: Vec<SampleReport>,
    pub max_root_residual: f64,
    pub passed: bool,
}

/// Tolerances for one verification run.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    pub matrix: f64,
    pub apoly: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { matrix: 1e-8, apoly: 1e-6 }
    }
}

/// Every Riley root at `samples` seeded random M0 values, each checked against the matrices
/// and, when given, against the A-polynomial.
pub fn verify_knot(
    eps: &EpsilonSeq,
    apoly: Option<&BivarInt>,
    samples: usize,
    seed: u64,
    tol: Tolerances,
) -> Result<KnotReport, RileyError> {
    let pair = riley_recursive(eps);
    let g = pair.g.convert(Var::LTilde).poly;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m0s: Vec<C> = (0..samples).map(|_| sample_m0(&mut rng)).collect();
    let per_m0: Vec<Vec<SampleReport>> = m0s
        .par_iter()
        .map(|&m0| {
            Ok(numeric_roots(&pair.f, m0)?
                .into_iter()
                .map(|root| {
                    let representation = representation_report(eps, &root, tol.matrix);
                    let longitude = longitude_report(eps, &g, &root, tol.matrix);
                    let apoly = apoly.map(|a| apoly_residual(a, longitude.l, m0));
                    SampleReport { root, representation, longitude, apoly }
                })
                .collect())
        })
        .collect::<Result<_, RileyError>>()?;
    let samples: Vec<SampleReport> = per_m0.into_iter().flatten().collect();
    let max_root_residual = samples.iter().map(|s| s.root.residual).fold(0.0, f64::max);
    let passed = samples
        .iter()
        .all(|s| s.representation.passed && s.longitude.passed && s.apoly.is_none_or(|r| r <= tol.apoly));
    Ok(KnotReport { eps: eps.to_string(), samples, max_root_residual, passed })
}
