use super::*;
use crate::apoly::{a_polynomial_eps, APolyOptions};
use crate::exactalg::{LamPoly, Laurent, Poly};
use crate::knotspec::{census, epsilon_from_fraction};
use num_bigint::BigInt;

fn eps(s: &str) -> EpsilonSeq {
    EpsilonSeq::parse(s).unwrap()
}

fn f_of(s: &str) -> LamPolyInt {
    riley_recursive(&eps(s)).f
}

#[test]
fn trefoil_root() {
    let m0 = C::new(1.3, 0.0);
    let roots = numeric_roots(&f_of("++"), m0).unwrap();
    assert_eq!(roots.len(), 1);
    assert!((roots[0].lam_tilde0 + 1.0).norm() < 1e-12);
    let rep = verify_representation(&eps("++"), &roots[0], 1e-9).unwrap();
    assert!(rep.relation < 1e-9);
    let lon = verify_longitude(&eps("++"), &roots[0], 1e-9).unwrap();
    // L M^6 = -1
    assert!((lon.l * m0.powi(6) + 1.0).norm() < 1e-9);
}

#[test]
fn figure_eight_roots() {
    let e = eps("+--+");
    let a = a_polynomial_eps(&e, APolyOptions::default()).unwrap().normalized;
    for m0 in [C::new(1.1, 0.0), C::from_polar(1.0, std::f64::consts::PI / 5.0)] {
        let roots = numeric_roots(&f_of("+--+"), m0).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(r.residual < 1e-10, "{r:?}");
            verify_representation(&e, r, 1e-8).unwrap();
            let lon = verify_longitude(&e, r, 1e-8).unwrap();
            assert!(apoly_residual(&a, lon.l, m0) < 1e-6);
        }
    }
}

#[test]
fn double_root() {
    let sq = LamPoly::new(Var::LTilde, Poly::monomial(Laurent::constant(BigInt::from(1)), 2));
    let roots = numeric_roots(&sq, C::new(0.5, 0.2)).unwrap();
    assert_eq!(roots.len(), 2);
    assert!(roots.iter().all(|r| r.lam_tilde0.norm() < 1e-12));
}

#[test]
fn bad_m0() {
    for m0 in [C::new(0.0, 0.0), C::new(1.0, 0.0), C::new(-1.0, 0.0)] {
        assert_eq!(numeric_roots(&f_of("++"), m0).unwrap_err().code(), "BAD_M0");
    }
}

#[test]
fn non_root_fails() {
    let root = NumericRoot { m0: C::new(1.2, 0.3), lam_tilde0: C::new(0.7, -0.4), residual: 0.0 };
    let err = verify_representation(&eps("+--+"), &root, 1e-8).unwrap_err();
    assert_eq!(err.code(), "RELATION_FAILED");
}

#[test]
fn non_root_fails_longitude() {
    // a lambda~ off the Riley curve gives an L that disagrees with -g / (gbar M^{2 sigma})
    let m0 = C::new(1.2, 0.3);
    let z = m0 - m0.inv();
    let root = NumericRoot { m0, lam_tilde0: z * z + 0.5, residual: 0.0 };
    assert_eq!(verify_longitude(&eps("+--+"), &root, 1e-8).unwrap_err().code(), "LONGITUDE_MISMATCH");
}

#[test]
fn census_small_passes() {
    for entry in census(13) {
        let e = epsilon_from_fraction(entry.fraction);
        let a = a_polynomial_eps(&e, APolyOptions::default()).unwrap().normalized;
        let rep = verify_knot(&e, Some(&a), 3, 7, Tolerances::default()).unwrap();
        assert!(rep.passed, "{}: {:?}", entry.fraction, rep.samples.iter().find(|s| !s.representation.passed || !s.longitude.passed));
    }
}

#[test]
fn clustered_roots_are_polished() {
    // near M0 = 1 the roots of f for (25, 3) cluster around 2 sqrt 3; unpolished eigenvalues
    // are off by about 1e-9 there and the relation check fails
    let e = epsilon_from_fraction(crate::knotspec::TwoBridgeFraction::new(25, 3).unwrap());
    let rep = verify_knot(&e, None, 5, 20240601, Tolerances::default()).unwrap();
    assert!(rep.passed);
    assert!(rep.samples.iter().all(|s| s.representation.relation < 1e-12));
}
