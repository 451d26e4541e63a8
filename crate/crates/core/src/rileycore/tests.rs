use super::*;
use crate::knotspec::{epsilon_from_fraction, TwoBridgeFraction};

fn lt_poly(terms: &[(usize, i64, i64)]) -> TracePoly {
    let mut p = TracePoly::zero();
    for &(k, e, c) in terms {
        p.add_assign_ref(&Poly::monomial(Laurent::monomial(BigInt::from(c), e), k));
    }
    p
}

#[test]
fn small_values() {
    let eps = EpsilonSeq::parse("++").unwrap();
    let p = riley_recursive(&eps);
    assert_eq!(p.f.poly, lt_poly(&[(0, 0, 1), (1, 0, 1)]));
    assert_eq!(p.g.poly, lt_poly(&[(0, -1, 1)]));
    let eps = EpsilonSeq::parse("++++").unwrap();
    assert_eq!(riley_recursive(&eps).f.poly, lt_poly(&[(0, 0, 1), (1, 0, 3), (2, 0, 1)]));
    // (1,-1,-1,1): Lt^2 - (1 + z^2) Lt + 1 with z^2 = M^2 - 2 + M^-2
    let eps = EpsilonSeq::parse("+--+").unwrap();
    assert_eq!(
        riley_recursive(&eps).f.poly,
        lt_poly(&[(0, 0, 1), (1, 2, -1), (1, 0, 1), (1, -2, -1), (2, 0, 1)])
    );
}

#[test]
fn routes_agree_small() {
    for alpha in (3..=11u64).step_by(2) {
        for beta in 1..alpha {
            let Ok(fr) = TwoBridgeFraction::new(alpha, beta) else { continue };
            let eps = epsilon_from_fraction(fr);
            let f = riley_recursive(&eps).f;
            assert_eq!(f, riley_delta(&eps), "{fr}");
            assert_eq!(f, riley_direct(&eps), "{fr}");
            assert_eq!(f, riley_quandle(&eps), "{fr}");
        }
    }
}

#[test]
fn suite_small() {
    for s in ["++", "+--+", "++++", "-++-", "+-++-+", "++-++-++"] {
        let rep = identity_suite(&EpsilonSeq::parse(s).unwrap());
        for r in &rep.results {
            assert!(r.passed, "{s}: {} {}", r.name, r.detail);
        }
    }
}

#[test]
fn cd_small() {
    let e = [1i8, -1];
    assert_eq!(cd_enumerate(&e, CdKind::C, 1, 2), Laurent::monomial(BigInt::from(1), 1));
    assert_eq!(cd_enumerate(&e, CdKind::D, 0, 2), Laurent::m_pow(0));
    assert_eq!(cd_enumerate(&e, CdKind::DTilde, 1, 2), Laurent::monomial(BigInt::from(-1), 1));
    assert_eq!(cd_enumerate(&e, CdKind::C, -1, 2), Laurent::zero());
    assert_eq!(cd_enumerate(&e, CdKind::CTilde, 0, 0), Laurent::m_pow(0));
}

#[test]
fn suite_census_15() {
    for entry in crate::knotspec::census(15) {
        let eps = epsilon_from_fraction(entry.fraction);
        let rep = identity_suite(&eps);
        for r in &rep.results {
            assert!(r.passed, "{}: {} {}", entry.fraction, r.name, r.detail);
        }
    }
}
