use super::*;
use crate::knotspec::census;
use crate::Laurent;

fn bv(terms: &[(usize, usize, i64)]) -> BivarInt {
    Bivar::from_terms(terms.iter().map(|&(l, m, c)| (l, m, BigInt::from(c))))
}

fn fr(a: u64, b: u64) -> TwoBridgeFraction {
    TwoBridgeFraction::new(a, b).unwrap()
}

fn with(strategy: Strategy) -> APolyOptions {
    APolyOptions { strategy, squarefree: false }
}

#[test]
fn trefoil_pair() {
    let eps = EpsilonSeq::parse("++").unwrap();
    let lp = longitude_pair(&riley_recursive(&eps), &eps);
    assert_eq!(lp.sigma, 2);
    assert_eq!(lp.elim[1].poly, Poly::constant(Laurent::m_pow(5)));
    assert_eq!(lp.elim[0].poly, Poly::constant(Laurent::m_pow(-1)));
    // lambda~ g^2 = lambda~ M^-2 = -M^-2 mod 1 + lambda~
    let w = longitude_witness(&lp).l_value_mod_f.poly;
    assert_eq!(w, Poly::constant(Laurent::monomial(BigInt::from(-1), -6)));
}

#[test]
fn torus_knots() {
    for s in [Strategy::Sylvester, Strategy::Prs, Strategy::Evalinterp] {
        let opts = APolyOptions { strategy: s, squarefree: true };
        let t = a_polynomial(fr(3, 1), opts).unwrap();
        assert_eq!(t.normalized, bv(&[(1, 6, 1), (0, 0, 1)]));
        // both Riley roots of T(2,5) give L M^10 = -1, so the raw resultant is a square
        let t = a_polynomial(fr(5, 1), opts).unwrap();
        let lin = bv(&[(1, 10, 1), (0, 0, 1)]);
        assert_eq!(t.normalized, lin.mul(&lin));
        assert_eq!(t.squarefree, Some(lin.clone()));
        assert_eq!(t.multiplicities.factors, vec![(lin, 2)]);
    }
}

#[test]
fn figure_eight() {
    // -M^4 + L(1 - M^2 - 2M^4 - M^6 + M^8) - L^2 M^4, sign fixed by the leading L^2 M^4 term
    let want = bv(&[(0, 4, 1), (1, 0, -1), (1, 2, 1), (1, 4, 2), (1, 6, 1), (1, 8, -1), (2, 4, 1)]);
    for s in [Strategy::Sylvester, Strategy::Prs, Strategy::Evalinterp] {
        let r = a_polynomial(fr(5, 3), APolyOptions { strategy: s, squarefree: true }).unwrap();
        assert_eq!(r.normalized, want);
        assert_eq!(r.squarefree.as_ref(), Some(&want));
        assert!(r.multiplicities.factors.is_empty());
        assert!(!r.abelian_factor);
    }
}

#[test]
fn strategies_agree_small() {
    for e in census(15) {
        let eps = epsilon_from_fraction(e.fraction);
        let lp = longitude_pair(&riley_recursive(&eps), &eps);
        let oracle = eliminate(&lp, with(Strategy::Sylvester)).unwrap();
        assert_eq!(eliminate(&lp, with(Strategy::Prs)).unwrap().raw, oracle.raw, "{}", e.fraction);
        assert_eq!(eliminate(&lp, with(Strategy::Evalinterp)).unwrap().raw, oracle.raw, "{}", e.fraction);
        assert_eq!(oracle.normalized.deg_l(), Some(eps.half().n()), "{}", e.fraction);
    }
}

#[test]
fn witness_route_agrees() {
    for e in census(15) {
        let eps = epsilon_from_fraction(e.fraction);
        let lp = longitude_pair(&riley_recursive(&eps), &eps);
        let w = longitude_witness(&lp);
        assert!(w.l_value_mod_f.poly.deg() < lp.f.poly.deg());
        let opts = APolyOptions { strategy: Strategy::Evalinterp, squarefree: true };
        let a = eliminate(&lp, opts).unwrap();
        let b = eliminate_with(&lp, &witness_relation(&lp), opts).unwrap();
        assert_eq!(a.squarefree, b.squarefree, "{}", e.fraction);
        assert_eq!(a.normalized, b.normalized, "{}", e.fraction);
    }
}

#[test]
fn degenerate_witness_input() {
    let lp = LongitudePair {
        f: tp(&Poly::x()),
        elim: vec![tp(&Poly::constant(Laurent::m_pow(3)))],
        sigma: 0,
    };
    assert!(longitude_witness(&lp).l_value_mod_f.is_zero());
}

#[test]
fn degenerate_reported() {
    let x = Poly::x().add_ref(&TracePoly::one());
    let lp = LongitudePair { f: tp(&x), elim: vec![tp(&x), tp(&x)], sigma: 0 };
    let err = eliminate(&lp, with(Strategy::Prs)).unwrap_err();
    assert_eq!(err.code(), "DEGENERATE");
}

#[test]
fn mirror_relation() {
    for e in census(13) {
        let a = a_polynomial(e.fraction, APolyOptions::default()).unwrap().normalized;
        let b = a_polynomial(e.fraction.mirror(), APolyOptions::default()).unwrap().normalized;
        assert_eq!(mirror_image(&a), b, "{}", e.fraction);
        // the longitude inverse gives the same polynomial
        assert_eq!(a.reflect_l().reflect_m().normalized(), a, "{}", e.fraction);
    }
}
