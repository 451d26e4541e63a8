use super::resultant::*;
use super::*;
use crate::error::RileyError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

type L = Laurent<BigInt>;

fn lau(lo: i64, c: &[i64]) -> L {
    Laurent::new(lo, c.iter().map(|&v| BigInt::from(v)).collect())
}

fn zp(c: &[i64]) -> Poly<BigInt> {
    Poly::new(c.iter().map(|&v| BigInt::from(v)).collect())
}

fn bv(terms: &[(usize, usize, i64)]) -> Bivar {
    Bivar::from_terms(terms.iter().map(|&(l, m, c)| (l, m, BigInt::from(c))))
}

#[test]
fn laurent_products() {
    let z = L::z();
    assert_eq!(z.mul_ref(&z), lau(-2, &[1, 0, -2, 0, 1]));
    assert!(L::zero().mul_ref(&L::m_pow(3)).is_zero());
    assert_eq!(L::zero().min_exp(), None);
    assert_eq!(L::zero().lo(), 0);
    assert_eq!(L::m_plus_inv().mul_ref(&z), lau(-2, &[-1, 0, 0, 0, 1]));
}

#[test]
fn laurent_bar_examples() {
    assert_eq!(lau(0, &[3, 0, 1]).bar(), lau(-2, &[1, 0, 3]));
    assert_eq!(L::z().bar(), -L::z());
    assert!(L::zero().bar().is_zero());
}

#[test]
fn lampoly_examples() {
    let one = Poly::constant(L::one());
    let f1 = LamPoly::new(Var::LTilde, one.add_ref(&Poly::x()));
    assert_eq!(f1.checked_mul(&f1).unwrap().poly, Poly::new(vec![lau(0, &[1]), lau(0, &[2]), lau(0, &[1])]));
    let f2 = Poly::new(vec![lau(0, &[1]), lau(0, &[3]), lau(0, &[1])]);
    assert_eq!(f2.eval(&L::zero()), L::one());
    assert_eq!(L::z().mul_ref(&L::m_pow(-1)), lau(-2, &[-1, 0, 1]));
    let other = LamPoly::new(Var::Lambda, one);
    assert_eq!(f1.checked_add(&other).unwrap_err(), RileyError::TagMismatch("Ltilde", "lambda"));
}

#[test]
fn substitute_examples() {
    let z2 = L::z().mul_ref(&L::z());
    let one = Poly::constant(L::one());
    let f1 = LamPoly::new(Var::LTilde, one.add_ref(&Poly::x()));
    let want = Poly::new(vec![L::one().add_ref(&z2), L::one()]);
    assert_eq!(f1.convert(Var::Lambda).poly, want);
    let sq = LamPoly::new(Var::LTilde, Poly::monomial(L::one(), 2));
    let two = BigInt::from(2);
    let want = Poly::new(vec![z2.mul_ref(&z2), z2.scale(&two), L::one()]);
    assert_eq!(sq.convert(Var::Lambda).poly, want);
}

#[test]
fn resultant_examples() {
    // Res(x - a, x - b) = a - b
    let (a, b) = (lau(1, &[2]), lau(-1, &[5]));
    let p = Poly::new(vec![-a.clone(), L::one()]);
    let q = Poly::new(vec![-b.clone(), L::one()]);
    assert_eq!(resultant_prs(&p, &q), a.sub_ref(&b));
    assert_eq!(resultant_sylvester(&p, &q), a.sub_ref(&b));
    let p = zp(&[3, -1, 2, 1]);
    assert!(resultant_prs(&p, &p).is_zero());
}

#[test]
fn content_and_units_examples() {
    let r = bv(&[(2, 4, -6), (1, 2, 6)]);
    let (n, u) = r.content_and_units();
    assert_eq!(n, bv(&[(1, 2, 1), (0, 0, -1)]));
    assert_eq!((u.content, u.l_shift, u.m_shift), (BigInt::from(-6), 1, 2));
    let (n, u) = bv(&[(0, 0, 1)]).content_and_units();
    assert_eq!(n, bv(&[(0, 0, 1)]));
    assert_eq!((u.content, u.l_shift, u.m_shift), (BigInt::one(), 0, 0));
}

#[test]
fn squarefree_examples() {
    let lin = bv(&[(1, 1, 1), (0, 0, -1)]);
    let (s, m) = lin.mul(&lin).squarefree_part();
    assert_eq!(s.normalized(), lin);
    assert_eq!(m.factors, vec![(lin.clone(), 2)]);
    let (s, m) = lin.squarefree_part();
    assert_eq!(s.normalized(), lin);
    assert!(m.factors.is_empty());
}

#[test]
fn json_round_trip() {
    let a = bv(&[(2, 4, 1), (1, 0, -1), (0, 4, 1)]);
    let j = a.to_json();
    assert_eq!(j.var, "L");
    assert_eq!(j.terms[0].coeff, "1");
    assert_eq!((j.terms[0].l, j.terms[0].m), (0, 4));
    let s = serde_json::to_string(&j).unwrap();
    assert_eq!(Bivar::from_json(&serde_json::from_str(&s).unwrap()).unwrap(), a);
    let p = LamPoly::new(Var::LTilde, Poly::new(vec![lau(-3, &[7, 0, -1]), lau(0, &[1])]));
    assert_eq!(LamPoly::from_json(&p.to_json()).unwrap(), p);
    let mut bad = p.to_json();
    bad.var = "x".into();
    assert_eq!(LamPoly::<BigInt>::from_json(&bad).unwrap_err().code(), "PARSE");
}

fn brute_min(cost: &[Vec<Option<i64>>]) -> Option<i64> {
    fn go(r: usize, used: &mut Vec<bool>, cost: &[Vec<Option<i64>>]) -> Option<i64> {
        if r == cost.len() {
            return Some(0);
        }
        let mut best: Option<i64> = None;
        for c in 0..cost.len() {
            if used[c] {
                continue;
            }
            if let Some(v) = cost[r][c] {
                used[c] = true;
                if let Some(rest) = go(r + 1, used, cost) {
                    best = Some(best.map_or(v + rest, |b| b.min(v + rest)));
                }
                used[c] = false;
            }
        }
        best
    }
    go(0, &mut vec![false; cost.len()], cost)
}

#[test]
fn min_assignment_examples() {
    let c = vec![vec![Some(4), Some(1), Some(3)], vec![Some(2), Some(0), Some(5)], vec![Some(3), Some(2), Some(2)]];
    assert_eq!(min_assignment(&c), Some(5));
    let c = vec![vec![None, Some(1)], vec![None, Some(2)]];
    assert_eq!(min_assignment(&c), None);
}

fn arb_laurent() -> impl Strategy<Value = L> {
    (-3i64..3, prop::collection::vec(-4i64..5, 0..4)).prop_map(|(lo, c)| lau(lo, &c))
}

fn arb_zpoly(max_deg: usize) -> impl Strategy<Value = Poly<BigInt>> {
    prop::collection::vec(-5i64..6, 1..max_deg + 2).prop_map(|c| zp(&c))
}

/// Small trivariate inputs: outer degree 1..=3, coefficients in Z[L, M] of degree <= 2 each.
fn arb_tri() -> impl Strategy<Value = TriPoly> {
    prop::collection::vec(prop::collection::vec(arb_zpoly(2), 1..3), 2..5)
        .prop_map(|c| Poly::new(c.into_iter().map(Poly::new).collect()))
}

fn eval_tri(t: &TriPoly, l: &BigInt, m: &BigInt) -> Poly<BigInt> {
    Poly::new(t.coeffs().iter().map(|c| c.eval_with(l, |row| row.eval(m))).collect())
}

proptest! {
    #[test]
    fn ring_laws(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.add_ref(&b).sub_ref(&b), a.clone());
        let p = Poly::new(vec![a.clone(), b.clone()]);
        let q = Poly::new(vec![c.clone(), a.clone(), b.clone()]);
        let r = Poly::new(vec![b.clone(), c.clone()]);
        prop_assert_eq!(p.mul_ref(&q).mul_ref(&r), p.mul_ref(&q.mul_ref(&r)));
        prop_assert_eq!(p.mul_ref(&q.add_ref(&r)), p.mul_ref(&q).add_ref(&p.mul_ref(&r)));
    }

    #[test]
    fn bar_involution(a in arb_laurent(), b in arb_laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(a.mul_ref(&b).bar(), a.bar().mul_ref(&b.bar()));
    }

    #[test]
    fn substitution_round_trip(c in prop::collection::vec(arb_laurent(), 0..4)) {
        let p = LamPoly::new(Var::LTilde, Poly::new(c));
        prop_assert_eq!(p.convert(Var::Lambda).convert(Var::LTilde), p);
    }

    #[test]
    fn prs_matches_sylvester(p in arb_zpoly(4), q in arb_zpoly(4)) {
        let r = resultant_prs(&p, &q);
        prop_assert_eq!(&r, &resultant_sylvester(&p, &q));
        let (dp, dq) = (p.deg().max(0), q.deg().max(0));
        let sign = if dp * dq % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        prop_assert_eq!(resultant_prs(&q, &p), r * sign);
    }

    #[test]
    fn laurent_prs_matches_sylvester(p in prop::collection::vec(arb_laurent(), 1..4), q in prop::collection::vec(arb_laurent(), 1..4)) {
        let (p, q) = (Poly::new(p), Poly::new(q));
        prop_assert_eq!(resultant_prs(&p, &q), resultant_sylvester(&p, &q));
    }

    #[test]
    fn trivariate_strategies_agree(a in arb_tri(), b in arb_tri()) {
        let syl = Bivar::new(resultant_sylvester(&a, &b));
        prop_assert_eq!(&resultant_prs_tri(&a, &b), &syl);
        prop_assert_eq!(&resultant_evalinterp(&a, &b), &syl);
    }

    #[test]
    fn strided_inputs_agree(a in arb_tri(), b in arb_tri(), d in 2usize..4) {
        let spread = |t: &TriPoly| t.map(|c| c.map(|r| {
            let mut v = vec![BigInt::zero(); r.coeffs().len() * d];
            for (e, x) in r.coeffs().iter().enumerate() {
                v[e * d] = x.clone();
            }
            Poly::new(v)
        }));
        let (a, b) = (spread(&a), spread(&b));
        prop_assert_eq!(m_stride(&a, &b) % d, 0);
        let syl = Bivar::new(resultant_sylvester(&a, &b));
        prop_assert_eq!(&resultant_evalinterp(&a, &b), &syl);
        prop_assert_eq!(&resultant_prs_tri(&a, &b), &syl);
    }

    #[test]
    fn evaluation_homomorphism(a in arb_tri(), b in arb_tri(), l0 in -3i64..4, m0 in 1i64..4) {
        let (l0, m0) = (BigInt::from(l0), BigInt::from(m0));
        let (ea, eb) = (eval_tri(&a, &l0, &m0), eval_tri(&b, &l0, &m0));
        prop_assume!(ea.deg() == a.deg() && eb.deg() == b.deg());
        let r = resultant_prs_tri(&a, &b);
        prop_assert_eq!(r.eval(&l0, &m0), resultant_sylvester(&ea, &eb));
    }

    #[test]
    fn min_assignment_matches_brute_force(c in prop::collection::vec(prop::collection::vec(prop::option::weighted(0.8, -5i64..9), 4), 4)) {
        prop_assert_eq!(min_assignment(&c), brute_min(&c));
    }

    #[test]
    fn json_round_trip_random(t in prop::collection::vec((0usize..4, 0usize..6, -1000i64..1000), 0..8)) {
        let a = Bivar::from_terms(t.into_iter().map(|(l, m, c)| (l, m, BigInt::from(c) * BigInt::from(10).pow(30))));
        let s = serde_json::to_string(&a.to_json()).unwrap();
        prop_assert_eq!(Bivar::from_json(&serde_json::from_str(&s).unwrap()).unwrap(), a);
    }
}
