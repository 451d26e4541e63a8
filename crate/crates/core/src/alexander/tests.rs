use super::*;
use crate::knotspec::census;
use crate::rileycore::{riley_recursive, riley_recursive_half};
use proptest::prelude::*;

fn t_poly(lo: i64, c: &[i64]) -> SymLaurent {
    SymLaurent::from_t(&LaurentInt::new(lo, c.iter().map(|&v| BigInt::from(v)).collect()))
}

fn eps(s: &str) -> EpsilonSeq {
    EpsilonSeq::parse(s).unwrap()
}

/// All symmetric sequences of length 2n.
fn all_eps(n: usize) -> Vec<EpsilonSeq> {
    (0..1u32 << n)
        .map(|m| HalfSeq((0..n).map(|i| if m >> i & 1 == 1 { -1 } else { 1 }).collect()).full())
        .collect()
}

#[test]
fn trefoil_and_figure_eight() {
    let tre = t_poly(-1, &[1, -1, 1]);
    let fig = t_poly(-1, &[-1, 3, -1]);
    for (s, want) in [("++", &tre), ("+--+", &fig)] {
        let e = eps(s);
        assert_eq!(&alexander_from_riley(&riley_recursive(&e)), want, "{s}");
        assert_eq!(&alexander_sigma(&e), want, "{s}");
        assert_eq!(&alexander_minkus(&e), want, "{s}");
        assert_eq!(&alexander_chebyshev(&e.half()), want, "{s}");
        assert_eq!(&alexander_fukuhara(&e).unwrap(), want, "{s}");
    }
    assert_eq!(tre.to_string(), "t^-1 - 1 + t");
}

#[test]
fn empty_half_sequence_is_one() {
    let p = riley_recursive_half(&HalfSeq(vec![]));
    assert_eq!(alexander_from_riley(&p), t_poly(0, &[1]));
    assert_eq!(alexander_chebyshev(&HalfSeq(vec![])), t_poly(0, &[1]));
}

#[test]
fn delta_two_same_signs() {
    // s^2 + 3s + 1 with s = t - 2 + t^-1
    let want = t_poly(-2, &[1, -1, 1, -1, 1]);
    assert_eq!(alexander_chebyshev(&HalfSeq(vec![1, 1])), want);
    assert_eq!(alexander_sigma(&eps("++++")), want);
}

#[test]
fn chebyshev_values() {
    let x = t_plus_inv();
    assert_eq!(chebyshev_eval(&ChebSpec::t(0, &x), &x), int(2));
    assert_eq!(chebyshev_eval(&ChebSpec::t(1, &x), &x), x);
    assert_eq!(chebyshev_eval(&ChebSpec::t(3, &x), &x), u_pow(6).add_ref(&u_pow(-6)));
    assert_eq!(chebyshev_eval(&ChebSpec::s(2), &x), x);
    // v_n = s_{n+1} - s_n
    for n in 0..6 {
        let v = chebyshev_eval(&ChebSpec::v(n, &x), &x);
        let s = chebyshev_eval(&ChebSpec::s(n + 1), &x).sub_ref(&chebyshev_eval(&ChebSpec::s(n), &x));
        assert_eq!(v, s, "{n}");
    }
}

#[test]
fn nu_is_minus_hat() {
    for n in 1..=6 {
        for e in all_eps(n) {
            let hats: Vec<i64> = hat_exponents(&e).into_iter().map(|h| -h).collect();
            assert_eq!(fukuhara_nu(&e), hats, "{e}");
        }
    }
}

#[test]
fn five_way_agreement_to_21() {
    for n in 1..=10 {
        for e in all_eps(n) {
            let a = alexander_from_riley(&riley_recursive(&e));
            assert!(a.is_palindromic() && a.at_one().is_one() && a.to_t().is_some(), "{e}");
            assert_eq!(alexander_sigma(&e), a, "{e}");
            assert_eq!(alexander_minkus(&e), a, "{e}");
            assert_eq!(alexander_chebyshev(&e.half()), a, "{e}");
            assert_eq!(alexander_fukuhara(&e).unwrap(), a, "{e}");
        }
    }
}

#[test]
fn riley_output_needs_no_unit() {
    for entry in census(21) {
        let e = crate::knotspec::epsilon_from_fraction(entry.fraction);
        let f = riley_recursive(&e).f.convert(Var::LTilde);
        let raw = SymLaurent::new(at_lambda_zero(&f.poly));
        assert_eq!(raw.clone().normalized(), raw, "{}", entry.fraction);
    }
}

#[test]
fn q_recursion_prefixes() {
    for n in 0..=12 {
        let h = HalfSeq((0..n).map(|i| if (i * 7 + n) % 3 == 0 { -1 } else { 1 }).collect());
        let r = q_recursion_check(&h);
        assert!(r.passed(), "{:?}", r.checks.iter().find(|c| !c.passed));
    }
    // all delta = 1 gives Q_n = t^n + t^-n
    let d = prefix_alexanders(&HalfSeq(vec![1; 5]));
    assert_eq!(d[5].add_ref(&d[4]), u_pow(10).add_ref(&u_pow(-10)));
    // delta_2 = -1 gives Q_2 = 2
    let d = prefix_alexanders(&HalfSeq(vec![1, -1]));
    assert_eq!(d[2].add_ref(&d[1]), int(2));
}

#[test]
fn normalization_removes_units() {
    let a = alexander_sigma(&eps("+--+"));
    let shifted = SymLaurent::new(-a.poly.shift(6));
    assert_eq!(shifted.normalized(), a);
}

proptest! {
    #[test]
    fn prefix_identity_random(h in prop::collection::vec(prop::sample::select(vec![1i8, -1]), 0..14)) {
        let h = HalfSeq(h);
        prop_assert!(q_recursion_check(&h).passed());
    }

    #[test]
    fn minkus_matches_sigma_random(h in prop::collection::vec(prop::sample::select(vec![1i8, -1]), 1..16)) {
        let e = HalfSeq(h).full();
        prop_assert_eq!(alexander_minkus(&e), alexander_sigma(&e));
        prop_assert_eq!(alexander_fukuhara(&e).unwrap(), alexander_sigma(&e));
    }
}
