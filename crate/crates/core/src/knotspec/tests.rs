use super::*;
use proptest::prelude::*;

// floor formula evaluated with rationals as an independent oracle
fn eps_oracle(alpha: i64, b: i64) -> Vec<i8> {
    (1..alpha)
        .map(|i| {
            let q = (i * b) as f64 / alpha as f64;
            if (q.floor() as i64).rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        })
        .collect()
}

#[test]
fn examples() {
    let e = epsilon_from_fraction(TwoBridgeFraction::new(3, 1).unwrap());
    assert_eq!(e.as_slice(), &[1, 1]);
    let e = epsilon_from_fraction(TwoBridgeFraction::new(5, 3).unwrap());
    assert_eq!(e.as_slice(), &[1, -1, -1, 1]);
    let e = epsilon_from_fraction(TwoBridgeFraction::new(7, 3).unwrap());
    assert_eq!(e.as_slice(), &eps_oracle(7, 3)[..]);
    assert_eq!(e.sigma() % 2, 0);
}

#[test]
fn validation_errors() {
    assert_eq!(EpsilonSeq::new(vec![1, -1, 1]).unwrap_err().code(), "ODD_LENGTH");
    assert_eq!(EpsilonSeq::new(vec![1, -1]).unwrap_err().code(), "NOT_SYMMETRIC");
    assert_eq!(EpsilonSeq::new(vec![1, 2, 2, 1]).unwrap_err().code(), "NON_UNIT_ENTRY");
    assert_eq!(EpsilonSeq::parse("+--+").unwrap().as_slice(), &[1, -1, -1, 1]);
    assert_eq!(EpsilonSeq::parse("+\u{2212}\u{2212}+").unwrap().to_string(), "+--+");
}

#[test]
fn half_sequence() {
    let e = EpsilonSeq::new(vec![1, -1, -1, 1]).unwrap();
    let h = e.half();
    assert_eq!(h.0, vec![-1, 1]);
    assert_eq!(h.delta(), vec![1, -1]);
    assert_eq!(h.beta_seq(), vec![1, 0]);
    assert_eq!(h.full(), e);
}

#[test]
fn normalization() {
    let r = normalize_fraction(5, 8).unwrap();
    assert_eq!((r.fraction.beta, r.orbit.clone(), r.mirror), (3, vec![2, 3], 2));
    let r = normalize_fraction(3, 1).unwrap();
    assert_eq!((r.fraction.beta, r.orbit.clone(), r.mirror), (1, vec![1], 2));
    let r = normalize_fraction(7, 10).unwrap();
    assert_eq!((r.fraction.beta, r.orbit.clone(), r.mirror), (3, vec![3, 5], 4));
    assert!(normalize_fraction(6, 1).is_err());
    assert!(normalize_fraction(9, 3).is_err());
}

#[test]
fn small_census() {
    let c = census(3);
    let fr: Vec<_> = c.iter().map(|e| (e.fraction.alpha, e.fraction.beta)).collect();
    assert_eq!(fr, vec![(3, 1), (3, 2)]);
    assert_eq!(c[0].mirror, TwoBridgeFraction::new(3, 2).unwrap());
    let c = census(5);
    let fr: Vec<_> = c.iter().map(|e| (e.fraction.alpha, e.fraction.beta)).collect();
    assert_eq!(fr, vec![(3, 1), (3, 2), (5, 1), (5, 2), (5, 4)]);
    assert!(c[3].amphichiral);
}

proptest! {
    #[test]
    fn fraction_sequences_are_valid(a in 1u64..40, b in 1u64..80) {
        let alpha = 2 * a + 1;
        prop_assume!(num_integer::Integer::gcd(&alpha, &b) == 1);
        let fr = normalize_fraction(alpha, b as i64).unwrap().fraction;
        let e = epsilon_from_fraction(fr);
        prop_assert_eq!(e.len() as u64, alpha - 1);
        prop_assert_eq!(e.sigma().rem_euclid(2), 0);
        let bb = if fr.beta % 2 == 1 { fr.beta as i64 } else { fr.beta as i64 - alpha as i64 };
        prop_assert_eq!(e.as_slice(), &eps_oracle(alpha as i64, bb)[..]);
    }

    #[test]
    fn half_roundtrip(v in proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], 1..12)) {
        let h = HalfSeq(v);
        let e = h.full();
        prop_assert_eq!(e.half(), h.clone());
        let beta = h.beta_seq();
        let mut s = 0;
        for k in 1..=h.n() {
            s += h.e(k);
            prop_assert_eq!(beta[k - 1], h.e(1) * s);
        }
    }
}
