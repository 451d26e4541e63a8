//! Kronecker substitution for integer coefficient vectors: pack each side into one big
//! integer at a slot width wide enough for every product coefficient, multiply once, and
//! read the balanced digits back.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};

/// Below this length the schoolbook product is faster.
pub const KRONECKER_MIN_LEN: usize = 4;

fn max_bits(v: &[BigInt]) -> u64 {
    v.iter().map(|x| x.bits()).max().unwrap_or(0)
}

/// OR the magnitude of `x` into `buf` starting at bit `at`.
fn write_bits(buf: &mut [u32], at: u64, x: &BigUint) {
    let word = (at / 32) as usize;
    let shift = (at % 32) as u32;
    for (i, d) in x.iter_u32_digits().enumerate() {
        let wide = (d as u64) << shift;
        buf[word + i] |= wide as u32;
        if shift > 0 {
            buf[word + i + 1] |= (wide >> 32) as u32;
        }
    }
}

fn pack(v: &[BigInt], slot: u64) -> BigInt {
    let words = ((slot * v.len() as u64) / 32 + 2) as usize;
    let (mut pos, mut neg) = (vec![0u32; words], vec![0u32; words]);
    for (i, x) in v.iter().enumerate() {
        let buf = if x.is_negative() { &mut neg } else { &mut pos };
        write_bits(buf, slot * i as u64, x.magnitude());
    }
    BigInt::from_biguint(Sign::Plus, BigUint::new(pos))
        - BigInt::from_biguint(Sign::Plus, BigUint::new(neg))
}

/// The `slot` bits of `digits` starting at bit `at`.
fn read_bits(digits: &[u32], at: u64, slot: u64) -> BigUint {
    let first = (at / 32) as usize;
    let shift = (at % 32) as u32;
    let n = (slot / 32 + 2) as usize;
    let word = |k: usize| digits.get(k).copied().unwrap_or(0);
    let mut out: Vec<u32> = (0..n)
        .map(|k| {
            let lo = word(first + k) as u64;
            let hi = word(first + k + 1) as u64;
            (((hi << 32) | lo) >> shift) as u32
        })
        .collect();
    let full = (slot / 32) as usize;
    let rem = (slot % 32) as u32;
    out.truncate(full + 1);
    out[full] = if rem == 0 { 0 } else { out[full] & ((1u32 << rem) - 1) };
    BigUint::new(out)
}

/// Product of two coefficient vectors, `c[k] = sum a[i] b[k - i]`.
pub fn mul_kronecker(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len() + b.len() - 1;
    let (ba, bb) = (max_bits(a), max_bits(b));
    if ba == 0 || bb == 0 {
        return vec![BigInt::zero(); n];
    }
    let terms = a.len().min(b.len()) as u64;
    // |c_k| < 2^(ba + bb + bits(terms)), one more bit for the sign of balanced digits
    let slot = ba + bb + (64 - terms.leading_zeros() as u64) + 1;
    let prod = pack(a, slot) * pack(b, slot);
    // two's complement over one spare slot so the top carry lands outside the result
    let width = slot * (n as u64 + 1);
    let twos = if prod.is_negative() {
        (BigUint::from(1u32) << width) - prod.magnitude()
    } else {
        prod.magnitude().clone()
    };
    let digits = twos.to_u32_digits();
    let half = BigUint::from(1u32) << (slot - 1);
    let base = BigInt::from(1) << slot;
    let mut carry = false;
    (0..n)
        .map(|k| {
            let mut d = read_bits(&digits, slot * k as u64, slot);
            if carry {
                d += 1u32;
            }
            carry = d >= half;
            let d = BigInt::from(d);
            if carry { d - &base } else { d }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        c
    }

    fn big() -> impl Strategy<Value = BigInt> {
        prop_oneof![
            (-3i64..4).prop_map(BigInt::from),
            any::<i64>().prop_map(BigInt::from),
            (any::<i64>(), any::<u64>(), 0u32..3)
                .prop_map(|(h, l, e)| (BigInt::from(h) << (64 * e + 64)) + l),
        ]
    }

    proptest! {
        #[test]
        fn matches_schoolbook(
            a in prop::collection::vec(big(), 1..24),
            b in prop::collection::vec(big(), 1..24),
        ) {
            prop_assert_eq!(mul_kronecker(&a, &b), schoolbook(&a, &b));
        }
    }

    #[test]
    fn extreme_cancellation() {
        let m: BigInt = (BigInt::from(1) << 200) - 1;
        let a = vec![m.clone(), -m.clone(), m.clone()];
        let b = vec![-m.clone(), -m.clone(), m.clone(), m];
        assert_eq!(mul_kronecker(&a, &b), schoolbook(&a, &b));
        let z = vec![BigInt::zero(); 3];
        assert_eq!(mul_kronecker(&z, &a), vec![BigInt::zero(); 5]);
    }
}
