//! Compensated (double-double) complex arithmetic from error-free transforms, used to
//! evaluate the Riley polynomials accurately enough to polish clustered roots.

use crate::exactalg::Laurent;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{FromPrimitive, ToPrimitive};

type C = Complex64;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Nearest double-double to an integer, exact below 2^106.
    pub fn from_bigint(x: &BigInt) -> Self {
        let hi = x.to_f64().unwrap_or(f64::INFINITY);
        if !hi.is_finite() {
            return Dd::from_f64(hi);
        }
        let rest = x - BigInt::from_f64(hi).expect("finite");
        Dd::from_f64(hi).add(Dd::from_f64(rest.to_f64().unwrap_or(0.0)))
    }

    pub fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub fn from_c(z: C) -> Self {
        Cdd { re: Dd::from_f64(z.re), im: Dd::from_f64(z.im) }
    }

    pub fn from_dd(x: Dd) -> Self {
        Cdd { re: x, im: Dd::default() }
    }

    pub fn add(self, o: Cdd) -> Cdd {
        Cdd { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    pub fn sub(self, o: Cdd) -> Cdd {
        Cdd { re: self.re.sub(o.re), im: self.im.sub(o.im) }
    }

    pub fn mul(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    pub fn to_c(self) -> C {
        C::new(self.re.to_f64(), self.im.to_f64())
    }

    /// 1 / z from the double reciprocal and one Newton step u + u (1 - z u).
    pub fn inv(self) -> Cdd {
        let u = Cdd::from_c(self.to_c().inv());
        let one = Cdd::from_dd(Dd::from_f64(1.0));
        u.add(u.mul(one.sub(self.mul(u))))
    }
}

/// Powers m^lo, ..., m^hi of a nonzero m.
fn powers(m: Cdd, lo: i64, hi: i64) -> Vec<Cdd> {
    let one = Cdd::from_dd(Dd::from_f64(1.0));
    let step = |b: Cdd, e: u64| (0..e).fold(one, |acc, _| acc.mul(b));
    let mut p = if lo >= 0 { step(m, lo as u64) } else { step(m.inv(), lo.unsigned_abs()) };
    let mut out = Vec::with_capacity((hi - lo + 1).max(0) as usize);
    for _ in lo..=hi {
        out.push(p);
        p = p.mul(m);
    }
    out
}

/// Value of an integer Laurent polynomial at m.
pub fn laurent_at(p: &Laurent<BigInt>, m: Cdd) -> Cdd {
    let Some(lo) = p.min_exp() else {
        return Cdd::default();
    };
    let hi = lo + p.coeffs().len() as i64 - 1;
    let pw = powers(m, lo, hi);
    p.coeffs()
        .iter()
        .zip(pw)
        .fold(Cdd::default(), |acc, (c, w)| acc.add(w.mul(Cdd::from_dd(Dd::from_bigint(c)))))
}

pub fn horner(c: &[Cdd], x: Cdd) -> Cdd {
    c.iter().rev().fold(Cdd::default(), |acc, &a| acc.mul(x).add(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_lost_bits() {
        // (1 + 2^-60) - 1 vanishes in double but not here
        let x = Dd::from_f64(1.0).add(Dd::from_f64(2f64.powi(-60)));
        assert_eq!(x.sub(Dd::from_f64(1.0)).to_f64(), 2f64.powi(-60));
        let big = BigInt::from(2).pow(80) + 1;
        let d = Dd::from_bigint(&big).sub(Dd::from_f64(2f64.powi(80)));
        assert_eq!(d.to_f64(), 1.0);
    }

    #[test]
    fn complex_inverse() {
        let z = Cdd::from_c(C::new(0.3, -1.7));
        let e = z.mul(z.inv()).sub(Cdd::from_dd(Dd::from_f64(1.0)));
        assert!(e.to_c().norm() < 1e-30);
    }
}
