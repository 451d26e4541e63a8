use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;
use std::ops::Neg;

/// Commutative ring with by-reference arithmetic, so big-integer coefficients
/// are not cloned on every operation.
pub trait Ring: Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Send + Sync {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn from_i64(v: i64) -> Self;

    fn add_assign_ref(&mut self, o: &Self) {
        *self = self.add_ref(o);
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self = self.sub_ref(o);
    }
    /// `self += a * b`
    fn fma_ref(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }

    /// Coefficient product of two nonempty dense vectors.
    fn mul_coeffs(a: &[Self], b: &[Self]) -> Vec<Self> {
        schoolbook(a, b)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

fn schoolbook<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let mut c = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            c[i + j].fma_ref(x, y);
        }
    }
    c
}

/// Integral domain with exact division: `a.div_exact(b)` is `Some(q)` iff `a = q b`.
pub trait ExactDiv: Ring {
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

/// Domain with a gcd. `gcd` results are sign-normalized (see `is_negative_normal`).
pub trait GcdRing: ExactDiv {
    fn gcd(&self, o: &Self) -> Self;
    /// True when the canonical leading coefficient is negative.
    fn is_negative_normal(&self) -> bool;

    fn normalized(&self) -> Self {
        if self.is_negative_normal() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Ring for BigInt {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn fma_ref(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += a * b;
    }
    fn mul_coeffs(a: &[Self], b: &[Self]) -> Vec<Self> {
        if a.len().min(b.len()) < super::kron::KRONECKER_MIN_LEN {
            return schoolbook(a, b);
        }
        super::kron::mul_kronecker(a, b)
    }
    fn pow(&self, e: u32) -> Self {
        num_traits::Pow::pow(self, e)
    }
}

impl ExactDiv for BigInt {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return if self.is_zero() { Some(BigInt::zero()) } else { None };
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl GcdRing for BigInt {
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn is_negative_normal(&self) -> bool {
        self.is_negative()
    }
}

impl Ring for i64 {
    fn add_ref(&self, o: &Self) -> Self {
        self.checked_add(*o).expect("i64 overflow")
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.checked_sub(*o).expect("i64 overflow")
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.checked_mul(*o).expect("i64 overflow")
    }
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl ExactDiv for i64 {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if *d == 0 {
            return (*self == 0).then_some(0);
        }
        (self % d == 0).then(|| self / d)
    }
}

impl GcdRing for i64 {
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn is_negative_normal(&self) -> bool {
        *self < 0
    }
}

impl Ring for f64 {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Ring for Complex64 {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
}

/// Lossy conversion used when specializing exact data to floating point.
pub trait ToComplex {
    fn to_c64(&self) -> Complex64;
}

impl ToComplex for BigInt {
    fn to_c64(&self) -> Complex64 {
        use num_traits::ToPrimitive;
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl ToComplex for i64 {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(*self as f64, 0.0)
    }
}
