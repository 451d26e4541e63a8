use super::poly::Poly;
use super::ring::{ExactDiv, Ring, ToComplex};
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in M: `c[i]` multiplies `M^(lo + i)`. Trimmed at both ends;
/// the zero polynomial has `lo = 0` and no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Laurent<R> {
    lo: i64,
    c: Vec<R>,
}

impl<R: Ring> Laurent<R> {
    pub fn new(lo: i64, c: Vec<R>) -> Self {
        let mut l = Laurent { lo, c };
        l.trim();
        l
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
        let k = self.c.iter().take_while(|x| x.is_zero()).count();
        if k == self.c.len() {
            self.c.clear();
            self.lo = 0;
        } else if k > 0 {
            self.c.drain(..k);
            self.lo += k as i64;
        }
    }

    pub fn constant(a: R) -> Self {
        Self::new(0, vec![a])
    }

    pub fn monomial(a: R, e: i64) -> Self {
        Self::new(e, vec![a])
    }

    /// M^e
    pub fn m_pow(e: i64) -> Self {
        Self::monomial(R::one(), e)
    }

    /// M - M^-1
    pub fn z() -> Self {
        Self::new(-1, vec![-R::one(), R::zero(), R::one()])
    }

    /// M + M^-1
    pub fn m_plus_inv() -> Self {
        Self::new(-1, vec![R::one(), R::zero(), R::one()])
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.c.is_empty()).then_some(self.lo)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.c.is_empty()).then(|| self.lo + self.c.len() as i64 - 1)
    }

    /// Width of the exponent range, 0 for zero.
    pub fn span(&self) -> usize {
        self.c.len()
    }

    pub fn coeff(&self, e: i64) -> R {
        let i = e - self.lo;
        if i < 0 {
            return R::zero();
        }
        self.c.get(i as usize).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// (exponent, coefficient) pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> + '_ {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(move |(i, a)| (self.lo + i as i64, a))
    }

    /// M -> M^-1
    pub fn bar(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => Laurent { lo: -hi, c: self.c.iter().rev().cloned().collect() },
        }
    }

    /// Multiply by M^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { lo: self.lo + k, c: self.c.clone() }
    }

    pub fn scale(&self, a: &R) -> Self {
        Self::new(self.lo, self.c.iter().map(|x| x.mul_ref(a)).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.bar()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Laurent<S> {
        Laurent::new(self.lo, self.c.iter().map(f).collect())
    }

    /// Substitute M -> M^2.
    pub fn square_var(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![R::zero(); 2 * self.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            c[2 * i] = a.clone();
        }
        Laurent { lo: 2 * self.lo, c }
    }

    /// Substitute M^2 -> M, failing when an odd power is present.
    pub fn halve_var(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.lo.rem_euclid(2) != 0 || self.terms().any(|(e, _)| e.rem_euclid(2) != 0) {
            return None;
        }
        Some(Self::new(self.lo / 2, self.c.iter().step_by(2).cloned().collect()))
    }

    /// Polynomial in M when no negative powers occur.
    pub fn to_poly(&self) -> Option<Poly<R>> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        (self.lo >= 0).then(|| Poly::new(self.c.clone()).shift(self.lo as usize))
    }

    pub fn from_poly(p: &Poly<R>) -> Self {
        Self::new(0, p.coeffs().to_vec())
    }

    /// Exact evaluation at a unit `m` (its inverse supplied).
    pub fn eval_unit(&self, m: &R, m_inv: &R) -> R {
        let mut acc = R::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul_ref(m).add_ref(a);
        }
        let p = if self.lo >= 0 { m.pow(self.lo as u32) } else { m_inv.pow((-self.lo) as u32) };
        acc.mul_ref(&p)
    }

    pub fn eval_c64(&self, m: Complex64) -> Complex64
    where
        R: ToComplex,
    {
        let mut acc = Complex64::zero();
        for a in self.c.iter().rev() {
            acc = acc * m + a.to_c64();
        }
        acc * m.powi(self.lo as i32)
    }
}

impl<R: Ring> Zero for Laurent<R> {
    fn zero() -> Self {
        Laurent { lo: 0, c: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl<R: Ring> One for Laurent<R> {
    fn one() -> Self {
        Laurent { lo: 0, c: vec![R::one()] }
    }
}

impl<R: Ring> Ring for Laurent<R> {
    fn add_ref(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign_ref(o);
        r
    }
    fn sub_ref(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.sub_assign_ref(o);
        r
    }
    fn add_assign_ref(&mut self, o: &Self) {
        self.combine(o, |a, b| a.add_assign_ref(b));
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        self.combine(o, |a, b| a.sub_assign_ref(b));
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let c = R::mul_coeffs(&self.c, &o.c);
        Self::new(self.lo + o.lo, c)
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(R::from_i64(v))
    }
}

impl<R: Ring> Laurent<R> {
    fn combine(&mut self, o: &Self, f: impl Fn(&mut R, &R)) {
        if o.is_zero() {
            return;
        }
        if self.is_zero() {
            self.lo = o.lo;
        }
        let lo = self.lo.min(o.lo);
        let hi = self.max_exp().unwrap_or(o.lo).max(o.max_exp().unwrap());
        if lo < self.lo {
            let pad = (self.lo - lo) as usize;
            let mut c = vec![R::zero(); pad];
            c.append(&mut self.c);
            self.c = c;
            self.lo = lo;
        }
        self.c.resize((hi - lo + 1) as usize, R::zero());
        let off = (o.lo - lo) as usize;
        for (i, b) in o.c.iter().enumerate() {
            f(&mut self.c[off + i], b);
        }
        self.trim();
    }
}

impl<R: ExactDiv> ExactDiv for Laurent<R> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return self.is_zero().then(Self::zero);
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let a = Poly::new(self.c.clone());
        let b = Poly::new(d.c.clone());
        let q = a.div_exact(&b)?;
        Some(Self::new(self.lo - d.lo, q.into_coeffs()))
    }
}

impl<R: Ring> Add for Laurent<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}

impl<R: Ring> Sub for Laurent<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
}

impl<R: Ring> Mul for Laurent<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<R: Ring> Neg for Laurent<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent { lo: self.lo, c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl<R: Ring> Add for &Laurent<R> {
    type Output = Laurent<R>;
    fn add(self, o: Self) -> Laurent<R> {
        self.add_ref(o)
    }
}

impl<R: Ring> Sub for &Laurent<R> {
    type Output = Laurent<R>;
    fn sub(self, o: Self) -> Laurent<R> {
        self.sub_ref(o)
    }
}

impl<R: Ring> Mul for &Laurent<R> {
    type Output = Laurent<R>;
    fn mul(self, o: Self) -> Laurent<R> {
        self.mul_ref(o)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Laurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms().map(|(e, a)| (a.to_string(), monomial("M", e))))
    }
}

pub(crate) fn monomial(v: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    }
}

/// Writes `sum coeff*mono` with sign handling; coefficients arrive as decimal strings.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, m) in terms {
        let (neg, mag) = match c.strip_prefix('-') {
            Some(s) => (true, s.to_string()),
            None => (false, c),
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match (mag.as_str(), m.is_empty()) {
            (_, true) => write!(f, "{mag}")?,
            ("1", false) => write!(f, "{m}")?,
            (_, false) => write!(f, "{mag}*{m}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
