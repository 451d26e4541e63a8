use super::ring::{ExactDiv, GcdRing, Ring};
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    c: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn constant(a: R) -> Self {
        Self::new(vec![a])
    }

    pub fn monomial(a: R, d: usize) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        let mut c = vec![R::zero(); d + 1];
        c[d] = a;
        Poly { c }
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.c
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with -1 for the zero polynomial.
    pub fn deg(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn coeff(&self, i: usize) -> R {
        self.c.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lc(&self) -> R {
        self.c.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn scale(&self, a: &R) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Self::new(self.c.iter().map(|x| x.mul_ref(a)).collect())
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![R::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.c.iter().map(f).collect())
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul_ref(x).add_ref(a);
        }
        acc
    }

    /// Horner evaluation after mapping coefficients into another ring.
    pub fn eval_with<S: Ring>(&self, x: &S, f: impl Fn(&R) -> S) -> S {
        let mut acc = S::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul_ref(x).add_ref(&f(a));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.mul_ref(&R::from_i64(i as i64)))
                .collect(),
        )
    }

    /// p(x + a), by repeated synthetic division.
    pub fn taylor_shift(&self, a: &R) -> Self {
        let mut c = self.c.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = c[j + 1].mul_ref(a);
                c[j].add_assign_ref(&t);
            }
        }
        Self::new(c)
    }

    /// Pseudo-division: lc(b)^(deg a - deg b + 1) a = q b + r.
    pub fn pseudo_divrem(&self, b: &Self) -> (Self, Self) {
        let db = b.degree().expect("pseudo-division by zero");
        let Some(da) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if da < db {
            return (Self::zero(), self.clone());
        }
        let lb = b.lc();
        let mut r = self.c.clone();
        let mut q = vec![R::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let t = r[k + db].clone();
            for x in q.iter_mut() {
                *x = x.mul_ref(&lb);
            }
            q[k] = t.clone();
            for x in r.iter_mut().take(k + db) {
                *x = x.mul_ref(&lb);
            }
            r[k + db] = R::zero();
            if !t.is_zero() {
                for (j, bj) in b.c.iter().enumerate().take(db) {
                    let p = t.mul_ref(bj);
                    r[k + j].sub_assign_ref(&p);
                }
            }
        }
        (Self::new(q), Self::new(r))
    }

    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.lc();
        let mut r = self.c.clone();
        for k in (0..=da - db).rev() {
            let t = std::mem::replace(&mut r[k + db], R::zero());
            for x in r.iter_mut().take(k + db) {
                *x = x.mul_ref(&lb);
            }
            if !t.is_zero() {
                for (j, bj) in b.c.iter().enumerate().take(db) {
                    let p = t.mul_ref(bj);
                    r[k + j].sub_assign_ref(&p);
                }
            }
        }
        Self::new(r)
    }
}

impl<R: ExactDiv> Poly<R> {
    /// Division with remainder, requiring every step's quotient coefficient to be exact.
    /// Always succeeds when lc(b) is a unit.
    pub fn divrem_exact(&self, b: &Self) -> Option<(Self, Self)> {
        let db = b.degree()?;
        let Some(da) = self.degree() else {
            return Some((Self::zero(), Self::zero()));
        };
        if da < db {
            return Some((Self::zero(), self.clone()));
        }
        let lb = b.lc();
        let mut r = self.c.clone();
        let mut q = vec![R::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let t = std::mem::replace(&mut r[k + db], R::zero());
            if t.is_zero() {
                continue;
            }
            let qk = t.div_exact(&lb)?;
            for (j, bj) in b.c.iter().enumerate().take(db) {
                let p = qk.mul_ref(bj);
                r[k + j].sub_assign_ref(&p);
            }
            q[k] = qk;
        }
        Some((Self::new(q), Self::new(r)))
    }
}

impl<R: GcdRing> Poly<R> {
    pub fn content(&self) -> R {
        let mut g = R::zero();
        for a in &self.c {
            g = g.gcd(a);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive canonical leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative_normal() {
            g = -g;
        }
        self.div_exact(&Self::constant(g)).expect("content divides")
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { c: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly { c: vec![R::one()] }
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly { c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, o: Self) -> Poly<R> {
        self.add_ref(o)
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, o: Self) -> Poly<R> {
        self.sub_ref(o)
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, o: Self) -> Poly<R> {
        self.mul_ref(o)
    }
}

impl<R: Ring> Ring for Poly<R> {
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
        if self.c.len() < o.c.len() {
            self.c.resize(o.c.len(), R::zero());
        }
        for (a, b) in self.c.iter_mut().zip(&o.c) {
            a.add_assign_ref(b);
        }
        *self = Self::new(std::mem::take(&mut self.c));
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        if self.c.len() < o.c.len() {
            self.c.resize(o.c.len(), R::zero());
        }
        for (a, b) in self.c.iter_mut().zip(&o.c) {
            a.sub_assign_ref(b);
        }
        *self = Self::new(std::mem::take(&mut self.c));
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let c = R::mul_coeffs(&self.c, &o.c);
        Self::new(c)
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(R::from_i64(v))
    }
}

impl<R: ExactDiv> ExactDiv for Poly<R> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return self.is_zero().then(Self::zero);
        }
        let (q, r) = self.divrem_exact(d)?;
        r.is_zero().then_some(q)
    }
}

impl<R: GcdRing> GcdRing for Poly<R> {
    /// Primitive remainder sequence.
    fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.normalized();
        }
        if o.is_zero() {
            return self.normalized();
        }
        let c = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive_part(), o.primitive_part());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.scale(&c).normalized()
    }
    fn is_negative_normal(&self) -> bool {
        self.c.last().is_some_and(|x| x.is_negative_normal())
    }
}
