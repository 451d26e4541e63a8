use num_bigint::{BigInt, Sign};
use num_traits::Zero;
use std::sync::OnceLock;

/// The prime field Z/p for an odd prime p < 2^62. Elements are kept in Montgomery form
/// (a R mod p with R = 2^64); `enter` and `leave` convert from and to ordinary residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zp {
    pub p: u64,
    /// -p^-1 mod 2^64
    ninv: u64,
    /// R^2 mod p
    r2: u64,
}

impl Zp {
    pub fn new(p: u64) -> Self {
        assert!(p % 2 == 1 && p < 1 << 62, "odd modulus below 2^62");
        // Newton iteration for p^-1 mod 2^64
        let mut inv = p;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        Zp { p, ninv: inv.wrapping_neg(), r2 }
    }

    #[inline]
    fn redc(self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.ninv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    /// Ordinary residue (any u64) into Montgomery form.
    #[inline]
    pub fn enter(self, x: u64) -> u64 {
        self.redc((x % self.p) as u128 * self.r2 as u128)
    }

    #[inline]
    pub fn leave(self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    pub fn one(self) -> u64 {
        self.enter(1)
    }

    pub fn from_bigint(self, x: &BigInt) -> u64 {
        let (sign, digits) = x.to_u64_digits();
        // 2^64 = R, whose Montgomery form is R^2 mod p
        let base = self.r2;
        let mut acc = 0u64;
        for d in digits.iter().rev() {
            acc = self.add(self.mul(acc, base), self.enter(*d));
        }
        if sign == Sign::Minus {
            self.neg(acc)
        } else {
            acc
        }
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }
    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    pub fn inv(self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Coefficients lowest degree first.
    pub fn horner(self, c: &[u64], x: u64) -> u64 {
        c.iter().rev().fold(0, |acc, &a| self.add(self.mul(acc, x), a))
    }

    /// Resultant of two polynomials (lowest degree first) by a Euclidean remainder sequence.
    /// Pseudo-remainders keep the loop free of inversions; the accumulated scale factor is
    /// divided out once at the end.
    pub fn resultant(self, mut a: Vec<u64>, mut b: Vec<u64>) -> u64 {
        trim(&mut a);
        trim(&mut b);
        if a.is_empty() || b.is_empty() {
            return 0;
        }
        let (mut num, mut den) = (self.one(), self.one());
        loop {
            let (da, db) = (a.len() - 1, b.len() - 1);
            if db == 0 {
                return self.mul(self.mul(num, self.pow(b[0], da as u64)), self.inv(den));
            }
            let lb = b[db];
            // a <- lb^k a mod b, k = number of elimination steps
            let mut k = 0u64;
            if da >= db {
                for top in (db..=da).rev() {
                    let t = a[top];
                    for x in a[..top].iter_mut() {
                        *x = self.mul(*x, lb);
                    }
                    a[top] = 0;
                    k += 1;
                    if t == 0 {
                        continue;
                    }
                    let off = top - db;
                    for j in 0..db {
                        a[off + j] = self.sub(a[off + j], self.mul(t, b[j]));
                    }
                }
            }
            trim(&mut a);
            if a.is_empty() {
                return 0;
            }
            let dr = a.len() - 1;
            // Res(a, b) = (-1)^{da db} lb^{da - dr} Res(b, r), and Res(b, lb^k r) = lb^{k db} Res(b, r)
            if da % 2 == 1 && db % 2 == 1 {
                num = self.neg(num);
            }
            num = self.mul(num, self.pow(lb, (da - dr) as u64));
            den = self.mul(den, self.pow(lb, k * db as u64));
            std::mem::swap(&mut a, &mut b);
        }
    }

    /// Inverses of 1..=n (Montgomery form) via inv(k) = -(p / k) * inv(p mod k).
    pub fn inverse_table(self, n: usize) -> Vec<u64> {
        let mut inv = vec![0u64; n + 1];
        if n >= 1 {
            inv[1] = self.one();
        }
        for k in 2..=n {
            let k64 = k as u64;
            inv[k] = self.mul(self.enter(self.p - self.p / k64), inv[(self.p % k64) as usize]);
        }
        inv
    }

    /// Newton interpolation of several value rows through the same increasing positive
    /// integer nodes (ordinary integers, not field elements). Each row is replaced by its
    /// monomial coefficients.
    pub fn interpolate_rows(self, xs: &[u64], rows: &mut [Vec<u64>]) {
        let n = xs.len();
        if n == 0 {
            return;
        }
        let inv = self.inverse_table((xs[n - 1] - xs[0]) as usize);
        let xm: Vec<u64> = xs.iter().map(|&x| self.enter(x)).collect();
        for row in rows.iter_mut() {
            for j in 1..n {
                for i in (j..n).rev() {
                    let num = self.sub(row[i], row[i - 1]);
                    row[i] = self.mul(num, inv[(xs[i] - xs[i - j]) as usize]);
                }
            }
            let dd = std::mem::replace(row, vec![0u64; n]);
            let c = row;
            for i in (0..n).rev() {
                let xi = xm[i];
                for k in (1..n).rev() {
                    c[k] = self.sub(c[k - 1], self.mul(c[k], xi));
                }
                c[0] = self.add(self.neg(self.mul(c[0], xi)), dd[i]);
            }
        }
    }

    pub fn interpolate(self, xs: &[u64], ys: &[u64]) -> Vec<u64> {
        let mut rows = [ys.to_vec()];
        self.interpolate_rows(xs, &mut rows);
        let [r] = rows;
        r
    }
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut r = 1 % n;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, n);
        }
        a = mulmod(a, a, n);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &BASES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Two-adic valuation guaranteed for the primes from `ntt_primes`.
pub const NTT_LOG: u32 = 24;

/// The k largest primes p < 2^62 with p = 1 mod 2^NTT_LOG, descending.
pub fn ntt_primes(k: usize) -> Vec<u64> {
    static CACHE: OnceLock<std::sync::Mutex<Vec<u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| std::sync::Mutex::new(Vec::new()));
    let mut v = cache.lock().unwrap();
    let mut q = v.last().map_or(1u64 << (62 - NTT_LOG), |&p| p >> NTT_LOG);
    while v.len() < k {
        q -= 1;
        let n = (q << NTT_LOG) | 1;
        if is_prime(n) {
            v.push(n);
        }
    }
    v[..k].to_vec()
}

impl Zp {
    /// A quadratic non-residue; its (p-1)/2^NTT_LOG power generates the 2-power roots of unity.
    pub fn non_residue(self) -> u64 {
        let minus_one = self.neg(self.one());
        (2u64..)
            .map(|g| self.enter(g))
            .find(|&g| self.pow(g, (self.p - 1) / 2) == minus_one)
            .unwrap()
    }

    /// Primitive n-th root of unity for a power of two n <= 2^NTT_LOG.
    pub fn root_of_unity(self, n: usize) -> u64 {
        assert!(n.is_power_of_two() && (self.p - 1).is_multiple_of(n as u64), "no root of unity of order {n}");
        self.pow(self.non_residue(), (self.p - 1) / n as u64)
    }

    /// In-place cyclic transform a_k <- sum_j a_j w^{jk} for a power-of-two length.
    pub fn ntt(self, a: &mut [u64], w: u64) {
        let n = a.len();
        let mut j = 0;
        for i in 1..n {
            let mut bit = n >> 1;
            while j & bit != 0 {
                j ^= bit;
                bit >>= 1;
            }
            j |= bit;
            if i < j {
                a.swap(i, j);
            }
        }
        let mut len = 2;
        while len <= n {
            let wl = self.pow(w, (n / len) as u64);
            let half = len / 2;
            let mut tw = Vec::with_capacity(half);
            let mut x = self.one();
            for _ in 0..half {
                tw.push(x);
                x = self.mul(x, wl);
            }
            for chunk in a.chunks_mut(len) {
                for k in 0..half {
                    let u = chunk[k];
                    let v = self.mul(chunk[k + half], tw[k]);
                    chunk[k] = self.add(u, v);
                    chunk[k + half] = self.sub(u, v);
                }
            }
            len <<= 1;
        }
    }

    /// Inverse of `ntt` with the same root.
    pub fn intt(self, a: &mut [u64], w: u64) {
        self.ntt(a, self.inv(w));
        let ninv = self.inv(self.enter(a.len() as u64));
        for x in a.iter_mut() {
            *x = self.mul(*x, ninv);
        }
    }
}

/// Chinese remaindering (Garner) of ordinary residues into the symmetric range (-P/2, P/2],
/// with the inverse table precomputed for a fixed prime list.
pub struct Crt {
    fields: Vec<Zp>,
    inv: Vec<Vec<u64>>,
    prefix: Vec<BigInt>,
    half: BigInt,
    total: BigInt,
}

impl Crt {
    pub fn new(primes: &[u64]) -> Self {
        let fields: Vec<Zp> = primes.iter().map(|&p| Zp::new(p)).collect();
        let inv = (0..primes.len())
            .map(|i| (0..i).map(|j| fields[i].inv(fields[i].enter(primes[j]))).collect())
            .collect();
        let mut prefix = Vec::with_capacity(primes.len());
        let mut prod = BigInt::from(1u8);
        for &p in primes {
            prefix.push(prod.clone());
            prod *= p;
        }
        Crt { fields, inv, prefix, half: &prod >> 1, total: prod }
    }

    pub fn lift(&self, res: &[u64]) -> BigInt {
        let n = self.fields.len();
        let mut v = vec![0u64; n];
        for i in 0..n {
            let f = self.fields[i];
            let mut t = f.enter(res[i]);
            for j in 0..i {
                t = f.mul(f.sub(t, f.enter(v[j])), self.inv[i][j]);
            }
            v[i] = f.leave(t);
        }
        let mut x = BigInt::zero();
        for i in 0..n {
            if v[i] != 0 {
                x += &self.prefix[i] * v[i];
            }
        }
        if x > self.half {
            x -= &self.total;
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with(f: Zp, v: &[u64]) -> Vec<u64> {
        v.iter().map(|&x| f.enter(x)).collect()
    }

    #[test]
    fn montgomery_roundtrip() {
        let f = Zp::new(ntt_primes(1)[0]);
        for x in [0u64, 1, 2, 12345, f.p - 1] {
            assert_eq!(f.leave(f.enter(x)), x);
        }
        let (a, b) = (f.p - 3, 1u64 << 61);
        assert_eq!(f.leave(f.mul(f.enter(a), f.enter(b))), mulmod(a, b, f.p));
        assert_eq!(f.leave(f.mul(f.inv(f.enter(a)), f.enter(a))), 1);
        assert_eq!(f.leave(f.from_bigint(&BigInt::from(-5))), f.p - 5);
    }

    #[test]
    fn interpolation_recovers_coefficients() {
        let f = Zp::new(ntt_primes(1)[0]);
        let c = with(f, &[5, 0, 7, 1, 3]);
        let xs: Vec<u64> = vec![1, 2, 4, 5, 9];
        let ys: Vec<u64> = xs.iter().map(|&x| f.horner(&c, f.enter(x))).collect();
        assert_eq!(f.interpolate(&xs, &ys), c);
    }

    #[test]
    fn resultant_small() {
        let f = Zp::new(101);
        let r = |a: &[u64], b: &[u64]| f.leave(f.resultant(with(f, a), with(f, b)));
        // Res(x - 3, x - 5) = -2; Res(x^2 + 1, 2) = 4
        assert_eq!(r(&[98, 1], &[96, 1]), 99);
        assert_eq!(r(&[1, 0, 1], &[2]), 4);
        assert_eq!(r(&[2], &[1, 0, 1]), 4);
        // Res(x^2, x + 1) = 1, Res(x + 1, x^2) = 1
        assert_eq!(r(&[0, 0, 1], &[1, 1]), 1);
        assert_eq!(r(&[1, 1], &[0, 0, 1]), 1);
        // Res(2x^2 + 3x + 1, 3x + 2) = 3^2 * (2 (4/9) - 2 + 1) = 8 - 9 = -1
        assert_eq!(r(&[1, 3, 2], &[2, 3]), 100);
        // common root
        assert_eq!(r(&[2, 3, 1], &[1, 1]), 0);
    }

    #[test]
    fn crt_symmetric() {
        let ps = ntt_primes(3);
        let crt = Crt::new(&ps);
        for v in [BigInt::from(-12345678901234567890i128), BigInt::from(0), BigInt::from(1u64 << 63) * 977] {
            let res: Vec<u64> = ps.iter().map(|&p| crate::exactalg::resultant::reduce_mod(&v, p)).collect();
            assert_eq!(crt.lift(&res), v);
        }
    }

    #[test]
    fn ntt_roundtrip() {
        let f = Zp::new(ntt_primes(1)[0]);
        let c = with(f, &[3, 1, 4, 1, 5, 9, 2, 6]);
        let w = f.root_of_unity(8);
        assert_eq!(f.pow(w, 4), f.neg(f.one()));
        let mut a = c.clone();
        f.ntt(&mut a, w);
        let mut x = f.one();
        for v in &a {
            assert_eq!(*v, f.horner(&c, x));
            x = f.mul(x, w);
        }
        f.intt(&mut a, w);
        assert_eq!(a, c);
    }

    #[test]
    fn primes_are_prime() {
        for p in ntt_primes(4) {
            assert!(is_prime(p) && p < 1 << 62 && (p - 1) % (1 << NTT_LOG) == 0);
        }
        assert!(is_prime(1_000_000_007) && !is_prime(1_000_000_007u64 * 3));
    }
}
