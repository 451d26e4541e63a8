use super::laurent::{monomial, write_terms};
use super::poly::Poly;
use super::ring::{ExactDiv, GcdRing, Ring};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// Polynomial in L and M (non-negative exponents), stored as a polynomial in L
/// whose coefficients are polynomials in M.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bivar<R = BigInt> {
    pub p: Poly<Poly<R>>,
}

/// `original = content * L^l_shift * M^m_shift * normalized`
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnitReport<R = BigInt> {
    pub content: R,
    pub l_shift: usize,
    pub m_shift: usize,
}

/// Factors removed by a squarefree reduction, with their multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multiplicities<R = BigInt> {
    pub factors: Vec<(Bivar<R>, usize)>,
}

impl<R: Ring> Bivar<R> {
    pub fn new(p: Poly<Poly<R>>) -> Self {
        Bivar { p }
    }

    pub fn zero() -> Self {
        Bivar { p: Poly::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize, R)>) -> Self {
        let mut rows: Vec<Vec<R>> = Vec::new();
        for (l, m, a) in terms {
            if rows.len() <= l {
                rows.resize(l + 1, Vec::new());
            }
            let row = &mut rows[l];
            if row.len() <= m {
                row.resize(m + 1, R::zero());
            }
            row[m].add_assign_ref(&a);
        }
        Bivar { p: Poly::new(rows.into_iter().map(Poly::new).collect()) }
    }

    /// Nonzero (deg_L, deg_M, coeff) triples in increasing lexicographic order.
    pub fn terms(&self) -> Vec<(usize, usize, R)> {
        let mut out = Vec::new();
        for (l, row) in self.p.coeffs().iter().enumerate() {
            for (m, a) in row.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    out.push((l, m, a.clone()));
                }
            }
        }
        out
    }

    pub fn deg_l(&self) -> Option<usize> {
        self.p.degree()
    }

    pub fn deg_m(&self) -> Option<usize> {
        self.p.coeffs().iter().filter_map(|r| r.degree()).max()
    }

    pub fn eval(&self, l: &R, m: &R) -> R {
        self.p.eval_with(l, |row| row.eval(m))
    }

    /// L -> L^-1 followed by multiplication by L^deg_L.
    pub fn reflect_l(&self) -> Self {
        let mut c = self.p.coeffs().to_vec();
        c.reverse();
        Bivar { p: Poly::new(c) }
    }

    /// M -> M^-1 followed by multiplication by M^deg_M.
    pub fn reflect_m(&self) -> Self {
        let d = self.deg_m().unwrap_or(0);
        Self::from_terms(self.terms().into_iter().map(|(l, m, a)| (l, d - m, a)))
    }

    /// Polynomial with L and M exchanged.
    pub fn swap_vars(&self) -> Self {
        Self::from_terms(self.terms().into_iter().map(|(l, m, a)| (m, l, a)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Bivar { p: self.p.mul_ref(&o.p) }
    }

    pub fn num_terms(&self) -> usize {
        self.p.coeffs().iter().map(|r| r.coeffs().iter().filter(|a| !a.is_zero()).count()).sum()
    }
}

impl<R: GcdRing> Bivar<R> {
    /// Strip integer content and the largest monomial factor, then fix the sign so the
    /// lexicographically largest (deg_L, deg_M) term is positive.
    pub fn content_and_units(&self) -> (Self, UnitReport<R>) {
        if self.is_zero() {
            return (Self::zero(), UnitReport { content: R::zero(), l_shift: 0, m_shift: 0 });
        }
        let rows = self.p.coeffs();
        let l_shift = rows.iter().take_while(|r| r.is_zero()).count();
        let m_shift = rows
            .iter()
            .filter(|r| !r.is_zero())
            .map(|r| r.coeffs().iter().take_while(|a| a.is_zero()).count())
            .min()
            .unwrap();
        let mut g = R::zero();
        for r in rows {
            for a in r.coeffs() {
                g = g.gcd(a);
            }
        }
        if self.p.lc().lc().is_negative_normal() {
            g = -g;
        }
        let out: Vec<Poly<R>> = rows[l_shift..]
            .iter()
            .map(|r| {
                Poly::new(
                    r.coeffs()
                        .iter()
                        .skip(m_shift)
                        .map(|a| a.div_exact(&g).expect("content divides"))
                        .collect(),
                )
            })
            .collect();
        (Bivar { p: Poly::new(out) }, UnitReport { content: g, l_shift, m_shift })
    }

    pub fn normalized(&self) -> Self {
        self.content_and_units().0
    }

    /// Squarefree part with respect to L, together with the repeated factors.
    /// Factors depending on M alone are reduced by a univariate pass over the content.
    pub fn squarefree_part(&self) -> (Self, Multiplicities<R>) {
        if self.is_zero() {
            return (Self::zero(), Multiplicities { factors: Vec::new() });
        }
        let cont = self.p.content();
        let prim = self.p.primitive_part();
        let mut factors = Vec::new();
        let (sq_prim, rep) = yun(&prim);
        for (f, k) in rep {
            factors.push((Bivar { p: f }, k));
        }
        let icont = cont.content();
        let cprim = cont.primitive_part();
        let (sq_cont, rep) = yun(&cprim);
        for (f, k) in rep {
            factors.push((Bivar { p: Poly::constant(f) }, k));
        }
        let sq = sq_prim.mul_ref(&Poly::constant(sq_cont.scale(&icont)));
        (Bivar { p: sq }, Multiplicities { factors })
    }
}

/// Yun's squarefree decomposition of a primitive polynomial. Returns the squarefree
/// part and the factors of multiplicity at least two.
fn yun<R: GcdRing>(f: &Poly<R>) -> (Poly<R>, Vec<(Poly<R>, usize)>) {
    if f.deg() <= 0 {
        return (f.clone(), Vec::new());
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).expect("gcd divides f");
    let sq = b.clone();
    let mut c = df.div_exact(&a0).expect("gcd divides f'");
    let mut d = c.sub_ref(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.deg() > 0 {
        let a = b.gcd(&d);
        if i > 1 && a.deg() > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).expect("yun step");
        c = d.div_exact(&a).expect("yun step");
        d = c.sub_ref(&b.derivative());
        i += 1;
    }
    (sq, out)
}

impl<R: Ring + fmt::Display> fmt::Display for Bivar<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut t = self.terms();
        t.reverse();
        write_terms(
            f,
            t.into_iter().map(|(l, m, a)| {
                let mono = [monomial("L", l as i64), monomial("M", m as i64)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect::<Vec<_>>()
                    .join("*");
                (a.to_string(), mono)
            }),
        )
    }
}

impl<R: Ring> From<Poly<Poly<R>>> for Bivar<R> {
    fn from(p: Poly<Poly<R>>) -> Self {
        Bivar { p }
    }
}
