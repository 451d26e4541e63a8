use super::bivar::Bivar;
use super::laurent::Laurent;
use super::modp::{ntt_primes, Crt, Zp};
use super::poly::Poly;
use super::ring::{ExactDiv, Ring};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

/// Sylvester matrix of (a, b): deg b rows of a-coefficients then deg a rows of b-coefficients,
/// highest degree first.
pub fn sylvester_matrix<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> Vec<Vec<R>> {
    let (m, n) = (a.deg().max(0) as usize, b.deg().max(0) as usize);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (p, count, d) in [(a, n, m), (b, m, n)] {
        for i in 0..count {
            let mut row = vec![R::zero(); size];
            for k in 0..=d {
                row[i + k] = p.coeff(d - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Fraction-free (Bareiss) determinant.
pub fn bareiss_det<R: ExactDiv>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    if n == 0 {
        return R::one();
    }
    let mut neg = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    neg = !neg;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].mul_ref(&a[k][k]).sub_ref(&a[i][k].mul_ref(&a[k][j]));
                a[i][j] = t.div_exact(&prev).expect("Bareiss step is exact");
            }
            a[i][k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if neg {
        -d
    } else {
        d
    }
}

/// Resultant as the Sylvester determinant. Serves as the oracle for the other routes.
pub fn resultant_sylvester<R: ExactDiv>(a: &Poly<R>, b: &Poly<R>) -> R {
    if a.is_zero() || b.is_zero() {
        return R::zero();
    }
    bareiss_det(sylvester_matrix(a, b))
}

/// Resultant by the subresultant pseudo-remainder sequence.
pub fn resultant_prs<R: ExactDiv>(a: &Poly<R>, b: &Poly<R>) -> R {
    if a.is_zero() || b.is_zero() {
        return R::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut neg = false;
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        neg = a.deg() % 2 == 1 && b.deg() % 2 == 1;
    }
    if b.deg() == 0 {
        let r = b.lc().pow(a.deg() as u32);
        return if neg { -r } else { r };
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let (da, db) = (a.deg() as u32, b.deg() as u32);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            neg = !neg;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return R::zero();
        }
        a = b;
        let den = g.mul_ref(&h.pow(delta));
        b = r.div_exact(&Poly::constant(den)).expect("subresultant division is exact");
        g = a.lc();
        if delta >= 1 {
            h = g.pow(delta).div_exact(&h.pow(delta - 1)).expect("exact");
        }
        if b.deg() == 0 {
            let da = a.deg() as u32;
            let r = b.lc().pow(da).div_exact(&h.pow(da - 1)).expect("exact");
            return if neg { -r } else { r };
        }
    }
}

/// Trivariate input for the bivariate routes: a polynomial in the eliminated variable whose
/// coefficients are polynomials in L with coefficients polynomial in M.
pub type TriPoly = Poly<Poly<Poly<BigInt>>>;

/// Subresultant PRS for trivariate input. The inner M-polynomials are carried as Laurent
/// polynomials so that large common M-powers cost nothing during the remainder sequence.
pub fn resultant_prs_tri(a: &TriPoly, b: &TriPoly) -> Bivar {
    with_m_stride(a, b, prs_tri_core)
}

fn prs_tri_core(a: &TriPoly, b: &TriPoly) -> Bivar {
    let lift = |t: &TriPoly| -> Poly<Poly<Laurent<BigInt>>> { t.map(|c| c.map(Laurent::from_poly)) };
    let r = resultant_prs(&lift(a), &lift(b));
    Bivar::new(r.map(|c| c.to_poly().expect("resultant of polynomials is a polynomial")))
}

/// A-priori shape of Res(a, b): exponent windows in L and M and a coefficient bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantBounds {
    pub l_lo: usize,
    pub l_hi: usize,
    pub m_lo: usize,
    pub m_hi: usize,
    /// Bits of the Goldstein-Graham bound prod_i (sum_j ||s_ij||_1^2)^(1/2) over Sylvester rows.
    pub coeff_bits: u64,
}

#[derive(Clone)]
struct EntryShape {
    l: (i64, i64),
    m: (i64, i64),
    norm_sq: BigInt,
}

fn entry_shape(e: &Poly<Poly<BigInt>>) -> Option<EntryShape> {
    if e.is_zero() {
        return None;
    }
    let (mut l, mut m) = ((i64::MAX, i64::MIN), (i64::MAX, i64::MIN));
    let mut n1 = BigInt::zero();
    for (i, r) in e.coeffs().iter().enumerate() {
        for (j, x) in r.coeffs().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (i, j) = (i as i64, j as i64);
            l = (l.0.min(i), l.1.max(i));
            m = (m.0.min(j), m.1.max(j));
            n1 += x.abs();
        }
    }
    Some(EntryShape { l, m, norm_sq: &n1 * &n1 })
}

/// Minimum-cost perfect assignment (Hungarian method); None entries are forbidden.
/// Returns None when no perfect assignment avoids the forbidden entries.
pub fn min_assignment(cost: &[Vec<Option<i64>>]) -> Option<i64> {
    let n = cost.len();
    if n == 0 {
        return Some(0);
    }
    const FORBID: i64 = 1 << 40;
    let c = |i: usize, j: usize| cost[i - 1][j - 1].unwrap_or(FORBID);
    let (mut u, mut v) = (vec![0i64; n + 1], vec![0i64; n + 1]);
    let (mut p, mut way) = (vec![0usize; n + 1], vec![0usize; n + 1]);
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![i64::MAX; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let (i0, mut delta, mut j1) = (p[j0], i64::MAX, 0);
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = c(i0, j) - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut total = 0;
    for j in 1..=n {
        let x = cost[p[j] - 1][j - 1]?;
        total += x;
    }
    Some(total)
}

/// Bounds from the Sylvester matrix: every term of the determinant is a product over a
/// permutation, so exponent windows come from optimal assignments on the entries' exponent
/// ranges. None when every permutation meets a zero entry, i.e. the resultant vanishes.
pub fn resultant_bounds(a: &TriPoly, b: &TriPoly) -> Option<ResultantBounds> {
    let syl = sylvester_matrix(a, b);
    let shapes: Vec<Vec<Option<EntryShape>>> = syl.iter().map(|r| r.iter().map(entry_shape).collect()).collect();
    let pick = |f: &dyn Fn(&EntryShape) -> i64| -> Vec<Vec<Option<i64>>> {
        shapes.iter().map(|r| r.iter().map(|e| e.as_ref().map(f)).collect()).collect()
    };
    let l_lo = min_assignment(&pick(&|e| e.l.0))?;
    let l_hi = -min_assignment(&pick(&|e| -e.l.1))?;
    let m_lo = min_assignment(&pick(&|e| e.m.0))?;
    let m_hi = -min_assignment(&pick(&|e| -e.m.1))?;
    let mut prod = BigInt::from(1);
    for r in &shapes {
        let s: BigInt = r.iter().flatten().map(|e| e.norm_sq.clone()).sum();
        prod *= s;
    }
    Some(ResultantBounds {
        l_lo: l_lo as usize,
        l_hi: l_hi as usize,
        m_lo: m_lo as usize,
        m_hi: m_hi as usize,
        coeff_bits: prod.bits().div_ceil(2) + 1,
    })
}

/// Largest d such that every M exponent in a and b is a multiple of d (0 when M is absent).
pub fn m_stride(a: &TriPoly, b: &TriPoly) -> usize {
    let mut d = 0;
    for t in [a, b] {
        for c in t.coeffs() {
            for r in c.coeffs() {
                for (e, x) in r.coeffs().iter().enumerate() {
                    if !x.is_zero() {
                        d = num_integer::gcd(d, e);
                    }
                }
            }
        }
    }
    d
}

fn compress_m(t: &TriPoly, d: usize) -> TriPoly {
    t.map(|c| c.map(|r| Poly::new(r.coeffs().iter().step_by(d).cloned().collect())))
}

/// Inputs that are polynomials in M^d are solved in N = M^d and the result re-expanded.
fn with_m_stride(a: &TriPoly, b: &TriPoly, core: fn(&TriPoly, &TriPoly) -> Bivar) -> Bivar {
    let d = m_stride(a, b);
    if d <= 1 {
        return core(a, b);
    }
    let r = core(&compress_m(a, d), &compress_m(b, d));
    Bivar::from_terms(r.terms().into_iter().map(|(l, m, c)| (l, m * d, c)))
}

/// Resultant in the outer variable by evaluation and interpolation: L and M are specialized at
/// points of several word-size prime fields, scalar resultants are interpolated back to
/// F_p[L, M] inside the exponent windows, and the images are lifted by Chinese remaindering.
pub fn resultant_evalinterp(a: &TriPoly, b: &TriPoly) -> Bivar {
    with_m_stride(a, b, evalinterp_core)
}

fn evalinterp_core(a: &TriPoly, b: &TriPoly) -> Bivar {
    if a.is_zero() || b.is_zero() {
        return Bivar::zero();
    }
    let Some(bounds) = resultant_bounds(a, b) else {
        return Bivar::zero();
    };
    let needed = (bounds.coeff_bits + 2).div_ceil(61) as usize;
    let mut images: Vec<(u64, Vec<Vec<u64>>)> = Vec::new();
    let mut start = 0;
    while images.len() < needed {
        let want = needed - images.len();
        let batch = ntt_primes(start + want);
        let got: Vec<_> = batch[start..start + want]
            .par_iter()
            .filter_map(|&p| image_mod_p(a, b, &bounds, Zp::new(p)).map(|im| (p, im)))
            .collect();
        start += want;
        images.extend(got);
    }
    let primes: Vec<u64> = images.iter().map(|(p, _)| *p).collect();
    let crt = Crt::new(&primes);
    let (nl, nm) = (bounds.l_hi - bounds.l_lo + 1, bounds.m_hi - bounds.m_lo + 1);
    let mut rows: Vec<Poly<BigInt>> = vec![Poly::zero(); bounds.l_lo];
    rows.par_extend((0..nl).into_par_iter().map(|l| {
        let mut c = vec![BigInt::zero(); bounds.m_lo];
        c.extend((0..nm).map(|m| {
            let res: Vec<u64> = images.iter().map(|(_, im)| im[l][m]).collect();
            crt.lift(&res)
        }));
        Poly::new(c)
    }));
    Bivar::new(Poly::new(rows))
}

/// Image of Res / (L^l_lo M^m_lo) in F_p[L, M] as a dense table indexed by the offsets
/// inside the windows, or None when p is unlucky for the leading coefficients.
/// M runs over a coset c w^i of the 2-power roots of unity so that interpolation in M is an
/// inverse transform; L runs over 1, 2, ... with Newton interpolation.
fn image_mod_p(a: &TriPoly, b: &TriPoly, bd: &ResultantBounds, f: Zp) -> Option<Vec<Vec<u64>>> {
    let red = |t: &TriPoly| -> Vec<Vec<Vec<u64>>> {
        t.coeffs()
            .iter()
            .map(|c| c.coeffs().iter().map(|r| r.coeffs().iter().map(|x| f.from_bigint(x)).collect()).collect())
            .collect()
    };
    let (ra, rb) = (red(a), red(b));
    let (nl, nm) = (bd.l_hi - bd.l_lo + 1, bd.m_hi - bd.m_lo + 1);
    let n = nm.next_power_of_two();
    let w = f.root_of_unity(n);
    let max_l = nl + 64;
    // L^{-l_lo} at L = 1, 2, ...; index 0 is never read
    let l_unit: Vec<u64> =
        (0..=max_l as u64).map(|l| if l == 0 { 0 } else { f.inv(f.pow(f.enter(l), bd.l_lo as u64)) }).collect();
    'coset: for c in 2u64..10 {
        let c = f.enter(c);
        // values of every coefficient polynomial at c w^k, k < n, by one transform each
        let on_coset = |r: &Vec<u64>| -> Vec<u64> {
            let mut v = vec![0u64; n];
            let mut s = f.one();
            for (j, &x) in r.iter().enumerate() {
                v[j % n] = f.add(v[j % n], f.mul(x, s));
                s = f.mul(s, c);
            }
            f.ntt(&mut v, w);
            v
        };
        let table = |t: &Vec<Vec<Vec<u64>>>| -> Vec<Vec<Vec<u64>>> {
            t.iter().map(|co| co.iter().map(on_coset).collect()).collect()
        };
        let (ta, tb) = (table(&ra), table(&rb));
        let mut cols: Vec<Vec<u64>> = Vec::with_capacity(n);
        let (mut unit, step) = (f.inv(f.pow(c, bd.m_lo as u64)), f.inv(f.pow(w, bd.m_lo as u64)));
        for k in 0..n {
            // specialize M: coefficients become polynomials in L
            let spec = |t: &Vec<Vec<Vec<u64>>>| -> Vec<Vec<u64>> {
                t.iter().map(|co| co.iter().map(|v| v[k]).collect()).collect()
            };
            let (sa, sb) = (spec(&ta), spec(&tb));
            if sa.last().unwrap().iter().all(|&x| x == 0) || sb.last().unwrap().iter().all(|&x| x == 0) {
                continue 'coset;
            }
            let mut l_pts = Vec::with_capacity(nl);
            let mut l_vals = Vec::with_capacity(nl);
            let mut l = 0u64;
            while l_pts.len() < nl {
                l += 1;
                if l > max_l as u64 {
                    return None;
                }
                let lm = f.enter(l);
                let ea: Vec<u64> = sa.iter().map(|co| f.horner(co, lm)).collect();
                let eb: Vec<u64> = sb.iter().map(|co| f.horner(co, lm)).collect();
                if *ea.last().unwrap() == 0 || *eb.last().unwrap() == 0 {
                    continue;
                }
                let u = f.mul(unit, l_unit[l as usize]);
                l_pts.push(l);
                l_vals.push(f.mul(f.resultant(ea, eb), u));
            }
            cols.push(f.interpolate(&l_pts, &l_vals));
            unit = f.mul(unit, step);
        }
        // rows indexed by L offset; the transform yields the coefficients of Q(L, c M)
        let cinv = f.inv(c);
        let mut out = Vec::with_capacity(nl);
        for li in 0..nl {
            let mut row: Vec<u64> = cols.iter().map(|v| v[li]).collect();
            f.intt(&mut row, w);
            let mut s = f.one();
            for x in row.iter_mut() {
                *x = f.leave(f.mul(*x, s));
                s = f.mul(s, cinv);
            }
            debug_assert!(row[nm..].iter().all(|&x| x == 0), "M window too small");
            row.truncate(nm);
            out.push(row);
        }
        return Some(out);
    }
    None
}

/// Lift helper shared with tests: sign-aware conversion into a prime field.
pub fn reduce_mod(x: &BigInt, p: u64) -> u64 {
    let f = Zp::new(p);
    f.leave(f.from_bigint(x))
}
