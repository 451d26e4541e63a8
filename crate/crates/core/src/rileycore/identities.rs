use super::cd::{cd_family, CdKind};
use super::*;

use serde::Serialize;

/// Longest sequence for which the c/d family checks run (the tuple walk grows like Fibonacci).
pub const CD_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub eps: String,
    pub results: Vec<IdentityResult>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> Vec<&IdentityResult> {
        self.results.iter().filter(|r| !r.passed).collect()
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.results.push(IdentityResult { name: name.into(), passed, detail: detail.into() });
    }
}

fn lam_to_lt(p: &TracePoly) -> TracePoly {
    LamPoly::new(Var::Lambda, p.clone()).convert(Var::LTilde).poly
}

/// lambda written in lambda~.
fn lam() -> TracePoly {
    var().sub_ref(&z().mul_ref(&z()))
}

fn sum_poly(coeffs: Vec<LaurentInt>) -> TracePoly {
    Poly::new(coeffs)
}

/// Run every identity on one sequence.
pub fn identity_suite(eps: &EpsilonSeq) -> IdentityReport {
    let mut rep = IdentityReport { eps: eps.to_string(), results: Vec::new() };
    let h = eps.half();
    let n = h.n();
    let pair = riley_recursive(eps);
    let (f, g) = (pair.f.poly.clone(), pair.g.poly.clone());
    let gb = bar(&g);
    let lt = var();

    let fd = riley_delta(eps).poly;
    let fw = riley_direct(eps).poly;
    let fq = riley_quandle(eps).poly;
    rep.push("paths: recursive = delta", f == fd, "");
    rep.push("paths: recursive = direct", f == fw, "");
    rep.push("paths: recursive = quandle", f == fq, "");

    let w = w_matrix(eps, Var::LTilde).m;
    let zg = z().mul_ref(&g);
    rep.push("W12 = g", *w.get(1, 2) == g, "");
    rep.push("W11 = f + z g", *w.get(1, 1) == f.add_ref(&zg), "");
    rep.push("W21 = lambda g", *w.get(2, 1) == lam().mul_ref(&g), "");
    rep.push("W22 = f_{n-1} - z g", *w.get(2, 2) == pair.f_k(n - 1).sub_ref(&zg), "");
    rep.push("det W = 1", w.det() == TracePoly::one(), "");

    let wl = w_product(eps.as_slice(), false);
    let ws = w_product(eps.as_slice(), true);
    let wb = wl.map(bar);
    let expect = Mat2::new(
        wb.get(2, 2).clone(),
        wb.get(1, 2).clone(),
        var().mul_ref(wb.get(1, 2)),
        wb.get(1, 1).clone(),
    );
    rep.push("W* = [[W22bar, W12bar], [lambda W12bar, W11bar]]", ws == expect, "");

    // z (1 - f^2 + Lt g gbar) = Lt f (g - gbar)
    let ggb = lt.mul_ref(&g).mul_ref(&gb);
    let lhs = z().mul_ref(&TracePoly::one().sub_ref(&f.mul_ref(&f)).add_ref(&ggb));
    let rhs = lt.mul_ref(&f).mul_ref(&g.sub_ref(&gb));
    rep.push("z(1 - f^2 + Lt g gbar) = Lt f (g - gbar)", lhs == rhs, "");

    let bad = (1..=n).find(|&k| {
        let (fk, gk) = (pair.f_k(k), pair.g_k(k));
        TracePoly::one().add_ref(&lt.mul_ref(gk).mul_ref(&bar(gk))) != fk.mul_ref(pair.f_k(k - 1))
    });
    rep.push("1 + Lt g_k gbar_k = f_k f_{k-1}", bad.is_none(), bad.map(|k| format!("k = {k}")).unwrap_or_default());

    // neighbours e(n-1), e(n-2) by the W route, independent of the recursion
    let outer = |m: usize| -> (TracePoly, TracePoly) {
        if m == 0 {
            return (TracePoly::one(), TracePoly::zero());
        }
        let e = HalfSeq(h.0[..m].to_vec()).full();
        let wm = w_matrix(&e, Var::LTilde).m;
        let g = wm.get(1, 2).clone();
        (wm.get(1, 1).sub_ref(&z().mul_ref(&g)), g)
    };
    let (f1, g1) = outer(n - 1);
    let e1 = eps.eps(1);
    let gw = w.get(1, 2).clone();
    let rhs = bar(&g1).mul_ref(&mono(-2 * e1)).add_ref(&f1.mul_ref(&mono(-e1)).mul_ref(&int(e1)));
    rep.push("g = gbar' M^{-2 eps_1} + eps_1 f' M^{-eps_1}", gw == rhs, "");

    let lhs = lt.mul_ref(&gb.sub_ref(&g));
    let rhs = z().mul_ref(&f.sub_ref(&f1));
    rep.push("Lt (gbar - g) = z (f - f')", lhs == rhs, "");

    if n >= 2 {
        let (f2, _) = outer(n - 2);
        let en = h.e(n);
        let l = lam();
        let lhs = f.add_ref(&zg);
        let mut rhs = f2.mul_ref(&mono(2 * en)).add_ref(&l.mul_ref(&f1));
        let t = l.mul_ref(&mono(en)).mul_ref(&int(2 * en)).add_ref(&z().mul_ref(&mono(2 * en).sub_ref(&l)));
        rhs.add_assign_ref(&bar(&g1).mul_ref(&t));
        rep.push("f_n + z g_n = f_{n-2} M^{2e_n} + lambda f_{n-1} + gbar_{n-1}(...)", lhs == rhs, "");
    }

    // Le: tr W(e(k)) = f_k + f_{k-1} and the alternating sum
    let mut alt = int(if n.is_multiple_of(2) { 1 } else { -1 });
    let mut tr_ok = None;
    for k in 1..=n {
        let e = HalfSeq(h.0[..k].to_vec()).full();
        let tr = lam_to_lt(&w_product(e.as_slice(), false).trace());
        if tr != pair.f_k(k).add_ref(pair.f_k(k - 1)) && tr_ok.is_none() {
            tr_ok = Some(k);
        }
        let s = if (n - k).is_multiple_of(2) { 1 } else { -1 };
        alt.add_assign_ref(&tr.mul_ref(&int(s)));
    }
    rep.push("tr W(e(k)) = f_k + f_{k-1}", tr_ok.is_none(), tr_ok.map(|k| format!("k = {k}")).unwrap_or_default());
    rep.push("f_n = (-1)^n + sum (-1)^{n-k} tr W(e(k))", alt == f, "");

    let conj = rho_y(1).mul(&wl).mul(&rho_x(-1));
    let lhs = var().mul_ref(&LamPoly::new(Var::LTilde, f.clone()).convert(Var::Lambda).poly);
    rep.push("lambda f = tr W - tr(y W x^-1)", lhs == wl.trace().sub_ref(&conj.trace()), "");

    let mp = riley_recursive(&eps.negate());
    rep.push("f(-eps) = f(eps)", mp.f.poly == f, "");
    rep.push("g(-eps) = -gbar(eps)", mp.g.poly == -gb.clone(), "");
    rep.push("f(M^-1) = f(M)", bar(&f) == f, "");
    let sb = to_s_basis(&f);
    rep.push("f in Z[s, Lt]", sb.as_ref().is_some_and(|c| from_s_basis(c) == f), "");

    let q = quandle_fg(eps);
    rep.push("F = f I", q.f.0 == f && q.f.1 == f, "");
    rep.push("G = diag(g, -Lt gbar)", q.g.0 == g && q.g.1 == -lt.mul_ref(&gb), "");

    // L M^{2 sigma} = -g/gbar agrees with Lt g^2 modulo f
    let wit = lt.mul_ref(&g).mul_ref(&g);
    let t = wit.mul_ref(&gb).add_ref(&g);
    let r = t.divrem_exact(&f).map(|(_, r)| r);
    rep.push("Lt g^2 gbar + g = 0 mod f", r.is_some_and(|r| r.is_zero()), "");

    if eps.len() <= CD_CAP {
        cd_checks(eps, &f, &g, &wl, &mut rep);
    }
    rep
}

struct Table {
    fam: std::collections::HashMap<(CdKind, usize), Vec<LaurentInt>>,
}

impl Table {
    fn new(eps: &[i8]) -> Self {
        let mut fam = std::collections::HashMap::new();
        for kind in [CdKind::C, CdKind::D, CdKind::CTilde, CdKind::DTilde] {
            for n in 0..=eps.len() {
                fam.insert((kind, n), cd_family(eps, kind, n));
            }
        }
        Table { fam }
    }

    fn get(&self, kind: CdKind, k: i64, n: i64) -> LaurentInt {
        if n < 0 || k < 0 || k > n {
            return LaurentInt::zero();
        }
        self.fam[&(kind, n as usize)][k as usize].clone()
    }
}

fn lm(e: i64) -> LaurentInt {
    Laurent::m_pow(e)
}

fn li(v: i64) -> LaurentInt {
    Laurent::constant(BigInt::from(v))
}

fn cd_checks(eps: &EpsilonSeq, f: &TracePoly, g: &TracePoly, wl: &Mat2<TracePoly>, rep: &mut IdentityReport) {
    use CdKind::*;
    let s = eps.as_slice();
    let t = Table::new(s);
    let nn = s.len() as i64;
    let ep = |i: i64| s[(i - 1) as usize] as i64;
    let half = nn / 2;

    let series = |kind: CdKind, odd: bool, n: i64, top: i64| -> TracePoly {
        sum_poly((0..=top).map(|k| t.get(kind, 2 * k + odd as i64, n)).collect())
    };
    rep.push("W11 = sum c_{2k} lambda^k", *wl.get(1, 1) == series(C, false, nn, half), "");
    rep.push("W12 = sum c_{2k+1} lambda^k", *wl.get(1, 2) == series(C, true, nn, half - 1), "");
    rep.push("W21 = lambda sum d_{2k+1} lambda^k", *wl.get(2, 1) == var().mul_ref(&series(D, true, nn, half - 1)), "");
    rep.push("W22 = sum d_{2k} lambda^k", *wl.get(2, 2) == series(D, false, nn, half - 1), "");
    rep.push("f = sum c~_{2k} Lt^k", *f == series(CTilde, false, nn, half), "");
    rep.push("g = sum c~_{2k+1} Lt^k", *g == series(CTilde, true, nn, half - 1), "");
    // the d~ form needs M^-1 (d~_{2k+1} = c~_{2k+1} at M^-1 for symmetric eps); without it this is gbar
    rep.push("g = sum d~_{2k+1}(M^-1) Lt^k", *g == bar(&series(DTilde, true, nn, half - 1)), "");

    let mut fail: Option<String> = None;
    let mut check = |name: &str, ok: bool, at: String| {
        if !ok && fail.is_none() {
            fail = Some(format!("{name} at {at}"));
        }
    };
    // prefix recursions
    for n in 0..=half {
        for k in -1..=n {
            let at = format!("n={n} k={k}");
            if 2 * n <= nn && n >= 1 {
                check("c_{2k+1} at 2n from 2n-1", t.get(C, 2 * k + 1, 2 * n) == t.get(C, 2 * k + 1, 2 * n - 1).mul_ref(&lm(-ep(2 * n))), at.clone());
                check(
                    "c_{2k} at 2n from 2n-2, 2n-1",
                    t.get(C, 2 * k, 2 * n)
                        == t.get(C, 2 * k, 2 * n - 2)
                            .mul_ref(&lm(ep(2 * n - 1) + ep(2 * n)))
                            .add_ref(&t.get(C, 2 * k - 1, 2 * n - 1).mul_ref(&li(ep(2 * n)))),
                    at.clone(),
                );
                check("d_{2k} at 2n from 2n-1", t.get(D, 2 * k, 2 * n) == t.get(D, 2 * k, 2 * n - 1).mul_ref(&lm(-ep(2 * n))), at.clone());
                check(
                    "d_{2k+1} at 2n from 2n-2, 2n-1",
                    t.get(D, 2 * k + 1, 2 * n)
                        == t.get(D, 2 * k + 1, 2 * n - 2)
                            .mul_ref(&lm(ep(2 * n - 1) + ep(2 * n)))
                            .add_ref(&t.get(D, 2 * k, 2 * n - 1).mul_ref(&li(ep(2 * n)))),
                    at.clone(),
                );
            }
            if 2 * n < nn {
                check("c_{2k} at 2n+1 from 2n", t.get(C, 2 * k, 2 * n + 1) == t.get(C, 2 * k, 2 * n).mul_ref(&lm(ep(2 * n + 1))), at.clone());
                check("d_{2k+1} at 2n+1 from 2n", t.get(D, 2 * k + 1, 2 * n + 1) == t.get(D, 2 * k + 1, 2 * n).mul_ref(&lm(ep(2 * n + 1))), at.clone());
                if n >= 1 {
                    check(
                        "c_{2k+1} at 2n+1 from 2n-1, 2n",
                        t.get(C, 2 * k + 1, 2 * n + 1)
                            == t.get(C, 2 * k + 1, 2 * n - 1)
                                .mul_ref(&lm(-ep(2 * n) - ep(2 * n + 1)))
                                .add_ref(&t.get(C, 2 * k, 2 * n).mul_ref(&li(ep(2 * n + 1)))),
                        at.clone(),
                    );
                    check(
                        "d_{2k} at 2n+1 from 2n-1, 2n",
                        t.get(D, 2 * k, 2 * n + 1)
                            == t.get(D, 2 * k, 2 * n - 1)
                                .mul_ref(&lm(-ep(2 * n) - ep(2 * n + 1)))
                                .add_ref(&t.get(D, 2 * k - 1, 2 * n).mul_ref(&li(ep(2 * n + 1)))),
                        at.clone(),
                    );
                }
            }
        }
    }
    // two-step recursions
    for l in 1..=half {
        let (a, b) = (ep(2 * l - 1), ep(2 * l));
        let p = 2 * l - 2;
        for k in -1..=l {
            let at = format!("l={l} k={k}");
            let g_ = |kind, kk| t.get(kind, kk, p);
            let top = |kind, kk| t.get(kind, kk, 2 * l);
            let sum = |xs: Vec<LaurentInt>| xs.into_iter().fold(LaurentInt::zero(), |acc, x| acc.add_ref(&x));
            check(
                "two-step c_{2k}",
                sum(vec![
                    g_(C, 2 * k).mul_ref(&lm(a + b)),
                    g_(C, 2 * k - 2).mul_ref(&li(a * b)),
                    g_(C, 2 * k - 1).mul_ref(&lm(-a)).mul_ref(&li(b)),
                ]) == top(C, 2 * k),
                at.clone(),
            );
            check(
                "two-step c_{2k+1}",
                sum(vec![g_(C, 2 * k + 1).mul_ref(&lm(-a - b)), g_(C, 2 * k).mul_ref(&lm(-b)).mul_ref(&li(a))])
                    == top(C, 2 * k + 1),
                at.clone(),
            );
            check(
                "two-step d_{2k+1}",
                sum(vec![
                    g_(D, 2 * k + 1).mul_ref(&lm(a + b)),
                    g_(D, 2 * k).mul_ref(&lm(-a)).mul_ref(&li(b)),
                    g_(D, 2 * k - 1).mul_ref(&li(a * b)),
                ]) == top(D, 2 * k + 1),
                at.clone(),
            );
            check(
                "two-step d_{2k}",
                sum(vec![g_(D, 2 * k).mul_ref(&lm(-a - b)), g_(D, 2 * k - 1).mul_ref(&lm(-b)).mul_ref(&li(a))])
                    == top(D, 2 * k),
                at.clone(),
            );
            check(
                "two-step c~_{2k}",
                sum(vec![
                    g_(CTilde, 2 * k).mul_ref(&lm(-a + b)),
                    g_(CTilde, 2 * k - 1).mul_ref(&lm(a)).mul_ref(&li(b)),
                    g_(CTilde, 2 * k - 2).mul_ref(&li(a * b)),
                ]) == top(CTilde, 2 * k),
                at.clone(),
            );
            check(
                "two-step c~_{2k+1}",
                sum(vec![g_(CTilde, 2 * k + 1).mul_ref(&lm(a - b)), g_(CTilde, 2 * k).mul_ref(&lm(-b)).mul_ref(&li(a))])
                    == top(CTilde, 2 * k + 1),
                at.clone(),
            );
            check(
                "two-step d~_{2k+1}",
                sum(vec![
                    g_(DTilde, 2 * k + 1).mul_ref(&lm(-a + b)),
                    g_(DTilde, 2 * k).mul_ref(&lm(a)).mul_ref(&li(b)),
                    g_(DTilde, 2 * k - 1).mul_ref(&li(a * b)),
                ]) == top(DTilde, 2 * k + 1),
                at.clone(),
            );
            check(
                "two-step d~_{2k}",
                sum(vec![g_(DTilde, 2 * k).mul_ref(&lm(a - b)), g_(DTilde, 2 * k - 1).mul_ref(&lm(-b)).mul_ref(&li(a))])
                    == top(DTilde, 2 * k),
                at.clone(),
            );
        }
    }
    // M -> M^-1 against eps -> -eps on even prefixes
    let neg = eps.negate();
    let tn = Table::new(neg.as_slice());
    for l in 0..=half {
        for k in 0..=2 * l {
            for kind in [C, D, CTilde, DTilde] {
                let lhs = t.get(kind, k, 2 * l).bar();
                let rhs = tn.get(kind, k, 2 * l);
                let rhs = if k % 2 == 1 { -rhs } else { rhs };
                check("bar vs negated sequence", lhs == rhs, format!("{kind:?} l={l} k={k}"));
            }
        }
    }
    // symmetric sequences
    for k in 0..=half {
        let at = format!("k={k}");
        check("symmetric: c_{2k+1} = d_{2k+1}", t.get(C, 2 * k + 1, nn) == t.get(D, 2 * k + 1, nn), at.clone());
        check("symmetric: c~_{2k+1} = d~_{2k+1}(M^-1)", t.get(CTilde, 2 * k + 1, nn) == t.get(DTilde, 2 * k + 1, nn).bar(), at.clone());
        let c = t.get(CTilde, 2 * k, nn);
        check("symmetric: c~_{2k} fixed by M -> M^-1 and eps -> -eps", c.bar() == c && tn.get(CTilde, 2 * k, nn) == c, at.clone());
    }
    // c~ and c against each other in lambda~ and lambda
    for l in 1..=half {
        let at = format!("l={l}");
        let tl = |kind, odd: bool, top: i64| series_at(&t, kind, odd, 2 * l, top);
        let lhs = tl(CTilde, true, l - 1);
        check("odd c~ series = odd c series", lhs == lam_to_lt(&tl(C, true, l - 1)), at.clone());
        let lhs = tl(DTilde, true, l - 1);
        check("odd d~ series = odd d series at M^-1", lhs == lam_to_lt(&bar(&tl(D, true, l - 1))), at.clone());
        let lhs = tl(CTilde, false, l);
        let rhs = tl(C, false, l).sub_ref(&z().mul_ref(&tl(C, true, l - 1)));
        check("even c~ series = even c series - z odd c series", lhs == lam_to_lt(&rhs), at.clone());
    }
    rep.push("c/d recursions and symmetries", fail.is_none(), fail.clone().unwrap_or_default());

    // d_{2k} against c~ of the inner subsequence (eps_2, ..., eps_{2l-1}); M -> M^-1 acts on
    // the c~ only, z is left alone
    let mut shift_fail = None;
    for l in 1..=half {
        let inner: Vec<i8> = s[1..(2 * l - 1) as usize].to_vec();
        let ti = Table::new(&inner);
        let p = 2 * l - 2;
        let lhs = lam_to_lt(&series_at(&t, D, false, 2 * l, l - 1));
        let mut rhs = TracePoly::zero();
        for k in 0..l {
            let c = ti.get(CTilde, 2 * k, p).bar().sub_ref(&Laurent::z().mul_ref(&ti.get(CTilde, 2 * k + 1, p).bar()));
            rhs.add_assign_ref(&Poly::monomial(c, k as usize));
        }
        let rhs = rhs.mul_ref(&mono(-ep(1) - ep(2 * l)));
        if lhs != rhs && shift_fail.is_none() {
            shift_fail = Some(l);
        }
    }
    rep.push(
        "sum d_{2k} lambda^k = M^{-eps_1-eps_2l} sum (c~_{2k}(M^-1) - z c~_{2k+1}(M^-1))[inner] Lt^k",
        shift_fail.is_none(),
        shift_fail.map(|l| format!("first mismatch at l = {l}")).unwrap_or_default(),
    );
}

fn series_at(t: &Table, kind: CdKind, odd: bool, n: i64, top: i64) -> TracePoly {
    sum_poly((0..=top).map(|k| t.get(kind, 2 * k + odd as i64, n)).collect())
}

