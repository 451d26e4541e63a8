//! Epsilon sequences of two-bridge knots, fractions, and the census.

use crate::error::RileyError;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Symmetric sequence of signs (eps_1, ..., eps_{alpha-1}).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EpsilonSeq(Vec<i8>);

impl EpsilonSeq {
    pub fn new(v: Vec<i8>) -> Result<Self, RileyError> {
        if v.is_empty() {
            return Err(RileyError::Parse("empty sequence".into()));
        }
        if v.len() % 2 == 1 {
            return Err(RileyError::OddLength(v.len()));
        }
        if let Some(i) = v.iter().position(|&x| x != 1 && x != -1) {
            return Err(RileyError::NonUnitEntry(i + 1));
        }
        let n = v.len();
        if let Some(i) = (0..n).find(|&i| v[i] != v[n - 1 - i]) {
            return Err(RileyError::NotSymmetric(i + 1));
        }
        Ok(EpsilonSeq(v))
    }

    /// Accepts strings over {+, -} (the Unicode minus sign is also read as -).
    pub fn parse(s: &str) -> Result<Self, RileyError> {
        let v = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '\u{2212}' => Ok(-1),
                _ => Err(RileyError::Parse(format!("unexpected character {c:?} in epsilon string"))),
            })
            .collect::<Result<Vec<i8>, _>>()?;
        Self::new(v)
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// alpha = length + 1
    pub fn alpha(&self) -> usize {
        self.0.len() + 1
    }

    /// 1-based access.
    pub fn eps(&self, i: usize) -> i64 {
        self.0[i - 1] as i64
    }

    pub fn sigma(&self) -> i64 {
        self.0.iter().map(|&x| x as i64).sum()
    }

    pub fn negate(&self) -> Self {
        EpsilonSeq(self.0.iter().map(|x| -x).collect())
    }

    /// e(n) with eps = (e_n, ..., e_1, e_1, ..., e_n).
    pub fn half(&self) -> HalfSeq {
        let n = self.0.len() / 2;
        HalfSeq((1..=n).map(|k| self.0[n - k]).collect())
    }

    /// The sequence with both ends removed; None below length 4.
    pub fn strip_ends(&self) -> Option<Self> {
        (self.0.len() >= 4).then(|| EpsilonSeq(self.0[1..self.0.len() - 1].to_vec()))
    }
}

impl fmt::Display for EpsilonSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{}", if x > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// Half sequence (e_1, ..., e_n).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HalfSeq(pub Vec<i8>);

impl HalfSeq {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// 1-based.
    pub fn e(&self, k: usize) -> i64 {
        self.0[k - 1] as i64
    }

    /// delta_1 = 1, delta_k = e_{k-1} e_k.
    pub fn delta(&self) -> Vec<i64> {
        (1..=self.n()).map(|k| if k == 1 { 1 } else { self.e(k - 1) * self.e(k) }).collect()
    }

    /// beta_k = sum_{i<=k} delta_1 ... delta_i, which equals e_1 (e_1 + ... + e_k).
    pub fn beta_seq(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.n());
        let (mut prod, mut acc) = (1i64, 0i64);
        for d in self.delta() {
            prod *= d;
            acc += prod;
            out.push(acc);
        }
        out
    }

    pub fn full(&self) -> EpsilonSeq {
        let mut v: Vec<i8> = self.0.iter().rev().cloned().collect();
        v.extend(self.0.iter());
        EpsilonSeq(v)
    }
}

/// S(alpha, beta) with odd alpha, 0 < beta < alpha, gcd(alpha, beta) = 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoBridgeFraction {
    pub alpha: u64,
    pub beta: u64,
}

impl TwoBridgeFraction {
    pub fn new(alpha: u64, beta: u64) -> Result<Self, RileyError> {
        if alpha < 3 || alpha.is_multiple_of(2) {
            return Err(RileyError::InvalidFraction(format!("alpha = {alpha} must be odd and at least 3")));
        }
        if beta == 0 || beta >= alpha || alpha.gcd(&beta) != 1 {
            return Err(RileyError::InvalidFraction(format!("beta = {beta} must be a unit in (0, {alpha})")));
        }
        Ok(TwoBridgeFraction { alpha, beta })
    }

    pub fn parse(s: &str) -> Result<Self, RileyError> {
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| RileyError::Parse(format!("expected alpha/beta, got {s:?}")))?;
        let a: u64 = a.trim().parse().map_err(|_| RileyError::Parse(format!("bad alpha in {s:?}")))?;
        let b: i64 = b.trim().parse().map_err(|_| RileyError::Parse(format!("bad beta in {s:?}")))?;
        Ok(normalize_fraction(a, b)?.fraction)
    }

    pub fn mirror(&self) -> Self {
        TwoBridgeFraction { alpha: self.alpha, beta: self.alpha - self.beta }
    }

    pub fn inverse(&self) -> Self {
        TwoBridgeFraction { alpha: self.alpha, beta: inv_mod(self.beta, self.alpha) }
    }
}

impl fmt::Display for TwoBridgeFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.alpha, self.beta)
    }
}

fn inv_mod(b: u64, a: u64) -> u64 {
    let e = (b as i64).extended_gcd(&(a as i64));
    e.x.rem_euclid(a as i64) as u64
}

/// eps_i = (-1)^floor(i b / alpha), where b is beta when beta is odd and beta - alpha
/// otherwise; only an odd representative yields a symmetric sequence.
pub fn epsilon_from_fraction(fr: TwoBridgeFraction) -> EpsilonSeq {
    let a = fr.alpha as i64;
    let b = if fr.beta % 2 == 1 { fr.beta as i64 } else { fr.beta as i64 - a };
    let v = (1..a)
        .map(|i| if (i * b).div_euclid(a) % 2 == 0 { 1 } else { -1 })
        .collect();
    EpsilonSeq::new(v).expect("odd representative gives a symmetric sequence")
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FractionReport {
    pub fraction: TwoBridgeFraction,
    /// {beta, beta^-1 mod alpha}, sorted, deduplicated.
    pub orbit: Vec<u64>,
    pub mirror: u64,
}

pub fn normalize_fraction(alpha: u64, beta_raw: i64) -> Result<FractionReport, RileyError> {
    if alpha < 3 || alpha.is_multiple_of(2) {
        return Err(RileyError::InvalidFraction(format!("alpha = {alpha} must be odd and at least 3")));
    }
    let beta = beta_raw.rem_euclid(alpha as i64) as u64;
    let fraction = TwoBridgeFraction::new(alpha, beta)?;
    let mut orbit = vec![beta, inv_mod(beta, alpha)];
    orbit.sort_unstable();
    orbit.dedup();
    Ok(FractionReport { fraction, orbit, mirror: alpha - beta })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CensusEntry {
    pub fraction: TwoBridgeFraction,
    /// Canonical representative of the mirror image's orbit.
    pub mirror: TwoBridgeFraction,
    /// The mirror lies in the same orbit.
    pub amphichiral: bool,
}

fn canonical(fr: TwoBridgeFraction) -> TwoBridgeFraction {
    TwoBridgeFraction { alpha: fr.alpha, beta: fr.beta.min(inv_mod(fr.beta, fr.alpha)) }
}

/// One entry per orbit {beta, beta^-1} for each odd alpha in [3, max_alpha], represented
/// by the smallest member; mirror images are separate entries cross-linked by `mirror`.
pub fn census(max_alpha: u64) -> Vec<CensusEntry> {
    let mut out = Vec::new();
    for alpha in (3..=max_alpha).step_by(2) {
        for beta in 1..alpha {
            if alpha.gcd(&beta) != 1 {
                continue;
            }
            let fr = TwoBridgeFraction { alpha, beta };
            if canonical(fr) != fr {
                continue;
            }
            let mirror = canonical(fr.mirror());
            out.push(CensusEntry { fraction: fr, mirror, amphichiral: mirror == fr });
        }
    }
    out
}

/// A knot given either as "alpha/beta" or as an epsilon string.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KnotArg {
    pub fraction: Option<TwoBridgeFraction>,
    pub eps: EpsilonSeq,
}

pub fn parse_knot_arg(s: &str) -> Result<KnotArg, RileyError> {
    if s.contains('/') {
        let fr = TwoBridgeFraction::parse(s)?;
        Ok(KnotArg { fraction: Some(fr), eps: epsilon_from_fraction(fr) })
    } else {
        Ok(KnotArg { fraction: None, eps: EpsilonSeq::parse(s)? })
    }
}

#[cfg(test)]
mod tests;
