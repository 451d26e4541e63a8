use crate::exactalg::{Laurent, Ring};
use crate::LaurentInt;
use num_bigint::BigInt;
use num_traits::Zero;

/// The four coefficient families. C and CTilde sum over index tuples starting at an odd
/// position, D and DTilde over tuples starting at an even one; the tilde families use the
/// alternating exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CdKind {
    C,
    D,
    CTilde,
    DTilde,
}

/// Value of the family at (k, n), taking eps_1..eps_n from `eps`. k = -1 and k > n give 0;
/// k = 0 is the single empty tuple.
pub fn cd_enumerate(eps: &[i8], kind: CdKind, k: i64, n: usize) -> LaurentInt {
    if k < 0 || k as usize > n {
        return Laurent::zero();
    }
    cd_family(eps, kind, n).swap_remove(k as usize)
}

/// All values k = 0..=n at once, by walking every admissible tuple
/// 0 < i_1 < ... < i_k <= n with parities alternating.
pub fn cd_family(eps: &[i8], kind: CdKind, n: usize) -> Vec<LaurentInt> {
    assert!(n <= eps.len(), "prefix length {n} exceeds sequence length {}", eps.len());
    let mut acc: Vec<Vec<(i64, i64, i64)>> = vec![Vec::new(); n + 1];
    let first_odd = matches!(kind, CdKind::C | CdKind::CTilde);
    walk(eps, n, first_odd, 1, 0, 0, 0, 0, 1, &mut acc);
    let neg = matches!(kind, CdKind::D | CdKind::DTilde);
    let alt = matches!(kind, CdKind::CTilde | CdKind::DTilde);
    acc.into_iter()
        .map(|terms| {
            let mut l = LaurentInt::zero();
            for &(hat, hat_alt, sign) in &terms {
                let e = if alt { hat_alt } else { hat };
                let e = if neg { -e } else { e };
                l.add_assign_ref(&Laurent::monomial(BigInt::from(sign), e));
            }
            l
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn walk(
    eps: &[i8],
    n: usize,
    first_odd: bool,
    j: usize,
    chosen: usize,
    unchosen: usize,
    hat: i64,
    hat_alt: i64,
    sign: i64,
    acc: &mut [Vec<(i64, i64, i64)>],
) {
    if j > n {
        acc[chosen].push((hat, hat_alt, sign));
        return;
    }
    let ej = eps[j - 1] as i64;
    // the (chosen+1)-th index must be odd iff (chosen even) == first_odd
    let want_odd = chosen.is_multiple_of(2) == first_odd;
    if (j % 2 == 1) == want_odd {
        walk(eps, n, first_odd, j + 1, chosen + 1, unchosen, hat, hat_alt, sign * ej, acc);
    }
    let s_hat = if chosen.is_multiple_of(2) { 1 } else { -1 };
    let s_alt = if unchosen.is_multiple_of(2) { -1 } else { 1 };
    walk(eps, n, first_odd, j + 1, chosen, unchosen + 1, hat + s_hat * ej, hat_alt + s_alt * ej, sign, acc);
}
