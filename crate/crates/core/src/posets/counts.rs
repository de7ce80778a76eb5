use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poset::check_params;
use crate::error::{Error, Result};
use crate::exactnum::rational;
use crate::gibonacci::{build_sa_poly, GibParams};

/// `n^{k mod 2} * G^{alpha,1}_k(n^2)`.
pub fn count_by_formula(n: u32, k: usize, alpha: u32) -> Result<BigInt> {
    check_params(n, alpha)?;
    formula_value(n, k, alpha)
}

/// The same expression with no restriction on `n` and `alpha`.
pub(crate) fn formula_value(n: u32, k: usize, alpha: u32) -> Result<BigInt> {
    let params = GibParams::from_ints(alpha as i64, 1)?;
    let p = build_sa_poly(&params, k as i64)?.poly;
    let n2 = rational::int(n as i64 * n as i64);
    let v = p.eval(&n2) * rational::int(if k % 2 == 1 { n as i64 } else { 1 });
    if !v.is_integer() {
        return Err(Error::Unsupported(format!("non-integral count {v}")));
    }
    Ok(v.to_integer())
}

/// Tuples meeting the coordinate requirements, minus Fibonacci violations
/// by inclusion-exclusion over the adjacency positions, minus the tuples
/// that hit a forbidden `(T_1, T_k)` pair.
pub fn count_by_inclusion_exclusion(n: u32, k: usize, alpha: u32) -> Result<BigInt> {
    check_params(n, alpha)?;
    if k == 0 {
        return Ok(BigInt::from(alpha));
    }
    let mut total = ie_count(n, k, &[]);
    if k >= 2 {
        let nk = n * k as u32;
        for i in 1..alpha {
            total -= ie_count(n, k, &[(1, i), (k, nk - i + 1)]);
        }
    }
    Ok(total)
}

/// Tuples with the given 1-based coordinates pinned that meet the
/// coordinate and Fibonacci requirements.
///
/// A failed adjacency `T_{j+1} = T_j + 1` forces `T_j = jn` and
/// `T_{j+1} = jn + 1`, so each subset of adjacencies either contradicts
/// itself (or a pin) or leaves `n^{free}` tuples.
pub fn ie_count(n: u32, k: usize, fixed: &[(usize, u32)]) -> BigInt {
    let mut forced: Vec<Option<u32>> = vec![None; k + 1];
    for &(j, v) in fixed {
        if j == 0 || j > k {
            return BigInt::zero();
        }
        let lo = (j as u32 - 1) * n + 1;
        if v < lo || v > lo + n - 1 {
            return BigInt::zero();
        }
        match forced[j] {
            Some(w) if w != v => return BigInt::zero(),
            _ => forced[j] = Some(v),
        }
    }
    if n == 1 {
        // one tuple; the only question is whether it breaks adjacency
        return if k >= 2 { BigInt::zero() } else { BigInt::one() };
    }
    let base = BigInt::from(n);
    let mut total = BigInt::zero();
    fn go(
        j: usize,
        k: usize,
        n: u32,
        forced: &mut [Option<u32>],
        odd: bool,
        base: &BigInt,
        total: &mut BigInt,
    ) {
        if j == k {
            let free = forced[1..].iter().filter(|f| f.is_none()).count();
            let term = num_traits::pow(base.clone(), free);
            if odd {
                *total -= term;
            } else {
                *total += term;
            }
            return;
        }
        go(j + 1, k, n, forced, odd, base, total);
        let (a, b) = (j as u32 * n, j as u32 * n + 1);
        let ok = |f: Option<u32>, v: u32| f.is_none_or(|w| w == v);
        if ok(forced[j], a) && ok(forced[j + 1], b) {
            let saved = (forced[j], forced[j + 1]);
            forced[j] = Some(a);
            forced[j + 1] = Some(b);
            go(j + 1, k, n, forced, !odd, base, total);
            forced[j] = saved.0;
            forced[j + 1] = saved.1;
        }
    }
    go(1, k, n, &mut forced, false, &base, &mut total);
    total
}
