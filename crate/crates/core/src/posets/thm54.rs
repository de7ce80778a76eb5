use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::counts::count_by_formula;
use super::poset::{build_poset, check_params};
use super::qpoly::QPolynomial;
use super::triangle::SymTriangle;
use crate::error::{Error, Result};
use crate::exactnum::rational::{self, Rational};
use crate::gibonacci::QuadElem;

/// Label prefix of the split identity with the tail `[n] - [n-alpha]`,
/// which fails for `alpha >= 2`.
pub const PRINTED_SPLIT: &str = "split, printed tail";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub k: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm54Report {
    pub alpha: u32,
    pub n: u32,
    pub k_max: usize,
    pub checks: Vec<IdentityCheck>,
    /// Poset sizes for `k = 0..=k_max`.
    pub cardinalities: Vec<String>,
}

impl Thm54Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// `(r_2^k (n - alpha r_1) - r_1^k (n - alpha r_2)) / (r_2 - r_1)`, with
/// `r_1 < r_2` the roots of `x^2 - n x + 1`, computed in `Q(sqrt(n^2 - 4))`.
/// For `n = 2` the roots coincide and the value is `k + 1`.
pub fn closed_form(alpha: u32, n: u32, k: usize) -> Result<Rational> {
    if n == 2 {
        if alpha != 1 {
            return Err(Error::PosetParams { n, alpha });
        }
        return Ok(rational::int(k as i64 + 1));
    }
    if n < 2 {
        return Err(Error::PosetParams { n, alpha });
    }
    let nn = rational::int(n as i64);
    let a = rational::int(alpha as i64);
    let d = rational::int(n as i64 * n as i64 - 4);
    let r2 = QuadElem::from_halves(nn.clone(), rational::int(1), &d);
    let r1 = QuadElem::from_halves(nn.clone(), rational::int(-1), &d);
    let lhs = r2.pow(k as u64).mul(&r1.scale(&-a.clone()).add_rational(&nn));
    let rhs = r1.pow(k as u64).mul(&r2.scale(&-a).add_rational(&nn));
    let inv = r2.sub(&r1).checked_inv().ok_or(Error::ZeroDivisor)?;
    lhs.sub(&rhs)
        .mul(&inv)
        .as_rational()
        .ok_or_else(|| Error::Unsupported("closed form left the rationals".into()))
}

/// The rank generating function identities as q-polynomial equalities, the
/// split over `H^(1)` both with the printed tail `[n] - [n-alpha]` and
/// with the tail `alpha q^{n-1}`, for `2 <= k <= k_max`,
/// the conventions at `k = 0, 1`, and part B for the three cardinality
/// sequences with the closed form.
pub fn verify_theorem54(alpha: u32, n: u32, k_max: usize) -> Result<Thm54Report> {
    check_params(n, alpha)?;
    if k_max < 2 {
        return Err(Error::OutOfRange(format!("k_max = {k_max} must be at least 2")));
    }
    let qn = QPolynomial::q_int(n as usize);
    let qn1 = QPolynomial::monomial(n as usize - 1);
    let tail = &qn - &QPolynomial::q_int((n - alpha) as usize);
    // removing (T_1, T_k) = (i, nk - i + 1) costs q^{n-i} q^{i-1} H^(1)_{k-2}
    let alpha_tail = QPolynomial::monomial(n as usize - 1).scale_int(alpha);
    let tri = SymTriangle::new(alpha, n, k_max);
    let tri1 = SymTriangle::new(1, n, k_max);
    let a: Vec<QPolynomial> = (0..=k_max).map(|k| tri.polynomial(k)).collect();
    let a1: Vec<QPolynomial> = (0..=k_max).map(|k| tri1.polynomial(k)).collect();
    let mut h = Vec::new();
    let mut h1 = Vec::new();
    for k in 0..=k_max {
        h.push(build_poset(n, k, alpha)?.rank_generating_function());
        h1.push(build_poset(n, k, 1)?.rank_generating_function());
    }

    let mut checks = Vec::new();
    let mut push = |identity: &str, k: usize, passed: bool| {
        checks.push(IdentityCheck { identity: identity.to_string(), k, passed });
    };
    let alpha_poly = QPolynomial::constant(BigInt::from(alpha));
    push("A_0 = alpha = H_0", 0, a[0] == alpha_poly && h[0] == alpha_poly);
    push("A_1 = [n] = H_1", 1, a[1] == qn && h[1] == qn);
    for k in 2..=k_max {
        let rec = |p: &[QPolynomial]| &(&qn * &p[k - 1]) - &(&qn1 * &p[k - 2]);
        push("triangle recurrence: A_k = [n]A_{k-1} - q^{n-1}A_{k-2}", k, a[k] == rec(&a));
        push("alpha = 1 poset is the triangle: H^(1)_k = A^(1)_k", k, h1[k] == a1[k]);
        let three = &(&qn * &h1[k - 1]) - &(&tail * &h1[k - 2]);
        push(
            &format!("{PRINTED_SPLIT}: H_k = [n]H^(1)_{{k-1}} - ([n]-[n-alpha])H^(1)_{{k-2}}"),
            k,
            h[k] == three,
        );
        let corrected = &(&qn * &h1[k - 1]) - &(&alpha_tail * &h1[k - 2]);
        push("split, corrected tail: H_k = [n]H^(1)_{k-1} - alpha q^{n-1}H^(1)_{k-2}", k, h[k] == corrected);
        push("poset recurrence: H_k = [n]H_{k-1} - q^{n-1}H_{k-2}", k, h[k] == rec(&h));
        push("poset is the triangle: H_k = A_k", k, h[k] == a[k]);
    }

    let xa: Vec<BigInt> = a.iter().map(|p| p.at_one()).collect();
    let xh: Vec<BigInt> = h.iter().map(|p| p.at_one()).collect();
    let xg = (0..=k_max).map(|k| count_by_formula(n, k, alpha)).collect::<Result<Vec<_>>>()?;
    let nb = BigInt::from(n);
    for (name, xs) in [("A", &xa), ("G", &xg), ("H", &xh)] {
        let init = xs[0] == BigInt::from(alpha) && xs[1] == nb;
        push(&format!("sizes: {name}_0 = alpha, {name}_1 = n"), 0, init);
        for k in 2..=k_max {
            let ok = xs[k] == &nb * &xs[k - 1] - &xs[k - 2];
            push(&format!("sizes: {name}_k = n {name}_{{k-1}} - {name}_{{k-2}}"), k, ok);
        }
    }
    for k in 0..=k_max {
        let cf = closed_form(alpha, n, k)?;
        let ok = [&xa, &xg, &xh].iter().all(|xs| cf == Rational::from_integer(xs[k].clone()));
        push("sizes: closed form", k, ok);
    }

    Ok(Thm54Report { alpha, n, k_max, checks, cardinalities: xh.iter().map(|v| v.to_string()).collect() })
}
