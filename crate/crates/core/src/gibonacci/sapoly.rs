use serde::{Deserialize, Serialize};

use super::array::{GibParams, GibonacciArray};
use crate::error::{Error, Result};
use crate::exactnum::rational::{self, Rational};
use crate::exactnum::Poly;

/// The sign-alternating Gibonacci polynomial of index `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SAPolynomial {
    pub k: i64,
    pub params: GibParams,
    pub poly: Poly,
}

/// `G_{-1}, G_0, ..., G_{max_k}` built by
/// `G_k = x^{(k-1) mod 2} G_{k-1} - G_{k-2}` with `G_{-1} = 0`.
#[derive(Debug, Clone)]
pub struct SaSequence {
    params: GibParams,
    polys: Vec<Poly>,
}

impl SaSequence {
    pub fn new(params: &GibParams, max_k: usize) -> SaSequence {
        let mut polys = Vec::with_capacity(max_k + 2);
        polys.push(Poly::zero());
        polys.push(Poly::constant(params.alpha().clone()));
        for k in 1..=max_k {
            let prev = &polys[k];
            let prev2 = &polys[k - 1];
            let lead = if k % 2 == 0 { prev.shift(1) } else { prev.clone() };
            let next = if k == 1 {
                // G_1 = beta; the recurrence with G_{-1} = 0 would give G_0
                Poly::constant(params.beta().clone())
            } else {
                &lead - prev2
            };
            polys.push(next);
        }
        SaSequence { params: params.clone(), polys }
    }

    pub fn params(&self) -> &GibParams {
        &self.params
    }

    pub fn max_k(&self) -> i64 {
        self.polys.len() as i64 - 2
    }

    /// `G_k` for `-1 <= k <= max_k`.
    pub fn get(&self, k: i64) -> &Poly {
        assert!(k >= -1 && k <= self.max_k(), "index {k} outside the sequence");
        &self.polys[(k + 1) as usize]
    }
}

pub fn build_sa_poly(params: &GibParams, k: i64) -> Result<SAPolynomial> {
    if k < -1 {
        return Err(Error::OutOfRange(format!("k = {k} must be at least -1")));
    }
    let poly = SaSequence::new(params, k.max(0) as usize).get(k).clone();
    Ok(SAPolynomial { k, params: params.clone(), poly })
}

/// Row `k` of the array read with alternating signs: the coefficient of
/// `x^{floor(k/2) - j}` is `(-1)^j g(k, j)`.
pub fn sa_poly_from_array(array: &GibonacciArray, k: usize) -> Poly {
    let row = array.row(k).expect("row within the array");
    let d = k / 2;
    let mut coeffs = vec![Rational::from_integer(0.into()); d + 1];
    for (j, g) in row.iter().enumerate() {
        coeffs[d - j] = if j % 2 == 0 { g.clone() } else { -g.clone() };
    }
    Poly::new(coeffs)
}

/// `G^{a,b}_k = x^{(k-1) mod 2} b G^{1,1}_{k-1} - a G^{1,1}_{k-2}`.
pub fn fib_decomposition_check(params: &GibParams, k: i64) -> Result<bool> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("k = {k} must be at least 2")));
    }
    let g = SaSequence::new(params, k as usize);
    let f = SaSequence::new(&GibParams::fibonacci(), k as usize);
    let mut first = f.get(k - 1).scale(params.beta());
    if (k - 1) % 2 == 1 {
        first = first.shift(1);
    }
    let rhs = &first - &f.get(k - 2).scale(params.alpha());
    Ok(&rhs == g.get(k))
}

/// `W_0 = 1`, `W_1 = 1 + ratio x`, `W_k = W_{k-1} + x W_{k-2}`.
pub fn w_poly(ratio: &Rational, k: usize) -> Result<Poly> {
    Ok(w_sequence(ratio, k)?.pop().expect("nonempty"))
}

/// `W_0, ..., W_k`.
pub fn w_sequence(ratio: &Rational, k: usize) -> Result<Vec<Poly>> {
    if *ratio <= rational::int(0) {
        return Err(Error::NonPositive("ratio"));
    }
    let mut ws = vec![Poly::one(), Poly::new(vec![rational::int(1), ratio.clone()])];
    for i in 2..=k {
        let next = &ws[i - 1] + &ws[i - 2].shift(1);
        ws.push(next);
    }
    ws.truncate(k + 1);
    Ok(ws)
}

/// `G^{ratio,1}_k(x) = x^{floor(k/2)} W_{k-1}(-1/x)` as polynomials.
pub fn w_transform_check(ratio: &Rational, k: i64) -> Result<bool> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("k = {k} must be at least 2")));
    }
    let w = w_poly(ratio, (k - 1) as usize)?;
    let lhs = w.neg_reciprocal_transform((k / 2) as usize);
    let g = build_sa_poly(&GibParams::with_ratio(ratio.clone())?, k)?;
    Ok(lhs == g.poly)
}

/// `G^{alpha,beta}_k(4)` from the closed forms
/// `G^{r,1}_{2m}(4) = -(2m-1) r + 4m` and `G^{r,1}_{2m+1}(4) = -m r + 2m + 1`,
/// scaled by `beta`.
pub fn eval_at_four(params: &GibParams, k: usize) -> Rational {
    if k == 0 {
        return params.alpha().clone();
    }
    let r = params.ratio();
    let m = rational::int((k / 2) as i64);
    let one = rational::int(1);
    let two = rational::int(2);
    let v = if k.is_multiple_of(2) {
        -(&two * &m - &one) * &r + rational::int(4) * &m
    } else {
        -&m * &r + &two * &m + &one
    };
    params.beta() * v
}
