use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::qpoly::QPolynomial;

/// Rows of the symmetric (alpha; n) triangle. Row `k` stores the regular
/// entries for `r = -k(n-1), -k(n-1)+2, ..., k(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TriangleText", into = "TriangleText")]
pub struct SymTriangle {
    pub alpha: u32,
    pub n: u32,
    values: Vec<Vec<BigInt>>,
}

#[derive(Serialize, Deserialize)]
struct TriangleText {
    alpha: u32,
    n: u32,
    rows: Vec<Vec<String>>,
}

impl From<SymTriangle> for TriangleText {
    fn from(t: SymTriangle) -> TriangleText {
        let rows = t.values.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        TriangleText { alpha: t.alpha, n: t.n, rows }
    }
}

impl TryFrom<TriangleText> for SymTriangle {
    type Error = String;
    fn try_from(t: TriangleText) -> Result<SymTriangle, String> {
        let values = t
            .rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<BigInt>().map_err(|e| e.to_string())).collect())
            .collect::<Result<_, _>>()?;
        Ok(SymTriangle { alpha: t.alpha, n: t.n, values })
    }
}

impl SymTriangle {
    pub fn new(alpha: u32, n: u32, max_k: usize) -> SymTriangle {
        assert!(n >= 1, "n must be positive");
        let mut t = SymTriangle { alpha, n, values: vec![vec![BigInt::from(alpha)]] };
        if max_k >= 1 {
            t.values.push(vec![BigInt::one(); n as usize]);
        }
        let w = n as i64 - 1;
        for k in 2..=max_k {
            let row = t
                .indices(k)
                .map(|r| {
                    let up: BigInt = (0..n as i64).map(|i| t.get(k - 1, r - w + 2 * i)).sum();
                    up - t.get(k - 2, r)
                })
                .collect();
            t.values.push(row);
        }
        t
    }

    pub fn max_k(&self) -> usize {
        self.values.len() - 1
    }

    /// `I_{n,k}` in ascending order.
    pub fn indices(&self, k: usize) -> impl Iterator<Item = i64> {
        let top = k as i64 * (self.n as i64 - 1);
        (0..=top).map(move |i| -top + 2 * i)
    }

    /// Zero off the regular positions and past the computed rows.
    pub fn get(&self, k: usize, r: i64) -> BigInt {
        let top = k as i64 * (self.n as i64 - 1);
        if r < -top || r > top || (r + top) % 2 != 0 {
            return BigInt::zero();
        }
        self.values.get(k).map_or_else(BigInt::zero, |row| row[((r + top) / 2) as usize].clone())
    }

    pub fn row(&self, k: usize) -> &[BigInt] {
        &self.values[k]
    }

    /// `A_k(q) = sum_r a_{k,r} q^{(k(n-1) - r)/2}`.
    pub fn polynomial(&self, k: usize) -> QPolynomial {
        QPolynomial::new(self.values[k].iter().rev().cloned().collect())
    }

    pub fn rows_palindromic(&self) -> bool {
        self.values.iter().all(|r| r.iter().eq(r.iter().rev()))
    }

    pub fn all_positive(&self) -> bool {
        self.values.iter().all(|r| r.iter().all(|v| v > &BigInt::zero()))
    }
}

pub fn triangle_row(alpha: u32, n: u32, k: usize) -> Vec<BigInt> {
    SymTriangle::new(alpha, n, k).row(k).to_vec()
}

pub fn triangle_polynomial(alpha: u32, n: u32, k: usize) -> QPolynomial {
    SymTriangle::new(alpha, n, k).polynomial(k)
}
