use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::rational::{self, Rational};

/// Seeds `(alpha, beta)` of a Gibonacci array. Both are strictly positive.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GibParams {
    #[serde(with = "rational::serde_text")]
    alpha: Rational,
    #[serde(with = "rational::serde_text")]
    beta: Rational,
}

impl GibParams {
    pub fn new(alpha: Rational, beta: Rational) -> Result<GibParams> {
        if !alpha.is_positive() {
            return Err(Error::NonPositive("alpha"));
        }
        if !beta.is_positive() {
            return Err(Error::NonPositive("beta"));
        }
        Ok(GibParams { alpha, beta })
    }

    pub fn from_ints(alpha: i64, beta: i64) -> Result<GibParams> {
        GibParams::new(rational::int(alpha), rational::int(beta))
    }

    pub fn fibonacci() -> GibParams {
        GibParams { alpha: Rational::one(), beta: Rational::one() }
    }

    pub fn lucas() -> GibParams {
        GibParams { alpha: rational::int(2), beta: Rational::one() }
    }

    /// `(ratio, 1)`.
    pub fn with_ratio(ratio: Rational) -> Result<GibParams> {
        GibParams::new(ratio, Rational::one())
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// `alpha / beta`.
    pub fn ratio(&self) -> Rational {
        &self.alpha / &self.beta
    }
}

impl fmt::Debug for GibParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GibParams({}, {})", self.alpha, self.beta)
    }
}

impl fmt::Display for GibParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// Rows `0..=max_k` of the right-triangular array, computed once by
/// `g(k, j) = g(k-1, j) + g(k-2, j-1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GibonacciArray {
    params: GibParams,
    #[serde(with = "rows_text")]
    rows: Vec<Vec<Rational>>,
}

fn at(rows: &[Vec<Rational>], k: isize, j: isize) -> Rational {
    if k < 0 || j < 0 {
        return Rational::zero();
    }
    rows.get(k as usize).and_then(|r| r.get(j as usize)).cloned().unwrap_or_else(Rational::zero)
}

impl GibonacciArray {
    pub fn new(params: &GibParams, max_k: usize) -> GibonacciArray {
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(max_k + 1);
        for k in 0..=max_k {
            let row = match k {
                0 => vec![params.alpha.clone()],
                1 => vec![params.beta.clone()],
                _ => (0..=k / 2)
                    .map(|j| {
                        let (k, j) = (k as isize, j as isize);
                        at(&rows, k - 1, j) + at(&rows, k - 2, j - 1)
                    })
                    .collect(),
            };
            rows.push(row);
        }
        GibonacciArray { params: params.clone(), rows }
    }

    pub fn params(&self) -> &GibParams {
        &self.params
    }

    pub fn max_k(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, k: usize) -> Option<&[Rational]> {
        self.rows.get(k).map(Vec::as_slice)
    }

    /// `g(k, j)`, zero outside the triangle.
    pub fn entry(&self, k: usize, j: i64) -> Rational {
        if j < 0 {
            return Rational::zero();
        }
        at(&self.rows, k as isize, j as isize)
    }

    pub fn row_sum(&self, k: usize) -> Option<Rational> {
        self.row(k).map(|r| r.iter().sum())
    }
}

/// Entry `g(k, j)` of the array for `params`; zero when `j` is out of range.
pub fn gib_entry(params: &GibParams, k: usize, j: i64) -> Rational {
    GibonacciArray::new(params, k).entry(k, j)
}

mod rows_text {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::exactnum::rational::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let text = Vec::<Vec<String>>::deserialize(d)?;
        text.iter()
            .map(|r| r.iter().map(|x| parse_rational(x).map_err(serde::de::Error::custom)).collect())
            .collect()
    }
}
