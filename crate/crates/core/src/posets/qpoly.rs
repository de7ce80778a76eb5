use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Integer polynomial in `q`, coefficients ascending, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> QPolynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> QPolynomial {
        QPolynomial::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero() -> QPolynomial {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> QPolynomial {
        QPolynomial::new(vec![c])
    }

    /// `q^e`.
    pub fn monomial(e: usize) -> QPolynomial {
        let mut c = vec![BigInt::zero(); e + 1];
        c[e] = BigInt::one();
        QPolynomial { coeffs: c }
    }

    /// The q-integer `[m] = 1 + q + ... + q^{m-1}`; `[0] = 0`.
    pub fn q_int(m: usize) -> QPolynomial {
        QPolynomial { coeffs: vec![BigInt::one(); m] }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: usize) -> QPolynomial {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); e];
        c.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs: c }
    }

    pub fn scale_int(&self, c: u32) -> QPolynomial {
        QPolynomial::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

impl<'a> Add<&'a QPolynomial> for &'a QPolynomial {
    type Output = QPolynomial;
    fn add(self, o: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPolynomial::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a QPolynomial> for &'a QPolynomial {
    type Output = QPolynomial;
    fn sub(self, o: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPolynomial::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a QPolynomial> for &'a QPolynomial {
    type Output = QPolynomial;
    fn mul(self, o: &QPolynomial) -> QPolynomial {
        if self.is_zero() || o.is_zero() {
            return QPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPolynomial::new(c)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if e == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(&var)?;
        }
        Ok(())
    }
}

impl From<QPolynomial> for Vec<String> {
    fn from(p: QPolynomial) -> Vec<String> {
        p.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl TryFrom<Vec<String>> for QPolynomial {
    type Error = String;
    fn try_from(v: Vec<String>) -> Result<QPolynomial, String> {
        let c = v
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| format!("bad coefficient {s:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QPolynomial::new(c))
    }
}
