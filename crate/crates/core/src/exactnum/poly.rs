//! Dense univariate polynomials with rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{self, Rational, Sign};
use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are never stored,
/// so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

/// The binary operations exposed by [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    /// Multiply `a` by the constant term of `b`; `b` must be a constant.
    ScalarMul,
    /// Remainder of `a` modulo `b`.
    ModReduce,
}

pub fn poly_arith(a: &Poly, b: &Poly, op: PolyOp) -> Result<Poly> {
    Ok(match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
        PolyOp::ScalarMul => {
            if b.degree().unwrap_or(0) > 0 {
                return Err(Error::Unsupported(
                    "scalar multiplication needs a constant right operand".into(),
                ));
            }
            a.scale(&b.coeff(0))
        }
        PolyOp::ModReduce => a.rem(b)?,
    })
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Poly {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::new(vec![c])
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    /// `c * x^n`.
    pub fn monomial(c: Rational, n: usize) -> Poly {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Poly::new(coeffs)
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Poly {
        Poly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by `x^n`.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> Sign {
        Sign::of(&self.eval(x))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * rational::int(i as i64)).collect())
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::ZeroDivisor)?;
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient; errors if `d` is zero.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.0)
    }

    /// The same polynomial scaled by a positive rational so that all
    /// coefficients are coprime integers. Signs are preserved.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lcm_den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(lcm_den.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Poly::new(ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.leading();
        self.scale(&l.recip())
    }

    /// Monic greatest common divisor; remainders are reduced to primitive
    /// form after each division step to limit coefficient growth.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// `self / gcd(self, self')`: same roots, each with multiplicity one.
    pub fn square_free_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd is nonzero").primitive()
    }

    /// `x^n * self(-1/x)` for `n >= deg self`, expanded as a polynomial.
    pub fn neg_reciprocal_transform(&self, n: usize) -> Poly {
        let d = self.degree().map_or(0, |d| d);
        assert!(n >= d || self.is_zero(), "n must be at least the degree");
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            let c = if i % 2 == 1 { -c.clone() } else { c.clone() };
            coeffs[n - i] = c;
        }
        Poly::new(coeffs)
    }

    /// Composition `self(other(x))`.
    pub fn compose(&self, other: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Sign of the leading coefficient, i.e. the sign at `+infinity`.
    pub fn sign_at_pos_inf(&self) -> Sign {
        Sign::of(&self.leading())
    }

    pub fn sign_at_neg_inf(&self) -> Sign {
        let s = self.sign_at_pos_inf();
        match self.degree() {
            Some(d) if d % 2 == 1 => s.negate(),
            _ => s,
        }
    }

    /// A bound `M` with every real root in `(-M, M)` (Cauchy bound plus one).
    pub fn root_bound(&self) -> Rational {
        let lead = self.leading().abs();
        let m = self
            .coeffs
            .iter()
            .take(self.coeffs.len().saturating_sub(1))
            .map(|c| c.abs() / &lead)
            .fold(Rational::zero(), |a, b| if b > a { b } else { a });
        m + rational::int(2)
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

fn fmt_coeff_term(c: &Rational, power: usize, var: &str) -> String {
    let mono = match power {
        0 => String::new(),
        1 => var.to_string(),
        p => format!("{var}^{p}"),
    };
    if power == 0 {
        return c.to_string();
    }
    if c.is_one() {
        mono
    } else if c.is_integer() {
        format!("{c}{mono}")
    } else {
        format!("({c}){mono}")
    }
}

impl Poly {
    /// Human-readable form in the given variable name, e.g. `x^3 - 7x^2 + 14x - 7`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let term = fmt_coeff_term(&c.abs(), i, var);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational::serde_text_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Poly, D::Error> {
        Ok(Poly::new(rational::serde_text_vec::deserialize(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{frac, int};

    #[test]
    fn additive_identity_and_expansion() {
        let p = Poly::from_ints(&[-4, 1]);
        assert_eq!(poly_arith(&p, &Poly::zero(), PolyOp::Add).unwrap(), p);
        let q = Poly::from_ints(&[-2, 1]);
        assert_eq!(poly_arith(&q, &q, PolyOp::Mul).unwrap(), Poly::from_ints(&[4, -4, 1]));
        assert_eq!(
            poly_arith(&q, &Poly::constant(int(3)), PolyOp::ScalarMul).unwrap(),
            Poly::from_ints(&[-6, 3])
        );
        assert!(poly_arith(&q, &q, PolyOp::ScalarMul).is_err());
        assert!(poly_arith(&q, &q, PolyOp::Sub).unwrap().is_zero());
    }

    #[test]
    fn mod_reduce_cubic_by_quadratic() {
        // x^3 = (x/2 + 11/4)(2x^2 - 11x + 12) + (97/4 x - 33)
        // worked by hand: x^3 - (x/2)(2x^2-11x+12) = 11/2 x^2 - 6x;
        // 11/2 x^2 - 6x - (11/4)(2x^2-11x+12) = (121/4 - 6) x - 33 = 97/4 x - 33
        let x3 = Poly::monomial(int(1), 3);
        let d = Poly::from_ints(&[12, -11, 2]);
        let r = poly_arith(&x3, &d, PolyOp::ModReduce).unwrap();
        assert_eq!(r, Poly::new(vec![int(-33), frac(97, 4)]));
        let (q, r2) = x3.div_rem(&d).unwrap();
        assert_eq!(q, Poly::new(vec![frac(11, 4), frac(1, 2)]));
        assert_eq!(r, r2);
        assert_eq!(x3.rem(&Poly::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn horner_evaluation() {
        let p = Poly::from_ints(&[-7, 14, -7, 1]);
        assert_eq!(p.eval(&int(1)), int(1));
        assert_eq!(p.eval(&int(0)), int(-7));
        let q = Poly::from_ints(&[12, -11, 2]);
        assert_eq!(q.eval(&int(4)), int(0));
        assert_eq!(q.eval(&frac(3, 2)), int(0));
    }

    #[test]
    fn gcd_and_square_free_part() {
        let a = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[-3, 1]);
        let b = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[5, 1]);
        assert_eq!(a.gcd(&b), Poly::from_ints(&[-1, 1]));
        let sq = &a * &Poly::from_ints(&[-1, 1]);
        assert_eq!(sq.square_free_part(), a);
        assert_eq!(a.gcd(&Poly::zero()), a.monic());
    }

    #[test]
    fn display_form() {
        assert_eq!(Poly::from_ints(&[-7, 14, -7, 1]).to_string(), "x^3 - 7x^2 + 14x - 7");
        assert_eq!(Poly::from_ints(&[0, -1]).to_string(), "-x");
        assert_eq!(Poly::new(vec![int(1), frac(3, 2)]).to_string(), "(3/2)x + 1");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn neg_reciprocal_transform_matches_substitution() {
        // W(x) = 1 + 2x ; x * W(-1/x) = x - 2
        let w = Poly::from_ints(&[1, 2]);
        assert_eq!(w.neg_reciprocal_transform(1), Poly::from_ints(&[-2, 1]));
    }

    #[test]
    fn serde_as_rational_strings() {
        let p = Poly::new(vec![frac(-3, 2), int(0), int(2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["-3/2","0","2"]"#);
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
