//! Eigenvalue (Binet-type) evaluation of the sign-alternating polynomials.
//!
//! With `D = x^2 - 4x` the eigenvalues are `lambda, kappa = (x - 2 +- sqrt D)/2`.
//! Exact work happens in the ring `Q[t]/(t^2 - D)`, which is a field when `D`
//! is not a rational square. Approximate work uses rational complex
//! intervals, rounded outward to a binary grid.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::array::GibParams;
use super::sapoly::build_sa_poly;
use crate::error::{Error, Result};
use crate::exactnum::interval::{exact_sqrt, Interval};
use crate::exactnum::rational::{self, Rational};

/// `a + b t` in `Q[t]/(t^2 - d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadElem {
    pub a: Rational,
    pub b: Rational,
    pub d: Rational,
}

impl QuadElem {
    pub fn rational(a: Rational, d: &Rational) -> QuadElem {
        QuadElem { a, b: Rational::zero(), d: d.clone() }
    }

    /// `(u + v t)/2`.
    pub fn from_halves(u: Rational, v: Rational, d: &Rational) -> QuadElem {
        let two = rational::int(2);
        QuadElem { a: u / &two, b: v / two, d: d.clone() }
    }

    /// `(u, v)` with the element equal to `(u + v t)/2`.
    pub fn halves(&self) -> (Rational, Rational) {
        let two = rational::int(2);
        (&self.a * &two, &self.b * two)
    }

    pub fn add(&self, o: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.d, o.d);
        QuadElem { a: &self.a + &o.a, b: &self.b + &o.b, d: self.d.clone() }
    }

    pub fn sub(&self, o: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.d, o.d);
        QuadElem { a: &self.a - &o.a, b: &self.b - &o.b, d: self.d.clone() }
    }

    pub fn mul(&self, o: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.d, o.d);
        QuadElem {
            a: &self.a * &o.a + &self.b * &o.b * &self.d,
            b: &self.a * &o.b + &self.b * &o.a,
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> QuadElem {
        QuadElem { a: &self.a * c, b: &self.b * c, d: self.d.clone() }
    }

    pub fn add_rational(&self, c: &Rational) -> QuadElem {
        QuadElem { a: &self.a + c, b: self.b.clone(), d: self.d.clone() }
    }

    pub fn conj(&self) -> QuadElem {
        QuadElem { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * &self.d
    }

    /// Inverse when the norm is nonzero (always, for nonzero elements of a field).
    pub fn checked_inv(&self) -> Option<QuadElem> {
        let n = self.norm();
        (!n.is_zero()).then(|| self.conj().scale(&n.recip()))
    }

    pub fn pow(&self, mut e: u64) -> QuadElem {
        let mut base = self.clone();
        let mut acc = QuadElem::rational(Rational::one(), &self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (u, v) = self.halves();
        write!(f, "({u} + {v}*sqrt({}))/2", self.d)
    }
}

/// The eigenvalues at a rational `x` outside `{0, 4}`.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub x: Rational,
    pub d: Rational,
    pub lambda: QuadElem,
    pub kappa: QuadElem,
}

impl EigenPair {
    pub fn new(x: &Rational) -> Result<EigenPair> {
        let d = x * x - rational::int(4) * x;
        if d.is_zero() {
            return Err(Error::RepeatedEigenvalue(x.to_string()));
        }
        let u = x - rational::int(2);
        let lambda = QuadElem::from_halves(u.clone(), Rational::one(), &d);
        let kappa = QuadElem::from_halves(u, -Rational::one(), &d);
        Ok(EigenPair { x: x.clone(), d, lambda, kappa })
    }

    /// `lambda kappa = 1` and `lambda + kappa = x - 2`, exactly.
    pub fn check_identities(&self) -> bool {
        let prod = self.lambda.mul(&self.kappa).as_rational();
        let sum = self.lambda.add(&self.kappa).as_rational();
        prod == Some(Rational::one()) && sum == Some(&self.x - rational::int(2))
    }
}

/// Evaluation in the formal ring. The result always has zero `t` part.
pub fn binet_formal(params: &GibParams, k: usize, x: &Rational) -> Result<QuadElem> {
    let ep = EigenPair::new(x)?;
    let (l, kp) = (&ep.lambda, &ep.kappa);
    let (a, b) = (params.alpha(), params.beta());
    let m = (k / 2) as u64;
    let lm = l.pow(m);
    let km = kp.pow(m);
    let num = if k.is_multiple_of(2) {
        // lambda^m [(kappa+1) a - x b] - kappa^m [(lambda+1) a - x b]
        let xb = x * b;
        let c1 = kp.add_rational(&Rational::one()).scale(a).add_rational(&-&xb);
        let c2 = l.add_rational(&Rational::one()).scale(a).add_rational(&-&xb);
        lm.mul(&c1).sub(&km.mul(&c2))
    } else {
        // lambda^m [a - (lambda+1) b] - kappa^m [a - (kappa+1) b]
        let c1 = QuadElem::rational(a.clone(), &ep.d).sub(&l.add_rational(&Rational::one()).scale(b));
        let c2 = QuadElem::rational(a.clone(), &ep.d).sub(&kp.add_rational(&Rational::one()).scale(b));
        lm.mul(&c1).sub(&km.mul(&c2))
    };
    let denom = kp.sub(l).checked_inv().expect("kappa - lambda = -t is invertible for D != 0");
    Ok(num.mul(&denom))
}

/// Result of [`binet_eval`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BinetValue {
    Exact {
        #[serde(with = "rational::serde_text")]
        value: Rational,
    },
    /// The true value lies within `radius` of `value`.
    Approx {
        #[serde(with = "rational::serde_text")]
        value: Rational,
        #[serde(with = "rational::serde_text")]
        radius: Rational,
    },
}

impl BinetValue {
    pub fn value(&self) -> &Rational {
        match self {
            BinetValue::Exact { value } | BinetValue::Approx { value, .. } => value,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, BinetValue::Exact { .. })
    }

    /// `|value - r| <= tol`.
    pub fn within(&self, r: &Rational, tol: &Rational) -> bool {
        (self.value() - r).abs() <= *tol
    }
}

/// Complex number with interval parts.
#[derive(Clone)]
struct CInterval {
    re: Interval,
    im: Interval,
}

impl CInterval {
    fn real(re: Interval) -> CInterval {
        CInterval { re, im: Interval::point(Rational::zero()) }
    }

    fn add(&self, o: &CInterval) -> CInterval {
        CInterval { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    fn sub(&self, o: &CInterval) -> CInterval {
        CInterval { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    fn mul(&self, o: &CInterval) -> CInterval {
        CInterval {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    fn scale(&self, c: &Rational) -> CInterval {
        CInterval { re: self.re.scale(c), im: self.im.scale(c) }
    }

    fn round_out(&self, bits: u32) -> CInterval {
        CInterval { re: self.re.round_out(bits), im: self.im.round_out(bits) }
    }

    fn pow(&self, mut e: u64, bits: u32) -> CInterval {
        let mut base = self.clone();
        let mut acc = CInterval::real(Interval::point(Rational::one()));
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).round_out(bits);
            }
            base = base.mul(&base).round_out(bits);
            e >>= 1;
        }
        acc
    }
}

fn binet_interval(params: &GibParams, k: usize, x: &Rational, d: &Rational, bits: u32) -> Interval {
    let half = rational::frac(1, 2);
    let s = Interval::point(d.abs()).sqrt(bits).expect("|D| >= 0");
    let centre = Interval::point((x - rational::int(2)) * &half);
    let hs = s.scale(&half);
    let (lambda, kappa) = if d.is_positive() {
        (CInterval::real(centre.add(&hs)), CInterval::real(centre.sub(&hs)))
    } else {
        (CInterval { re: centre.clone(), im: hs.clone() }, CInterval { re: centre, im: hs.neg() })
    };
    let one = CInterval::real(Interval::point(Rational::one()));
    let (a, b) = (params.alpha(), params.beta());
    let m = (k / 2) as u64;
    let lm = lambda.pow(m, bits);
    let km = kappa.pow(m, bits);
    let num = if k.is_multiple_of(2) {
        let xb = CInterval::real(Interval::point(x * b));
        let c1 = kappa.add(&one).scale(a).sub(&xb);
        let c2 = lambda.add(&one).scale(a).sub(&xb);
        lm.mul(&c1).sub(&km.mul(&c2))
    } else {
        let ca = CInterval::real(Interval::point(a.clone()));
        let c1 = ca.sub(&lambda.add(&one).scale(b));
        let c2 = ca.sub(&kappa.add(&one).scale(b));
        lm.mul(&c1).sub(&km.mul(&c2))
    };
    // kappa - lambda = -sqrt(D): real -s when D > 0, -i s when D < 0
    let inv_s = s.recip().expect("D != 0");
    if d.is_positive() {
        num.re.mul(&inv_s).neg()
    } else {
        // z / (-i s) = i z / s, whose real part is -Im(z)/s
        num.im.mul(&inv_s).neg()
    }
}

/// `G_k(x)` through the eigenvalue formula. Exact when `D` is a rational
/// square, otherwise within `2^-precision` of the true value.
pub fn binet_eval(params: &GibParams, k: usize, x: &Rational, precision: u32) -> Result<BinetValue> {
    let ep = EigenPair::new(x)?;
    if let Some(s) = exact_sqrt(&ep.d) {
        // lambda, kappa are rational; the formula is evaluated in Q
        let half = rational::frac(1, 2);
        let l = (x - rational::int(2) + &s) * &half;
        let kp = (x - rational::int(2) - &s) * &half;
        let (a, b) = (params.alpha(), params.beta());
        let m = (k / 2) as i32;
        let lm = num_traits::pow::Pow::pow(&l, m);
        let km = num_traits::pow::Pow::pow(&kp, m);
        let one = Rational::one();
        let num = if k.is_multiple_of(2) {
            &lm * ((&kp + &one) * a - x * b) - &km * ((&l + &one) * a - x * b)
        } else {
            &lm * (a - (&l + &one) * b) - &km * (a - (&kp + &one) * b)
        };
        return Ok(BinetValue::Exact { value: num / (kp - l) });
    }
    let target = rational::pow2_neg(precision);
    let mut guard = 16u32;
    loop {
        let iv = binet_interval(params, k, x, &ep.d, precision + guard);
        if iv.width() <= target {
            return Ok(BinetValue::Approx { value: iv.midpoint(), radius: iv.radius() });
        }
        guard *= 2;
    }
}

/// Right-hand sides of the lambda-only expressions for the Fibonacci
/// (`lucas = false`) or Lucas (`lucas = true`) polynomials, in the formal ring.
pub fn lambda_only_form(lucas: bool, k: usize, x: &Rational) -> Result<QuadElem> {
    let ep = EigenPair::new(x)?;
    let l = &ep.lambda;
    let one = Rational::one();
    let m = (k / 2) as u64;
    let lm_inv = l.pow(m).checked_inv().expect("lambda has norm 1");
    let not_inv = || Error::Unsupported(format!("denominator vanishes at x = {x}"));
    let (num, den) = match (lucas, k.is_multiple_of(2)) {
        (false, true) => {
            (l.pow(2 * m + 1).add_rational(&-&one), l.add_rational(&-&one).checked_inv().ok_or_else(not_inv)?)
        }
        (false, false) => (
            l.pow(2 * m + 2).add_rational(&-&one),
            l.mul(l).add_rational(&-&one).checked_inv().ok_or_else(not_inv)?,
        ),
        (true, true) => (l.pow(2 * m).add_rational(&one), QuadElem::rational(one.clone(), &ep.d)),
        (true, false) => {
            (l.pow(2 * m + 1).add_rational(&one), l.add_rational(&one).checked_inv().ok_or_else(not_inv)?)
        }
    };
    Ok(num.mul(&lm_inv).mul(&den))
}

/// The lambda-only expressions agree exactly with the recurrence at `x`.
pub fn lambda_only_check(lucas: bool, k: usize, x: &Rational) -> Result<bool> {
    let params = if lucas { GibParams::lucas() } else { GibParams::fibonacci() };
    let expected = build_sa_poly(&params, k as i64)?.poly.eval(x);
    Ok(lambda_only_form(lucas, k, x)?.as_rational() == Some(expected))
}
