//! Scalars for the generic engines: plain rationals and elements of
//! `Q(theta) = Q[x]/(f)` for a real algebraic `theta`.
//!
//! `f` is only required to be square-free, so the quotient ring can have zero
//! divisors; equality is therefore decided by value (an exact sign test at
//! `theta`) and inversion is checked.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::algebraic::{decimal_tolerance, sign_at_algebraic, AlgebraicNumber};
use super::interval::Interval;
use super::poly::Poly;
use super::rational::{self, Rational, Sign};

/// Exact ordered scalar used by the game engine and related generic code.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn from_rational(r: Rational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact sign.
    fn sign(&self) -> Sign;
    /// `None` when the value is zero (or, in a reducible quotient, a zero divisor).
    fn checked_inv(&self) -> Option<Self>;
    fn to_decimal(&self, digits: usize) -> String;
    /// The value as a rational, when it is syntactically one.
    fn as_rational(&self) -> Option<Rational>;

    fn is_zero(&self) -> bool {
        self.sign() == Sign::Zero
    }

    fn value_eq(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }

    fn mul_rational(&self, r: &Rational) -> Self {
        self.mul(&Self::from_rational(r.clone()))
    }
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sign(&self) -> Sign {
        Sign::of(self)
    }
    fn checked_inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn to_decimal(&self, digits: usize) -> String {
        rational::to_decimal(self, digits)
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// The number field (or, for reducible `f`, the quotient ring) generated by
/// one real algebraic number.
#[derive(Debug)]
pub struct NumberField {
    theta: AlgebraicNumber,
}

impl NumberField {
    pub fn new(theta: AlgebraicNumber) -> Arc<NumberField> {
        Arc::new(NumberField { theta })
    }

    pub fn theta(&self) -> &AlgebraicNumber {
        &self.theta
    }

    pub fn modulus(&self) -> &Poly {
        self.theta.defining()
    }

    /// The generator `theta` as a field element.
    pub fn generator(self: &Arc<Self>) -> AlgElem {
        AlgElem::new(self, Poly::x())
    }

    pub fn element(self: &Arc<Self>, rep: Poly) -> AlgElem {
        AlgElem::new(self, rep)
    }
}

/// An element `rep(theta)`; `rep` is kept reduced modulo the defining
/// polynomial. Without a field the element is a rational constant.
#[derive(Debug, Clone)]
pub struct AlgElem {
    field: Option<Arc<NumberField>>,
    rep: Poly,
}

impl AlgElem {
    pub fn new(field: &Arc<NumberField>, rep: Poly) -> AlgElem {
        let rep = rep.rem(field.modulus()).expect("modulus is nonconstant");
        AlgElem { field: Some(field.clone()), rep }
    }

    pub fn rational(r: Rational) -> AlgElem {
        AlgElem { field: None, rep: Poly::constant(r) }
    }

    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    fn join(&self, o: &AlgElem) -> Option<Arc<NumberField>> {
        match (&self.field, &o.field) {
            (Some(a), Some(b)) => {
                assert!(
                    Arc::ptr_eq(a, b) || a.modulus() == b.modulus(),
                    "{}",
                    crate::error::Error::FieldMismatch
                );
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn build(field: Option<Arc<NumberField>>, rep: Poly) -> AlgElem {
        match field {
            Some(f) => AlgElem::new(&f, rep),
            None => AlgElem { field: None, rep },
        }
    }

    /// An interval containing the value, narrower than `width`.
    pub fn enclose(&self, width: &Rational) -> Interval {
        let Some(f) = &self.field else {
            return Interval::point(self.rep.coeff(0));
        };
        let mut theta = f.theta.clone();
        loop {
            let iv = theta.enclosure().eval_poly(&self.rep);
            if &iv.width() <= width {
                return iv;
            }
            theta = theta.refine();
        }
    }
}

/// `s` with `s * a = gcd(a, m)` modulo `m`, together with that gcd.
fn ext_gcd_inverse(a: &Poly, m: &Poly) -> (Poly, Poly) {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    let (mut s0, mut s1) = (Poly::zero(), Poly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).expect("r1 is nonzero");
        let s = &s0 - &(&q * &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (s0, r0)
}

impl Scalar for AlgElem {
    fn from_rational(r: Rational) -> Self {
        AlgElem::rational(r)
    }
    fn add(&self, o: &Self) -> Self {
        AlgElem::build(self.join(o), &self.rep + &o.rep)
    }
    fn sub(&self, o: &Self) -> Self {
        AlgElem::build(self.join(o), &self.rep - &o.rep)
    }
    fn mul(&self, o: &Self) -> Self {
        AlgElem::build(self.join(o), &self.rep * &o.rep)
    }
    fn neg(&self) -> Self {
        AlgElem { field: self.field.clone(), rep: -&self.rep }
    }
    fn sign(&self) -> Sign {
        match &self.field {
            Some(f) => sign_at_algebraic(&self.rep, &f.theta),
            None => Sign::of(&self.rep.coeff(0)),
        }
    }
    fn checked_inv(&self) -> Option<Self> {
        let Some(f) = &self.field else {
            let c = self.rep.coeff(0);
            return (!Zero::is_zero(&c)).then(|| AlgElem::rational(c.recip()));
        };
        if self.rep.is_zero() {
            return None;
        }
        let (s, g) = ext_gcd_inverse(&self.rep, f.modulus());
        if g.degree() != Some(0) {
            return None;
        }
        Some(AlgElem::new(f, s.scale(&g.coeff(0).recip())))
    }
    fn to_decimal(&self, digits: usize) -> String {
        let Some(f) = &self.field else {
            return rational::to_decimal(&self.rep.coeff(0), digits);
        };
        if self.sign() == Sign::Zero {
            return "0".to_string();
        }
        let mut theta = f.theta.clone();
        loop {
            let iv = theta.enclosure().eval_poly(&self.rep);
            if !iv.contains_zero() {
                let mag = if iv.lo.is_positive() { iv.lo.clone() } else { -iv.hi.clone() };
                if iv.width() <= mag * decimal_tolerance(digits) {
                    return rational::to_decimal(&iv.midpoint(), digits);
                }
            }
            theta = theta.refine();
        }
    }
    fn as_rational(&self) -> Option<Rational> {
        match self.rep.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.rep.coeff(0)),
            _ => None,
        }
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rep.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&self.rep.display_in("r"))
    }
}

impl From<Rational> for AlgElem {
    fn from(r: Rational) -> Self {
        AlgElem::rational(r)
    }
}

impl AlgElem {
    pub fn one() -> AlgElem {
        AlgElem::rational(Rational::one())
    }
}
