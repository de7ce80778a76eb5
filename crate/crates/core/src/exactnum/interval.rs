//! Closed intervals with rational endpoints.
//!
//! The same type serves two roles: isolating intervals for roots (where the
//! endpoints are never roots, so the open and closed readings agree) and
//! enclosures produced by outward-rounded interval arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Interval> {
        if lo > hi {
            return Err(Error::InvalidInterval { lo: lo.to_string(), hi: hi.to_string() });
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: Rational) -> Interval {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Interval {
        Interval::new(rational::int(lo), rational::int(hi)).expect("lo <= hi")
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rational::int(2)
    }

    /// Radius about the midpoint.
    pub fn radius(&self) -> Rational {
        self.width() / rational::int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// `other` lies inside `self`.
    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersection(&self, other: &Interval) -> Option<Interval> {
        let lo = if self.lo > other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi < other.hi { &self.hi } else { &other.hi };
        (lo <= hi).then(|| Interval { lo: lo.clone(), hi: hi.clone() })
    }

    /// Every point of `self` is below every point of `other`.
    pub fn strictly_below(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    /// Round outward to the grid `2^-bits`.
    pub fn round_out(&self, bits: u32) -> Interval {
        let scale = Rational::from_integer(BigInt::one() << bits as usize);
        let lo = (&self.lo * &scale).floor() / &scale;
        let hi = (&self.hi * &scale).ceil() / &scale;
        Interval { lo, hi }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let products = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = products.iter().min().expect("nonempty").clone();
        let hi = products.iter().max().expect("nonempty").clone();
        Interval { lo, hi }
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        self.mul(&Interval::point(c.clone()))
    }

    /// Reciprocal; errors if the interval contains zero.
    pub fn recip(&self) -> Result<Interval> {
        if self.contains_zero() {
            return Err(Error::Unsupported("reciprocal of an interval containing zero".into()));
        }
        Ok(Interval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn div(&self, o: &Interval) -> Result<Interval> {
        Ok(self.mul(&o.recip()?))
    }

    /// Enclosure of `sqrt` over a nonnegative interval, endpoints on the
    /// grid `2^-bits`.
    pub fn sqrt(&self, bits: u32) -> Result<Interval> {
        if self.lo.is_negative() {
            return Err(Error::Unsupported("square root of a negative interval".into()));
        }
        Ok(Interval { lo: sqrt_floor(&self.lo, bits), hi: sqrt_ceil(&self.hi, bits) })
    }

    /// Interval Horner evaluation of a polynomial over this interval.
    pub fn eval_poly(&self, p: &super::Poly) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Interval::point(c.clone()));
        }
        acc
    }
}

/// Largest multiple of `2^-bits` not exceeding `sqrt(r)`.
pub fn sqrt_floor(r: &Rational, bits: u32) -> Rational {
    let four_s = BigInt::one() << (2 * bits as usize);
    let n = (r * Rational::from_integer(four_s)).floor().to_integer();
    let a = n.sqrt();
    Rational::new(a, BigInt::one() << bits as usize)
}

/// Smallest multiple of `2^-bits` not below `sqrt(r)`.
pub fn sqrt_ceil(r: &Rational, bits: u32) -> Rational {
    let lo = sqrt_floor(r, bits);
    if &lo * &lo == *r {
        lo
    } else {
        lo + rational::pow2_neg(bits)
    }
}

/// Exact square root when `r` is the square of a rational.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Interval{self}")
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational::serde_text_vec::serialize(&[self.lo.clone(), self.hi.clone()], s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Interval, D::Error> {
        let v = rational::serde_text_vec::deserialize(d)?;
        match <[Rational; 2]>::try_from(v) {
            Ok([lo, hi]) => Interval::new(lo, hi).map_err(serde::de::Error::custom),
            Err(_) => Err(serde::de::Error::custom("interval must have two endpoints")),
        }
    }
}
