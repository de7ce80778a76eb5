//! Exact rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`, which already keeps every
//! value in lowest terms with a positive denominator. This module adds the
//! text format used on the command line and in JSON (`"num/den"`, or a bare
//! integer when the denominator is one), sign helpers and decimal rendering.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        match r.numer().sign() {
            BigSign::Minus => Sign::Negative,
            BigSign::NoSign => Sign::Zero,
            BigSign::Plus => Sign::Positive,
        }
    }

    pub fn of_int(n: &BigInt) -> Sign {
        match n.sign() {
            BigSign::Minus => Sign::Negative,
            BigSign::NoSign => Sign::Zero,
            BigSign::Plus => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `2^-bits` as an exact rational.
pub fn pow2_neg(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits as usize)
}

/// Parses `"n"`, `"-n"`, `"n/d"`. Decimal points and exponents are rejected
/// so nothing is silently converted from floating point.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(Error::Parse(format!("'{s}' is not an exact rational; write it as num/den")));
    }
    let parse_int = |part: &str| -> Result<BigInt> {
        part.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("'{s}' is not a rational")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("'{s}' has a zero denominator")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical text form; identical to `Display` of `BigRational`.
pub fn to_text(r: &Rational) -> String {
    r.to_string()
}

/// Floor of `log10 |r|` for nonzero `r`.
fn decimal_exponent(r: &Rational) -> i64 {
    let a = r.abs();
    let ten = Rational::from_integer(BigInt::from(10));
    let mut e: i64 = (a.numer().bits() as i64 - a.denom().bits() as i64) * 30103 / 100000;
    // adjust the estimate until 10^e <= a < 10^(e+1)
    loop {
        let p = pow10(e);
        if p > a {
            e -= 1;
        } else if &p * &ten <= a {
            e += 1;
        } else {
            return e;
        }
    }
}

fn pow10(e: i64) -> Rational {
    let t = BigInt::from(10).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(t)
    } else {
        Rational::new(BigInt::one(), t)
    }
}

/// Decimal rendering of `r` rounded (half away from zero) to `digits`
/// significant digits, in plain positional notation.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if r.is_zero() {
        return "0".to_string();
    }
    let e = decimal_exponent(r);
    // number of digits after the decimal point
    let mut frac_digits = (digits as i64 - 1 - e).max(0);
    let scaled = r.abs() * pow10(frac_digits);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let mut q = q;
    if (rem * 2u32).cmp(scaled.denom()) != Ordering::Less {
        q += 1u32;
    }
    let mut s = q.to_string();
    // rounding up to the next power of ten adds a digit
    if frac_digits > 0 && s.len() > digits {
        s.pop();
        frac_digits -= 1;
    }
    if frac_digits > 0 {
        let fd = frac_digits as usize;
        if s.len() <= fd {
            s = format!("{}{}", "0".repeat(fd + 1 - s.len()), s);
        }
        let split = s.len() - fd;
        s = format!("{}.{}", &s[..split], &s[split..]);
    }
    if r.is_negative() {
        s.insert(0, '-');
    }
    s
}

/// Serde adaptor: a rational as its canonical string.
pub mod serde_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adaptor for `Vec<Rational>`.
pub mod serde_text_vec {
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&r.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect()
    }
}
