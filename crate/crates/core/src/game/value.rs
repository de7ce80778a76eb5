use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::rational;
use crate::exactnum::{AlgElem, Rational, Scalar, Sign};

/// What can sit on a node: a scalar, or a formal combination of the
/// initial numbers.
pub trait GameValue<F: Scalar>: Clone + fmt::Debug {
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &F) -> Self;
    /// Exact sign; formal values fail when the sign depends on the inputs.
    fn sign(&self) -> Result<Sign>;
}

macro_rules! scalar_game_value {
    ($t:ty) => {
        impl GameValue<$t> for $t {
            fn add(&self, o: &Self) -> Self {
                Scalar::add(self, o)
            }
            fn neg(&self) -> Self {
                Scalar::neg(self)
            }
            fn scale(&self, c: &$t) -> Self {
                Scalar::mul(self, c)
            }
            fn sign(&self) -> Result<Sign> {
                Ok(Scalar::sign(self))
            }
        }
    };
}

scalar_game_value!(Rational);
scalar_game_value!(AlgElem);

/// `coef_a * a + coef_b * b` with `a, b` generic positive numbers.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LinearForm<F> {
    pub a: F,
    pub b: F,
}

impl<F: Scalar> LinearForm<F> {
    pub fn new(a: F, b: F) -> LinearForm<F> {
        LinearForm { a, b }
    }

    /// The formal initial number `a`.
    pub fn basis_a() -> LinearForm<F> {
        LinearForm { a: F::from_rational(rational::int(1)), b: F::from_rational(rational::int(0)) }
    }

    /// The formal initial number `b`.
    pub fn basis_b() -> LinearForm<F> {
        LinearForm { a: F::from_rational(rational::int(0)), b: F::from_rational(rational::int(1)) }
    }

    pub fn zero() -> LinearForm<F> {
        LinearForm { a: F::from_rational(rational::int(0)), b: F::from_rational(rational::int(0)) }
    }

    /// Coefficientwise equality by value.
    pub fn value_eq(&self, o: &LinearForm<F>) -> bool {
        self.a.value_eq(&o.a) && self.b.value_eq(&o.b)
    }

    /// Substitute concrete numbers.
    pub fn at(&self, a: &F, b: &F) -> F {
        self.a.mul(a).add(&self.b.mul(b))
    }
}

impl<F: Scalar> GameValue<F> for LinearForm<F> {
    fn add(&self, o: &Self) -> Self {
        LinearForm { a: self.a.add(&o.a), b: self.b.add(&o.b) }
    }
    fn neg(&self) -> Self {
        LinearForm { a: self.a.neg(), b: self.b.neg() }
    }
    fn scale(&self, c: &F) -> Self {
        LinearForm { a: self.a.mul(c), b: self.b.mul(c) }
    }
    fn sign(&self) -> Result<Sign> {
        match (self.a.sign(), self.b.sign()) {
            (Sign::Zero, s) | (s, Sign::Zero) => Ok(s),
            (s, t) if s == t => Ok(s),
            _ => Err(Error::UndeterminedSign),
        }
    }
}

impl<F: Scalar> fmt::Display for LinearForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |c: &F, v: &str| -> Option<String> {
            match c.as_rational() {
                Some(r) if r == rational::int(0) => None,
                Some(r) if r == rational::int(1) => Some(v.to_string()),
                Some(r) if r == rational::int(-1) => Some(format!("-{v}")),
                Some(r) => Some(format!("{r}{v}")),
                None => Some(format!("({c}){v}")),
            }
        };
        let parts: Vec<String> = [term(&self.a, "a"), term(&self.b, "b")].into_iter().flatten().collect();
        if parts.is_empty() {
            return f.write_str("0");
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => out.push_str(&format!(" - {rest}")),
                None => out.push_str(&format!(" + {p}")),
            }
        }
        f.write_str(&out)
    }
}
