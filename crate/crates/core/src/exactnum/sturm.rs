//! Sturm chains over the integers and exact counting of distinct real roots.

use num_bigint::BigInt;
use num_traits::One;

use super::interval::Interval;
use super::poly::Poly;
use super::rational::{Rational, Sign};
use crate::error::{Error, Result};

/// A Sturm sequence `p, p', -rem(p, p'), ...`, each member rescaled by a
/// positive constant to a primitive integer polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<Vec<BigInt>>,
}

fn to_ints(p: &Poly) -> Vec<BigInt> {
    p.primitive().coeffs().iter().map(|c| c.to_integer()).collect()
}

/// Sign of `sum c_i x^i` at `x = num/den` (den > 0), computed as the sign of
/// the homogenised form `sum c_i num^i den^(d-i)`.
fn sign_int_poly(c: &[BigInt], x: &Rational) -> Sign {
    let Some(d) = c.len().checked_sub(1) else {
        return Sign::Zero;
    };
    let (num, den) = (x.numer(), x.denom());
    let mut den_pow = BigInt::one();
    let mut acc = c[d].clone();
    for i in (0..d).rev() {
        den_pow *= den;
        acc = acc * num + &c[i] * &den_pow;
    }
    Sign::of_int(&acc)
}

fn variations<I: IntoIterator<Item = Sign>>(signs: I) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for s in signs {
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl SturmChain {
    pub fn new(p: &Poly) -> SturmChain {
        let mut chain = Vec::new();
        if p.is_zero() {
            return SturmChain { chain };
        }
        let mut prev = p.primitive();
        let mut cur = p.derivative().primitive();
        chain.push(to_ints(&prev));
        while !cur.is_zero() {
            chain.push(to_ints(&cur));
            let r = prev.rem(&cur).expect("cur is nonzero");
            prev = cur;
            cur = (-&r).primitive();
        }
        SturmChain { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign of the chain's first member (the input polynomial up to a
    /// positive factor) at `x`.
    pub fn sign_at(&self, x: &Rational) -> Sign {
        self.chain.first().map_or(Sign::Zero, |c| sign_int_poly(c, x))
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        variations(self.chain.iter().map(|c| sign_int_poly(c, x)))
    }

    fn variations_at_pos_inf(&self) -> usize {
        variations(self.chain.iter().map(|c| lead_sign(c)))
    }

    fn variations_at_neg_inf(&self) -> usize {
        variations(self.chain.iter().map(|c| {
            let s = lead_sign(c);
            if c.len() % 2 == 0 {
                s.negate()
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in `(lo, hi]`; neither endpoint may be a root.
    pub fn count_in(&self, iv: &Interval) -> Result<usize> {
        if self.chain.is_empty() {
            return Err(Error::Unsupported("the zero polynomial has every point as a root".into()));
        }
        for e in [&iv.lo, &iv.hi] {
            if self.sign_at(e) == Sign::Zero {
                return Err(Error::EndpointIsRoot(e.to_string()));
            }
        }
        let a = self.variations_at(&iv.lo);
        let b = self.variations_at(&iv.hi);
        Ok(a.saturating_sub(b))
    }

    /// Total number of distinct real roots.
    pub fn count_all(&self) -> usize {
        if self.chain.is_empty() {
            return 0;
        }
        self.variations_at_neg_inf().saturating_sub(self.variations_at_pos_inf())
    }
}

fn lead_sign(c: &[BigInt]) -> Sign {
    c.last().map_or(Sign::Zero, Sign::of_int)
}

/// Exact number of distinct real roots of `p` in `(iv.lo, iv.hi]`.
pub fn sturm_count(p: &Poly, iv: &Interval) -> Result<usize> {
    SturmChain::new(p).count_in(iv)
}

/// Convenience: is `x` a root of the integer-scaled polynomial?
pub(crate) fn is_root(chain: &SturmChain, x: &Rational) -> bool {
    chain.sign_at(x) == Sign::Zero
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::int;

    #[test]
    fn counts_match_factorisations() {
        let p = Poly::from_ints(&[5, -5, 1]);
        assert_eq!(sturm_count(&p, &Interval::from_ints(0, 4)).unwrap(), 2);
        let q = Poly::from_ints(&[-4, 1]);
        assert_eq!(sturm_count(&q, &Interval::from_ints(0, 3)).unwrap(), 0);
        let r = Poly::from_ints(&[3, -4, 1]);
        assert_eq!(sturm_count(&r, &Interval::from_ints(0, 4)).unwrap(), 2);
        assert_eq!(sturm_count(&r, &Interval::from_ints(0, 2)).unwrap(), 1);
    }

    #[test]
    fn endpoint_roots_are_rejected() {
        let r = Poly::from_ints(&[3, -4, 1]);
        assert_eq!(sturm_count(&r, &Interval::from_ints(1, 4)), Err(Error::EndpointIsRoot("1".into())));
        assert!(sturm_count(&Poly::zero(), &Interval::from_ints(0, 1)).is_err());
    }

    #[test]
    fn repeated_roots_are_counted_once() {
        let p = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[-1, 1]);
        let p = &p * &Poly::from_ints(&[2, 1]);
        assert_eq!(sturm_count(&p, &Interval::from_ints(-5, 5)).unwrap(), 2);
        assert_eq!(SturmChain::new(&p).count_all(), 2);
    }

    #[test]
    fn constants_have_no_roots() {
        let c = Poly::constant(int(7));
        assert_eq!(sturm_count(&c, &Interval::from_ints(-3, 3)).unwrap(), 0);
        assert_eq!(SturmChain::new(&c).count_all(), 0);
    }
}
