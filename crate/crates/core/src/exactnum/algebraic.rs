//! Certified root isolation and real algebraic numbers.
//!
//! An [`AlgebraicNumber`] is a square-free defining polynomial together with
//! an isolating interval whose endpoints are not roots and whose Sturm count
//! is exactly one. Every comparison and sign decision below is exact.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::interval::Interval;
use super::poly::Poly;
use super::rational::{self, Rational, Sign};
use super::sturm::{is_root, SturmChain};
use crate::error::{Error, Result};

/// A point strictly inside `(a, b)` that is not a root: the midpoint if
/// possible, otherwise `mid + (b - a) / 2^m` for increasing `m`.
fn nonroot_split(chain: &SturmChain, a: &Rational, b: &Rational) -> Rational {
    let mid = (a + b) / rational::int(2);
    if !is_root(chain, &mid) {
        return mid;
    }
    let w = b - a;
    let mut m = 2u32;
    loop {
        let cand = &mid + &w * rational::pow2_neg(m);
        if !is_root(chain, &cand) {
            return cand;
        }
        m += 1;
    }
}

/// Moves `edge` towards `inner` until it is not a root of `chain` and no root
/// lies strictly between the old and new positions, so that the open interval
/// loses nothing but the endpoint itself. `deflated` is the chain of the
/// square-free polynomial divided by `(x - edge)`.
fn pull_in(chain: &SturmChain, deflated: &SturmChain, edge: &Rational, inner: &Rational) -> Rational {
    let w = inner - edge;
    let mut m = 1u32;
    loop {
        let cand = edge + &w * rational::pow2_neg(m);
        if !is_root(chain, &cand) {
            let (lo, hi) =
                if &cand < edge { (cand.clone(), edge.clone()) } else { (edge.clone(), cand.clone()) };
            let iv = Interval { lo, hi };
            if deflated.count_in(&iv) == Ok(0) {
                return cand;
            }
        }
        m += 1;
    }
}

/// Isolating intervals, sorted ascending, for the distinct real roots of `p`
/// in the open interval `(within.lo, within.hi)`.
pub fn isolate_real_roots(p: &Poly, within: &Interval) -> Result<Vec<Interval>> {
    if p.is_zero() {
        return Err(Error::Unsupported("cannot isolate the roots of the zero polynomial".into()));
    }
    if p.degree() == Some(0) || within.lo == within.hi {
        return Ok(Vec::new());
    }
    let sf = p.square_free_part();
    let chain = SturmChain::new(&sf);
    let mut lo = within.lo.clone();
    let mut hi = within.hi.clone();
    if is_root(&chain, &lo) {
        let deflated = SturmChain::new(&sf.div_exact(&Poly::linear_root(&lo))?);
        lo = pull_in(&chain, &deflated, &within.lo, &within.hi);
    }
    if is_root(&chain, &hi) {
        let deflated = SturmChain::new(&sf.div_exact(&Poly::linear_root(&hi))?);
        hi = pull_in(&chain, &deflated, &within.hi, &lo);
    }
    if lo >= hi {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let top = Interval { lo, hi };
    let n = chain.count_in(&top)?;
    let mut stack = vec![(top, n)];
    while let Some((iv, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(iv),
            _ => {
                let m = nonroot_split(&chain, &iv.lo, &iv.hi);
                let left = Interval { lo: iv.lo.clone(), hi: m.clone() };
                let right = Interval { lo: m, hi: iv.hi };
                let nl = chain.count_in(&left)?;
                stack.push((right, n - nl));
                stack.push((left, nl));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// A real algebraic number.
#[derive(Clone)]
pub struct AlgebraicNumber {
    defining: Poly,
    enclosure: Interval,
    chain: SturmChain,
}

impl AlgebraicNumber {
    /// Validates that `enclosure` isolates exactly one root of `defining`.
    /// The stored defining polynomial is the primitive square-free part.
    pub fn new(defining: &Poly, enclosure: Interval) -> Result<AlgebraicNumber> {
        if defining.degree().unwrap_or(0) == 0 {
            return Err(Error::Unsupported("defining polynomial must be nonconstant".into()));
        }
        let defining = defining.square_free_part();
        let chain = SturmChain::new(&defining);
        let n = chain.count_in(&enclosure)?;
        if n != 1 {
            return Err(Error::NotIsolating(n));
        }
        Ok(AlgebraicNumber { defining, enclosure, chain })
    }

    pub fn from_rational(r: &Rational) -> AlgebraicNumber {
        let one = rational::int(1);
        AlgebraicNumber::new(&Poly::linear_root(r), Interval { lo: r - &one, hi: r + &one })
            .expect("x - r has exactly one root near r")
    }

    /// One algebraic number per isolating interval of `p` in `within`.
    pub fn roots_in(p: &Poly, within: &Interval) -> Result<Vec<AlgebraicNumber>> {
        isolate_real_roots(p, within)?.into_iter().map(|iv| AlgebraicNumber::new(p, iv)).collect()
    }

    pub fn defining(&self) -> &Poly {
        &self.defining
    }

    pub fn enclosure(&self) -> &Interval {
        &self.enclosure
    }

    /// The exact rational value when the defining polynomial is linear.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.defining.degree() == Some(1)).then(|| -self.defining.coeff(0) / self.defining.coeff(1))
    }

    /// One bisection step. If the midpoint happens to be the root the number
    /// is rational and the result is re-expressed with a linear defining
    /// polynomial.
    pub fn refine(&self) -> AlgebraicNumber {
        let Interval { lo, hi } = &self.enclosure;
        let mid = (lo + hi) / rational::int(2);
        if is_root(&self.chain, &mid) {
            let quarter = (hi - lo) / rational::int(4);
            let defining = Poly::linear_root(&mid);
            let chain = SturmChain::new(&defining);
            return AlgebraicNumber {
                enclosure: Interval { lo: &mid - &quarter, hi: &mid + &quarter },
                defining,
                chain,
            };
        }
        let left = Interval { lo: lo.clone(), hi: mid.clone() };
        let enclosure = if self.chain.count_in(&left).expect("endpoints are not roots") == 1 {
            left
        } else {
            Interval { lo: mid, hi: hi.clone() }
        };
        AlgebraicNumber { defining: self.defining.clone(), enclosure, chain: self.chain.clone() }
    }

    pub fn refine_to_width(&self, width: &Rational) -> AlgebraicNumber {
        let mut cur = self.clone();
        while &cur.enclosure.width() > width {
            cur = cur.refine();
        }
        cur
    }

    /// Exact sign of `p` at this number.
    pub fn sign_of(&self, p: &Poly) -> Sign {
        sign_at_algebraic(p, self)
    }

    /// Exact three-way comparison.
    pub fn cmp_exact(&self, other: &AlgebraicNumber) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
            return x.cmp(&y);
        }
        if let Some(common) = a.enclosure.intersection(&b.enclosure) {
            let g = a.defining.gcd(&b.defining);
            if g.degree().unwrap_or(0) >= 1
                && g.sign_at(&common.lo) != Sign::Zero
                && g.sign_at(&common.hi) != Sign::Zero
            {
                let c = SturmChain::new(&g).count_in(&common).unwrap_or(0);
                if c == 1 {
                    return Ordering::Equal;
                }
            }
        }
        loop {
            if a.enclosure.strictly_below(&b.enclosure) {
                return Ordering::Less;
            }
            if b.enclosure.strictly_below(&a.enclosure) {
                return Ordering::Greater;
            }
            if a.enclosure.width() >= b.enclosure.width() {
                a = a.refine();
            } else {
                b = b.refine();
            }
        }
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        match sign_at_algebraic(&Poly::linear_root(r), self) {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    /// `-1/theta` for nonzero `theta`.
    pub fn neg_reciprocal(&self) -> Result<AlgebraicNumber> {
        let mut cur = self.clone();
        while cur.enclosure.contains_zero() {
            if cur.as_rational().is_some_and(|r| r.is_zero()) {
                return Err(Error::Unsupported("-1/0 is undefined".into()));
            }
            cur = cur.refine();
        }
        let d = cur.defining.degree().expect("nonconstant");
        let defining = cur.defining.neg_reciprocal_transform(d);
        let lo = -cur.enclosure.lo.recip();
        let hi = -cur.enclosure.hi.recip();
        AlgebraicNumber::new(&defining, Interval { lo, hi })
    }

    /// Decimal approximation with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if let Some(r) = self.as_rational() {
            return rational::to_decimal(&r, digits);
        }
        let mut cur = self.clone();
        loop {
            let iv = &cur.enclosure;
            if !iv.contains_zero() {
                let mag = if iv.lo.is_positive() { iv.lo.clone() } else { -iv.hi.clone() };
                let tol = mag * decimal_tolerance(digits);
                if iv.width() <= tol {
                    return rational::to_decimal(&iv.midpoint(), digits);
                }
            }
            cur = cur.refine();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let cur = self.refine_to_width(&rational::pow2_neg(60));
        let m = cur.enclosure.midpoint();
        num_traits::ToPrimitive::to_f64(&m).unwrap_or(f64::NAN)
    }
}

pub(crate) fn decimal_tolerance(digits: usize) -> Rational {
    Rational::new(1.into(), num_bigint::BigInt::from(10).pow(digits as u32 + 1))
}

/// Exact sign of `p(theta)`.
///
/// The zero test is decided algebraically: `p(theta) = 0` iff
/// `gcd(p, defining)` has a root inside the enclosure. Otherwise the
/// enclosure is bisected until `p` has no root in it.
pub fn sign_at_algebraic(p: &Poly, theta: &AlgebraicNumber) -> Sign {
    if p.is_zero() {
        return Sign::Zero;
    }
    if p.degree() == Some(0) {
        return Sign::of(&p.coeff(0));
    }
    if let Some(r) = theta.as_rational() {
        return p.sign_at(&r);
    }
    let g = p.gcd(&theta.defining);
    if g.degree().unwrap_or(0) >= 1 {
        // endpoints are not roots of `defining`, hence not roots of `g`
        let c = SturmChain::new(&g)
            .count_in(&theta.enclosure)
            .expect("enclosure endpoints are not roots of a divisor");
        if c == 1 {
            return Sign::Zero;
        }
    }
    let pchain = SturmChain::new(&p.square_free_part());
    let mut cur = theta.clone();
    loop {
        if let Some(r) = cur.as_rational() {
            return p.sign_at(&r);
        }
        if let Ok(0) = pchain.count_in(&cur.enclosure) {
            return p.sign_at(&cur.enclosure.hi);
        }
        cur = cur.refine();
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicNumber(root of {} in {})", self.defining, self.enclosure)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "root of {} in {}", self.defining, self.enclosure),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraicRepr {
    defining: Poly,
    enclosure: Interval,
}

impl Serialize for AlgebraicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlgebraicRepr { defining: self.defining.clone(), enclosure: self.enclosure.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = AlgebraicRepr::deserialize(d)?;
        AlgebraicNumber::new(&r.defining, r.enclosure).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{frac, int};
    use crate::exactnum::sturm::sturm_count;

    fn contains_value(iv: &Interval, x: &Rational) -> bool {
        &iv.lo < x && x < &iv.hi
    }

    #[test]
    fn isolates_the_roots_of_a_factored_quadratic() {
        let p = Poly::from_ints(&[3, -4, 1]);
        let ivs = isolate_real_roots(&p, &Interval::from_ints(0, 5)).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(contains_value(&ivs[0], &int(1)));
        assert!(contains_value(&ivs[1], &int(3)));
        for iv in &ivs {
            assert_eq!(sturm_count(&p, iv).unwrap(), 1);
        }
        assert!(ivs[0].hi <= ivs[1].lo);
    }

    #[test]
    fn constants_have_no_isolating_intervals() {
        let p = Poly::constant(frac(5, 2));
        assert!(isolate_real_roots(&p, &Interval::from_ints(0, 4)).unwrap().is_empty());
        assert!(isolate_real_roots(&Poly::zero(), &Interval::from_ints(0, 4)).is_err());
    }

    #[test]
    fn roots_on_the_boundary_are_excluded() {
        // roots 1 and 3; window (1, 3) is open so neither is inside
        let p = Poly::from_ints(&[3, -4, 1]);
        assert!(isolate_real_roots(&p, &Interval::from_ints(1, 3)).unwrap().is_empty());
        // (1,4): only 3; (0,3): only 1
        let a = isolate_real_roots(&p, &Interval::from_ints(1, 4)).unwrap();
        assert_eq!(a.len(), 1);
        assert!(contains_value(&a[0], &int(3)));
        let b = isolate_real_roots(&p, &Interval::from_ints(0, 3)).unwrap();
        assert_eq!(b.len(), 1);
        assert!(contains_value(&b[0], &int(1)));
    }

    #[test]
    fn midpoint_roots_are_stepped_over() {
        // roots 0, 1, 2: splitting (−1, 3) hits 1 exactly at the midpoint
        let p = &(&Poly::x() * &Poly::from_ints(&[-1, 1])) * &Poly::from_ints(&[-2, 1]);
        let ivs = isolate_real_roots(&p, &Interval::from_ints(-1, 3)).unwrap();
        assert_eq!(ivs.len(), 3);
        for (iv, r) in ivs.iter().zip([0, 1, 2]) {
            assert!(contains_value(iv, &int(r)));
        }
    }

    #[test]
    fn sign_at_algebraic_examples() {
        // 2x^2 - 9x + 5 at the largest root (4) of 2x^2 - 11x + 12
        let theta = AlgebraicNumber::roots_in(&Poly::from_ints(&[12, -11, 2]), &Interval::from_ints(0, 5))
            .unwrap()
            .pop()
            .unwrap();
        assert_eq!(theta.sign_of(&Poly::from_ints(&[5, -9, 2])), Sign::Positive);
        assert_eq!(theta.sign_of(theta.defining()), Sign::Zero);
        assert_eq!(theta.cmp_rational(&int(4)), Ordering::Equal);
        // x^2 - 3x + 1 at the largest root (3) of x^2 - 4x + 3
        let t3 = AlgebraicNumber::roots_in(&Poly::from_ints(&[3, -4, 1]), &Interval::from_ints(0, 4))
            .unwrap()
            .pop()
            .unwrap();
        assert_eq!(t3.sign_of(&Poly::from_ints(&[1, -3, 1])), Sign::Positive);
    }

    #[test]
    fn irrational_zero_test_uses_gcd() {
        // sqrt(2) is a root of (x^2 - 2)(x - 5) but not of x^2 - 3
        let sqrt2 = AlgebraicNumber::new(&Poly::from_ints(&[-2, 0, 1]), Interval::from_ints(1, 2)).unwrap();
        let p = &Poly::from_ints(&[-2, 0, 1]) * &Poly::from_ints(&[-5, 1]);
        assert_eq!(sqrt2.sign_of(&p), Sign::Zero);
        assert_eq!(sqrt2.sign_of(&Poly::from_ints(&[-3, 0, 1])), Sign::Negative);
        assert_eq!(sqrt2.sign_of(&Poly::from_ints(&[-1, 0, 1])), Sign::Positive);
    }

    #[test]
    fn exact_comparisons() {
        let sqrt2 = AlgebraicNumber::new(&Poly::from_ints(&[-2, 0, 1]), Interval::from_ints(1, 2)).unwrap();
        let other = AlgebraicNumber::new(
            &(&Poly::from_ints(&[-2, 0, 1]) * &Poly::from_ints(&[-7, 1])),
            Interval::new(frac(13, 10), frac(3, 2)).unwrap(),
        )
        .unwrap();
        assert_eq!(sqrt2.cmp_exact(&other), Ordering::Equal);
        let sqrt3 = AlgebraicNumber::new(&Poly::from_ints(&[-3, 0, 1]), Interval::from_ints(1, 2)).unwrap();
        assert_eq!(sqrt2.cmp_exact(&sqrt3), Ordering::Less);
        assert_eq!(sqrt3.cmp_exact(&sqrt2), Ordering::Greater);
        assert_eq!(sqrt2.cmp_rational(&frac(141, 100)), Ordering::Greater);
        assert_eq!(sqrt2.cmp_rational(&frac(142, 100)), Ordering::Less);
    }

    #[test]
    fn refinement_detects_rational_values() {
        let t = AlgebraicNumber::new(&Poly::from_ints(&[-1, 1]), Interval::from_ints(0, 2)).unwrap();
        let r = t.refine();
        assert_eq!(r.as_rational(), Some(int(1)));
        assert!(r.enclosure().width() < t.enclosure().width());
    }

    #[test]
    fn neg_reciprocal_maps_the_root() {
        let sqrt2 = AlgebraicNumber::new(&Poly::from_ints(&[-2, 0, 1]), Interval::from_ints(1, 2)).unwrap();
        let m = sqrt2.neg_reciprocal().unwrap();
        // -1/sqrt(2) is a root of 2x^2 - 1
        assert_eq!(m.sign_of(&Poly::from_ints(&[-1, 0, 2])), Sign::Zero);
        assert_eq!(m.cmp_rational(&int(0)), Ordering::Less);
    }

    #[test]
    fn decimal_rendering_of_sqrt2() {
        let sqrt2 = AlgebraicNumber::new(&Poly::from_ints(&[-2, 0, 1]), Interval::from_ints(1, 2)).unwrap();
        assert_eq!(sqrt2.to_decimal(10), "1.414213562");
        assert!((sqrt2.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_isolating_enclosures() {
        let p = Poly::from_ints(&[3, -4, 1]);
        assert_eq!(AlgebraicNumber::new(&p, Interval::from_ints(0, 4)).unwrap_err(), Error::NotIsolating(2));
        assert!(AlgebraicNumber::new(&p, Interval::from_ints(1, 2)).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let sqrt2 = AlgebraicNumber::new(&Poly::from_ints(&[-2, 0, 1]), Interval::from_ints(1, 2)).unwrap();
        let s = serde_json::to_string(&sqrt2).unwrap();
        let back: AlgebraicNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(back.cmp_exact(&sqrt2), Ordering::Equal);
        assert_eq!(back.defining(), sqrt2.defining());
    }
}
