//! Rigorous rational enclosures of pi and of cos/sin at rational multiples
//! of pi. All truncation errors are bounded and added to the result.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::interval::Interval;
use super::rational::{self, Rational};

/// `arctan(1/m)` to within `2^-bits` (alternating series, error below the
/// first omitted term).
fn arctan_inv(m: i64, bits: u32) -> Interval {
    let m2 = rational::int(m * m);
    let tol = rational::pow2_neg(bits + 4);
    let mut term = rational::frac(1, m); // 1/m^(2k+1)
    let mut sum = Rational::zero();
    let mut k = 0i64;
    loop {
        let t = &term / rational::int(2 * k + 1);
        if t < tol {
            let lo = &sum - &t;
            let hi = &sum + &t;
            return Interval { lo, hi }.round_out(bits + 4);
        }
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        term /= &m2;
        k += 1;
    }
}

/// Enclosure of pi with width at most `2^-bits`.
pub fn pi_enclosure(bits: u32) -> Interval {
    let a = arctan_inv(5, bits + 6).scale(&rational::int(16));
    let b = arctan_inv(239, bits + 6).scale(&rational::int(4));
    a.sub(&b).round_out(bits + 1)
}

/// Enclosure of `cos(x)` for `x` inside `[0, 2]`, Taylor series with the
/// remainder bounded by the first omitted term.
fn cos_taylor(x: &Interval, bits: u32) -> Interval {
    let x2 = x.mul(x);
    let xmax2 = &x.hi * &x.hi;
    let tol = rational::pow2_neg(bits + 4);
    let mut sum = Interval::point(Rational::one());
    let mut term = Interval::point(Rational::one());
    let mut bound = Rational::one();
    let mut k = 1i64;
    loop {
        let d = rational::int((2 * k - 1) * (2 * k));
        term = term.mul(&x2).scale(&d.recip()).neg().round_out(bits + 16);
        bound = &bound * &xmax2 / &d;
        sum = sum.add(&term);
        let next = &bound * &xmax2 / rational::int((2 * k + 1) * (2 * k + 2));
        if next < tol {
            let r = Interval { lo: -next.clone(), hi: next };
            return sum.add(&r).round_out(bits + 8);
        }
        k += 1;
    }
}

fn cos_pi_once(t: &Rational, bits: u32) -> Interval {
    let two = rational::int(2);
    // reduce t into [0, 2)
    let q = (t / &two).floor();
    let mut t = t - &q * &two;
    if t > Rational::one() {
        t = &two - &t;
    }
    let mut negate = false;
    if t > rational::frac(1, 2) {
        t = Rational::one() - &t;
        negate = true;
    }
    let iv = if t.is_zero() {
        Interval::point(Rational::one())
    } else if t == rational::frac(1, 2) {
        Interval::point(Rational::zero())
    } else {
        let x = pi_enclosure(bits + 4).scale(&t);
        let c = cos_taylor(&x, bits + 4);
        // clamp to [-1, 1]
        let lo = c.lo.max(-Rational::one());
        let hi = c.hi.min(Rational::one());
        Interval { lo, hi }
    };
    if negate {
        iv.neg()
    } else {
        iv
    }
}

/// Enclosure of `cos(t * pi)` with width at most `2^-bits`.
pub fn cos_pi(t: &Rational, bits: u32) -> Interval {
    let target = rational::pow2_neg(bits);
    let mut extra = 8;
    loop {
        let iv = cos_pi_once(t, bits + extra);
        if iv.width() <= target {
            return iv;
        }
        extra *= 2;
    }
}

/// Enclosure of `sin(t * pi)` with width at most `2^-bits`.
pub fn sin_pi(t: &Rational, bits: u32) -> Interval {
    cos_pi(&(rational::frac(1, 2) - t), bits)
}

/// `4 cos^2(t pi) = 2 + 2 cos(2 t pi)`.
pub fn four_cos_sq_pi(t: &Rational, bits: u32) -> Interval {
    let c = cos_pi(&(t * rational::int(2)), bits + 2);
    c.scale(&rational::int(2)).add(&Interval::point(rational::int(2)))
}

/// `4 sin^2(t pi) = 2 - 2 cos(2 t pi)`.
pub fn four_sin_sq_pi(t: &Rational, bits: u32) -> Interval {
    let c = cos_pi(&(t * rational::int(2)), bits + 2);
    Interval::point(rational::int(2)).sub(&c.scale(&rational::int(2)))
}

/// Rough `f64` value of a rational, for diagnostics only.
pub fn approx_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        let (q, _) = r.numer().div_rem(r.denom());
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}
