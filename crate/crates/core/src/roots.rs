//! Certified root sets of the sign-alternating polynomials and the checks
//! built on them: root counts and bounds, interlacing, closed forms for the
//! Fibonacci and Lucas cases, and the duality with the `W` sequence.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::approx::{four_cos_sq_pi, four_sin_sq_pi};
use crate::exactnum::rational::{self, Rational, Sign};
use crate::exactnum::{isolate_real_roots, AlgebraicNumber, Interval, Poly, SturmChain};
use crate::gibonacci::{build_sa_poly, w_poly, GibParams, SaSequence};

/// Which side of `alpha/beta = 2` the parameters fall on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundRegime {
    RatioAtMostTwo,
    RatioAboveTwo,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootBound {
    #[serde(with = "rational::serde_text")]
    pub value: Rational,
    pub regime: BoundRegime,
}

/// `4` when `alpha/beta <= 2`, otherwise `(alpha/beta)^2 / (alpha/beta - 1)`.
pub fn bound_b(params: &GibParams) -> RootBound {
    let r = params.ratio();
    if r <= rational::int(2) {
        RootBound { value: rational::int(4), regime: BoundRegime::RatioAtMostTwo }
    } else {
        let value = &r * &r / (&r - rational::int(1));
        RootBound { value, regime: BoundRegime::RatioAboveTwo }
    }
}

/// All real roots of `G_k`, ascending.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSet {
    pub k: i64,
    pub params: GibParams,
    pub poly: Poly,
    pub roots: Vec<AlgebraicNumber>,
}

impl RootSet {
    /// `floor(k/2)`.
    pub fn d_k(&self) -> usize {
        (self.k / 2) as usize
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Every root lies strictly inside `(0, B)`.
    pub fn inside_bound(&self) -> bool {
        let b = bound_b(&self.params).value;
        self.roots.iter().all(|z| {
            z.cmp_rational(&rational::int(0)) == Ordering::Greater && z.cmp_rational(&b) == Ordering::Less
        })
    }

    /// The Sturm count over `(0, B)` equals `floor(k/2)`: nothing is missed.
    pub fn count_matches(&self) -> bool {
        let b = bound_b(&self.params).value;
        let window = Interval { lo: rational::int(0), hi: b };
        self.roots.len() == self.d_k()
            && isolate_real_roots(&self.poly, &window).is_ok_and(|v| v.len() == self.d_k())
    }

    pub fn largest(&self) -> Option<&AlgebraicNumber> {
        self.roots.last()
    }
}

fn real_line_window(p: &Poly) -> Interval {
    let r = p.root_bound() + rational::int(1);
    Interval { lo: -r.clone(), hi: r }
}

fn root_set_from(params: &GibParams, k: i64, poly: Poly) -> Result<RootSet> {
    let roots = AlgebraicNumber::roots_in(&poly, &real_line_window(&poly))?;
    Ok(RootSet { k, params: params.clone(), poly, roots })
}

pub fn roots_of(params: &GibParams, k: i64) -> Result<RootSet> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("k = {k} must be at least 2")));
    }
    root_set_from(params, k, build_sa_poly(params, k)?.poly)
}

/// Root sets for `2 <= k <= max_k`, sharing one recurrence pass.
pub fn root_sets(params: &GibParams, max_k: i64) -> Result<Vec<RootSet>> {
    let seq = SaSequence::new(params, max_k.max(0) as usize);
    (2..=max_k).map(|k| root_set_from(params, k, seq.get(k).clone())).collect()
}

/// The largest root `r_k`.
pub fn largest_root(params: &GibParams, k: i64) -> Result<AlgebraicNumber> {
    roots_of(params, k)?.roots.pop().ok_or_else(|| Error::OutOfRange(format!("G_{k} has no real roots")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Interlacing {
    BothSides,
    Right,
    None,
}

fn less(a: &AlgebraicNumber, b: &AlgebraicNumber) -> bool {
    a.cmp_exact(b) == Ordering::Less
}

/// How the sorted roots `x` interlace the sorted roots `y`.
pub fn interlacing(x: &[AlgebraicNumber], y: &[AlgebraicNumber]) -> Interlacing {
    let (n, m) = (x.len(), y.len());
    if n >= 1 && m + 1 == n {
        // x1 < y1 < x2 < ... < y_{n-1} < x_n
        let ok = (0..m).all(|i| less(&x[i], &y[i]) && less(&y[i], &x[i + 1]));
        if ok {
            return Interlacing::BothSides;
        }
    } else if n >= 1 && m == n {
        // y1 < x1 < y2 < ... < y_n < x_n
        let ok = (0..n).all(|i| less(&y[i], &x[i]) && (i + 1 == n || less(&x[i], &y[i + 1])));
        if ok {
            return Interlacing::Right;
        }
    }
    Interlacing::None
}

pub fn check_interlacing(a: &RootSet, b: &RootSet) -> Result<Interlacing> {
    if a.params != b.params || !(a.k == b.k + 1 || a.k == b.k + 2) {
        return Err(Error::Unsupported(
            "interlacing compares S_{k+1} or S_{k+2} with S_k for the same parameters".into(),
        ));
    }
    Ok(interlacing(&a.roots, &b.roots))
}

/// Enclosures of `4cos^2(j pi/(k+1))`, `1 <= j <= floor(k/2)`.
pub fn fibonacci_closed_roots(k: i64, bits: u32) -> Vec<Interval> {
    (1..=k / 2).map(|j| four_cos_sq_pi(&rational::frac(j, k + 1), bits)).collect()
}

/// Enclosures of `4cos^2(j pi/k - pi/2^{r+1})` with `k = 2^r d`, `d` odd and
/// `j = (d + 2l - 1)/2` for `1 <= l <= floor(k/2)`.
pub fn lucas_closed_roots(k: i64, bits: u32) -> Vec<Interval> {
    let r = k.trailing_zeros();
    let d = k >> r;
    let shift = rational::pow2_neg(r + 1);
    (1..=k / 2)
        .map(|l| {
            let j = (d + 2 * l - 1) / 2;
            four_cos_sq_pi(&(rational::frac(j, k) - &shift), bits)
        })
        .collect()
}

/// Odd `k` only: `4sin^2(j pi/k)`, `1 <= j <= floor(k/2)`.
pub fn lucas_closed_roots_sin(k: i64, bits: u32) -> Result<Vec<Interval>> {
    if k % 2 == 0 {
        return Err(Error::Unsupported("the sine form needs odd k".into()));
    }
    Ok((1..=k / 2).map(|j| four_sin_sq_pi(&rational::frac(j, k), bits)).collect())
}

/// Enclosures of the seven roots of `G^{1,1}_15` written with nested square
/// roots of 2.
pub fn nested_radical_roots_15(bits: u32) -> Vec<Interval> {
    let two = Interval::point(rational::int(2));
    let s2 = two.sqrt(bits + 8).expect("2 > 0");
    let inner_hi = two.add(&s2).sqrt(bits + 8).expect("positive");
    let inner_lo = two.sub(&s2).sqrt(bits + 8).expect("positive");
    vec![
        two.sub(&inner_hi),
        two.sub(&s2),
        two.sub(&inner_lo),
        two.clone(),
        two.add(&inner_lo),
        two.add(&s2),
        two.add(&inner_hi),
    ]
}

/// Number of distinct roots of `chain`'s polynomial in the closed interval.
fn roots_in_closed(p: &Poly, chain: &SturmChain, iv: &Interval) -> usize {
    let at = |x: &Rational| usize::from(chain.sign_at(x) == Sign::Zero);
    if iv.lo == iv.hi {
        return at(&iv.lo);
    }
    let inner = isolate_real_roots(p, iv).map_or(0, |v| v.len());
    inner + at(&iv.lo) + at(&iv.hi)
}

/// For each enclosure, the index of the unique root whose isolating interval
/// meets it in a root. Fails if some enclosure matches zero or several roots,
/// or two enclosures match the same root.
pub fn match_enclosures(set: &RootSet, enclosures: &[Interval]) -> Result<Vec<usize>> {
    let chain = SturmChain::new(&set.poly);
    let mut used = vec![false; set.roots.len()];
    let mut out = Vec::with_capacity(enclosures.len());
    for e in enclosures {
        let hits: Vec<usize> = set
            .roots
            .iter()
            .enumerate()
            .filter_map(|(i, z)| {
                let j = z.enclosure().intersection(e)?;
                (roots_in_closed(&set.poly, &chain, &j) == 1).then_some(i)
            })
            .collect();
        match hits.as_slice() {
            [i] if !used[*i] => {
                used[*i] = true;
                out.push(*i);
            }
            _ => {
                return Err(Error::Unsupported(format!(
                    "enclosure {e} matches roots {hits:?} of G_{}",
                    set.k
                )))
            }
        }
    }
    Ok(out)
}

/// The enclosures match the root set one-to-one.
pub fn closed_forms_match(set: &RootSet, enclosures: &[Interval]) -> bool {
    enclosures.len() == set.roots.len() && match_enclosures(set, enclosures).is_ok()
}

/// The real roots of `W_{k-1}` (ratio `alpha/beta`) are exactly
/// `{-1/z : z in S_k}`.
pub fn w_dual_check(params: &GibParams, k: i64) -> Result<bool> {
    let s = roots_of(params, k)?;
    let w = w_poly(&params.ratio(), (k - 1) as usize)?;
    if SturmChain::new(&w).count_all() != s.roots.len() {
        return Ok(false);
    }
    for z in &s.roots {
        if z.neg_reciprocal()?.sign_of(&w) != Sign::Zero {
            return Ok(false);
        }
    }
    Ok(true)
}
