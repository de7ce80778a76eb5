//! Exact predictions from the values `g_l = G_l(pq)`: classification of the
//! game graph, move counts, thresholds, terminal numbers and the symbolic
//! shape of every trace.

use serde::{Deserialize, Serialize};

use super::engine::{GameConfig, Node};
use super::value::LinearForm;
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, Sign};

/// Upper limit on the index scanned when locating `pq` among the `r_j`.
pub const SCAN_LIMIT: i64 = 10_000;

/// `g_{-1} = alpha - beta` and `g_l = G_l(pq)` for `0 <= l <= max`.
#[derive(Debug, Clone)]
pub struct GHat<F> {
    values: Vec<F>,
}

impl<F: Scalar> GHat<F> {
    pub fn new(config: &GameConfig<F>, max: i64) -> GHat<F> {
        let mut g = GHat { values: Vec::new() };
        g.values.push(config.alpha.sub(&config.beta));
        g.values.push(config.alpha.clone());
        g.values.push(config.beta.clone());
        g.extend_to(config, max);
        g
    }

    fn extend_to(&mut self, config: &GameConfig<F>, max: i64) {
        let x = config.pq();
        while self.max() < max {
            let l = self.max() + 1;
            let prev = self.get(l - 1);
            let prev2 = self.get(l - 2);
            let next = if l % 2 == 0 { x.mul(prev).sub(prev2) } else { prev.sub(prev2) };
            self.values.push(next);
        }
    }

    pub fn max(&self) -> i64 {
        self.values.len() as i64 - 2
    }

    pub fn get(&self, l: i64) -> &F {
        &self.values[(l + 1) as usize]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    AllDiverge,
    AllTerminate,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::AllDiverge => "all-diverge",
            Regime::AllTerminate => "all-terminate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub regime: Regime,
    pub strongly_convergent: bool,
    /// `k` with `pq = r_k`.
    pub k_if_root: Option<i64>,
    /// `j` with `r_{j-1} < pq <= r_j` (taking `r_1 = 0`), in the terminating regime.
    pub j: Option<i64>,
}

impl Classification {
    pub fn summary(&self) -> String {
        let sc = if self.strongly_convergent { "strongly convergent" } else { "not strongly convergent" };
        format!("{}; {}", self.regime.name(), sc)
    }
}

/// Locates `pq` exactly: against `B`, then by the first `l >= 2` with
/// `G_l(pq) <= 0`.
pub fn classify<F: Scalar>(config: &GameConfig<F>) -> Result<Classification> {
    if config.compare_bound() != Sign::Negative {
        return Ok(Classification {
            regime: Regime::AllDiverge,
            strongly_convergent: true,
            k_if_root: None,
            j: None,
        });
    }
    let mut g = GHat::new(config, 2);
    for l in 2..=SCAN_LIMIT {
        g.extend_to(config, l);
        match g.get(l).sign() {
            Sign::Positive => continue,
            Sign::Zero => {
                return Ok(Classification {
                    regime: Regime::AllTerminate,
                    strongly_convergent: true,
                    k_if_root: Some(l),
                    j: Some(l),
                })
            }
            Sign::Negative => {
                return Ok(Classification {
                    regime: Regime::AllTerminate,
                    strongly_convergent: false,
                    k_if_root: None,
                    j: Some(l),
                })
            }
        }
    }
    Err(Error::Unsupported(format!("pq was not located among r_2..r_{SCAN_LIMIT}")))
}

fn terminating_j<F: Scalar>(config: &GameConfig<F>) -> Result<(i64, GHat<F>)> {
    let c = classify(config)?;
    match c.j {
        Some(j) => Ok((j, GHat::new(config, j + 1))),
        None => Err(Error::DivergentRegime),
    }
}

/// The linear form deciding between `j` and `j + 1` moves: the game takes
/// `j` moves iff its value at `(a, b)` is `<= 0`.
pub fn decision_form<F: Scalar>(config: &GameConfig<F>, first: Node) -> Result<(i64, LinearForm<F>)> {
    let (j, g) = terminating_j(config)?;
    let (p, q) = (&config.p, &config.q);
    let (gj, gj1) = (g.get(j).clone(), g.get(j - 1).clone());
    let form = match (first, j % 2 == 0) {
        (Node::G1, true) => LinearForm::new(gj, q.mul(&gj1)),
        (Node::G1, false) => LinearForm::new(p.mul(&gj), gj1),
        (Node::G2, true) => LinearForm::new(p.mul(&gj1), gj),
        (Node::G2, false) => LinearForm::new(gj1, q.mul(&gj)),
    };
    Ok((j, form))
}

/// Exact number of moves from `(a, b)` with the given first node.
pub fn predicted_moves<F: Scalar>(config: &GameConfig<F>, a: &F, b: &F, first: Node) -> Result<usize> {
    let (sa, sb) = (a.sign(), b.sign());
    if sa == Sign::Negative || sb == Sign::Negative || (sa == Sign::Zero && sb == Sign::Zero) {
        return Err(Error::NotDominant);
    }
    let fired = if first == Node::G1 { sa } else { sb };
    if fired != Sign::Positive {
        return Err(Error::IllegalFiring { node: first.name(), sign: fired.name() });
    }
    let (j, form) = decision_form(config, first)?;
    // the seeded move must leave the fired node non-positive for play to
    // follow the single-legal-node pattern
    let (u1, v1) = pattern_state(config, first, 1)?;
    let fired_after = if first == Node::G1 { u1.at(a, b) } else { v1.at(a, b) };
    if fired_after.sign() == Sign::Positive {
        return Err(Error::Unsupported(
            "the seeded move leaves both nodes positive (alpha < beta); use play".into(),
        ));
    }
    let n = if form.at(a, b).sign() == Sign::Positive { j + 1 } else { j };
    Ok(n as usize)
}

/// The ratio at which the move count switches from `j` to `j + 1`:
/// `b/a` for `g1` first and `a/b` for `g2` first. At or below the ratio the
/// game takes `j` moves.
pub fn threshold<F: Scalar>(config: &GameConfig<F>, first: Node) -> Result<(i64, F)> {
    let (j, form) = decision_form(config, first)?;
    // form = c_a a + c_b b <= 0  <=>  b/a <= -c_a/c_b  (g1)  or  a/b <= -c_b/c_a  (g2)
    let (num, den) = match first {
        Node::G1 => (&form.a, &form.b),
        Node::G2 => (&form.b, &form.a),
    };
    let inv = den
        .checked_inv()
        .ok_or_else(|| Error::Unsupported("threshold is undefined: g_{j-1} vanishes".into()))?;
    Ok((j, num.neg().mul(&inv)))
}

/// Node values after `m` moves of a game from generic `(a, b)`, read off the
/// alternating pattern of the `g_l`.
pub fn pattern_state<F: Scalar>(
    config: &GameConfig<F>,
    first: Node,
    m: usize,
) -> Result<(LinearForm<F>, LinearForm<F>)> {
    if m == 0 {
        return Ok((LinearForm::basis_a(), LinearForm::basis_b()));
    }
    let m = m as i64;
    let g = GHat::new(config, m + 1);
    let (p, q) = (&config.p, &config.q);
    let gh = |l: i64| g.get(l).clone();
    let lf = |a: F, b: F| LinearForm::new(a, b);
    let neg = |f: F| f.neg();
    let i = m / 2;
    Ok(match (first, m % 2 == 1) {
        (Node::G1, true) => {
            (lf(neg(gh(2 * i)), neg(q.mul(&gh(2 * i - 1)))), lf(p.mul(&gh(2 * i + 1)), gh(2 * i)))
        }
        (Node::G1, false) => {
            (lf(gh(2 * i), q.mul(&gh(2 * i - 1))), lf(neg(p.mul(&gh(2 * i - 1))), neg(gh(2 * i - 2))))
        }
        (Node::G2, true) => {
            (lf(gh(2 * i), q.mul(&gh(2 * i + 1))), lf(neg(p.mul(&gh(2 * i - 1))), neg(gh(2 * i))))
        }
        (Node::G2, false) => {
            (lf(neg(gh(2 * i - 2)), neg(q.mul(&gh(2 * i - 1)))), lf(p.mul(&gh(2 * i - 1)), gh(2 * i)))
        }
    })
}

fn root_k<F: Scalar>(config: &GameConfig<F>) -> Result<(i64, GHat<F>)> {
    let k = classify(config)?.k_if_root.ok_or(Error::NotALargestRoot)?;
    Ok((k, GHat::new(config, k + 1)))
}

/// Terminal pair at `pq = r_k`: `(q g_{k+1} b, -p g_{k-1} a)` for even `k`
/// and `(-g_{k-1} a, g_{k+1} b)` for odd `k`.
pub fn terminal_numbers<F: Scalar>(config: &GameConfig<F>, a: &F, b: &F) -> Result<(F, F)> {
    let (k, g) = root_k(config)?;
    let (p, q) = (&config.p, &config.q);
    Ok(if k % 2 == 0 {
        (q.mul(g.get(k + 1)).mul(b), p.mul(g.get(k - 1)).mul(a).neg())
    } else {
        (g.get(k - 1).mul(a).neg(), g.get(k + 1).mul(b))
    })
}

/// The second displayed form of the terminal pair: `(-q g_{k-1} b, p g_{k+1} a)`
/// for even `k` and `(g_{k+1} a, -g_{k-1} b)` for odd `k`.
pub fn terminal_numbers_twin<F: Scalar>(config: &GameConfig<F>, a: &F, b: &F) -> Result<(F, F)> {
    let (k, g) = root_k(config)?;
    let (p, q) = (&config.p, &config.q);
    Ok(if k % 2 == 0 {
        (q.mul(g.get(k - 1)).mul(b).neg(), p.mul(g.get(k + 1)).mul(a))
    } else {
        (g.get(k + 1).mul(a), g.get(k - 1).mul(b).neg())
    })
}

/// `G_{k+1}(r_k) = -G_{k-1}(r_k)`.
pub fn twin_identity<F: Scalar>(config: &GameConfig<F>) -> Result<bool> {
    let (k, g) = root_k(config)?;
    Ok(g.get(k + 1).value_eq(&g.get(k - 1).neg()))
}
