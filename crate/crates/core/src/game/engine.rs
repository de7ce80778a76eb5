//! Firing rules and play.

use std::fmt;
use std::sync::Arc;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::value::GameValue;
use crate::error::{Error, Result};
use crate::exactnum::{AlgElem, NumberField, Rational, Scalar, Sign};
use crate::gibonacci::GibParams;
use crate::roots::{bound_b, largest_root};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Node {
    #[serde(rename = "g1")]
    G1,
    #[serde(rename = "g2")]
    G2,
}

impl Node {
    pub fn other(self) -> Node {
        match self {
            Node::G1 => Node::G2,
            Node::G2 => Node::G1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Node::G1 => "g1",
            Node::G2 => "g2",
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The game graph `(alpha, beta, p, q)` with scalars in `F`.
#[derive(Debug, Clone)]
pub struct GameConfig<F: Scalar> {
    pub params: GibParams,
    pub alpha: F,
    pub beta: F,
    pub p: F,
    pub q: F,
    /// Set when `pq` was constructed as the largest root `r_k`.
    pub root_index: Option<i64>,
}

impl<F: Scalar> GameConfig<F> {
    pub fn pq(&self) -> F {
        self.p.mul(&self.q)
    }

    /// Sign of `pq - B`.
    pub fn compare_bound(&self) -> Sign {
        let b = F::from_rational(bound_b(&self.params).value);
        self.pq().sub(&b).sign()
    }
}

impl GameConfig<Rational> {
    pub fn rational(params: &GibParams, p: Rational, q: Rational) -> Result<GameConfig<Rational>> {
        if !p.is_positive() {
            return Err(Error::NonPositive("p"));
        }
        if !q.is_positive() {
            return Err(Error::NonPositive("q"));
        }
        Ok(GameConfig {
            alpha: params.alpha().clone(),
            beta: params.beta().clone(),
            params: params.clone(),
            p,
            q,
            root_index: None,
        })
    }
}

impl GameConfig<AlgElem> {
    /// `pq = r_k` exactly: `theta = r_k` generates the scalars and `q = theta/p`.
    pub fn at_largest_root(params: &GibParams, k: i64, p: Rational) -> Result<GameConfig<AlgElem>> {
        if !p.is_positive() {
            return Err(Error::NonPositive("p"));
        }
        let field: Arc<NumberField> = NumberField::new(largest_root(params, k)?);
        let q = field.generator().mul_rational(&p.recip());
        Ok(GameConfig {
            alpha: AlgElem::rational(params.alpha().clone()),
            beta: AlgElem::rational(params.beta().clone()),
            params: params.clone(),
            p: AlgElem::rational(p),
            q,
            root_index: Some(k),
        })
    }

    /// A rational configuration embedded in the algebraic scalar type.
    pub fn from_rational_config(c: &GameConfig<Rational>) -> GameConfig<AlgElem> {
        GameConfig {
            params: c.params.clone(),
            alpha: AlgElem::rational(c.alpha.clone()),
            beta: AlgElem::rational(c.beta.clone()),
            p: AlgElem::rational(c.p.clone()),
            q: AlgElem::rational(c.q.clone()),
            root_index: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GameState<V> {
    pub u: V,
    pub v: V,
    pub moves_made: usize,
    pub initial_done: bool,
}

impl<V: Clone> GameState<V> {
    pub fn new(a: V, b: V) -> GameState<V> {
        GameState { u: a, v: b, moves_made: 0, initial_done: false }
    }

    pub fn value(&self, node: Node) -> &V {
        match node {
            Node::G1 => &self.u,
            Node::G2 => &self.v,
        }
    }
}

fn require_positive<F: Scalar, V: GameValue<F>>(x: &V, node: Node) -> Result<()> {
    match x.sign()? {
        Sign::Positive => Ok(()),
        s => Err(Error::IllegalFiring { node: node.name(), sign: s.name() }),
    }
}

/// Ordinary firing: `g1` sends `(u, v)` to `(-u, pu + v)`, `g2` sends it to
/// `(u + qv, -v)`. Only a strictly positive node may fire.
pub fn fire<F: Scalar, V: GameValue<F>>(
    state: &GameState<V>,
    node: Node,
    config: &GameConfig<F>,
) -> Result<GameState<V>> {
    require_positive(state.value(node), node)?;
    let (u, v) = match node {
        Node::G1 => (state.u.neg(), state.u.scale(&config.p).add(&state.v)),
        Node::G2 => (state.u.add(&state.v.scale(&config.q)), state.v.neg()),
    };
    Ok(GameState { u, v, moves_made: state.moves_made + 1, initial_done: true })
}

/// The modified first move:
/// `g1`: `(a, b) -> (-alpha a - q(alpha - beta) b, p beta a + alpha b)`,
/// `g2`: `(a, b) -> (alpha a + q beta b, -p(alpha - beta) a - alpha b)`.
/// The fired coordinate must be strictly positive.
pub fn seeded_fire<F: Scalar, V: GameValue<F>>(
    a: &V,
    b: &V,
    node: Node,
    config: &GameConfig<F>,
) -> Result<GameState<V>> {
    let (sa, sb) = (a.sign()?, b.sign()?);
    if sa == Sign::Negative || sb == Sign::Negative || (sa == Sign::Zero && sb == Sign::Zero) {
        return Err(Error::NotDominant);
    }
    let fired = match node {
        Node::G1 => a,
        Node::G2 => b,
    };
    require_positive(fired, node)?;
    let (al, be) = (&config.alpha, &config.beta);
    let diff = al.sub(be);
    let (u, v) = match node {
        Node::G1 => (
            a.scale(al).add(&b.scale(&config.q.mul(&diff))).neg(),
            a.scale(&config.p.mul(be)).add(&b.scale(al)),
        ),
        Node::G2 => (
            a.scale(al).add(&b.scale(&config.q.mul(be))),
            a.scale(&config.p.mul(&diff)).add(&b.scale(al)).neg(),
        ),
    };
    Ok(GameState { u, v, moves_made: 1, initial_done: true })
}

/// How to choose each move after the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Fire `g1` whenever legal, otherwise `g2`.
    GreedyG1,
    /// Fire `g2` whenever legal, otherwise `g1`.
    GreedyG2,
    /// Prefer the node not fired last.
    Alternate,
    /// Fire exactly these nodes after the first move.
    Scripted(Vec<Node>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome {
    Terminated { moves: usize },
    DivergesCertified,
    ExceededBudget,
}

#[derive(Debug, Clone)]
pub struct Firing<V> {
    pub node: Node,
    pub u: V,
    pub v: V,
}

#[derive(Debug, Clone)]
pub struct GameTrace<F: Scalar, V> {
    pub config: GameConfig<F>,
    pub initial: (V, V),
    pub firings: Vec<Firing<V>>,
    pub outcome: Outcome,
}

impl<F: Scalar, V: Clone> GameTrace<F, V> {
    pub fn final_pair(&self) -> (V, V) {
        match self.firings.last() {
            Some(f) => (f.u.clone(), f.v.clone()),
            None => self.initial.clone(),
        }
    }

    pub fn moves(&self) -> usize {
        self.firings.len()
    }
}

fn has_positive<F: Scalar, V: GameValue<F>>(x: &V) -> Result<bool> {
    Ok(x.sign()? == Sign::Positive)
}

/// `pq >= B` and `G_l(pq) > 0` for every `l <= up_to`.
pub fn divergence_certificate<F: Scalar>(config: &GameConfig<F>, up_to: usize) -> bool {
    if config.compare_bound() == Sign::Negative {
        return false;
    }
    let x = config.pq();
    let (mut g0, mut g1) = (config.alpha.clone(), config.beta.clone());
    if g0.sign() != Sign::Positive || g1.sign() != Sign::Positive {
        return false;
    }
    for l in 2..=up_to {
        let next = if l % 2 == 0 { x.mul(&g1).sub(&g0) } else { g1.sub(&g0) };
        if next.sign() != Sign::Positive {
            return false;
        }
        g0 = std::mem::replace(&mut g1, next);
    }
    true
}

/// Plays the seeded first move on `first`, then follows `strategy` until no
/// node is positive or `budget` moves have been made.
pub fn play<F: Scalar, V: GameValue<F>>(
    a: &V,
    b: &V,
    first: Node,
    config: &GameConfig<F>,
    strategy: &Strategy,
    budget: usize,
) -> Result<GameTrace<F, V>> {
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let mut state = seeded_fire(a, b, first, config)?;
    let mut firings = vec![Firing { node: first, u: state.u.clone(), v: state.v.clone() }];
    let mut last = first;
    let mut script = match strategy {
        Strategy::Scripted(s) => Some(s.iter()),
        _ => None,
    };
    let outcome = loop {
        let g1 = has_positive(&state.u)?;
        let g2 = has_positive(&state.v)?;
        if !g1 && !g2 {
            break Outcome::Terminated { moves: state.moves_made };
        }
        if state.moves_made >= budget {
            break if divergence_certificate(config, budget + 1) {
                Outcome::DivergesCertified
            } else {
                Outcome::ExceededBudget
            };
        }
        let pick = |pref: Node| -> Node {
            let legal = |n: Node| if n == Node::G1 { g1 } else { g2 };
            if legal(pref) {
                pref
            } else {
                pref.other()
            }
        };
        let node = match strategy {
            Strategy::GreedyG1 => pick(Node::G1),
            Strategy::GreedyG2 => pick(Node::G2),
            Strategy::Alternate => pick(last.other()),
            Strategy::Scripted(_) => match script.as_mut().and_then(Iterator::next) {
                Some(&n) => n,
                None => break Outcome::ExceededBudget,
            },
        };
        state = fire(&state, node, config)?;
        firings.push(Firing { node, u: state.u.clone(), v: state.v.clone() });
        last = node;
    };
    Ok(GameTrace { config: config.clone(), initial: (a.clone(), b.clone()), firings, outcome })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{frac, int};
    use crate::game::value::LinearForm;

    fn example() -> GameConfig<Rational> {
        GameConfig::rational(&GibParams::from_ints(5, 2).unwrap(), frac(7, 2), frac(8, 7)).unwrap()
    }

    #[test]
    fn ordinary_firing() {
        let c = GameConfig::rational(&GibParams::fibonacci(), int(2), int(1)).unwrap();
        let s = fire(&GameState::new(int(3), int(5)), Node::G1, &c).unwrap();
        assert_eq!((s.u, s.v), (int(-3), int(11)));
        let e = fire(&GameState::new(int(4), int(0)), Node::G2, &c).unwrap_err();
        assert_eq!(e, Error::IllegalFiring { node: "g2", sign: "zero" });
    }

    #[test]
    fn seeded_firing_examples() {
        let c = example();
        let (a, b) = (LinearForm::basis_a(), LinearForm::basis_b());
        let s = seeded_fire(&a, &b, Node::G1, &c).unwrap();
        assert!(s.u.value_eq(&LinearForm::new(int(-5), frac(-24, 7))));
        assert!(s.v.value_eq(&LinearForm::new(int(7), int(5))));
        let s = seeded_fire(&a, &b, Node::G2, &c).unwrap();
        assert!(s.u.value_eq(&LinearForm::new(int(5), frac(16, 7))));
        assert!(s.v.value_eq(&LinearForm::new(frac(-21, 2), int(-5))));
    }

    #[test]
    fn seeded_firing_reduces_to_ordinary_rules() {
        let c = GameConfig::rational(&GibParams::fibonacci(), frac(3, 2), int(2)).unwrap();
        let s = seeded_fire(&int(2), &int(5), Node::G1, &c).unwrap();
        let t = fire(&GameState::new(int(2), int(5)), Node::G1, &c).unwrap();
        assert_eq!((s.u, s.v), (t.u, t.v));
    }

    #[test]
    fn seeded_legality() {
        let c = example();
        assert_eq!(
            seeded_fire(&int(0), &int(1), Node::G1, &c).unwrap_err(),
            Error::IllegalFiring { node: "g1", sign: "zero" }
        );
        assert_eq!(seeded_fire(&int(0), &int(0), Node::G2, &c).unwrap_err(), Error::NotDominant);
        assert_eq!(seeded_fire(&int(-1), &int(2), Node::G2, &c).unwrap_err(), Error::NotDominant);
    }

    #[test]
    fn example_games_terminate_in_six_moves() {
        let c = example();
        for first in [Node::G1, Node::G2] {
            let t = play(&int(1), &int(1), first, &c, &Strategy::GreedyG1, 50).unwrap();
            assert_eq!(t.outcome, Outcome::Terminated { moves: 6 });
            assert_eq!(t.final_pair(), (int(-1), int(-1)));
        }
        let t = play(&int(1), &int(0), Node::G1, &c, &Strategy::Alternate, 50).unwrap();
        assert_eq!(t.outcome, Outcome::Terminated { moves: 5 });
    }

    #[test]
    fn budgets_and_certificates() {
        let c = GameConfig::rational(&GibParams::fibonacci(), int(2), int(2)).unwrap();
        let t = play(&int(1), &int(1), Node::G1, &c, &Strategy::GreedyG1, 25).unwrap();
        assert_eq!(t.outcome, Outcome::DivergesCertified);
        assert_eq!(t.moves(), 25);
        let c = example();
        let t = play(&int(1), &int(1), Node::G1, &c, &Strategy::GreedyG1, 3).unwrap();
        assert_eq!(t.outcome, Outcome::ExceededBudget);
        assert_eq!(
            play(&int(1), &int(1), Node::G1, &c, &Strategy::GreedyG1, 0).unwrap_err(),
            Error::ZeroBudget
        );
    }

    #[test]
    fn scripted_play() {
        let c = example();
        let script = Strategy::Scripted(vec![Node::G2, Node::G1]);
        let t = play(&int(1), &int(1), Node::G1, &c, &script, 50).unwrap();
        assert_eq!(t.outcome, Outcome::ExceededBudget);
        assert_eq!(t.moves(), 3);
        let bad = Strategy::Scripted(vec![Node::G1]);
        assert!(matches!(
            play(&int(1), &int(1), Node::G1, &c, &bad, 50),
            Err(Error::IllegalFiring { node: "g1", .. })
        ));
    }

    #[test]
    fn play_at_an_irrational_root() {
        // pq = 2 + sqrt 2 = r_4 for the Lucas seeds: 5 moves when strongly dominant
        let c = GameConfig::at_largest_root(&GibParams::lucas(), 4, int(1)).unwrap();
        let one = AlgElem::one();
        let zero = AlgElem::rational(int(0));
        let t = play(&one, &one, Node::G1, &c, &Strategy::GreedyG2, 50).unwrap();
        assert_eq!(t.outcome, Outcome::Terminated { moves: 5 });
        let t = play(&one, &zero, Node::G1, &c, &Strategy::GreedyG2, 50).unwrap();
        assert_eq!(t.outcome, Outcome::Terminated { moves: 4 });
    }
}
