use std::io::{BufRead, Write};

use anyhow::bail;
use gibonacci::exactnum::{AlgElem, Rational, Scalar};
use gibonacci::game::{
    classify, play, predicted_moves, threshold, GameConfig, GameValue, LinearForm, Node, Outcome, Strategy,
};
use gibonacci::Error;
use serde::{Deserialize, Serialize};

use crate::args::{Format, GraphArgs, StartArgs, StrategyArg};
use crate::commands::params;
use crate::output::{both, json_line, json_pretty, require, Render};
use crate::repl;

const TEXT_JSON: [Format; 2] = [Format::Text, Format::Json];

pub enum AnyConfig {
    Rational(GameConfig<Rational>),
    Root(GameConfig<AlgElem>),
}

pub fn config(g: &GraphArgs) -> anyhow::Result<AnyConfig> {
    let gp = params(&g.params)?;
    match (&g.q, g.root) {
        (Some(q), _) => Ok(AnyConfig::Rational(GameConfig::rational(&gp, g.p.clone(), q.clone())?)),
        (None, Some(k)) => Ok(AnyConfig::Root(GameConfig::at_largest_root(&gp, k, g.p.clone())?)),
        (None, None) => bail!("either --q or --root is required"),
    }
}

/// Work that runs for every scalar type and every kind of starting pair.
pub trait Job {
    fn run<F, V>(self, config: &GameConfig<F>, a: V, b: V) -> anyhow::Result<()>
    where
        F: Scalar + Render,
        V: GameValue<F> + Render;
}

fn start<F: Scalar + Render + GameValue<F>, J: Job>(
    c: &GameConfig<F>,
    s: &StartArgs,
    job: J,
) -> anyhow::Result<()> {
    if s.symbolic {
        return job.run(c, LinearForm::<F>::basis_a(), LinearForm::<F>::basis_b());
    }
    match (&s.a, &s.b) {
        (Some(a), Some(b)) => job.run(c, F::from_rational(a.clone()), F::from_rational(b.clone())),
        _ => bail!("--a and --b are required unless --symbolic is given"),
    }
}

pub fn dispatch<J: Job>(g: &GraphArgs, s: &StartArgs, job: J) -> anyhow::Result<()> {
    match config(g)? {
        AnyConfig::Rational(c) => start(&c, s, job),
        AnyConfig::Root(c) => start(&c, s, job),
    }
}

/// Describes `pq` when it was built as a largest root.
pub fn root_note<F: Scalar>(c: &GameConfig<F>, digits: usize) -> Option<String> {
    let k = c.root_index?;
    let pq = c.pq();
    Some(format!("pq = r = r_{k} ≈ {}", pq.to_decimal(digits)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiringLine {
    #[serde(rename = "move")]
    pub index: usize,
    pub node: Node,
    pub u: String,
    pub v: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u_decimal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_decimal: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeLine {
    pub outcome: Outcome,
    pub moves: usize,
    pub u: String,
    pub v: String,
}

pub struct Play {
    pub out: Box<dyn Write>,
    pub format: Format,
    pub digits: usize,
    pub first: Node,
    pub strategy: Strategy,
    pub budget: usize,
}

impl Job for Play {
    fn run<F, V>(mut self, c: &GameConfig<F>, a: V, b: V) -> anyhow::Result<()>
    where
        F: Scalar + Render,
        V: GameValue<F> + Render,
    {
        require(self.format, &TEXT_JSON, "game play")?;
        let trace = play(&a, &b, self.first, c, &self.strategy, self.budget)?;
        let out = &mut self.out;
        let d = self.digits;
        let (fu, fv) = trace.final_pair();
        if self.format == Format::Json {
            for (i, f) in trace.firings.iter().enumerate() {
                let line = FiringLine {
                    index: i + 1,
                    node: f.node,
                    u: f.u.exact(),
                    v: f.v.exact(),
                    u_decimal: f.u.approx(d),
                    v_decimal: f.v.approx(d),
                };
                json_line(out, &line)?;
            }
            let last =
                OutcomeLine { outcome: trace.outcome, moves: trace.moves(), u: fu.exact(), v: fv.exact() };
            json_line(out, &last)?;
            return Ok(());
        }
        if let Some(note) = root_note(c, d) {
            writeln!(out, "{note}")?;
        }
        writeln!(out, "start: u = {}, v = {}", both(&a, d), both(&b, d))?;
        for (i, f) in trace.firings.iter().enumerate() {
            let tag = if i == 0 { " (seeded)" } else { "" };
            writeln!(out, "{} {}{tag}: u = {}, v = {}", i + 1, f.node, both(&f.u, d), both(&f.v, d))?;
        }
        match trace.outcome {
            Outcome::Terminated { moves } => {
                writeln!(out, "terminated after {moves} moves at ({}, {})", fu.exact(), fv.exact())?
            }
            Outcome::DivergesCertified => {
                writeln!(out, "no termination within {} moves; divergence certified (pq >= B)", self.budget)?
            }
            Outcome::ExceededBudget => {
                writeln!(out, "budget of {} moves exhausted without termination", self.budget)?
            }
        }
        Ok(())
    }
}

pub fn strategy(s: StrategyArg, script: Option<Vec<Node>>) -> Strategy {
    match (script, s) {
        (Some(nodes), _) => Strategy::Scripted(nodes),
        (None, StrategyArg::GreedyG1) => Strategy::GreedyG1,
        (None, StrategyArg::GreedyG2) => Strategy::GreedyG2,
        (None, StrategyArg::Alternate) => Strategy::Alternate,
    }
}

pub fn classify_cmd(out: &mut dyn Write, format: Format, g: &GraphArgs) -> anyhow::Result<()> {
    require(format, &TEXT_JSON, "game classify")?;
    let c = match config(g)? {
        AnyConfig::Rational(c) => classify(&c)?,
        AnyConfig::Root(c) => classify(&c)?,
    };
    if format == Format::Json {
        json_pretty(out, &c)?;
    } else {
        writeln!(out, "{}", c.summary())?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub moves: usize,
    pub j: i64,
    /// `b/a` for `g1` first, `a/b` for `g2` first; at or below it the game takes `j` moves.
    pub threshold: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold_decimal: Option<String>,
}

fn predict_in<F: Scalar + Render>(
    c: &GameConfig<F>,
    a: &Rational,
    b: &Rational,
    first: Node,
    digits: usize,
) -> anyhow::Result<Prediction> {
    let (a, b) = (F::from_rational(a.clone()), F::from_rational(b.clone()));
    let moves = predicted_moves(c, &a, &b, first)?;
    let (j, t) = match threshold(c, first) {
        Ok((j, t)) => (j, Some(t)),
        Err(Error::Unsupported(_)) => (classify(c)?.j.unwrap_or_default(), None),
        Err(e) => return Err(e.into()),
    };
    Ok(Prediction {
        moves,
        j,
        threshold: t.as_ref().map(|t| t.exact()),
        threshold_decimal: t.as_ref().and_then(|t| t.approx(digits)),
    })
}

pub fn predict_cmd(
    out: &mut dyn Write,
    format: Format,
    digits: usize,
    g: &GraphArgs,
    a: &Rational,
    b: &Rational,
    first: Node,
) -> anyhow::Result<()> {
    require(format, &TEXT_JSON, "game predict")?;
    let p = match config(g)? {
        AnyConfig::Rational(c) => predict_in(&c, a, b, first, digits)?,
        AnyConfig::Root(c) => predict_in(&c, a, b, first, digits)?,
    };
    if format == Format::Json {
        return json_pretty(out, &p);
    }
    writeln!(out, "{} moves", p.moves)?;
    let ratio = if first == Node::G1 { "b/a" } else { "a/b" };
    if let Some(t) = &p.threshold {
        let t = match &p.threshold_decimal {
            Some(d) if d != t => format!("{t} (≈ {d})"),
            _ => t.clone(),
        };
        writeln!(out, "{} moves when {ratio} <= {t}, otherwise {}", p.j, p.j + 1)?;
    }
    Ok(())
}

pub struct Repl {
    pub input: Box<dyn BufRead>,
    pub out: Box<dyn Write>,
    pub format: Format,
    pub digits: usize,
}

impl Job for Repl {
    fn run<F, V>(self, c: &GameConfig<F>, a: V, b: V) -> anyhow::Result<()>
    where
        F: Scalar + Render,
        V: GameValue<F> + Render,
    {
        require(self.format, &TEXT_JSON, "game repl")?;
        let mut session = repl::Session::new(c, a, b, self.format == Format::Json, self.digits)?;
        session.run(self.input, self.out)
    }
}
