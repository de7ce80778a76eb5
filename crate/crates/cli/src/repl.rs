use std::io::{BufRead, Write};

use gibonacci::exactnum::{Scalar, Sign};
use gibonacci::game::{fire, seeded_fire, GameConfig, GameState, GameValue, Node};
use gibonacci::Error;
use serde::{Deserialize, Serialize};

use crate::args::node;
use crate::game::root_note;
use crate::output::{both, json_line, Render};

const HELP: &str = "commands: g1, g2 (fire a node), state, help, quit";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "kebab-case")]
pub enum Event {
    State { moves: usize, u: String, v: String },
    Fired { moves: usize, node: Node, u: String, v: String },
    Illegal { node: Node, reason: String },
    Terminated { moves: usize, u: String, v: String },
    Unknown { input: String },
}

pub struct Session<'a, F: Scalar, V> {
    config: &'a GameConfig<F>,
    a: V,
    b: V,
    state: Option<GameState<V>>,
    json: bool,
    digits: usize,
}

fn positive<F: Scalar, V: GameValue<F>>(v: &V) -> Option<bool> {
    v.sign().ok().map(|s| s == Sign::Positive)
}

impl<'a, F, V> Session<'a, F, V>
where
    F: Scalar + Render,
    V: GameValue<F> + Render,
{
    pub fn new(config: &'a GameConfig<F>, a: V, b: V, json: bool, digits: usize) -> anyhow::Result<Self> {
        let (sa, sb) = (a.sign()?, b.sign()?);
        if sa == Sign::Negative || sb == Sign::Negative || (sa == Sign::Zero && sb == Sign::Zero) {
            return Err(Error::NotDominant.into());
        }
        Ok(Session { config, a, b, state: None, json, digits })
    }

    fn current(&self) -> (&V, &V) {
        match &self.state {
            Some(s) => (&s.u, &s.v),
            None => (&self.a, &self.b),
        }
    }

    fn moves(&self) -> usize {
        self.state.as_ref().map_or(0, |s| s.moves_made)
    }

    fn emit(&self, out: &mut dyn Write, e: Event) -> anyhow::Result<()> {
        if self.json {
            return json_line(out, &e);
        }
        let d = self.digits;
        let (u, v) = self.current();
        match e {
            Event::State { moves, .. } => {
                writeln!(out, "after {moves} moves: u = {}, v = {}", both(u, d), both(v, d))?
            }
            Event::Fired { moves, node, .. } => {
                writeln!(out, "move {moves}: fired {node}; u = {}, v = {}", both(u, d), both(v, d))?
            }
            Event::Illegal { reason, .. } => writeln!(out, "illegal: {reason}")?,
            Event::Terminated { moves, u, v } => {
                writeln!(out, "terminated after {moves} moves at ({u}, {v})")?
            }
            Event::Unknown { input } => writeln!(out, "unknown command {input:?}; {HELP}")?,
        }
        Ok(())
    }

    fn state_event(&self) -> Event {
        let (u, v) = self.current();
        Event::State { moves: self.moves(), u: u.exact(), v: v.exact() }
    }

    /// True once neither node can be positive.
    fn terminated(&self) -> bool {
        let (u, v) = self.current();
        self.state.is_some() && positive(u) == Some(false) && positive(v) == Some(false)
    }

    fn attempt(&mut self, node: Node, out: &mut dyn Write) -> anyhow::Result<()> {
        let next = match &self.state {
            None => seeded_fire(&self.a, &self.b, node, self.config),
            Some(s) => fire(s, node, self.config),
        };
        match next {
            Ok(s) => {
                self.state = Some(s);
                let (u, v) = self.current();
                let e = Event::Fired { moves: self.moves(), node, u: u.exact(), v: v.exact() };
                self.emit(out, e)
            }
            Err(Error::IllegalFiring { .. }) => {
                let reason = "node value not positive".to_string();
                self.emit(out, Event::Illegal { node, reason })
            }
            Err(Error::UndeterminedSign) => {
                let reason = format!("the sign of {node} depends on (a, b)");
                self.emit(out, Event::Illegal { node, reason })
            }
            Err(e) => Err(e.into()),
        }
    }

    pub fn run(&mut self, mut input: Box<dyn BufRead>, mut out: Box<dyn Write>) -> anyhow::Result<()> {
        let out = &mut *out;
        if !self.json {
            if let Some(note) = root_note(self.config, self.digits) {
                writeln!(out, "{note}")?;
            }
            writeln!(out, "{HELP}")?;
        }
        self.emit(out, self.state_event())?;
        let mut line = String::new();
        loop {
            if !self.json {
                let which = if self.state.is_none() { "seeded move" } else { "move" };
                write!(out, "{which} {}: fire g1 or g2> ", self.moves() + 1)?;
            }
            out.flush()?;
            line.clear();
            if input.read_line(&mut line)? == 0 {
                if !self.json {
                    writeln!(out)?;
                }
                return Ok(());
            }
            let cmd = line.trim();
            match cmd {
                "" => continue,
                "quit" | "exit" | "q" => return Ok(()),
                "help" | "?" => {
                    if !self.json {
                        writeln!(out, "{HELP}")?;
                    }
                    continue;
                }
                "state" => {
                    self.emit(out, self.state_event())?;
                    continue;
                }
                _ => {}
            }
            match node(cmd) {
                Ok(n) => self.attempt(n, out)?,
                Err(_) => self.emit(out, Event::Unknown { input: cmd.to_string() })?,
            }
            if self.terminated() {
                let (u, v) = self.current();
                let e = Event::Terminated { moves: self.moves(), u: u.exact(), v: v.exact() };
                self.emit(out, e)?;
                return Ok(());
            }
        }
    }
}
