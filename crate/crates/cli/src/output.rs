use std::fmt;
use std::io::Write;

use gibonacci::exactnum::{AlgElem, Rational, Scalar};
use gibonacci::game::LinearForm;
use serde::Serialize;

use crate::args::Format;

/// A bad flag combination found after parsing; exits with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn require(format: Format, allowed: &[Format], command: &str) -> anyhow::Result<()> {
    if allowed.contains(&format) {
        return Ok(());
    }
    let names: Vec<&str> = allowed.iter().map(|f| f.name()).collect();
    Err(UsageError(format!(
        "{command} does not support --format {}; use one of {}",
        format.name(),
        names.join(", ")
    ))
    .into())
}

pub fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> anyhow::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn json_pretty<T: Serialize>(out: &mut dyn Write, value: &T) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Exact text of a node value and, for numbers, a decimal.
pub trait Render {
    fn exact(&self) -> String;
    fn approx(&self, digits: usize) -> Option<String>;
}

impl Render for Rational {
    fn exact(&self) -> String {
        self.to_string()
    }
    fn approx(&self, digits: usize) -> Option<String> {
        Some(Scalar::to_decimal(self, digits))
    }
}

impl Render for AlgElem {
    fn exact(&self) -> String {
        self.to_string()
    }
    fn approx(&self, digits: usize) -> Option<String> {
        Some(Scalar::to_decimal(self, digits))
    }
}

impl<F: Scalar> Render for LinearForm<F> {
    fn exact(&self) -> String {
        self.to_string()
    }
    fn approx(&self, _: usize) -> Option<String> {
        None
    }
}

/// `exact (≈ decimal)`, dropping the decimal when it adds nothing.
pub fn both<V: Render>(v: &V, digits: usize) -> String {
    let e = v.exact();
    match v.approx(digits) {
        Some(d) if !same_number(&e, &d) => format!("{e} (≈ {d})"),
        _ => e,
    }
}

// "1" and "1.000" name the same number; "1/3" and "0.333" do not.
fn same_number(exact: &str, decimal: &str) -> bool {
    if exact == decimal {
        return true;
    }
    match decimal.split_once('.') {
        Some((int, frac)) => int == exact && frac.bytes().all(|b| b == b'0'),
        None => false,
    }
}
