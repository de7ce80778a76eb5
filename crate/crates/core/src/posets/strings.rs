use std::fmt;

use serde::{Deserialize, Serialize};

/// A requirement broken by a candidate string. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Violation {
    Length { expected: usize, got: usize },
    Coordinate { index: usize, value: u32 },
    Fibonacci { index: usize },
    Alpha { first: u32, last: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Length { expected, got } => write!(f, "expected {expected} coordinates, got {got}"),
            Violation::Coordinate { index, value } => {
                write!(f, "coordinate requirement fails at T_{index} = {value}")
            }
            Violation::Fibonacci { index } => {
                write!(f, "Fibonacci requirement fails: T_{} = T_{index} + 1", index + 1)
            }
            Violation::Alpha { first, last } => {
                write!(f, "alpha-requirement fails: (T_1, T_k) = ({first}, {last})")
            }
        }
    }
}

/// A validated alpha-Gibonaccian string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GibString {
    entries: Vec<u32>,
    n: u32,
    alpha: u32,
}

impl GibString {
    pub fn new(entries: Vec<u32>, n: u32, alpha: u32) -> Result<GibString, Vec<Violation>> {
        validate_string(&entries, n, entries.len(), alpha)?;
        Ok(GibString { entries, n, alpha })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn rank(&self) -> u32 {
        rank_of(&self.entries, self.n)
    }
}

impl fmt::Display for GibString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", string_label(&self.entries))
    }
}

pub(crate) fn string_label(t: &[u32]) -> String {
    let parts: Vec<String> = t.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Every broken requirement, coordinate failures first, then Fibonacci,
/// then alpha. The alpha-requirement only constrains strings with `k >= 2`.
pub fn validate_string(t: &[u32], n: u32, k: usize, alpha: u32) -> Result<(), Vec<Violation>> {
    if t.len() != k {
        return Err(vec![Violation::Length { expected: k, got: t.len() }]);
    }
    let mut out = Vec::new();
    for (i, &v) in t.iter().enumerate() {
        let j = i as u32;
        if v < j * n + 1 || v > (j + 1) * n {
            out.push(Violation::Coordinate { index: i + 1, value: v });
        }
    }
    for i in 1..k {
        if t[i] == t[i - 1] + 1 {
            out.push(Violation::Fibonacci { index: i });
        }
    }
    if k >= 2 && alpha_forbidden(t[0], t[k - 1], n, k, alpha) {
        out.push(Violation::Alpha { first: t[0], last: t[k - 1] });
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// `(first, last)` is one of `(i, nk - i + 1)` with `1 <= i <= alpha - 1`.
pub(crate) fn alpha_forbidden(first: u32, last: u32, n: u32, k: usize, alpha: u32) -> bool {
    first < alpha && first + last == n * k as u32 + 1
}

pub(crate) fn is_valid(t: &[u32], n: u32, alpha: u32) -> bool {
    let k = t.len();
    t.iter().enumerate().all(|(i, &v)| v > i as u32 * n && v <= (i as u32 + 1) * n)
        && t.windows(2).all(|w| w[1] != w[0] + 1)
        && (k < 2 || !alpha_forbidden(t[0], t[k - 1], n, k, alpha))
}

/// `k(k+1)n/2 - sum T_i`.
pub fn rank_of(t: &[u32], n: u32) -> u32 {
    let k = t.len() as u32;
    k * (k + 1) / 2 * n - t.iter().sum::<u32>()
}

/// All strings in lexicographic order, by backtracking over coordinates.
pub fn enumerate_strings(n: u32, k: usize, alpha: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: u32, k: usize, alpha: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let j = cur.len();
        if j == k {
            if k < 2 || !alpha_forbidden(cur[0], cur[k - 1], n, k, alpha) {
                out.push(cur.clone());
            }
            return;
        }
        let lo = j as u32 * n + 1;
        for v in lo..lo + n {
            if j > 0 && v == cur[j - 1] + 1 {
                continue;
            }
            cur.push(v);
            go(n, k, alpha, cur, out);
            cur.pop();
        }
    }
    go(n, k, alpha, &mut cur, &mut out);
    out
}
