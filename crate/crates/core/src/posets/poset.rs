use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::qpoly::QPolynomial;
use super::strings::{enumerate_strings, is_valid, rank_of, string_label};
use crate::error::{Error, Result};

pub(crate) fn check_params(n: u32, alpha: u32) -> Result<()> {
    if alpha == 0 || n <= alpha {
        return Err(Error::PosetParams { n, alpha });
    }
    Ok(())
}

/// The ranked poset of alpha-Gibonaccian strings under reverse
/// componentwise order. `hasse_edges` holds `(cover, covered)` indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SGPoset {
    pub n: u32,
    pub k: usize,
    pub alpha: u32,
    pub elements: Vec<Vec<u32>>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub ranks: Vec<u32>,
}

/// `k = 0` gives an antichain of `alpha` empty strings.
pub fn build_poset(n: u32, k: usize, alpha: u32) -> Result<SGPoset> {
    check_params(n, alpha)?;
    if k == 0 {
        let a = alpha as usize;
        return Ok(SGPoset {
            n,
            k,
            alpha,
            elements: vec![Vec::new(); a],
            hasse_edges: Vec::new(),
            ranks: vec![0; a],
        });
    }
    let elements = enumerate_strings(n, k, alpha);
    let index: HashMap<&[u32], usize> = elements.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut hasse_edges = Vec::new();
    let mut s = vec![0u32; k];
    for (i, t) in elements.iter().enumerate() {
        s.copy_from_slice(t);
        for l in 0..k {
            s[l] += 1;
            if let Some(&j) = index.get(s.as_slice()) {
                hasse_edges.push((i, j));
            }
            s[l] -= 1;
        }
    }
    let ranks = elements.iter().map(|t| rank_of(t, n)).collect();
    Ok(SGPoset { n, k, alpha, elements, hasse_edges, ranks })
}

/// Counts of maximal and minimal elements, and closure under
/// componentwise min and max.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub distributive: bool,
    pub maximal_count: usize,
    pub minimal_count: usize,
}

impl SGPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn length(&self) -> u32 {
        self.k as u32 * (self.n - 1)
    }

    pub fn index_of(&self, t: &[u32]) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_slice().cmp(t)).ok()
    }

    pub fn label(&self, i: usize) -> String {
        if self.k == 0 {
            format!("e{}", i + 1)
        } else {
            string_label(&self.elements[i])
        }
    }

    /// Elements nothing covers.
    pub fn maximal_elements(&self) -> Vec<usize> {
        let mut covered = vec![false; self.len()];
        for &(_, c) in &self.hasse_edges {
            covered[c] = true;
        }
        (0..self.len()).filter(|&i| !covered[i]).collect()
    }

    /// Elements covering nothing.
    pub fn minimal_elements(&self) -> Vec<usize> {
        let mut covers = vec![false; self.len()];
        for &(c, _) in &self.hasse_edges {
            covers[c] = true;
        }
        (0..self.len()).filter(|&i| !covers[i]).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.len()];
        for &(a, b) in &self.hasse_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.len()
    }

    /// Every Hasse edge raises the rank by exactly one.
    pub fn edges_are_graded(&self) -> bool {
        self.hasse_edges.iter().all(|&(c, d)| self.ranks[c] == self.ranks[d] + 1)
    }

    /// `T -> (nk + 1 - T_k, ..., nk + 1 - T_1)`, if it is an order-reversing
    /// bijection of the element set.
    pub fn dual_map(&self) -> Option<Vec<usize>> {
        if self.k == 0 {
            return Some((0..self.len()).collect());
        }
        let c = self.n * self.k as u32 + 1;
        let mut map = Vec::with_capacity(self.len());
        for t in &self.elements {
            let d: Vec<u32> = t.iter().rev().map(|&v| c - v).collect();
            map.push(self.index_of(&d)?);
        }
        let mut edges: Vec<(usize, usize)> = self.hasse_edges.clone();
        edges.sort_unstable();
        let ok = self.hasse_edges.iter().all(|&(a, b)| edges.binary_search(&(map[b], map[a])).is_ok());
        ok.then_some(map)
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual_map().is_some()
    }

    pub fn rank_generating_function(&self) -> QPolynomial {
        rank_generating_function(self)
    }
}

/// Coefficient of `q^r` counts the elements of rank `r`.
pub fn rank_generating_function(poset: &SGPoset) -> QPolynomial {
    let top = poset.ranks.iter().copied().max().unwrap_or(0) as usize;
    let mut c = vec![BigInt::from(0); top + 1];
    for &r in &poset.ranks {
        c[r as usize] += 1;
    }
    QPolynomial::new(c)
}

/// Pairwise closure test. The all-pairs scan is split across threads for
/// large posets.
pub fn check_lattice(poset: &SGPoset) -> LatticeReport {
    let maximal_count = poset.maximal_elements().len();
    let minimal_count = poset.minimal_elements().len();
    let distributive = if poset.k == 0 { poset.len() == 1 } else { closed_under_meets_and_joins(poset) };
    LatticeReport { distributive, maximal_count, minimal_count }
}

fn closed_under_meets_and_joins(poset: &SGPoset) -> bool {
    use std::sync::atomic::{AtomicBool, Ordering};

    let els = &poset.elements;
    let (n, alpha, k) = (poset.n, poset.alpha, poset.k);
    let failed = AtomicBool::new(false);
    let scan = |start: usize, step: usize| {
        let mut lo = vec![0u32; k];
        let mut hi = vec![0u32; k];
        let mut i = start;
        while i < els.len() {
            if failed.load(Ordering::Relaxed) {
                return;
            }
            for j in i + 1..els.len() {
                for l in 0..k {
                    lo[l] = els[i][l].min(els[j][l]);
                    hi[l] = els[i][l].max(els[j][l]);
                }
                if !is_valid(&lo, n, alpha) || !is_valid(&hi, n, alpha) {
                    failed.store(true, Ordering::Relaxed);
                    return;
                }
            }
            i += step;
        }
    };
    let threads = if els.len() < 2000 {
        1
    } else {
        std::thread::available_parallelism().map_or(1, |p| p.get()).min(16)
    };
    if threads == 1 {
        scan(0, 1);
    } else {
        std::thread::scope(|s| {
            for t in 0..threads {
                let scan = &scan;
                s.spawn(move || scan(t, threads));
            }
        });
    }
    !failed.load(Ordering::Relaxed)
}
