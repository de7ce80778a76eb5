use std::fs;
use std::io::Write;

use anyhow::{anyhow, bail, Context};
use gibonacci::exactnum::rational::serde_text;
use gibonacci::exactnum::{Interval, Poly, Rational};
use gibonacci::gibonacci::{binet_eval, build_sa_poly, BinetValue, GibParams, GibonacciArray};
use gibonacci::posets::{
    build_poset, check_lattice, count_by_formula, count_by_inclusion_exclusion, verify_theorem54, SGPoset,
    SymTriangle, Violation,
};
use gibonacci::roots::{bound_b, roots_of, RootBound};
use gibonacci::verify::{all_passed, run_suite, Grid, SuiteName, SuiteReport};
use gibonacci::Error;
use serde::{Deserialize, Serialize};

use crate::args::{Format, ParamArgs, PosetArgs, VerifyArgs};
use crate::output::{json_pretty, require, UsageError};

const TEXT_JSON: [Format; 2] = [Format::Text, Format::Json];
const TABLE: [Format; 3] = [Format::Text, Format::Json, Format::Csv];

pub fn params(p: &ParamArgs) -> anyhow::Result<GibParams> {
    Ok(GibParams::new(p.alpha.clone(), p.beta.clone())?)
}

pub fn array(out: &mut dyn Write, format: Format, p: &ParamArgs, rows: usize) -> anyhow::Result<()> {
    require(format, &TABLE, "array")?;
    let arr = GibonacciArray::new(&params(p)?, rows);
    match format {
        Format::Json => json_pretty(out, &arr)?,
        Format::Csv => {
            writeln!(out, "k,j,value")?;
            for (k, row) in arr.rows().iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    writeln!(out, "{k},{j},{v}")?;
                }
            }
        }
        _ => {
            for (k, row) in arr.rows().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{k}: {}", cells.join(" "))?;
            }
        }
    }
    Ok(())
}

pub fn poly(out: &mut dyn Write, format: Format, p: &ParamArgs, k: i64) -> anyhow::Result<()> {
    require(format, &TABLE, "poly")?;
    let sa = build_sa_poly(&params(p)?, k)?;
    match format {
        Format::Json => json_pretty(out, &sa)?,
        Format::Csv => {
            writeln!(out, "power,coefficient")?;
            for (i, c) in sa.poly.coeffs().iter().enumerate() {
                writeln!(out, "{i},{c}")?;
            }
        }
        _ => writeln!(out, "{}", sa.poly)?,
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootRow {
    pub defining: Poly,
    pub enclosure: Interval,
    pub decimal: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootTable {
    pub k: i64,
    pub params: GibParams,
    pub poly: Poly,
    pub bound: RootBound,
    pub roots: Vec<RootRow>,
}

pub fn roots(
    out: &mut dyn Write,
    format: Format,
    digits: usize,
    p: &ParamArgs,
    k: i64,
) -> anyhow::Result<()> {
    require(format, &TABLE, "roots")?;
    let gp = params(p)?;
    let set = roots_of(&gp, k)?;
    let rows: Vec<RootRow> = set
        .roots
        .iter()
        .map(|z| RootRow {
            defining: z.defining().clone(),
            enclosure: z.enclosure().clone(),
            decimal: z.to_decimal(digits),
        })
        .collect();
    match format {
        Format::Json => {
            let table =
                RootTable { k, params: gp.clone(), poly: set.poly.clone(), bound: bound_b(&gp), roots: rows };
            json_pretty(out, &table)?;
        }
        Format::Csv => {
            writeln!(out, "i,lo,hi,decimal")?;
            for (i, r) in rows.iter().enumerate() {
                writeln!(out, "{},{},{},{}", i + 1, r.enclosure.lo, r.enclosure.hi, r.decimal)?;
            }
        }
        _ => {
            let b = bound_b(&gp).value;
            writeln!(out, "G_{k}(x) = {}", set.poly)?;
            writeln!(out, "{} real roots, all in (0, {b})", rows.len())?;
            for (i, r) in rows.iter().enumerate() {
                writeln!(out, "r{} = {}  in ({}, {})", i + 1, r.decimal, r.enclosure.lo, r.enclosure.hi)?;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BinetReport {
    pub k: usize,
    #[serde(with = "serde_text")]
    pub x: Rational,
    pub binet: BinetValue,
    #[serde(with = "serde_text")]
    pub recurrence: Rational,
}

pub fn binet(
    out: &mut dyn Write,
    format: Format,
    digits: usize,
    p: &ParamArgs,
    k: usize,
    x: &Rational,
    precision: u32,
) -> anyhow::Result<()> {
    require(format, &TEXT_JSON, "binet")?;
    let gp = params(p)?;
    let value = binet_eval(&gp, k, x, precision)?;
    let recurrence = build_sa_poly(&gp, k as i64)?.poly.eval(x);
    if format == Format::Json {
        let report = BinetReport { k, x: x.clone(), binet: value, recurrence };
        return json_pretty(out, &report);
    }
    match &value {
        BinetValue::Exact { value } => writeln!(out, "binet:      {value} (exact)")?,
        BinetValue::Approx { value, .. } => writeln!(
            out,
            "binet:      {} (within 2^-{precision})",
            gibonacci::exactnum::rational::to_decimal(value, digits)
        )?,
    }
    writeln!(out, "recurrence: {recurrence}")?;
    Ok(())
}

fn poset_of(a: &PosetArgs) -> anyhow::Result<SGPoset> {
    Ok(build_poset(a.n, a.k, a.alpha)?)
}

pub fn poset_enum(out: &mut dyn Write, format: Format, a: &PosetArgs) -> anyhow::Result<()> {
    let poset = poset_of(a)?;
    match format {
        Format::Json => json_pretty(out, &poset)?,
        Format::Csv => {
            writeln!(out, "index,string,rank")?;
            for i in 0..poset.len() {
                writeln!(out, "{i},\"{}\",{}", poset.label(i), poset.ranks[i])?;
            }
        }
        Format::Dot => write_dot(out, &poset)?,
        Format::Text => {
            for i in 0..poset.len() {
                writeln!(out, "{}  rank {}", poset.label(i), poset.ranks[i])?;
            }
        }
    }
    Ok(())
}

/// Hasse diagram, one `rank=same` group per rank, top rank drawn highest.
fn write_dot(out: &mut dyn Write, poset: &SGPoset) -> anyhow::Result<()> {
    writeln!(out, "digraph hasse {{")?;
    writeln!(out, "  rankdir=BT;")?;
    writeln!(out, "  node [shape=plaintext];")?;
    let top = poset.ranks.iter().copied().max().unwrap_or(0);
    for r in 0..=top {
        let ids: Vec<String> = (0..poset.len())
            .filter(|&i| poset.ranks[i] == r)
            .map(|i| format!("n{i} [label=\"{}\"];", poset.label(i)))
            .collect();
        if !ids.is_empty() {
            writeln!(out, "  {{ rank=same; {} }}", ids.join(" "))?;
        }
    }
    for &(cover, covered) in &poset.hasse_edges {
        writeln!(out, "  n{covered} -> n{cover};")?;
    }
    writeln!(out, "}}")?;
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RgfReport {
    pub n: u32,
    pub k: usize,
    pub alpha: u32,
    pub coefficients: Vec<String>,
    pub size: String,
}

pub fn poset_rgf(out: &mut dyn Write, format: Format, a: &PosetArgs) -> anyhow::Result<()> {
    require(format, &TABLE, "poset rgf")?;
    let h = poset_of(a)?.rank_generating_function();
    match format {
        Format::Json => {
            let coefficients = h.coeffs().iter().map(|c| c.to_string()).collect();
            let report =
                RgfReport { n: a.n, k: a.k, alpha: a.alpha, coefficients, size: h.at_one().to_string() };
            json_pretty(out, &report)?;
        }
        Format::Csv => {
            writeln!(out, "rank,count")?;
            for (i, c) in h.coeffs().iter().enumerate() {
                writeln!(out, "{i},{c}")?;
            }
        }
        _ => writeln!(out, "{h}")?,
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StringCheck {
    pub string: Vec<u32>,
    pub valid: bool,
    pub rank: Option<u32>,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructureReport {
    pub n: u32,
    pub k: usize,
    pub alpha: u32,
    pub size: usize,
    pub by_formula: String,
    pub by_inclusion_exclusion: String,
    pub length: u32,
    pub rgf_palindromic: bool,
    pub self_dual: bool,
    pub connected: bool,
    pub graded: bool,
    pub distributive_lattice: bool,
    pub maximal: usize,
    pub minimal: usize,
}

pub fn poset_check(
    out: &mut dyn Write,
    format: Format,
    a: &PosetArgs,
    string: Option<&[u32]>,
) -> anyhow::Result<()> {
    require(format, &TEXT_JSON, "poset check")?;
    if let Some(t) = string {
        return check_string(out, format, a, t);
    }
    let poset = poset_of(a)?;
    let lattice = check_lattice(&poset);
    let report = StructureReport {
        n: a.n,
        k: a.k,
        alpha: a.alpha,
        size: poset.len(),
        by_formula: count_by_formula(a.n, a.k, a.alpha)?.to_string(),
        by_inclusion_exclusion: count_by_inclusion_exclusion(a.n, a.k, a.alpha)?.to_string(),
        length: poset.length(),
        rgf_palindromic: poset.rank_generating_function().is_palindromic(),
        self_dual: poset.is_self_dual(),
        connected: poset.is_connected(),
        graded: poset.edges_are_graded(),
        distributive_lattice: lattice.distributive,
        maximal: lattice.maximal_count,
        minimal: lattice.minimal_count,
    };
    if format == Format::Json {
        return json_pretty(out, &report);
    }
    let yes = |b: bool| if b { "yes" } else { "no" };
    writeln!(
        out,
        "elements: {} (formula {}, inclusion-exclusion {})",
        report.size, report.by_formula, report.by_inclusion_exclusion
    )?;
    writeln!(out, "length: {}", report.length)?;
    writeln!(out, "rank generating function palindromic: {}", yes(report.rgf_palindromic))?;
    writeln!(out, "self-dual: {}", yes(report.self_dual))?;
    writeln!(out, "connected: {}", yes(report.connected))?;
    writeln!(out, "covers change rank by one: {}", yes(report.graded))?;
    writeln!(out, "distributive lattice: {}", yes(report.distributive_lattice))?;
    writeln!(out, "maximal elements: {}, minimal elements: {}", report.maximal, report.minimal)?;
    Ok(())
}

fn check_string(out: &mut dyn Write, format: Format, a: &PosetArgs, t: &[u32]) -> anyhow::Result<()> {
    if a.alpha == 0 || a.n <= a.alpha {
        return Err(Error::PosetParams { n: a.n, alpha: a.alpha }.into());
    }
    let violations = gibonacci::posets::validate_string(t, a.n, a.k, a.alpha).err().unwrap_or_default();
    let valid = violations.is_empty();
    let rank = valid.then(|| gibonacci::posets::rank_of(t, a.n));
    let label = format!("({})", t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
    if format == Format::Json {
        json_pretty(out, &StringCheck { string: t.to_vec(), valid, rank, violations: violations.clone() })?;
    } else if let Some(r) = rank {
        writeln!(out, "{label} is valid, rank {r}")?;
    } else {
        writeln!(out, "{label} is not valid")?;
        for v in &violations {
            writeln!(out, "  {v}")?;
        }
    }
    match violations.first() {
        None => Ok(()),
        Some(v) => bail!("{label} is not a string of the poset: {v}"),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TriangleRow {
    pub alpha: u32,
    pub n: u32,
    pub k: usize,
    pub indices: Vec<i64>,
    pub values: Vec<String>,
}

pub fn triangle_row(out: &mut dyn Write, format: Format, alpha: u32, n: u32, k: usize) -> anyhow::Result<()> {
    require(format, &TABLE, "triangle row")?;
    if alpha == 0 || n <= alpha {
        return Err(Error::PosetParams { n, alpha }.into());
    }
    let tri = SymTriangle::new(alpha, n, k);
    let indices: Vec<i64> = tri.indices(k).collect();
    let values: Vec<String> = tri.row(k).iter().map(|v| v.to_string()).collect();
    match format {
        Format::Json => json_pretty(out, &TriangleRow { alpha, n, k, indices, values })?,
        Format::Csv => {
            writeln!(out, "r,value")?;
            for (r, v) in indices.iter().zip(&values) {
                writeln!(out, "{r},{v}")?;
            }
        }
        _ => writeln!(out, "{}", values.join(" "))?,
    }
    Ok(())
}

fn grid(v: &VerifyArgs) -> Grid {
    let d = Grid::default();
    Grid {
        root_k: v.root_k.unwrap_or(d.root_k),
        closed_k: v.closed_k.unwrap_or(d.closed_k),
        bits: v.bits.unwrap_or(d.bits),
        game_j: v.game_j.unwrap_or(d.game_j),
        game_root_k: v.game_root_k.unwrap_or(d.game_root_k),
        poset_n: v.poset_n.unwrap_or(d.poset_n),
        poset_k: v.poset_k.unwrap_or(d.poset_k),
        four_m: v.four_m.unwrap_or(d.four_m),
    }
}

pub fn verify(out: &mut dyn Write, format: Format, v: &VerifyArgs) -> anyhow::Result<()> {
    require(format, &TEXT_JSON, "verify")?;
    if v.suite == "thm54" {
        return verify_thm54(out, format, v);
    }
    let name: SuiteName = v.suite.parse().map_err(|_| {
        UsageError(format!(
            "unknown suite {:?}; expected arrays, polys, roots, game, posets, all or thm54",
            v.suite
        ))
    })?;
    let reports = run_suite(name, &grid(v));
    if format == Format::Json {
        json_pretty(out, &reports)?;
    } else {
        for r in &reports {
            let passed = r.checks.iter().filter(|c| c.passed).count();
            writeln!(out, "{}: {passed} of {} checks passed", r.name, r.checks.len())?;
            for c in r.failures() {
                match &c.detail {
                    Some(d) => writeln!(out, "  FAIL {}: {d}", c.label)?,
                    None => writeln!(out, "  FAIL {}", c.label)?,
                }
            }
        }
    }
    if let Some(path) = &v.save {
        let text = serde_json::to_string_pretty(&reports)?;
        fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &v.golden {
        compare_golden(&reports, path)?;
    }
    if !all_passed(&reports) {
        let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.name.as_str()).collect();
        bail!("{} of {} suites failed: {}", failed.len(), reports.len(), failed.join(", "));
    }
    Ok(())
}

/// Every check in the golden report must be present with the same outcome.
fn compare_golden(reports: &[SuiteReport], path: &std::path::Path) -> anyhow::Result<()> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let golden: Vec<SuiteReport> =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    for g in &golden {
        let r = reports
            .iter()
            .find(|r| r.name == g.name)
            .ok_or_else(|| anyhow!("golden suite {} was not run", g.name))?;
        for gc in &g.checks {
            match r.checks.iter().find(|c| c.label == gc.label) {
                None => bail!("golden check {:?} in {} is missing", gc.label, g.name),
                Some(c) if c.passed != gc.passed => bail!(
                    "check {:?} in {} changed: golden {}, now {}",
                    gc.label,
                    g.name,
                    pass_word(gc.passed),
                    pass_word(c.passed)
                ),
                Some(_) => {}
            }
        }
    }
    Ok(())
}

fn pass_word(p: bool) -> &'static str {
    if p {
        "pass"
    } else {
        "fail"
    }
}

fn verify_thm54(out: &mut dyn Write, format: Format, v: &VerifyArgs) -> anyhow::Result<()> {
    let report = verify_theorem54(v.alpha, v.n, v.k_max)?;
    if format == Format::Json {
        json_pretty(out, &report)?;
    } else {
        let passed = report.checks.iter().filter(|c| c.passed).count();
        writeln!(
            out,
            "alpha = {}, n = {}, k <= {}: {passed} of {} identities hold",
            v.alpha,
            v.n,
            v.k_max,
            report.checks.len()
        )?;
        writeln!(out, "sizes: {}", report.cardinalities.join(" "))?;
        for c in report.failures() {
            writeln!(out, "  FAIL k = {}: {}", c.k, c.identity)?;
        }
    }
    if let Some(path) = &v.save {
        let text = serde_json::to_string_pretty(&report)?;
        fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    if !report.passed() {
        bail!("{} of {} identity checks failed", report.failures().len(), report.checks.len());
    }
    Ok(())
}
