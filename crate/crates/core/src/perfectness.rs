//! Perfectness of G(Z_n) via odd holes and odd antiholes.
//!
//! A graph is perfect iff neither it nor its complement has an induced odd
//! cycle of length at least 5. Every hole handed out by this module has been
//! re-checked against the host graph before it is returned.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::arithmetic::{Divisor, Factorization};
use crate::error::{Error, Result};
use crate::graph::{adjacent, IdealGraph};
use crate::search::find_shortest_cycle;

/// Default limit on vertex count for exhaustive searches.
pub const DEFAULT_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Host {
    Graph,
    Complement,
}

impl Host {
    fn of(g: &IdealGraph) -> Host {
        if g.is_complemented() {
            Host::Complement
        } else {
            Host::Graph
        }
    }
}

impl fmt::Display for Host {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Host::Graph => "graph",
            Host::Complement => "complement",
        })
    }
}

/// An ordered vertex sequence claimed to be an induced odd cycle of length >= 5.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleCertificate {
    pub n: u64,
    pub host: Host,
    /// Vertex indices into the value-ordered vertex list of G(Z_n).
    pub cycle: Vec<usize>,
    pub divisor_values: Vec<u64>,
}

impl HoleCertificate {
    pub fn length(&self) -> usize {
        self.cycle.len()
    }

    fn from_indices(g: &IdealGraph, cycle: Vec<usize>) -> Self {
        HoleCertificate {
            n: g.n(),
            host: Host::of(g),
            divisor_values: cycle.iter().map(|&i| g.values()[i]).collect(),
            cycle,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate json")
    }
}

impl Serialize for HoleCertificate {
    /// `{n, host, length, cycle}` with the cycle given as divisor values.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            n: u64,
            host: Host,
            length: usize,
            cycle: &'a [u64],
        }
        Record {
            n: self.n,
            host: self.host,
            length: self.length(),
            cycle: &self.divisor_values,
        }
        .serialize(s)
    }
}

/// Why a claimed hole was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateDefect {
    TooShort(usize),
    EvenLength(usize),
    WrongModulus { expected: u64, found: u64 },
    ValueCountMismatch,
    IndexOutOfRange(usize),
    ValueMismatch { index: usize, value: u64 },
    RepeatedVertex(u64),
    MissingEdge(u64, u64),
    Chord(u64, u64),
}

impl fmt::Display for CertificateDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CertificateDefect::*;
        match self {
            TooShort(len) => write!(f, "length {len} is below the minimum of 5"),
            EvenLength(len) => write!(f, "length {len} is even"),
            WrongModulus { expected, found } => {
                write!(f, "certificate is for n = {found}, graph is for n = {expected}")
            }
            ValueCountMismatch => write!(f, "cycle and divisor_values differ in length"),
            IndexOutOfRange(i) => write!(f, "vertex index {i} out of range"),
            ValueMismatch { index, value } => {
                write!(f, "vertex {index} does not carry divisor value {value}")
            }
            RepeatedVertex(v) => write!(f, "vertex ({v}) appears more than once"),
            MissingEdge(a, b) => write!(f, "consecutive vertices ({a}) and ({b}) are not adjacent"),
            Chord(a, b) => write!(f, "non-consecutive vertices ({a}) and ({b}) are adjacent"),
        }
    }
}

impl std::error::Error for CertificateDefect {}

/// Checks that `cycle` is an induced cycle of length >= 5 under `adj`.
fn check_induced_cycle(
    values: &[u64],
    cycle: &[usize],
    adj: impl Fn(usize, usize) -> bool,
) -> std::result::Result<(), CertificateDefect> {
    let len = cycle.len();
    if len < 5 {
        return Err(CertificateDefect::TooShort(len));
    }
    if let Some(&bad) = cycle.iter().find(|&&i| i >= values.len()) {
        return Err(CertificateDefect::IndexOutOfRange(bad));
    }
    for (pos, &i) in cycle.iter().enumerate() {
        if cycle[..pos].contains(&i) {
            return Err(CertificateDefect::RepeatedVertex(values[i]));
        }
    }
    for a in 0..len {
        let (u, v) = (cycle[a], cycle[(a + 1) % len]);
        if !adj(u, v) {
            return Err(CertificateDefect::MissingEdge(values[u], values[v]));
        }
    }
    for a in 0..len {
        for b in (a + 2)..len {
            let (u, v) = (cycle[a], cycle[b]);
            if !(a == 0 && b == len - 1) && adj(u, v) {
                return Err(CertificateDefect::Chord(values[u], values[v]));
            }
        }
    }
    Ok(())
}

fn check_against(g: &IdealGraph, c: &HoleCertificate) -> std::result::Result<(), CertificateDefect> {
    if c.n != g.n() {
        return Err(CertificateDefect::WrongModulus { expected: g.n(), found: c.n });
    }
    if c.cycle.len() != c.divisor_values.len() {
        return Err(CertificateDefect::ValueCountMismatch);
    }
    for (&i, &value) in c.cycle.iter().zip(&c.divisor_values) {
        if g.values().get(i) != Some(&value) {
            return Err(CertificateDefect::ValueMismatch { index: i, value });
        }
    }
    check_induced_cycle(g.values(), &c.cycle, |i, j| g.is_adjacent(i, j))?;
    if c.length() % 2 == 0 {
        return Err(CertificateDefect::EvenLength(c.length()));
    }
    Ok(())
}

/// Re-checks a certificate against `g` or its complement, as named by `c.host`.
pub fn check_certificate(g: &IdealGraph, c: &HoleCertificate) -> std::result::Result<(), CertificateDefect> {
    if Host::of(g) == c.host {
        check_against(g, c)
    } else {
        check_against(&g.complement(), c)
    }
}

pub fn validate_certificate(g: &IdealGraph, c: &HoleCertificate) -> bool {
    check_certificate(g, c).is_ok()
}

fn ensure_within_cap(g: &IdealGraph, cap: usize) -> Result<()> {
    if g.vertex_count() > cap {
        Err(Error::SearchInfeasible { vertices: g.vertex_count(), cap })
    } else {
        Ok(())
    }
}

/// Shortest odd hole of length in `[5, max_length]` in `g`, with the default cap.
pub fn find_odd_hole(g: &IdealGraph, max_length: usize) -> Result<Option<HoleCertificate>> {
    find_odd_hole_capped(g, max_length, DEFAULT_CAP)
}

/// As [`find_odd_hole`], refusing graphs with more than `cap` vertices.
pub fn find_odd_hole_capped(
    g: &IdealGraph,
    max_length: usize,
    cap: usize,
) -> Result<Option<HoleCertificate>> {
    if max_length < 5 || max_length % 2 == 0 {
        return Err(Error::InvalidLength(max_length));
    }
    ensure_within_cap(g, cap)?;
    let (cycle, _) = find_shortest_cycle(g.rows(), (5..=max_length).step_by(2));
    cycle
        .map(|cycle| {
            let cert = HoleCertificate::from_indices(g, cycle);
            check_against(g, &cert).map_err(|d| Error::WitnessRejected(d.to_string()))?;
            Ok(cert)
        })
        .transpose()
}

/// Any induced cycle (even or odd) of length in `[5, max_length]`, as divisor values.
pub fn find_long_induced_cycle(g: &IdealGraph, max_length: usize, cap: usize) -> Result<Option<Vec<u64>>> {
    ensure_within_cap(g, cap)?;
    let (cycle, _) = find_shortest_cycle(g.rows(), 5..=max_length);
    cycle
        .map(|cycle| {
            check_induced_cycle(g.values(), &cycle, |i, j| g.is_adjacent(i, j))
                .map_err(|d| Error::WitnessRejected(d.to_string()))?;
            Ok(cycle.iter().map(|&i| g.values()[i]).collect())
        })
        .transpose()
}

/// The explicit 5-hole for `k >= 5` distinct primes.
///
/// With `q_i = p_i^a_i` for the five smallest primes and `s` the product of
/// the remaining prime powers, the cycle is
/// `(q1 q2 q3 s) ~ (q2 q3 q4 s) ~ (q3 q4 q5 s) ~ (q4 q5 q1 s) ~ (q5 q1 q2 s)`,
/// emitted in that order.
pub fn construct_paper_hole(f: &Factorization) -> Result<HoleCertificate> {
    let k = f.k();
    if k < 5 {
        return Err(Error::TooFewPrimes { k });
    }
    let full = f.exponents();
    let cycle_divisors: Vec<Divisor> = (0..5)
        .map(|start| {
            let mut e = full.clone();
            for (i, slot) in e.iter_mut().enumerate().take(5) {
                if (i + 5 - start) % 5 >= 3 {
                    *slot = 0;
                }
            }
            f.divisor(e).expect("exponents bounded by the factorization")
        })
        .collect();

    let values: Vec<u64> = f.nontrivial_divisors().iter().map(|d| f.value(d)).collect();
    let cycle: Vec<usize> = cycle_divisors
        .iter()
        .map(|d| values.binary_search(&f.value(d)).expect("nontrivial divisor"))
        .collect();
    check_induced_cycle(&values, &cycle, |i, j| {
        let (a, b) = (&cycle_divisors[pos(&cycle, i)], &cycle_divisors[pos(&cycle, j)]);
        adjacent(a, b, f)
    })
    .map_err(|d| Error::WitnessRejected(d.to_string()))?;

    Ok(HoleCertificate {
        n: f.n(),
        host: Host::Graph,
        divisor_values: cycle.iter().map(|&i| values[i]).collect(),
        cycle,
    })
}

fn pos(cycle: &[usize], i: usize) -> usize {
    cycle.iter().position(|&c| c == i).expect("index on cycle")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Perfect,
    NotPerfect,
    DegeneratePerfect,
}

impl Verdict {
    pub fn is_perfect(self) -> bool {
        self != Verdict::NotPerfect
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Perfect => "perfect",
            Verdict::NotPerfect => "not_perfect",
            Verdict::DegeneratePerfect => "degenerate_perfect",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a not-perfect witness comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WitnessSource {
    /// Exhaustive search on G, then on its complement.
    #[default]
    Search,
    /// The explicit 5-hole when `k >= 5`, search otherwise.
    ConstructionFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerfectnessOptions {
    pub cap: usize,
    /// Also search even lengths >= 6 for induced cycles longer than 4.
    pub all_lengths: bool,
    pub witness: WitnessSource,
}

impl Default for PerfectnessOptions {
    fn default() -> Self {
        PerfectnessOptions {
            cap: DEFAULT_CAP,
            all_lengths: false,
            witness: WitnessSource::Search,
        }
    }
}

/// Outcome of the every-length induced cycle scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LongCycleReport {
    pub graph: Option<Vec<u64>>,
    pub complement: Option<Vec<u64>>,
    pub max_length_searched: usize,
    pub search_exhausted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectnessReport {
    pub n: u64,
    pub k: usize,
    pub vertex_count: usize,
    pub verdict: Verdict,
    pub certificate: Option<HoleCertificate>,
    pub search_exhausted: bool,
    pub max_length_searched: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub long_cycles: Option<LongCycleReport>,
}

impl PerfectnessReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report json")
    }
}

/// Largest odd integer not above `v` (0 stays 0).
pub fn round_down_to_odd(v: usize) -> usize {
    if v % 2 == 0 { v.saturating_sub(1) } else { v }
}

pub fn is_perfect(f: &Factorization) -> Result<PerfectnessReport> {
    is_perfect_with(f, &PerfectnessOptions::default())
}

pub fn is_perfect_with(f: &Factorization, opts: &PerfectnessOptions) -> Result<PerfectnessReport> {
    let mut report = PerfectnessReport {
        n: f.n(),
        k: f.k(),
        vertex_count: f.divisor_count().saturating_sub(2) as usize,
        verdict: Verdict::Perfect,
        certificate: None,
        search_exhausted: false,
        max_length_searched: 0,
        long_cycles: None,
    };

    if opts.witness == WitnessSource::ConstructionFirst && f.k() >= 5 && !opts.all_lengths {
        report.verdict = Verdict::NotPerfect;
        report.certificate = Some(construct_paper_hole(f)?);
        return Ok(report);
    }

    let g = IdealGraph::build(f);
    report.vertex_count = g.vertex_count();
    if g.is_degenerate() {
        report.verdict = Verdict::DegeneratePerfect;
        report.search_exhausted = true;
        report.max_length_searched = round_down_to_odd(g.vertex_count());
        return Ok(report);
    }
    ensure_within_cap(&g, opts.cap)?;
    let complement = g.complement();
    let max_length = round_down_to_odd(g.vertex_count());

    if opts.all_lengths {
        let graph = find_long_induced_cycle(&g, g.vertex_count(), opts.cap)?;
        let comp = find_long_induced_cycle(&complement, g.vertex_count(), opts.cap)?;
        report.long_cycles = Some(LongCycleReport {
            graph,
            complement: comp,
            max_length_searched: g.vertex_count(),
            search_exhausted: true,
        });
    }

    let certificate = if opts.witness == WitnessSource::ConstructionFirst && f.k() >= 5 {
        Some(construct_paper_hole(f)?)
    } else if max_length >= 5 {
        match find_odd_hole_capped(&g, max_length, opts.cap)? {
            Some(c) => Some(c),
            None => find_odd_hole_capped(&complement, max_length, opts.cap)?,
        }
    } else {
        None
    };

    match certificate {
        Some(c) => {
            check_certificate(&g, &c).map_err(|d| Error::WitnessRejected(d.to_string()))?;
            report.verdict = Verdict::NotPerfect;
            report.certificate = Some(c);
        }
        None => {
            report.verdict = Verdict::Perfect;
            report.search_exhausted = true;
            report.max_length_searched = max_length;
        }
    }
    Ok(report)
}
