//! Range verification: perfect iff at most 4 distinct primes, and omega = chi.

use std::sync::Mutex;
use std::time::Instant;

use idealgraph::{
    factorize, graph_invariants, is_perfect_with, Error, IdealGraph, PerfectnessOptions, Verdict,
};
use rayon::prelude::*;
use serde::Serialize;

/// One checked `n`. Column order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub n: u64,
    pub k: usize,
    pub vertex_count: usize,
    /// `perfect`, `not_perfect`, `degenerate_perfect` or `infeasible`.
    pub verdict: String,
    pub hole_length: Option<usize>,
    pub omega: Option<usize>,
    pub chi: Option<usize>,
    pub elapsed_ms: u64,
}

impl VerifyRow {
    pub fn is_infeasible(&self) -> bool {
        self.verdict == "infeasible"
    }

    /// Perfect iff k <= 4.
    pub fn satisfies_theorem(&self) -> bool {
        let perfect = self.verdict == Verdict::Perfect.as_str()
            || self.verdict == Verdict::DegeneratePerfect.as_str();
        self.is_infeasible() || perfect == (self.k <= 4)
    }

    pub fn weakly_perfect(&self) -> bool {
        self.is_infeasible() || self.omega == self.chi
    }

    pub fn is_violation(&self) -> bool {
        !self.satisfies_theorem() || !self.weakly_perfect()
    }

    /// The row with timing zeroed, for run-to-run comparison.
    pub fn without_timing(&self) -> VerifyRow {
        VerifyRow { elapsed_ms: 0, ..self.clone() }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub cap: usize,
    pub jobs: usize,
    pub all_lengths: bool,
}

#[derive(Debug, Clone, Default)]
pub struct VerifySummary {
    pub rows: Vec<VerifyRow>,
    pub violations: usize,
    pub infeasible: usize,
}

impl VerifySummary {
    pub fn exit_code(&self) -> i32 {
        if self.violations > 0 {
            1
        } else if self.infeasible > 0 {
            2
        } else {
            0
        }
    }
}

pub fn check_one(n: u64, opts: &VerifyOptions) -> Result<VerifyRow, Error> {
    let start = Instant::now();
    let f = factorize(n)?;
    let popts = PerfectnessOptions { cap: opts.cap, all_lengths: opts.all_lengths, ..Default::default() };
    let mut row = VerifyRow {
        n,
        k: f.k(),
        vertex_count: f.divisor_count().saturating_sub(2) as usize,
        verdict: "infeasible".to_string(),
        hole_length: None,
        omega: None,
        chi: None,
        elapsed_ms: 0,
    };
    let report = match is_perfect_with(&f, &popts) {
        Ok(r) => r,
        Err(Error::SearchInfeasible { .. }) => {
            row.elapsed_ms = start.elapsed().as_millis() as u64;
            return Ok(row);
        }
        Err(e) => return Err(e),
    };
    let g = IdealGraph::build(&f);
    let inv = match graph_invariants(&g, opts.cap) {
        Ok(inv) => inv,
        Err(Error::SearchInfeasible { .. }) => {
            row.elapsed_ms = start.elapsed().as_millis() as u64;
            return Ok(row);
        }
        Err(e) => return Err(e),
    };
    row.verdict = report.verdict.as_str().to_string();
    row.hole_length = report.certificate.as_ref().map(|c| c.length());
    row.omega = Some(inv.omega);
    row.chi = Some(inv.chi);
    row.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(row)
}

/// Checks every `n` on `opts.jobs` workers. `on_row` sees rows as they
/// finish; the returned rows are sorted by `n`.
pub fn verify_all(
    ns: &[u64],
    opts: &VerifyOptions,
    on_row: impl Fn(&VerifyRow) + Sync,
) -> Result<VerifySummary, Error> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .expect("thread pool");
    let first_error = Mutex::new(None);
    let mut rows: Vec<VerifyRow> = pool.install(|| {
        ns.par_iter()
            .filter_map(|&n| match check_one(n, opts) {
                Ok(row) => {
                    on_row(&row);
                    Some(row)
                }
                Err(e) => {
                    first_error.lock().unwrap().get_or_insert((n, e));
                    None
                }
            })
            .collect()
    });
    if let Some((_, e)) = first_error.into_inner().unwrap() {
        return Err(e);
    }
    rows.sort_by_key(|r| r.n);
    let violations = rows.iter().filter(|r| r.is_violation()).count();
    let infeasible = rows.iter().filter(|r| r.is_infeasible()).count();
    Ok(VerifySummary { rows, violations, infeasible })
}

pub fn to_csv(rows: &[VerifyRow]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(["n", "k", "vertex_count", "verdict", "hole_length", "omega", "chi", "elapsed_ms"])
        .expect("csv header");
    for row in rows {
        w.serialize(row).expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("utf-8 csv")
}

pub fn to_table(rows: &[VerifyRow]) -> String {
    let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
    let mut out = format!(
        "{:>8} {:>2} {:>8} {:<18} {:>4} {:>5} {:>5} {:>8}\n",
        "n", "k", "vertices", "verdict", "hole", "omega", "chi", "ms"
    );
    for r in rows {
        out.push_str(&format!(
            "{:>8} {:>2} {:>8} {:<18} {:>4} {:>5} {:>5} {:>8}\n",
            r.n,
            r.k,
            r.vertex_count,
            r.verdict,
            opt(r.hole_length),
            opt(r.omega),
            opt(r.chi),
            r.elapsed_ms
        ));
    }
    out
}

/// Integers separated by whitespace or commas; `#` starts a comment.
pub fn parse_n_list(text: &str) -> Result<Vec<u64>, Error> {
    text.lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .flat_map(|line| line.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|tok| !tok.is_empty())
        .map(idealgraph::parse_n)
        .collect()
}
