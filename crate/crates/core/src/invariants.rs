//! Exact clique number and chromatic number.
//!
//! Both searches visit vertices by descending degree, ties broken by
//! ascending divisor value. The clique search is branch-and-bound with greedy
//! colouring bounds; the colouring search tries `k = omega, omega + 1, ...`
//! colours with backtracking and forward checking.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::arithmetic::Factorization;
use crate::error::{Error, Result};
use crate::graph::IdealGraph;
use crate::perfectness::DEFAULT_CAP;

/// One iteration of the colouring search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ColoringAttempt {
    pub colors: usize,
    pub feasible: bool,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub chi: usize,
    /// Colour of each vertex, indexed like the graph's vertices.
    pub colors: Vec<usize>,
    /// The attempts made; every attempt before the last was infeasible. Colour
    /// counts below the first attempt are ruled out by the clique lower bound.
    pub transcript: Vec<ColoringAttempt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: u64,
    pub omega: usize,
    pub chi: usize,
    pub max_clique_witness: Vec<u64>,
    pub coloring_witness: BTreeMap<u64, usize>,
    pub transcript: Vec<ColoringAttempt>,
}

impl InvariantReport {
    pub fn is_weakly_perfect(&self) -> bool {
        self.omega == self.chi
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report json")
    }
}

fn ensure_within_cap(g: &IdealGraph, cap: usize) -> Result<()> {
    if g.vertex_count() > cap {
        Err(Error::SearchInfeasible { vertices: g.vertex_count(), cap })
    } else {
        Ok(())
    }
}

/// Vertices by descending degree, then ascending index (= ascending value).
fn search_order(g: &IdealGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Adjacency rows relabelled so that position `p` holds vertex `order[p]`.
fn permuted_rows(g: &IdealGraph, order: &[usize]) -> Vec<FixedBitSet> {
    let len = order.len();
    let mut pos = vec![0; len];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    order
        .iter()
        .map(|&v| {
            let mut row = FixedBitSet::with_capacity(len);
            for u in g.neighbors(v).ones() {
                row.insert(pos[u]);
            }
            row
        })
        .collect()
}

struct CliqueSearch<'a> {
    rows: &'a [FixedBitSet],
    current: Vec<usize>,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, mut cand: FixedBitSet) {
        // greedy colour classes over the candidates, in position order
        let mut bounded: Vec<(usize, usize)> = Vec::new();
        let mut uncolored = cand.clone();
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.ones().next() {
                q.set(v, false);
                q.difference_with(&self.rows[v]);
                uncolored.set(v, false);
                bounded.push((v, color));
            }
        }
        for &(v, color) in bounded.iter().rev() {
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let mut next = cand.clone();
            next.intersect_with(&self.rows[v]);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.set(v, false);
        }
    }
}

pub fn clique_number(g: &IdealGraph) -> Result<(usize, Vec<usize>)> {
    clique_number_capped(g, DEFAULT_CAP)
}

/// Maximum clique size and one maximum clique (ascending vertex indices).
pub fn clique_number_capped(g: &IdealGraph, cap: usize) -> Result<(usize, Vec<usize>)> {
    ensure_within_cap(g, cap)?;
    let order = search_order(g);
    let rows = permuted_rows(g, &order);
    let mut all = FixedBitSet::with_capacity(order.len());
    all.insert_range(..);
    let mut search = CliqueSearch { rows: &rows, current: Vec::new(), best: Vec::new() };
    if !order.is_empty() {
        search.expand(all);
    }
    let mut witness: Vec<usize> = search.best.iter().map(|&p| order[p]).collect();
    witness.sort_unstable();
    if !is_clique(g, &witness) {
        return Err(Error::WitnessRejected("clique witness has a non-adjacent pair".into()));
    }
    Ok((witness.len(), witness))
}

pub fn is_clique(g: &IdealGraph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| a != b && g.is_adjacent(a, b)))
}

/// Proper colouring check; returns the number of distinct colours used.
pub fn check_coloring(g: &IdealGraph, colors: &[usize]) -> Option<usize> {
    if colors.len() != g.vertex_count() {
        return None;
    }
    if g.edges().iter().any(|&(a, b)| colors[a] == colors[b]) {
        return None;
    }
    let mut used: Vec<usize> = colors.to_vec();
    used.sort_unstable();
    used.dedup();
    Some(used.len())
}

struct ColorSearch<'a> {
    rows: &'a [FixedBitSet],
    k: usize,
    colors: Vec<Option<usize>>,
    // conflicts[v * k + c]: coloured neighbours of v using colour c
    conflicts: Vec<u32>,
    available: Vec<usize>,
    nodes: u64,
}

impl ColorSearch<'_> {
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.colors[v] = Some(c);
        let mut ok = true;
        for u in self.rows[v].ones() {
            let slot = &mut self.conflicts[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.available[u] -= 1;
                if self.available[u] == 0 && self.colors[u].is_none() {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = None;
        for u in self.rows[v].ones() {
            let slot = &mut self.conflicts[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.available[u] += 1;
            }
        }
    }

    /// Colours positions `p..` given that colours `0..used` are in use.
    fn solve(&mut self, p: usize, used: usize) -> bool {
        self.nodes += 1;
        if p == self.rows.len() {
            return true;
        }
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.conflicts[p * self.k + c] > 0 {
                continue;
            }
            let ok = self.assign(p, c);
            if ok && self.solve(p + 1, used.max(c + 1)) {
                return true;
            }
            self.unassign(p, c);
        }
        false
    }
}

fn try_color(rows: &[FixedBitSet], k: usize) -> (Option<Vec<usize>>, u64) {
    let len = rows.len();
    let mut s = ColorSearch {
        rows,
        k,
        colors: vec![None; len],
        conflicts: vec![0; len * k],
        available: vec![k; len],
        nodes: 0,
    };
    if s.solve(0, 0) {
        (Some(s.colors.into_iter().map(|c| c.unwrap()).collect()), s.nodes)
    } else {
        (None, s.nodes)
    }
}

pub fn chromatic_number(g: &IdealGraph) -> Result<Coloring> {
    chromatic_number_capped(g, DEFAULT_CAP)
}

/// Exact chromatic number with a proper colouring using exactly `chi` colours.
pub fn chromatic_number_capped(g: &IdealGraph, cap: usize) -> Result<Coloring> {
    let (omega, _) = clique_number_capped(g, cap)?;
    chromatic_number_from(g, omega)
}

fn chromatic_number_from(g: &IdealGraph, lower: usize) -> Result<Coloring> {
    let len = g.vertex_count();
    if len == 0 {
        return Ok(Coloring { chi: 0, colors: Vec::new(), transcript: Vec::new() });
    }
    let order = search_order(g);
    let rows = permuted_rows(g, &order);
    let mut transcript = Vec::new();
    for k in lower.max(1)..=len {
        let (found, nodes) = try_color(&rows, k);
        transcript.push(ColoringAttempt { colors: k, feasible: found.is_some(), nodes });
        if let Some(by_position) = found {
            let mut colors = vec![0; len];
            for (p, &v) in order.iter().enumerate() {
                colors[v] = by_position[p];
            }
            if check_coloring(g, &colors) != Some(k) {
                return Err(Error::WitnessRejected(format!(
                    "colouring is improper or does not use exactly {k} colours"
                )));
            }
            return Ok(Coloring { chi: k, colors, transcript });
        }
    }
    unreachable!("every graph is colourable with one colour per vertex")
}

/// Clique number, chromatic number and their witnesses for G(Z_n).
pub fn invariant_report(f: &Factorization, cap: usize) -> Result<InvariantReport> {
    let g = IdealGraph::build(f);
    graph_invariants(&g, cap)
}

pub fn graph_invariants(g: &IdealGraph, cap: usize) -> Result<InvariantReport> {
    let (omega, clique) = clique_number_capped(g, cap)?;
    let coloring = chromatic_number_from(g, omega)?;
    Ok(InvariantReport {
        n: g.n(),
        omega,
        chi: coloring.chi,
        max_clique_witness: clique.iter().map(|&i| g.values()[i]).collect(),
        coloring_witness: coloring
            .colors
            .iter()
            .enumerate()
            .map(|(i, &c)| (g.values()[i], c))
            .collect(),
        transcript: coloring.transcript,
    })
}

/// `omega == chi` on G(Z_n).
pub fn check_weakly_perfect(f: &Factorization) -> Result<bool> {
    Ok(invariant_report(f, DEFAULT_CAP)?.is_weakly_perfect())
}
