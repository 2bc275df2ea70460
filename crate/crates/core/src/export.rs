//! Text exports: Graphviz DOT, DIMACS `p edge`, and JSON.
//!
//! All output is LF-terminated and depends only on the graph, so two exports
//! of the same graph are byte-identical.

use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::arithmetic::PrimePower;
use crate::graph::IdealGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Dimacs,
    Json,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "dimacs" => Ok(ExportFormat::Dimacs),
            "json" => Ok(ExportFormat::Json),
            other => Err(format!("unknown format {other:?} (expected dot, dimacs or json)")),
        }
    }
}

#[derive(Serialize)]
struct GraphJson<'a> {
    n: u64,
    factorization: &'a [PrimePower],
    vertices: &'a [u64],
    edges: Vec<(usize, usize)>,
    is_complemented: bool,
}

pub fn export(g: &IdealGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(g),
        ExportFormat::Dimacs => to_dimacs(g),
        ExportFormat::Json => to_json(g),
    }
}

/// Undirected DOT graph whose node ids are the decimal divisor values.
pub fn to_dot(g: &IdealGraph) -> String {
    let name = if g.is_complemented() {
        format!("complement of G(Z_{})", g.n())
    } else {
        format!("G(Z_{})", g.n())
    };
    let mut out = String::new();
    writeln!(out, "graph \"{name}\" {{").unwrap();
    for v in g.values() {
        writeln!(out, "  {v};").unwrap();
    }
    for (i, j) in g.edges() {
        writeln!(out, "  {} -- {};", g.values()[i], g.values()[j]).unwrap();
    }
    out.push_str("}\n");
    out
}

/// DIMACS edge format with 1-based vertex indices in value order.
pub fn to_dimacs(g: &IdealGraph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.vertex_count(), edges.len()).unwrap();
    for (i, j) in edges {
        writeln!(out, "e {} {}", i + 1, j + 1).unwrap();
    }
    out
}

/// JSON object; `edges` holds 0-based index pairs into `vertices`.
pub fn to_json(g: &IdealGraph) -> String {
    let doc = GraphJson {
        n: g.n(),
        factorization: g.factorization().primes(),
        vertices: g.values(),
        edges: g.edges(),
        is_complemented: g.is_complemented(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph json");
    s.push('\n');
    s
}
