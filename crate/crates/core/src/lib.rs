//! Intersection graphs of ideals of Z_n.
//!
//! The nontrivial ideals `(m)`, `1 < m < n`, `m | n`, are the vertices; two
//! ideals are adjacent when they intersect in a nonzero ideal. This crate
//! builds these graphs from the prime factorization of `n`, decides
//! perfectness by exhaustive odd hole and odd antihole search, and computes
//! exact clique and chromatic numbers. Every witness (hole, clique, colouring)
//! is re-checked before it is returned.

pub mod arithmetic;
pub mod error;
pub mod export;
pub mod graph;
pub mod invariants;
pub mod perfectness;
pub mod search;

pub use arithmetic::{divisor_gcd, divisor_lcm, factorize, parse_n, Divisor, Factorization, PrimePower};
pub use error::{Error, Result};
pub use export::{export, ExportFormat};
pub use graph::{adjacent, IdealGraph};
pub use invariants::{
    check_weakly_perfect, chromatic_number, clique_number, graph_invariants, invariant_report,
    Coloring, InvariantReport,
};
pub use perfectness::{
    check_certificate, construct_paper_hole, find_odd_hole, find_odd_hole_capped, is_perfect,
    is_perfect_with, validate_certificate, CertificateDefect, HoleCertificate, Host,
    PerfectnessOptions, PerfectnessReport, Verdict, WitnessSource, DEFAULT_CAP,
};
