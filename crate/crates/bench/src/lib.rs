//! Benchmark inputs shared by the criterion targets.

use idealgraph::{factorize, IdealGraph};

/// Moduli with 2 to 6 distinct primes and between 14 and 62 vertices.
pub const MODULI: [u64; 6] = [210, 1260, 1680, 2310, 7560, 30030];

pub fn graph(n: u64) -> IdealGraph {
    IdealGraph::build(&factorize(n).expect("bench modulus"))
}
