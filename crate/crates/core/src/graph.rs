//! The intersection graph of ideals of Z_n, its complement and induced subgraphs.

use fixedbitset::FixedBitSet;

use crate::arithmetic::{divisor_lcm, Divisor, Factorization};

/// Simple undirected graph on divisors of `n`, stored as dense adjacency rows.
///
/// Vertex `i` is the ideal generated by `vertices()[i]`; vertices are kept in
/// ascending order of divisor value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGraph {
    factorization: Factorization,
    vertices: Vec<Divisor>,
    values: Vec<u64>,
    rows: Vec<FixedBitSet>,
    complemented: bool,
}

/// Whether the ideals `(a)` and `(b)` of Z_n intersect nontrivially.
///
/// The ideals meet in `(lcm(a, b))`, which is nonzero iff `lcm(a, b)` is a
/// proper divisor of `n`. For nontrivial `a`, `b` the lcm divides `n` and is
/// at least `a > 1` automatically, so the test reduces to `lcm(a, b) != n`:
/// some exponent of the componentwise max stays below the full exponent.
pub fn adjacent(a: &Divisor, b: &Divisor, f: &Factorization) -> bool {
    assert!(
        !f.is_unit(a) && !f.is_full(a) && !f.is_unit(b) && !f.is_full(b),
        "adjacency is only defined on nontrivial divisors"
    );
    assert_ne!(a, b, "adjacency is only defined on distinct vertices");
    !f.is_full(&divisor_lcm(a, b))
}

impl IdealGraph {
    /// Builds G(Z_n): vertices are the nontrivial divisors of `n`.
    pub fn build(f: &Factorization) -> Self {
        let vertices = f.nontrivial_divisors();
        let values: Vec<u64> = vertices.iter().map(|d| f.value(d)).collect();
        let len = vertices.len();
        let mut rows = vec![FixedBitSet::with_capacity(len); len];
        for i in 0..len {
            for j in (i + 1)..len {
                if adjacent(&vertices[i], &vertices[j], f) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        IdealGraph {
            factorization: f.clone(),
            vertices,
            values,
            rows,
            complemented: false,
        }
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn n(&self) -> u64 {
        self.factorization.n()
    }

    pub fn vertices(&self) -> &[Divisor] {
        &self.vertices
    }

    /// Decimal divisor values, parallel to [`vertices`](Self::vertices).
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_complemented(&self) -> bool {
        self.complemented
    }

    /// 0 or 1 vertices. Such graphs are classified perfect.
    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn neighbors(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[FixedBitSet] {
        &self.rows
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.ones().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    /// Index of the vertex with divisor value `m`.
    pub fn index_of(&self, m: u64) -> Option<usize> {
        self.values.binary_search(&m).ok()
    }

    pub fn complement(&self) -> IdealGraph {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut c = row.clone();
                c.toggle_range(..);
                c.set(i, false);
                c
            })
            .collect();
        IdealGraph {
            factorization: self.factorization.clone(),
            vertices: self.vertices.clone(),
            values: self.values.clone(),
            rows,
            complemented: !self.complemented,
        }
    }

    /// Induced subgraph on `subset`, reindexed in ascending index order.
    ///
    /// Panics on out-of-range or duplicate indices.
    pub fn induced_subgraph(&self, subset: &[usize]) -> IdealGraph {
        let mut keep = subset.to_vec();
        keep.sort_unstable();
        for w in keep.windows(2) {
            assert_ne!(w[0], w[1], "duplicate vertex index {}", w[0]);
        }
        if let Some(&last) = keep.last() {
            assert!(last < self.vertex_count(), "vertex index {last} out of range");
        }
        let len = keep.len();
        let rows = keep
            .iter()
            .map(|&i| {
                let mut row = FixedBitSet::with_capacity(len);
                for (new_j, &j) in keep.iter().enumerate() {
                    if self.rows[i].contains(j) {
                        row.insert(new_j);
                    }
                }
                row
            })
            .collect();
        IdealGraph {
            factorization: self.factorization.clone(),
            vertices: keep.iter().map(|&i| self.vertices[i].clone()).collect(),
            values: keep.iter().map(|&i| self.values[i]).collect(),
            rows,
            complemented: self.complemented,
        }
    }
}
