//! Exhaustive induced-cycle search on dense adjacency rows.
//!
//! Cycles of one fixed length are enumerated as induced paths anchored at
//! their minimum vertex. Each cycle is reached exactly once: the anchor is the
//! smallest index on the cycle and the second vertex has a smaller index than
//! the closing vertex.

use fixedbitset::FixedBitSet;

/// Result of searching for induced cycles of a single length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LengthOutcome {
    /// First induced cycle in enumeration order, starting at its anchor.
    Found(Vec<usize>),
    /// No cycle of this length, but some induced path reached the closing step.
    Absent,
    /// No anchored induced path of `length - 1` vertices exists, so there is
    /// no induced cycle of this length or any longer one.
    Exhausted,
}

/// Counters from one search, for diagnostics and benchmarks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

struct Searcher<'a> {
    rows: &'a [FixedBitSet],
    length: usize,
    path: Vec<usize>,
    // blocked[m]: vertices unusable at interior position m, i.e. indices <= anchor,
    // closed neighbourhoods of path[1..m-1], and path[m-1]
    blocked: Vec<FixedBitSet>,
    anchor_closed: FixedBitSet,
    reached_closing: bool,
    stats: SearchStats,
}

impl<'a> Searcher<'a> {
    fn new(rows: &'a [FixedBitSet], length: usize) -> Self {
        let v = rows.len();
        Searcher {
            rows,
            length,
            path: Vec::with_capacity(length),
            blocked: vec![FixedBitSet::with_capacity(v); length + 1],
            anchor_closed: FixedBitSet::with_capacity(v),
            reached_closing: false,
            stats: SearchStats::default(),
        }
    }

    fn run(&mut self) -> LengthOutcome {
        let v = self.rows.len();
        for anchor in 0..v {
            if v - anchor < self.length {
                break;
            }
            self.anchor_closed.clone_from(&self.rows[anchor]);
            self.anchor_closed.insert(anchor);
            self.path.clear();
            self.path.push(anchor);
            let seconds: Vec<usize> = self.rows[anchor].ones().filter(|&s| s > anchor).collect();
            for second in seconds {
                self.path.push(second);
                let mut blocked = FixedBitSet::with_capacity(v);
                blocked.insert_range(..anchor + 1);
                blocked.insert(second);
                self.blocked[2] = blocked;
                if self.extend() {
                    return LengthOutcome::Found(self.path.clone());
                }
                self.path.pop();
            }
        }
        if self.reached_closing {
            LengthOutcome::Absent
        } else {
            LengthOutcome::Exhausted
        }
    }

    /// Extends `path` (length m >= 2) until it closes into an induced cycle.
    fn extend(&mut self) -> bool {
        self.stats.nodes += 1;
        let m = self.path.len();
        let tail = *self.path.last().unwrap();
        let anchor = self.path[0];
        let mut cand = self.rows[tail].clone();
        cand.difference_with(&self.blocked[m]);
        if m + 1 == self.length {
            self.reached_closing = true;
            cand.intersect_with(&self.rows[anchor]);
            let second = self.path[1];
            if let Some(last) = cand.ones().find(|&w| w > second) {
                self.path.push(last);
                return true;
            }
            return false;
        }
        cand.difference_with(&self.anchor_closed);
        let (lower, upper) = self.blocked.split_at_mut(m + 1);
        let next = &mut upper[0];
        next.clone_from(&lower[m]);
        next.union_with(&self.rows[tail]);
        for w in cand.ones() {
            self.path.push(w);
            if self.extend() {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// Searches for an induced cycle of exactly `length` vertices (`length >= 4`).
pub fn find_cycle_of_length(rows: &[FixedBitSet], length: usize) -> (LengthOutcome, SearchStats) {
    assert!(length >= 4, "induced cycles of interest have length >= 4");
    let mut s = Searcher::new(rows, length);
    let outcome = s.run();
    (outcome, s.stats)
}

/// Shortest induced cycle among the given ascending lengths.
///
/// `None` means every requested length was ruled out. The scan stops early
/// once no anchored induced path is long enough to close a cycle.
pub fn find_shortest_cycle(
    rows: &[FixedBitSet],
    lengths: impl IntoIterator<Item = usize>,
) -> (Option<Vec<usize>>, SearchStats) {
    let mut total = SearchStats::default();
    for length in lengths {
        if length > rows.len() {
            break;
        }
        let (outcome, stats) = find_cycle_of_length(rows, length);
        total.nodes += stats.nodes;
        match outcome {
            LengthOutcome::Found(cycle) => return (Some(cycle), total),
            LengthOutcome::Absent => {}
            LengthOutcome::Exhausted => break,
        }
    }
    (None, total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows_from_edges(v: usize, edges: &[(usize, usize)]) -> Vec<FixedBitSet> {
        let mut rows = vec![FixedBitSet::with_capacity(v); v];
        for &(a, b) in edges {
            rows[a].insert(b);
            rows[b].insert(a);
        }
        rows
    }

    fn cycle_graph(v: usize) -> Vec<FixedBitSet> {
        let edges: Vec<_> = (0..v).map(|i| (i, (i + 1) % v)).collect();
        rows_from_edges(v, &edges)
    }

    /// Every induced cycle of the given length, found by checking all vertex
    /// subsets and all cyclic orders.
    fn brute_force_count(rows: &[FixedBitSet], length: usize) -> usize {
        let v = rows.len();
        let mut count = 0;
        for mask in 0u32..(1 << v) {
            if mask.count_ones() as usize != length {
                continue;
            }
            let verts: Vec<usize> = (0..v).filter(|i| mask >> i & 1 == 1).collect();
            // an induced subgraph is a cycle iff connected and 2-regular
            let deg_ok = verts
                .iter()
                .all(|&a| verts.iter().filter(|&&b| rows[a].contains(b)).count() == 2);
            if !deg_ok {
                continue;
            }
            let mut seen = vec![verts[0]];
            let mut stack = vec![verts[0]];
            while let Some(a) = stack.pop() {
                for &b in &verts {
                    if rows[a].contains(b) && !seen.contains(&b) {
                        seen.push(b);
                        stack.push(b);
                    }
                }
            }
            if seen.len() == length {
                count += 1;
            }
        }
        count
    }

    /// Counts anchored induced cycles with the same canon as the searcher,
    /// using plain path scans instead of bitset masks.
    fn count_all(rows: &[FixedBitSet], length: usize) -> usize {
        struct Collect<'a> {
            rows: &'a [FixedBitSet],
            length: usize,
            count: usize,
        }
        impl Collect<'_> {
            fn go(&mut self, path: &mut Vec<usize>) {
                let m = path.len();
                let tail = path[m - 1];
                let anchor = path[0];
                for w in self.rows[tail].ones() {
                    if w <= anchor || path.contains(&w) {
                        continue;
                    }
                    let chord = path[..m - 1].iter().skip(1).any(|&p| self.rows[p].contains(w));
                    if chord {
                        continue;
                    }
                    if m + 1 == self.length {
                        if self.rows[anchor].contains(w) && w > path[1] {
                            self.count += 1;
                        }
                    } else if !self.rows[anchor].contains(w) {
                        path.push(w);
                        self.go(path);
                        path.pop();
                    }
                }
            }
        }
        let mut c = Collect { rows, length, count: 0 };
        for a in 0..rows.len() {
            for s in rows[a].ones().filter(|&s| s > a) {
                let mut path = vec![a, s];
                c.go(&mut path);
            }
        }
        c.count
    }

    #[test]
    fn finds_whole_cycle() {
        for v in 4..=9 {
            let rows = cycle_graph(v);
            let (outcome, _) = find_cycle_of_length(&rows, v);
            let LengthOutcome::Found(c) = outcome else { panic!("C{v} not found") };
            assert_eq!(c.len(), v);
            assert_eq!(c[0], 0);
            assert_eq!(c[1], 1);
            assert_eq!(c[v - 1], v - 1);
        }
    }

    #[test]
    fn chord_blocks_cycle() {
        let mut rows = cycle_graph(7);
        rows[0].insert(3);
        rows[3].insert(0);
        assert_ne!(find_cycle_of_length(&rows, 7).0, LengthOutcome::Found(vec![0, 1, 2, 3, 4, 5, 6]));
        // 0-3-4-5-6 is an induced 5-cycle
        assert_eq!(find_cycle_of_length(&rows, 5).0, LengthOutcome::Found(vec![0, 3, 4, 5, 6]));
    }

    #[test]
    fn exhausted_when_no_long_paths() {
        let rows = rows_from_edges(6, &[(0, 1), (1, 2), (3, 4)]);
        assert_eq!(find_cycle_of_length(&rows, 5).0, LengthOutcome::Exhausted);
        let (c, _) = find_shortest_cycle(&rows, [5, 7]);
        assert!(c.is_none());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // Petersen graph plus a few pseudo-random graphs
        let petersen = rows_from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        );
        let mut graphs = vec![petersen];
        let mut state = 0x9e3779b97f4a7c15u64;
        for v in [8usize, 10, 12] {
            for density in [30u64, 50, 70] {
                let mut edges = Vec::new();
                for a in 0..v {
                    for b in a + 1..v {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        if state % 100 < density {
                            edges.push((a, b));
                        }
                    }
                }
                graphs.push(rows_from_edges(v, &edges));
            }
        }
        for rows in &graphs {
            for length in 4..=rows.len() {
                let brute = brute_force_count(rows, length);
                assert_eq!(count_all(rows, length), brute);
                let (outcome, _) = find_cycle_of_length(rows, length);
                match outcome {
                    LengthOutcome::Found(_) => assert!(brute > 0),
                    _ => assert_eq!(brute, 0),
                }
            }
        }
    }
}
