//! Connected induced-subgraph enumeration: the size-j vertex sets the
//! complexity pipeline averages over, and the per-size census counts.
//!
//! Two independent engines are provided. The fast path is the recursive
//! extension scheme from the ESU (FANMOD) motif enumerator, which grows each
//! subgraph only through exclusive neighbors with labels above the root so
//! every set is produced exactly once without a seen-set. A brute-force
//! subset scan serves as its oracle in tests.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::is_connected_subset;

/// A subset of the vertices of a specific graph, identifying an induced
/// subgraph. Stored as a bit mask; ordering is the numeric mask order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn new(mask: u64) -> Self {
        NodeSet(mask)
    }

    pub fn singleton(v: usize) -> Self {
        NodeSet(1u64 << v)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    /// Number of members (the subgraph size j).
    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        NodeSet(self.0 | 1 << v)
    }

    /// Member vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        })
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut mask = 0u64;
        for v in iter {
            mask |= 1 << v;
        }
        NodeSet(mask)
    }
}

impl std::fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Per-size counts of connected induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphCensus {
    counts: Vec<u64>,
}

impl SubgraphCensus {
    /// Number of connected induced subgraphs of size `j` (1-based; 0 outside
    /// `1..=node_count`).
    pub fn beta(&self, j: usize) -> u64 {
        if j == 0 {
            0
        } else {
            self.counts.get(j - 1).copied().unwrap_or(0)
        }
    }

    /// Counts for sizes `1..=node_count` in order.
    pub fn counts_by_size(&self) -> &[u64] {
        &self.counts
    }

    /// Total number of connected induced subgraphs of any size.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

struct Frame {
    sub: u64,
    ext: u64,
    /// Closed neighborhood of `sub` (members plus anything adjacent to them);
    /// extension candidates are always picked outside this set so a vertex is
    /// offered by exactly one branch.
    nbh: u64,
    size: usize,
}

/// Deterministic stream of every connected induced subgraph of size `j`.
pub struct SubgraphIter<'g> {
    g: &'g Graph,
    target: usize,
    stack: Vec<Frame>,
}

impl<'g> Iterator for SubgraphIter<'g> {
    type Item = NodeSet;

    fn next(&mut self) -> Option<NodeSet> {
        while let Some(frame) = self.stack.pop() {
            if frame.size == self.target {
                return Some(NodeSet::new(frame.sub));
            }
            let mut ext = frame.ext;
            let mut children = Vec::new();
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                let fresh = self.g.neighbors(w) & !frame.nbh & self.above_root(frame.sub);
                children.push(Frame {
                    sub: frame.sub | 1 << w,
                    ext: ext | fresh,
                    nbh: frame.nbh | self.g.neighbors(w),
                    size: frame.size + 1,
                });
            }
            // Reverse so the branch picking the lowest vertex is explored first.
            while let Some(c) = children.pop() {
                self.stack.push(c);
            }
        }
        None
    }
}

impl<'g> SubgraphIter<'g> {
    fn above_root(&self, sub: u64) -> u64 {
        let root = sub.trailing_zeros();
        u64::MAX << root << 1
    }
}

/// Streams every vertex subset of size `j` whose induced subgraph is
/// connected, each exactly once, in a deterministic order.
pub fn enumerate_connected_subgraphs(g: &Graph, j: usize) -> Result<SubgraphIter<'_>> {
    let n = g.node_count();
    if j < 1 || j > n {
        return Err(Error::SizeOutOfRange { size: j, max: n });
    }
    // Push roots high-to-low so vertex 0's branch is streamed first.
    let mut stack = Vec::with_capacity(n);
    for v in (0..n).rev() {
        let above = if v + 1 >= 64 { 0 } else { u64::MAX << (v + 1) };
        stack.push(Frame {
            sub: 1u64 << v,
            ext: g.neighbors(v) & above,
            nbh: 1u64 << v | g.neighbors(v),
            size: 1,
        });
    }
    Ok(SubgraphIter { g, target: j, stack })
}

/// Independent oracle: scans all `2^N` subsets and keeps the connected ones
/// of size `j`. Sorted by mask value.
pub fn brute_force_connected_subsets(g: &Graph, j: usize) -> Result<Vec<NodeSet>> {
    let n = g.node_count();
    if n > 24 {
        return Err(Error::BruteForceGuard(n));
    }
    if j < 1 || j > n {
        return Err(Error::SizeOutOfRange { size: j, max: n });
    }
    let mut out = Vec::new();
    for mask in 1u64..1 << n {
        if mask.count_ones() as usize == j && is_connected_subset(g, mask) {
            out.push(NodeSet::new(mask));
        }
    }
    Ok(out)
}

/// Counts connected induced subgraphs of every size with the streaming
/// enumerator.
pub fn census(g: &Graph) -> SubgraphCensus {
    let n = g.node_count();
    let counts = (1..=n)
        .map(|j| enumerate_connected_subgraphs(g, j).expect("size in range").count() as u64)
        .collect();
    SubgraphCensus { counts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, generate, TopologyFamily};

    fn sets(g: &Graph, j: usize) -> Vec<NodeSet> {
        let mut v: Vec<_> = enumerate_connected_subgraphs(g, j).unwrap().collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn ring4_triples() {
        let g = generate(TopologyFamily::Ring { n: 4 }).unwrap();
        let expect: Vec<NodeSet> = [0b0111, 0b1011, 0b1101, 0b1110]
            .into_iter()
            .map(NodeSet::new)
            .collect();
        assert_eq!(sets(&g, 3), expect);
    }

    #[test]
    fn star4_pairs_exclude_leaf_pairs() {
        let g = generate(TopologyFamily::Star { n: 4 }).unwrap();
        let expect: Vec<NodeSet> = [0b0011, 0b0101, 0b1001].into_iter().map(NodeSet::new).collect();
        assert_eq!(sets(&g, 2), expect);
    }

    #[test]
    fn singletons_for_any_graph() {
        let g = build_graph(5, &[(0, 3), (1, 2)]).unwrap();
        assert_eq!(sets(&g, 1), (0..5).map(NodeSet::singleton).collect::<Vec<_>>());
    }

    #[test]
    fn stream_is_deterministic() {
        let g = generate(TopologyFamily::MooreMotif).unwrap();
        for j in 1..=9 {
            let a: Vec<_> = enumerate_connected_subgraphs(&g, j).unwrap().collect();
            let b: Vec<_> = enumerate_connected_subgraphs(&g, j).unwrap().collect();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn matches_brute_force_on_named_graphs() {
        for g in [
            generate(TopologyFamily::MooreMotif).unwrap(),
            generate(TopologyFamily::Bus { n: 7 }).unwrap(),
            generate(TopologyFamily::Mesh { n: 6 }).unwrap(),
            build_graph(6, &[(0, 1), (1, 2), (3, 4)]).unwrap(),
        ] {
            for j in 1..=g.node_count() {
                assert_eq!(sets(&g, j), brute_force_connected_subsets(&g, j).unwrap());
            }
        }
    }

    #[test]
    fn census_vectors() {
        let ring4 = generate(TopologyFamily::Ring { n: 4 }).unwrap();
        assert_eq!(census(&ring4).counts_by_size(), &[4, 4, 4, 1]);
        let star4 = generate(TopologyFamily::Star { n: 4 }).unwrap();
        assert_eq!(census(&star4).counts_by_size(), &[4, 3, 3, 1]);
        let empty9 = generate(TopologyFamily::Empty { n: 9 }).unwrap();
        assert_eq!(census(&empty9).counts_by_size(), &[9, 0, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn census_mesh_is_binomial() {
        let mesh = generate(TopologyFamily::Mesh { n: 6 }).unwrap();
        assert_eq!(census(&mesh).counts_by_size(), &[6, 15, 20, 15, 6, 1]);
    }

    #[test]
    fn census_pair_count_is_edge_count() {
        for g in [
            generate(TopologyFamily::MooreMotif).unwrap(),
            generate(TopologyFamily::ErdosRenyi { n: 10, edge_probability: 0.35, seed: 3 })
                .unwrap(),
        ] {
            assert_eq!(census(&g).beta(2), g.edge_count() as u64);
        }
    }

    #[test]
    fn guards() {
        let g = generate(TopologyFamily::Mesh { n: 4 }).unwrap();
        assert!(matches!(
            enumerate_connected_subgraphs(&g, 5),
            Err(Error::SizeOutOfRange { size: 5, max: 4 })
        ));
        assert!(matches!(
            enumerate_connected_subgraphs(&g, 0),
            Err(Error::SizeOutOfRange { size: 0, max: 4 })
        ));
        let big = generate(TopologyFamily::Empty { n: 30 }).unwrap();
        assert!(matches!(brute_force_connected_subsets(&big, 2), Err(Error::BruteForceGuard(30))));
    }

    #[test]
    fn nodeset_basics() {
        let s: NodeSet = [0, 2, 5].into_iter().collect();
        assert_eq!(s.size(), 3);
        assert!(s.contains(2) && !s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(s.with(1).size(), 4);
        assert_eq!(format!("{s:?}"), "{0, 2, 5}");
    }
}
