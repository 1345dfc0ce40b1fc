//! Shortest-path machinery restricted to induced subgraphs, hop-limited
//! reachability counts, and the classic whole-graph metrics (diameter,
//! average path length, clustering, connectivity).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subgraphs::NodeSet;

/// Per-source BFS distances confined to an induced subgraph.
#[derive(Debug, Clone)]
pub struct DistanceRow {
    source: usize,
    restriction: NodeSet,
    dist: Vec<Option<u32>>,
}

impl DistanceRow {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn restriction(&self) -> NodeSet {
        self.restriction
    }

    /// Hop distance to `v` inside the restriction; `None` when `v` is
    /// unreachable or outside the restriction.
    pub fn distance(&self, v: usize) -> Option<u32> {
        self.dist.get(v).copied().flatten()
    }
}

/// Level-order BFS over bit masks. Returns the cumulative reach counts
/// (entry `d` is the number of vertices within `d` hops of `source`) and the
/// set of reached vertices. The restriction must contain the source bit.
pub(crate) fn bfs_cumulative(g: &Graph, restriction: u64, source: usize) -> (Vec<u32>, u64) {
    debug_assert!(restriction >> source & 1 == 1);
    let mut reached = 1u64 << source;
    let mut frontier = reached;
    let mut cum = vec![1u32];
    loop {
        let mut next = 0u64;
        let mut m = frontier;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            next |= g.neighbors(u);
        }
        next &= restriction & !reached;
        if next == 0 {
            return (cum, reached);
        }
        reached |= next;
        cum.push(reached.count_ones());
        frontier = next;
    }
}

/// Exact shortest-path distances from `source` within the induced subgraph
/// on `restriction`.
pub fn bfs_within(g: &Graph, restriction: NodeSet, source: usize) -> Result<DistanceRow> {
    if !restriction.contains(source) {
        return Err(Error::SourceNotInRestriction(source));
    }
    let mut dist = vec![None; g.node_count()];
    dist[source] = Some(0);
    let mut reached = 1u64 << source;
    let mut frontier = reached;
    let mut d = 0u32;
    loop {
        let mut next = 0u64;
        let mut m = frontier;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            next |= g.neighbors(u);
        }
        next &= restriction.mask() & !reached;
        if next == 0 {
            return Ok(DistanceRow { source, restriction, dist });
        }
        d += 1;
        let mut m = next;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            dist[u] = Some(d);
        }
        reached |= next;
        frontier = next;
    }
}

/// Number of vertices of the restriction within `r` hops of `n` in the
/// induced subgraph, counting `n` itself.
pub fn reach_count(g: &Graph, restriction: NodeSet, n: usize, r: usize) -> Result<usize> {
    if !restriction.contains(n) {
        return Err(Error::SourceNotInRestriction(n));
    }
    let (cum, _) = bfs_cumulative(g, restriction.mask(), n);
    Ok(cum[r.min(cum.len() - 1)] as usize)
}

/// Longest shortest path. For disconnected graphs this is the maximum over
/// per-component diameters (0 for an edgeless graph), never infinite.
pub fn diameter(g: &Graph) -> usize {
    let full = g.full_mask();
    (0..g.node_count())
        .map(|v| bfs_cumulative(g, full, v).0.len() - 1)
        .max()
        .unwrap_or(0)
}

/// Mean shortest-path distance over unordered vertex pairs of a connected
/// graph with at least two vertices.
pub fn average_path_length(g: &Graph) -> Result<f64> {
    let n = g.node_count();
    if n < 2 || !is_connected(g) {
        return Err(Error::PathLengthUndefined);
    }
    let full = g.full_mask();
    let mut total = 0u64;
    for v in 0..n {
        let (cum, _) = bfs_cumulative(g, full, v);
        for d in 1..cum.len() {
            total += u64::from(cum[d] - cum[d - 1]) * d as u64;
        }
    }
    Ok(total as f64 / (n * (n - 1)) as f64)
}

/// Fraction of `v`'s neighbor pairs that are themselves adjacent; 0 when
/// `deg(v) < 2`.
pub fn local_clustering(g: &Graph, v: usize) -> f64 {
    let nbrs = g.neighbors(v);
    let d = nbrs.count_ones() as u64;
    if d < 2 {
        return 0.0;
    }
    let mut links = 0u64;
    let mut m = nbrs;
    while m != 0 {
        let u = m.trailing_zeros() as usize;
        m &= m - 1;
        links += u64::from((g.neighbors(u) & nbrs).count_ones());
    }
    // Each neighbor-neighbor edge was counted from both endpoints.
    (links / 2) as f64 / (d * (d - 1) / 2) as f64
}

/// Unweighted mean of the local clustering coefficients over all vertices.
pub fn average_clustering(g: &Graph) -> f64 {
    let n = g.node_count();
    (0..n).map(|v| local_clustering(g, v)).sum::<f64>() / n as f64
}

/// True when the induced subgraph on `mask` is connected (and nonempty).
pub(crate) fn is_connected_subset(g: &Graph, mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    let (_, reached) = bfs_cumulative(g, mask, start);
    reached == mask
}

pub fn is_connected(g: &Graph) -> bool {
    is_connected_subset(g, g.full_mask())
}

/// Maximal connected vertex sets, ordered by their lowest vertex.
pub fn connected_components(g: &Graph) -> Vec<NodeSet> {
    let mut remaining = g.full_mask();
    let mut out = Vec::new();
    while remaining != 0 {
        let v = remaining.trailing_zeros() as usize;
        let (_, reached) = bfs_cumulative(g, remaining, v);
        out.push(NodeSet::new(reached));
        remaining &= !reached;
    }
    out
}
