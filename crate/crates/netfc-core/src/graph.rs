//! Immutable undirected-graph representation, named topology generators, and
//! edge-list / DOT file formats.
//!
//! Vertices are 0-indexed integers. The vertex count is capped at 64 so that
//! any vertex subset fits a single `u64` bit mask; that cap is what keeps the
//! subgraph enumeration and reachability machinery branch-light.

use crate::error::{Error, Result};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

/// Maximum supported vertex count (one bit per vertex in a `u64`).
pub const MAX_NODES: usize = 64;

/// An immutable simple undirected graph.
///
/// The adjacency relation is stored as one neighbor bit mask per vertex, so
/// neighborhood queries, BFS frontiers and induced-subgraph restrictions are
/// all single AND/OR operations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Number of vertices (the topology's N).
    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Neighbor set of `v` as a bit mask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Bit mask covering every vertex.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            let mut m = self.adj[u] & !((1u64 << u) | (1u64 << u).wrapping_sub(1));
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                out.push((u, v));
            }
        }
        out
    }
}

/// Named topology generators covering the evaluated families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TopologyFamily {
    /// Path on `n` vertices.
    Bus { n: usize },
    /// Cycle on `n` vertices.
    Ring { n: usize },
    /// One center adjacent to `n - 1` leaves.
    Star { n: usize },
    /// Complete graph on `n` vertices.
    Mesh { n: usize },
    /// `n` isolated vertices.
    Empty { n: usize },
    /// The fixed 9-node 3x3 king graph (grid cells adjacent horizontally,
    /// vertically and diagonally). Ignores any requested size.
    MooreMotif,
    /// Seeded Erdős–Rényi G(n, p) draw; each pair is an edge independently
    /// with probability `edge_probability`.
    ErdosRenyi { n: usize, edge_probability: f64, seed: u64 },
}

/// Builds a graph from an explicit edge list. Duplicate edges (in either
/// orientation) collapse to one.
pub fn build_graph(node_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    if node_count == 0 {
        return Err(Error::EmptyGraph);
    }
    if node_count > MAX_NODES {
        return Err(Error::CapExceeded(node_count));
    }
    let mut adj = vec![0u64; node_count];
    for &(u, v) in edges {
        if u >= node_count {
            return Err(Error::EndpointOutOfRange { endpoint: u, nodes: node_count });
        }
        if v >= node_count {
            return Err(Error::EndpointOutOfRange { endpoint: v, nodes: node_count });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let edge_count = adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2;
    Ok(Graph { n: node_count, adj, edge_count })
}

fn require(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidTopology(msg.to_string()))
    }
}

/// Generates a named topology.
pub fn generate(family: TopologyFamily) -> Result<Graph> {
    match family {
        TopologyFamily::Bus { n } => {
            require(n >= 2, "bus needs n >= 2")?;
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            build_graph(n, &edges)
        }
        TopologyFamily::Ring { n } => {
            require(n >= 3, "ring needs n >= 3")?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            build_graph(n, &edges)
        }
        TopologyFamily::Star { n } => {
            require(n >= 2, "star needs n >= 2")?;
            let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            build_graph(n, &edges)
        }
        TopologyFamily::Mesh { n } => {
            require(n >= 2, "mesh needs n >= 2")?;
            let mut edges = Vec::with_capacity(n * (n - 1) / 2);
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            build_graph(n, &edges)
        }
        TopologyFamily::Empty { n } => build_graph(n, &[]),
        TopologyFamily::MooreMotif => {
            // 3x3 grid, row-major vertex ids, king-move adjacency.
            let mut edges = Vec::new();
            for r in 0..3i32 {
                for c in 0..3i32 {
                    for (dr, dc) in [(0, 1), (1, -1), (1, 0), (1, 1)] {
                        let (rr, cc) = (r + dr, c + dc);
                        if (0..3).contains(&rr) && (0..3).contains(&cc) {
                            edges.push(((r * 3 + c) as usize, (rr * 3 + cc) as usize));
                        }
                    }
                }
            }
            build_graph(9, &edges)
        }
        TopologyFamily::ErdosRenyi { n, edge_probability, seed } => {
            require(n >= 2, "erdos-renyi needs n >= 2")?;
            require(
                edge_probability > 0.0 && edge_probability < 1.0,
                "edge probability must lie strictly between 0 and 1",
            )?;
            if n > MAX_NODES {
                return Err(Error::CapExceeded(n));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(erdos_renyi_draw(n, edge_probability, &mut rng))
        }
    }
}

/// One G(n, p) draw from an already-seeded generator. Pairs are visited in
/// lexicographic order and each consumes exactly one `u64` from the stream,
/// so draws are reproducible bit-for-bit across platforms.
pub(crate) fn erdos_renyi_draw(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    // Threshold in 64-bit fixed point: edge iff next_u64 < round(p * 2^64).
    let threshold = ((p * 18_446_744_073_709_551_616.0) as u128).min(u128::from(u64::MAX) + 1);
    let mut adj = vec![0u64; n];
    let mut edge_count = 0;
    for u in 0..n {
        for v in u + 1..n {
            if u128::from(rng.next_u64()) < threshold {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
                edge_count += 1;
            }
        }
    }
    Graph { n, adj, edge_count }
}

/// Parses the plain edge-list format: optional `#` comment lines, then a
/// `N M` header, then exactly `M` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::MalformedHeader("missing header line".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::MalformedHeader(format!("expected `N M`, got {header:?}")))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::MalformedHeader(format!("expected `N M`, got {header:?}")))?;
    if it.next().is_some() {
        return Err(Error::MalformedHeader(format!("trailing tokens in {header:?}")));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (idx, line) = lines.next().ok_or_else(|| Error::MalformedEdge {
            line: 0,
            msg: format!("expected {m} edge lines, found {}", edges.len()),
        })?;
        let mut it = line.split_whitespace();
        let parse = |t: Option<&str>| -> Result<usize> {
            t.and_then(|t| t.parse().ok()).ok_or_else(|| Error::MalformedEdge {
                line: idx + 1,
                msg: format!("expected `u v`, got {line:?}"),
            })
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::MalformedEdge {
                line: idx + 1,
                msg: format!("trailing tokens in {line:?}"),
            });
        }
        edges.push((u, v));
    }
    if let Some((idx, line)) = lines.next() {
        return Err(Error::MalformedEdge {
            line: idx + 1,
            msg: format!("unexpected extra line {line:?}"),
        });
    }
    build_graph(n, &edges)
}

/// Writes the edge-list format emitted by this crate: `N M` header, then
/// edges sorted lexicographically with `u < v`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.node_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Renders the graph as an undirected DOT document. Every vertex is declared
/// explicitly so isolated vertices survive the round trip through other tools.
pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.node_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_basic_path() {
        let g = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = build_graph(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn build_rejects_invalid_input() {
        assert!(matches!(build_graph(2, &[(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(
            build_graph(3, &[(0, 5)]),
            Err(Error::EndpointOutOfRange { endpoint: 5, nodes: 3 })
        ));
        assert!(matches!(build_graph(65, &[]), Err(Error::CapExceeded(65))));
        assert!(matches!(build_graph(0, &[]), Err(Error::EmptyGraph)));
    }

    #[test]
    fn generator_edge_counts() {
        for n in 2..=16 {
            assert_eq!(generate(TopologyFamily::Bus { n }).unwrap().edge_count(), n - 1);
            assert_eq!(generate(TopologyFamily::Star { n }).unwrap().edge_count(), n - 1);
            assert_eq!(
                generate(TopologyFamily::Mesh { n }).unwrap().edge_count(),
                n * (n - 1) / 2
            );
            assert_eq!(generate(TopologyFamily::Empty { n }).unwrap().edge_count(), 0);
            if n >= 3 {
                assert_eq!(generate(TopologyFamily::Ring { n }).unwrap().edge_count(), n);
            }
        }
        assert!(generate(TopologyFamily::Ring { n: 2 }).is_err());
    }

    #[test]
    fn mesh_degrees() {
        let g = generate(TopologyFamily::Mesh { n: 5 }).unwrap();
        assert_eq!(g.edge_count(), 10);
        for v in 0..5 {
            assert_eq!(g.degree(v), 4);
        }
    }

    #[test]
    fn moore_motif_shape() {
        let g = generate(TopologyFamily::MooreMotif).unwrap();
        assert_eq!(g.node_count(), 9);
        assert_eq!(g.edge_count(), 20);
        let mut degrees: Vec<_> = (0..9).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, [3, 3, 3, 3, 5, 5, 5, 5, 8]);
    }

    #[test]
    fn erdos_renyi_is_seed_deterministic() {
        let fam = |seed| TopologyFamily::ErdosRenyi { n: 12, edge_probability: 0.4, seed };
        let a = generate(fam(7)).unwrap();
        let b = generate(fam(7)).unwrap();
        let c = generate(fam(8)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn erdos_renyi_rejects_bad_probability() {
        for p in [0.0, 1.0, -0.5, 1.5] {
            assert!(generate(TopologyFamily::ErdosRenyi { n: 5, edge_probability: p, seed: 1 })
                .is_err());
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let mesh3 = generate(TopologyFamily::Mesh { n: 3 }).unwrap();
        assert_eq!(write_edge_list(&mesh3), "3 3\n0 1\n0 2\n1 2\n");
        let back = parse_edge_list(&write_edge_list(&mesh3)).unwrap();
        assert_eq!(back, mesh3);
    }

    #[test]
    fn edge_list_accepts_comments_and_rejects_garbage() {
        let g = parse_edge_list("# a comment\n3 1\n\n0 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 2)]);
        assert!(matches!(parse_edge_list(""), Err(Error::MalformedHeader(_))));
        assert!(matches!(parse_edge_list("3\n"), Err(Error::MalformedHeader(_))));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::MalformedEdge { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1 2\n"), Err(Error::MalformedEdge { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1\n1 2\n"), Err(Error::MalformedEdge { .. })));
        assert!(matches!(
            parse_edge_list("3 1\n0 5\n"),
            Err(Error::EndpointOutOfRange { endpoint: 5, nodes: 3 })
        ));
    }

    #[test]
    fn dot_output() {
        let empty2 = generate(TopologyFamily::Empty { n: 2 }).unwrap();
        assert_eq!(write_dot(&empty2), "graph g {\n  0;\n  1;\n}\n");
        let p3 = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        let doc = write_dot(&p3);
        assert_eq!(doc.matches(" -- ").count(), 2);
        assert!(doc.contains("  0 -- 1;\n") && doc.contains("  1 -- 2;\n"));
        let mesh3 = generate(TopologyFamily::Mesh { n: 3 }).unwrap();
        assert_eq!(write_dot(&mesh3).matches(" -- ").count(), 3);
    }
}
