//! Graph-space sweeps and their aggregation: enumerate or sample graphs of
//! a given order, compute (C_F, average path length, clustering) per graph,
//! dedup by isomorphism class when asked, and persist records as CSV for
//! the correlation stage.
//!
//! Sweeps parallelize over graphs; every reduction is order-independent
//! (sums, minima) or followed by a deterministic sort, so output bytes do
//! not depend on thread count.

use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::sync::OnceLock;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complexity::functional_complexity;
use crate::error::{Error, Result};
use crate::graph::{build_graph, erdos_renyi_draw, Graph, MAX_NODES};
use crate::metrics::{average_clustering, average_path_length, is_connected};
use crate::numfmt::format_sig;
use crate::stats::{multiple_correlation, pearson};

/// Largest order the minimum-over-permutations canonical form accepts.
pub const CANONICAL_MAX_NODES: usize = 8;
/// Largest order the exhaustive labeled enumeration accepts.
pub const LABELED_ENUM_MAX_NODES: usize = 7;
/// Consecutive disconnected draws after which sampling gives up.
pub const REJECTION_LIMIT: u64 = 1_000_000;

/// How a sweep visits graph space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Every connected labeled graph, one record each.
    Labeled,
    /// One record per isomorphism class, with the labeled count as
    /// multiplicity.
    Canonical,
    /// Seeded Erdős–Rényi draws rejection-filtered to connectivity.
    Sampled,
}

impl SweepMode {
    pub fn label(self) -> &'static str {
        match self {
            SweepMode::Labeled => "labeled",
            SweepMode::Canonical => "canonical",
            SweepMode::Sampled => "sampled",
        }
    }
}

/// Parameters for `SweepMode::Sampled`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleParams {
    pub count: usize,
    pub edge_probability: f64,
    pub seed: u64,
}

/// One sweep row: a graph (or class) identity plus its metrics.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    /// Canonical adjacency bit string when the order permits it, the raw
    /// one otherwise; see `canonical_form`.
    pub graph_key: String,
    pub node_count: usize,
    pub edge_count: usize,
    /// Number of labeled graphs sharing the key; 1 outside canonical mode.
    pub multiplicity: u64,
    pub complexity: f64,
    pub avg_path_length: f64,
    pub avg_clustering: f64,
}

/// Correlations between complexity and the classical metrics over one
/// sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationSummary {
    pub n: usize,
    /// Number of records the statistics were computed from.
    pub sample_count: usize,
    pub pearson_apl_cf: f64,
    pub pearson_cc_cf: f64,
    pub pearson_apl_cc: f64,
    pub multiple_r: f64,
    pub mode: SweepMode,
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut ps = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            ps.push((u, v));
        }
    }
    ps
}

fn graph_from_pair_mask(n: usize, mask: u64, pairs: &[(usize, usize)]) -> Graph {
    let edges: Vec<(usize, usize)> =
        pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
    build_graph(n, &edges).expect("pair mask within bounds")
}

fn pair_mask_of(g: &Graph, pairs: &[(usize, usize)]) -> u64 {
    let mut mask = 0u64;
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if g.has_edge(u, v) {
            mask |= 1 << k;
        }
    }
    mask
}

/// Every connected labeled graph on `n` vertices, exactly once, in
/// ascending edge-mask order.
pub fn enumerate_labeled_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(2..=LABELED_ENUM_MAX_NODES).contains(&n) {
        return Err(Error::LabeledEnumGuard(n));
    }
    let pairs = vertex_pairs(n);
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let g = graph_from_pair_mask(n, mask, &pairs);
        is_connected(&g).then_some(g)
    }))
}

/// For permutation index `s` and pair index `k`, `tables[s][k]` is the pair
/// index the relabeled edge lands on.
fn perm_tables(n: usize) -> &'static [Vec<u8>] {
    const INIT: OnceLock<Vec<Vec<u8>>> = OnceLock::new();
    static TABLES: [OnceLock<Vec<Vec<u8>>>; CANONICAL_MAX_NODES + 1] =
        [INIT; CANONICAL_MAX_NODES + 1];
    TABLES[n].get_or_init(|| {
        let pairs = vertex_pairs(n);
        let index: HashMap<(usize, usize), u8> =
            pairs.iter().enumerate().map(|(k, &p)| (p, k as u8)).collect();
        (0..n)
            .permutations(n)
            .map(|sigma| {
                pairs
                    .iter()
                    .map(|&(u, v)| {
                        let (a, b) = (sigma[u].min(sigma[v]), sigma[u].max(sigma[v]));
                        index[&(a, b)]
                    })
                    .collect()
            })
            .collect()
    })
}

/// Packs pair `k` of `mask` at string position `tables[s][k]`, minimized
/// over permutations. Bit (P-1-position) holds position, so integer order
/// equals string order.
fn canonical_packed(mask: u64, n: usize) -> u64 {
    let p = n * (n - 1) / 2;
    let mut best = u64::MAX;
    for table in perm_tables(n) {
        let mut acc = 0u64;
        let mut bits = mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            acc |= 1 << (p - 1 - table[k] as usize);
        }
        if acc < best {
            best = acc;
        }
    }
    best
}

fn render_packed(packed: u64, p: usize) -> String {
    (0..p).map(|k| if packed >> (p - 1 - k) & 1 == 1 { '1' } else { '0' }).collect()
}

fn raw_key(g: &Graph) -> String {
    let pairs = vertex_pairs(g.node_count());
    let mask = pair_mask_of(g, &pairs);
    (0..pairs.len()).map(|k| if mask >> k & 1 == 1 { '1' } else { '0' }).collect()
}

/// Lexicographically minimal adjacency bit string over all vertex
/// relabelings: equal keys iff isomorphic. Character `k` is the presence of
/// the `k`-th vertex pair in lexicographic pair order.
pub fn canonical_form(g: &Graph) -> Result<String> {
    let n = g.node_count();
    if n > CANONICAL_MAX_NODES {
        return Err(Error::CanonicalGuard(n));
    }
    if n < 2 {
        return Ok(String::new());
    }
    let pairs = vertex_pairs(n);
    let mask = pair_mask_of(g, &pairs);
    Ok(render_packed(canonical_packed(mask, n), pairs.len()))
}

/// `count` connected graphs drawn from the seeded Erdős–Rényi model,
/// deterministic in all parameters. Yields an error item if the rejection
/// limit is hit.
pub fn sample_connected_graphs(
    n: usize,
    count: usize,
    edge_probability: f64,
    seed: u64,
) -> Result<impl Iterator<Item = Result<Graph>>> {
    if n > MAX_NODES {
        return Err(Error::CapExceeded(n));
    }
    if n < 2 {
        return Err(Error::InvalidTopology(format!("random graphs need at least 2 nodes, got {n}")));
    }
    if !(edge_probability > 0.0 && edge_probability < 1.0) {
        return Err(Error::InvalidTopology(format!(
            "edge probability must lie strictly between 0 and 1, got {edge_probability}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut produced = 0usize;
    let mut exhausted = false;
    Ok(std::iter::from_fn(move || {
        if exhausted || produced == count {
            return None;
        }
        let mut rejections = 0u64;
        loop {
            let g = erdos_renyi_draw(n, edge_probability, &mut rng);
            if is_connected(&g) {
                produced += 1;
                return Some(Ok(g));
            }
            rejections += 1;
            if rejections >= REJECTION_LIMIT {
                exhausted = true;
                return Some(Err(Error::RejectionLimit(rejections)));
            }
        }
    }))
}

fn record_for(g: &Graph, graph_key: String, multiplicity: u64) -> SweepRecord {
    let report = functional_complexity(g);
    SweepRecord {
        graph_key,
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        multiplicity,
        complexity: report.complexity,
        avg_path_length: average_path_length(g).expect("sweep graphs are connected"),
        avg_clustering: average_clustering(g),
    }
}

/// Runs one sweep and returns its records sorted by graph key.
pub fn run_sweep(n: usize, mode: SweepMode, params: Option<&SampleParams>) -> Result<Vec<SweepRecord>> {
    match mode {
        SweepMode::Labeled => run_labeled(n),
        SweepMode::Canonical => run_canonical(n),
        SweepMode::Sampled => run_sampled(n, params.ok_or(Error::MissingSampleParams)?),
    }
}

fn connected_pair_masks(n: usize) -> Result<Vec<u64>> {
    if !(2..=LABELED_ENUM_MAX_NODES).contains(&n) {
        return Err(Error::LabeledEnumGuard(n));
    }
    let pairs = vertex_pairs(n);
    let total = 1u64 << pairs.len();
    let mut masks: Vec<u64> = (0..total)
        .into_par_iter()
        .filter(|&mask| is_connected(&graph_from_pair_mask(n, mask, &pairs)))
        .collect();
    masks.sort_unstable();
    Ok(masks)
}

fn run_labeled(n: usize) -> Result<Vec<SweepRecord>> {
    let pairs = vertex_pairs(n);
    let masks = connected_pair_masks(n)?;
    let mut keyed: Vec<(u64, u64)> = masks
        .into_par_iter()
        .map(|mask| (canonical_packed(mask, n), mask))
        .collect();
    keyed.sort_unstable();
    let p = pairs.len();
    Ok(keyed
        .into_par_iter()
        .map(|(packed, mask)| {
            let g = graph_from_pair_mask(n, mask, &pairs);
            record_for(&g, render_packed(packed, p), 1)
        })
        .collect())
}

fn run_canonical(n: usize) -> Result<Vec<SweepRecord>> {
    let pairs = vertex_pairs(n);
    let masks = connected_pair_masks(n)?;
    // Per-class labeled count plus the smallest labeled mask as the
    // representative; both merge order-independently.
    let classes: HashMap<u64, (u64, u64)> = masks
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<u64, (u64, u64)>, mask| {
            let entry = acc.entry(canonical_packed(mask, n)).or_insert((0, u64::MAX));
            entry.0 += 1;
            entry.1 = entry.1.min(mask);
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (key, (count, mask)) in b {
                let entry = a.entry(key).or_insert((0, u64::MAX));
                entry.0 += count;
                entry.1 = entry.1.min(mask);
            }
            a
        });
    let mut ordered: Vec<(u64, (u64, u64))> = classes.into_iter().collect();
    ordered.sort_unstable();
    let p = pairs.len();
    Ok(ordered
        .into_par_iter()
        .map(|(packed, (multiplicity, mask))| {
            let g = graph_from_pair_mask(n, mask, &pairs);
            record_for(&g, render_packed(packed, p), multiplicity)
        })
        .collect())
}

fn run_sampled(n: usize, params: &SampleParams) -> Result<Vec<SweepRecord>> {
    let graphs: Vec<Graph> =
        sample_connected_graphs(n, params.count, params.edge_probability, params.seed)?
            .collect::<Result<_>>()?;
    let mut records: Vec<SweepRecord> = graphs
        .into_par_iter()
        .map(|g| {
            let key = if g.node_count() <= CANONICAL_MAX_NODES {
                canonical_form(&g).expect("order within canonical cap")
            } else {
                raw_key(&g)
            };
            record_for(&g, key, 1)
        })
        .collect();
    records.sort_by(|a, b| a.graph_key.cmp(&b.graph_key));
    Ok(records)
}

/// Correlation summary of one sweep's records; callers group records by
/// `n` first (as read back from CSV, a file may hold several sweeps).
pub fn summarize_records(records: &[SweepRecord], mode: SweepMode) -> Result<CorrelationSummary> {
    let first = records.first().ok_or(Error::DegenerateVariance { min: 2 })?;
    let apl: Vec<f64> = records.iter().map(|r| r.avg_path_length).collect();
    let cc: Vec<f64> = records.iter().map(|r| r.avg_clustering).collect();
    let cf: Vec<f64> = records.iter().map(|r| r.complexity).collect();
    Ok(CorrelationSummary {
        n: first.node_count,
        sample_count: records.len(),
        pearson_apl_cf: pearson(&apl, &cf)?,
        pearson_cc_cf: pearson(&cc, &cf)?,
        pearson_apl_cc: pearson(&apl, &cc)?,
        multiple_r: multiple_correlation(&cf, &apl, &cc)?,
        mode,
    })
}

/// One summary per requested order, same mode and sampling parameters for
/// each.
pub fn correlation_vs_size(
    ns: impl IntoIterator<Item = usize>,
    mode: SweepMode,
    params: Option<&SampleParams>,
) -> Result<Vec<CorrelationSummary>> {
    ns.into_iter()
        .map(|n| summarize_records(&run_sweep(n, mode, params)?, mode))
        .collect()
}

pub const SWEEP_CSV_HEADER: &str =
    "graph_key,n,edges,multiplicity,complexity,avg_path_length,avg_clustering";

/// Writes records in the persisted CSV layout, reals at 12 significant
/// digits.
pub fn write_records<W: Write>(out: &mut W, records: &[SweepRecord]) -> Result<()> {
    writeln!(out, "{SWEEP_CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.graph_key,
            r.node_count,
            r.edge_count,
            r.multiplicity,
            format_sig(r.complexity),
            format_sig(r.avg_path_length),
            format_sig(r.avg_clustering),
        )?;
    }
    Ok(())
}

/// Reads records written by `write_records`, validating layout and value
/// domains.
pub fn read_records<R: BufRead>(input: R) -> Result<Vec<SweepRecord>> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .transpose()?
        .ok_or_else(|| Error::CsvParse { line: 1, msg: "empty file".to_string() })?;
    if header.trim_end() != SWEEP_CSV_HEADER {
        return Err(Error::CsvParse {
            line: 1,
            msg: format!("expected header `{SWEEP_CSV_HEADER}`, got `{header}`"),
        });
    }
    let mut records = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line = line?;
        let lineno = idx + 2;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 7 {
            return Err(Error::CsvParse {
                line: lineno,
                msg: format!("expected 7 fields, got {}", fields.len()),
            });
        }
        let parse_err = |what: &str, value: &str| Error::CsvParse {
            line: lineno,
            msg: format!("invalid {what} `{value}`"),
        };
        let graph_key = fields[0].to_string();
        if graph_key.is_empty() || !graph_key.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(parse_err("graph_key", fields[0]));
        }
        let node_count: usize =
            fields[1].parse().map_err(|_| parse_err("node count", fields[1]))?;
        let edge_count: usize =
            fields[2].parse().map_err(|_| parse_err("edge count", fields[2]))?;
        let multiplicity: u64 =
            fields[3].parse().map_err(|_| parse_err("multiplicity", fields[3]))?;
        let complexity: f64 =
            fields[4].parse().map_err(|_| parse_err("complexity", fields[4]))?;
        let avg_path_length: f64 =
            fields[5].parse().map_err(|_| parse_err("avg_path_length", fields[5]))?;
        let avg_clustering: f64 =
            fields[6].parse().map_err(|_| parse_err("avg_clustering", fields[6]))?;
        if multiplicity < 1 {
            return Err(parse_err("multiplicity", fields[3]));
        }
        if !complexity.is_finite() || complexity < 0.0 {
            return Err(parse_err("complexity", fields[4]));
        }
        if !avg_path_length.is_finite() || avg_path_length < 1.0 {
            return Err(parse_err("avg_path_length", fields[5]));
        }
        if !(0.0..=1.0).contains(&avg_clustering) {
            return Err(parse_err("avg_clustering", fields[6]));
        }
        records.push(SweepRecord {
            graph_key,
            node_count,
            edge_count,
            multiplicity,
            complexity,
            avg_path_length,
            avg_clustering,
        });
    }
    Ok(records)
}
