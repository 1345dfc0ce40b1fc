//! The functional-complexity pipeline: per-node reachability entropy,
//! per-subgraph information, size-averaged information against a linear
//! reference, and the multi-scale complexity value C_F.
//!
//! Reachability counts include the node itself, so a node that reaches the
//! whole subgraph has probability 1 and a complete subgraph carries zero
//! information. All sums use compensated accumulation and run in a fixed
//! order, so results are bit-identical across runs and thread counts.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{diameter, is_connected, reach_count};
use crate::subgraphs::{census, enumerate_connected_subgraphs, NodeSet, SubgraphCensus};

/// Kahan-compensated accumulator. Middle sizes of a 20-node mesh already
/// have ~1e5 subgraphs, where naive summation drifts past the 1e-9
/// tolerances the tests hold results to.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub(crate) fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub(crate) fn value(self) -> f64 {
        self.sum
    }
}

/// Per-size averaged information at one scale `r`, the linear reference it
/// is compared against, and the absolute deviations. The four vectors are
/// parallel, indexed by the entries of `sizes` (1+r ..= N).
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleCurve {
    pub scale: usize,
    pub sizes: Vec<usize>,
    pub average_information: Vec<f64>,
    pub linear_reference: Vec<f64>,
    pub deviation: Vec<f64>,
}

impl ScaleCurve {
    /// Sum of the absolute deviations, accumulated in size order.
    pub fn deviation_sum(&self) -> f64 {
        let mut acc = KahanSum::default();
        for d in &self.deviation {
            acc.add(*d);
        }
        acc.value()
    }
}

/// Full result of the complexity computation for one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityReport {
    /// C_F in bits; 0 when `max_scale` <= 1.
    pub complexity: f64,
    /// R, the graph diameter (largest component diameter when disconnected).
    pub max_scale: usize,
    /// One curve per scale r in 1..=R-1, ascending.
    pub curves: Vec<ScaleCurve>,
    pub census: SubgraphCensus,
    pub node_count: usize,
    /// Disconnected graphs are computed with R taken over components and
    /// absent subgraph sizes contributing zero; the flag lets front ends
    /// mark such reports.
    pub connected: bool,
}

/// Probability that a uniformly chosen member of a size-`size` subgraph is
/// within reach of the observed node, given that `reach` members (node
/// included) are.
pub fn interaction_probability(reach: usize, size: usize) -> Result<f64> {
    if size == 0 {
        return Err(Error::EmptySubset);
    }
    if reach > size {
        return Err(Error::ReachExceedsSize { reach, size });
    }
    Ok(reach as f64 / size as f64)
}

/// Binary Shannon entropy of a reachability probability, in bits.
pub fn node_entropy(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityRange(p));
    }
    fn term(q: f64) -> f64 {
        if q <= 0.0 {
            0.0
        } else {
            -q * q.log2()
        }
    }
    Ok(term(p) + term(1.0 - p))
}

/// Total information of the induced subgraph on `subset` at scale `r`: the
/// sum over member nodes of the entropy of their reach probability.
pub fn subgraph_information(g: &Graph, subset: NodeSet, r: usize) -> Result<f64> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let size = subset.size();
    let mut acc = KahanSum::default();
    for v in subset.iter() {
        let reach = reach_count(g, subset, v, r)?;
        acc.add(node_entropy(interaction_probability(reach, size)?)?);
    }
    Ok(acc.value())
}

/// Mean subgraph information over all connected induced subgraphs of size
/// `j` at scale `r`. Defined as 0 when no such subgraph exists, which can
/// only happen on disconnected graphs.
pub fn average_information(g: &Graph, j: usize, r: usize, census: &SubgraphCensus) -> Result<f64> {
    let n = g.node_count();
    if j < 1 || j > n {
        return Err(Error::SizeOutOfRange { size: j, max: n });
    }
    let beta = census.beta(j);
    if beta == 0 {
        return Ok(0.0);
    }
    let mut acc = KahanSum::default();
    for subset in enumerate_connected_subgraphs(g, j)? {
        acc.add(subgraph_information(g, subset, r)?);
    }
    Ok(acc.value() / beta as f64)
}

/// Averaged information per size at scale `r`, together with the linear
/// interpolation between 0 at size 1+r and the full-graph information at
/// size N, and the absolute deviation between the two.
pub fn single_scale_curve(g: &Graph, r: usize, census: &SubgraphCensus) -> Result<ScaleCurve> {
    let max_r = diameter(g).saturating_sub(1);
    if r < 1 || r > max_r {
        return Err(Error::ScaleOutOfRange { scale: r, max: max_r });
    }
    let n = g.node_count();
    let full_info = subgraph_information(g, NodeSet::new(g.full_mask()), r)?;
    let denom = (r + 1) as f64 - n as f64;
    let count = n - r;
    let mut sizes = Vec::with_capacity(count);
    let mut average = Vec::with_capacity(count);
    let mut reference = Vec::with_capacity(count);
    let mut deviation = Vec::with_capacity(count);
    for j in (1 + r)..=n {
        let avg = average_information(g, j, r, census)?;
        let lin = ((r + 1) as f64 - j as f64) / denom * full_info;
        sizes.push(j);
        average.push(avg);
        reference.push(lin);
        deviation.push((avg - lin).abs());
    }
    Ok(ScaleCurve { scale: r, sizes, average_information: average, linear_reference: reference, deviation })
}

/// Computes C_F and everything leading up to it. Scales run from 1 to R-1
/// where R is the diameter; graphs with R <= 1 have zero complexity and no
/// curves.
pub fn functional_complexity(g: &Graph) -> ComplexityReport {
    let census = census(g);
    let max_scale = diameter(g);
    let mut curves = Vec::new();
    let mut total = KahanSum::default();
    if max_scale >= 2 {
        for r in 1..max_scale {
            let curve = single_scale_curve(g, r, &census).expect("scale in 1..=R-1");
            for d in &curve.deviation {
                total.add(*d);
            }
            curves.push(curve);
        }
    }
    let complexity = if max_scale >= 2 { total.value() / (max_scale - 1) as f64 } else { 0.0 };
    ComplexityReport {
        complexity,
        max_scale,
        curves,
        census,
        node_count: g.node_count(),
        connected: is_connected(g),
    }
}
