//! Output document rendering. The structured-text report is a flat
//! `key value` format versioned by its leading line; CSV layouts are
//! frozen, with reals at 12 significant digits.

use netfc_core::{format_sig, ComplexityReport, CorrelationSummary};

/// Structured-text complexity report.
///
/// Layout: `format_version`, graph header fields, `complexity`, a `beta`
/// line with the per-size subgraph counts, then one
/// `curve <scale> <size> <average> <reference> <deviation>` line per point.
pub fn report_text(report: &ComplexityReport, edge_count: usize) -> String {
    let mut out = String::new();
    out.push_str("format_version 1\n");
    out.push_str(&format!("node_count {}\n", report.node_count));
    out.push_str(&format!("edge_count {edge_count}\n"));
    out.push_str(&format!("connected {}\n", report.connected));
    if !report.connected {
        out.push_str(
            "note disconnected graph: max_scale is the largest component diameter and sizes without connected subgraphs average zero\n",
        );
    }
    out.push_str(&format!("max_scale {}\n", report.max_scale));
    out.push_str(&format!("complexity {}\n", format_sig(report.complexity)));
    let beta: Vec<String> =
        report.census.counts_by_size().iter().map(|c| c.to_string()).collect();
    out.push_str(&format!("beta {}\n", beta.join(" ")));
    for curve in &report.curves {
        for k in 0..curve.sizes.len() {
            out.push_str(&format!(
                "curve {} {} {} {} {}\n",
                curve.scale,
                curve.sizes[k],
                format_sig(curve.average_information[k]),
                format_sig(curve.linear_reference[k]),
                format_sig(curve.deviation[k]),
            ));
        }
    }
    out
}

/// One-row CSV summary of a complexity report.
pub fn report_csv(report: &ComplexityReport, edge_count: usize) -> String {
    format!(
        "node_count,edge_count,connected,max_scale,complexity\n{},{},{},{},{}\n",
        report.node_count,
        edge_count,
        report.connected,
        report.max_scale,
        format_sig(report.complexity),
    )
}

/// CSV of every per-scale curve point, scales ascending then sizes
/// ascending.
pub fn curve_csv(report: &ComplexityReport) -> String {
    let mut out = String::from("scale,size,average_information,linear_reference,deviation\n");
    for curve in &report.curves {
        for k in 0..curve.sizes.len() {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                curve.scale,
                curve.sizes[k],
                format_sig(curve.average_information[k]),
                format_sig(curve.linear_reference[k]),
                format_sig(curve.deviation[k]),
            ));
        }
    }
    out
}

/// Structured-text correlation summary block.
pub fn summary_text(summary: &CorrelationSummary) -> String {
    format!(
        "n {}\nmode {}\nsample_count {}\npearson_apl_cf {}\npearson_cc_cf {}\npearson_apl_cc {}\nmultiple_r {}\n",
        summary.n,
        summary.mode.label(),
        summary.sample_count,
        format_sig(summary.pearson_apl_cf),
        format_sig(summary.pearson_cc_cf),
        format_sig(summary.pearson_apl_cc),
        format_sig(summary.multiple_r),
    )
}

/// One `topologies` CSV row.
pub fn topology_row(family: &str, n: usize, complexity: f64) -> String {
    format!("{family},{n},{}\n", format_sig(complexity))
}
