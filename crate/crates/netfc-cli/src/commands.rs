//! Subcommand implementations: graph loading, computation, and output
//! routing. Anything written to a file goes through a buffered writer;
//! stdout output is assembled as a String first so partial documents never
//! appear on failure.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;

use netfc_core::{
    functional_complexity, generate, parse_edge_list, read_records, run_sweep, summarize_records,
    write_records, Graph, SampleParams, SweepMode, SweepRecord, TopologyFamily,
};

use crate::output;
use crate::{
    CliError, Command, ComplexityArgs, CorrelateArgs, CurveArgs, FamilyName, ModeName,
    SampleArgs, SourceArgs, SweepArgs, TopologiesArgs, TopologyName,
};

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Complexity(args) => cmd_complexity(args),
        Command::Curve(args) => cmd_curve(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Correlate(args) => cmd_correlate(args),
        Command::Topologies(args) => cmd_topologies(args),
        Command::Sample(args) => cmd_sample(args),
    }
}

fn load_graph(source: &SourceArgs) -> Result<Graph, CliError> {
    match (&source.graph, source.topology) {
        (Some(_), Some(_)) => {
            Err(CliError::usage("choose either --graph or --topology, not both"))
        }
        (None, None) => {
            Err(CliError::usage("a graph source is required: --graph PATH or --topology NAME"))
        }
        (Some(path), None) => {
            if source.nodes.is_some() {
                return Err(CliError::usage("--nodes applies only to --topology"));
            }
            let text = std::fs::read_to_string(path).map_err(netfc_core::Error::from)?;
            Ok(parse_edge_list(&text)?)
        }
        (None, Some(name)) => Ok(generate(family_for(name, source.nodes)?)?),
    }
}

fn family_for(name: TopologyName, nodes: Option<usize>) -> Result<TopologyFamily, CliError> {
    if let TopologyName::Moore = name {
        return if nodes.is_some() {
            Err(CliError::usage("the moore topology has a fixed 9 nodes; drop --nodes"))
        } else {
            Ok(TopologyFamily::MooreMotif)
        };
    }
    let n = nodes.ok_or_else(|| CliError::usage("--nodes is required for this topology"))?;
    Ok(match name {
        TopologyName::Bus => TopologyFamily::Bus { n },
        TopologyName::Ring => TopologyFamily::Ring { n },
        TopologyName::Star => TopologyFamily::Star { n },
        TopologyName::Mesh => TopologyFamily::Mesh { n },
        TopologyName::Empty => TopologyFamily::Empty { n },
        TopologyName::Moore => unreachable!("handled above"),
    })
}

fn cmd_complexity(args: ComplexityArgs) -> Result<(), CliError> {
    let g = load_graph(&args.source)?;
    let report = functional_complexity(&g);
    let rendered = match args.format {
        crate::ReportFormat::Text => output::report_text(&report, g.edge_count()),
        crate::ReportFormat::Csv => output::report_csv(&report, g.edge_count()),
    };
    print!("{rendered}");
    Ok(())
}

fn cmd_curve(args: CurveArgs) -> Result<(), CliError> {
    let g = load_graph(&args.source)?;
    let report = functional_complexity(&g);
    if report.max_scale <= 1 {
        return Err(CliError::Domain(format!(
            "curve undefined: diameter is {}, so no scale has a nonempty size range and the complexity is 0",
            report.max_scale
        )));
    }
    print!("{}", output::curve_csv(&report));
    Ok(())
}

fn sweep_mode(args: &SweepArgs) -> Result<(SweepMode, Option<SampleParams>), CliError> {
    match args.mode {
        ModeName::Sampled => {
            let count =
                args.count.ok_or_else(|| CliError::usage("--count is required for --mode sampled"))?;
            let edge_probability = args
                .edge_prob
                .ok_or_else(|| CliError::usage("--edge-prob is required for --mode sampled"))?;
            let seed =
                args.seed.ok_or_else(|| CliError::usage("--seed is required for --mode sampled"))?;
            Ok((SweepMode::Sampled, Some(SampleParams { count, edge_probability, seed })))
        }
        mode => {
            if args.count.is_some() || args.edge_prob.is_some() || args.seed.is_some() {
                return Err(CliError::usage(
                    "--count, --edge-prob, and --seed apply only to --mode sampled",
                ));
            }
            Ok((
                match mode {
                    ModeName::Labeled => SweepMode::Labeled,
                    ModeName::Canonical => SweepMode::Canonical,
                    ModeName::Sampled => unreachable!("handled above"),
                },
                None,
            ))
        }
    }
}

fn write_records_to(path: &Path, records: &[SweepRecord]) -> Result<(), CliError> {
    let file = File::create(path).map_err(netfc_core::Error::from)?;
    let mut out = BufWriter::new(file);
    write_records(&mut out, records)?;
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let (mode, params) = sweep_mode(&args)?;
    let records = run_sweep(args.nodes, mode, params.as_ref())?;
    write_records_to(&args.out, &records)
}

fn cmd_correlate(args: CorrelateArgs) -> Result<(), CliError> {
    let file = File::open(&args.input).map_err(netfc_core::Error::from)?;
    let records = read_records(BufReader::new(file))?;
    let mut by_n: BTreeMap<usize, Vec<SweepRecord>> = BTreeMap::new();
    for record in records {
        by_n.entry(record.node_count).or_default().push(record);
    }
    if by_n.is_empty() {
        return Err(CliError::Domain("no records to correlate".to_string()));
    }
    let mut blocks = Vec::new();
    for group in by_n.values() {
        // The CSV does not store the sweep mode; classes are recognizable
        // by their labeled-graph multiplicities.
        let mode = if group.iter().any(|r| r.multiplicity > 1) {
            SweepMode::Canonical
        } else {
            SweepMode::Labeled
        };
        let summary = summarize_records(group, mode)?;
        blocks.push(output::summary_text(&summary));
    }
    print!("{}", blocks.join("\n"));
    Ok(())
}

fn cmd_topologies(args: TopologiesArgs) -> Result<(), CliError> {
    if args.min > args.max {
        return Err(CliError::usage("--min must not exceed --max"));
    }
    let mut out = String::from("family,n,complexity\n");
    for &family in &args.families {
        for n in args.min..=args.max {
            let topology = match family {
                FamilyName::Bus => TopologyFamily::Bus { n },
                FamilyName::Ring => TopologyFamily::Ring { n },
                FamilyName::Star => TopologyFamily::Star { n },
                FamilyName::Mesh => TopologyFamily::Mesh { n },
                FamilyName::Empty => TopologyFamily::Empty { n },
            };
            let report = functional_complexity(&generate(topology)?);
            out.push_str(&output::topology_row(family_label(family), n, report.complexity));
        }
    }
    print!("{out}");
    Ok(())
}

fn family_label(family: FamilyName) -> &'static str {
    match family {
        FamilyName::Bus => "bus",
        FamilyName::Ring => "ring",
        FamilyName::Star => "star",
        FamilyName::Mesh => "mesh",
        FamilyName::Empty => "empty",
    }
}

fn cmd_sample(args: SampleArgs) -> Result<(), CliError> {
    let params = SampleParams {
        count: args.count,
        edge_probability: args.edge_prob,
        seed: args.seed,
    };
    let records = run_sweep(args.nodes, SweepMode::Sampled, Some(&params))?;
    write_records_to(&args.out, &records)
}
