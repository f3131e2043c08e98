//! Command-line front end: subcommands wiring the parsers, the normality
//! decision, the witness machinery, and the oracle together, with text and
//! JSON output. All output is deterministic for fixed input and flags.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::altpath::{cycles_alternating_connected, generalized_alternating_connected, AltWalk};
use crate::augment::{augment, render_augmented};
use crate::cycles::{enumerate_cycles, CycleDesc, DEFAULT_CYCLE_CAP};
use crate::error::{Error, Result};
use crate::model::{
    parse_graph, parse_graph_json, parse_monomials, random_graph, render_monomial, MixedGraph,
    VertexId,
};
use crate::normality::{
    generalized_odd_cycle_condition, non_normality_witness, NormalityReport, WitnessEvidence,
};
use crate::oracle::{default_coeff_cap, oracle_normality, verify_generation, OracleVerdict};

#[derive(Parser, Debug)]
#[command(
    name = "edgering",
    about = "Normality of quadratic-monomial subrings via mixed signed graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct InputOpts {
    /// Input file (graph text or JSON, autodetected); stdin when omitted
    pub file: Option<PathBuf>,

    /// Treat the input as a monomial list instead of a graph
    #[arg(long)]
    pub monomials: bool,

    /// Generate a random input graph from this seed instead of reading input
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide normality; prints NORMAL or NOT NORMAL plus generators
    Decide {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cycle_cap: usize,
    },
    /// Print the normalization generator monomials, one per line
    Normalize {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cycle_cap: usize,
    },
    /// Print the non-normality witness monomial and its three certificates
    Witness {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cycle_cap: usize,
    },
    /// Enumerate simple cycles, one per line
    Cycles {
        #[command(flatten)]
        input: InputOpts,
        /// Only cycles with an odd number of signed edges
        #[arg(long)]
        odd_only: bool,
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cycle_cap: usize,
    },
    /// Search for an alternating connection between two cycles
    Connect {
        #[command(flatten)]
        input: InputOpts,
        /// First cycle as a comma-separated vertex list, e.g. 1,2,3
        #[arg(long)]
        cycle1: String,
        /// Second cycle as a comma-separated vertex list
        #[arg(long)]
        cycle2: String,
    },
    /// Print the augmented signed graph
    Augment {
        #[command(flatten)]
        input: InputOpts,
    },
    /// Run the exact semigroup oracle's windowed normality check
    Oracle {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, default_value_t = crate::oracle::DEFAULT_DEGREE_BOUND)]
        degree_bound: u32,
        /// Total-weight cap for semigroup searches; defaults per graph size
        #[arg(long)]
        coeff_cap: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check decide against the oracle; prints AGREE or DISAGREE
    Verify {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cycle_cap: usize,
        #[arg(long, default_value_t = crate::oracle::DEFAULT_DEGREE_BOUND)]
        degree_bound: u32,
        #[arg(long)]
        coeff_cap: Option<u32>,
    },
}

/// The `decide --json` payload: the decision report plus the certificates
/// for the first exceptional pair, when one exists.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DecideReport {
    pub report: NormalityReport,
    pub witness: Option<WitnessEvidence>,
}

fn load_graph(input: &InputOpts) -> Result<MixedGraph> {
    if let Some(seed) = input.seed {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        return Ok(random_graph(&mut rng, 8, 12, true));
    }
    let text = match &input.file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::parse(0, format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)
                .map_err(|e| Error::parse(0, format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    if input.monomials {
        parse_monomials(&text)
    } else if text.trim_start().starts_with('{') {
        parse_graph_json(&text)
    } else {
        parse_graph(&text)
    }
}

fn parse_vertex_list(g: &MixedGraph, text: &str) -> Result<CycleDesc> {
    let mut vs = Vec::new();
    for part in text.split(',') {
        let raw: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, format!("bad vertex '{}' in cycle list", part.trim())))?;
        if raw == 0 || raw > g.vertex_count() {
            return Err(Error::parse(0, format!("vertex {raw} out of range")));
        }
        vs.push(VertexId(raw - 1));
    }
    CycleDesc::from_vertex_list(g, &vs)
}

fn render_walk(g: &MixedGraph, w: &AltWalk) -> String {
    let labels: Vec<String> = w.edges.iter().map(|&e| g.edge_label(e)).collect();
    format!(
        "walk from {} to {}: {}",
        w.vertices[0],
        w.vertices.last().unwrap(),
        labels.join(" ")
    )
}

fn generators_line(report: &NormalityReport) -> String {
    let gens: Vec<String> = report.generators.iter().map(render_monomial).collect();
    format!("generators: {}", gens.join(", "))
}

fn cmd_decide(input: &InputOpts, json: bool, cycle_cap: usize) -> Result<String> {
    let g = load_graph(input)?;
    let report = generalized_odd_cycle_condition(&g, cycle_cap)?;
    if json {
        let witness = non_normality_witness(&g, cycle_cap)?;
        let payload = DecideReport { report, witness };
        return Ok(format!("{}\n", serde_json::to_string(&payload).expect("serializable")));
    }
    if report.normal {
        Ok("NORMAL\n".into())
    } else {
        Ok(format!("NOT NORMAL\n{}\n", generators_line(&report)))
    }
}

fn cmd_normalize(input: &InputOpts, cycle_cap: usize) -> Result<String> {
    let g = load_graph(input)?;
    let report = generalized_odd_cycle_condition(&g, cycle_cap)?;
    let mut out = String::new();
    for m in &report.generators {
        out.push_str(&render_monomial(m));
        out.push('\n');
    }
    Ok(out)
}

fn weight_list<T: std::fmt::Display>(
    g: &MixedGraph,
    items: impl IntoIterator<Item = (crate::model::EdgeRef, T)>,
) -> String {
    items
        .into_iter()
        .map(|(e, w)| format!("{}={}", g.edge_label(e), w))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_witness(input: &InputOpts, json: bool, cycle_cap: usize) -> Result<String> {
    let g = load_graph(input)?;
    let witness = non_normality_witness(&g, cycle_cap)?;
    if json {
        return Ok(format!("{}\n", serde_json::to_string(&witness).expect("serializable")));
    }
    let Some(w) = witness else {
        return Ok("NORMAL\n".into());
    };
    let half: Vec<String> = w.half_weight_edges.iter().map(|&e| g.edge_label(e)).collect();
    Ok(format!(
        "NOT NORMAL\nwitness: {}\nhalf-weight edges: {}\nlattice weights: {}\ndoubled weights: {}\n",
        render_monomial(&w.m_pi),
        half.join(" "),
        weight_list(&g, w.lattice_weights.iter().copied()),
        weight_list(&g, w.doubled_weights.iter().copied()),
    ))
}

fn cmd_cycles(input: &InputOpts, odd_only: bool, cycle_cap: usize) -> Result<String> {
    let g = load_graph(input)?;
    let mut out = String::new();
    for c in enumerate_cycles(&g, cycle_cap)? {
        if odd_only && !c.is_odd() {
            continue;
        }
        let vs: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
        let es: Vec<String> = c.edges.iter().map(|&e| g.edge_label(e)).collect();
        out.push_str(&format!("[{}] {}\n", vs.join(" "), es.join(" ")));
    }
    Ok(out)
}

fn cmd_connect(input: &InputOpts, cycle1: &str, cycle2: &str) -> Result<String> {
    let g = load_graph(input)?;
    let c1 = parse_vertex_list(&g, cycle1)?;
    let c2 = parse_vertex_list(&g, cycle2)?;
    let walk = if g.is_signed() {
        cycles_alternating_connected(&g, &c1, &c2)?
    } else {
        generalized_alternating_connected(&g, &c1, &c2, &augment(&g))?
    };
    match walk {
        Some(w) => Ok(format!("{}\n", render_walk(&g, &w))),
        None => Ok("NONE\n".into()),
    }
}

fn cmd_augment(input: &InputOpts) -> Result<String> {
    let g = load_graph(input)?;
    Ok(render_augmented(&augment(&g)))
}

fn cmd_oracle(
    input: &InputOpts,
    degree_bound: u32,
    coeff_cap: Option<u32>,
    json: bool,
) -> Result<String> {
    let g = load_graph(input)?;
    let cap = coeff_cap.unwrap_or_else(|| default_coeff_cap(&g, degree_bound));
    let verdict = oracle_normality(&g, degree_bound, cap)?;
    if json {
        return Ok(format!("{}\n", serde_json::to_string(&verdict).expect("serializable")));
    }
    match verdict {
        OracleVerdict::NormalUpToBounds { degree_bound, coeff_cap } => Ok(format!(
            "normal-up-to-bounds (degree bound {degree_bound}, coeff cap {coeff_cap})\n"
        )),
        OracleVerdict::NotNormal { witness, multiple_in_t2 } => {
            let mult = match multiple_in_t2 {
                Some(k) => format!("{k}*witness in T2 within cap"),
                None => "no multiple found in T2 within cap".into(),
            };
            Ok(format!("not-normal witness {} ({mult})\n", render_monomial(&witness)))
        }
    }
}

fn cmd_verify(
    input: &InputOpts,
    cycle_cap: usize,
    degree_bound: u32,
    coeff_cap: Option<u32>,
) -> Result<(String, i32)> {
    let g = load_graph(input)?;
    let cap = coeff_cap.unwrap_or_else(|| default_coeff_cap(&g, degree_bound));
    let report = generalized_odd_cycle_condition(&g, cycle_cap)?;
    let verdict = oracle_normality(&g, degree_bound, cap)?;
    let mut out = String::new();
    out.push_str(&format!(
        "decide: {}\n",
        if report.normal { "NORMAL" } else { "NOT NORMAL" }
    ));
    out.push_str(&format!(
        "oracle: {}\n",
        if verdict.is_normal() { "normal-up-to-bounds" } else { "not-normal" }
    ));
    let mut agree = report.normal == verdict.is_normal();
    if !report.normal {
        let gen = verify_generation(&g, &report.generators, degree_bound, cap)?;
        out.push_str(&format!(
            "generation: {}\n",
            if gen.is_ok() { "ok" } else { "incomplete" }
        ));
        agree = agree && gen.is_ok();
    }
    if agree {
        out.push_str("AGREE\n");
        Ok((out, 0))
    } else {
        out.push_str("DISAGREE\n");
        Ok((out, 1))
    }
}

/// Execute a parsed command line, writing results to `out`. Returns the
/// process exit code: 0 success, 1 failed check (verify DISAGREE), 2 on
/// usage, parse, or capacity errors.
pub fn run(cli: Cli, out: &mut dyn Write) -> i32 {
    let result: Result<(String, i32)> = match &cli.command {
        Command::Decide { input, json, cycle_cap } => {
            cmd_decide(input, *json, *cycle_cap).map(|s| (s, 0))
        }
        Command::Normalize { input, cycle_cap } => {
            cmd_normalize(input, *cycle_cap).map(|s| (s, 0))
        }
        Command::Witness { input, json, cycle_cap } => {
            cmd_witness(input, *json, *cycle_cap).map(|s| (s, 0))
        }
        Command::Cycles { input, odd_only, cycle_cap } => {
            cmd_cycles(input, *odd_only, *cycle_cap).map(|s| (s, 0))
        }
        Command::Connect { input, cycle1, cycle2 } => {
            cmd_connect(input, cycle1, cycle2).map(|s| (s, 0))
        }
        Command::Augment { input } => cmd_augment(input).map(|s| (s, 0)),
        Command::Oracle { input, degree_bound, coeff_cap, json } => {
            cmd_oracle(input, *degree_bound, *coeff_cap, *json).map(|s| (s, 0))
        }
        Command::Verify { input, cycle_cap, degree_bound, coeff_cap } => {
            cmd_verify(input, *cycle_cap, *degree_bound, *coeff_cap)
        }
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
