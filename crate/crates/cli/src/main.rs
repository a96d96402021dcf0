mod exit;
mod homology;
mod input;
mod survey;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use chromhom_core::worked_examples::{run_worked_examples, Mutation};
use chromhom_core::{
    build_restricted_complex, certify_nonplanar, check_certificate, CertificateDocument, Error, Graph,
    NormalizationReport,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::exit::{CmdResult, Failure, NEGATIVE};
use crate::homology::{shape_report, ShapeReport};
use crate::input::{read_graph, read_text, shapes_for, InputFormat};

#[derive(Parser)]
#[command(name = "chromhom", version, about = "Chromatic symmetric homology in q-degree zero")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integral H1 of the complex restricted to two-column shapes.
    Homology(HomologyArgs),
    /// Produce a Z/2 torsion certificate for a non-planar graph.
    Certify(CertifyArgs),
    /// Re-verify a certificate against a graph from scratch.
    Check(CheckArgs),
    /// Planarity and torsion over a corpus or all small connected graphs.
    Survey(survey::SurveyArgs),
    /// Recompute the hand-worked K5 and K3,3 examples.
    #[command(name = "verify-examples", visible_alias = "verify-paper")]
    VerifyExamples(VerifyArgs),
}

#[derive(Args)]
pub struct GraphInput {
    /// Graph file (edge list or graph6); `-` reads stdin.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    input_format: InputFormat,
}

#[derive(Args)]
struct HomologyArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Use the shape (2^k, 1^(n-2k)); default k = 2.
    #[arg(long, conflicts_with = "all_shapes")]
    shape: Option<usize>,
    /// Sweep 2 <= k <= n/2.
    #[arg(long)]
    all_shapes: bool,
    #[arg(long, value_enum, default_value_t = TextOrJson::Json)]
    format: TextOrJson,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Json,
    Text,
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Write the certificate here instead of stdout.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Certificate JSON produced by `certify`.
    certificate: PathBuf,
    /// The graph the certificate claims to be about.
    #[arg(long, short)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    input_format: InputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Break a convention on purpose to show the checks can fail.
    #[arg(long, value_enum, hide = true)]
    mutation: Option<MutationArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MutationArg {
    D2Sign,
}

#[derive(Serialize)]
struct HomologyReport {
    graph: String,
    n: usize,
    m: usize,
    had_loop: bool,
    collapsed_multiedges: usize,
    /// `"zero"` when a loop forces the homology to vanish.
    verdict: &'static str,
    has_z2: bool,
    shapes: Vec<ShapeReport>,
}

fn cmd_homology(args: &HomologyArgs) -> CmdResult {
    let (g, report) = read_graph(&args.graph.input, args.graph.input_format)?;
    let shapes = shapes_for(g.n(), args.shape, args.all_shapes)?;
    let results = if report.had_loop {
        Vec::new()
    } else {
        shapes.iter().map(|s| shape_report(&g, s)).collect::<Result<Vec<_>, _>>()?
    };
    let out = HomologyReport {
        graph: g.id(),
        n: g.n(),
        m: g.m(),
        had_loop: report.had_loop,
        collapsed_multiedges: report.collapsed_multiedges,
        verdict: if report.had_loop { "zero" } else { "computed" },
        has_z2: results.iter().any(|r| r.has_z2),
        shapes: results,
    };
    match args.format {
        TextOrJson::Json => println!("{}", to_json(&out)?),
        TextOrJson::Text => {
            println!("graph {} (n = {}, m = {})", out.graph, out.n, out.m);
            if report.had_loop {
                println!("homology zero: the graph has a loop");
            }
            for r in &out.shapes {
                let [c2, c1, c0] = r.dims;
                println!("{}  dims ({c2}, {c1}, {c0})  H1 = {}  z2 = {}", r.shape, r.group(), r.has_z2);
            }
        }
    }
    Ok(0)
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map_err(Failure::internal)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, format!("{text}\n"))
            .with_context(|| format!("writing {}", p.display()))
            .map_err(Failure::internal),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn negative_verdict(g: &Graph, report: &NormalizationReport) -> Option<&'static str> {
    if report.had_loop {
        Some("homology zero: the graph has a loop")
    } else if chromhom_core::graph::is_planar(g) {
        Some("planar")
    } else {
        None
    }
}

fn cmd_certify(args: &CertifyArgs) -> CmdResult {
    let (g, report) = read_graph(&args.graph.input, args.graph.input_format)?;
    if let Some(verdict) = negative_verdict(&g, &report) {
        println!("{verdict}");
        return Ok(NEGATIVE);
    }
    let nc = match certify_nonplanar(&g) {
        Ok(nc) => nc,
        Err(Error::PlanarInput) => {
            println!("planar");
            return Ok(NEGATIVE);
        }
        Err(e) => return Err(Failure::internal(e)),
    };
    let verdict = check_certificate(&nc.certificate, &nc.complex).map_err(Failure::internal)?;
    if !verdict.is_valid() {
        return Err(Failure::internal(anyhow::anyhow!("certificate for {} failed its own check", g.id())));
    }
    let doc = CertificateDocument::from_nonplanar(&nc, verdict).map_err(Failure::internal)?;
    write_output(args.out.as_deref(), &doc.to_json())?;
    eprintln!(
        "certified {}: {:?} subdivision, shape {}, {} trace steps",
        g.id(),
        nc.witness.kind,
        doc.shape,
        nc.trace.steps.len()
    );
    Ok(0)
}

#[derive(Serialize)]
struct CheckReport {
    graph: String,
    shape: String,
    cycle: bool,
    doubled: bool,
    not_in_image: bool,
    valid: bool,
}

fn cmd_check(args: &CheckArgs) -> CmdResult {
    let text = read_text(&args.certificate)?;
    let doc = CertificateDocument::from_json(&text).map_err(Failure::input)?;
    let (g, _) = read_graph(&args.graph, args.input_format)?;
    // Only the graph supplied here and the stored chains are trusted.
    let complex = build_restricted_complex(&g, &doc.shape)?;
    let cert = doc.to_certificate(&complex)?;
    let verdict = check_certificate(&cert, &complex)?;
    let out = CheckReport {
        graph: g.id(),
        shape: doc.shape.to_string(),
        cycle: verdict.cycle,
        doubled: verdict.doubled,
        not_in_image: verdict.not_in_image,
        valid: verdict.is_valid(),
    };
    println!("{}", to_json(&out)?);
    Ok(if out.valid { 0 } else { NEGATIVE })
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let mutation = args.mutation.map(|MutationArg::D2Sign| Mutation::D2Sign);
    let outcomes = run_worked_examples(mutation);
    for o in &outcomes {
        println!("{o}");
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("{passed}/{} checks passed", outcomes.len());
    Ok(if passed == outcomes.len() { 0 } else { NEGATIVE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Homology(a) => cmd_homology(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Check(a) => cmd_check(a),
        Command::Survey(a) => survey::run(a),
        Command::VerifyExamples(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}
