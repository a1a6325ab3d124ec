//! `graph-energy`: spectra, energy-like invariants, and verified analytic
//! bounds for graphs and their line/R/Q derived graphs.
//!
//! Exit codes: 0 success (and, for `verify`, a clean run); 1 when `verify`
//! or `bounds` finds a violated bound or route mismatch; 2 on usage or
//! input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_energy::closed_form::{
    line_l_spectrum, line_q_spectrum, qgraph_l_spectrum, qgraph_q_spectrum, rgraph_l_spectrum,
    rgraph_q_spectrum, BaseParams,
};
use graph_energy::energy::{ie, lel, ValueSource};
use graph_energy::family::FamilySpec;
use graph_energy::graph::{Graph, RegularityKind};
use graph_energy::io::{format_edge_list, read_edge_list};
use graph_energy::report::{csv_document, fmt_sig12, report_table, sweep_table, to_rounded_json};
use graph_energy::spectral::{
    eigenvalues, laplacian, signless_laplacian, Spectrum, SpectrumKind, DEFAULT_EIG_TOL,
};
use graph_energy::verify::{bound_report, sweep, sweep_graphs, SweepOutcome};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

const FAMILY_GRAMMAR: &str = "\
FAMILY SPECS:
  complete:N | complete:A..B          complete graphs K_N
  cycle:N | cycle:A..B                cycles C_N (N >= 3)
  petersen                            the Petersen graph
  complete_bipartite:A,B              K_{A,B}
  random_regular:n=N,r=R[,seed=S]     connected R-regular graph, configuration
                                      model (seed=A..B sweeps seeds)
  random_biregular:n1=A,n2=B,r1=R,r2=Q[,seed=S]
                                      connected (R,Q)-biregular bipartite graph
  Separate multiple specs with ';'. Ranges (A..B) and seed ranges expand to
  one graph each and are accepted only by `verify`. Omitted seeds use --seed.

EDGE-LIST FILES:
  '#' starts a comment; first non-blank line is the vertex count; every
  following line is one edge 'u v' with 0-based endpoints.";

#[derive(Parser)]
#[command(
    name = "graph-energy",
    version,
    about = "Spectra and verified LEL/IE bounds for line, R- and Q-graphs",
    after_long_help = FAMILY_GRAMMAR
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues of the Laplacian or signless Laplacian
    Spectrum(SpectrumArgs),
    /// LEL and IE, by direct eigensolve and by closed-form spectral maps
    Invariants(InvariantsArgs),
    /// Per-graph report of every applicable bound with slack and findings
    Bounds(BoundsArgs),
    /// Sweep graphs, check every bound and spectral map, aggregate results
    Verify(VerifyArgs),
    /// Emit a family graph as a canonical edge list
    Generate(GenerateArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// Edge-list file to read
    #[arg(long, value_name = "PATH", conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Family spec (see --help for the grammar)
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
    /// Seed used by random families when the spec omits one
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct OutputArgs {
    /// json, csv, or table
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write here instead of standard output
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Which derived graph to analyze
    #[arg(long, value_enum, default_value_t = Derived::Base)]
    derived: Derived,
    /// Which matrix to diagonalize
    #[arg(long, value_enum, default_value_t = Matrix::Laplacian)]
    matrix: Matrix,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Which derived graph to analyze
    #[arg(long, value_enum, default_value_t = Derived::Base)]
    derived: Derived,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Violation tolerance: slack below -TOL is a violation
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Violation tolerance: slack below -TOL is a violation
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family spec for the graph to generate
    #[arg(long, value_name = "SPEC", required = true)]
    family: String,
    /// Seed used by random families when the spec omits one
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Write here instead of standard output
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Derived {
    Base,
    Line,
    Rgraph,
    Qgraph,
}

impl Derived {
    fn name(self) -> &'static str {
        match self {
            Derived::Base => "base",
            Derived::Line => "line",
            Derived::Rgraph => "rgraph",
            Derived::Qgraph => "qgraph",
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Matrix {
    Laplacian,
    Signless,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Invariants(args) => cmd_invariants(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Generate(args) => cmd_generate(args),
    }
}

/// A graph plus the label reports refer to it by.
struct Loaded {
    label: String,
    graph: Graph,
}

fn parse_specs(family: &str, seed: u64) -> Result<Vec<FamilySpec>, String> {
    let mut specs = Vec::new();
    for piece in family.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let parsed =
            FamilySpec::parse_list(piece, seed).map_err(|e| format!("--family {piece:?}: {e}"))?;
        specs.extend(parsed);
    }
    if specs.is_empty() {
        return Err(format!("--family {family:?}: no family specs given"));
    }
    Ok(specs)
}

/// Resolves `--input`/`--family` to exactly one graph.
fn load_single(source: &SourceArgs) -> Result<Loaded, String> {
    match (&source.input, &source.family) {
        (Some(path), None) => {
            let graph = read_edge_list(path).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(Loaded { label: path.display().to_string(), graph })
        }
        (None, Some(family)) => {
            let specs = parse_specs(family, source.seed)?;
            let [spec] = specs.as_slice() else {
                return Err(format!(
                    "--family {family:?} expands to {} graphs; this command takes exactly \
                     one (ranges are for `verify`)",
                    specs.len()
                ));
            };
            let graph = spec.generate().map_err(|e| format!("{}: {e}", spec.label()))?;
            Ok(Loaded { label: spec.label(), graph })
        }
        (None, None) => Err("provide --input <PATH> or --family <SPEC>".to_string()),
        (Some(_), Some(_)) => unreachable!("clap rejects --input with --family"),
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), String> {
    let text = if text.ends_with('\n') { text.to_string() } else { format!("{text}\n") };
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn base_spectrum(g: &Graph, kind: SpectrumKind) -> Result<Spectrum, String> {
    let mtx = match kind {
        SpectrumKind::Laplacian => laplacian(g),
        SpectrumKind::SignlessLaplacian => signless_laplacian(g),
    };
    eigenvalues(&mtx, kind, DEFAULT_EIG_TOL).map_err(|e| e.to_string())
}

/// Enforces the regularity assumptions behind `--derived`, returning the
/// derived graph and the base parameters for the closed-form route.
fn derived_graph(g: &Graph, derived: Derived) -> Result<(Graph, Option<BaseParams>), String> {
    let class = g.classify();
    match derived {
        Derived::Base => Ok((g.clone(), None)),
        Derived::Rgraph | Derived::Qgraph => {
            match class.kind {
                RegularityKind::Regular { r } if r >= 2 => {}
                RegularityKind::Regular { r } => {
                    return Err(format!(
                        "--derived {}: the R-/Q-graph closed forms assume a regular base \
                         of degree r >= 2; this graph is regular of degree {r}",
                        derived.name()
                    ));
                }
                other => {
                    return Err(format!(
                        "--derived {}: the R-/Q-graph closed forms assume a regular base \
                         of degree r >= 2; this graph is {}",
                        derived.name(),
                        other.name()
                    ));
                }
            }
            let params = BaseParams::from_graph(g).map_err(|e| e.to_string())?;
            let derived_g = if derived == Derived::Rgraph { g.r_graph() } else { g.q_graph() };
            Ok((derived_g, Some(params)))
        }
        Derived::Line => {
            let params = BaseParams::semiregular_from_graph(g).map_err(|_| {
                format!(
                    "--derived line: the line-graph closed forms assume a semiregular \
                     (or regular bipartite) base; this graph is {}",
                    class.kind.name()
                )
            })?;
            if !class.connected {
                return Err(
                    "--derived line: the line-graph closed forms assume a connected base"
                        .to_string(),
                );
            }
            if g.size() < g.order() {
                return Err(format!(
                    "--derived line: the line-graph closed forms assume m >= n \
                     (no stars); this graph has n = {}, m = {}",
                    g.order(),
                    g.size()
                ));
            }
            let lg = g.line_graph().map_err(|e| e.to_string())?;
            Ok((lg, Some(params)))
        }
    }
}

/// Closed-form spectrum of the derived graph, from the base spectrum.
fn closed_spectrum(
    base: &Graph,
    params: &BaseParams,
    derived: Derived,
    kind: SpectrumKind,
) -> Result<Spectrum, String> {
    let sp = base_spectrum(base, kind)?;
    let mapped = match (derived, kind) {
        (Derived::Line, SpectrumKind::Laplacian) => line_l_spectrum(&sp, params),
        (Derived::Line, SpectrumKind::SignlessLaplacian) => line_q_spectrum(&sp, params),
        (Derived::Rgraph, SpectrumKind::Laplacian) => rgraph_l_spectrum(&sp, params),
        (Derived::Rgraph, SpectrumKind::SignlessLaplacian) => rgraph_q_spectrum(&sp, params),
        (Derived::Qgraph, SpectrumKind::Laplacian) => qgraph_l_spectrum(&sp, params),
        (Derived::Qgraph, SpectrumKind::SignlessLaplacian) => qgraph_q_spectrum(&sp, params),
        (Derived::Base, _) => unreachable!("base has no closed-form map"),
    };
    mapped.map_err(|e| e.to_string())
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<ExitCode, String> {
    let loaded = load_single(&args.source)?;
    let (target, _) = derived_graph(&loaded.graph, args.derived)?;
    let kind = match args.matrix {
        Matrix::Laplacian => SpectrumKind::Laplacian,
        Matrix::Signless => SpectrumKind::SignlessLaplacian,
    };
    let spectrum = base_spectrum(&target, kind)?;
    let text = match args.out.format {
        Format::Json => {
            let doc = json!({
                "graph": loaded.label,
                "derived": args.derived.name(),
                "matrix": kind.name(),
                "order": target.order(),
                "eigenvalues": spectrum.values(),
            });
            to_rounded_json(&doc).map_err(|e| e.to_string())?
        }
        Format::Csv => {
            let mut out = String::from("graph,derived,matrix,index,eigenvalue\n");
            for (i, v) in spectrum.values().iter().enumerate() {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    loaded.label,
                    args.derived.name(),
                    kind.name(),
                    i,
                    fmt_sig12(*v)
                ));
            }
            out
        }
        Format::Table => {
            let values: Vec<String> = spectrum.values().iter().map(|v| fmt_sig12(*v)).collect();
            format!(
                "graph {}  derived {}  {} spectrum ({} values)\n{}\n",
                loaded.label,
                args.derived.name(),
                kind.name(),
                spectrum.len(),
                values.join(" ")
            )
        }
    };
    emit(&args.out.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_invariants(args: InvariantsArgs) -> Result<ExitCode, String> {
    let loaded = load_single(&args.source)?;
    let (target, params) = derived_graph(&loaded.graph, args.derived)?;
    let mu_direct = base_spectrum(&target, SpectrumKind::Laplacian)?;
    let qs_direct = base_spectrum(&target, SpectrumKind::SignlessLaplacian)?;
    let lel_direct =
        lel(&mu_direct, ValueSource::DirectEigen).map_err(|e| e.to_string())?.value;
    let ie_direct = ie(&qs_direct, ValueSource::DirectEigen).map_err(|e| e.to_string())?.value;
    // For the base graph the spectrum is computed once; both columns carry it.
    let (lel_closed, ie_closed) = match &params {
        None => (lel_direct, ie_direct),
        Some(p) => {
            let mu = closed_spectrum(&loaded.graph, p, args.derived, SpectrumKind::Laplacian)?;
            let qs =
                closed_spectrum(&loaded.graph, p, args.derived, SpectrumKind::SignlessLaplacian)?;
            (
                lel(&mu, ValueSource::ClosedForm).map_err(|e| e.to_string())?.value,
                ie(&qs, ValueSource::ClosedForm).map_err(|e| e.to_string())?.value,
            )
        }
    };
    let text = match args.out.format {
        Format::Json => {
            let doc = json!({
                "graph": loaded.label,
                "derived": args.derived.name(),
                "invariants": [
                    { "kind": "lel", "direct": lel_direct, "closed": lel_closed },
                    { "kind": "ie", "direct": ie_direct, "closed": ie_closed },
                ],
            });
            to_rounded_json(&doc).map_err(|e| e.to_string())?
        }
        Format::Csv => {
            let mut out = String::from("graph,derived,invariant,source,value\n");
            for (kind, direct, closed) in
                [("lel", lel_direct, lel_closed), ("ie", ie_direct, ie_closed)]
            {
                out.push_str(&format!(
                    "{},{},{},direct,{}\n",
                    loaded.label,
                    args.derived.name(),
                    kind,
                    fmt_sig12(direct)
                ));
                out.push_str(&format!(
                    "{},{},{},closed,{}\n",
                    loaded.label,
                    args.derived.name(),
                    kind,
                    fmt_sig12(closed)
                ));
            }
            out
        }
        Format::Table => format!(
            "graph {}  derived {}\nLEL = {} (direct) / {} (closed form)\nIE  = {} (direct) / {} \
             (closed form)\n",
            loaded.label,
            args.derived.name(),
            fmt_sig12(lel_direct),
            fmt_sig12(lel_closed),
            fmt_sig12(ie_direct),
            fmt_sig12(ie_closed)
        ),
    };
    emit(&args.out.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(args: BoundsArgs) -> Result<ExitCode, String> {
    let loaded = load_single(&args.source)?;
    let report = bound_report(&loaded.graph, &loaded.label, args.tol).map_err(|e| e.to_string())?;
    let text = match args.out.format {
        Format::Json => to_rounded_json(&report).map_err(|e| e.to_string())?,
        Format::Csv => csv_document(std::slice::from_ref(&report)),
        Format::Table => report_table(&report),
    };
    emit(&args.out.output, &text)?;
    Ok(if report.violations() == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let outcome: SweepOutcome = match (&args.source.input, &args.source.family) {
        (Some(path), None) => {
            let graph = read_edge_list(path).map_err(|e| format!("{}: {e}", path.display()))?;
            sweep_graphs(&[(path.display().to_string(), graph)], args.tol)
                .map_err(|e| e.to_string())?
        }
        (None, Some(family)) => {
            let specs = parse_specs(family, args.source.seed)?;
            sweep(&specs, args.tol).map_err(|e| e.to_string())?
        }
        (None, None) => return Err("provide --input <PATH> or --family <SPEC>".to_string()),
        (Some(_), Some(_)) => unreachable!("clap rejects --input with --family"),
    };
    let text = match args.out.format {
        Format::Json => to_rounded_json(&outcome).map_err(|e| e.to_string())?,
        Format::Csv => csv_document(&outcome.reports),
        Format::Table => sweep_table(&outcome),
    };
    emit(&args.out.output, &text)?;
    if !outcome.summary.generation_failures.is_empty() {
        let lines: Vec<String> = outcome
            .summary
            .generation_failures
            .iter()
            .map(|f| format!("{}: {}", f.spec, f.message))
            .collect();
        return Err(format!("generation failed for {}", lines.join("; ")));
    }
    if outcome.summary.clean() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "verification failed: {} violation(s), {} route mismatch(es), {} map failure(s)",
            outcome.summary.violations,
            outcome.summary.consistency_failures,
            outcome.summary.map_failures
        );
        Ok(ExitCode::from(1))
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode, String> {
    let specs = parse_specs(&args.family, args.seed)?;
    let [spec] = specs.as_slice() else {
        return Err(format!(
            "--family {:?} expands to {} graphs; `generate` emits exactly one",
            args.family,
            specs.len()
        ));
    };
    let graph = spec.generate().map_err(|e| format!("{}: {e}", spec.label()))?;
    emit(&args.output, &format_edge_list(&graph))?;
    Ok(ExitCode::SUCCESS)
}
