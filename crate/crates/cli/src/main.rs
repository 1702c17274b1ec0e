//! Command-line front door: analyze single graphs, certify connectivity,
//! dump spectra, generate corpora, and run verification campaigns.
//!
//! Exit codes: 0 on success (including `not certified` verdicts), 1 when a
//! verification campaign finds a counterexample, 2 on bad flags or
//! unparsable input.

mod json;
mod output;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use json::Json;
use output::CertifyContext;
use specon::certify::{self, CertifyOptions};
use specon::corpus::{self, CorpusSource, ExhaustiveFilter};
use specon::graph::Graph;
use specon::graph6;
use specon::invariants;
use specon::spectra;
use specon::verify::{self, CampaignConfig, CampaignResult, Property};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "specon",
    version,
    about = "Certify graph connectivity lower bounds from Laplacian eigenvalues"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full structural and spectral report for each input graph
    Analyze(AnalyzeArgs),
    /// Certify an edge- or vertex-connectivity lower bound
    Certify(CertifyArgs),
    /// Eigenvalues of a graph matrix
    Spectrum(SpectrumArgs),
    /// Generate graph corpora as graph6 lines
    Gen(GenArgs),
    /// Run a verification campaign over a corpus
    Verify(VerifyArgs),
}

/// Input selection, in precedence order: --named, then --g6, then --file,
/// then stdin.
#[derive(Args)]
struct InputArgs {
    /// Named family: complete:N, cycle:N, path:N, star:N,
    /// complete_bipartite:A,B, petersen, heawood
    #[arg(long)]
    named: Option<String>,
    /// Inline graph6 string
    #[arg(long)]
    g6: Option<String>,
    /// File of graph6 lines
    #[arg(long)]
    file: Option<PathBuf>,
}

impl InputArgs {
    fn read_graphs(&self) -> Result<Vec<(String, Graph)>, String> {
        if let Some(name) = &self.named {
            let family = corpus::parse_family(name).map_err(|e| e.to_string())?;
            let g = corpus::named(family).map_err(|e| e.to_string())?;
            return Ok(vec![(graph6::write(&g), g)]);
        }
        if let Some(line) = &self.g6 {
            let g = graph6::parse(line).map_err(|e| e.to_string())?;
            return Ok(vec![(graph6::write(&g), g)]);
        }
        let text = match &self.file {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
            None => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| format!("cannot read stdin: {e}"))?;
                buf
            }
        };
        let mut graphs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let g = graph6::parse(line).map_err(|e| format!("line {}: {e}", i + 1))?;
            graphs.push((graph6::write(&g), g));
        }
        if graphs.is_empty() {
            return Err("no graphs in input".to_string());
        }
        Ok(graphs)
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Threshold slack override
    #[arg(long, default_value_t = specon::DEFAULT_EPS)]
    eps: f64,
    /// Machine-readable output (one JSON object per line per graph)
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["edge", "vertex"])))]
struct CertifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Certify the edge-connectivity
    #[arg(long)]
    edge: bool,
    /// Certify the vertex-connectivity
    #[arg(long)]
    vertex: bool,
    /// Target connectivity lower bound
    #[arg(short)]
    k: usize,
    /// Cross-check the verdict against the exact connectivity
    #[arg(long)]
    oracle: bool,
    /// Clique bound to use instead of the exact clique number (must
    /// dominate it)
    #[arg(long, value_name = "R")]
    r_override: Option<usize>,
    /// Threshold slack override
    #[arg(long, default_value_t = specon::DEFAULT_EPS)]
    eps: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixKind {
    Laplacian,
    Adjacency,
    SignlessLaplacian,
}

impl MatrixKind {
    fn name(self) -> &'static str {
        match self {
            Self::Laplacian => "laplacian",
            Self::Adjacency => "adjacency",
            Self::SignlessLaplacian => "signless-laplacian",
        }
    }
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Which matrix to decompose
    #[arg(long, value_enum, default_value_t = MatrixKind::Laplacian)]
    matrix: MatrixKind,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["exhaustive", "gnp", "named"])))]
struct GenArgs {
    /// Emit all labeled graphs on N vertices (N <= 8)
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// Keep only connected graphs
    #[arg(long, requires = "exhaustive")]
    connected: bool,
    /// Keep only graphs with minimum degree at least D
    #[arg(long, value_name = "D", requires = "exhaustive")]
    min_degree: Option<usize>,
    /// Emit COUNT seeded G(N, P) samples
    #[arg(long, num_args = 3, value_names = ["N", "P", "COUNT"])]
    gnp: Option<Vec<String>>,
    /// Emit one named family graph
    #[arg(long)]
    named: Option<String>,
    /// Seed for randomized generation (required with --gnp)
    #[arg(long)]
    seed: Option<u64>,
    /// Wrap the graph6 lines in a JSON object
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["exhaustive", "gnp", "file"])))]
#[command(group(ArgGroup::new("props").required(true).args(["properties", "all"])))]
struct VerifyArgs {
    /// Check all connected labeled graphs on N vertices (N <= 8)
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// Check COUNT seeded G(N, P) samples
    #[arg(long, num_args = 3, value_names = ["N", "P", "COUNT"])]
    gnp: Option<Vec<String>>,
    /// Check every graph6 line in a file
    #[arg(long)]
    file: Option<PathBuf>,
    /// Comma-separated property list (see --all for the full set)
    #[arg(long)]
    properties: Option<String>,
    /// Check every property: subset-size, component-size, girth-component,
    /// edge-cut-side, fiedler-bounds, fiedler-chain, haemers-pairs,
    /// theorem-soundness
    #[arg(long)]
    all: bool,
    /// Seed for sampled sweeps (and G(n,p) corpora)
    #[arg(long)]
    seed: u64,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    threads: Option<usize>,
    /// Threshold slack override
    #[arg(long, default_value_t = specon::DEFAULT_EPS)]
    eps: f64,
    /// Exhaustive cut-enumeration ceiling
    #[arg(long, default_value_t = 12)]
    cut_cap: usize,
    /// Exhaustive pair-enumeration ceiling
    #[arg(long, default_value_t = 6)]
    pair_cap: usize,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Certify(args) => cmd_certify(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode, String> {
    let graphs = args.input.read_graphs()?;
    let mut first = true;
    for (g6, graph) in graphs {
        let report = certify::analyze_with_eps(&graph, args.eps).map_err(|e| e.to_string())?;
        if args.json {
            println!("{}", output::analysis_json(&g6, &report).render());
        } else {
            if !first {
                println!();
            }
            print!("{}", output::analysis_table(&g6, &report));
        }
        first = false;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_certify(args: CertifyArgs) -> Result<ExitCode, String> {
    let graphs = args.input.read_graphs()?;
    let opts = CertifyOptions {
        with_oracle: args.oracle,
        r_override: args.r_override,
        eps: args.eps,
    };
    let mut first = true;
    for (g6, graph) in graphs {
        let cert = if args.edge {
            certify::certify_edge(&graph, args.k, &opts)
        } else {
            certify::certify_vertex(&graph, args.k, &opts)
        }
        .map_err(|e| format!("{g6}: {e}"))?;
        let ctx = CertifyContext {
            graph: &graph,
            girth: invariants::girth(&graph),
            clique_number: invariants::clique_number(&graph),
            clique_bound: args
                .r_override
                .unwrap_or_else(|| invariants::clique_number(&graph)),
            eps: args.eps,
        };
        if args.json {
            println!("{}", output::certificate_json(&g6, &cert, &ctx).render());
        } else {
            if !first {
                println!();
            }
            print!("{}", output::certificate_table(&g6, &cert, &ctx));
        }
        first = false;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<ExitCode, String> {
    let graphs = args.input.read_graphs()?;
    let mut first = true;
    for (g6, graph) in graphs {
        let matrix = match args.matrix {
            MatrixKind::Laplacian => spectra::laplacian(&graph),
            MatrixKind::Adjacency => spectra::adjacency(&graph),
            MatrixKind::SignlessLaplacian => spectra::signless_laplacian(&graph),
        };
        let spectrum = spectra::eigenvalues_sym(&matrix).map_err(|e| e.to_string())?;
        if args.json {
            println!(
                "{}",
                output::spectrum_json(&g6, args.matrix.name(), &spectrum).render()
            );
        } else {
            if !first {
                println!();
            }
            print!(
                "{}",
                output::spectrum_table(&g6, args.matrix.name(), &spectrum)
            );
        }
        first = false;
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_gnp(values: &[String]) -> Result<(usize, f64, usize), String> {
    let n: usize = values[0]
        .parse()
        .map_err(|_| "gnp N must be an integer".to_string())?;
    let p: f64 = values[1]
        .parse()
        .map_err(|_| "gnp P must be a real".to_string())?;
    let count: usize = values[2]
        .parse()
        .map_err(|_| "gnp COUNT must be an integer".to_string())?;
    if !(0.0..=1.0).contains(&p) {
        return Err("gnp P must lie in [0, 1]".to_string());
    }
    Ok((n, p, count))
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, String> {
    let source = if let Some(n) = args.exhaustive {
        let filter = ExhaustiveFilter {
            connected: args.connected,
            min_degree: args.min_degree,
            min_girth: None,
        };
        CorpusSource::Exhaustive { n, filter }
    } else if let Some(values) = &args.gnp {
        let (n, p, count) = parse_gnp(values)?;
        let seed = args.seed.ok_or("--gnp requires --seed")?;
        CorpusSource::Gnp { n, p, count, seed }
    } else {
        let name = args.named.as_ref().expect("clap enforces one source");
        CorpusSource::Named(corpus::parse_family(name).map_err(|e| e.to_string())?)
    };
    let graphs = source.iter().map_err(|e| e.to_string())?;
    if args.json {
        let lines: Vec<Json> = graphs.map(|g| Json::Str(graph6::write(&g))).collect();
        println!(
            "{}",
            Json::Object(vec![("graphs", Json::Array(lines))]).render()
        );
    } else {
        for g in graphs {
            println!("{}", graph6::write(&g));
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Splits the corpus across threads and merges the partial results; the
/// merged result is byte-identical to a single-threaded run.
fn run_parallel(
    source: &CorpusSource,
    config: &CampaignConfig,
    threads: usize,
) -> Result<CampaignResult, String> {
    let parts = source.partition(threads);
    if parts.len() <= 1 {
        return verify::run_campaign(source, config).map_err(|e| e.to_string());
    }
    let results: Vec<Result<CampaignResult, String>> = std::thread::scope(|scope| {
        let handles: Vec<_> = parts
            .iter()
            .map(|part| {
                scope.spawn(move || verify::run_campaign(part, config).map_err(|e| e.to_string()))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("campaign workers do not panic"))
            .collect()
    });
    let mut parts = Vec::new();
    for r in results {
        parts.push(r?);
    }
    Ok(CampaignResult::merge(parts))
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let (source, corpus_desc) = if let Some(n) = args.exhaustive {
        let source = CorpusSource::Exhaustive {
            n,
            filter: ExhaustiveFilter::connected(),
        };
        let desc = Json::Object(vec![
            ("kind", Json::Str("exhaustive".to_string())),
            ("n", Json::UInt(n as u64)),
            ("connected", Json::Bool(true)),
        ]);
        (source, desc)
    } else if let Some(values) = &args.gnp {
        let (n, p, count) = parse_gnp(values)?;
        let desc = Json::Object(vec![
            ("kind", Json::Str("gnp".to_string())),
            ("n", Json::UInt(n as u64)),
            ("p", Json::F9(p)),
            ("count", Json::UInt(count as u64)),
            ("seed", Json::UInt(args.seed)),
        ]);
        (
            CorpusSource::Gnp {
                n,
                p,
                count,
                seed: args.seed,
            },
            desc,
        )
    } else {
        let path = args.file.as_ref().expect("clap enforces one source");
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let lines: Vec<String> = text.lines().map(str::to_string).collect();
        let desc = Json::Object(vec![
            ("kind", Json::Str("file".to_string())),
            ("path", Json::Str(path.display().to_string())),
        ]);
        (CorpusSource::Graph6Lines(lines), desc)
    };

    let properties: Vec<Property> = if args.all {
        Property::all().to_vec()
    } else {
        let list = args
            .properties
            .as_ref()
            .expect("clap enforces one of --properties/--all");
        let mut out = Vec::new();
        for name in list.split(',') {
            let name = name.trim();
            let p = Property::parse(name).ok_or_else(|| format!("unknown property '{name}'"))?;
            out.push(p);
        }
        out
    };
    let mut config = CampaignConfig::new(properties, args.seed);
    config.eps = args.eps;
    config.caps.cut_cap = args.cut_cap;
    config.caps.pair_cap = args.pair_cap;

    let threads = args
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let started = Instant::now();
    let mut result = run_parallel(&source, &config, threads.max(1))?;
    result.elapsed_seconds = started.elapsed().as_secs_f64();

    if args.json {
        println!(
            "{}",
            output::campaign_json(corpus_desc, &config, &result).render()
        );
    } else {
        print!("{}", output::campaign_table(&result));
    }
    eprintln!("elapsed: {:.3}s", result.elapsed_seconds);
    Ok(if result.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
