mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use report::AnalysisReport;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use trapspaces::generators::{
    long_transient_trapping, random_commutative, random_constant, random_negation, random_network,
};
use trapspaces::netio::{
    export_dot, parse_expression_network, parse_truth_table, write_truth_table, NetworkDocument,
};
use trapspaces::trapspaces::MAX_ENUMERATION_DIMENSION;
use trapspaces::verify::{
    exhaustive_population, run_suites, sampled_population, Suite, MAX_EXHAUSTIVE_DIMENSION,
    MAX_SAMPLED_DIMENSION,
};
use trapspaces::{
    build_graph, classify_network, min_trapspace_equivalent, trapping_graph, trapspace_equivalent,
    transient_and_period, BooleanNetwork, GraphKind,
};

/// Trapspaces, trapping closures and class checks for Boolean networks.
#[derive(Parser)]
#[command(name = "trapspaces", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classes, trapspace counts, dynamics and graph properties of a network.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Only minimal trapspaces and transient/period (allows n up to 16).
        #[arg(long)]
        minimal_only: bool,
    },
    /// DOT rendering of a state transition graph.
    Graph {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Async)]
        kind: Kind,
        /// Stack the nested graphs up to `kind`, one colour per layer.
        #[arg(long)]
        layered: bool,
    },
    /// Trapspace or minimal-trapspace equivalence of two networks.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Trapspace)]
        mode: Mode,
    },
    /// Checks the theorems on an exhaustive or sampled population.
    Verify(VerifyArgs),
    /// Writes a generated network as a truth table.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of disjoint parts for the structured generators.
        #[arg(long, default_value_t = 2)]
        parts: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "all")]
    suite: String,
    /// Directory receiving one truth-table file per offending network.
    #[arg(long)]
    reproducers: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Kind {
    Async,
    Ga,
    Tg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Trapspace,
    Min,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Random,
    Commutative,
    Negation,
    Constant,
    LongTransient,
}

/// How a completed command ends; errors exit with status 2 instead.
enum Outcome {
    Success,
    Negative,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { file, format, minimal_only } => analyze(&file, format, minimal_only),
        Command::Graph { file, kind, layered } => graph(&file, kind, layered),
        Command::Equiv { first, second, mode } => equiv(&first, &second, mode),
        Command::Verify(args) => verify(&args),
        Command::Gen { kind, n, seed, parts, out } => generate(kind, n, seed, parts, out.as_deref()),
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Reads a truth table, or an expression file when the first content line
/// is not an `n=` header.
fn read_network(path: &Path) -> Result<NetworkDocument, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let parsed = match first {
        Some(l) if !l.starts_with("n=") && l.starts_with('x') => parse_expression_network(&text),
        _ => parse_truth_table(&text),
    };
    parsed.map_err(|e| format!("{}: {e}", path.display()))
}

fn analyze(path: &Path, format: Format, minimal_only: bool) -> Result<Outcome, String> {
    let doc = read_network(path)?;
    let limit = AnalysisReport::limit(minimal_only);
    if doc.dimension() > limit {
        let hint = if minimal_only { "" } else { "; try --minimal-only" };
        return Err(format!("analyze supports n <= {limit}, got n = {}{hint}", doc.dimension()));
    }
    let report =
        AnalysisReport::compute(&doc.network, doc.name, minimal_only).map_err(|e| e.to_string())?;
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?)
        }
    }
    Ok(Outcome::Success)
}

fn graph(path: &Path, kind: Kind, layered: bool) -> Result<Outcome, String> {
    let f = read_network(path)?.network;
    let build = |k: Kind| match k {
        Kind::Async => build_graph(&f, GraphKind::Asynchronous),
        Kind::Ga => build_graph(&f, GraphKind::General),
        Kind::Tg => trapping_graph(&f),
    };
    let label = |k: Kind| match k {
        Kind::Async => "asynchronous",
        Kind::Ga => "general asynchronous",
        Kind::Tg => "trapping",
    };
    let kinds: Vec<Kind> = if layered {
        [Kind::Async, Kind::Ga, Kind::Tg].into_iter().filter(|&k| k <= kind).collect()
    } else {
        vec![kind]
    };
    let layers = kinds.iter().map(|&k| build(k)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
    let labels: Vec<&str> = kinds.iter().map(|&k| label(k)).collect();
    print!("{}", export_dot(&layers, &labels).map_err(|e| e.to_string())?);
    Ok(Outcome::Success)
}

fn equiv(first: &Path, second: &Path, mode: Mode) -> Result<Outcome, String> {
    let f = read_network(first)?.network;
    let g = read_network(second)?.network;
    let (names, values): (&[&str], _) = match mode {
        Mode::Trapspace => (
            &["PT(f) = PT(g)", "T(f) = T(g)", "T_f = T_g", "TG(f) = TG(g)", "f^T = g^T"],
            trapspace_equivalent(&f, &g),
        ),
        Mode::Min => (
            &["MT(f) = MT(g)", "M(f) = M(g), T_f = T_g on M(f)", "T_f = T_g on M(f) and M(g)", "f^M = g^M"],
            min_trapspace_equivalent(&f, &g),
        ),
    };
    let values = values.map_err(|e| e.to_string())?;
    for (name, v) in names.iter().zip(&values) {
        println!("{name}: {v}");
    }
    if values.iter().all(|&v| v) {
        println!("verdict: equivalent");
        Ok(Outcome::Success)
    } else {
        if values.iter().any(|&v| v) {
            println!("warning: conditions disagree");
        }
        println!("verdict: not equivalent");
        Ok(Outcome::Negative)
    }
}

fn verify(args: &VerifyArgs) -> Result<Outcome, String> {
    let suites = Suite::parse_list(&args.suite).map_err(|e| e.to_string())?;
    let n = args.n;
    let population = match (args.exhaustive, args.samples) {
        (true, _) if (1..=MAX_EXHAUSTIVE_DIMENSION).contains(&n) => exhaustive_population(n),
        (true, _) => {
            return Err(format!(
                "--exhaustive needs 1 <= n <= {MAX_EXHAUSTIVE_DIMENSION}; use --samples for larger n"
            ))
        }
        (false, Some(_)) if n <= MAX_EXHAUSTIVE_DIMENSION => {
            return Err(format!("n = {n} is small enough to check exhaustively; use --exhaustive"))
        }
        (false, Some(m)) if n <= MAX_SAMPLED_DIMENSION => sampled_population(n, m, args.seed),
        (false, Some(_)) => {
            return Err(format!("--samples needs n <= {MAX_SAMPLED_DIMENSION}, got n = {n}"))
        }
        (false, None) => return Err("one of --exhaustive or --samples is required".into()),
    }
    .map_err(|e| e.to_string())?;
    let report = run_suites(&population, &suites).map_err(|e| e.to_string())?;
    let names: Vec<&str> = suites.iter().map(|s| s.name()).collect();
    println!(
        "suites: {}; networks: {}; checks: {}; violations: {}",
        names.join(","),
        report.networks,
        report.checks,
        report.findings.len()
    );
    if let Some(dir) = &args.reproducers {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    for (k, finding) in report.findings.iter().enumerate() {
        let mut doc = NetworkDocument::new(finding.network());
        doc.name = Some(format!("violation_{k}"));
        let table = write_truth_table(&doc);
        println!("\nviolation {k}: {finding}\n# {finding}\n{table}");
        if let Some(dir) = &args.reproducers {
            let path = dir.join(format!("violation_{k}.tt"));
            fs::write(&path, format!("# {finding}\n{table}"))
                .map_err(|e| format!("{}: {e}", path.display()))?;
        }
    }
    Ok(if report.passed() { Outcome::Success } else { Outcome::Negative })
}

fn generate(kind: GenKind, n: usize, seed: u64, parts: usize, out: Option<&Path>) -> Result<Outcome, String> {
    let f = match kind {
        GenKind::Random => random_network(n, seed),
        GenKind::Commutative => random_commutative(n, seed, parts),
        GenKind::Negation => random_negation(n, seed, parts),
        GenKind::Constant => random_constant(n, seed, parts),
        GenKind::LongTransient => long_transient_trapping(n),
    }
    .map_err(|e| e.to_string())?;
    let mut doc = NetworkDocument::new(f);
    let kind_name = kind.to_possible_value().expect("no skipped variants").get_name().replace('-', "_");
    doc.name = Some(format!("{kind_name}_n{n}_s{seed}"));
    let table = write_truth_table(&doc);
    let summary = one_liner(&doc.network)?;
    match out {
        Some(path) => {
            fs::write(path, table).map_err(|e| format!("{}: {e}", path.display()))?;
            println!("{summary}");
        }
        None => {
            print!("{table}");
            eprintln!("{summary}");
        }
    }
    Ok(Outcome::Success)
}

fn one_liner(f: &BooleanNetwork) -> Result<String, String> {
    let (transient, period) = transient_and_period(f).map_err(|e| e.to_string())?;
    let mut parts = vec![format!("n: {}", f.dimension())];
    if f.dimension() <= MAX_ENUMERATION_DIMENSION {
        let r = classify_network(f).map_err(|e| e.to_string())?;
        for (k, v) in [
            ("trapping", r.trapping),
            ("commutative", r.commutative),
            ("marseille", r.marseille),
            ("lille", r.lille),
        ] {
            parts.push(format!("{k}: {v}"));
        }
    }
    parts.push(format!("transient: {transient}"));
    parts.push(format!("period: {period}"));
    Ok(parts.join(", "))
}
