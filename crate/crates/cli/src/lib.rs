//! Command-line front end: argument parsing, subcommand drivers, and the
//! exit-code contract (0 ok, 1 violation, 2 usage or input error, 3 size cap).

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use treelike::classes::{self, ClassRecord};
use treelike::generators::FamilySpec;
use treelike::layering::{cluster_diameter_at, cluster_diameters, layering_partition, layering_tree};
use treelike::metrics::{
    exact_tree_breadth, exact_tree_length, hyperbolicity, slimness, slimness_bound_report, slimness_with,
    tree_length_bounds, BoundInputs, TripleMode,
};
use treelike::verify::{batch_verify, BatchSource, VerifyOptions, VerifyReport};
use treelike::{DistanceMatrix, Graph, GraphFormat, VertexId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SIZE_CAP: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] treelike::Error),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_size_limit() => EXIT_SIZE_CAP,
            _ => EXIT_INPUT,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "treelike", version, about = "Tree-likeness metrics for graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Slimness, hyperbolicity, cluster-diameters, and tree-length bounds.
    Analyze(AnalyzeArgs),
    /// Layering partition and layering tree from one start vertex.
    Layering(LayeringArgs),
    /// Graph-class recognition and implied slimness bounds.
    Classify(ClassifyArgs),
    /// Write a generated graph as an edge list.
    Generate(GenerateArgs),
    /// Check every known inequality on a graph or corpus.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    #[default]
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Dimacs => GraphFormat::Dimacs,
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct InputArgs {
    /// Graph file, or a family spec such as `cycle:8` or `random:9,0.25`.
    pub input: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
    pub format: FormatArg,
    /// Seed for random family specs.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Debug, Args)]
pub struct OutputArgs {
    /// JSON output (the default).
    #[arg(long, conflicts_with = "tsv")]
    pub json: bool,
    /// Tab-separated output.
    #[arg(long)]
    pub tsv: bool,
    /// Write the report here instead of stdout.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub out: OutputArgs,
    /// Compute exact tree-length and tree-breadth.
    #[arg(long)]
    pub exact: bool,
    #[arg(long, default_value_t = treelike::metrics::DEFAULT_EXACT_MAX_N)]
    pub max_exact_n: usize,
    #[arg(long, default_value_t = 400)]
    pub max_slimness_n: usize,
    /// Report the cluster-diameter for these start vertices (repeatable).
    #[arg(long = "source")]
    pub sources: Vec<String>,
}

#[derive(Clone, Debug, Args)]
pub struct LayeringArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub out: OutputArgs,
    /// Start vertex label; defaults to the first vertex.
    #[arg(long)]
    pub source: Option<String>,
    /// Write the layering tree in DOT format.
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub out: OutputArgs,
    #[arg(long, default_value_t = classes::DEFAULT_CHORDALITY_MAX_N)]
    pub max_chordality_n: usize,
}

#[derive(Clone, Debug, Args)]
pub struct GenerateArgs {
    /// Family spec such as `building:2` or `random:8,0.3`.
    pub family: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
    pub format: FormatArg,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    /// Family spec to sample.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    pub family: Option<String>,
    /// Graph file or directory of graph files.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
    pub format: FormatArg,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = treelike::metrics::DEFAULT_EXACT_MAX_N)]
    pub max_exact_n: usize,
    #[arg(long, default_value_t = classes::DEFAULT_CHORDALITY_MAX_N)]
    pub max_chordality_n: usize,
    #[arg(long, default_value_t = classes::DEFAULT_HEREDITARY_MAX_N)]
    pub max_hereditary_n: usize,
    #[arg(long, default_value_t = 400)]
    pub max_slimness_n: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a).map(|_| EXIT_OK),
        Command::Layering(a) => cmd_layering(a).map(|_| EXIT_OK),
        Command::Classify(a) => cmd_classify(a).map(|_| EXIT_OK),
        Command::Generate(a) => cmd_generate(a).map(|_| EXIT_OK),
        Command::Verify(a) => cmd_verify(a).map(|r| {
            if r.aggregates.violations == 0 {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            }
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Loads a graph from an existing file, or generates it from a family spec.
pub fn load_graph(input: &InputArgs) -> CliResult<Graph> {
    let path = Path::new(&input.input);
    if path.exists() {
        return Ok(GraphFormat::from(input.format).read(path)?);
    }
    match input.input.parse::<FamilySpec>() {
        Ok(spec) => Ok(spec.generate(input.seed)?),
        Err(e) => Err(CliError::Usage(format!(
            "{:?} is neither a readable file nor a family spec ({e})",
            input.input
        ))),
    }
}

fn vertex(g: &Graph, label: &str) -> CliResult<VertexId> {
    g.id_of(label)
        .ok_or_else(|| CliError::Usage(format!("unknown vertex label {label:?}")))
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Write {
                    path: "stdout".into(),
                    source,
                })
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn size_cap(what: &'static str, actual: usize, limit: usize) -> CliResult<()> {
    if actual > limit {
        return Err(treelike::Error::SizeLimit { what, actual, limit }.into());
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct WitnessLabels {
    pub x: String,
    pub y: String,
    pub z: String,
    pub u: String,
}

#[derive(Debug, Serialize)]
pub struct LabeledValue {
    pub value: u32,
    pub source: String,
}

#[derive(Debug, Serialize)]
pub struct BoundReport {
    pub name: &'static str,
    pub value: u32,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct TreeLengthBoundsReport {
    pub source: String,
    pub cluster_diameter: u32,
    pub lower: u32,
    pub upper: u32,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    pub slimness: u32,
    pub slimness_witness: Option<WitnessLabels>,
    pub slimness_distinct: u32,
    pub hyperbolicity_x2: u64,
    pub hyperbolicity: String,
    pub cluster_diameter_min: LabeledValue,
    pub cluster_diameter_max: LabeledValue,
    pub cluster_diameter_at: Vec<LabeledValue>,
    pub tree_length_bounds: TreeLengthBoundsReport,
    pub tree_length: Option<u32>,
    pub tree_breadth: Option<u32>,
    pub slimness_bounds: Vec<BoundReport>,
}

pub fn analyze(g: &Graph, args: &AnalyzeArgs) -> CliResult<AnalyzeReport> {
    size_cap("vertex count for slimness", g.n(), args.max_slimness_n)?;
    if args.exact {
        size_cap("vertex count for exact tree-length", g.n(), args.max_exact_n)?;
    }
    let dm = DistanceMatrix::new(g)?;
    let sl = slimness(g, &dm);
    let sl_distinct = slimness_with(g, &dm, TripleMode::Distinct);
    let hb = hyperbolicity(&dm);
    let deltas = cluster_diameters(g, &dm)?;
    // smallest start id wins ties
    let pick = |better: fn(u32, u32) -> bool| {
        let mut best = 0;
        for (s, &d) in deltas.iter().enumerate() {
            if better(d, deltas[best]) {
                best = s;
            }
        }
        LabeledValue {
            value: deltas[best],
            source: g.label(best).to_string(),
        }
    };
    let delta_min = pick(|a, b| a < b);
    let delta_max = pick(|a, b| a > b);
    let mut at = Vec::new();
    for label in &args.sources {
        let s = vertex(g, label)?;
        let lp = layering_partition(g, &dm, s)?;
        at.push(LabeledValue {
            value: cluster_diameter_at(&dm, &lp),
            source: label.clone(),
        });
    }
    let bound_source = match args.sources.first() {
        Some(label) => vertex(g, label)?,
        None => g.id_of(&delta_min.source).expect("label exists"),
    };
    let tlb = tree_length_bounds(g, &dm, bound_source)?;
    let (tl, tb) = if args.exact {
        (
            Some(exact_tree_length(g, &dm, args.max_exact_n)?),
            Some(exact_tree_breadth(g, &dm, args.max_exact_n)?),
        )
    } else {
        (None, None)
    };
    let inputs = BoundInputs {
        hyperbolicity: Some(hb),
        tree_length: tl,
        tree_breadth: tb,
        chordality: classes::chordality(g, classes::DEFAULT_CHORDALITY_MAX_N, None)
            .ok()
            .map(|c| c.value),
    };
    let bounds = slimness_bound_report(g, &dm, &inputs)?
        .into_iter()
        .map(|b| BoundReport {
            name: b.name,
            value: b.value,
            holds: sl.value <= b.value,
        })
        .collect();
    Ok(AnalyzeReport {
        n: g.n(),
        m: g.m(),
        diameter: dm.diameter(),
        slimness: sl.value,
        slimness_witness: sl.witness.map(|w| WitnessLabels {
            x: g.label(w.x).into(),
            y: g.label(w.y).into(),
            z: g.label(w.z).into(),
            u: g.label(w.u).into(),
        }),
        slimness_distinct: sl_distinct.value,
        hyperbolicity_x2: hb.times2(),
        hyperbolicity: hb.to_string(),
        cluster_diameter_min: delta_min,
        cluster_diameter_max: delta_max,
        cluster_diameter_at: at,
        tree_length_bounds: TreeLengthBoundsReport {
            source: g.label(tlb.source).into(),
            cluster_diameter: tlb.cluster_diameter,
            lower: tlb.lower,
            upper: tlb.upper,
        },
        tree_length: tl,
        tree_breadth: tb,
        slimness_bounds: bounds,
    })
}

pub fn cmd_analyze(args: &AnalyzeArgs) -> CliResult<()> {
    let g = load_graph(&args.input)?;
    let r = analyze(&g, args)?;
    let text = if args.out.tsv {
        let mut s = String::new();
        let opt = |v: Option<u32>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        let _ = writeln!(s, "n\t{}\nm\t{}\ndiameter\t{}", r.n, r.m, r.diameter);
        let _ = writeln!(s, "slimness\t{}\nslimness_distinct\t{}", r.slimness, r.slimness_distinct);
        let _ = writeln!(s, "hyperbolicity_x2\t{}\nhyperbolicity\t{}", r.hyperbolicity_x2, r.hyperbolicity);
        let _ = writeln!(s, "cluster_diameter_min\t{}", r.cluster_diameter_min.value);
        let _ = writeln!(s, "cluster_diameter_max\t{}", r.cluster_diameter_max.value);
        for d in &r.cluster_diameter_at {
            let _ = writeln!(s, "cluster_diameter_at\t{}\t{}", d.source, d.value);
        }
        let _ = writeln!(s, "tree_length\t{}\ntree_breadth\t{}", opt(r.tree_length), opt(r.tree_breadth));
        for b in &r.slimness_bounds {
            let _ = writeln!(s, "bound\t{}\t{}\t{}", b.name, b.value, b.holds);
        }
        s
    } else {
        to_json(&r)
    };
    emit(&args.out.output, &text)
}

#[derive(Debug, Serialize)]
pub struct LayeringReport {
    pub source: String,
    pub cluster_diameter: u32,
    /// Per layer, each cluster as a list of labels.
    pub layers: Vec<Vec<Vec<String>>>,
    pub tree_nodes: usize,
    pub tree_edges: usize,
}

pub fn cmd_layering(args: &LayeringArgs) -> CliResult<()> {
    let g = load_graph(&args.input)?;
    let s = match &args.source {
        Some(label) => vertex(&g, label)?,
        None => 0,
    };
    let dm = DistanceMatrix::new(&g)?;
    let lp = layering_partition(&g, &dm, s)?;
    let tree = layering_tree(&g, &lp);
    if let Some(path) = &args.dot {
        std::fs::write(path, tree.to_dot(&g, &lp)).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        })?;
    }
    let report = LayeringReport {
        source: g.label(s).into(),
        cluster_diameter: cluster_diameter_at(&dm, &lp),
        layers: lp
            .layers()
            .iter()
            .map(|layer| {
                layer
                    .iter()
                    .map(|c| c.iter().map(|v| g.label(v).to_string()).collect())
                    .collect()
            })
            .collect(),
        tree_nodes: tree.nodes().len(),
        tree_edges: tree.edges().len(),
    };
    let text = if args.out.tsv {
        let mut s = String::new();
        let _ = writeln!(s, "source\t{}\ncluster_diameter\t{}", report.source, report.cluster_diameter);
        for (i, layer) in report.layers.iter().enumerate() {
            for (j, cluster) in layer.iter().enumerate() {
                let _ = writeln!(s, "cluster\t{i}\t{j}\t{}", cluster.join(","));
            }
        }
        s
    } else {
        to_json(&report)
    };
    emit(&args.out.output, &text)
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub chordality: u32,
    pub chordal: bool,
    pub at_free: bool,
    pub block_graph: bool,
    pub hhd_free: bool,
    pub at_witness: Option<[String; 3]>,
    pub implied_bounds: Vec<ImpliedBound>,
}

#[derive(Debug, Serialize)]
pub struct ImpliedBound {
    pub name: &'static str,
    pub value: u32,
}

pub fn classify(g: &Graph, max_chordality_n: usize) -> CliResult<ClassifyReport> {
    let record: ClassRecord = classes::classify(g, max_chordality_n)?;
    Ok(ClassifyReport {
        chordality: record.chordality,
        chordal: record.is_chordal,
        at_free: record.is_at_free,
        block_graph: record.is_block,
        hhd_free: record.is_hhd_free,
        at_witness: record.at_witness.map(|t| t.map(|v| g.label(v).to_string())),
        implied_bounds: record
            .implied_slimness_bounds()
            .into_iter()
            .map(|(name, value)| ImpliedBound { name, value })
            .collect(),
    })
}

pub fn cmd_classify(args: &ClassifyArgs) -> CliResult<()> {
    let g = load_graph(&args.input)?;
    let r = classify(&g, args.max_chordality_n)?;
    let text = if args.out.tsv {
        let mut s = String::new();
        let _ = writeln!(s, "chordality\t{}\nchordal\t{}\nat_free\t{}", r.chordality, r.chordal, r.at_free);
        let _ = writeln!(s, "block_graph\t{}\nhhd_free\t{}", r.block_graph, r.hhd_free);
        if let Some(t) = &r.at_witness {
            let _ = writeln!(s, "at_witness\t{}", t.join(","));
        }
        for b in &r.implied_bounds {
            let _ = writeln!(s, "implied\t{}\t{}", b.name, b.value);
        }
        s
    } else {
        to_json(&r)
    };
    emit(&args.out.output, &text)
}

/// DIMACS text with ids in internal order.
pub fn to_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

pub fn cmd_generate(args: &GenerateArgs) -> CliResult<Graph> {
    let spec: FamilySpec = args.family.parse()?;
    let g = spec.generate(args.seed)?;
    if g.n() > 1 && g.m() == 0 {
        log::warn!("edge list cannot represent isolated vertices");
    }
    if g.n() == 1 && args.format == FormatArg::Edgelist {
        log::warn!("single-vertex graph has an empty edge list");
    }
    let text = match args.format {
        FormatArg::Edgelist => g.to_edge_list(),
        FormatArg::Dimacs => to_dimacs(&g),
    };
    match &args.output {
        Some(_) => {
            emit(&args.output, &text)?;
            emit(&None, &format!("n\t{}\nm\t{}\n", g.n(), g.m()))?;
        }
        None => {
            emit(&None, &text)?;
            eprintln!("n={} m={}", g.n(), g.m());
        }
    }
    Ok(g)
}

pub fn verify_report(args: &VerifyArgs) -> CliResult<VerifyReport> {
    let format = GraphFormat::from(args.format);
    let source = match (&args.family, &args.input) {
        (Some(spec), None) => BatchSource::Family(spec.parse()?),
        (None, Some(path)) if path.is_dir() => BatchSource::Directory(path.clone(), format),
        (None, Some(path)) if path.is_file() => BatchSource::File(path.clone(), format),
        (None, Some(path)) => return Err(CliError::Usage(format!("no such file or directory: {}", path.display()))),
        _ => return Err(CliError::Usage("give exactly one of --family and --input".into())),
    };
    for (name, cap) in [
        ("--max-exact-n", args.max_exact_n),
        ("--max-chordality-n", args.max_chordality_n),
        ("--max-hereditary-n", args.max_hereditary_n),
        ("--max-slimness-n", args.max_slimness_n),
        ("--trials", args.trials),
    ] {
        if cap == 0 {
            return Err(CliError::Usage(format!("{name} must be positive")));
        }
    }
    let options = VerifyOptions {
        max_exact_n: args.max_exact_n,
        max_chordality_n: args.max_chordality_n,
        max_hereditary_n: args.max_hereditary_n,
        max_slimness_n: args.max_slimness_n,
    };
    Ok(batch_verify(&source, args.trials, args.seed, &options)?)
}

pub fn cmd_verify(args: &VerifyArgs) -> CliResult<VerifyReport> {
    let report = verify_report(args)?;
    let text = if args.out.tsv {
        let mut s = String::from("graph\tinequality\tlhs_x2\trhs_x2\tholds\tapplicable\ttight\n");
        for g in &report.graphs {
            for r in &g.inequalities {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    g.source, r.name, r.lhs_x2, r.rhs_x2, r.holds, r.applicable, r.tight
                );
            }
        }
        let _ = writeln!(s, "# graphs\t{}\n# violations\t{}", report.aggregates.graphs, report.aggregates.violations);
        s
    } else {
        let mut s = report.to_json();
        s.push('\n');
        s
    };
    emit(&args.out.output, &text)?;
    if report.aggregates.violations > 0 {
        for g in &report.graphs {
            for r in g.inequalities.iter().filter(|r| r.is_violation()) {
                log::error!("{}: {} fails ({} > {})", g.source, r.name, r.lhs_x2, r.rhs_x2);
            }
        }
    }
    Ok(report)
}
