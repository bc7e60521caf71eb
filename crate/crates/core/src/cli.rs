//! Command-line front end.
//!
//! Every run starts with a header echoing the effective configuration
//! (`#`-prefixed lines in text and CSV, a `config` object in JSON).
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 search budget exhausted.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::dilation::{
    builtin_hypergraph, check_structure, classify_dilation, dilate, generalized_power,
    random_dilation, search_berge_witness, verify_berge_witness, BergeOutcome, BergeWitness,
    BlockWitness, ClassRequest, Dilation, DilationSpec,
};
use crate::error::{Error, Result};
use crate::families::{
    derive_g2nb_candidates, extremal_class_gamma1, in_family_g1, in_family_g2b, in_family_g2nb,
    is_generalized_corona, keg_verdict, odd_complete_verdict, predict_gamma, NbList,
};
use crate::graph::{
    enumerate_connected, generate, parse_graph, write_edge_list, write_graph6,
    EnumerationConstraints, FamilySpec, Graph, GraphFormat,
};
use crate::harness::{self, HarnessConfig, ReportFormat};
use crate::hypergraph::Hypergraph;
use crate::invariants::{self, Certificate, Parameter, ProofMode, SolverConfig, DEFAULT_NODE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

const FAMILY_HELP: &str = "\
Family specs: name[:a[,b]]. cycle:p, path:p, complete:m, complete_bipartite:a,b,
star:m, corona:<spec>, complete_minus_clique:n,r, t1, t2, g_nr:n,r, ghat_nr:n,r,
cp_vee_cq:p,q. Example: corona:cycle:3. FORMATS.md has the parameter ranges.";

#[derive(Parser, Debug, Serialize)]
#[command(name = "dilations", version, about = "Dilations of graphs and their exact invariants", after_help = FAMILY_HELP)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Random seed for sampling commands.
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Worker threads for `verify` (0 = all CPUs).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Search-node budget per solver call.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_CAP)]
    pub node_cap: u64,
    /// Omit the timestamp line.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
pub enum Command {
    /// Emit a graph from a family spec.
    Gen(GenArgs),
    /// Build a dilation from per-vertex and per-edge block sizes, or sample one.
    Dilate(DilateArgs),
    /// Build the generalized power G^{k,s}.
    Power(PowerArgs),
    /// Compute gamma, nu or tau of a graph or hypergraph.
    Invariant(InvariantArgs),
    /// Test tau = nu.
    Keg(GraphInput),
    /// Family verdicts for a graph, or the class of a dilation.
    Classify(ClassifyArgs),
    /// Verify or search a Berge-G witness.
    Berge(BergeArgs),
    /// Connected graphs on n vertices up to isomorphism, as graph6.
    Enumerate(EnumerateArgs),
    /// Derive the non-bipartite minimum-degree-2 candidates with gamma = nu.
    DeriveNb(DeriveNbArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Serialize, Default)]
pub struct GraphInput {
    /// Graph file (graph6 for .g6/.graph6, edge list otherwise).
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,
    /// Inline family spec.
    #[arg(long)]
    pub family: Option<String>,
    /// Override the graph file format.
    #[arg(long, value_parser = parse_graph_format)]
    #[serde(skip)]
    pub graph_format: Option<GraphFormat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphOutput {
    EdgeList,
    Graph6,
}

#[derive(Args, Debug, Serialize)]
pub struct GenArgs {
    pub family: String,
    /// Text encoding of the graph.
    #[arg(long = "as", value_enum, default_value_t = GraphOutput::EdgeList)]
    pub encoding: GraphOutput,
}

#[derive(Args, Debug, Serialize)]
pub struct DilateArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Rank cap k.
    #[arg(long)]
    pub k: usize,
    /// Copy block sizes s_i, comma separated, one per vertex.
    #[arg(long, value_delimiter = ',')]
    pub copy_sizes: Vec<usize>,
    /// Additional block sizes a_e, comma separated, one per edge.
    #[arg(long, value_delimiter = ',')]
    pub extra_sizes: Vec<usize>,
    /// Sample a dilation of this class instead (any, gamma0, gamma1, mixed).
    #[arg(long)]
    pub random: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct PowerArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub s: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct InvariantArgs {
    /// gamma, nu or tau.
    #[arg(long)]
    pub param: String,
    #[command(flatten)]
    pub input: GraphInput,
    /// Hypergraph file, or a built-in name (fano).
    #[arg(long, conflicts_with_all = ["graph", "family"])]
    pub hypergraph: Option<String>,
    /// exhaustive or branch_and_bound.
    #[arg(long, default_value = "branch_and_bound")]
    pub mode: String,
}

#[derive(Args, Debug, Serialize)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Hypergraph to classify as a dilation of the graph (needs --witness).
    #[arg(long, requires = "witness")]
    pub hypergraph: Option<String>,
    /// Block witness JSON, as printed by `dilate --format json`.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BergeAction {
    Verify,
    Search,
}

#[derive(Args, Debug, Serialize)]
pub struct BergeArgs {
    #[arg(value_enum)]
    pub action: BergeAction,
    #[command(flatten)]
    pub input: GraphInput,
    /// Hypergraph file, or a built-in name (fano).
    #[arg(long)]
    pub hypergraph: String,
    /// Witness JSON with `injection` and `edge_map` (verify only).
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub min_degree: Option<usize>,
    #[arg(long, conflicts_with = "non_bipartite")]
    pub bipartite: bool,
    #[arg(long)]
    pub non_bipartite: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct DeriveNbArgs {
    #[arg(long, default_value_t = 9)]
    pub max_n: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    /// hereditary, bounds, extremal-gamma1, extremal-gamma0, nonextremal or appendix.
    pub suite: String,
    /// Largest order (or matching number for nonextremal/appendix).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Random dilations per graph (hereditary and bounds).
    #[arg(long, default_value_t = harness::DEFAULT_SAMPLES)]
    pub samples: usize,
}

fn parse_graph_format(s: &str) -> std::result::Result<GraphFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a command produced, before framing.
struct Output {
    text: String,
    csv: String,
    json: Value,
    code: i32,
}

impl Output {
    fn new(text: String, csv: String, json: Value) -> Self {
        Output {
            text,
            csv,
            json,
            code: EXIT_OK,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    match (&input.graph, &input.family) {
        (Some(path), _) => {
            let format = input.graph_format.unwrap_or_else(|| {
                match path.extension().and_then(|e| e.to_str()) {
                    Some("g6") | Some("graph6") => GraphFormat::Graph6,
                    _ => GraphFormat::EdgeList,
                }
            });
            parse_graph(format, &read(path)?)
        }
        (None, Some(spec)) => generate(&spec.parse::<FamilySpec>()?),
        (None, None) => Err(Error::Domain("give --graph or --family".into())),
    }
}

fn load_hypergraph(arg: &str) -> Result<Hypergraph> {
    match builtin_hypergraph(arg) {
        Ok(h) => Ok(h),
        Err(_) if Path::new(arg).exists() => Hypergraph::parse(&read(Path::new(arg))?),
        Err(_) => Err(Error::Io(format!(
            "{arg}: no such file or built-in hypergraph"
        ))),
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges(), "graph6": write_graph6(g) })
}

fn edge_csv(g: &Graph) -> String {
    let mut s = String::from("u,v\n");
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u},{v}");
    }
    s
}

fn certificate_output(c: &Certificate) -> Output {
    let text = format!(
        "{}\nwitness: {:?}\nnodes: {}\n",
        c.value, c.witness, c.node_count
    );
    let csv = format!(
        "parameter,value,witness,mode,nodes\n{},{},{},{},{}\n",
        c.parameter,
        c.value,
        c.witness
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        serde_json::to_value(c.mode)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default(),
        c.node_count
    );
    Output::new(
        text,
        csv,
        serde_json::to_value(c).expect("certificates serialize"),
    )
}

fn dilation_output(g: &Graph, d: &Dilation) -> Output {
    let structure = check_structure(g, &d.hypergraph, &d.witness);
    let mut text = d.hypergraph.to_text();
    let _ = writeln!(text, "# class: {}", d.class());
    let _ = writeln!(text, "# rank: {} (cap {})", d.rank, d.declared_rank);
    if d.rank_below_cap() {
        let _ = writeln!(text, "# warning: no hyperedge reaches the rank cap");
    }
    let _ = writeln!(text, "# support: {:?}", d.witness.support);
    let _ = writeln!(text, "# copy sizes: {:?}", d.witness.copy_sizes());
    let _ = writeln!(text, "# extra sizes: {:?}", d.witness.extra_sizes());
    let mut csv = String::from("edge,graph_u,graph_v,hyperedge\n");
    for (t, &(u, v)) in d.witness.graph_edges.iter().enumerate() {
        let e = d.hypergraph.edge_vertices(d.witness.edge_map[t]);
        let _ = writeln!(
            csv,
            "{t},{u},{v},{}",
            e.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    let json = json!({
        "class": d.class().to_string(),
        "declared_rank": d.declared_rank,
        "rank": d.rank,
        "rank_below_cap": d.rank_below_cap(),
        "hypergraph": d.hypergraph.summary(),
        "witness": d.witness,
        "structure": structure,
    });
    Output::new(text, csv, json)
}

fn solver(cli: &Cli) -> SolverConfig {
    SolverConfig {
        node_cap: cli.node_cap,
        mode: ProofMode::BranchAndBound,
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Gen(a) => {
            let g = generate(&a.family.parse::<FamilySpec>()?)?;
            let text = match a.encoding {
                GraphOutput::EdgeList => write_edge_list(&g),
                GraphOutput::Graph6 => write_graph6(&g) + "\n",
            };
            Ok(Output::new(text, edge_csv(&g), graph_json(&g)))
        }
        Command::Dilate(a) => {
            let g = load_graph(&a.input)?;
            let d = match &a.random {
                Some(class) => random_dilation(&g, a.k, cli.seed, class.parse::<ClassRequest>()?)?,
                None => dilate(
                    &g,
                    &DilationSpec {
                        k: a.k,
                        copy_sizes: a.copy_sizes.clone(),
                        extra_sizes: a.extra_sizes.clone(),
                    },
                )?,
            };
            Ok(dilation_output(&g, &d))
        }
        Command::Power(a) => {
            let g = load_graph(&a.input)?;
            Ok(dilation_output(&g, &generalized_power(&g, a.k, a.s)?))
        }
        Command::Invariant(a) => {
            let param: Parameter = a.param.parse()?;
            let h = match &a.hypergraph {
                Some(name) => load_hypergraph(name)?,
                None => load_graph(&a.input)?.to_hypergraph(),
            };
            let cfg = SolverConfig {
                mode: a.mode.parse()?,
                ..solver(cli)
            };
            Ok(certificate_output(&invariants::solve(&h, param, &cfg)?))
        }
        Command::Keg(input) => {
            let g = load_graph(input)?;
            let r = invariants::is_keg_with(&g, &solver(cli))?;
            let text = format!("{}\ntau = {}\nnu = {}\n", r.keg, r.tau.value, r.nu.value);
            let csv = format!("keg,tau,nu\n{},{},{}\n", r.keg, r.tau.value, r.nu.value);
            Ok(Output::new(
                text,
                csv,
                serde_json::to_value(&r).expect("serializes"),
            ))
        }
        Command::Classify(a) => classify(a),
        Command::Berge(a) => berge(cli, a),
        Command::Enumerate(a) => {
            let constraints = EnumerationConstraints {
                min_degree: a.min_degree,
                bipartite: a.bipartite,
                non_bipartite: a.non_bipartite,
            };
            let graphs: Vec<String> = enumerate_connected(a.n, constraints)?
                .map(|g| write_graph6(&g))
                .collect();
            let mut text = String::new();
            let mut csv = String::from("index,graph6\n");
            for (i, g) in graphs.iter().enumerate() {
                let _ = writeln!(text, "{g}");
                let _ = writeln!(csv, "{i},{g}");
            }
            Ok(Output::new(
                text,
                csv,
                json!({ "n": a.n, "count": graphs.len(), "graphs": graphs }),
            ))
        }
        Command::DeriveNb(a) => {
            let list = derive_g2nb_candidates(a.max_n)?;
            let mut csv = String::from("index,n,graph6\n");
            for (i, g) in list.graphs.iter().enumerate() {
                let _ = writeln!(csv, "{i},{},{}", g.n(), write_graph6(g));
            }
            let json = json!({
                "max_n": list.max_n,
                "count": list.graphs.len(),
                "graphs": list.graphs.iter().map(write_graph6).collect::<Vec<_>>(),
            });
            Ok(Output::new(list.to_text(), csv, json))
        }
        Command::Verify(a) => {
            let cfg = HarnessConfig {
                jobs: cli.jobs,
                solver: solver(cli),
            };
            let mut report = harness::run_named(&a.suite, a.max_n, a.samples, cli.seed, &cfg)?;
            if cli.no_timestamp {
                report = report.without_timing();
            }
            let code = if report.has_timeouts() {
                EXIT_TIMEOUT
            } else if !report.passed() {
                EXIT_VERIFICATION
            } else {
                EXIT_OK
            };
            let json: Value = serde_json::from_str(&report.to_json()).expect("report JSON parses");
            Ok(Output {
                text: report.render(ReportFormat::Text),
                csv: report.render(ReportFormat::Csv),
                json,
                code,
            })
        }
    }
}

fn classify(a: &ClassifyArgs) -> Result<Output> {
    let g = load_graph(&a.input)?;
    if let (Some(hname), Some(wpath)) = (&a.hypergraph, &a.witness) {
        let h = load_hypergraph(hname)?;
        let w: BlockWitness = serde_json::from_str(&read(wpath)?)
            .map_err(|e| Error::Witness(format!("{}: {e}", wpath.display())))?;
        w.validate_for(&g, &h)?;
        let class = classify_dilation(&h, &w)?;
        let structure = check_structure(&g, &h, &w);
        let predicted = match class {
            crate::dilation::DilationClass::Mixed => None,
            c => Some(predict_gamma(&g, c)?),
        };
        let text = format!(
            "class: {class}\nstructure holds: {}\npredicted gamma: {}\n",
            structure.all_hold(),
            predicted.map_or("-".to_string(), |p| p.to_string())
        );
        let csv = format!(
            "class,structure_holds,predicted_gamma\n{class},{},{}\n",
            structure.all_hold(),
            predicted.map_or(String::new(), |p| p.to_string())
        );
        let json = json!({ "class": class.to_string(), "structure": structure, "predicted_gamma": predicted });
        return Ok(Output::new(text, csv, json));
    }
    let nb = NbList::shipped();
    let mut verdicts = vec![
        in_family_g2b(&g),
        in_family_g2nb(&g, &nb),
        in_family_g1(&g, &nb)?,
        is_generalized_corona(&g),
        keg_verdict(&g)?,
        odd_complete_verdict(&g)?,
    ];
    verdicts.sort_by_key(|v| serde_json::to_string(&v.family).unwrap_or_default());
    let extremal = if g.is_connected() && g.edge_count() > 0 {
        Some(extremal_class_gamma1(&g)?)
    } else {
        None
    };
    let mut text = String::new();
    let mut csv = String::from("family,member\n");
    for v in &verdicts {
        let name = serde_json::to_value(v.family)
            .ok()
            .and_then(|x| x.as_str().map(String::from))
            .unwrap_or_default();
        let _ = writeln!(text, "{name}: {}", v.member);
        let _ = writeln!(csv, "{name},{}", v.member);
    }
    if let Some(e) = extremal {
        let _ = writeln!(text, "extremal gamma1 class: {e:?}");
    }
    let json = json!({ "verdicts": verdicts, "extremal_gamma1": extremal });
    Ok(Output::new(text, csv, json))
}

fn berge(cli: &Cli, a: &BergeArgs) -> Result<Output> {
    let g = load_graph(&a.input)?;
    let h = load_hypergraph(&a.hypergraph)?;
    match a.action {
        BergeAction::Verify => {
            let path = a
                .witness
                .as_ref()
                .ok_or_else(|| Error::Domain("berge verify needs --witness".into()))?;
            let w: BergeWitness = serde_json::from_str(&read(path)?)
                .map_err(|e| Error::Witness(format!("{}: {e}", path.display())))?;
            let ok = verify_berge_witness(&g, &h, &w)?;
            let mut out = Output::new(
                format!("{ok}\n"),
                format!("valid\n{ok}\n"),
                json!({ "action": "verify", "valid": ok }),
            );
            if !ok {
                out.code = EXIT_VERIFICATION;
            }
            Ok(out)
        }
        BergeAction::Search => {
            let r = search_berge_witness(&g, &h, cli.node_cap)?;
            let (text, csv, witness) = match &r.outcome {
                BergeOutcome::Found(w) => (
                    format!(
                        "found\ninjection: {:?}\nedge_map: {:?}\n",
                        w.injection, w.edge_map
                    ),
                    format!("outcome,nodes\nfound,{}\n", r.nodes),
                    serde_json::to_value(w).expect("serializes"),
                ),
                BergeOutcome::NotBerge => (
                    "NotBerge\n".to_string(),
                    format!("outcome,nodes\nnot_berge,{}\n", r.nodes),
                    Value::Null,
                ),
            };
            let json = json!({
                "action": "search",
                "outcome": if witness.is_null() { "not_berge" } else { "found" },
                "witness": witness,
                "nodes": r.nodes,
            });
            Ok(Output::new(text, csv, json))
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_budget() {
        EXIT_TIMEOUT
    } else {
        EXIT_USAGE
    }
}

fn frame(cli: &Cli, out: &Output) -> String {
    let config = serde_json::to_value(cli).expect("config serializes");
    let timestamp = (!cli.no_timestamp).then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    });
    match cli.format {
        Format::Json => {
            let command = config["command"]["name"].clone();
            let mut doc = json!({ "command": command, "config": config, "result": out.json });
            if let Some(t) = timestamp {
                doc["timestamp"] = json!(t);
            }
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        Format::Text | Format::Csv => {
            let mut s = format!(
                "# dilations {}\n# config: {}\n",
                env!("CARGO_PKG_VERSION"),
                config
            );
            if let Some(t) = timestamp {
                let _ = writeln!(s, "# timestamp: {t}");
            }
            s.push_str(if cli.format == Format::Text {
                &out.text
            } else {
                &out.csv
            });
            s
        }
    }
}

/// Parses `args` (including the program name), runs the command, writes
/// its output to `stdout` (or `--out`) and diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{rendered}")
            } else {
                write!(stdout, "{rendered}")
            };
            return code;
        }
    };
    let result = if matches!(cli.command, Command::Verify(_)) {
        execute(&cli)
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(1).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Error::Io(format!("worker pool: {e}"))),
        }
    };
    let out = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };
    let body = frame(&cli, &out);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, body.as_bytes()),
        None => stdout.write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    out.code
}
