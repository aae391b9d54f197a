//! The `ldyn` command-line front end.
//!
//! Every run prints one JSON object `{"command", "inputs", "result"}` (or
//! `"error"` in place of `"result"`). Exit status: 0 on success, including
//! negative answers; 2 for usage errors; 3 for I/O or parse failures; 4 when
//! an input violates a precondition.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{cc1_upper_bound, ksz_bound, ldyn_self_opinioned};
use crate::constructions::{gen_hardness_instance, gen_prop3_family, verify_reduction, AttachMode};
use crate::error::Error;
use crate::exact::{self, decide_ldynamo, ldyn_brute, min_dynamo};
use crate::forest::solve_forest;
use crate::graph::Graph;
use crate::mcflow::{min_cost_flow, FlowNetwork};
use crate::propagation::{is_dynamo, propagate, ThresholdAssignment};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::transforms::{delta, find_intermediate, interpolation_chain};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Text,
}

/// Dynamic monopolies under threshold assignments.
#[derive(Debug, Parser, Serialize)]
#[command(name = "ldyn", version)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(untagged)]
pub enum Command {
    /// Run the activation process and print its rounds.
    Propagate(SeededArgs),
    /// Decide whether a seed set is a dynamo.
    CheckDynamo(SeededArgs),
    /// Exhaustive minimum dynamo.
    MinDynamo(MinDynamoArgs),
    /// Exhaustive worst-case minimum dynamo at average threshold t.
    LdynBrute(LdynBruteArgs),
    /// Worst-case minimum dynamo of a forest, in polynomial time.
    LdynForest(LdynForestArgs),
    /// Degree-sequence and c/(c+1) bounds.
    Bounds(BoundsArgs),
    /// Is there an assignment with total floor(k m) and minimum dynamo >= d?
    Decide(DecideArgs),
    /// Minimum-cost flow on a network file.
    Mcf(McfArgs),
    /// Instance generators.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Build the reduction instance for G and check dyn(H) = beta(G) + floor(p/2).
    VerifyReduction(HardnessArgs),
    /// Interpolate between two assignments with equal totals.
    Interpolate(InterpolateArgs),
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(untagged)]
pub enum GenCommand {
    /// K_n joined to n copies of K_{n+1}, with its worst-case thresholds.
    Prop3(Prop3Args),
    /// The vertex-cover reduction instance built from a graph.
    Hardness(HardnessArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct SeededArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub tau: PathBuf,
    /// Seed vertices, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub seed: Vec<usize>,
}

#[derive(Debug, Args, Serialize)]
pub struct MinDynamoArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub tau: PathBuf,
    #[arg(long, default_value_t = exact::DEFAULT_DYNAMO_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct LdynBruteArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Average threshold, as p/q or an integer.
    #[arg(long)]
    pub t: String,
    /// Allow tau(v) = deg(v) + 1.
    #[arg(long)]
    pub self_opinioned: bool,
    #[arg(long, default_value_t = exact::DEFAULT_LDYN_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct LdynForestArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub t: String,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundsArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub t: Option<String>,
    #[arg(long)]
    pub c: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct DecideArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: String,
    #[arg(long)]
    pub d: usize,
    #[arg(long, default_value_t = exact::DEFAULT_LDYN_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct McfArgs {
    #[arg(long)]
    pub network: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct Prop3Args {
    #[arg(long)]
    pub n: usize,
    /// Write PREFIX.graph.txt and PREFIX.tau.txt.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct HardnessArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: String,
    #[arg(long)]
    pub l: i64,
    /// per-vertex or one-star.
    #[arg(long, default_value = "per-vertex")]
    pub mode: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Exhaustive vertex-cover cap for non-tree components of G.
    #[arg(long, default_value_t = exact::DEFAULT_COVER_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct InterpolateArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub tau1: PathBuf,
    #[arg(long)]
    pub tau2: PathBuf,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = exact::DEFAULT_DYNAMO_CAP)]
    pub cap: usize,
}

#[derive(Debug)]
enum Failure {
    Io(PathBuf, std::io::Error),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn status(&self) -> i32 {
        match self {
            Failure::Io(..) | Failure::Lib(Error::Parse(_)) => EXIT_INPUT,
            Failure::Lib(_) => EXIT_PRECONDITION,
        }
    }

    fn kind(&self) -> &'static str {
        match self.status() {
            EXIT_INPUT => "input",
            _ => "precondition",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(path, e) => format!("{}: {e}", path.display()),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write(path: &Path, body: &str) -> Outcome<()> {
    fs::write(path, body).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load_graph(path: &Path) -> Outcome<Graph> {
    Ok(Graph::parse(&read(path)?).map_err(Error::from)?)
}

fn load_tau(path: &Path) -> Outcome<ThresholdAssignment> {
    Ok(ThresholdAssignment::parse(&read(path)?).map_err(Error::from)?)
}

fn rational(s: &str) -> Outcome<Rational> {
    Ok(parse_rational(s)?)
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Rendered output of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub status: i32,
    pub stdout: String,
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Propagate(_) => "propagate",
        Command::CheckDynamo(_) => "check-dynamo",
        Command::MinDynamo(_) => "min-dynamo",
        Command::LdynBrute(_) => "ldyn-brute",
        Command::LdynForest(_) => "ldyn-forest",
        Command::Bounds(_) => "bounds",
        Command::Decide(_) => "decide",
        Command::Mcf(_) => "mcf",
        Command::Gen(GenCommand::Prop3(_)) => "gen prop3",
        Command::Gen(GenCommand::Hardness(_)) => "gen hardness",
        Command::VerifyReduction(_) => "verify-reduction",
        Command::Interpolate(_) => "interpolate",
    }
}

/// Executes one parsed command line.
pub fn run(config: &RunConfig) -> RunOutput {
    let name = command_name(&config.command);
    let inputs = serde_json::to_value(&config.command).unwrap_or(Value::Null);
    let (status, doc) = match dispatch(&config.command) {
        Ok(result) => (
            EXIT_OK,
            json!({ "command": name, "inputs": inputs, "result": result }),
        ),
        Err(f) => (
            f.status(),
            json!({
                "command": name,
                "inputs": inputs,
                "error": { "kind": f.kind(), "message": f.message() },
            }),
        ),
    };
    let stdout = match config.format {
        OutputFormat::Json => format!("{doc}\n"),
        OutputFormat::Text => render_text(&doc),
    };
    RunOutput { status, stdout }
}

/// Parses `args` (program name first) and runs. Usage errors and `--help`
/// are rendered by clap.
pub fn run_from_args<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            RunOutput {
                status,
                stdout: e.render().to_string(),
            }
        }
    }
}

fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    let body = doc.get("result").or_else(|| doc.get("error"));
    match body {
        Some(Value::Object(map)) => {
            for (k, v) in map {
                out.push_str(&format!("{k}: {v}\n"));
            }
        }
        Some(v) => out.push_str(&format!("{v}\n")),
        None => {}
    }
    out
}

fn dispatch(cmd: &Command) -> Outcome<Value> {
    Ok(match cmd {
        Command::Propagate(a) => {
            let g = load_graph(&a.graph)?;
            let tau = load_tau(&a.tau)?;
            serde_json::to_value(propagate(&g, &tau, &a.seed)?).expect("serializable")
        }
        Command::CheckDynamo(a) => {
            let g = load_graph(&a.graph)?;
            let tau = load_tau(&a.tau)?;
            json!(is_dynamo(&g, &tau, &a.seed)?)
        }
        Command::MinDynamo(a) => {
            let g = load_graph(&a.graph)?;
            let tau = load_tau(&a.tau)?;
            let (size, dynamo) = min_dynamo(&g, &tau, a.cap)?;
            json!({ "size": size, "dynamo": dynamo, "tau": tau })
        }
        Command::LdynBrute(a) => {
            let g = load_graph(&a.graph)?;
            let t = rational(&a.t)?;
            let w = ldyn_brute(&g, t, a.self_opinioned, a.cap)?;
            json!({ "value": w.value, "tau": w.tau, "dynamo": w.dynamo, "budget": crate::rational::threshold_budget(t, g.n()) })
        }
        Command::LdynForest(a) => {
            let g = load_graph(&a.graph)?;
            let s = solve_forest(&g, rational(&a.t)?)?;
            serde_json::to_value(s).expect("serializable")
        }
        Command::Bounds(a) => bounds(a)?,
        Command::Decide(a) => {
            let g = load_graph(&a.graph)?;
            json!(decide_ldynamo(&g, rational(&a.k)?, a.d, a.cap)?)
        }
        Command::Mcf(a) => {
            let net = FlowNetwork::parse(&read(&a.network)?).map_err(Error::from)?;
            serde_json::to_value(min_cost_flow(&net)?).expect("serializable")
        }
        Command::Gen(GenCommand::Prop3(a)) => {
            let (g, tau) = gen_prop3_family(a.n)?;
            let mut result = json!({
                "n": g.n(),
                "m": g.m(),
                "tau_bar": format_rational(tau.average()?),
                "graph": g.to_edge_list(),
                "tau": tau,
            });
            if let Some(prefix) = &a.out {
                result["files"] = write_instance(prefix, &g, &tau)?;
            }
            result
        }
        Command::Gen(GenCommand::Hardness(a)) => {
            let g = load_graph(&a.graph)?;
            let mode: AttachMode = a.mode.parse()?;
            let inst = gen_hardness_instance(&g, rational(&a.k)?, a.l, mode)?;
            let mut result = serde_json::to_value(&inst).expect("serializable");
            result["n"] = json!(inst.h.n());
            result["m"] = json!(inst.h.m());
            result["graph"] = json!(inst.h.to_edge_list());
            if let Some(prefix) = &a.out {
                result["files"] = write_instance(prefix, &inst.h, &inst.tau)?;
                let params = with_suffix(prefix, ".params.json");
                let mut report = serde_json::to_value(&inst).expect("serializable");
                report.as_object_mut().expect("object").remove("tau");
                write(&params, &format!("{report}\n"))?;
                result["files"]["params"] = json!(params);
            }
            result
        }
        Command::VerifyReduction(a) => {
            let g = load_graph(&a.graph)?;
            let mode: AttachMode = a.mode.parse()?;
            serde_json::to_value(verify_reduction(&g, rational(&a.k)?, a.l, mode, a.cap)?)
                .expect("serializable")
        }
        Command::Interpolate(a) => {
            let g = load_graph(&a.graph)?;
            let t1 = load_tau(&a.tau1)?;
            let t2 = load_tau(&a.tau2)?;
            let chain = interpolation_chain(&g, &t1, &t2)?;
            let sizes = chain
                .steps
                .iter()
                .map(|t| min_dynamo(&g, t, a.cap).map(|d| d.0))
                .collect::<Result<Vec<_>, _>>()?;
            let mut result = json!({
                "delta": delta(&t1, &t2)?,
                "chain": chain.steps,
                "dyn": sizes,
            });
            if let Some(r) = a.r {
                result["found"] = json!(find_intermediate(&g, &t1, &t2, r, a.cap)?);
            }
            result
        }
    })
}

fn write_instance(prefix: &Path, g: &Graph, tau: &ThresholdAssignment) -> Outcome<Value> {
    let graph = with_suffix(prefix, ".graph.txt");
    let thresholds = with_suffix(prefix, ".tau.txt");
    write(&graph, &g.to_edge_list())?;
    write(&thresholds, &tau.to_text())?;
    Ok(json!({ "graph": graph, "tau": thresholds }))
}

fn bounds(a: &BoundsArgs) -> Outcome<Value> {
    let g = load_graph(&a.graph)?;
    let mut result = json!({
        "n": g.n(),
        "m": g.m(),
        "degree_sequence": g.degree_sequence().degrees,
        "edge_density": g.edge_density().map(format_rational).ok(),
    });
    let t = a.t.as_deref().map(rational).transpose()?;
    if let Some(t) = t {
        result["t"] = json!(format_rational(t));
        result["k0"] = json!(ksz_bound(&g, t)?);
        result["self_opinioned"] =
            serde_json::to_value(ldyn_self_opinioned(&g, t)?).expect("serializable");
    }
    if let Some(c) = a.c.as_deref() {
        let report = cc1_upper_bound(&g, rational(c)?)?;
        if let Some(t) = t {
            result["hypothesis_holds"] = json!(report.admits(t));
        }
        result["cc1"] = serde_json::to_value(report).expect("serializable");
    }
    Ok(result)
}
