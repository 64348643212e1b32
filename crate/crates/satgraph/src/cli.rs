//! The `satgraph` command line.
//!
//! Every command writes one JSON document to standard output and, unless
//! `--json-only` is given, a short human-readable summary to standard error.
//! Exit status: 0 on success, 2 for malformed input, 3 when a request exceeds
//! an enumeration cap, 1 for internal errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use satgraph_core::constructions::Recipe;
use satgraph_core::oracle::{sat_exact_with, sharpness_probe_with};
use satgraph_core::{threshold, weight, Error, ErrorKind, Executor, Graph, Serial, ThresholdSequence};

use crate::exec::Parallel;
use crate::format::{read_graph_file, write_graph, FormatError};
use crate::report;

#[derive(Parser, Debug)]
#[command(name = "satgraph", version, about = "Saturation numbers, edge weights and saturated constructions")]
pub struct Cli {
    /// Print only the JSON document; skip the summary on standard error.
    #[arg(long, global = true)]
    json_only: bool,

    #[command(subcommand)]
    command: Command,
}

/// Selects the forbidden graph: a file, or one of the built-in families.
#[derive(Args, Debug, Default)]
struct Forbidden {
    /// Graph file in the plain-text edge-list format.
    file: Option<PathBuf>,
    /// The complete graph K_k.
    #[arg(long, value_name = "K")]
    clique: Option<usize>,
    /// The star K_{1,k}.
    #[arg(long, value_name = "K")]
    star: Option<usize>,
    /// Disjoint union of cliques, e.g. `2,3`.
    #[arg(long, value_delimiter = ',', value_name = "P1,P2,...")]
    cliques: Option<Vec<usize>>,
    /// With `--cliques`: join the union with K_ell.
    #[arg(long, value_name = "ELL", requires = "cliques")]
    ell: Option<usize>,
    /// Threshold build sequence over {I, D}, e.g. `DDID`.
    #[arg(long, value_name = "SEQ")]
    seq: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Per-edge weights and the graph weight.
    Weight(Forbidden),
    /// The weight lower bound on sat(H, n).
    LowerBound {
        #[command(flatten)]
        forbidden: Forbidden,
        #[arg(long)]
        n: Option<usize>,
        /// Inclusive range `a:b`.
        #[arg(long, value_name = "A:B")]
        n_range: Option<String>,
    },
    /// Decide whether a graph is a threshold graph and give its build sequence.
    ThresholdRecognize(Forbidden),
    /// Weight and saturation slope along a threshold build sequence.
    ThresholdWeight(Forbidden),
    /// Build a saturated graph.
    Construct(ConstructArgs),
    /// Check whether a host graph is saturated for the forbidden graph.
    Verify {
        /// Host graph file.
        host: PathBuf,
        #[command(flatten)]
        forbidden: Forbidden,
    },
    /// Exact sat(H, n) by exhaustive search.
    SatExact {
        #[command(flatten)]
        forbidden: Forbidden,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Exact sat(H, n) over a range of n next to the weight slope.
    Probe {
        #[command(flatten)]
        forbidden: Forbidden,
        /// Inclusive range `a:b`.
        #[arg(long, value_name = "A:B")]
        n_range: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructKind {
    DominatingLift,
    CliquePartition,
    DisjointCliques,
    JoinLift,
    Threshold,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    kind: ConstructKind,
    /// Order of the constructed graph.
    #[arg(long)]
    n: Option<usize>,
    /// Clique size for `clique-partition`.
    #[arg(long)]
    k: Option<usize>,
    /// Sorted clique sizes for `disjoint-cliques` and `join-lift`.
    #[arg(long, value_delimiter = ',', value_name = "P1,P2,...")]
    cliques: Option<Vec<usize>>,
    /// Number of lifts for `join-lift`.
    #[arg(long, default_value_t = 0)]
    ell: usize,
    /// Build sequence for `threshold`.
    #[arg(long)]
    seq: Option<String>,
    /// Base graph file for `dominating-lift`.
    #[arg(long)]
    base: Option<PathBuf>,
    /// For `dominating-lift`: the graph the base is saturated for.
    #[arg(long)]
    target: Option<PathBuf>,
    /// Also write the graph to this file and the JSON sidecar to `<out>.json`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Input => 2,
            ErrorKind::Capability => 3,
            ErrorKind::Internal => 1,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::input(e.to_string())
    }
}

struct Output {
    json: Value,
    summary: String,
}

impl Forbidden {
    fn resolve(&self) -> Result<Graph, CliError> {
        let given = [
            self.file.is_some(),
            self.clique.is_some(),
            self.star.is_some(),
            self.cliques.is_some(),
            self.seq.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            return Err(CliError::input("give exactly one graph: a file, --clique, --star, --cliques or --seq"));
        }
        if let Some(path) = &self.file {
            return Ok(read_graph_file(path)?);
        }
        if let Some(k) = self.clique {
            return Ok(Graph::complete(k));
        }
        if let Some(k) = self.star {
            return Ok(Graph::star(k));
        }
        if let Some(p) = &self.cliques {
            let union = satgraph_core::constructions::disjoint_cliques(p);
            return Ok(Graph::complete(self.ell.unwrap_or(0)).join(&union));
        }
        let seq = parse_seq(self.seq.as_deref().unwrap_or_default())?;
        Ok(threshold::build(&seq))
    }
}

fn parse_seq(s: &str) -> Result<ThresholdSequence, CliError> {
    s.parse().map_err(|e: Error| CliError::input(e.to_string()))
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::input(format!("invalid range `{s}`, expected a:b"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let (a, b) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn with_executor<T>(workers: usize, f: impl FnOnce(&dyn DynExec) -> T) -> Result<T, CliError> {
    if workers <= 1 {
        Ok(f(&Serial))
    } else {
        let par = Parallel::new(workers).map_err(|e| CliError { code: 1, message: e.to_string() })?;
        Ok(f(&par))
    }
}

/// Object-safe front for the two executors used by the CLI.
trait DynExec {
    fn sat_exact(&self, h: &Graph, n: usize) -> satgraph_core::Result<satgraph_core::SatResult>;
    fn probe(&self, h: &Graph, lo: usize, hi: usize) -> satgraph_core::Result<satgraph_core::SharpnessProbe>;
}

impl<E: Executor> DynExec for E {
    fn sat_exact(&self, h: &Graph, n: usize) -> satgraph_core::Result<satgraph_core::SatResult> {
        sat_exact_with(self, h, n)
    }

    fn probe(&self, h: &Graph, lo: usize, hi: usize) -> satgraph_core::Result<satgraph_core::SharpnessProbe> {
        sharpness_probe_with(self, h, lo, hi)
    }
}

fn cmd_weight(f: &Forbidden) -> Result<Output, CliError> {
    let h = f.resolve()?;
    let r = weight::weight_report(&h);
    let summary = format!("wt(H) = {} over {} edges", r.graph_weight, h.size());
    Ok(Output { json: report::weight(&h, &r), summary })
}

fn cmd_lower_bound(f: &Forbidden, n: Option<usize>, range: Option<&str>) -> Result<Output, CliError> {
    let h = f.resolve()?;
    let mut ns: Vec<usize> = n.into_iter().collect();
    if let Some(r) = range {
        let (a, b) = parse_range(r)?;
        ns.extend(a..=b);
    }
    let wt = weight::graph_weight(&h);
    let bound = weight::lower_bound(&h);
    let summary = match &bound {
        weight::SatLowerBound::Infinite => "H has no edges: sat(H, n) is infinite".to_string(),
        weight::SatLowerBound::Linear(b) => {
            format!("sat(H, n) >= {} n - {}", report::ratio(b.slope), report::ratio(b.constant))
        }
    };
    Ok(Output { json: report::lower_bound(wt, &bound, &ns), summary })
}

fn cmd_recognize(f: &Forbidden) -> Result<Output, CliError> {
    let g = f.resolve()?;
    let found = threshold::recognize_with_order(&g);
    let summary = match &found {
        Some((s, _)) => format!("threshold graph, sequence `{s}`"),
        None => "not a threshold graph".to_string(),
    };
    Ok(Output { json: report::recognition(&g, found.as_ref()), summary })
}

fn cmd_threshold_weight(f: &Forbidden) -> Result<Output, CliError> {
    let seq = match &f.seq {
        Some(s) if f.file.is_none() && f.clique.is_none() && f.star.is_none() && f.cliques.is_none() => parse_seq(s)?,
        _ => {
            let g = f.resolve()?;
            threshold::recognize(&g).ok_or_else(|| CliError::input("graph is not a threshold graph"))?
        }
    };
    let end = threshold::threshold_weight(&seq);
    let summary = format!("`{seq}`: wt = {}, satlim = {}", end.wt, end.satlim);
    Ok(Output { json: report::threshold_weight(&seq), summary })
}

fn cmd_construct(a: &ConstructArgs) -> Result<Output, CliError> {
    let need_n = || a.n.ok_or_else(|| CliError::input("--n is required for this construction"));
    let need_cliques =
        || a.cliques.clone().ok_or_else(|| CliError::input("--cliques is required for this construction"));
    let (graph, target, parameters, predicted, kind) = match a.kind {
        ConstructKind::DominatingLift => {
            let path = a.base.as_ref().ok_or_else(|| CliError::input("--base is required for dominating-lift"))?;
            let base = read_graph_file(path)?;
            let g = satgraph_core::constructions::dominating_lift(&base);
            if let Some(n) = a.n {
                if n != g.order() {
                    return Err(CliError::input(format!("--n {n} does not match the lifted order {}", g.order())));
                }
            }
            let target = a.target.as_deref().map(read_graph_file).transpose()?.map(|h| h.add_dominating());
            let predicted = (base.size() + base.order()) as u64;
            (g, target, json!({"base": path.display().to_string()}), predicted, "dominating-lift")
        }
        kind => {
            let n = need_n()?;
            let recipe = match kind {
                ConstructKind::CliquePartition => {
                    let k = a.k.ok_or_else(|| CliError::input("--k is required for clique-partition"))?;
                    Recipe::CliquePartition { k, n }
                }
                ConstructKind::DisjointCliques => Recipe::DisjointCliques { p: need_cliques()?, n },
                ConstructKind::JoinLift => Recipe::JoinLift { p: need_cliques()?, ell: a.ell, n },
                ConstructKind::Threshold => {
                    let s = a.seq.as_deref().ok_or_else(|| CliError::input("--seq is required for threshold"))?;
                    Recipe::Threshold { seq: parse_seq(s)?, n }
                }
                ConstructKind::DominatingLift => unreachable!(),
            };
            let parameters = match &recipe {
                Recipe::CliquePartition { k, .. } => json!({"k": k}),
                Recipe::DisjointCliques { p, .. } => json!({"cliques": p}),
                Recipe::JoinLift { p, ell, .. } => json!({"cliques": p, "ell": ell}),
                Recipe::Threshold { seq, .. } => json!({"seq": seq.to_string()}),
                Recipe::DominatingLift(_) => unreachable!(),
            };
            let g = recipe.build()?;
            (g, Some(recipe.target()?), parameters, recipe.predicted_edges()?, recipe.kind().name())
        }
    };
    let text = write_graph(&graph);
    let sidecar = json!({
        "kind": kind,
        "parameters": parameters,
        "n": graph.order(),
        "predicted_edges": predicted,
        "edges": graph.size(),
        "target": target.as_ref().map(report::GraphJson::from),
        "graph": text,
    });
    if let Some(out) = &a.out {
        write_file(out, &text)?;
        let mut side = out.clone().into_os_string();
        side.push(".json");
        write_file(Path::new(&side), &(serde_json::to_string_pretty(&sidecar).expect("plain data") + "\n"))?;
    }
    let summary = format!("{kind}: {} vertices, {} edges (predicted {predicted})", graph.order(), graph.size());
    Ok(Output { json: sidecar, summary })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError { code: 1, message: format!("{}: {e}", path.display()) })
}

fn cmd_verify(host: &Path, f: &Forbidden) -> Result<Output, CliError> {
    let g = read_graph_file(host)?;
    let h = f.resolve()?;
    let v = satgraph_core::verify_saturation(&g, &h)?;
    let summary = if v.is_saturated() {
        "saturated".to_string()
    } else if let Some((x, y)) = v.missing() {
        format!("H-free but not saturated: adding {x}-{y} creates no copy")
    } else {
        "not H-free".to_string()
    };
    Ok(Output { json: report::verdict(&v), summary })
}

fn cmd_sat_exact(f: &Forbidden, n: usize, workers: usize) -> Result<Output, CliError> {
    let h = f.resolve()?;
    let start = Instant::now();
    let r = with_executor(workers, |e| e.sat_exact(&h, n))??;
    let ms = start.elapsed().as_millis();
    let summary = format!("sat(H, {n}) = {} ({ms} ms, {} worker(s))", r.value, workers.max(1));
    Ok(Output { json: report::sat_exact(&r, ms), summary })
}

fn cmd_probe(f: &Forbidden, range: &str, workers: usize) -> Result<Output, CliError> {
    let h = f.resolve()?;
    let (lo, hi) = parse_range(range)?;
    let p = with_executor(workers, |e| e.probe(&h, lo, hi))??;
    let summary = format!("slopes {:?}, weight slope {}", p.successive_slopes, p.weight_slope);
    Ok(Output { json: report::probe(&p), summary })
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Weight(f) => cmd_weight(f),
        Command::LowerBound { forbidden, n, n_range } => cmd_lower_bound(forbidden, *n, n_range.as_deref()),
        Command::ThresholdRecognize(f) => cmd_recognize(f),
        Command::ThresholdWeight(f) => cmd_threshold_weight(f),
        Command::Construct(a) => cmd_construct(a),
        Command::Verify { host, forbidden } => cmd_verify(host, forbidden),
        Command::SatExact { forbidden, n, workers } => cmd_sat_exact(forbidden, *n, *workers),
        Command::Probe { forbidden, n_range, workers } => cmd_probe(forbidden, n_range, *workers),
    }
}

/// Runs the command line with explicit output streams; returns the exit
/// status.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() {
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.json);
            if !cli.json_only {
                let _ = writeln!(err, "{}", o.summary);
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
