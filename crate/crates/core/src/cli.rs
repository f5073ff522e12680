//! The `wlpa` command line. [`run`] does everything except touch the real
//! process: it takes the arguments and two writers and returns the exit code.
//!
//! Exit codes: 0 on success (including an `Unknown` verdict), 1 for domain
//! errors such as an invalid graph or a failed check, 2 for usage errors and
//! unparseable expressions.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::algebra::{
    Algebra, AlgebraElement, AlgebraError, AlgebraOptions, AlphaChoice, Field, DEFAULT_FUEL,
};
use crate::graph::{EliminationMode, GraphError, VertexSet, WeightedGraph};
use crate::monoid::{GraphMonoid, MonoidError, SearchLimits, WitnessStep, DEFAULT_DEPTH};
use crate::morita::{
    self, DecompositionResult, Growth, MoritaError, ProjectivePresentation, Realization,
};
use crate::sandpile::{self, SandpileError};

const AFTER_HELP: &str = "\
GRAPH FILES
  {\"vertices\": [\"v1\", \"v2\"],
   \"edges\": [{\"id\": \"e\", \"src\": \"v1\", \"dst\": \"v1\", \"weight\": 2}, ...]}
  Weights are positive integers. Unknown keys are rejected. Graphs are
  written back with sorted keys and no whitespace; vertex and edge order is
  kept.

ALGEBRA ELEMENTS  (reduce, multiply, involution)
  element := term (('+' | '-') term)*   or \"0\"
  term    := [coeff '*'] atom atom ...
  coeff   := integer | integer '/' integer
  atom    := vertex | edge '[' i ']' | edge '[' i ']' '*'
  Example: 1/2*e[1]* f[1] - v2. A trailing '*' stars the atom before it.

MONOID ELEMENTS  (monoid-equal)
  2*v1 + v2        nonnegative integer coefficients, no subtraction

MODULES AND SETS
  --module v1=2,v3=1   the projective module (Lv1)^2 + Lv3
  --set v1,v2          a set of vertices
  --lengths v1=3       head lengths for hair-ext (unlisted vertices get 1)

EXIT CODES
  0 success, including an Unknown verdict from a bounded search
  1 domain error: invalid graph, failed precondition, failed check
  2 usage error or unparseable expression";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "wlpa",
    version,
    about = "Symbolic computation for weighted Leavitt path algebras",
    after_long_help = AFTER_HELP
)]
pub struct Cli {
    /// Output format; json is compact with sorted keys.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Also write the resulting graph, as canonical JSON, to this file.
    #[arg(short = 'o', long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Search depth for monoid equality (relation applications).
    #[arg(long, default_value_t = DEFAULT_DEPTH, global = true)]
    pub depth: u32,
    /// Rewrite budget per reduction.
    #[arg(long, default_value_t = DEFAULT_FUEL, global = true)]
    pub fuel: u64,
    /// Work over the prime field F_p instead of the rationals.
    #[arg(long, global = true, value_name = "P")]
    pub modulus: Option<u64>,
    /// Override the special edge at some vertices, as `v=e,...`.
    #[arg(long, global = true, value_name = "V=E,...")]
    pub alpha: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a graph file is well formed.
    Validate { graph: PathBuf },
    /// Regular vertices, sinks, sources, and vertex weights.
    Classify { graph: PathBuf },
    /// Smallest hereditary saturated set containing the given vertices.
    Closure {
        graph: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Quotient graph by a hereditary set.
    Quotient {
        graph: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Matrix extension: a weight-1 head of length N-1 at every vertex.
    MatrixExt {
        graph: PathBuf,
        #[arg(short = 'n')]
        n: u32,
    },
    /// Hair extension with the given head lengths.
    HairExt {
        graph: PathBuf,
        #[arg(long)]
        lengths: String,
    },
    /// Delete a source and the edges it emits.
    SourceElim {
        graph: PathBuf,
        #[arg(short = 'v', long = "vertex")]
        vertex: String,
        /// Require a weight-1 non-sink source.
        #[arg(long)]
        strict: bool,
    },
    /// Normal form of an algebra element.
    Reduce {
        graph: PathBuf,
        #[arg(long)]
        expr: String,
    },
    /// Product of two algebra elements.
    Multiply {
        graph: PathBuf,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Image of an element under the involution.
    Involution {
        graph: PathBuf,
        #[arg(long)]
        expr: String,
    },
    /// Reduce every defining relation and report any nonzero residual.
    RelationsCheck { graph: PathBuf },
    /// Normal paths up to a length.
    Basis {
        graph: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Search for a proof that two monoid elements are equal.
    MonoidEqual {
        graph: PathBuf,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Smallest (m, n) with m copies of the algebra isomorphic to n copies.
    Type {
        graph: PathBuf,
        #[arg(long, default_value_t = 4)]
        m_max: u64,
        #[arg(long, default_value_t = 8)]
        n_max: u64,
    },
    /// Whether the sum of the given vertices is a full idempotent.
    FullIdempotent {
        graph: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Decompose a power of a projective module over the closure of its support.
    Decompose {
        graph: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// Check a claimed decomposition n·P = sum of n_v copies of Lv.
    VerifyDecomposition {
        graph: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(short = 'n')]
        n: BigUint,
        #[arg(long)]
        multiplicities: String,
    },
    /// Graph realizing a matrix algebra over End(P) for a generator P.
    RealizeEndomorphism {
        graph: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// Graph realizing a matrix algebra over the corner of a full vertex set.
    RealizeCorner {
        graph: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Matrix extension of size M, then the corner of a full set inside it.
    RealizeMorita {
        graph: PathBuf,
        #[arg(short = 'm')]
        m: u32,
        #[arg(long)]
        set: String,
    },
    /// Sandpile graphs.
    #[command(subcommand)]
    Sandpile(SandpileCommand),
}

#[derive(Debug, Subcommand)]
pub enum SandpileCommand {
    /// Sink, cycle-avoiding vertices, conicality, balanced weights.
    Analyze { graph: PathBuf },
    /// The quotient of the balanced graph by the cycle-avoiding vertices.
    AlgebraGraph { graph: PathBuf },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

macro_rules! domain_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain(e.to_string())
            }
        }
    )*};
}

domain_from!(GraphError, SandpileError);

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Parse(p) => CliError::Usage(p.to_string()),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<MonoidError> for CliError {
    fn from(e: MonoidError) -> Self {
        match e {
            MonoidError::Parse(p) => CliError::Usage(p.to_string()),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<MoritaError> for CliError {
    fn from(e: MoritaError) -> Self {
        match e {
            MoritaError::Monoid(m) => m.into(),
            e => CliError::Domain(e.to_string()),
        }
    }
}

/// What a command produced.
struct Report {
    text: String,
    json: Value,
    graph: Option<WeightedGraph>,
    code: i32,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            graph: None,
            code: 0,
        }
    }

    /// A command whose whole output is a graph.
    fn graph(g: WeightedGraph) -> Self {
        Report {
            text: g.to_json_pretty(),
            json: graph_value(&g),
            graph: Some(g),
            code: 0,
        }
    }
}

/// Parses the arguments, runs the command, and writes the result to `out`
/// and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            if let (Some(path), Some(g)) = (&cli.output, &report.graph) {
                if let Err(e) = std::fs::write(path, format!("{}\n", g.to_json())) {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    return 1;
                }
            }
            let body = match cli.format {
                Format::Text => report.text,
                Format::Json => report.json.to_string(),
            };
            let _ = writeln!(out, "{body}");
            report.code
        }
        Err(e) => {
            let (CliError::Usage(msg) | CliError::Domain(msg)) = &e;
            let _ = writeln!(err, "error: {msg}");
            e.code()
        }
    }
}

fn load(path: &FsPath) -> Result<WeightedGraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    WeightedGraph::from_json(&text)
        .map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

fn graph_value(g: &WeightedGraph) -> Value {
    serde_json::from_str(&g.to_json()).expect("own output is valid JSON")
}

fn set_value(s: &VertexSet) -> Value {
    Value::from(s.iter().collect::<Vec<_>>())
}

fn biguint_value(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(k) => json!(k),
        None => json!(n.to_string()),
    }
}

/// `k=v,k=v` into a map; every value must parse.
fn key_values<T: std::str::FromStr>(s: &str, what: &str) -> Result<BTreeMap<String, T>, CliError> {
    let mut out = BTreeMap::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("expected `name=value` in {what}, got `{part}`"))
        })?;
        let v = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad value in {what}: `{part}`")))?;
        if out.insert(k.trim().to_string(), v).is_some() {
            return Err(CliError::Usage(format!(
                "`{}` given twice in {what}",
                k.trim()
            )));
        }
    }
    Ok(out)
}

fn vertex_set(s: &str) -> VertexSet {
    s.parse().expect("infallible")
}

fn presentation(g: &WeightedGraph, s: &str) -> Result<ProjectivePresentation, CliError> {
    let m: BTreeMap<String, u64> = key_values(s, "--module")?;
    Ok(ProjectivePresentation::new(g, m)?)
}

fn algebra(cli: &Cli, g: &WeightedGraph) -> Result<Algebra, CliError> {
    let field = match cli.modulus {
        Some(p) => Field::prime(p).map_err(|e| CliError::Usage(e.to_string()))?,
        None => Field::Rational,
    };
    let alpha = match &cli.alpha {
        Some(s) => {
            let overrides: BTreeMap<String, String> = key_values(s, "--alpha")?;
            Some(
                AlphaChoice::with_overrides(g, &overrides)
                    .map_err(|e| CliError::Usage(e.to_string()))?,
            )
        }
        None => None,
    };
    Ok(Algebra::with_options(
        g,
        AlgebraOptions {
            field,
            alpha,
            fuel: cli.fuel,
        },
    )?)
}

fn parse_element(a: &Algebra, s: &str) -> Result<AlgebraElement, CliError> {
    a.parse(s).map_err(|e| match e {
        AlgebraError::Parse(p) => CliError::Usage(p.render(s)),
        e => e.into(),
    })
}

fn element_report(a: &Algebra, x: &AlgebraElement) -> Report {
    let terms: Vec<Value> = a
        .sorted_terms(x)
        .into_iter()
        .map(|(p, c)| json!({"coefficient": c.to_string(), "path": a.format_path(p)}))
        .collect();
    let text = a.format(x);
    Report::new(text.clone(), json!({"normal_form": text, "terms": terms}))
}

fn witness_json(m: &GraphMonoid, w: &[WitnessStep]) -> Vec<Value> {
    w.iter()
        .enumerate()
        .map(|(i, s)| {
            let result = m
                .apply(&s.at, s.vertex, s.direction)
                .expect("replayed witness");
            json!({
                "step": i + 1,
                "vertex": m.graph().vertex_id(s.vertex),
                "direction": s.direction.as_str(),
                "at": m.format(&s.at),
                "result": m.format(&result),
            })
        })
        .collect()
}

fn witness_text(m: &GraphMonoid, w: &[WitnessStep]) -> String {
    let mut out = String::new();
    for (i, s) in w.iter().enumerate() {
        let result = m
            .apply(&s.at, s.vertex, s.direction)
            .expect("replayed witness");
        out.push_str(&format!(
            "\n  {}. {} at {}: {} -> {}",
            i + 1,
            s.direction.as_str(),
            m.graph().vertex_id(s.vertex),
            m.format(&s.at),
            m.format(&result)
        ));
    }
    out
}

fn map_text<T: std::fmt::Display>(m: &BTreeMap<String, T>) -> String {
    m.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn decomposition_parts(
    g: &WeightedGraph,
    d: &DecompositionResult,
) -> Result<(String, Value), CliError> {
    let m = GraphMonoid::new(g).map_err(CliError::from)?;
    let steps: Vec<Value> = d
        .steps
        .iter()
        .map(|s| match &s.growth {
            Growth::Hereditary { from, edge } => json!({
                "vertex": s.vertex, "kind": "hereditary", "from": from, "edge": edge, "factor": s.factor
            }),
            Growth::Saturated => json!({"vertex": s.vertex, "kind": "saturated", "factor": s.factor}),
        })
        .collect();
    let text = format!(
        "n = {}\nmultiplicities: {}\nscaling factors: {}\nwitness: {} steps{}",
        d.n,
        map_text(&d.multiplicities),
        d.steps
            .iter()
            .map(|s| format!("{}×{}", s.vertex, s.factor))
            .collect::<Vec<_>>()
            .join(" "),
        d.witness.len(),
        witness_text(&m, &d.witness)
    );
    let json = json!({
        "n": biguint_value(&d.n),
        "multiplicities": d.multiplicities,
        "steps": steps,
        "witness": witness_json(&m, &d.witness),
    });
    Ok((text, json))
}

fn realization_report(g: &WeightedGraph, r: Realization) -> Result<Report, CliError> {
    let (text, mut json) = decomposition_parts(g, &r.decomposition)?;
    json["hair_lengths"] = json!(r.hair_lengths);
    json["graph"] = graph_value(&r.graph);
    let text = format!(
        "{text}\nhair lengths: {}\ngraph:\n{}",
        map_text(&r.hair_lengths),
        r.graph.to_json_pretty()
    );
    Ok(Report {
        text,
        json,
        graph: Some(r.graph),
        code: 0,
    })
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let produces_graph = matches!(
        cli.command,
        Command::Quotient { .. }
            | Command::MatrixExt { .. }
            | Command::HairExt { .. }
            | Command::SourceElim { .. }
            | Command::RealizeEndomorphism { .. }
            | Command::RealizeCorner { .. }
            | Command::RealizeMorita { .. }
            | Command::Sandpile(SandpileCommand::AlgebraGraph { .. })
    );
    if cli.output.is_some() && !produces_graph {
        return Err(CliError::Usage(
            "-o only applies to commands that produce a graph".into(),
        ));
    }
    let limits = SearchLimits::depth(cli.depth);

    Ok(match &cli.command {
        Command::Validate { graph } => {
            let g = load(graph)?;
            Report::new(
                format!(
                    "valid: {} vertices, {} edges",
                    g.vertex_count(),
                    g.edge_count()
                ),
                json!({"valid": true, "vertices": g.vertex_count(), "edges": g.edge_count()}),
            )
        }
        Command::Classify { graph } => {
            let g = load(graph)?;
            let c = g.classify();
            let text = format!(
                "regular: {}\nsinks: {}\nsources: {}\nweights: {}\nvertex weighted: {}\nbalanced: {}",
                c.regular,
                c.sinks,
                c.sources,
                map_text(c.weights()),
                g.is_vertex_weighted(),
                g.is_balanced()
            );
            Report::new(
                text,
                json!({
                    "regular": set_value(&c.regular),
                    "sinks": set_value(&c.sinks),
                    "sources": set_value(&c.sources),
                    "weights": c.weights(),
                    "vertex_weighted": g.is_vertex_weighted(),
                    "balanced": g.is_balanced(),
                }),
            )
        }
        Command::Closure { graph, set } => {
            let g = load(graph)?;
            let x = vertex_set(set);
            let closure = g.hereditary_saturated_closure(&x)?;
            let layers = g.closure_layers(&x)?;
            let mut text = format!("closure: {closure}");
            for (i, l) in layers.iter().enumerate() {
                text.push_str(&format!(
                    "\nround {}: hereditary {{{}}} saturated {{{}}}",
                    i + 1,
                    l.hereditary.join(","),
                    l.saturated.join(",")
                ));
            }
            let layers: Vec<Value> = layers
                .iter()
                .map(|l| json!({"hereditary": l.hereditary, "saturated": l.saturated}))
                .collect();
            Report::new(
                text,
                json!({"closure": set_value(&closure), "rounds": layers}),
            )
        }
        Command::Quotient { graph, set } => {
            Report::graph(load(graph)?.quotient_graph(&vertex_set(set))?)
        }
        Command::MatrixExt { graph, n } => Report::graph(load(graph)?.matrix_extension(*n)?),
        Command::HairExt { graph, lengths } => {
            let g = load(graph)?;
            let given: BTreeMap<String, u32> = key_values(lengths, "--lengths")?;
            let mut all: BTreeMap<String, u32> =
                g.vertices().iter().map(|v| (v.clone(), 1)).collect();
            for (k, v) in given {
                g.vertex(&k).ok_or(GraphError::UnknownVertex(k.clone()))?;
                all.insert(k, v);
            }
            Report::graph(g.hair_extension(&all)?)
        }
        Command::SourceElim {
            graph,
            vertex,
            strict,
        } => {
            let mode = if *strict {
                EliminationMode::Strict
            } else {
                EliminationMode::Plain
            };
            Report::graph(load(graph)?.source_elimination(vertex, mode)?)
        }
        Command::Reduce { graph, expr } => {
            let a = algebra(cli, &load(graph)?)?;
            let x = parse_element(&a, expr)?;
            element_report(&a, &x)
        }
        Command::Multiply { graph, lhs, rhs } => {
            let a = algebra(cli, &load(graph)?)?;
            let x = parse_element(&a, lhs)?;
            let y = parse_element(&a, rhs)?;
            element_report(&a, &a.multiply(&x, &y)?)
        }
        Command::Involution { graph, expr } => {
            let a = algebra(cli, &load(graph)?)?;
            let x = parse_element(&a, expr)?;
            element_report(&a, &a.involution(&x)?)
        }
        Command::RelationsCheck { graph } => {
            let a = algebra(cli, &load(graph)?)?;
            let residuals = a.relation_residuals()?;
            let bad: Vec<_> = residuals.iter().filter(|r| !r.value.is_zero()).collect();
            let mut text = if bad.is_empty() {
                format!("all {} relations reduce to 0", residuals.len())
            } else {
                format!(
                    "{} of {} relations do not reduce to 0:",
                    bad.len(),
                    residuals.len()
                )
            };
            for r in &bad {
                text.push_str(&format!("\n  {}: {}", r.relation, a.format(&r.value)));
            }
            let nonzero: Vec<Value> = bad
                .iter()
                .map(|r| json!({"relation": r.relation, "value": a.format(&r.value)}))
                .collect();
            let mut report = Report::new(
                text,
                json!({"checked": residuals.len(), "nonzero": nonzero}),
            );
            report.code = if bad.is_empty() { 0 } else { 1 };
            report
        }
        Command::Basis { graph, max_len } => {
            let a = algebra(cli, &load(graph)?)?;
            let paths: Vec<String> = a
                .enumerate_normal_paths(*max_len)
                .iter()
                .map(|p| a.format_path(p))
                .collect();
            let counts = a.normal_path_counts(*max_len);
            Report::new(paths.join("\n"), json!({"counts": counts, "paths": paths}))
        }
        Command::MonoidEqual { graph, lhs, rhs } => {
            let m = GraphMonoid::new(&load(graph)?)?;
            let x = m.parse(lhs)?;
            let y = m.parse(rhs)?;
            let c = m.equal_with(&x, &y, limits)?;
            let verdict = if c.is_equal() { "Equal" } else { "Unknown" };
            let mut text = verdict.to_string();
            if c.is_equal() {
                text.push_str(&witness_text(&m, &c.witness));
            }
            Report::new(
                text,
                json!({
                    "verdict": verdict,
                    "witness": witness_json(&m, &c.witness),
                    "explored": c.explored,
                    "exhausted": c.exhausted,
                }),
            )
        }
        Command::Type {
            graph,
            m_max,
            n_max,
        } => {
            let m = GraphMonoid::new(&load(graph)?)?;
            match m.algebra_type(*m_max, *n_max, limits)? {
                Some(t) => Report::new(
                    format!("({}, {})", t.m, t.n),
                    json!({"verdict": "Found", "type": [t.m, t.n]}),
                ),
                None => Report::new("Unknown", json!({"verdict": "Unknown", "type": null})),
            }
        }
        Command::FullIdempotent { graph, set } => {
            let g = load(graph)?;
            let m = GraphMonoid::new(&g)?;
            let w = vertex_set(set);
            let full = m.is_full_vertex_idempotent(&w)?;
            let closure = g.hereditary_saturated_closure(&w)?;
            Report::new(
                full.to_string(),
                json!({"full": full, "closure": set_value(&closure)}),
            )
        }
        Command::Decompose { graph, module } => {
            let g = load(graph)?;
            let d = morita::decompose_progenerator(&g, &presentation(&g, module)?)?;
            let (text, json) = decomposition_parts(&g, &d)?;
            Report::new(text, json)
        }
        Command::VerifyDecomposition {
            graph,
            module,
            n,
            multiplicities,
        } => {
            let g = load(graph)?;
            let p = presentation(&g, module)?;
            let mults: BTreeMap<String, u64> = key_values(multiplicities, "--multiplicities")?;
            for k in mults.keys() {
                g.vertex(k).ok_or(GraphError::UnknownVertex(k.clone()))?;
            }
            let ok = morita::verify_decomposition(&g, &p, n, &mults, cli.depth)?;
            Report::new(
                if ok { "accepted" } else { "not accepted" },
                json!({"accepted": ok}),
            )
        }
        Command::RealizeEndomorphism { graph, module } => {
            let g = load(graph)?;
            let r = morita::endomorphism_realization(&g, &presentation(&g, module)?)?;
            realization_report(&g, r)?
        }
        Command::RealizeCorner { graph, set } => {
            let g = load(graph)?;
            let r = morita::corner_realization(&g, &vertex_set(set))?;
            realization_report(&g, r)?
        }
        Command::RealizeMorita { graph, m, set } => {
            let g = load(graph)?;
            let r = morita::morita_realization_pipeline(&g, *m, &vertex_set(set))?;
            realization_report(&morita::matrix_realization(&g, *m)?, r)?
        }
        Command::Sandpile(SandpileCommand::Analyze { graph }) => {
            let r = sandpile::analyze_sandpile(&load(graph)?)?;
            let text = format!(
                "sandpile: {}\nsink: {}\ncycle-avoiding: {}\nconical: {}\nbalanced:\n{}",
                r.is_sandpile,
                r.sink.as_deref().unwrap_or("none"),
                r.s_e,
                r.is_conical,
                r.balanced.to_json_pretty()
            );
            Report::new(
                text,
                json!({
                    "sandpile": r.is_sandpile,
                    "sink": r.sink,
                    "cycle_avoiding": set_value(&r.s_e),
                    "conical": r.is_conical,
                    "balanced": graph_value(&r.balanced),
                }),
            )
        }
        Command::Sandpile(SandpileCommand::AlgebraGraph { graph }) => {
            let q = sandpile::sandpile_algebra_graph(&load(graph)?)?;
            let mut report = Report::graph(q.clone());
            if q.is_empty() {
                report.text = format!("{}\n(empty: every vertex avoids cycles)", report.text);
            }
            report
        }
    })
}
