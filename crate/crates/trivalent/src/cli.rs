//! The `trivalent` command line.
//!
//! Every subcommand prints one JSON report: a manifest (command,
//! parameters, seed, version, input digests) followed by the result. Numbers
//! are exact rationals written `num/den`. Reports depend only on the
//! manifest, so repeated runs are byte-identical; the wall-clock duration is
//! added only under `--timing`.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use trivalent_core::complex::{self, GradedBasis};
use trivalent_core::diagram::{self, Relations};
use trivalent_core::lie::{self, MetrizedLieAlgebra, ValidatedAlgebra};
use trivalent_core::linalg::RankCertificate;
use trivalent_core::symplectic::{self, HamElement, SymplecticSpace};
use trivalent_core::{generate_trivalent, orientation_from_cyclic, OrientedGraph, Rational};
use serde_json::{json, Map, Value};

use crate::cache::{sha256_hex, Cache, CacheStatus, Lookup, CACHE_ENV};
use crate::format::{self, nat, rat, FormatError};
use crate::sampling;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Limits enforced on user input.
pub const MAX_GEN_VERTICES: usize = trivalent_core::graph::MAX_GENERATED_VERTICES;
pub const MAX_DIMS_VERTICES: usize = diagram::MAX_DIAGRAM_VERTICES;
pub const MAX_HALF_DIMENSION: usize = 3;
pub const MAX_COCHAIN_VERTICES: usize = 6;
pub const MAX_WEIGHT_VERTICES: usize = 10;
pub const MAX_TRUNCATION: u32 = 12;
pub const MAX_SAMPLES: usize = 10_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "trivalent", version, about = "Graph spaces, graph homology and graph weight systems, computed exactly")]
struct Cli {
    /// Cache directory (default: $TRIVALENT_CACHE_DIR; no caching when unset).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Ignore any configured cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Print a flat human-readable listing instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Record the wall-clock duration in the manifest.
    #[arg(long, global = true)]
    timing: bool,
    /// Worker threads for sampled checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Connectivity {
    /// Connected graphs only (default).
    #[arg(long, conflicts_with = "all")]
    connected: bool,
    /// All graphs, connected or not.
    #[arg(long)]
    all: bool,
}

impl Connectivity {
    fn connected(self) -> bool {
        !self.all
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct TadpoleFlag {
    /// Exclude tadpoles (default).
    #[arg(long, conflicts_with = "tadpoles")]
    no_tadpoles: bool,
    /// Allow tadpoles.
    #[arg(long)]
    tadpoles: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum RelationsArg {
    As,
    AsIhx,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum CheckKind {
    Cocycle,
    Sp,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate trivalent graphs up to isomorphism.
    Gen {
        #[arg(long)]
        vertices: usize,
        #[command(flatten)]
        connectivity: Connectivity,
        #[command(flatten)]
        tadpoles: TadpoleFlag,
    },
    /// Dimension of the space of trivalent graphs modulo AS or AS and IHX.
    Dims {
        #[arg(long)]
        vertices: usize,
        #[arg(long, value_enum, default_value = "as-ihx")]
        relations: RelationsArg,
        #[command(flatten)]
        connectivity: Connectivity,
        /// Also write the relation matrix as JSON to this path.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Homology of the graph complex at one loop order.
    GcHomology {
        #[arg(long)]
        loops: usize,
        /// Also write the differential matrices as JSON to this path.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Lie algebra weight of a trivalent graph with cyclic orders.
    Weight {
        #[arg(long)]
        graph: PathBuf,
        /// so3, sl2, or the path of an algebra document.
        #[arg(long)]
        algebra: String,
    },
    /// Evaluate the graph cochain and check its properties on seeded samples.
    HamCochain {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        /// Truncation degree of the Hamiltonians.
        #[arg(long, default_value_t = symplectic::DEFAULT_TRUNCATION)]
        degree: u32,
        #[arg(long, value_enum)]
        check: Option<CheckKind>,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Hamiltonian documents to evaluate the cochain on (one per vertex).
        #[arg(long)]
        ham: Vec<PathBuf>,
    },
    /// Check the axioms of a metrized Lie algebra.
    ValidateAlgebra {
        /// so3, sl2, or the path of an algebra document.
        #[arg(long)]
        algebra: String,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub code: i32,
    pub stdout: String,
    pub cache: CacheStatus,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("invariant violated: {message}")]
    Invariant { message: String, witness: Value },
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<trivalent_core::Error> for CliError {
    fn from(e: trivalent_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn input<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Input(msg.into()))
}

/// Documents read by a command, with their digests.
#[derive(Default)]
struct Inputs {
    digests: Map<String, Value>,
}

impl Inputs {
    fn read(&mut self, role: &str, path: &Path) -> Result<String, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        self.digests.insert(role.to_string(), Value::String(format!("sha256:{}", sha256_hex(text.as_bytes()))));
        Ok(text)
    }
}

/// Parses `argv` (program name first) and runs the command. Reads the cache
/// directory default from the environment.
pub fn run<I, T>(argv: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_cache_default(argv, std::env::var_os(CACHE_ENV).map(PathBuf::from))
}

/// As [`run`], with the environment's cache default passed explicitly.
pub fn run_with_cache_default<I, T>(argv: I, env_cache: Option<PathBuf>) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                eprint!("{text}");
                return RunOutcome { code, stdout: String::new(), cache: CacheStatus::Disabled };
            }
            return RunOutcome { code, stdout: text, cache: CacheStatus::Disabled };
        }
    };
    let started = Instant::now();
    let pool = match cli.threads {
        Some(0) => {
            eprintln!("error: --threads must be positive");
            return RunOutcome { code: EXIT_INPUT, stdout: String::new(), cache: CacheStatus::Disabled };
        }
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(p) => Some(p),
            Err(e) => {
                eprintln!("error: cannot start thread pool: {e}");
                return RunOutcome { code: EXIT_INPUT, stdout: String::new(), cache: CacheStatus::Disabled };
            }
        },
        None => None,
    };
    let outcome = match &pool {
        Some(p) => p.install(|| execute(&cli, env_cache)),
        None => execute(&cli, env_cache),
    };
    let (manifest, result, cache) = match outcome.map_err(|b| *b) {
        Ok(x) => x,
        Err((_, CliError::Input(msg))) => {
            eprintln!("error: {msg}");
            return RunOutcome { code: EXIT_INPUT, stdout: String::new(), cache: CacheStatus::Disabled };
        }
        Err((mut manifest, CliError::Invariant { message, witness })) => {
            log::error!("invariant violated: {message}");
            add_timing(&cli, &mut manifest, started);
            let report = json!({ "manifest": manifest, "violation": { "message": message, "witness": witness } });
            return RunOutcome { code: EXIT_INVARIANT, stdout: render(&report, cli.pretty), cache: CacheStatus::Disabled };
        }
    };
    let mut manifest = manifest;
    add_timing(&cli, &mut manifest, started);
    let report = json!({ "manifest": manifest, "result": result });
    RunOutcome { code: EXIT_OK, stdout: render(&report, cli.pretty), cache }
}

fn add_timing(cli: &Cli, manifest: &mut Value, started: Instant) {
    if cli.timing {
        manifest["duration_ms"] = nat(started.elapsed().as_millis() as usize);
    }
}

type Executed = Result<(Value, Value, CacheStatus), Box<(Value, CliError)>>;

fn execute(cli: &Cli, env_cache: Option<PathBuf>) -> Executed {
    let mut inputs = Inputs::default();
    let (name, params, seed) = describe(&cli.command);
    let bare_manifest = |inputs: &Inputs| {
        json!({
            "command": name,
            "parameters": params,
            "seed": seed.map_or(Value::Null, |s| Value::String(format!("{s}/1"))),
            "version": VERSION,
            "inputs": Value::Object(inputs.digests.clone()),
        })
    };
    // Input documents are read up front so their digests enter the cache key.
    let loaded = match load_inputs(&cli.command, &mut inputs) {
        Ok(l) => l,
        Err(e) => return Err(Box::new((bare_manifest(&inputs), e))),
    };
    let manifest = bare_manifest(&inputs);

    let exports = matches!(&cli.command, Command::Dims { export: Some(_), .. } | Command::GcHomology { export: Some(_), .. });
    let cache = if cli.no_cache || exports {
        None
    } else {
        match cli.cache_dir.clone().or(env_cache) {
            Some(dir) => match Cache::open(&dir) {
                Ok(c) => Some(c),
                Err(e) => {
                    log::warn!("cache directory {} unusable ({e}); continuing without cache", dir.display());
                    None
                }
            },
            None => None,
        }
    };
    let key = Cache::key(&manifest);
    if let Some(c) = &cache {
        match c.lookup(&key) {
            Lookup::Hit(body) => match serde_json::from_str::<Value>(&body) {
                Ok(result) => {
                    log::info!("cache hit {key}");
                    return Ok((manifest, result, CacheStatus::Hit));
                }
                Err(e) => log::warn!("cache entry {key} holds invalid JSON ({e}); recomputing"),
            },
            Lookup::Corrupted(why) => {
                log::warn!("cache entry {key} is corrupted ({why}); recomputing");
                let result = compute(&cli.command, loaded).map_err(|e| Box::new((manifest.clone(), e)))?;
                store(c, &key, &result);
                return Ok((manifest, result, CacheStatus::Corrupted));
            }
            Lookup::Miss => log::info!("cache miss {key}"),
        }
    }
    let result = compute(&cli.command, loaded).map_err(|e| Box::new((manifest.clone(), e)))?;
    match &cache {
        Some(c) => {
            store(c, &key, &result);
            Ok((manifest, result, CacheStatus::Miss))
        }
        None => Ok((manifest, result, CacheStatus::Disabled)),
    }
}

fn store(cache: &Cache, key: &str, result: &Value) {
    if let Err(e) = cache.store(key, &result.to_string()) {
        log::warn!("could not write cache entry {key}: {e}");
    }
}

fn describe(cmd: &Command) -> (&'static str, Value, Option<u64>) {
    let flag = |b: bool, yes: &str, no: &str| Value::String(if b { yes } else { no }.into());
    match cmd {
        Command::Gen { vertices, connectivity, tadpoles } => (
            "gen",
            json!({
                "vertices": nat(*vertices),
                "connectivity": flag(connectivity.connected(), "connected", "all"),
                "tadpoles": flag(tadpoles.tadpoles, "allowed", "excluded"),
            }),
            None,
        ),
        Command::Dims { vertices, relations, connectivity, .. } => (
            "dims",
            json!({
                "vertices": nat(*vertices),
                "relations": flag(*relations == RelationsArg::As, "as", "as-ihx"),
                "connectivity": flag(connectivity.connected(), "connected", "all"),
            }),
            None,
        ),
        Command::GcHomology { loops, .. } => ("gc-homology", json!({ "loops": nat(*loops) }), None),
        Command::Weight { algebra, .. } => ("weight", json!({ "algebra": algebra_label(algebra) }), None),
        Command::HamCochain { n, degree, check, samples, seed, ham, .. } => (
            "ham-cochain",
            json!({
                "n": nat(*n),
                "degree": nat(*degree as usize),
                "check": match check {
                    Some(CheckKind::Cocycle) => json!("cocycle"),
                    Some(CheckKind::Sp) => json!("sp"),
                    None => Value::Null,
                },
                "samples": nat(*samples),
                "hamiltonians": nat(ham.len()),
            }),
            Some(*seed),
        ),
        Command::ValidateAlgebra { algebra } => ("validate-algebra", json!({ "algebra": algebra_label(algebra) }), None),
    }
}

fn algebra_label(a: &str) -> &str {
    match a {
        "so3" | "sl2" => a,
        _ => "document",
    }
}

enum Loaded {
    None,
    Weight(format::ParsedGraph, AlgebraSource),
    Cochain(format::ParsedGraph, Vec<(usize, trivalent_core::poly::Polynomial)>),
    Algebra(AlgebraSource),
}

enum AlgebraSource {
    Preset(&'static str, MetrizedLieAlgebra),
    Document(MetrizedLieAlgebra),
}

impl AlgebraSource {
    fn algebra(&self) -> &MetrizedLieAlgebra {
        match self {
            AlgebraSource::Preset(_, a) | AlgebraSource::Document(a) => a,
        }
    }
}

fn load_algebra(name: &str, inputs: &mut Inputs) -> Result<AlgebraSource, CliError> {
    match name {
        "so3" => Ok(AlgebraSource::Preset("so3", MetrizedLieAlgebra::so3())),
        "sl2" => Ok(AlgebraSource::Preset("sl2", MetrizedLieAlgebra::sl2())),
        path => Ok(AlgebraSource::Document(format::parse_algebra(&inputs.read("algebra", Path::new(path))?)?)),
    }
}

fn load_inputs(cmd: &Command, inputs: &mut Inputs) -> Result<Loaded, CliError> {
    match cmd {
        Command::Weight { graph, algebra } => {
            let g = format::parse_graph(&inputs.read("graph", graph)?)?;
            Ok(Loaded::Weight(g, load_algebra(algebra, inputs)?))
        }
        Command::HamCochain { graph, ham, .. } => {
            let g = format::parse_graph(&inputs.read("graph", graph)?)?;
            let mut hams = Vec::with_capacity(ham.len());
            for (i, path) in ham.iter().enumerate() {
                hams.push(format::parse_hamiltonian(&inputs.read(&format!("ham{i}"), path)?)?);
            }
            Ok(Loaded::Cochain(g, hams))
        }
        Command::ValidateAlgebra { algebra } => Ok(Loaded::Algebra(load_algebra(algebra, inputs)?)),
        _ => Ok(Loaded::None),
    }
}

fn certificate(c: &RankCertificate) -> Value {
    json!({ "exact": nat(c.exact), "modular": nat(c.modular) })
}

fn check_certificate(c: &RankCertificate, what: &str) -> Result<(), CliError> {
    if c.consistent() {
        Ok(())
    } else {
        Err(CliError::Invariant {
            message: format!("exact and modular ranks of {what} differ"),
            witness: certificate(c),
        })
    }
}

fn compute(cmd: &Command, loaded: Loaded) -> Result<Value, CliError> {
    match (cmd, loaded) {
        (Command::Gen { vertices, connectivity, tadpoles }, _) => gen(*vertices, connectivity.connected(), tadpoles.tadpoles),
        (Command::Dims { vertices, relations, connectivity, export }, _) => {
            dims(*vertices, *relations, connectivity.connected(), export.as_deref())
        }
        (Command::GcHomology { loops, export }, _) => gc_homology(*loops, export.as_deref()),
        (Command::Weight { .. }, Loaded::Weight(g, alg)) => weight(g, alg),
        (Command::HamCochain { n, degree, check, samples, seed, .. }, Loaded::Cochain(g, hams)) => {
            ham_cochain(g, hams, *n, *degree, *check, *samples, *seed)
        }
        (Command::ValidateAlgebra { .. }, Loaded::Algebra(alg)) => Ok(validate(alg)),
        _ => unreachable!("inputs are loaded per command"),
    }
}

fn gen(vertices: usize, connected: bool, tadpoles: bool) -> Result<Value, CliError> {
    if vertices > MAX_GEN_VERTICES {
        return input(format!("--vertices must be at most {MAX_GEN_VERTICES}"));
    }
    let graphs = generate_trivalent(vertices, connected, tadpoles)?;
    Ok(json!({
        "count": nat(graphs.len()),
        "graphs": graphs.iter().map(|g| g.serialization()).collect::<Vec<_>>(),
    }))
}

fn write_export(path: &Path, value: &Value) -> Result<(), CliError> {
    fs::write(path, format!("{value}\n")).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn dims(vertices: usize, relations: RelationsArg, connected: bool, export: Option<&Path>) -> Result<Value, CliError> {
    if vertices > MAX_DIMS_VERTICES {
        return input(format!("--vertices must be at most {MAX_DIMS_VERTICES}"));
    }
    let rm = diagram::relation_matrix(vertices, connected)?;
    let classes = rm.columns.len();
    let (rank, rows) = match relations {
        RelationsArg::As => (RankCertificate { exact: 0, modular: 0 }, 0),
        RelationsArg::AsIhx => (rm.rank(), rm.matrix.num_rows()),
    };
    check_certificate(&rank, "the IHX relation matrix")?;
    let relations_core = match relations {
        RelationsArg::As => Relations::As,
        RelationsArg::AsIhx => Relations::AsIhx,
    };
    let dimension = classes - rank.exact;
    let direct = diagram::space_dimension(vertices, relations_core, connected)?;
    if direct != dimension {
        return Err(CliError::Invariant {
            message: "dimension disagrees with an independent recomputation".into(),
            witness: json!({ "from_matrix": nat(dimension), "recomputed": nat(direct) }),
        });
    }
    if let Some(path) = export {
        write_export(path, &format::relation_matrix_export(&rm))?;
    }
    Ok(json!({
        "dimension": nat(dimension),
        "as_classes": nat(classes),
        "relation_rows": nat(rows),
        "relation_rank": certificate(&rank),
    }))
}

fn gc_homology(loops: usize, export: Option<&Path>) -> Result<Value, CliError> {
    if !(complex::MIN_LOOP_ORDER..=complex::MAX_LOOP_ORDER).contains(&loops) {
        return input(format!(
            "--loops must be in {}..={}",
            complex::MIN_LOOP_ORDER,
            complex::MAX_LOOP_ORDER
        ));
    }
    let basis = GradedBasis::new(loops);
    let graphs: Vec<_> = basis.levels.values().flatten().collect();
    let failures: Vec<_> = graphs.par_iter().filter_map(|g| complex::check_d_squared(g).err().map(|_| g.serialization())).collect();
    if let Some(first) = failures.first() {
        return Err(CliError::Invariant { message: "d∘d is not zero".into(), witness: json!({ "graph": first }) });
    }
    let report = complex::homology_from_basis(&basis);
    for (v, c) in &report.ranks {
        check_certificate(c, &format!("the differential at {v} vertices"))?;
    }
    let top = basis.top_vertices();
    let ihx = diagram::space_dimension(top, Relations::AsIhx, true)?;
    if report.homology[&top] != ihx {
        return Err(CliError::Invariant {
            message: "top homology differs from the AS+IHX dimension".into(),
            witness: json!({ "vertices": nat(top), "homology": nat(report.homology[&top]), "ihx_dimension": nat(ihx) }),
        });
    }
    if let Some(path) = export {
        let mut out = Map::new();
        for (&v, level) in &basis.levels {
            if v > 1 {
                let m = complex::differential_matrix(level, basis.level(v - 1));
                let mut entry = format::matrix_export(basis.level(v - 1), &m);
                entry["row_graphs"] = json!(level.iter().map(|g| g.serialization()).collect::<Vec<_>>());
                out.insert(v.to_string(), entry);
            }
        }
        write_export(path, &Value::Object(out))?;
    }
    let by_v = |f: &dyn Fn(usize) -> Value| -> Value {
        Value::Object(basis.levels.keys().map(|&v| (v.to_string(), f(v))).collect())
    };
    Ok(json!({
        "loop_order": nat(loops),
        "basis_sizes": by_v(&|v| nat(report.basis_sizes[&v])),
        "ranks": by_v(&|v| certificate(&report.ranks[&v])),
        "homology": by_v(&|v| nat(report.homology[&v])),
        "d_squared_checked": nat(graphs.len()),
        "top_vertices": nat(top),
        "ihx_dimension": nat(ihx),
    }))
}

fn validated(source: &AlgebraSource) -> Result<ValidatedAlgebra, CliError> {
    ValidatedAlgebra::new(source.algebra().clone()).map_err(|e| CliError::Input(format!("algebra rejected: {e}")))
}

fn weight(g: format::ParsedGraph, alg: AlgebraSource) -> Result<Value, CliError> {
    if g.graph.num_vertices() > MAX_WEIGHT_VERTICES {
        return input(format!("weights are supported up to {MAX_WEIGHT_VERTICES} vertices"));
    }
    let Some(cyc) = g.cyclic else {
        return input("graph document has no cyclic_orders; weights need them");
    };
    let a = validated(&alg)?;
    let value = lie::lie_weight(&g.graph, &cyc, &a)?;
    Ok(json!({ "graph": g.graph.serialization(), "value": rat(&value) }))
}

fn ham_cochain(
    g: format::ParsedGraph,
    hams: Vec<(usize, trivalent_core::poly::Polynomial)>,
    n: usize,
    degree: u32,
    check: Option<CheckKind>,
    samples: usize,
    seed: u64,
) -> Result<Value, CliError> {
    if n == 0 || n > MAX_HALF_DIMENSION {
        return input(format!("--n must be in 1..={MAX_HALF_DIMENSION}"));
    }
    if !(3..=MAX_TRUNCATION).contains(&degree) {
        return input(format!("--degree must be in 3..={MAX_TRUNCATION}"));
    }
    if samples == 0 || samples > MAX_SAMPLES {
        return input(format!("--samples must be in 1..={MAX_SAMPLES}"));
    }
    if check.is_none() && hams.is_empty() {
        return input("nothing to do: pass --check and/or --ham documents");
    }
    let graph = &g.graph;
    if !graph.is_trivalent() {
        return input("the graph must be trivalent");
    }
    if graph.num_vertices() > MAX_COCHAIN_VERTICES {
        return input(format!("cochains are supported up to {MAX_COCHAIN_VERTICES} vertices"));
    }
    let space = SymplecticSpace::new(n)?;
    let (orientation, source) = match &g.cyclic {
        Some(c) => (orientation_from_cyclic(graph, c)?, "cyclic_orders"),
        None => (trivalent_core::Orientation::standard(graph), "standard"),
    };
    let og = OrientedGraph::new(graph.clone(), orientation);
    let mut out = Map::new();
    out.insert("graph".into(), json!(graph.serialization()));
    out.insert("orientation".into(), json!(source));

    if !hams.is_empty() {
        if hams.len() != graph.num_vertices() {
            return input(format!("expected {} Hamiltonian documents, got {}", graph.num_vertices(), hams.len()));
        }
        let mut elements = Vec::with_capacity(hams.len());
        for (i, (hn, p)) in hams.into_iter().enumerate() {
            if hn != n {
                return input(format!("Hamiltonian {i} has n = {hn}, expected {n}"));
            }
            elements.push(HamElement::new(p, space, degree).map_err(|e| CliError::Input(format!("Hamiltonian {i}: {e}")))?);
        }
        out.insert("cochain_value".into(), rat(&symplectic::cochain_eval(&og, &elements, &space)?));
    }

    if let Some(kind) = check {
        let defects: Vec<Rational> = (0..samples as u64)
            .into_par_iter()
            .map(|s| match kind {
                CheckKind::Cocycle => {
                    let hs = sampling::random_hamiltonians(seed, s, &space, graph.num_vertices() + 1, degree);
                    symplectic::ce_differential_eval(&og, &hs, &space, degree)
                }
                CheckKind::Sp => {
                    let (x, ts) = sampling::random_sp_sample(seed, s, &space, graph.num_vertices());
                    symplectic::sp_invariance_defect(&og, &x, &ts, &space)
                }
            })
            .collect::<Result<_, _>>()?;
        let max = defects.iter().map(num_traits::Signed::abs).max().unwrap_or_default();
        let nonzero: Vec<usize> = (0..defects.len()).filter(|&i| !num_traits::Zero::is_zero(&defects[i])).collect();
        let name = match kind {
            CheckKind::Cocycle => "cocycle",
            CheckKind::Sp => "sp",
        };
        if let Some(&first) = nonzero.first() {
            return Err(CliError::Invariant {
                message: format!("{name} check failed on {} of {samples} samples", nonzero.len()),
                witness: json!({ "sample": nat(first), "defect": rat(&defects[first]), "seed": format!("{seed}/1") }),
            });
        }
        out.insert("check".into(), json!(name));
        out.insert("samples".into(), nat(samples));
        out.insert("max_abs_defect".into(), rat(&max));
        out.insert("nonzero_samples".into(), nat(nonzero.len()));
    }
    Ok(Value::Object(out))
}

fn validate(source: AlgebraSource) -> Value {
    let report = lie::validate_algebra(source.algebra());
    let name = match &source {
        AlgebraSource::Preset(n, _) => *n,
        AlgebraSource::Document(_) => "document",
    };
    json!({
        "algebra": name,
        "dim": nat(source.algebra().dim()),
        "all_passed": report.all_passed(),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "witness": c.witness,
        })).collect::<Vec<_>>(),
    })
}

/// Compact JSON, or a flat `path: value` listing under `--pretty`.
fn render(report: &Value, pretty: bool) -> String {
    if !pretty {
        return format!("{report}\n");
    }
    let mut out = String::new();
    flatten("", report, &mut out);
    out
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(a) if !a.is_empty() && a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix:<40} {s}\n")),
        other => out.push_str(&format!("{prefix:<40} {other}\n")),
    }
}
