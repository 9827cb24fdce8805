//! `ucpg`: batch verification and reporting for uniquely 3-colorable
//! plane graphs.
//!
//! Exit codes: 0 when every requested check passes, 1 when a property
//! violation or counterexample candidate is found, 2 on usage or parse
//! errors.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use ucpg::coloring::unique_coloring;
use ucpg::criticality::criticality_report;
use ucpg::discharging::{audit, AuditLedger};
use ucpg::families::{generate_fan, generate_gk, generate_octahedron, size_bounds};
use ucpg::io_formats::{
    parse_planar_code, parse_rotation_text, write_dot, write_planar_code, write_rotation_text,
};
use ucpg::search::{
    conjecture_report, scan_catalog_resumable, tiny_catalog, witness_search, EmbeddingMode,
    FilterSpec, SearchRecord, Violation,
};
use ucpg::PlaneGraph;

const CHECKPOINT_ENV: &str = "UCPG_CHECKPOINT_DIR";
const CHECKPOINT_MAGIC: &str = "ucpg-scan-checkpoint v1";

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] ucpg::io_formats::FormatError),
    #[error(transparent)]
    Family(#[from] ucpg::families::FamilyError),
    #[error(transparent)]
    Search(#[from] ucpg::search::SearchError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Parser)]
#[command(name = "ucpg", version, about = "Verification toolkit for uniquely 3-colorable plane graphs")]
struct Cli {
    /// Worker threads for scans (defaults to the number of cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Check expected properties of every graph in a file
    Verify {
        #[command(flatten)]
        input: FileInput,
        /// Comma-separated expectations: unique3, edge-critical,
        /// 1/2/3-connected, adj-I-J, no-adj-I-J
        #[arg(long, value_delimiter = ',', required = true)]
        expect: Vec<String>,
    },
    /// Run the face-charging audit on every graph in a file
    Audit {
        #[command(flatten)]
        input: FileInput,
    },
    /// Scan a catalog for property violations
    Scan {
        #[command(flatten)]
        source: CatalogSource,
        /// Comma-separated violation checks (default: all four):
        /// theorem12, theorem11, edge-bound, triangles
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
        /// Print every record, not only the violating ones
        #[arg(long)]
        emit_records: bool,
        /// Write records to a file instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
        /// Checkpoint interval in graphs (used with UCPG_CHECKPOINT_DIR)
        #[arg(long, default_value_t = 1000)]
        checkpoint_every: usize,
    },
    /// Histogram the minimum adjacent (3,k) over 3-connected uniquely
    /// 3-colorable graphs and flag counterexample candidates
    Conjecture {
        #[command(flatten)]
        source: CatalogSource,
    },
    /// Hunt uniquely 3-colorable graphs avoiding forbidden low face pairs
    Witness {
        #[command(flatten)]
        source: CatalogSource,
        /// Comma-separated pairs out of 3-3, 3-4, 3-5 (at most two)
        #[arg(long, value_delimiter = ',', required = true)]
        forbid: Vec<String>,
    },
    /// Print the edge-count bounds for edge-critical uniquely
    /// 3-colorable planar graphs on n vertices
    Bounds {
        #[arg(long)]
        n: usize,
    },
    /// Transcode between graph formats
    Convert {
        #[command(flatten)]
        input: FileInput,
        /// Target format
        #[arg(long, value_enum)]
        to: GraphFormat,
        /// Write to a file instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Odd cycle with two partial hubs: 3k+2 vertices, 7k edges
    Gk {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Hub joined to a path: the smallest maximal outerplanar family
    Fan {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: GenOutput,
    },
    /// The even maximal plane graph on 6 vertices
    Octahedron {
        #[command(flatten)]
        out: GenOutput,
    },
}

#[derive(Args)]
struct GenOutput {
    #[arg(long, value_enum, default_value_t = GraphFormat::PlanarCode)]
    format: GraphFormat,
    /// Color vertices by the unique 3-coloring classes (dot output)
    #[arg(long)]
    with_partition: bool,
    /// Write to a file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FileInput {
    /// Input path, or '-' for standard input
    #[arg(long)]
    input: String,
    /// Input format override (otherwise inferred from the extension:
    /// .pc is planar_code, .rot is rotation text)
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
}

#[derive(Args)]
struct CatalogSource {
    /// Built-in catalog of all connected plane graphs up to this order
    #[arg(long, value_name = "N")]
    tiny: Option<usize>,
    /// Embedding mode for the built-in catalog
    #[arg(long, value_enum, default_value_t = Mode::AllEmbeddings)]
    mode: Mode,
    /// Read a catalog file instead ('-' for standard input)
    #[arg(long, conflicts_with = "tiny")]
    input: Option<String>,
    /// Input format override for --input
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    #[value(name = "planar_code")]
    PlanarCode,
    Rot,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    #[value(name = "planar_code")]
    PlanarCode,
    Rot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Representative,
    AllEmbeddings,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    #[cfg(feature = "parallel")]
    if let Some(jobs) = cli.jobs {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|err| CliError::Usage(format!("cannot build thread pool: {err}")))?;
        return pool.install(|| dispatch(cli.command));
    }
    #[cfg(not(feature = "parallel"))]
    if cli.jobs.is_some() {
        eprintln!("note: built without the parallel feature; --jobs is ignored");
    }
    dispatch(cli.command)
}

fn dispatch(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Gen { family } => run_gen(family),
        Command::Verify { input, expect } => run_verify(input, expect),
        Command::Audit { input } => run_audit(input),
        Command::Scan { source, check, emit_records, output, checkpoint_every } => {
            run_scan(source, check, emit_records, output, checkpoint_every)
        }
        Command::Conjecture { source } => run_conjecture(source),
        Command::Witness { source, forbid } => run_witness(source, forbid),
        Command::Bounds { n } => run_bounds(n),
        Command::Convert { input, to, output } => run_convert(input, to, output),
    }
}

// ---- input handling ----------------------------------------------------

fn resolve_format(path: &str, explicit: Option<InputFormat>) -> Result<InputFormat, CliError> {
    if let Some(format) = explicit {
        return Ok(format);
    }
    let ext = Path::new(path).extension().and_then(|e| e.to_str());
    match ext {
        Some("pc") => Ok(InputFormat::PlanarCode),
        Some("rot") => Ok(InputFormat::Rot),
        _ => Err(CliError::Usage(format!(
            "cannot infer the format of {path:?}; pass --format planar_code or --format rot"
        ))),
    }
}

fn read_source(path: &str) -> Result<Vec<u8>, CliError> {
    if path == "-" {
        let mut bytes = Vec::new();
        std::io::stdin().read_to_end(&mut bytes)?;
        Ok(bytes)
    } else {
        Ok(fs::read(path)?)
    }
}

fn load_graphs(input: &FileInput) -> Result<Vec<PlaneGraph>, CliError> {
    let format = resolve_format(&input.input, input.format)?;
    let bytes = read_source(&input.input)?;
    match format {
        InputFormat::PlanarCode => Ok(parse_planar_code(&bytes)?),
        InputFormat::Rot => {
            let text = String::from_utf8(bytes)
                .map_err(|_| CliError::Usage("rotation text is not valid UTF-8".into()))?;
            Ok(vec![parse_rotation_text(&text)?])
        }
    }
}

/// Loads a scan catalog and a stable description of its source for
/// checkpoint fingerprints.
fn load_catalog(source: &CatalogSource) -> Result<(Vec<PlaneGraph>, String), CliError> {
    match (&source.tiny, &source.input) {
        (Some(n), None) => {
            let mode = match source.mode {
                Mode::Representative => EmbeddingMode::Representative,
                Mode::AllEmbeddings => EmbeddingMode::AllEmbeddings,
            };
            let tag = match source.mode {
                Mode::Representative => "representative",
                Mode::AllEmbeddings => "all-embeddings",
            };
            Ok((tiny_catalog(*n, mode)?, format!("tiny:{n}:{tag}")))
        }
        (None, Some(path)) => {
            let input = FileInput { input: path.clone(), format: source.format };
            Ok((load_graphs(&input)?, format!("file:{path}")))
        }
        _ => Err(CliError::Usage("pass exactly one of --tiny or --input".into())),
    }
}

fn write_output(target: &Option<PathBuf>, bytes: &[u8]) -> Result<(), CliError> {
    match target {
        Some(path) => fs::write(path, bytes)?,
        None => std::io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

// ---- gen ----------------------------------------------------------------

fn run_gen(family: Family) -> Result<u8, CliError> {
    let (graph, out) = match family {
        Family::Gk { k, out } => (generate_gk(k)?, out),
        Family::Fan { n, out } => (generate_fan(n)?, out),
        Family::Octahedron { out } => (generate_octahedron(), out),
    };
    let bytes = render_graph(&graph, out.format, out.with_partition)?;
    write_output(&out.output, &bytes)?;
    Ok(0)
}

fn render_graph(
    graph: &PlaneGraph,
    format: GraphFormat,
    with_partition: bool,
) -> Result<Vec<u8>, CliError> {
    if with_partition && format != GraphFormat::Dot {
        return Err(CliError::Usage("--with-partition only applies to dot output".into()));
    }
    match format {
        GraphFormat::PlanarCode => Ok(write_planar_code(graph)?),
        GraphFormat::Rot => Ok(write_rotation_text(graph).into_bytes()),
        GraphFormat::Dot => {
            let partition = if with_partition {
                Some(unique_coloring(&graph.abstract_graph(), 3).ok_or_else(|| {
                    CliError::Usage("graph is not uniquely 3-colorable; cannot color by class".into())
                })?)
            } else {
                None
            };
            Ok(write_dot(graph, partition.as_ref())?.into_bytes())
        }
    }
}

// ---- verify ---------------------------------------------------------------

enum Expectation {
    Unique3,
    EdgeCritical,
    KConnected(usize),
    RequirePair(usize, usize),
    ForbidPair(usize, usize),
}

impl Expectation {
    fn parse(token: &str) -> Result<Expectation, CliError> {
        if token == "unique3" {
            return Ok(Expectation::Unique3);
        }
        if token == "edge-critical" {
            return Ok(Expectation::EdgeCritical);
        }
        if let Some(k) = token.strip_suffix("-connected") {
            if let Ok(k @ 1..=3) = k.parse() {
                return Ok(Expectation::KConnected(k));
            }
        }
        if let Some(pair) = token.strip_prefix("no-adj-") {
            let (i, j) = parse_pair(pair)?;
            return Ok(Expectation::ForbidPair(i, j));
        }
        if let Some(pair) = token.strip_prefix("adj-") {
            let (i, j) = parse_pair(pair)?;
            return Ok(Expectation::RequirePair(i, j));
        }
        Err(CliError::Usage(format!("unknown expectation {token:?}")))
    }

    fn check(&self, graph: &PlaneGraph) -> (bool, String) {
        match *self {
            Expectation::Unique3 => {
                let ok = unique_coloring(&graph.abstract_graph(), 3).is_some();
                (ok, "uniquely 3-colorable".into())
            }
            Expectation::EdgeCritical => match criticality_report(&graph.abstract_graph(), 3) {
                Ok(report) => (report.is_edge_critical, "edge-critical".into()),
                Err(_) => (false, "edge-critical (graph is not uniquely 3-colorable)".into()),
            },
            Expectation::KConnected(k) => (graph.is_k_connected(k), format!("{k}-connected")),
            Expectation::RequirePair(i, j) => (
                graph.face_pair_degrees().contains(&(i, j)),
                format!("has adjacent ({i},{j}) faces"),
            ),
            Expectation::ForbidPair(i, j) => (
                !graph.face_pair_degrees().contains(&(i, j)),
                format!("has no adjacent ({i},{j}) faces"),
            ),
        }
    }
}

fn parse_pair(text: &str) -> Result<(usize, usize), CliError> {
    let parts: Vec<&str> = text.split('-').collect();
    if parts.len() == 2 {
        if let (Ok(i), Ok(j)) = (parts[0].parse::<usize>(), parts[1].parse::<usize>()) {
            return Ok(if i <= j { (i, j) } else { (j, i) });
        }
    }
    Err(CliError::Usage(format!("malformed face-degree pair {text:?}; expected I-J")))
}

fn run_verify(input: FileInput, expect: Vec<String>) -> Result<u8, CliError> {
    let expectations = expect
        .iter()
        .map(|token| Expectation::parse(token).map(|e| (token.clone(), e)))
        .collect::<Result<Vec<_>, _>>()?;
    let graphs = load_graphs(&input)?;
    if graphs.is_empty() {
        return Err(CliError::Usage("input contains no graphs".into()));
    }
    let mut failures = 0usize;
    for (idx, graph) in graphs.iter().enumerate() {
        for (token, expectation) in &expectations {
            let (ok, description) = expectation.check(graph);
            if ok {
                println!("graph {}: {token}: ok", idx + 1);
            } else {
                failures += 1;
                println!("graph {}: {token}: FAILED (not {description})", idx + 1);
            }
        }
    }
    println!(
        "verified: {} graphs, {} expectations, {failures} failures",
        graphs.len(),
        expectations.len()
    );
    Ok(if failures == 0 { 0 } else { 1 })
}

// ---- audit ----------------------------------------------------------------

fn run_audit(input: FileInput) -> Result<u8, CliError> {
    let graphs = load_graphs(&input)?;
    if graphs.is_empty() {
        return Err(CliError::Usage("input contains no graphs".into()));
    }
    let mut failed = false;
    for (idx, graph) in graphs.iter().enumerate() {
        let ledger = audit(graph);
        print_ledger(idx + 1, graph, &ledger);
        if ledger.hypothesis_met
            && !(ledger.conservation_holds
                && ledger.all_final_charges_at_least_four
                && ledger.concludes_edge_face_bound)
        {
            failed = true;
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn print_ledger(index: usize, graph: &PlaneGraph, ledger: &AuditLedger) {
    println!(
        "graph {index}: n={} m={} faces={}",
        graph.vertex_count(),
        graph.edge_count(),
        ledger.face_count()
    );
    let degrees: Vec<String> = ledger.face_degrees.iter().map(|d| d.to_string()).collect();
    println!("face degrees: {}", degrees.join(" "));
    if !ledger.hypothesis_met {
        let reason = if !ledger.has_triangle_face {
            "no 3-face".to_string()
        } else if let Some(pair) = ledger.offending_pair {
            format!("adjacent ({},{}) faces", pair.degrees.0, pair.degrees.1)
        } else {
            "hypothesis not met".to_string()
        };
        println!("hypothesis met: no ({reason})");
        return;
    }
    println!("hypothesis met: yes");
    println!("transfers: {}", ledger.transfers.len());
    for face in 0..ledger.face_count() {
        println!(
            "face {face}: degree {}, charge {} -> {}",
            ledger.face_degrees[face],
            ledger.initial_charge(face),
            ledger.final_charge(face)
        );
    }
    let total = ledger.final_charge_thirds.iter().sum::<i64>() / 3;
    let expected = 2 * graph.edge_count() as i64;
    println!(
        "conservation: {total} = {expected}: {}",
        if ledger.conservation_holds { "ok" } else { "VIOLATED" }
    );
    println!(
        "all final charges >= 4: {}",
        if ledger.all_final_charges_at_least_four { "yes" } else { "NO" }
    );
    println!(
        "conclusion m >= 2|F|: {} >= {}: {}",
        graph.edge_count(),
        2 * ledger.face_count(),
        if ledger.concludes_edge_face_bound { "ok" } else { "VIOLATED" }
    );
}

// ---- scan ----------------------------------------------------------------

fn parse_checks(tokens: &[String]) -> Result<Vec<Violation>, CliError> {
    if tokens.is_empty() {
        return Ok(Violation::ALL.to_vec());
    }
    let mut checks = Vec::new();
    for token in tokens {
        let violation = match token.as_str() {
            "theorem12" => Violation::FacePairBound,
            "theorem11" => Violation::ClassPairConnectivity,
            "triangles" => Violation::TriangleBound,
            other => Violation::from_name(other)
                .ok_or_else(|| CliError::Usage(format!("unknown check {token:?}")))?,
        };
        if !checks.contains(&violation) {
            checks.push(violation);
        }
    }
    Ok(checks)
}

struct Checkpoint {
    path: PathBuf,
    fingerprint: String,
    total: usize,
}

impl Checkpoint {
    fn open(source_tag: &str, checks: &[Violation], total: usize) -> Option<Checkpoint> {
        let dir = std::env::var_os(CHECKPOINT_ENV)?;
        let names: Vec<&str> = checks.iter().map(|c| c.name()).collect();
        let fingerprint = format!("source={source_tag} checks={}", names.join(","));
        Some(Checkpoint { path: PathBuf::from(dir).join("scan.checkpoint"), fingerprint, total })
    }

    /// Returns the resume offset and the records gathered before it, when
    /// a matching checkpoint exists.
    fn resume(&self) -> Option<(usize, Vec<SearchRecord>)> {
        let text = fs::read_to_string(&self.path).ok()?;
        let mut lines = text.lines();
        if lines.next()? != CHECKPOINT_MAGIC {
            return None;
        }
        if lines.next()? != format!("fingerprint={}", self.fingerprint) {
            return None;
        }
        if lines.next()? != format!("total={}", self.total) {
            return None;
        }
        let done: usize = lines.next()?.strip_prefix("done=")?.parse().ok()?;
        if done > self.total {
            return None;
        }
        let records = lines.map(SearchRecord::parse_line).collect::<Option<Vec<_>>>()?;
        Some((done, records))
    }

    fn save(&self, done: usize, records: &[SearchRecord]) -> std::io::Result<()> {
        let mut text = format!(
            "{CHECKPOINT_MAGIC}\nfingerprint={}\ntotal={}\ndone={done}\n",
            self.fingerprint, self.total
        );
        for record in records {
            text.push_str(&record.to_line());
            text.push('\n');
        }
        let tmp = self.path.with_extension("tmp");
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &self.path)
    }

    fn clear(&self) {
        let _ = fs::remove_file(&self.path);
    }
}

fn run_scan(
    source: CatalogSource,
    check: Vec<String>,
    emit_records: bool,
    output: Option<PathBuf>,
    checkpoint_every: usize,
) -> Result<u8, CliError> {
    let checks = parse_checks(&check)?;
    let (graphs, source_tag) = load_catalog(&source)?;
    let filter = FilterSpec::default();

    let checkpoint = Checkpoint::open(&source_tag, &checks, graphs.len());
    let (offset, prior) = match checkpoint.as_ref().and_then(Checkpoint::resume) {
        Some((done, records)) => {
            eprintln!("resuming from checkpoint: {done}/{} graphs done", graphs.len());
            (done, records)
        }
        None => (0, Vec::new()),
    };

    let fresh = scan_catalog_resumable(&graphs, &filter, offset, checkpoint_every, |done, new| {
        if let Some(cp) = &checkpoint {
            let mut merged: Vec<&SearchRecord> = prior.iter().collect();
            merged.extend(new);
            let owned: Vec<SearchRecord> = merged.into_iter().cloned().collect();
            if let Err(err) = cp.save(done, &owned) {
                eprintln!("warning: cannot write checkpoint: {err}");
            }
        }
    });
    let mut records = prior;
    records.extend(fresh);
    if let Some(cp) = &checkpoint {
        cp.clear();
    }

    let violating: Vec<&SearchRecord> = records
        .iter()
        .filter(|r| r.violations.iter().any(|v| checks.contains(v)))
        .collect();

    if emit_records || output.is_some() {
        let mut text = String::new();
        for record in &records {
            text.push_str(&record.to_line());
            text.push('\n');
        }
        write_output(&output, text.as_bytes())?;
    }
    let names: Vec<&str> = checks.iter().map(|c| c.name()).collect();
    println!("scanned: {} graphs ({source_tag})", graphs.len());
    println!("checks: {}", names.join(", "));
    println!("violations: {}", violating.len());
    for record in &violating {
        println!("{}", record.to_line());
    }
    Ok(if violating.is_empty() { 0 } else { 1 })
}

// ---- conjecture ------------------------------------------------------------

fn run_conjecture(source: CatalogSource) -> Result<u8, CliError> {
    let (graphs, source_tag) = load_catalog(&source)?;
    let report = conjecture_report(&graphs);
    println!("scanned: {} graphs ({source_tag})", report.scanned);
    println!("eligible (3-connected, uniquely 3-colorable): {}", report.eligible);
    println!("min adjacent (3,k) histogram:");
    for (k, count) in &report.histogram {
        println!("  k={k}: {count}");
    }
    println!("counterexample candidates: {}", report.candidates.len());
    for record in &report.candidates {
        println!("{}", record.to_line());
    }
    Ok(if report.candidates.is_empty() { 0 } else { 1 })
}

// ---- witness ----------------------------------------------------------------

fn run_witness(source: CatalogSource, forbid: Vec<String>) -> Result<u8, CliError> {
    let forbidden = forbid
        .iter()
        .map(|token| parse_pair(token))
        .collect::<Result<Vec<_>, _>>()?;
    let (graphs, source_tag) = load_catalog(&source)?;
    let witnesses = witness_search(&graphs, &forbidden)?;
    let pairs: Vec<String> = forbidden.iter().map(|(i, j)| format!("({i},{j})")).collect();
    println!("scanned: {} graphs ({source_tag})", graphs.len());
    println!("forbidden pairs: {}", pairs.join(", "));
    println!("witnesses: {}", witnesses.len());
    for record in &witnesses {
        println!("{}", record.to_line());
    }
    Ok(0)
}

// ---- bounds -----------------------------------------------------------------

fn run_bounds(n: usize) -> Result<u8, CliError> {
    let bounds = size_bounds(n)?;
    println!("{} <= size({n}) <= {}", bounds.lower, bounds.upper);
    if !bounds.lower_witnessed {
        println!("note: no family witness for n={n} (needs odd n = 2 (mod 3), n >= 11)");
    }
    Ok(0)
}

// ---- convert ----------------------------------------------------------------

fn run_convert(
    input: FileInput,
    to: GraphFormat,
    output: Option<PathBuf>,
) -> Result<u8, CliError> {
    let graphs = load_graphs(&input)?;
    if graphs.is_empty() {
        return Err(CliError::Usage("input contains no graphs".into()));
    }
    let bytes = match to {
        GraphFormat::PlanarCode => {
            let mut bytes = Vec::new();
            for graph in &graphs {
                bytes.extend(write_planar_code(graph)?);
            }
            bytes
        }
        GraphFormat::Rot | GraphFormat::Dot => {
            if graphs.len() != 1 {
                return Err(CliError::Usage(format!(
                    "{} output holds a single graph, input has {}",
                    if to == GraphFormat::Rot { "rot" } else { "dot" },
                    graphs.len()
                )));
            }
            render_graph(&graphs[0], to, false)?
        }
    };
    write_output(&output, &bytes)?;
    Ok(0)
}
