//! symcfg: construct, enumerate, classify, and certify upper embeddability
//! of symmetric v_3 configurations via their Levi graphs.

mod draw;
mod manifest;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use manifest::RunManifest;
use symcfg::check;
use symcfg::classify;
use symcfg::config::Configuration;
use symcfg::construct;
use symcfg::embed::{self, VerdictPolicy, VerdictStatus};
use symcfg::enumerate::{self, table};
use symcfg::rotation::RotationSystem;

const EXIT_OK: u8 = 0;
const EXIT_BUDGET_OR_UNKNOWN: u8 = 3;
const EXIT_INVALID_INPUT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "symcfg",
    version,
    about = "Symmetric v_3 configurations: generation, census, and upper-embeddability certificates",
    after_help = "Exit codes: 0 success, 2 usage, 3 budget exhausted or verdict unknown, 4 invalid input."
)]
struct Cli {
    /// Worker threads for generation and classification (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate all connected cubic bipartite girth-6 graphs on 2v vertices
    /// (one graph6 line per isomorphism class).
    Generate(GenerateArgs),
    /// Reproduce the census table for orders 7..=v_max.
    Table(TableArgs),
    /// Decide upper embeddability of a configuration, with certificate.
    Verdict(VerdictArgs),
    /// Emit configurations from the named families.
    Construct(ConstructArgs),
    /// Classify one configuration (automorphisms and census predicates).
    Classify(ClassifyArgs),
    /// Draw the Levi graph of a configuration as SVG.
    Draw(DrawArgs),
    /// Re-verify a certificate or verdict JSON against a configuration.
    Check(CheckArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Number of points v (>= 7).
    v: usize,
    /// Write graph6 lines here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Dump the generation frontier at --frontier-depth and exit.
    #[arg(long)]
    emit_frontier: Option<PathBuf>,
    /// Frontier depth (blocks per node) for --emit-frontier.
    #[arg(long, default_value_t = 4)]
    frontier_depth: usize,
    /// Resume from a frontier file produced by --emit-frontier.
    #[arg(long)]
    resume: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// Largest order to tabulate.
    v_max: usize,
    /// Write the aligned table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the table as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Generation node budget per row; exceeded rows are flagged partial.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct VerdictArgs {
    /// Configuration text file.
    config: PathBuf,
    /// Write the verdict JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for randomized searches (the verdict itself is deterministic).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest v for exhaustive rotation sweeps.
    #[arg(long, default_value_t = embed::DEFAULT_EXHAUSTIVE_LIMIT)]
    exhaustive_limit: usize,
    /// Node budget for the dominating-set search.
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    family: Family,
}

#[derive(Subcommand)]
enum Family {
    /// The unique 7_3 configuration.
    Fano {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Pappus configuration (one of the three 9_3).
    Pappus {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cyclic configuration with blocks {m, m+1, m+3} mod v.
    Cyclic {
        v: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stitch three configurations into a non-upper-embeddable one.
    Stitch {
        first: PathBuf,
        second: PathBuf,
        third: PathBuf,
        /// JSON stitch plan {"deletions": [[p,b],[p,b],[p,b]]}.
        #[arg(long)]
        plan: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Martinetti extension through a new point.
    Martinetti {
        parent: PathBuf,
        /// Block {x1,x2,x3} as "x1,x2,x3"; x1 heads the uncovered pair.
        #[arg(long)]
        x: String,
        /// Block {y1,y2,y3} as "y1,y2,y3"; y1 heads the uncovered pair.
        #[arg(long)]
        y: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    config: PathBuf,
    /// Emit CSV instead of JSON.
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LayoutArg {
    Auto,
    Spring,
    Radial,
}

#[derive(Args)]
struct DrawArgs {
    config: PathBuf,
    out_svg: PathBuf,
    #[arg(long, value_enum, default_value_t = LayoutArg::Auto)]
    layout: LayoutArg,
    /// Single-face rotation witness JSON to annotate with a face trace.
    #[arg(long)]
    rotation: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Certificate or verdict JSON file.
    certificate: PathBuf,
    /// The configuration the certificate refers to.
    #[arg(long)]
    config: PathBuf,
}

#[derive(Debug)]
enum CliError {
    Invalid(String),
    Other(anyhow::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(s) => write!(f, "{s}"),
            CliError::Other(e) => write!(f, "{e:#}"),
        }
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Other(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Other(e.into())
    }
}

type CmdResult = Result<u8, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .ok();
    }
    let started = Instant::now();
    let code = match &cli.command {
        Command::Generate(args) => cmd_generate(args, started),
        Command::Table(args) => cmd_table(args, started),
        Command::Verdict(args) => cmd_verdict(args, started),
        Command::Construct(args) => cmd_construct(args, started),
        Command::Classify(args) => cmd_classify(args, started),
        Command::Draw(args) => cmd_draw(args, started),
        Command::Check(args) => cmd_check(args, started),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVALID_INPUT)
        }
        Err(CliError::Other(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn read_config(path: &Path, man: &mut RunManifest) -> Result<Configuration, CliError> {
    let bytes =
        fs::read(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    man.record_input(path, &bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::Invalid(format!("{}: not utf-8", path.display())))?;
    Configuration::parse_text(&text)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

/// Formats that cannot embed comments get their manifest as a sidecar file.
fn write_sidecar_manifest(out: &Option<PathBuf>, man: &RunManifest) -> Result<(), CliError> {
    if let Some(path) = out {
        let mut side = path.as_os_str().to_owned();
        side.push(".manifest.json");
        fs::write(
            PathBuf::from(side),
            serde_json::to_string_pretty(&man.to_json()).unwrap(),
        )?;
    }
    Ok(())
}

fn cmd_generate(args: &GenerateArgs, started: Instant) -> CmdResult {
    let mut man = RunManifest::new("generate", 0);
    if args.v < 7 {
        return Err(CliError::Invalid(format!(
            "v must be at least 7, got {}",
            args.v
        )));
    }
    if let Some(front_out) = &args.emit_frontier {
        let front = enumerate::frontier(args.v, args.frontier_depth);
        man.finish(started);
        let mut doc = serde_json::to_value(&front).expect("frontier serializes");
        doc["manifest"] = man.to_json();
        fs::write(front_out, serde_json::to_string(&doc).unwrap())?;
        eprintln!(
            "frontier at depth {}: {} nodes",
            args.frontier_depth,
            front.nodes.len()
        );
        return Ok(EXIT_OK);
    }
    let generated = if let Some(resume) = &args.resume {
        let bytes = fs::read(resume)?;
        man.record_input(resume, &bytes);
        let front: enumerate::Frontier = serde_json::from_slice(&bytes)
            .map_err(|e| CliError::Invalid(format!("{}: {e}", resume.display())))?;
        if front.version != enumerate::FRONTIER_VERSION || front.v != args.v {
            return Err(CliError::Invalid(
                "frontier file does not match this run".into(),
            ));
        }
        let mut merged = enumerate::Generated {
            configs: Vec::new(),
            disconnected: 0,
            nodes: 0,
            complete: true,
        };
        for node in &front.nodes {
            let part = enumerate::expand_frontier_node(args.v, node);
            merged.configs.extend(part.configs);
            merged.disconnected += part.disconnected;
            merged.nodes += part.nodes;
        }
        merged
    } else {
        enumerate::generate_configs_parallel(args.v, 4.min(args.v - 1))
    };
    let graphs = enumerate::generate_levi_graphs(args.v);
    let mut lines = String::new();
    for g in &graphs {
        lines.push_str(&g.to_graph6());
        lines.push('\n');
    }
    man.finish(started);
    write_or_print(&args.out, &lines)?;
    write_sidecar_manifest(&args.out, &man)?;
    eprintln!(
        "v={}: {} graph classes, {} connected configurations ({} disconnected complete)",
        args.v,
        graphs.len(),
        generated.configs.len(),
        generated.disconnected
    );
    Ok(EXIT_OK)
}

fn cmd_table(args: &TableArgs, started: Instant) -> CmdResult {
    let mut man = RunManifest::new("table", 0);
    if args.v_max < 7 {
        return Err(CliError::Invalid(format!(
            "v_max must be at least 7, got {}",
            args.v_max
        )));
    }
    let rows = table::table(args.v_max, args.budget);
    man.finish(started);
    let text = table::format_table(&rows);
    write_or_print(&args.out, &text)?;
    write_sidecar_manifest(&args.out, &man)?;
    if let Some(csv_path) = &args.csv {
        let csv = format!(
            "# manifest: {}\n{}",
            man.to_comment_line(),
            table::to_csv(&rows)
        );
        fs::write(csv_path, csv)?;
    }
    if rows.iter().any(|r| !r.complete) {
        eprintln!("budget exhausted: some rows are partial");
        return Ok(EXIT_BUDGET_OR_UNKNOWN);
    }
    Ok(EXIT_OK)
}

fn cmd_verdict(args: &VerdictArgs, started: Instant) -> CmdResult {
    let mut man = RunManifest::new("verdict", args.seed);
    let cfg = read_config(&args.config, &mut man)?;
    let policy = VerdictPolicy {
        dominating_budget: args.budget,
        exhaustive_limit: args.exhaustive_limit,
        tree_node_limit: args.budget,
        seed: args.seed,
    };
    let verdict = embed::verdict(&cfg, &policy)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", args.config.display())))?;
    let mut doc = verdict.to_doc(&cfg);
    man.finish(started);
    doc.manifest = Some(man.to_json());
    let json = serde_json::to_string_pretty(&doc).expect("verdict serializes");
    write_or_print(&args.out, &format!("{json}\n"))?;
    if verdict.status == VerdictStatus::Unknown {
        return Ok(EXIT_BUDGET_OR_UNKNOWN);
    }
    Ok(EXIT_OK)
}

fn parse_triple(s: &str) -> Result<[usize; 3], CliError> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Invalid(format!("bad triple {s:?}; expected \"a,b,c\"")))?;
    if parts.len() != 3 {
        return Err(CliError::Invalid(format!(
            "bad triple {s:?}; expected three comma-separated points"
        )));
    }
    Ok([parts[0], parts[1], parts[2]])
}

fn emit_config(
    cfg: &Configuration,
    out: &Option<PathBuf>,
    man: &mut RunManifest,
    started: Instant,
) -> CmdResult {
    man.finish(started);
    let text = format!("# manifest: {}\n{}", man.to_comment_line(), cfg.to_text());
    write_or_print(out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_construct(args: &ConstructArgs, started: Instant) -> CmdResult {
    let mut man = RunManifest::new("construct", 0);
    match &args.family {
        Family::Fano { out } => emit_config(&construct::fano(), out, &mut man, started),
        Family::Pappus { out } => emit_config(&construct::pappus(), out, &mut man, started),
        Family::Cyclic { v, out } => {
            let cfg =
                construct::cyclic_config(*v).map_err(|e| CliError::Invalid(e.to_string()))?;
            emit_config(&cfg, out, &mut man, started)
        }
        Family::Stitch {
            first,
            second,
            third,
            plan,
            out,
        } => {
            let c1 = read_config(first, &mut man)?;
            let c2 = read_config(second, &mut man)?;
            let c3 = read_config(third, &mut man)?;
            let plan = match plan {
                Some(path) => {
                    let bytes = fs::read(path)?;
                    man.record_input(path, &bytes);
                    Some(
                        serde_json::from_slice::<construct::StitchPlan>(&bytes)
                            .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?,
                    )
                }
                None => None,
            };
            let stitched = construct::stitch(&c1, &c2, &c3, plan)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            if !stitched.all_sources_odd() {
                eprintln!(
                    "warning: source orders {:?} are not all odd; the non-embeddability argument does not apply",
                    stitched.source_orders
                );
            }
            emit_config(&stitched.config, out, &mut man, started)
        }
        Family::Martinetti { parent, x, y, out } => {
            let cfg = read_config(parent, &mut man)?;
            let step = construct::MartinettiStep {
                x: parse_triple(x)?,
                y: parse_triple(y)?,
            };
            let child = construct::martinetti_extend(&cfg, step)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            emit_config(&child, out, &mut man, started)
        }
    }
}

fn cmd_classify(args: &ClassifyArgs, started: Instant) -> CmdResult {
    let mut man = RunManifest::new("classify", 0);
    let cfg = read_config(&args.config, &mut man)?;
    let preds = classify::predicates(&cfg);
    let cert = classify::config_cert(&cfg);
    let info = if cfg.is_connected() {
        Some(classify::aut_group(&cfg.levi_graph()))
    } else {
        None
    };
    man.finish(started);
    if args.csv {
        let mut s = String::from(
            "cert,connected,self_dual,self_polar,point_transitive,cyclic,flag_transitive,weakly_flag_transitive,blocking_set_free,aut_order,full_order\n",
        );
        s.push_str(&format!(
            "{:016x},{},{},{},{},{},{},{},{},{},{}\n",
            cert.digest(),
            preds.connected,
            preds.self_dual,
            preds.self_polar,
            preds.point_transitive,
            preds.cyclic,
            preds.flag_transitive,
            preds.weakly_flag_transitive,
            preds.blocking_set_free,
            info.as_ref().map(|i| i.color_order).unwrap_or(0),
            info.as_ref().map(|i| i.order).unwrap_or(0),
        ));
        write_or_print(&args.out, &s)?;
        write_sidecar_manifest(&args.out, &man)?;
    } else {
        let mut doc = serde_json::json!({
            "cert": format!("{:016x}", cert.digest()),
            "v": cfg.v(),
            "predicates": preds,
        });
        if let Some(i) = info {
            doc["aut"] = serde_json::json!({
                "order": i.color_order.to_string(),
                "full_order": i.order.to_string(),
                "point_orbits": i.point_orbits.len(),
                "block_orbits": i.block_orbits.len(),
                "flag_orbits": i.flag_orbits.len(),
            });
        }
        doc["manifest"] = man.to_json();
        write_or_print(
            &args.out,
            &format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()),
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_draw(args: &DrawArgs, started: Instant) -> CmdResult {
    let mut man = RunManifest::new("draw", 0);
    let cfg = read_config(&args.config, &mut man)?;
    let levi = cfg.levi_graph();
    let layout = match args.layout {
        LayoutArg::Auto => draw::Layout::Auto,
        LayoutArg::Spring => draw::Layout::Spring,
        LayoutArg::Radial => draw::Layout::Radial,
    };
    let mut annotation = vec![format!(
        "v = {}: {} point vertices (black), {} block vertices (white)",
        cfg.v(),
        cfg.v(),
        cfg.v()
    )];
    if let Some(rot_path) = &args.rotation {
        let bytes = fs::read(rot_path)?;
        man.record_input(rot_path, &bytes);
        let doc: check::SingleFaceDoc = serde_json::from_slice(&bytes)
            .map_err(|e| CliError::Invalid(format!("{}: {e}", rot_path.display())))?;
        if doc.block_flips.len() != cfg.v() || doc.point_flips.len() != cfg.v() {
            return Err(CliError::Invalid("rotation witness order mismatch".into()));
        }
        let rot = RotationSystem::from_orientation(&levi, &doc.block_flips, &doc.point_flips);
        let trace = levi.trace_faces(&rot);
        annotation.push(format!(
            "face trace: {} face(s), genus {}",
            trace.face_count(),
            trace.genus
        ));
        for (i, face) in trace.faces.iter().enumerate().take(4) {
            annotation.push(format!("  face {i}: {} darts", face.len()));
        }
    }
    man.finish(started);
    let svg = draw::render_svg(&levi, layout, &annotation, &man.to_comment_line());
    fs::write(&args.out_svg, svg)?;
    Ok(EXIT_OK)
}

fn cmd_check(args: &CheckArgs, started: Instant) -> CmdResult {
    let mut man = RunManifest::new("check", 0);
    let cfg = read_config(&args.config, &mut man)?;
    let bytes = fs::read(&args.certificate)?;
    man.record_input(&args.certificate, &bytes);
    let value: serde_json::Value = serde_json::from_slice(&bytes)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", args.certificate.display())))?;
    // Accept either a bare witness document or a full verdict document.
    let witness: check::WitnessDoc = if value.get("status").is_some() {
        let doc: check::VerdictDoc = serde_json::from_value(value)
            .map_err(|e| CliError::Invalid(format!("verdict document: {e}")))?;
        match doc.witness {
            Some(w) => w,
            None => {
                println!("verdict carries no witness; nothing to check");
                return Ok(EXIT_OK);
            }
        }
    } else {
        serde_json::from_value(value)
            .map_err(|e| CliError::Invalid(format!("certificate document: {e}")))?
    };
    let report = check::check_witness(&cfg, &witness);
    man.finish(started);
    for item in &report.items {
        println!("[{}] {}", if item.ok { "ok" } else { "FAIL" }, item.claim);
    }
    println!(
        "{}: {}",
        report.kind,
        if report.ok { "verified" } else { "INVALID" }
    );
    if report.ok {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_INVALID_INPUT)
    }
}
