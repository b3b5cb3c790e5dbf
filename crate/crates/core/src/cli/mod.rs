//! Command-line front end. `run` parses arguments, dispatches and returns
//! the process exit code.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::constraints::{derive, TriangleSpec};
use crate::exactnum::QRoot3;
use crate::lemmalab::{verify_all, verify_ids, LemmaCheck, Status};
use crate::search::{self, check_certificate, Certificate, Checkpoint, Config, OutputFormat, Outcome, SearchError};
use crate::tilealgebra::{classify_tile, cos_ratio, eisenstein_parameters, relations_for_tile, tile_from_sides, TileShape};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_NONE: i32 = 4;

pub const WORKERS_ENV: &str = "TILING_FORGE_WORKERS";

const NUMBERS: &str = "Exact numbers: INT, INT/INT, sqrt3, RAT*sqrt3 and sums such as 1+2*sqrt3.";

#[derive(Parser, Debug)]
#[command(name = "tiling-forge", version, about = "Exact tools for tilings of triangles by a triangle with a 120 degree angle", after_help = NUMBERS)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Tile data: cosines, area, angle class, edge relations.
    Tile {
        #[command(subcommand)]
        cmd: TileCmd,
    },
    /// Necessary conditions for a tiling of a target.
    Constraints {
        #[command(subcommand)]
        cmd: ConstraintsCmd,
    },
    /// Machine checks of the number-theoretic facts.
    Lemmas {
        #[command(subcommand)]
        cmd: LemmasCmd,
    },
    /// Exhaustive search. Exit 0 found, 3 budget exceeded, 4 none exists, 2 invalid.
    Search(SearchArgs),
    /// Check a certificate. Exit 0 valid, 1 violations, 2 unreadable.
    Check {
        cert: PathBuf,
    },
    /// Draw a certificate as SVG.
    Render {
        cert: PathBuf,
        #[arg(long, short)]
        out: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum TileCmd {
    Analyze {
        /// a,b,c with c opposite the 120 degree angle.
        #[arg(long)]
        sides: String,
    },
}

#[derive(Subcommand, Debug)]
enum ConstraintsCmd {
    Derive {
        #[arg(long)]
        sides: String,
        /// equilateral:S or triangle:X,Y,Z
        #[arg(long)]
        target: String,
    },
}

#[derive(Subcommand, Debug)]
enum LemmasCmd {
    Verify {
        /// Comma-separated check ids; all checks when absent.
        #[arg(long)]
        id: Option<String>,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, required_unless_present = "resume")]
    sides: Option<String>,
    #[arg(long, required_unless_present = "resume")]
    target: Option<String>,
    /// JSON file with any Config fields; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    node_budget: Option<u64>,
    #[arg(long)]
    workers: Option<usize>,
    /// Only orientation-preserving copies of the tile.
    #[arg(long)]
    no_mirror: bool,
    /// Opt-in pruning by a published claim; results become conditional.
    #[arg(long)]
    paper_pruning: bool,
    #[arg(long)]
    split_depth: Option<usize>,
    /// Where to save the search frontier.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long)]
    checkpoint_every: Option<u64>,
    /// Continue from a saved checkpoint.
    #[arg(long, conflicts_with_all = ["sides", "target"])]
    resume: Option<PathBuf>,
    /// Write the certificate here when a tiling is found.
    #[arg(long)]
    cert_out: Option<PathBuf>,
    /// Write the stats JSON here.
    #[arg(long)]
    stats_out: Option<PathBuf>,
}

/// Failure that maps to an exit code and a message on stderr.
struct Exit(i32, String);

fn invalid(e: impl std::fmt::Display) -> Exit {
    Exit(EXIT_INVALID, e.to_string())
}

pub fn parse_sides(s: &str) -> Result<TileShape, String> {
    let v: Vec<&str> = s.split(',').collect();
    if v.len() != 3 {
        return Err(format!("expected three sides, got {s:?}"));
    }
    let mut xs = Vec::new();
    for p in v {
        xs.push(QRoot3::parse(p).ok_or_else(|| format!("cannot parse side {p:?}. {NUMBERS}"))?);
    }
    let [a, b, c]: [QRoot3; 3] = xs.try_into().expect("three");
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    tile_from_sides(a, b, c).map_err(|e| e.to_string())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let fmt = cli.format;
    let r = match cli.cmd {
        Cmd::Tile { cmd: TileCmd::Analyze { sides } } => tile_analyze(&sides, fmt, out),
        Cmd::Constraints { cmd: ConstraintsCmd::Derive { sides, target } } => constraints_derive(&sides, &target, fmt, out),
        Cmd::Lemmas { cmd: LemmasCmd::Verify { id } } => lemmas_verify(id.as_deref(), fmt, out),
        Cmd::Search(a) => run_search(a, fmt, out),
        Cmd::Check { cert } => check(&cert, fmt, out),
        Cmd::Render { cert, out: path } => render(&cert, &path, out),
    };
    match r {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn emit(out: &mut dyn Write, fmt: Option<Format>, v: &Value, text: impl FnOnce() -> String) {
    let _ = match fmt {
        Some(Format::Text) => write!(out, "{}", text()),
        _ => writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json")),
    };
}

fn tagged(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(search::certificate::SCHEMA));
    }
    v
}

fn tile_analyze(sides: &str, fmt: Option<Format>, out: &mut dyn Write) -> Result<i32, Exit> {
    let t = parse_sides(sides).map_err(invalid)?;
    let class = classify_tile(&t);
    let rels = relations_for_tile(&t, 12);
    let eis = eisenstein_parameters(&t);
    let v = tagged(json!({
        "tile": t,
        "cos_alpha": t.cos_alpha.to_string(),
        "cos_beta": t.cos_beta.to_string(),
        "area": t.area.to_string(),
        "x": (&t.a / &t.c).to_string(),
        "classification": class,
        "cos_ratio": cos_ratio(&t).ok().map(|r| r.to_string()),
        "relations": rels.iter().map(|r| json!({"relation": r.to_string(), "kind": r.kind, "j": r.j, "u": r.u, "v": r.v})).collect::<Vec<_>>(),
        "eisenstein": eis.as_ref().map(|(m, n, k)| json!({"m": m, "n": n, "scale": k.to_string()})),
    }));
    emit(out, fmt, &v, || {
        let mut s = format!("sides      a={} b={} c={}\n", t.a, t.b, t.c);
        s += &format!("cos alpha  {}\ncos beta   {}\narea       {}\n", t.cos_alpha, t.cos_beta, t.area);
        s += &format!("integer similar: {}\n", class.integer_similar);
        match &class.alpha_over_pi {
            Some(q) => s += &format!("alpha = {q} pi\n"),
            None => s += "alpha is not a rational multiple of pi\n",
        }
        for r in &rels {
            s += &format!("relation   {r}\n");
        }
        if let Some((m, n, k)) = &eis {
            s += &format!("eisenstein m={m} n={n} scale={k}\n");
        }
        s
    });
    Ok(EXIT_OK)
}

fn constraints_derive(sides: &str, target: &str, fmt: Option<Format>, out: &mut dyn Write) -> Result<i32, Exit> {
    let t = parse_sides(sides).map_err(invalid)?;
    let tri = TriangleSpec::parse(target, &t).map_err(invalid)?;
    tri.validate(&t).map_err(invalid)?;
    let rep = derive(&t, &tri);
    let v = tagged(serde_json::to_value(&rep).expect("json"));
    emit(out, fmt, &v, || {
        let mut s = format!("N = {}\n", rep.n.as_deref().unwrap_or("not rational"));
        for sp in &rep.splits {
            s += &format!("split P={} Q={} R={}\n", sp.p, sp.q, sp.r);
        }
        s += &format!("{} d-matrices\n", rep.dmatrices.len());
        s
    });
    Ok(EXIT_OK)
}

fn lemmas_verify(ids: Option<&str>, fmt: Option<Format>, out: &mut dyn Write) -> Result<i32, Exit> {
    let checks: Vec<LemmaCheck> = match ids {
        None => verify_all(),
        Some(s) => {
            let ids: Vec<&str> = s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
            verify_ids(&ids).map_err(invalid)?
        }
    };
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.id.as_str()).collect();
    let v = tagged(json!({ "checks": checks, "failed": failed }));
    emit(out, fmt, &v, || {
        let mut s = String::new();
        for c in &checks {
            s += &format!("{:<22} {}\n", c.id, if c.status == Status::Pass { "pass" } else { "FAIL" });
            for i in c.failures() {
                s += &format!("    {}: expected {}, computed {}\n", i.name, i.expected, i.computed);
            }
        }
        s
    });
    Ok(if failed.is_empty() { EXIT_OK } else { EXIT_FAIL })
}

fn env_workers() -> Result<Option<usize>, Exit> {
    match std::env::var(WORKERS_ENV) {
        Ok(s) => s.trim().parse::<usize>().map(Some).map_err(|_| invalid(format!("{WORKERS_ENV}={s:?} is not a worker count"))),
        Err(_) => Ok(None),
    }
}

fn write_file(path: &Path, s: &str) -> Result<(), Exit> {
    std::fs::write(path, s).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn run_search(a: SearchArgs, fmt: Option<Format>, out: &mut dyn Write) -> Result<i32, Exit> {
    let mut cfg = match &a.config {
        Some(p) => {
            let s = std::fs::read_to_string(p).map_err(|e| invalid(format!("{}: {e}", p.display())))?;
            serde_json::from_str::<Config>(&s).map_err(|e| invalid(format!("{}: {e}", p.display())))?
        }
        None => Config::default(),
    };
    if let Some(w) = env_workers()? {
        cfg.workers = w;
    }
    if let Some(w) = a.workers {
        cfg.workers = w;
    }
    if let Some(b) = a.node_budget {
        cfg.node_budget = b;
    }
    if a.no_mirror {
        cfg.allow_mirror = false;
    }
    if a.paper_pruning {
        cfg.paper_pruning = true;
    }
    if let Some(d) = a.split_depth {
        cfg.split_depth = d;
    }
    if let Some(e) = a.checkpoint_every {
        cfg.checkpoint_every = e;
    }
    if a.checkpoint.is_some() {
        cfg.checkpoint_path = a.checkpoint.clone();
    }
    if let Some(Format::Text) = fmt {
        cfg.output_format = OutputFormat::Text;
    }
    let fmt = Some(match cfg.output_format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Text => Format::Text,
    });
    if cfg.node_budget == 0 {
        return Err(invalid("node budget must be positive"));
    }
    if cfg.workers == 0 {
        return Err(invalid("workers must be at least 1"));
    }
    let res = match &a.resume {
        Some(p) => {
            let cp = Checkpoint::load(p).map_err(invalid)?;
            // Defaults follow the checkpoint unless set explicitly.
            if !a.no_mirror {
                cfg.allow_mirror = cp.allow_mirror;
            }
            cfg.paper_pruning |= cp.paper_pruning;
            if a.split_depth.is_none() {
                cfg.split_depth = cp.split_depth;
            }
            search::resume(&cp, &cfg)
        }
        None => {
            let t = parse_sides(a.sides.as_deref().expect("clap")).map_err(invalid)?;
            let tri = TriangleSpec::parse(a.target.as_deref().expect("clap"), &t).map_err(invalid)?;
            search::search(&t, &tri, &cfg)
        }
    };
    let res = match res {
        Ok(r) => r,
        Err(e @ SearchError::Unsound(_)) => return Err(Exit(EXIT_FAIL, e.to_string())),
        Err(e) => return Err(invalid(e)),
    };
    let stats = tagged(json!({
        "outcome": res.outcome.label(),
        "stats": res.stats,
        "conditional": res.stats.conditional,
        "allow_mirror": cfg.allow_mirror,
        "node_budget": cfg.node_budget,
    }));
    if let Some(p) = &a.stats_out {
        write_file(p, &serde_json::to_string_pretty(&stats).expect("json"))?;
    }
    let mut v = stats.clone();
    let code = match &res.outcome {
        Outcome::Found(cert) => {
            if let Some(p) = &a.cert_out {
                write_file(p, &cert.to_json())?;
            }
            let rep = check_certificate(cert);
            v["edge_relations"] = json!(rep.relations.iter().map(|r| r.to_string()).collect::<Vec<_>>());
            v["edge_relation_property"] = json!(rep.edge_relation_property);
            v["certificate"] = serde_json::to_value(cert).expect("json");
            EXIT_OK
        }
        Outcome::ExhaustedNone => EXIT_NONE,
        Outcome::BudgetExceeded => {
            v["checkpoint"] = json!(cfg.checkpoint_path.as_ref().map(|p| p.display().to_string()));
            EXIT_BUDGET
        }
    };
    emit(out, fmt, &v, || {
        let mut s = format!("{} after {} nodes ({} tasks)\n", res.outcome.label(), res.stats.nodes, res.stats.tasks);
        if res.stats.conditional {
            s += "conditional on the opt-in pruning rule\n";
        }
        if let Outcome::Found(c) = &res.outcome {
            s += &format!("N = {}\n", c.n);
        }
        s
    });
    Ok(code)
}

fn load_cert(path: &Path) -> Result<Certificate, Exit> {
    let s = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    Certificate::from_json(&s).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn check(path: &Path, fmt: Option<Format>, out: &mut dyn Write) -> Result<i32, Exit> {
    let cert = load_cert(path)?;
    let rep = check_certificate(&cert);
    let violations: Vec<String> = rep.violations.iter().map(|v| v.to_string()).collect();
    let v = tagged(json!({
        "valid": rep.valid,
        "N": cert.n,
        "violations": violations,
        "warnings": rep.warnings,
        "relations": rep.relations.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "edge_relation_property": rep.edge_relation_property,
    }));
    emit(out, fmt, &v, || {
        let mut s = format!("{}\n", if rep.valid { "valid" } else { "INVALID" });
        for x in &violations {
            s += &format!("violation {x}\n");
        }
        for r in &rep.relations {
            s += &format!("relation {r}\n");
        }
        for w in &rep.warnings {
            s += &format!("warning {w}\n");
        }
        s
    });
    Ok(if rep.valid { EXIT_OK } else { EXIT_FAIL })
}

fn render(path: &Path, svg: &Path, out: &mut dyn Write) -> Result<i32, Exit> {
    let cert = load_cert(path)?;
    let rep = check_certificate(&cert);
    if !rep.valid {
        let v: Vec<String> = rep.violations.iter().map(|v| v.to_string()).collect();
        return Err(Exit(EXIT_FAIL, format!("certificate is not valid: {}", v.join(", "))));
    }
    search::render_svg(&cert, svg).map_err(invalid)?;
    let _ = writeln!(out, "{}", serde_json::to_string(&tagged(json!({"written": svg.display().to_string()}))).expect("json"));
    Ok(EXIT_OK)
}
