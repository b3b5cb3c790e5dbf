//! Exhaustive search for tilings of a target triangle by copies of a tile.
//!
//! Regions are exact polygons over ℚ(√3). Each step fills the sharpest
//! convex corner of a region with a copy of the tile, splits what is left
//! into pieces and solves those independently. Every found tiling is run
//! through [`check_certificate`] before it is returned.

pub mod certificate;
pub mod controls;
pub mod geom;
pub mod prune;
pub mod region;
pub mod relations;
pub mod solver;
pub mod svg;

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

pub use certificate::{check_certificate, CheckReport, Certificate, RelationProperty, Violation};
pub use geom::Placement;
pub use relations::{extract_edge_relations, relation_from_counts};
pub use solver::{Cursor, Frame};
pub use svg::{render_svg, svg_string, SvgError};

use crate::constraints::{area_count, enumerate_dmatrices, ConstraintError, TriangleSpec};
use crate::exactnum::rational::is_integer;
use crate::tilealgebra::TileShape;
use prune::Rules;
use region::Region;
use solver::{make_tasks, run_parallel, run_sequential, RunEnd};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Config {
    pub node_budget: u64,
    pub workers: usize,
    pub allow_mirror: bool,
    /// Restricts edges on the target's sides to decompositions that use a
    /// c-edge. This is a published claim, not a checked fact, so results
    /// found with it on are marked conditional.
    pub paper_pruning: bool,
    pub checkpoint_path: Option<PathBuf>,
    pub output_format: OutputFormat,
    /// Depth at which the tree is cut into independent tasks.
    pub split_depth: usize,
    /// Nodes between periodic checkpoints (sequential runs only); 0 turns
    /// them off.
    pub checkpoint_every: u64,
    /// Most failed regions remembered per task.
    pub cache_limit: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            node_budget: 100_000_000,
            workers: 1,
            allow_mirror: true,
            paper_pruning: false,
            checkpoint_path: None,
            output_format: OutputFormat::Json,
            split_depth: 3,
            checkpoint_every: 1_000_000,
            cache_limit: 1 << 20,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error(transparent)]
    Constraint(#[from] ConstraintError),
    #[error("area ratio {0} is not a positive integer")]
    NonIntegerN(String),
    #[error("bad configuration: {0}")]
    BadConfig(String),
    #[error("checkpoint does not match this search: {0}")]
    CheckpointMismatch(String),
    #[error("checkpoint i/o: {0}")]
    Io(String),
    #[error("internal error: the search produced a tiling the checker rejects: {0}")]
    Unsound(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(Certificate),
    ExhaustedNone,
    BudgetExceeded,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Found(_) => "found",
            Outcome::ExhaustedNone => "exhausted-none",
            Outcome::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub tasks: usize,
    pub workers: usize,
    #[serde(rename = "N")]
    pub n: u64,
    /// True when the result relies on the opt-in pruning rule.
    pub conditional: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub schema: String,
    pub tile: TileShape,
    pub target: TriangleSpec,
    pub allow_mirror: bool,
    pub paper_pruning: bool,
    pub split_depth: usize,
    pub cursor: Cursor,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Checkpoint, SearchError> {
        let s = std::fs::read_to_string(path).map_err(|e| SearchError::Io(e.to_string()))?;
        let c: Checkpoint = serde_json::from_str(&s).map_err(|e| SearchError::Io(e.to_string()))?;
        if c.schema != certificate::SCHEMA {
            return Err(SearchError::CheckpointMismatch(format!("schema {:?}", c.schema)));
        }
        Ok(c)
    }

    pub fn save(&self, path: &Path) -> Result<(), SearchError> {
        let tmp = path.with_extension("tmp");
        let s = serde_json::to_string_pretty(self).expect("checkpoint serializes");
        std::fs::write(&tmp, s).and_then(|_| std::fs::rename(&tmp, path)).map_err(|e| SearchError::Io(e.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub outcome: Outcome,
    pub stats: SearchStats,
    /// Where the search stopped, when it ran out of budget.
    pub checkpoint: Option<Checkpoint>,
}

pub fn search(tile: &TileShape, target: &TriangleSpec, config: &Config) -> Result<SearchResult, SearchError> {
    run(tile, target, config, None)
}

/// Continues a search from a checkpoint. The tile, target, mirror flag,
/// pruning flag and split depth must match.
pub fn resume(cp: &Checkpoint, config: &Config) -> Result<SearchResult, SearchError> {
    let mism = |what: &str| Err(SearchError::CheckpointMismatch(what.to_string()));
    if cp.allow_mirror != config.allow_mirror {
        return mism("allow_mirror");
    }
    if cp.paper_pruning != config.paper_pruning {
        return mism("paper_pruning");
    }
    if cp.split_depth != config.split_depth {
        return mism("split_depth");
    }
    run(&cp.tile, &cp.target, config, Some(&cp.cursor))
}

fn run(tile: &TileShape, target: &TriangleSpec, config: &Config, cursor: Option<&Cursor>) -> Result<SearchResult, SearchError> {
    if config.split_depth == 0 {
        return Err(SearchError::BadConfig("split_depth must be at least 1".into()));
    }
    if config.workers == 0 {
        return Err(SearchError::BadConfig("workers must be at least 1".into()));
    }
    target.validate(tile)?;
    let n = area_count(tile, target)?;
    if !is_integer(&n) || n <= crate::exactnum::int(0) {
        return Err(SearchError::NonIntegerN(n.to_string()));
    }
    let n: u64 = n.to_integer().try_into().map_err(|_| SearchError::NonIntegerN(n.to_string()))?;
    let rules = Rules::new(tile, target, config.allow_mirror, config.paper_pruning);
    let conditional = config.paper_pruning;
    let root = Region::new(target.vertices(tile).to_vec());
    let mut stats = SearchStats { nodes: 0, tasks: 0, workers: config.workers, n, conditional };
    let done = |outcome, stats| Ok(SearchResult { outcome, stats, checkpoint: None });
    // Some side of the target cannot be built from tile edges at all.
    if enumerate_dmatrices(tile, target).is_empty() || !rules.feasible(&root, &mut prune::LengthMemo::default()) {
        return done(Outcome::ExhaustedNone, stats);
    }
    let tasks = make_tasks(&rules, &root, config.split_depth);
    stats.tasks = tasks.len();
    let snapshot = |cursor: Cursor| Checkpoint {
        schema: certificate::SCHEMA.into(),
        tile: tile.clone(),
        target: target.clone(),
        allow_mirror: config.allow_mirror,
        paper_pruning: config.paper_pruning,
        split_depth: config.split_depth,
        cursor,
    };
    let mut io_err = None;
    let end = if config.workers > 1 && cursor.is_none() {
        run_parallel(&rules, &tasks, config.node_budget, config.cache_limit, config.workers)
    } else {
        let mut sink = |c: &Cursor| {
            if let Some(p) = &config.checkpoint_path {
                if let Err(e) = snapshot(c.clone()).save(p) {
                    io_err.get_or_insert(e);
                }
            }
        };
        let every = if config.checkpoint_path.is_some() { config.checkpoint_every } else { 0 };
        run_sequential(&rules, &tasks, config.node_budget, config.cache_limit, cursor, every, &mut sink)
    };
    if let Some(e) = io_err {
        return Err(e);
    }
    match end {
        RunEnd::Found { nodes, placements } => {
            stats.nodes = nodes;
            let cert = Certificate::new(tile.clone(), target.clone(), config.allow_mirror, placements);
            let rep = check_certificate(&cert);
            if !rep.valid {
                let v: Vec<String> = rep.violations.iter().map(|v| v.to_string()).collect();
                return Err(SearchError::Unsound(v.join(", ")));
            }
            done(Outcome::Found(cert), stats)
        }
        RunEnd::Exhausted { nodes } => {
            stats.nodes = nodes;
            done(Outcome::ExhaustedNone, stats)
        }
        RunEnd::Budget(c) => {
            stats.nodes = c.nodes;
            let cp = snapshot(c);
            if let Some(p) = &config.checkpoint_path {
                cp.save(p)?;
            }
            Ok(SearchResult { outcome: Outcome::BudgetExceeded, stats, checkpoint: Some(cp) })
        }
    }
}
