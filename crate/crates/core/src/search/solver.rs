//! Depth-first AND/OR search over regions.
//!
//! The top of the tree is cut into tasks at a fixed depth; every task runs
//! with its own failure cache, so node counts do not depend on how tasks are
//! spread over threads.

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::geom::Placement;
use super::prune::{LengthMemo, Rules};
use super::region::Region;

/// One candidate on the current path. `component` is the region piece being
/// solved and `solved` holds the placements of the pieces before it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frame {
    pub choice: usize,
    pub component: usize,
    pub solved: Vec<Placement>,
}

/// Where to pick up again: frames before the last are in progress, the last
/// one is the next candidate to be counted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cursor {
    pub nodes: u64,
    pub task: Vec<usize>,
    pub frames: Vec<Frame>,
}

#[derive(Clone, Debug)]
pub struct Task {
    pub prefix: Vec<usize>,
    /// Placements chosen above the task, root first.
    pub chain: Vec<Placement>,
    /// Chain nodes entered just before this task, counted with it.
    pub pre: u64,
    pub parent: Region,
    pub choice: usize,
    pub placement: Placement,
}

/// Expands single-piece chains down to `depth` and lists the tasks in
/// search order.
pub fn make_tasks(rules: &Rules, root: &Region, depth: usize) -> Vec<Task> {
    let mut out = Vec::new();
    let mut memo = LengthMemo::default();
    let mut pending = 0;
    expand(rules, &mut memo, root, &mut Vec::new(), &mut Vec::new(), 0, depth.max(1), &mut pending, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn expand(
    rules: &Rules,
    memo: &mut LengthMemo,
    region: &Region,
    prefix: &mut Vec<usize>,
    chain: &mut Vec<Placement>,
    level: usize,
    depth: usize,
    pending: &mut u64,
    out: &mut Vec<Task>,
) {
    for (i, pl) in rules.candidates(region).into_iter().enumerate() {
        prefix.push(i);
        if level + 1 < depth {
            let comps = region.subtract(&pl.v);
            if comps.len() == 1 && rules.feasible(&comps[0], memo) {
                *pending += 1;
                chain.push(pl);
                expand(rules, memo, &comps[0], prefix, chain, level + 1, depth, pending, out);
                chain.pop();
                prefix.pop();
                continue;
            }
        }
        out.push(Task {
            prefix: prefix.clone(),
            chain: chain.clone(),
            pre: std::mem::take(pending),
            parent: region.clone(),
            choice: i,
            placement: pl,
        });
        prefix.pop();
    }
}

pub enum Stop {
    Budget(Vec<Frame>),
}

pub type Step = Result<Option<Vec<Placement>>, Stop>;

pub struct Solver<'a> {
    rules: &'a Rules,
    memo: LengthMemo,
    cache: HashSet<Region>,
    cache_limit: usize,
    pub nodes: u64,
    budget: u64,
    path: Vec<Frame>,
    task: Vec<usize>,
    every: u64,
    on_checkpoint: Option<&'a mut dyn FnMut(&Cursor)>,
}

impl<'a> Solver<'a> {
    pub fn new(rules: &'a Rules, budget: u64, cache_limit: usize) -> Self {
        Solver {
            rules,
            memo: LengthMemo::default(),
            cache: HashSet::new(),
            cache_limit,
            nodes: 0,
            budget,
            path: Vec::new(),
            task: Vec::new(),
            every: 0,
            on_checkpoint: None,
        }
    }

    pub fn with_checkpoints(mut self, every: u64, f: &'a mut dyn FnMut(&Cursor)) -> Self {
        self.every = every;
        self.on_checkpoint = Some(f);
        self
    }

    /// Runs one task; `resume` holds the cursor frames when restarting
    /// inside it. The full placement list is returned on success.
    pub fn run_task(&mut self, task: &Task, resume: Option<&[Frame]>) -> Step {
        let fresh = resume.is_none_or(|f| f.len() == 1);
        if fresh {
            if self.nodes + task.pre + 1 > self.budget {
                return Err(Stop::Budget(vec![Frame { choice: task.choice, component: 0, solved: Vec::new() }]));
            }
            self.nodes += task.pre;
        }
        self.cache.clear();
        self.path.clear();
        self.task = task.prefix.clone();
        let r = if fresh { None } else { resume };
        Ok(self.explore(&task.parent, task.choice, &task.placement, r)?.map(|sol| {
            let mut all = task.chain.clone();
            all.extend(sol);
            all
        }))
    }

    fn explore(&mut self, region: &Region, choice: usize, pl: &Placement, resume: Option<&[Frame]>) -> Step {
        let inner = resume.filter(|f| f.len() > 1);
        if inner.is_none() {
            if self.nodes >= self.budget {
                let mut frames = self.path.clone();
                frames.push(Frame { choice, component: 0, solved: Vec::new() });
                return Err(Stop::Budget(frames));
            }
            if self.every > 0 && self.nodes % self.every == 0 && !self.path.is_empty() {
                let mut frames = self.path.clone();
                frames.push(Frame { choice, component: 0, solved: Vec::new() });
                let cur = Cursor { nodes: self.nodes, task: self.task.clone(), frames };
                if let Some(f) = self.on_checkpoint.as_mut() {
                    f(&cur);
                }
            }
            self.nodes += 1;
        }
        let comps = region.subtract(&pl.v);
        if !comps.iter().all(|c| self.rules.feasible(c, &mut self.memo)) {
            return Ok(None);
        }
        let (start, solved) = match inner {
            Some(f) => (f[0].component, f[0].solved.clone()),
            None => (0, Vec::new()),
        };
        self.path.push(Frame { choice, component: start, solved });
        for (k, comp) in comps.iter().enumerate().skip(start) {
            self.path.last_mut().expect("frame").component = k;
            let sub = if k == start { inner.map(|f| &f[1..]) } else { None };
            match self.solve(comp, sub) {
                Err(e) => {
                    self.path.pop();
                    return Err(e);
                }
                Ok(None) => {
                    self.path.pop();
                    return Ok(None);
                }
                Ok(Some(s)) => self.path.last_mut().expect("frame").solved.extend(s),
            }
        }
        let frame = self.path.pop().expect("frame");
        let mut all = vec![pl.clone()];
        all.extend(frame.solved);
        Ok(Some(all))
    }

    fn solve(&mut self, region: &Region, resume: Option<&[Frame]>) -> Step {
        if resume.is_none() && self.cache.contains(region) {
            return Ok(None);
        }
        let cands = self.rules.candidates(region);
        let start = resume.map_or(0, |f| f[0].choice);
        for (i, pl) in cands.iter().enumerate().skip(start) {
            let r = if i == start { resume } else { None };
            if let Some(sol) = self.explore(region, i, pl, r)? {
                return Ok(Some(sol));
            }
        }
        if self.cache.len() < self.cache_limit {
            self.cache.insert(region.clone());
        }
        Ok(None)
    }
}

/// Result of running the task list.
pub enum RunEnd {
    Found { nodes: u64, placements: Vec<Placement> },
    Exhausted { nodes: u64 },
    Budget(Cursor),
}

/// Sequential run, optionally from a cursor.
pub fn run_sequential(
    rules: &Rules,
    tasks: &[Task],
    budget: u64,
    cache_limit: usize,
    resume: Option<&Cursor>,
    every: u64,
    sink: &mut dyn FnMut(&Cursor),
) -> RunEnd {
    let mut solver = Solver::new(rules, budget, cache_limit).with_checkpoints(every, sink);
    solver.nodes = resume.map_or(0, |c| c.nodes);
    for t in tasks {
        let r = match resume {
            Some(c) if t.prefix < c.task => continue,
            Some(c) if t.prefix == c.task => Some(c.frames.as_slice()),
            _ => None,
        };
        match solver.run_task(t, r) {
            Ok(Some(placements)) => return RunEnd::Found { nodes: solver.nodes, placements },
            Ok(None) => {}
            Err(Stop::Budget(frames)) => return RunEnd::Budget(Cursor { nodes: solver.nodes, task: t.prefix.clone(), frames }),
        }
    }
    RunEnd::Exhausted { nodes: solver.nodes }
}

enum TaskEnd {
    Found(Vec<Placement>),
    Failed,
    Budget,
}

struct Merge {
    next: usize,
    nodes: u64,
    decided: Option<(usize, bool)>,
}

/// Parallel run. Tasks are merged in order, so the outcome and the node
/// count match `run_sequential` exactly.
pub fn run_parallel(rules: &Rules, tasks: &[Task], budget: u64, cache_limit: usize, workers: usize) -> RunEnd {
    let results: Vec<Mutex<Option<(u64, TaskEnd)>>> = tasks.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let cutoff = AtomicUsize::new(usize::MAX);
    let merge = Mutex::new(Merge { next: 0, nodes: 0, decided: None });
    std::thread::scope(|s| {
        for _ in 0..workers.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= tasks.len() || i > cutoff.load(Ordering::SeqCst) {
                    break;
                }
                let mut solver = Solver::new(rules, budget, cache_limit);
                let end = match solver.run_task(&tasks[i], None) {
                    Ok(Some(p)) => TaskEnd::Found(p),
                    Ok(None) => TaskEnd::Failed,
                    Err(Stop::Budget(_)) => TaskEnd::Budget,
                };
                *results[i].lock().expect("lock") = Some((solver.nodes, end));
                let mut m = merge.lock().expect("lock");
                while m.decided.is_none() && m.next < tasks.len() {
                    let slot = results[m.next].lock().expect("lock");
                    let Some((n, end)) = slot.as_ref() else { break };
                    let over = matches!(end, TaskEnd::Budget) || m.nodes + n > budget;
                    if over {
                        m.decided = Some((m.next, false));
                    } else {
                        m.nodes += n;
                        if matches!(end, TaskEnd::Found(_)) {
                            m.decided = Some((m.next, true));
                        }
                    }
                    drop(slot);
                    if m.decided.is_some() {
                        cutoff.store(m.next, Ordering::SeqCst);
                    } else {
                        m.next += 1;
                    }
                }
            });
        }
    });
    let m = merge.into_inner().expect("lock");
    match m.decided {
        None => RunEnd::Exhausted { nodes: m.nodes },
        Some((i, true)) => {
            let (_, end) = results[i].lock().expect("lock").take().expect("merged");
            let TaskEnd::Found(placements) = end else { unreachable!() };
            RunEnd::Found { nodes: m.nodes, placements }
        }
        Some((i, false)) => {
            // Replay the task that crosses the budget to get its cursor.
            let mut solver = Solver::new(rules, budget, cache_limit);
            solver.nodes = m.nodes;
            match solver.run_task(&tasks[i], None) {
                Err(Stop::Budget(frames)) => RunEnd::Budget(Cursor { nodes: solver.nodes, task: tasks[i].prefix.clone(), frames }),
                _ => unreachable!("task {i} exceeded the budget in parallel but not on replay"),
            }
        }
    }
}
