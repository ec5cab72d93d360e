//! The arrowing search.
//!
//! Colorings of `K_N` are built edge by edge in the canonical colex order,
//! so every search prefix is a fully colored complete subgraph. A branch is
//! pruned as soon as the newly colored edge completes a monochromatic copy
//! of the target: every completion of that prefix contains the copy, so it
//! cannot yield a witness. A full-depth leaf is therefore exactly a coloring
//! with no monochromatic target, i.e. an `arrows = false` witness.
//!
//! Symmetry breaking: edge `{0,1}` is red (color swap), and vertex 0's red
//! neighborhood is forced to be a prefix `{1..d}` of the other vertices
//! (relabeling of `1..N-1`). Both are sound for the symmetric arrowing
//! question and leave every coloring reachable up to isomorphism.
//!
//! The tree splits into branches at a fixed shallow depth. Branches are
//! processed in canonical order, possibly by several workers; the reported
//! witness is always the one the sequential search would find first, so the
//! verdict and witness are identical across worker counts. Node and time
//! budgets abort the whole search with a resumable checkpoint that records
//! which branches finished.

use super::{canonical_edges, mono_copy, ArrowingVerdict, ColoredCompleteGraph};
use crate::graph::SimpleGraph;
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Largest supported board. Adjacency rows are single machine words.
pub const MAX_VERTICES: usize = 64;

const NODE_FLUSH: u64 = 256;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    pub workers: usize,
    /// Depth (edge count) at which the tree is split into branches.
    pub split_depth: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: None,
            time_budget: None,
            workers: 1,
            split_depth: 14,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub wall_ms: u64,
}

/// Resumable search state: the set of finished branches at the split depth.
/// Branches are re-enumerated deterministically on resume.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Checkpoint {
    pub n: usize,
    pub pattern: SimpleGraph,
    pub split_depth: usize,
    pub branch_count: usize,
    pub completed: Vec<usize>,
    pub nodes: u64,
    pub prunes: u64,
    pub wall_ms: u64,
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("{0} vertices exceed the engine limit of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("search budget exceeded after {} nodes", .stats.nodes)]
    BudgetExceeded {
        checkpoint: Box<Checkpoint>,
        stats: SearchStats,
    },
    #[error("no N <= {n_max} arrows the target")]
    CapExceeded { n_max: usize },
    #[error("checkpoint does not match this search ({0})")]
    CheckpointMismatch(&'static str),
}

// ---------------------------------------------------------------------------
// Incremental monochromatic-copy detection
// ---------------------------------------------------------------------------

/// Anchored placement orders for the target pattern, one per orbit of
/// ordered pattern edges under the automorphism group. A copy of the pattern
/// through a given host edge exists iff one of these anchored searches
/// succeeds with the anchor mapped onto that edge.
struct MonoChecker {
    anchors: Vec<Anchored>,
    pattern_n: usize,
}

struct Anchored {
    /// Pattern vertices in placement order; position 0 maps to the first
    /// host endpoint, position 1 to the second.
    verts: Vec<usize>,
    /// For each position >= 2, the positions of earlier-placed neighbors.
    prior: Vec<Vec<usize>>,
    /// Pattern degree per position.
    pat_deg: Vec<u32>,
}

impl MonoChecker {
    fn build(pattern: &SimpleGraph) -> Self {
        let reps = ordered_edge_orbit_reps(pattern);
        let anchors = reps
            .into_iter()
            .map(|(x, y)| Anchored::build(pattern, x, y))
            .collect();
        MonoChecker {
            anchors,
            pattern_n: pattern.n(),
        }
    }

    /// Is there a copy of the pattern in the one-color graph `rows` that
    /// uses the (already colored) host edge `{u, v}`?
    fn copy_through(&self, rows: &[u64], u: usize, v: usize, img: &mut [usize]) -> bool {
        if self.pattern_n > rows.len() {
            return false;
        }
        for a in &self.anchors {
            for (p0, p1) in [(u, v), (v, u)] {
                if rows[p0].count_ones() < a.pat_deg[0] || rows[p1].count_ones() < a.pat_deg[1] {
                    continue;
                }
                img[0] = p0;
                img[1] = p1;
                let used = 1u64 << p0 | 1u64 << p1;
                if a.extend(rows, 2, used, img) {
                    return true;
                }
            }
        }
        false
    }
}

impl Anchored {
    fn build(pattern: &SimpleGraph, x: usize, y: usize) -> Self {
        let n = pattern.n();
        let mut placed = vec![false; n];
        let mut verts = vec![x, y];
        placed[x] = true;
        placed[y] = true;
        while verts.len() < n {
            let mut best: Option<(usize, usize, std::cmp::Reverse<usize>)> = None;
            let mut best_v = 0;
            for v in 0..n {
                if placed[v] {
                    continue;
                }
                let pn = pattern.neighbors(v).filter(|&u| placed[u]).count();
                let key = (pn, pattern.degree(v), std::cmp::Reverse(v));
                if best.map_or(true, |b| key > b) {
                    best = Some(key);
                    best_v = v;
                }
            }
            placed[best_v] = true;
            verts.push(best_v);
        }
        let pos_of = |v: usize| verts.iter().position(|&w| w == v).unwrap();
        let prior = verts
            .iter()
            .map(|&v| {
                let mut ps: Vec<usize> = pattern
                    .neighbors(v)
                    .filter(|&u| pos_of(u) < pos_of(v))
                    .map(pos_of)
                    .collect();
                ps.sort_unstable();
                ps
            })
            .collect();
        let pat_deg = verts.iter().map(|&v| pattern.degree(v) as u32).collect();
        Anchored {
            verts,
            prior,
            pat_deg,
        }
    }

    fn extend(&self, rows: &[u64], pos: usize, used: u64, img: &mut [usize]) -> bool {
        if pos == self.verts.len() {
            return true;
        }
        let full: u64 = if rows.len() == 64 {
            !0
        } else {
            (1u64 << rows.len()) - 1
        };
        let mut cand = full & !used;
        for &j in &self.prior[pos] {
            cand &= rows[img[j]];
        }
        let need = self.pat_deg[pos];
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if rows[w].count_ones() < need {
                continue;
            }
            img[pos] = w;
            if self.extend(rows, pos + 1, used | 1u64 << w, img) {
                return true;
            }
        }
        false
    }
}

/// All adjacency-preserving vertex bijections of `g`, or `None` when the
/// group is larger than `cap` (dense symmetric patterns; callers fall back
/// to using every ordered edge).
fn automorphisms(g: &SimpleGraph, cap: usize) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &SimpleGraph,
        v: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> bool {
        let n = g.n();
        if v == n {
            out.push(image.clone());
            return out.len() <= cap;
        }
        for w in 0..n {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).any(|p| g.has_edge(p, v) != g.has_edge(image[p], w)) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            let ok = rec(g, v + 1, image, used, out, cap);
            used[w] = false;
            image[v] = usize::MAX;
            if !ok {
                return false;
            }
        }
        true
    }
    if rec(g, 0, &mut image, &mut used, &mut out, cap) {
        Some(out)
    } else {
        None
    }
}

/// One representative per orbit of ordered pattern edges under the
/// automorphism group (all ordered edges when the group is too large to
/// enumerate). For cycles this collapses to a single anchor.
fn ordered_edge_orbit_reps(pattern: &SimpleGraph) -> Vec<(usize, usize)> {
    let ordered: Vec<(usize, usize)> = pattern
        .edges()
        .flat_map(|(u, v)| [(u, v), (v, u)])
        .collect();
    let auts = match automorphisms(pattern, 5000) {
        Some(a) => a,
        None => return ordered,
    };
    let mut reps = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &(x, y) in &ordered {
        if seen.contains(&(x, y)) {
            continue;
        }
        reps.push((x, y));
        for sigma in &auts {
            seen.insert((sigma[x], sigma[y]));
        }
    }
    reps
}

// ---------------------------------------------------------------------------
// The DFS
// ---------------------------------------------------------------------------

struct Shared {
    nodes: AtomicU64,
    prunes: AtomicU64,
    node_budget: Option<u64>,
    deadline: Option<Instant>,
    budget_hit: AtomicBool,
    /// Smallest branch index known to contain a witness.
    best_branch: AtomicUsize,
}

impl Shared {
    fn new(cfg: &SearchConfig, base_nodes: u64, base_prunes: u64) -> Self {
        Shared {
            nodes: AtomicU64::new(base_nodes),
            prunes: AtomicU64::new(base_prunes),
            node_budget: cfg.node_budget,
            deadline: cfg.time_budget.map(|d| Instant::now() + d),
            budget_hit: AtomicBool::new(false),
            best_branch: AtomicUsize::new(usize::MAX),
        }
    }
}

#[derive(PartialEq)]
enum Flow {
    Exhausted,
    Found,
    Aborted,
}

struct Searcher<'a> {
    n: usize,
    t_total: usize,
    edges: &'a [(usize, usize)],
    checker: &'a MonoChecker,
    red: Vec<u64>,
    blue: Vec<u64>,
    img: Vec<usize>,
    branch_idx: usize,
    local_nodes: u64,
    local_prunes: u64,
    unflushed: u64,
    shared: &'a Shared,
    witness_red: Option<Vec<(usize, usize)>>,
}

impl<'a> Searcher<'a> {
    fn new(
        n: usize,
        edges: &'a [(usize, usize)],
        checker: &'a MonoChecker,
        shared: &'a Shared,
        branch_idx: usize,
    ) -> Self {
        Searcher {
            n,
            t_total: edges.len(),
            edges,
            checker,
            red: vec![0; n],
            blue: vec![0; n],
            img: vec![0; n.max(2)],
            branch_idx,
            local_nodes: 0,
            local_prunes: 0,
            unflushed: 0,
            shared,
            witness_red: None,
        }
    }

    /// Replays a branch prefix (already known to be live).
    fn apply_prefix(&mut self, mask: u64, depth: usize) {
        for (t, &(u, v)) in self.edges[..depth].iter().enumerate() {
            let rows = if mask >> t & 1 == 1 {
                &mut self.red
            } else {
                &mut self.blue
            };
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }

    #[inline]
    fn red_allowed(&self, t: usize, u: usize, v: usize) -> bool {
        // vertex 0's red neighborhood must stay a prefix of 1..n-1
        t == 0 || u != 0 || self.red[0] >> (v - 1) & 1 == 1
    }

    #[inline]
    fn blue_allowed(&self, t: usize) -> bool {
        t != 0 // edge {0,1} is red by color-swap symmetry
    }

    /// Returns false when the search must abort (budget, or a witness in an
    /// earlier branch makes this one irrelevant).
    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        self.unflushed += 1;
        if self.unflushed >= NODE_FLUSH {
            let total = self
                .shared
                .nodes
                .fetch_add(self.unflushed, Ordering::Relaxed)
                + self.unflushed;
            self.unflushed = 0;
            if let Some(budget) = self.shared.node_budget {
                if total > budget {
                    self.shared.budget_hit.store(true, Ordering::Relaxed);
                }
            }
            if let Some(deadline) = self.shared.deadline {
                if Instant::now() >= deadline {
                    self.shared.budget_hit.store(true, Ordering::Relaxed);
                }
            }
            if self.shared.budget_hit.load(Ordering::Relaxed) {
                return false;
            }
            if self.shared.best_branch.load(Ordering::Relaxed) < self.branch_idx {
                return false;
            }
        }
        true
    }

    fn flush(&mut self) {
        let total = self
            .shared
            .nodes
            .fetch_add(self.unflushed, Ordering::Relaxed)
            + self.unflushed;
        self.shared
            .prunes
            .fetch_add(self.local_prunes, Ordering::Relaxed);
        self.unflushed = 0;
        self.local_prunes = 0;
        if let Some(budget) = self.shared.node_budget {
            if total > budget {
                self.shared.budget_hit.store(true, Ordering::Relaxed);
            }
        }
        if let Some(deadline) = self.shared.deadline {
            if Instant::now() >= deadline {
                self.shared.budget_hit.store(true, Ordering::Relaxed);
            }
        }
    }

    fn dfs(&mut self, t: usize) -> Flow {
        if t == self.t_total {
            let mut red_edges = Vec::new();
            for u in 0..self.n {
                for v in u + 1..self.n {
                    if self.red[u] >> v & 1 == 1 {
                        red_edges.push((u, v));
                    }
                }
            }
            self.witness_red = Some(red_edges);
            return Flow::Found;
        }
        let (u, v) = self.edges[t];
        for red in [true, false] {
            if red && !self.red_allowed(t, u, v) {
                continue;
            }
            if !red && !self.blue_allowed(t) {
                continue;
            }
            if !self.tick() {
                return Flow::Aborted;
            }
            let rows = if red { &mut self.red } else { &mut self.blue };
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
            let rows_ref = if red { &self.red } else { &self.blue };
            let pruned = self.checker.copy_through(rows_ref, u, v, &mut self.img);
            let flow = if pruned {
                self.local_prunes += 1;
                Flow::Exhausted
            } else {
                self.dfs(t + 1)
            };
            let rows = if red { &mut self.red } else { &mut self.blue };
            rows[u] &= !(1 << v);
            rows[v] &= !(1 << u);
            if flow != Flow::Exhausted {
                return flow;
            }
        }
        Flow::Exhausted
    }

    /// Enumerates live prefixes at `depth` in DFS order. Returns `None` on
    /// abort (only possible via budgets; `count_nodes` is false on resume
    /// replays, which also disables budget aborts here).
    fn enumerate(&mut self, depth: usize, count_nodes: bool, out: &mut Vec<u64>) -> bool {
        fn rec(s: &mut Searcher, t: usize, depth: usize, mask: u64, count: bool, out: &mut Vec<u64>) -> bool {
            if t == depth {
                out.push(mask);
                return true;
            }
            let (u, v) = s.edges[t];
            for red in [true, false] {
                if red && !s.red_allowed(t, u, v) {
                    continue;
                }
                if !red && !s.blue_allowed(t) {
                    continue;
                }
                if count && !s.tick() {
                    return false;
                }
                let rows = if red { &mut s.red } else { &mut s.blue };
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
                let rows_ref = if red { &s.red } else { &s.blue };
                let pruned = s.checker.copy_through(rows_ref, u, v, &mut s.img);
                let ok = if pruned {
                    if count {
                        s.local_prunes += 1;
                    }
                    true
                } else {
                    rec(s, t + 1, depth, mask | (red as u64) << t, count, out)
                };
                let rows = if red { &mut s.red } else { &mut s.blue };
                rows[u] &= !(1 << v);
                rows[v] &= !(1 << u);
                if !ok {
                    return false;
                }
            }
            true
        }
        rec(self, 0, depth, 0, count_nodes, out)
    }
}

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

/// Does every 2-coloring of `K_n` contain a monochromatic copy of `target`?
pub fn arrows(n: usize, target: &SimpleGraph) -> Result<ArrowingVerdict, EngineError> {
    arrows_with(n, target, &SearchConfig::default(), None)
}

pub fn arrows_with(
    n: usize,
    target: &SimpleGraph,
    cfg: &SearchConfig,
    resume: Option<&Checkpoint>,
) -> Result<ArrowingVerdict, EngineError> {
    if n > MAX_VERTICES {
        return Err(EngineError::TooManyVertices(n));
    }
    let start = Instant::now();
    let base_wall = resume.map_or(0, |c| c.wall_ms);
    let finish = |arrows: bool, witness: Option<ColoredCompleteGraph>, nodes, prunes| {
        let verdict = ArrowingVerdict {
            arrows,
            witness,
            stats: SearchStats {
                nodes,
                prunes,
                wall_ms: base_wall + start.elapsed().as_millis() as u64,
            },
        };
        if let Some(w) = &verdict.witness {
            // soundness gate: the witness must survive the independent
            // (non-incremental) monochromatic-copy search
            assert!(
                mono_copy(w, target).is_none(),
                "internal error: witness contains a monochromatic target"
            );
        }
        Ok(verdict)
    };

    // trivial sizes: too few vertices cannot host the target
    if target.n() > n {
        let witness = ColoredCompleteGraph::from_red_subgraph(SimpleGraph::complete(n));
        return finish(false, Some(witness), 0, 0);
    }
    // an edgeless target embeds into any color class
    if target.edge_count() == 0 {
        return finish(true, None, 0, 0);
    }

    let edges = canonical_edges(n);
    let t_total = edges.len();
    let checker = MonoChecker::build(target);
    let split = if t_total > cfg.split_depth {
        cfg.split_depth.min(48)
    } else {
        0
    };

    // checkpoints that never reached the branch stage restart this board
    // (carrying their accumulated stats)
    let fresh_resume = resume.map_or(true, |c| c.branch_count == 0 && c.completed.is_empty());
    if let Some(c) = resume {
        if c.n != n {
            return Err(EngineError::CheckpointMismatch("vertex count"));
        }
        if c.pattern != *target {
            return Err(EngineError::CheckpointMismatch("pattern"));
        }
        if !fresh_resume && c.split_depth != split {
            return Err(EngineError::CheckpointMismatch("split depth"));
        }
    }

    let shared = Shared::new(cfg, resume.map_or(0, |c| c.nodes), resume.map_or(0, |c| c.prunes));

    // branch prefixes at the split depth (a single empty prefix for small
    // boards); bounded work, replayed without node counting on resume
    let mut branches = Vec::new();
    if split == 0 {
        branches.push(0u64);
    } else {
        let mut s = Searcher::new(n, &edges, &checker, &shared, 0);
        let done = s.enumerate(split, fresh_resume, &mut branches);
        s.flush();
        if !done {
            let stats = snapshot_stats(&shared, base_wall, start);
            return Err(EngineError::BudgetExceeded {
                checkpoint: Box::new(Checkpoint {
                    n,
                    pattern: target.clone(),
                    split_depth: split,
                    branch_count: 0,
                    completed: vec![],
                    nodes: stats.nodes,
                    prunes: stats.prunes,
                    wall_ms: stats.wall_ms,
                }),
                stats,
            });
        }
    }
    if let Some(c) = resume {
        if !fresh_resume && c.branch_count != branches.len() {
            return Err(EngineError::CheckpointMismatch("branch count"));
        }
    }

    let completed: Vec<AtomicBool> = (0..branches.len()).map(|_| AtomicBool::new(false)).collect();
    if let Some(c) = resume {
        for &i in &c.completed {
            if i >= branches.len() {
                return Err(EngineError::CheckpointMismatch("completed branch index"));
            }
            completed[i].store(true, Ordering::Relaxed);
        }
    }

    let witness_slot: Mutex<Option<(usize, Vec<(usize, usize)>)>> = Mutex::new(None);
    let run_branch = |idx: usize| {
        if completed[idx].load(Ordering::Relaxed) {
            return;
        }
        if shared.budget_hit.load(Ordering::Relaxed)
            || shared.best_branch.load(Ordering::Relaxed) < idx
        {
            return;
        }
        let mut s = Searcher::new(n, &edges, &checker, &shared, idx);
        s.apply_prefix(branches[idx], split);
        let flow = s.dfs(split);
        s.flush();
        match flow {
            Flow::Exhausted => {
                completed[idx].store(true, Ordering::Relaxed);
            }
            Flow::Found => {
                completed[idx].store(true, Ordering::Relaxed);
                let red = s.witness_red.take().unwrap();
                let mut slot = witness_slot.lock().unwrap();
                if slot.as_ref().map_or(true, |(best, _)| idx < *best) {
                    *slot = Some((idx, red));
                    shared.best_branch.fetch_min(idx, Ordering::Relaxed);
                }
            }
            Flow::Aborted => {}
        }
    };

    if cfg.workers <= 1 {
        for idx in 0..branches.len() {
            run_branch(idx);
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .expect("worker pool");
        pool.install(|| {
            use rayon::prelude::*;
            (0..branches.len()).into_par_iter().for_each(&run_branch);
        });
    }

    let stats = snapshot_stats(&shared, base_wall, start);
    let slot = witness_slot.into_inner().unwrap();
    if let Some((idx, red)) = slot {
        // the witness is reported only when every earlier branch finished,
        // so the result matches the sequential search exactly; otherwise the
        // branch is re-opened in the checkpoint and a resumed run will
        // rediscover the canonical witness
        if (0..idx).all(|i| completed[i].load(Ordering::Relaxed)) {
            let witness = ColoredCompleteGraph::from_red_edges(n, red).unwrap();
            return finish(false, Some(witness), stats.nodes, stats.prunes);
        }
        completed[idx].store(false, Ordering::Relaxed);
    }
    if completed.iter().all(|c| c.load(Ordering::Relaxed)) {
        return finish(true, None, stats.nodes, stats.prunes);
    }
    debug_assert!(shared.budget_hit.load(Ordering::Relaxed));
    let done: Vec<usize> = (0..branches.len())
        .filter(|&i| completed[i].load(Ordering::Relaxed))
        .collect();
    Err(EngineError::BudgetExceeded {
        checkpoint: Box::new(Checkpoint {
            n,
            pattern: target.clone(),
            split_depth: split,
            branch_count: branches.len(),
            completed: done,
            nodes: stats.nodes,
            prunes: stats.prunes,
            wall_ms: stats.wall_ms,
        }),
        stats,
    })
}

fn snapshot_stats(shared: &Shared, base_wall: u64, start: Instant) -> SearchStats {
    SearchStats {
        nodes: shared.nodes.load(Ordering::Relaxed),
        prunes: shared.prunes.load(Ordering::Relaxed),
        wall_ms: base_wall + start.elapsed().as_millis() as u64,
    }
}

/// Least `N ≤ n_max` with `arrows(N, target) = true`, along with the verdict
/// trail. The node budget, when set, is shared across the whole ascent.
pub fn ramsey_number(target: &SimpleGraph, n_max: usize) -> Result<usize, EngineError> {
    ramsey_number_with(target, n_max, &SearchConfig::default(), None).map(|(n, _)| n)
}

pub fn ramsey_number_with(
    target: &SimpleGraph,
    n_max: usize,
    cfg: &SearchConfig,
    resume: Option<&Checkpoint>,
) -> Result<(usize, Vec<ArrowingVerdict>), EngineError> {
    assert!(n_max >= target.n(), "cap below the target size");
    let mut verdicts = Vec::new();
    let mut spent = SearchStats::default();
    let start_n = resume.map_or_else(|| target.n().max(1), |c| c.n);
    let mut resume = resume;
    for n in start_n..=n_max {
        let mut sub = cfg.clone();
        if let Some(budget) = cfg.node_budget {
            if spent.nodes >= budget {
                // construct a checkpoint that simply restarts this N
                return Err(EngineError::BudgetExceeded {
                    checkpoint: Box::new(Checkpoint {
                        n,
                        pattern: target.clone(),
                        split_depth: 0,
                        branch_count: 0,
                        completed: vec![],
                        nodes: 0,
                        prunes: 0,
                        wall_ms: 0,
                    }),
                    stats: spent,
                });
            }
            sub.node_budget = Some(budget - spent.nodes);
        }
        let verdict = arrows_with(n, target, &sub, resume.take().filter(|c| c.n == n))
            .map_err(|e| match e {
                EngineError::BudgetExceeded { checkpoint, stats } => EngineError::BudgetExceeded {
                    checkpoint,
                    stats: SearchStats {
                        nodes: spent.nodes + stats.nodes,
                        prunes: spent.prunes + stats.prunes,
                        wall_ms: spent.wall_ms + stats.wall_ms,
                    },
                },
                other => other,
            })?;
        spent.nodes += verdict.stats.nodes;
        spent.prunes += verdict.stats.prunes;
        spent.wall_ms += verdict.stats.wall_ms;
        let hit = verdict.arrows;
        verdicts.push(verdict);
        if hit {
            return Ok((n, verdicts));
        }
    }
    Err(EngineError::CapExceeded { n_max })
}
