//! Exact independence-number machinery.
//!
//! Three independent routes are kept deliberately separate so they can check
//! each other:
//!
//! * [`max_independent_set`] - the production branch-and-bound solver
//!   (greedy clique-cover upper bound, max-degree branching, degree-0/1
//!   folding);
//! * [`alpha_bruteforce`] - an exhaustive take/leave recursion with no
//!   shared pruning, capped at [`BRUTE_LIMIT`] vertices;
//! * [`min_vertex_cover`] - an edge-branching exhaustive cover search for
//!   small graphs (the Gallai complement `alpha + tau = |V|` ties it back).
//!
//! [`scan_alpha`] runs the solver over a range of `n` for one classification
//! graph, in parallel across rows, and collects the sequence the analysis
//! module consumes.

use crate::bitset::BitSet;
use crate::expand::{expand, ConcreteGraph, Payload, VertexLabel};
use crate::model::{ClassificationGraph, ValidationError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::time::{Duration, Instant};
use thiserror::Error;

/// Vertex cap for the exhaustive searches ([`alpha_bruteforce`] and the
/// independent vertex-cover route).
pub const BRUTE_LIMIT: usize = 25;

// ============================================================================
// Budgets and results
// ============================================================================

/// Ceilings for one exact solve. `None` means unlimited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: None,
        max_time: None,
    };

    pub fn new(max_nodes: Option<u64>, max_time: Option<Duration>) -> Budget {
        Budget {
            max_nodes,
            max_time,
        }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::UNLIMITED
    }
}

/// Outcome of an exact solve.
#[derive(Clone, Debug)]
pub struct MisResult {
    pub alpha: usize,
    /// Vertex indices of one maximum independent set, ascending.
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// The solve hit a budget ceiling; carries the best bounds proven so far.
#[derive(Clone, Debug, Error)]
#[error("budget exceeded after {nodes_explored} nodes: alpha in [{lower_bound}, {upper_bound}]")]
pub struct BudgetExceeded {
    /// Size of the best independent set found (a valid lower bound).
    pub lower_bound: usize,
    /// Witness for `lower_bound`.
    pub lower_witness: Vec<usize>,
    /// Greedy clique-cover bound on the whole graph.
    pub upper_bound: usize,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("graph has {vertices} vertices; exhaustive search is capped at {limit}")]
    TooLarge { vertices: usize, limit: usize },
}

// ============================================================================
// Branch and bound
// ============================================================================

struct Searcher<'a> {
    closed: Vec<BitSet>, // N[v] = N(v) plus v itself
    adj: &'a [BitSet],
    budget: Budget,
    started: Instant,
    nodes: u64,
    best: Vec<usize>,
    exceeded: bool,
}

impl<'a> Searcher<'a> {
    fn budget_hit(&mut self) -> bool {
        if self.exceeded {
            return true;
        }
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.exceeded = true;
                return true;
            }
        }
        if let Some(max) = self.budget.max_time {
            // Clock checks are amortized; node budgets stay exact.
            if self.nodes % 1024 == 0 && self.started.elapsed() > max {
                self.exceeded = true;
                return true;
            }
        }
        false
    }

    fn clique_cover_bound(&self, cands: &BitSet) -> usize {
        clique_cover_bound(self.adj, cands)
    }

    fn search(&mut self, mut cands: BitSet, current: &mut Vec<usize>) {
        self.nodes += 1;
        if self.budget_hit() {
            return;
        }

        // Fold forced vertices: a degree-0 vertex always joins the set; for
        // a degree-1 vertex, taking the leaf is never worse than its
        // neighbor. Repeat until stable.
        let mut took = 0usize;
        loop {
            let mut folded = None;
            for v in cands.iter() {
                let deg = self.adj[v].intersection_len(&cands);
                if deg == 0 {
                    folded = Some((v, None));
                    break;
                }
                if deg == 1 {
                    let mut nb = self.adj[v].clone();
                    nb.intersect_with(&cands);
                    folded = Some((v, nb.first()));
                    break;
                }
            }
            match folded {
                Some((v, neighbor)) => {
                    current.push(v);
                    took += 1;
                    cands.remove(v);
                    if let Some(u) = neighbor {
                        cands.remove(u);
                    }
                }
                None => break,
            }
        }

        if cands.is_empty() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            current.truncate(current.len() - took);
            return;
        }

        if current.len() + self.clique_cover_bound(&cands) > self.best.len() {
            // Branch on a maximum-degree vertex (ties: lowest index).
            let mut branch = usize::MAX;
            let mut branch_deg = 0;
            for v in cands.iter() {
                let deg = self.adj[v].intersection_len(&cands);
                if branch == usize::MAX || deg > branch_deg {
                    branch = v;
                    branch_deg = deg;
                }
            }

            let mut include = cands.clone();
            include.subtract(&self.closed[branch]);
            current.push(branch);
            self.search(include, current);
            current.pop();

            if !self.exceeded {
                cands.remove(branch);
                self.search(cands, current);
            }
        }

        current.truncate(current.len() - took);
    }
}

/// Greedy clique cover of `cands`: repeatedly grow a clique from the lowest
/// remaining vertex. The number of cliques bounds alpha from above because
/// an independent set meets each clique at most once.
fn clique_cover_bound(adj: &[BitSet], cands: &BitSet) -> usize {
    let mut remaining = cands.clone();
    let mut cliques = 0;
    while let Some(v) = remaining.first() {
        cliques += 1;
        remaining.remove(v);
        let mut ext = remaining.clone();
        ext.intersect_with(&adj[v]);
        while let Some(u) = ext.first() {
            remaining.remove(u);
            ext.remove(u);
            ext.intersect_with(&adj[u]);
        }
    }
    cliques
}

/// Deterministic min-degree greedy independent set, used to seed the
/// incumbent before branching.
fn greedy_independent_set(adj: &[BitSet], v: usize) -> Vec<usize> {
    let mut cands = BitSet::full(v);
    let mut out = Vec::new();
    while !cands.is_empty() {
        let mut pick = usize::MAX;
        let mut pick_deg = usize::MAX;
        for u in cands.iter() {
            let deg = adj[u].intersection_len(&cands);
            if deg < pick_deg {
                pick = u;
                pick_deg = deg;
                if deg == 0 {
                    break;
                }
            }
        }
        out.push(pick);
        cands.remove(pick);
        let mut nb = adj[pick].clone();
        nb.intersect_with(&cands);
        for u in nb.iter() {
            cands.remove(u);
        }
    }
    out.sort_unstable();
    out
}

fn adjacency_bitsets(g: &ConcreteGraph) -> Vec<BitSet> {
    match g.bitsets() {
        Some(bits) => bits.to_vec(),
        None => {
            let v = g.vertex_count();
            (0..v)
                .map(|u| {
                    let mut s = BitSet::new(v);
                    for &w in g.neighbors(u) {
                        s.insert(w as usize);
                    }
                    s
                })
                .collect()
        }
    }
}

/// Connected components as ascending vertex lists, ordered by smallest
/// vertex.
fn components(g: &ConcreteGraph) -> Vec<Vec<usize>> {
    let v = g.vertex_count();
    let mut seen = vec![false; v];
    let mut out = Vec::new();
    for start in 0..v {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w as usize);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Exact maximum independent set by branch and bound.
///
/// Deterministic: branching order and tie-breaks are fixed, so the witness
/// and the node count are reproducible across runs and platforms.
/// Disconnected graphs decompose first - each component is solved
/// independently against the remaining budget and the results are summed.
pub fn max_independent_set(
    g: &ConcreteGraph,
    budget: Budget,
) -> Result<MisResult, BudgetExceeded> {
    let comps = components(g);
    if comps.len() <= 1 {
        return solve_connected(g, budget);
    }

    let started = Instant::now();
    let mut witness: Vec<usize> = Vec::new();
    let mut nodes = 0u64;
    for (ci, comp) in comps.iter().enumerate() {
        let (sub, back) = (crate::expand::induced_subgraph(g, comp), comp);
        let remaining = Budget {
            max_nodes: budget.max_nodes.map(|m| m.saturating_sub(nodes)),
            max_time: budget.max_time.map(|t| t.saturating_sub(started.elapsed())),
        };
        match solve_connected(&sub, remaining) {
            Ok(res) => {
                nodes += res.nodes_explored;
                witness.extend(res.witness.iter().map(|&u| back[u]));
            }
            Err(exceeded) => {
                // Exact prefix plus this component's lower bound plus a
                // greedy set on every untouched component stays a valid
                // lower bound; clique covers bound the rest from above.
                nodes += exceeded.nodes_explored;
                witness.extend(exceeded.lower_witness.iter().map(|&u| back[u]));
                let mut upper = witness.len() + exceeded.upper_bound
                    - exceeded.lower_witness.len();
                for later in &comps[ci + 1..] {
                    let (sub, back) = (crate::expand::induced_subgraph(g, later), later);
                    let adj = adjacency_bitsets(&sub);
                    let greedy = greedy_independent_set(&adj, sub.vertex_count());
                    upper += clique_cover_bound(&adj, &BitSet::full(sub.vertex_count()));
                    witness.extend(greedy.iter().map(|&u| back[u]));
                }
                witness.sort_unstable();
                assert!(g.is_independent_set(&witness));
                return Err(BudgetExceeded {
                    lower_bound: witness.len(),
                    lower_witness: witness,
                    upper_bound: upper,
                    nodes_explored: nodes,
                    elapsed: started.elapsed(),
                });
            }
        }
    }
    witness.sort_unstable();
    assert!(g.is_independent_set(&witness));
    Ok(MisResult {
        alpha: witness.len(),
        witness,
        nodes_explored: nodes,
        elapsed: started.elapsed(),
    })
}

/// Branch and bound on one (not necessarily connected) graph without
/// decomposition.
fn solve_connected(g: &ConcreteGraph, budget: Budget) -> Result<MisResult, BudgetExceeded> {
    let started = Instant::now();
    let v = g.vertex_count();
    let adj = adjacency_bitsets(g);
    let closed: Vec<BitSet> = adj
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let mut c = s.clone();
            c.insert(i);
            c
        })
        .collect();

    let incumbent = greedy_independent_set(&adj, v);
    let mut searcher = Searcher {
        closed,
        adj: &adj,
        budget,
        started,
        nodes: 0,
        best: incumbent,
        exceeded: false,
    };
    let root_upper = searcher.clique_cover_bound(&BitSet::full(v));
    let mut current = Vec::new();
    searcher.search(BitSet::full(v), &mut current);

    let mut witness = searcher.best;
    witness.sort_unstable();
    assert!(
        g.is_independent_set(&witness),
        "solver produced a non-independent witness"
    );
    if searcher.exceeded {
        return Err(BudgetExceeded {
            lower_bound: witness.len(),
            lower_witness: witness,
            upper_bound: root_upper,
            nodes_explored: searcher.nodes,
            elapsed: started.elapsed(),
        });
    }
    Ok(MisResult {
        alpha: witness.len(),
        witness,
        nodes_explored: searcher.nodes,
        elapsed: started.elapsed(),
    })
}

// ============================================================================
// Independent oracles
// ============================================================================

/// Exhaustive take/leave recursion. No bounds, no vertex-selection
/// heuristics, no folding - nothing shared with [`max_independent_set`] -
/// so it can serve as an oracle for it. Capped at [`BRUTE_LIMIT`] vertices.
pub fn alpha_bruteforce(g: &ConcreteGraph) -> Result<usize, SolverError> {
    let v = g.vertex_count();
    if v > BRUTE_LIMIT {
        return Err(SolverError::TooLarge {
            vertices: v,
            limit: BRUTE_LIMIT,
        });
    }
    let mut closed = vec![0u64; v];
    for u in 0..v {
        closed[u] |= 1 << u;
        for &w in g.neighbors(u) {
            closed[u] |= 1 << w;
        }
    }
    fn go(cands: u64, closed: &[u64]) -> usize {
        if cands == 0 {
            return 0;
        }
        let v = cands.trailing_zeros() as usize;
        let take = 1 + go(cands & !closed[v], closed);
        let leave = go(cands & !(1u64 << v), closed);
        take.max(leave)
    }
    let all = if v == 0 { 0 } else { (1u64 << v) - 1 };
    Ok(go(all, &closed))
}

/// How a vertex cover (and hence a Krull dimension) was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverMethod {
    /// Edge-branching exhaustive search, independent of the MIS solver.
    ExhaustiveSearch,
    /// Complement of a maximum independent set (Gallai), for graphs above
    /// [`BRUTE_LIMIT`].
    ComplementOfAlpha,
}

#[derive(Clone, Debug)]
pub struct VertexCoverResult {
    pub size: usize,
    pub witness: Vec<usize>,
    pub method: CoverMethod,
}

/// Exhaustive minimum vertex cover by branching on an uncovered edge: one of
/// its endpoints must join the cover. Exact; exponential only in the cover
/// size.
fn vertex_cover_exhaustive(g: &ConcreteGraph) -> (usize, Vec<usize>) {
    let v = g.vertex_count();
    debug_assert!(v <= BRUTE_LIMIT);
    let edges = g.edges();
    let all = if v == 0 { 0u64 } else { (1u64 << v) - 1 };

    fn first_uncovered(edges: &[(u32, u32)], cover: u64) -> Option<(u32, u32)> {
        edges
            .iter()
            .copied()
            .find(|&(a, b)| cover & (1 << a) == 0 && cover & (1 << b) == 0)
    }

    fn go(edges: &[(u32, u32)], cover: u64, size: usize, best: &mut (usize, u64)) {
        if size >= best.0 {
            return;
        }
        match first_uncovered(edges, cover) {
            None => *best = (size, cover),
            Some((a, b)) => {
                go(edges, cover | (1 << a), size + 1, best);
                go(edges, cover | (1 << b), size + 1, best);
            }
        }
    }

    let mut best = (v, all);
    if first_uncovered(&edges, 0).is_none() {
        best = (0, 0);
    } else {
        go(&edges, 0, 0, &mut best);
    }
    let witness = (0..v).filter(|&i| best.1 & (1 << i) != 0).collect();
    (best.0, witness)
}

/// Minimum vertex cover. Uses its own exhaustive search up to
/// [`BRUTE_LIMIT`] vertices (an independent check on the MIS solver via
/// `alpha + tau = |V|`); larger graphs go through the complement of a
/// maximum independent set.
pub fn min_vertex_cover(g: &ConcreteGraph) -> VertexCoverResult {
    let v = g.vertex_count();
    let result = if v <= BRUTE_LIMIT {
        let (size, witness) = vertex_cover_exhaustive(g);
        VertexCoverResult {
            size,
            witness,
            method: CoverMethod::ExhaustiveSearch,
        }
    } else {
        let mis = max_independent_set(g, Budget::UNLIMITED)
            .expect("unlimited budget cannot be exceeded");
        let in_mis: Vec<bool> = {
            let mut marks = vec![false; v];
            for &u in &mis.witness {
                marks[u] = true;
            }
            marks
        };
        VertexCoverResult {
            size: v - mis.alpha,
            witness: (0..v).filter(|&u| !in_mis[u]).collect(),
            method: CoverMethod::ComplementOfAlpha,
        }
    };
    debug_assert!(g.is_vertex_cover(&result.witness));
    result
}

// ============================================================================
// Alpha sequences
// ============================================================================

/// Completion status of one scan row.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    /// `alpha` is exact.
    Ok,
    /// The budget ran out; `alpha` is the best lower bound.
    Budget,
}

/// One `(n, alpha)` measurement with solve statistics.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlphaRecord {
    pub n: u32,
    pub alpha: usize,
    /// Clique-cover upper bound, present on budget-exceeded rows.
    pub upper_bound: Option<usize>,
    pub vertices: usize,
    pub edges: usize,
    pub nodes_explored: u64,
    pub millis: u128,
    pub status: RowStatus,
    /// Rendered vertex labels of the witness.
    pub witness: Vec<String>,
}

impl AlphaRecord {
    pub fn is_complete(&self) -> bool {
        self.status == RowStatus::Ok
    }

    /// SHA-256 over the witness labels.
    pub fn witness_digest(&self) -> String {
        let mut hasher = Sha256::new();
        for w in &self.witness {
            hasher.update(w.as_bytes());
            hasher.update(b"\n");
        }
        crate::model::hex_string(&hasher.finalize())
    }
}

/// The alpha sequence of one classification graph over a contiguous range
/// of `n`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlphaSequence {
    /// Digest of the classification graph that produced the rows.
    pub source_digest: String,
    pub rows: Vec<AlphaRecord>,
}

#[derive(Debug, Error)]
pub enum ScanError {
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("scan range has n_min {n_min} > n_max {n_max}")]
    EmptyRange { n_min: u32, n_max: u32 },
}

/// Expands and solves each `n` in `n_min..=n_max` (rows run in parallel;
/// results are collected in `n` order). Budget exhaustion marks the row
/// incomplete instead of aborting the scan.
pub fn scan_alpha(
    c: &ClassificationGraph,
    n_min: u32,
    n_max: u32,
    budget: Budget,
) -> Result<AlphaSequence, ScanError> {
    c.validate()?;
    if n_min > n_max {
        return Err(ScanError::EmptyRange { n_min, n_max });
    }
    let rows: Vec<AlphaRecord> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| {
            let g = expand(c, n).expect("validated above");
            solve_row(&g, n, budget)
        })
        .collect();

    // The inclusion maps make each G_n induced in G_{n+1}, so exact alpha
    // values can never decrease. A violation is a solver bug.
    let complete: Vec<&AlphaRecord> = rows.iter().filter(|r| r.is_complete()).collect();
    for pair in complete.windows(2) {
        assert!(
            pair[0].alpha <= pair[1].alpha,
            "alpha sequence decreased between n = {} and n = {}",
            pair[0].n,
            pair[1].n
        );
    }

    Ok(AlphaSequence {
        source_digest: c.digest(),
        rows,
    })
}

fn solve_row(g: &ConcreteGraph, n: u32, budget: Budget) -> AlphaRecord {
    let render = |witness: &[usize]| -> Vec<String> {
        witness.iter().map(|&v| g.label(v).render()).collect()
    };
    match max_independent_set(g, budget) {
        Ok(res) => AlphaRecord {
            n,
            alpha: res.alpha,
            upper_bound: None,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            nodes_explored: res.nodes_explored,
            millis: res.elapsed.as_millis(),
            status: RowStatus::Ok,
            witness: render(&res.witness),
        },
        Err(exceeded) => AlphaRecord {
            n,
            alpha: exceeded.lower_bound,
            upper_bound: Some(exceeded.upper_bound),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            nodes_explored: exceeded.nodes_explored,
            millis: exceeded.elapsed.as_millis(),
            status: RowStatus::Budget,
            witness: render(&exceeded.lower_witness),
        },
    }
}

#[derive(Debug, Error)]
pub enum SequenceIoError {
    #[error("csv: {0}")]
    Csv(String),
    #[error("json: {0}")]
    Json(String),
    #[error("row {row}: {message}")]
    Row { row: usize, message: String },
}

impl AlphaSequence {
    /// CSV with columns `n,alpha,vertices,edges,nodes_explored,millis,status`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "alpha", "vertices", "edges", "nodes_explored", "millis", "status"])
            .expect("csv header");
        for r in &self.rows {
            let status = match r.status {
                RowStatus::Ok => "ok",
                RowStatus::Budget => "budget",
            };
            w.write_record([
                r.n.to_string(),
                r.alpha.to_string(),
                r.vertices.to_string(),
                r.edges.to_string(),
                r.nodes_explored.to_string(),
                r.millis.to_string(),
                status.to_string(),
            ])
            .expect("csv row");
        }
        String::from_utf8(w.into_inner().expect("csv flush")).expect("csv is utf-8")
    }

    /// Reads the CSV form back. Witnesses and upper bounds are not part of
    /// the CSV schema and come back empty.
    pub fn from_csv(text: &str) -> Result<AlphaSequence, SequenceIoError> {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let mut rows = Vec::new();
        for (i, record) in reader.records().enumerate() {
            let record = record.map_err(|e| SequenceIoError::Csv(e.to_string()))?;
            let field = |idx: usize| -> Result<&str, SequenceIoError> {
                record.get(idx).ok_or(SequenceIoError::Row {
                    row: i,
                    message: format!("missing column {idx}"),
                })
            };
            let parse_u = |idx: usize| -> Result<u64, SequenceIoError> {
                field(idx)?.parse().map_err(|_| SequenceIoError::Row {
                    row: i,
                    message: format!("bad number in column {idx}"),
                })
            };
            let status = match field(6)? {
                "ok" => RowStatus::Ok,
                "budget" => RowStatus::Budget,
                other => {
                    return Err(SequenceIoError::Row {
                        row: i,
                        message: format!("unknown status {other:?}"),
                    })
                }
            };
            rows.push(AlphaRecord {
                n: parse_u(0)? as u32,
                alpha: parse_u(1)? as usize,
                upper_bound: None,
                vertices: parse_u(2)? as usize,
                edges: parse_u(3)? as usize,
                nodes_explored: parse_u(4)?,
                millis: parse_u(5)? as u128,
                status,
                witness: Vec::new(),
            });
        }
        Ok(AlphaSequence {
            source_digest: String::new(),
            rows,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("sequence serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<AlphaSequence, SequenceIoError> {
        serde_json::from_str(text).map_err(|e| SequenceIoError::Json(e.to_string()))
    }

    /// `(n, alpha)` pairs when every row is complete and the range is
    /// contiguous; `None` otherwise.
    pub fn complete_points(&self) -> Option<Vec<(i64, i64)>> {
        if self.rows.is_empty() {
            return Some(Vec::new());
        }
        let mut points = Vec::with_capacity(self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            if !r.is_complete() {
                return None;
            }
            if i > 0 && r.n != self.rows[i - 1].n + 1 {
                return None;
            }
            points.push((r.n as i64, r.alpha as i64));
        }
        Some(points)
    }

    pub fn alphas(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.alpha).collect()
    }
}

// ============================================================================
// Seeded random graphs (test instances for the oracle suites)
// ============================================================================

/// Erdos-Renyi style `G(v, p)` with a fixed seed; vertices are labeled
/// `v:1 .. v:|V|`.
pub fn random_graph(v: usize, edge_probability: f64, seed: u64) -> ConcreteGraph {
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            if rng.random_bool(edge_probability) {
                edges.push((a as u32, b as u32));
            }
        }
    }
    let vertices: Vec<VertexLabel> = (1..=v as u32)
        .map(|i| VertexLabel {
            orbit: "v".to_string(),
            payload: Payload::Element(i),
        })
        .collect();
    ConcreteGraph::from_edges(v as u32, vertices, &edges)
}
