//! Exact spanning-Halin-subgraph search for small graphs and the minimum
//! degree experiment built on it.
//!
//! For each candidate internal set `I` the search walks a plane tree
//! depth-first and emits leaves in the order the walk meets them, so the
//! emitted sequence is the leaf cycle. Every plane HIT with a compatible leaf
//! cycle arises from such a walk, which makes the search exhaustive. The walk
//! is rooted at the parent of the lowest leaf and starts by emitting it.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::ones;
use crate::error::{Error, Result};
use crate::generate::{capped_complements, dirac_complement_cap, random_dirac_graph};
use crate::graph::{is_k_connected, Graph};
use crate::verify::{verify_halin, HalinCertificate, Mode};

/// Hard ceiling on [`SearchBudget::max_vertices`].
pub const MAX_SEARCH_VERTICES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_vertices: usize,
    /// Backtracking nodes before the search gives up with a timeout.
    pub max_nodes: u64,
    pub seed: u64,
    /// Reject graphs that are not 3-connected or have no triangle before
    /// searching. Off means the search itself proves every `NoneExists`.
    pub necessary_conditions: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 12,
            max_nodes: 20_000_000,
            seed: 0,
            necessary_conditions: true,
        }
    }
}

impl SearchBudget {
    pub fn with_max_nodes(mut self, max_nodes: u64) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn with_max_vertices(mut self, max_vertices: usize) -> Self {
        self.max_vertices = max_vertices;
        self
    }

    pub fn exhaustive(mut self) -> Self {
        self.necessary_conditions = false;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(HalinCertificate),
    NoneExists,
    /// The node budget ran out; says nothing about existence.
    Timeout,
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&HalinCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

struct Walk<'a> {
    adj: &'a [u32],
    leaves: u32,
    first_leaf: usize,
    nodes: u64,
    max_nodes: u64,
    /// Internal vertices not yet entered.
    unvisited: u32,
    unemitted: u32,
    stack: Vec<usize>,
    on_stack: u32,
    tree_degree: [u8; MAX_SEARCH_VERTICES],
    tree_edges: Vec<(usize, usize)>,
    order: Vec<usize>,
}

enum Step {
    Done,
    Dead,
    Timeout,
}

impl Walk<'_> {
    fn last_leaf(&self) -> usize {
        *self.order.last().expect("the walk starts by emitting a leaf")
    }

    /// Cheap necessary conditions for completing the current partial walk.
    fn feasible(&self) -> bool {
        let open = self.on_stack | self.unvisited;
        for l in ones(self.unemitted) {
            if self.adj[l] & open == 0 {
                return false;
            }
        }
        for v in ones(self.unvisited) {
            if self.adj[v] & open == 0 {
                return false;
            }
        }
        let reachable = self.unemitted | self.unvisited;
        for &v in &self.stack {
            let could = self.tree_degree[v] as u32 + (self.adj[v] & reachable).count_ones();
            if could < 3 {
                return false;
            }
        }
        let last = self.last_leaf();
        if self.unemitted == 0 {
            self.adj[last] & (1 << self.first_leaf) != 0
        } else {
            self.adj[last] & self.unemitted != 0
        }
    }

    fn step(&mut self) -> Step {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Step::Timeout;
        }
        let cur = *self.stack.last().expect("stack holds the root");
        if self.unemitted == 0 && self.unvisited == 0 && self.stack.len() == 1 {
            return if self.tree_degree[cur] >= 3 && self.adj[self.last_leaf()] & (1 << self.first_leaf) != 0 {
                Step::Done
            } else {
                Step::Dead
            };
        }
        if !self.feasible() {
            return Step::Dead;
        }
        // Emit a leaf under `cur`.
        let last = self.last_leaf();
        for l in ones(self.unemitted & self.adj[cur] & self.adj[last]) {
            self.unemitted &= !(1 << l);
            self.tree_degree[cur] += 1;
            self.tree_edges.push((cur, l));
            self.order.push(l);
            match self.step() {
                Step::Dead => {}
                other => return other,
            }
            self.order.pop();
            self.tree_edges.pop();
            self.tree_degree[cur] -= 1;
            self.unemitted |= 1 << l;
        }
        // Descend into a new internal vertex.
        for w in ones(self.unvisited & self.adj[cur]) {
            self.unvisited &= !(1 << w);
            self.tree_degree[cur] += 1;
            self.tree_degree[w] = 1;
            self.tree_edges.push((cur, w));
            self.stack.push(w);
            self.on_stack |= 1 << w;
            match self.step() {
                Step::Dead => {}
                other => return other,
            }
            self.on_stack &= !(1 << w);
            self.stack.pop();
            self.tree_edges.pop();
            self.tree_degree[w] = 0;
            self.tree_degree[cur] -= 1;
            self.unvisited |= 1 << w;
        }
        // Return to the parent.
        if self.stack.len() > 1 && self.tree_degree[cur] >= 3 {
            self.stack.pop();
            self.on_stack &= !(1 << cur);
            match self.step() {
                Step::Dead => {}
                other => return other,
            }
            self.on_stack |= 1 << cur;
            self.stack.push(cur);
        }
        Step::Dead
    }
}

fn connected_mask(adj: &[u32], set: u32) -> bool {
    if set == 0 {
        return false;
    }
    let mut seen = set & set.wrapping_neg();
    loop {
        let mut next = seen;
        for v in ones(seen) {
            next |= adj[v] & set;
        }
        if next == seen {
            return seen == set;
        }
        seen = next;
    }
}

/// Candidate internal sets: connected, every member of degree at least 3,
/// at most `(n - 2) / 2` of them, and every remaining leaf with a neighbour
/// inside and two neighbours outside. Sorted by size, then by mask.
fn internal_sets(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let all = ((1u64 << n) - 1) as u32;
    let mut out: Vec<u32> = (1..=all)
        .filter(|&set| {
            let k = set.count_ones() as usize;
            if 2 * k + 2 > n {
                return false;
            }
            let leaves = all & !set;
            ones(set).all(|v| adj[v].count_ones() >= 3)
                && ones(leaves).all(|l| adj[l] & set != 0 && (adj[l] & leaves).count_ones() >= 2)
                && connected_mask(adj, set)
        })
        .collect();
    out.sort_by_key(|&s| (s.count_ones(), s));
    out
}

/// Searches `g` for a spanning Halin subgraph. Every `Found` certificate has
/// passed [`verify_halin`] in subgraph mode.
pub fn find_spanning_halin(g: &Graph, budget: &SearchBudget) -> Result<SearchOutcome> {
    if budget.max_vertices > MAX_SEARCH_VERTICES {
        return Err(Error::InvalidParameter("search budget allows at most 16 vertices"));
    }
    let n = g.n();
    if n > budget.max_vertices {
        return Err(Error::BudgetExceeded {
            limit: budget.max_vertices,
            actual: n,
        });
    }
    if n < 4 {
        return Ok(SearchOutcome::NoneExists);
    }
    if budget.necessary_conditions && !(is_k_connected(g, 3) && g.has_triangle()) {
        return Ok(SearchOutcome::NoneExists);
    }
    let adj: Vec<u32> = (0..n).map(|v| g.mask(v)).collect();
    let all = ((1u64 << n) - 1) as u32;
    let mut nodes = 0u64;
    for set in internal_sets(&adj) {
        let leaves = all & !set;
        let first_leaf = leaves.trailing_zeros() as usize;
        for root in ones(adj[first_leaf] & set) {
            let mut walk = Walk {
                adj: &adj,
                leaves,
                first_leaf,
                nodes,
                max_nodes: budget.max_nodes,
                unvisited: set & !(1 << root),
                unemitted: leaves & !(1 << first_leaf),
                stack: alloc::vec![root],
                on_stack: 1 << root,
                tree_degree: [0; MAX_SEARCH_VERTICES],
                tree_edges: alloc::vec![(root, first_leaf)],
                order: alloc::vec![first_leaf],
            };
            walk.tree_degree[root] = 1;
            let step = walk.step();
            nodes = walk.nodes;
            match step {
                Step::Done => {
                    debug_assert_eq!(walk.leaves.count_ones() as usize, walk.order.len());
                    let cert = HalinCertificate {
                        tree_edges: walk.tree_edges,
                        leaf_cycle: walk.order,
                    };
                    assert_eq!(verify_halin(g, &cert, Mode::Subgraph), Ok(()), "search returned a bad certificate");
                    return Ok(SearchOutcome::Found(cert));
                }
                Step::Timeout => return Ok(SearchOutcome::Timeout),
                Step::Dead => {}
            }
        }
    }
    Ok(SearchOutcome::NoneExists)
}

/// `true` iff the exhaustive search proves that `K_{n/2,n/2}` has no
/// spanning Halin subgraph. The necessary-condition shortcut is disabled.
pub fn sharpness_probe(n: usize, budget: &SearchBudget) -> Result<bool> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidParameter("probe order must be even and at least 4"));
    }
    let g = Graph::complete_bipartite(n / 2, n / 2);
    match find_spanning_halin(&g, &budget.exhaustive())? {
        SearchOutcome::Found(_) => Ok(false),
        SearchOutcome::NoneExists => Ok(true),
        SearchOutcome::Timeout => Err(Error::SearchTimeout { nodes: budget.max_nodes }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub orders: RangeInclusive<usize>,
    pub samples_per_n: usize,
    /// Orders up to this value are enumerated completely instead of sampled.
    pub exhaustive_up_to: usize,
    /// Add `K_{n/2,n/2}` for even `n`. It sits below the degree threshold,
    /// so it is expected to land among the failures.
    pub include_probes: bool,
    pub budget: SearchBudget,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            orders: 5..=10,
            samples_per_n: 100,
            exhaustive_up_to: 6,
            include_probes: false,
            budget: SearchBudget::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExperimentRow {
    pub n: usize,
    pub sampled: usize,
    pub succeeded: usize,
    pub failed: usize,
    pub timed_out: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExperimentReport {
    pub rows: Vec<ExperimentRow>,
    /// Graphs where the search proved that no spanning Halin subgraph exists.
    pub witnesses: Vec<Graph>,
}

/// Runs the search on graphs with `δ(G) ≥ ⌈(n+1)/2⌉`. Failures are recorded,
/// not raised.
pub fn dirac_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let mut report = ExperimentReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(config.budget.seed);
    for n in config.orders.clone() {
        if n > config.budget.max_vertices {
            return Err(Error::BudgetExceeded {
                limit: config.budget.max_vertices,
                actual: n,
            });
        }
        let mut graphs = if n <= config.exhaustive_up_to {
            capped_complements(n, dirac_complement_cap(n))
        } else {
            (0..config.samples_per_n).map(|_| random_dirac_graph(n, &mut rng)).collect()
        };
        if config.include_probes && n % 2 == 0 && n >= 4 {
            graphs.push(Graph::complete_bipartite(n / 2, n / 2));
        }
        let mut row = ExperimentRow {
            n,
            ..ExperimentRow::default()
        };
        for g in graphs {
            row.sampled += 1;
            match find_spanning_halin(&g, &config.budget)? {
                SearchOutcome::Found(_) => row.succeeded += 1,
                SearchOutcome::NoneExists => {
                    row.failed += 1;
                    report.witnesses.push(g);
                }
                SearchOutcome::Timeout => row.timed_out += 1,
            }
        }
        report.rows.push(row);
    }
    Ok(report)
}
