//! Certificate based Halin recognition.
//!
//! A Halin graph is a tree without degree-2 vertices (a HIT) plus a cycle
//! through its leaves in the order of some plane embedding. A
//! [`HalinCertificate`] names that tree and cycle; [`verify_halin`] checks it.
//! Instead of a planarity test, the leaf order is checked with the edge-split
//! criterion in [`leaf_order_planar`].

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{cycle_spectrum, hamiltonian_connected_brute, Graph, HAMILTONIAN_CONNECTED_BUDGET};

/// Underlying tree plus cyclic leaf order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HalinCertificate {
    pub tree_edges: Vec<(usize, usize)>,
    pub leaf_cycle: Vec<usize>,
}

impl HalinCertificate {
    /// Consecutive pairs of the leaf cycle, including the closing pair.
    pub fn cycle_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.leaf_cycle.len();
        (0..k).map(move |i| (self.leaf_cycle[i], self.leaf_cycle[(i + 1) % k]))
    }

    /// The Halin graph `T ∪ C` itself on `n` vertices.
    pub fn to_graph(&self, n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for (u, v) in self.tree_edges.iter().copied().chain(self.cycle_edges()) {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The underlying tree as a graph on `n` vertices.
    pub fn tree(&self, n: usize) -> Result<Graph> {
        Graph::from_edges(n, self.tree_edges.iter().copied())
    }
}

/// Whether the host may carry edges outside the certificate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// The certificate witnesses a spanning Halin subgraph.
    #[default]
    Subgraph,
    /// The host must be exactly tree plus cycle.
    Exact,
}

/// The clause of the Halin definition a certificate failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Clause {
    /// (a) tree edges lie in the host and form a spanning tree.
    SpanningTree,
    /// (b) the tree has at least 4 vertices and no degree-2 vertex.
    Hit,
    /// (c) cycle edges lie in the host.
    CycleEdges,
    /// (d) the cycle lists exactly the tree leaves.
    CycleLeaves,
    /// (e) the cyclic order is realisable by a plane embedding of the tree.
    LeafOrder,
    /// (f) the host has no edge outside tree and cycle.
    ExactEdges,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::SpanningTree => "spanning-tree",
            Clause::Hit => "hit",
            Clause::CycleEdges => "cycle-edges",
            Clause::CycleLeaves => "cycle-leaves",
            Clause::LeafOrder => "leaf-order",
            Clause::ExactEdges => "exact-edges",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub clause: Clause,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.clause, self.detail)
    }
}

fn fail<T>(clause: Clause, detail: String) -> core::result::Result<T, Failure> {
    Err(Failure { clause, detail })
}

/// `true` iff the tree has at least 4 vertices and no vertex of degree 2.
pub fn is_hit(tree: &Graph) -> Result<bool> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(tree.n() >= 4 && (0..tree.n()).all(|v| tree.degree(v) != 2))
}

/// For every tree edge, the leaves on either side must occupy one contiguous
/// arc of the cyclic `order`. This holds exactly when some plane embedding of
/// the tree visits its leaves in that cyclic order.
pub fn leaf_order_planar(tree: &Graph, order: &[usize]) -> Result<bool> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let n = tree.n();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || tree.degree(v) != 1 || position[v] != usize::MAX {
            return Err(Error::NotLeafPermutation);
        }
        position[v] = i;
    }
    let leaf_count = (0..n).filter(|&v| tree.degree(v) == 1).count();
    if leaf_count != order.len() {
        return Err(Error::NotLeafPermutation);
    }
    Ok(contiguous_splits(tree, &position, order.len()))
}

fn contiguous_splits(tree: &Graph, position: &[usize], k: usize) -> bool {
    if k <= 3 {
        // Every subset of at most three cyclic positions splits into arcs.
        return true;
    }
    let n = tree.n();
    // Root at 0; leaf arcs of each subtree hang below the edge to its parent.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in tree.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut below: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        if position[v] != usize::MAX {
            below[v].push(position[v]);
        }
        if v != 0 {
            let mine = core::mem::take(&mut below[v]);
            if !is_cyclic_arc(&mine, k) {
                return false;
            }
            below[parent[v]].extend_from_slice(&mine);
        }
    }
    true
}

/// A set of positions on a `k`-cycle is an arc iff it has at most one
/// boundary where a member is followed by a non-member.
fn is_cyclic_arc(members: &[usize], k: usize) -> bool {
    if members.is_empty() || members.len() == k {
        return true;
    }
    let mut inside = vec![false; k];
    for &p in members {
        inside[p] = true;
    }
    (0..k).filter(|&i| inside[i] && !inside[(i + 1) % k]).count() == 1
}

/// Checks `cert` against `g`, naming the first failed clause.
pub fn verify_halin(g: &Graph, cert: &HalinCertificate, mode: Mode) -> core::result::Result<(), Failure> {
    let n = g.n();
    // (a)
    let mut tree = Graph::empty(n);
    for &(u, v) in &cert.tree_edges {
        if !g.has_edge(u, v) {
            return fail(Clause::SpanningTree, format!("tree edge {u} {v} not in graph"));
        }
        if !tree.add_edge(u, v).unwrap_or(false) {
            return fail(Clause::SpanningTree, format!("tree edge {u} {v} repeated"));
        }
    }
    if !tree.is_tree() {
        return fail(Clause::SpanningTree, "tree edges do not form a spanning tree".into());
    }
    // (b)
    if n < 4 {
        return fail(Clause::Hit, format!("tree has {n} vertices, need at least 4"));
    }
    if let Some(v) = (0..n).find(|&v| tree.degree(v) == 2) {
        return fail(Clause::Hit, format!("vertex {v} has tree degree 2"));
    }
    // (c)
    if cert.leaf_cycle.len() < 3 {
        return fail(Clause::CycleEdges, "leaf cycle shorter than 3".into());
    }
    if let Some((u, v)) = cert.cycle_edges().find(|&(u, v)| !g.has_edge(u, v)) {
        return fail(Clause::CycleEdges, format!("cycle edge {u} {v} not in graph"));
    }
    // (d)
    let mut position = vec![usize::MAX; n];
    for (i, &v) in cert.leaf_cycle.iter().enumerate() {
        if tree.degree(v) != 1 {
            return fail(Clause::CycleLeaves, format!("cycle vertex {v} is not a tree leaf"));
        }
        if position[v] != usize::MAX {
            return fail(Clause::CycleLeaves, format!("leaf {v} repeated on cycle"));
        }
        position[v] = i;
    }
    if let Some(v) = (0..n).find(|&v| tree.degree(v) == 1 && position[v] == usize::MAX) {
        return fail(Clause::CycleLeaves, format!("leaf {v} missing from cycle"));
    }
    // (e)
    if !contiguous_splits(&tree, &position, cert.leaf_cycle.len()) {
        return fail(Clause::LeafOrder, "leaf order admits no plane embedding".into());
    }
    // (f)
    if mode == Mode::Exact {
        let mut cycle: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (u, v) in cert.cycle_edges() {
            cycle.insert((u.min(v), u.max(v)));
        }
        if let Some((u, v)) = g
            .edges()
            .find(|&(u, v)| !tree.has_edge(u, v) && !cycle.contains(&(u, v)))
        {
            return fail(Clause::ExactEdges, format!("edge {u} {v} outside tree and cycle"));
        }
    }
    Ok(())
}

pub fn is_halin_witness(g: &Graph, cert: &HalinCertificate, mode: Mode) -> bool {
    verify_halin(g, cert, mode).is_ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub hamiltonian: bool,
    pub hamiltonian_connected: bool,
    /// Cycles of every length in `3..=n` except possibly one even length.
    pub almost_pancyclic: bool,
    pub pancyclic: bool,
    pub tree_has_degree3_vertex: bool,
    /// Lengths in `3..=n` with no cycle.
    pub missing_lengths: Vec<usize>,
}

/// Brute-force check of hamiltonicity, hamiltonian-connectedness and
/// (almost) pancyclicity of a graph carrying a valid certificate.
pub fn check_halin_properties(g: &Graph, cert: &HalinCertificate) -> Result<PropertyReport> {
    if g.n() > HAMILTONIAN_CONNECTED_BUDGET {
        return Err(Error::BudgetExceeded {
            limit: HAMILTONIAN_CONNECTED_BUDGET,
            actual: g.n(),
        });
    }
    if let Err(f) = verify_halin(g, cert, Mode::Subgraph) {
        return Err(Error::AssemblyFailed(format!("certificate rejected: {f}")));
    }
    let n = g.n();
    let spectrum = cycle_spectrum(g, HAMILTONIAN_CONNECTED_BUDGET)?;
    let missing_lengths: Vec<usize> = (3..=n).filter(|l| !spectrum.contains(l)).collect();
    let almost_pancyclic = match missing_lengths.as_slice() {
        [] => true,
        [l] => l % 2 == 0,
        _ => false,
    };
    let tree = cert.tree(n)?;
    Ok(PropertyReport {
        hamiltonian: spectrum.contains(&n),
        hamiltonian_connected: hamiltonian_connected_brute(g)?,
        almost_pancyclic,
        pancyclic: missing_lengths.is_empty(),
        tree_has_degree3_vertex: (0..n).any(|v| tree.degree(v) == 3),
        missing_lengths,
    })
}
