//! Simple undirected graphs on dense vertex ids `0..n`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{ones, BitSet};
use crate::error::{Error, Result};

/// Default vertex limit for [`cycle_spectrum`].
pub const CYCLE_SPECTRUM_BUDGET: usize = 16;
/// Default vertex limit for [`hamiltonian_connected_brute`].
pub const HAMILTONIAN_CONNECTED_BUDGET: usize = 14;
/// Hard ceiling for the subset dynamic programs (one `u32` per subset).
const SUBSET_DP_CEILING: usize = 24;

/// A simple undirected graph. Neighbour lists are kept sorted and mirrored in
/// a bit matrix so adjacency tests are O(1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<BitSet>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            rows: vec![BitSet::new(n); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(Error::MultiEdge(u, v));
            }
        }
        Ok(g)
    }

    /// Inserts `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.rows[u].contains(v) {
            return Ok(false);
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        let pos = self.adj[u].partition_point(|&w| w < v);
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].partition_point(|&w| w < u);
        self.adj[v].insert(pos, u);
        self.edge_count += 1;
        Ok(true)
    }

    /// Removes `uv`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() || !self.rows[u].contains(v) {
            return false;
        }
        self.rows[u].remove(v);
        self.rows[v].remove(u);
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
        self.edge_count -= 1;
        true
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub(crate) fn row(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    /// Neighbourhood of `v` as a bit mask; only valid for `n <= 32`.
    pub(crate) fn mask(&self, v: usize) -> u32 {
        self.adj[v].iter().fold(0, |m, &w| m | (1 << w))
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("in range");
            }
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v).expect("in range");
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n).expect("in range");
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v).expect("in range");
        }
        g
    }

    /// Wheel with hub `0` and rim `1..=k` (so `k + 1` vertices).
    pub fn wheel(k: usize) -> Self {
        let mut g = Graph::empty(k + 1);
        for i in 1..=k {
            g.add_edge(0, i).expect("in range");
            g.add_edge(i, if i == k { 1 } else { i + 1 }).expect("in range");
        }
        g
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        g
    }

    /// Subgraph induced on `vs`; vertex `i` of the result is `vs[i]`.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::empty(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("in range");
                }
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_avoiding(&[])
    }

    /// Connectivity of the graph with `removed` deleted. The empty graph counts
    /// as connected.
    pub fn is_connected_avoiding(&self, removed: &[usize]) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let Some(start) = (0..n).find(|&v| !seen[v]) else {
            return true;
        };
        let mut reached = 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached + removed.len() == n
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count + 1 == self.n() && self.is_connected()
    }

    pub fn has_triangle(&self) -> bool {
        self.edges()
            .any(|(u, v)| self.rows[u].intersection_len(&self.rows[v]) > 0)
    }

    /// Single-source BFS distances; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Sorted set of distinct vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut v: Vec<usize> = vs.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Like [`VertexSet::new`] but checks every id against `g`.
    pub fn within<I: IntoIterator<Item = usize>>(g: &Graph, vs: I) -> Result<Self> {
        let set = Self::new(vs);
        set.0.iter().try_for_each(|&v| g.check_vertex(v))?;
        Ok(set)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub(crate) fn bits(&self, capacity: usize) -> BitSet {
        let mut b = BitSet::new(capacity);
        for &v in &self.0 {
            b.insert(v);
        }
        b
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// `deg(v, S)`: neighbours of `v` inside `s`.
pub fn degree_into(g: &Graph, v: usize, s: &VertexSet) -> usize {
    s.iter().filter(|&w| g.has_edge(v, w)).count()
}

/// `Γ(U, S)`: vertices of `s` adjacent to every vertex of `u`.
pub fn common_neighbors(g: &Graph, u: &VertexSet, s: &VertexSet) -> Result<VertexSet> {
    if u.is_empty() {
        return Err(Error::UndefinedIntersection);
    }
    u.iter().chain(s.iter()).try_for_each(|v| g.check_vertex(v))?;
    let mut acc = s.bits(g.n());
    for v in u.iter() {
        acc.intersect_with(g.row(v));
    }
    Ok(VertexSet(acc.iter().collect()))
}

/// `max(0, |S| - k(|S| - δ(U, S)))` with `k = |U|`; never exceeds
/// `|common_neighbors(g, u, s)|`.
pub fn common_neighbor_lower_bound(g: &Graph, u: &VertexSet, s: &VertexSet) -> Result<usize> {
    if u.is_empty() {
        return Err(Error::UndefinedIntersection);
    }
    u.iter().chain(s.iter()).try_for_each(|v| g.check_vertex(v))?;
    let min_deg = u.iter().map(|v| degree_into(g, v, s)).min().unwrap_or(0);
    let deficit = u.len() * (s.len() - min_deg);
    Ok(s.len().saturating_sub(deficit))
}

/// `true` iff `g` has more than `k` vertices and no vertex cut of size below
/// `k`. Cuts are enumerated directly, so `k` is limited to `1..=3`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    assert!((1..=3).contains(&k), "k must be 1, 2 or 3");
    let n = g.n();
    if n <= k {
        return false;
    }
    match k {
        1 => g.is_connected(),
        2 => g.is_connected() && (0..n).all(|a| g.is_connected_avoiding(&[a])),
        _ => {
            g.is_connected()
                && (0..n).all(|a| {
                    g.is_connected_avoiding(&[a])
                        && (a + 1..n).all(|b| g.is_connected_avoiding(&[a, b]))
                })
        }
    }
}

fn check_budget(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit.min(SUBSET_DP_CEILING) {
        return Err(Error::BudgetExceeded {
            limit: limit.min(SUBSET_DP_CEILING),
            actual: g.n(),
        });
    }
    Ok(())
}

/// All cycle lengths present in `g`, computed exhaustively by a subset
/// dynamic program over paths rooted at their smallest vertex.
pub fn cycle_spectrum(g: &Graph, max_n: usize) -> Result<BTreeSet<usize>> {
    check_budget(g, max_n)?;
    let n = g.n();
    let masks: Vec<u32> = (0..n).map(|v| g.mask(v)).collect();
    let mut lengths = BTreeSet::new();
    let mut reach: Vec<u32> = Vec::new();
    for s in 0..n {
        // Subsets of {s..n-1} containing s, indexed relative to s.
        let width = n - s;
        reach.clear();
        reach.resize(1 << width, 0);
        reach[1] = 1;
        let ns = masks[s] >> s;
        for mask in 1u32..(1 << width) {
            if mask & 1 == 0 || reach[mask as usize] == 0 {
                continue;
            }
            let ends = reach[mask as usize];
            let size = mask.count_ones() as usize;
            if size >= 3 && ends & ns != 0 {
                lengths.insert(size);
            }
            for v in ones(ends) {
                let ext = (masks[v + s] >> s) & !mask;
                for w in ones(ext) {
                    reach[(mask | (1 << w)) as usize] |= 1 << w;
                }
            }
        }
    }
    Ok(lengths)
}

/// For a fixed start `a`, the set of vertices `b` such that a hamiltonian
/// `(a, b)`-path exists.
fn hamiltonian_path_ends(masks: &[u32], a: usize, reach: &mut Vec<u32>) -> u32 {
    let n = masks.len();
    reach.clear();
    reach.resize(1 << n, 0);
    reach[1 << a] = 1 << a;
    for mask in 1u32..(1 << n) {
        let ends = reach[mask as usize];
        if ends == 0 {
            continue;
        }
        for v in ones(ends) {
            for w in ones(masks[v] & !mask) {
                reach[(mask | (1 << w)) as usize] |= 1 << w;
            }
        }
    }
    reach[(1usize << n) - 1]
}

/// `true` iff every pair of distinct vertices is joined by a hamiltonian path.
pub fn hamiltonian_connected_brute(g: &Graph) -> Result<bool> {
    check_budget(g, HAMILTONIAN_CONNECTED_BUDGET)?;
    let n = g.n();
    if n <= 1 {
        return Ok(true);
    }
    let masks: Vec<u32> = (0..n).map(|v| g.mask(v)).collect();
    let all = ((1u64 << n) - 1) as u32;
    let mut reach = Vec::new();
    for a in 0..n {
        let ends = hamiltonian_path_ends(&masks, a, &mut reach);
        if ends | (1 << a) != all {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive search for a hamiltonian `(a, b)`-path; `None` if there is none.
pub fn hamiltonian_path_exhaustive(
    g: &Graph,
    a: usize,
    b: usize,
    limit: usize,
) -> Result<Option<Vec<usize>>> {
    check_budget(g, limit)?;
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let n = g.n();
    if n == 1 {
        return Ok((a == b).then(|| vec![a]));
    }
    if a == b {
        return Ok(None);
    }
    let masks: Vec<u32> = (0..n).map(|v| g.mask(v)).collect();
    let mut reach = Vec::new();
    let ends = hamiltonian_path_ends(&masks, a, &mut reach);
    if ends & (1 << b) == 0 {
        return Ok(None);
    }
    // Walk back from b through the reach table.
    let mut path = vec![b];
    let mut mask = ((1u64 << n) - 1) as u32;
    let mut cur = b;
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << cur);
        let prev = ones(reach[prev_mask as usize] & masks[cur])
            .next()
            .expect("reach table is consistent");
        path.push(prev);
        mask = prev_mask;
        cur = prev;
    }
    path.reverse();
    debug_assert_eq!(path[0], a);
    Ok(Some(path))
}

/// `true` iff `g` has a hamiltonian cycle (exhaustive).
pub fn is_hamiltonian_brute(g: &Graph, limit: usize) -> Result<bool> {
    let n = g.n();
    if n < 3 {
        check_budget(g, limit)?;
        return Ok(false);
    }
    Ok(cycle_spectrum(g, limit)?.contains(&n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::new(vs.iter().copied())
    }

    #[test]
    fn common_neighbors_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(common_neighbors(&k4, &set(&[0, 1]), &set(&[2, 3])).unwrap(), set(&[2, 3]));

        let c5 = Graph::cycle(5);
        let all = set(&[0, 1, 2, 3, 4]);
        assert_eq!(common_neighbors(&c5, &set(&[0, 2]), &all).unwrap(), set(&[1]));

        let k33 = Graph::complete_bipartite(3, 3);
        let all6 = set(&[0, 1, 2, 3, 4, 5]);
        assert_eq!(common_neighbors(&k33, &set(&[0, 1]), &all6).unwrap(), set(&[3, 4, 5]));

        assert_eq!(
            common_neighbors(&k4, &VertexSet::default(), &all),
            Err(Error::UndefinedIntersection)
        );
    }

    #[test]
    fn lower_bound_examples() {
        // Three vertices complete to a 10-set.
        let mut g = Graph::empty(13);
        for u in 10..13 {
            for s in 0..10 {
                g.add_edge(u, s).unwrap();
            }
        }
        let s: VertexSet = (0..10).collect();
        assert_eq!(common_neighbor_lower_bound(&g, &set(&[10, 11, 12]), &s).unwrap(), 10);

        // k = 2, δ(U,S) = 8: the first vertex misses 2, the second misses 1.
        let mut g = Graph::empty(12);
        for s in 0..8 {
            g.add_edge(10, s).unwrap();
        }
        for s in 0..9 {
            g.add_edge(11, s).unwrap();
        }
        assert_eq!(common_neighbor_lower_bound(&g, &set(&[10, 11]), &s).unwrap(), 6);

        let c5 = Graph::cycle(5);
        let all = set(&[0, 1, 2, 3, 4]);
        assert_eq!(common_neighbor_lower_bound(&c5, &set(&[0, 2]), &all).unwrap(), 0);
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_k_connected(&Graph::complete(4), 3));
        assert!(!is_k_connected(&Graph::path(4), 2));
        assert!(is_k_connected(&Graph::complete_bipartite(3, 3), 3));
        assert!(!is_k_connected(&Graph::complete(3), 3));
        assert!(is_k_connected(&Graph::cycle(5), 2));
        assert!(!is_k_connected(&Graph::cycle(5), 3));
    }

    #[test]
    fn spectrum_examples() {
        let s = |g: &Graph| cycle_spectrum(g, 16).unwrap().into_iter().collect::<Vec<_>>();
        assert_eq!(s(&Graph::complete(4)), [3, 4]);
        assert_eq!(s(&Graph::cycle(6)), [6]);
        assert_eq!(s(&Graph::wheel(5)), [3, 4, 5, 6]);
        assert_eq!(s(&Graph::path(5)), Vec::<usize>::new());
        assert!(matches!(
            cycle_spectrum(&Graph::complete(17), 16),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn hamiltonian_connected_examples() {
        assert!(hamiltonian_connected_brute(&Graph::complete(4)).unwrap());
        assert!(!hamiltonian_connected_brute(&Graph::cycle(5)).unwrap());
        assert!(hamiltonian_connected_brute(&Graph::wheel(4)).unwrap());
        assert!(hamiltonian_connected_brute(&Graph::complete(15)).is_err());
    }

    #[test]
    fn exhaustive_path_reconstructs() {
        let g = Graph::wheel(6);
        let p = hamiltonian_path_exhaustive(&g, 1, 4, 20).unwrap().unwrap();
        assert_eq!(p.len(), 7);
        assert_eq!((p[0], p[6]), (1, 4));
        assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
        // C5 has a hamiltonian (a, b)-path exactly for adjacent a, b.
        let c5 = Graph::cycle(5);
        assert!(hamiltonian_path_exhaustive(&c5, 0, 1, 20).unwrap().is_some());
        assert!(hamiltonian_path_exhaustive(&c5, 0, 2, 20).unwrap().is_none());
    }

    #[test]
    fn mutation_keeps_symmetry() {
        let mut g = Graph::empty(5);
        assert!(g.add_edge(0, 3).unwrap());
        assert!(!g.add_edge(3, 0).unwrap());
        assert_eq!(g.add_edge(2, 2), Err(Error::SelfLoop(2)));
        assert!(g.add_edge(0, 7).is_err());
        assert!(g.has_edge(3, 0));
        assert!(g.remove_edge(3, 0));
        assert!(!g.has_edge(0, 3));
        assert_eq!(g.edge_count(), 0);
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(Error::MultiEdge(1, 0)));
    }

    #[test]
    fn triangles_and_trees() {
        assert!(Graph::complete(3).has_triangle());
        assert!(!Graph::complete_bipartite(3, 3).has_triangle());
        assert!(Graph::path(4).is_tree());
        assert!(!Graph::cycle(4).is_tree());
    }
}
