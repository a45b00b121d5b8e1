//! Spanning ladders with prescribed end rungs in dense graphs.
//!
//! A perfect matching `M` between the classes `U` and `V` supplies the rungs.
//! The auxiliary graph `H'` has one node per matching edge, and `xy ~ uv` iff
//! `x ~ v` and `y ~ u`, so a hamiltonian path in `H'` is exactly a ladder whose
//! rungs are `M`. Pairs of rungs can be merged into one node. A merged node
//! closes one ladder and opens the next, which yields several vertex-disjoint
//! ladders from one path.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{hamiltonian_path_exhaustive, Graph};
use crate::ladder::Ladder;

/// Largest graph handed to the exhaustive fallback by [`dirac_ham_path`].
pub const STRICT_FALLBACK_LIMIT: usize = 12;
/// Largest auxiliary graph handed to the exhaustive fallback by
/// [`find_spanning_ladders`] after rotation–extension gives up.
pub const FINDER_FALLBACK_LIMIT: usize = 20;
const RESTARTS: u64 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    U,
    V,
}

/// A 2-colouring of the vertex set. Only `U`–`V` edges are used as rungs or
/// ladder edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    in_u: Vec<bool>,
}

impl Bipartition {
    /// `u` lists the `U` class, everything else is `V`.
    pub fn from_classes(n: usize, u: &[usize]) -> Result<Self> {
        let mut in_u = vec![false; n];
        for &v in u {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            in_u[v] = true;
        }
        Ok(Bipartition { in_u })
    }

    /// The natural bipartition of a bipartite graph, or `None`. Each
    /// component's lowest vertex goes to `U`.
    pub fn from_coloring(g: &Graph) -> Option<Self> {
        let n = g.n();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(true);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for &w in g.neighbors(v) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(d) if d == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition {
            in_u: colour.into_iter().map(|c| c.unwrap()).collect(),
        })
    }

    /// A uniformly random balanced split of `0..n` (`n` even) that honours
    /// `pins`.
    pub fn balanced_random<R: Rng + ?Sized>(n: usize, pins: &[(usize, Class)], rng: &mut R) -> Result<Self> {
        if n % 2 != 0 {
            return Err(Error::InvalidRequest("balanced bipartition needs an even order"));
        }
        let mut fixed: Vec<Option<Class>> = vec![None; n];
        for &(v, c) in pins {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if fixed[v].is_some_and(|d| d != c) {
                return Err(Error::InvalidRequest("vertex pinned to both classes"));
            }
            fixed[v] = Some(c);
        }
        let pinned_u = fixed.iter().filter(|c| **c == Some(Class::U)).count();
        let pinned_v = fixed.iter().filter(|c| **c == Some(Class::V)).count();
        if pinned_u > n / 2 || pinned_v > n / 2 {
            return Err(Error::InvalidRequest("pins overfill a class"));
        }
        let mut free: Vec<usize> = (0..n).filter(|&v| fixed[v].is_none()).collect();
        free.shuffle(rng);
        let mut in_u: Vec<bool> = fixed.iter().map(|c| *c == Some(Class::U)).collect();
        for &v in &free[..n / 2 - pinned_u] {
            in_u[v] = true;
        }
        Ok(Bipartition { in_u })
    }

    pub fn n(&self) -> usize {
        self.in_u.len()
    }

    pub fn class(&self, v: usize) -> Class {
        if self.in_u[v] {
            Class::U
        } else {
            Class::V
        }
    }

    pub fn u_class(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.in_u[v]).collect()
    }

    pub fn v_class(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| !self.in_u[v]).collect()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.u_class().len() == self.n()
    }

    /// `(u, v)` with `u ∈ U` and `v ∈ V`, or `None` for an edge inside a class.
    pub fn orient(&self, (x, y): (usize, usize)) -> Option<(usize, usize)> {
        match (self.in_u.get(x)?, self.in_u.get(y)?) {
            (true, false) => Some((x, y)),
            (false, true) => Some((y, x)),
            _ => None,
        }
    }
}

/// `true` iff `path` is a hamiltonian `(a, b)`-path of `g`.
pub fn is_hamiltonian_path(g: &Graph, path: &[usize], a: usize, b: usize) -> bool {
    let n = g.n();
    if path.len() != n || path.first() != Some(&a) || path.last() != Some(&b) {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in path {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Path with a fixed first vertex, supporting rotations at the far end.
struct RotPath {
    path: Vec<usize>,
    on: BitSet,
}

impl RotPath {
    fn end(&self) -> usize {
        *self.path.last().unwrap()
    }

    fn push(&mut self, v: usize) {
        self.path.push(v);
        self.on.insert(v);
    }
}

/// Rotation–extension for a hamiltonian `(a, b)`-path: grow a path from `a`
/// over `V - b`, rotating whenever the end is stuck, and finish once the end
/// sees `b`. Neighbours are scanned in `order`, so one call is deterministic.
fn rotation_extension(g: &Graph, a: usize, b: usize, order: &[usize]) -> Option<Vec<usize>> {
    let n = g.n();
    let rank = {
        let mut rank = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        rank
    };
    let mut cur = RotPath {
        path: vec![a],
        on: BitSet::new(n),
    };
    cur.on.insert(a);
    cur.on.insert(b);
    let ranked = |v: usize| {
        let mut nb: Vec<usize> = g.neighbors(v).to_vec();
        nb.sort_by_key(|&w| rank[w]);
        nb
    };
    loop {
        // Extend greedily.
        while let Some(w) = ranked(cur.end()).into_iter().find(|&w| !cur.on.contains(w)) {
            cur.push(w);
        }
        let covered = cur.path.len() == n - 1;
        let goal = |p: &[usize]| {
            let e = *p.last().unwrap();
            if covered {
                g.has_edge(e, b)
            } else {
                g.neighbors(e).iter().any(|&w| !cur.on.contains(w))
            }
        };
        if goal(&cur.path) {
            if covered {
                cur.path.push(b);
                return Some(cur.path);
            }
            continue;
        }
        // Breadth-first over rotations until some end satisfies the goal.
        let mut seen_end = BitSet::new(n);
        seen_end.insert(cur.end());
        let mut queue = VecDeque::from([cur.path.clone()]);
        let mut found = None;
        'bfs: while let Some(p) = queue.pop_front() {
            let last = p.len() - 1;
            let mut pos = vec![usize::MAX; n];
            for (i, &v) in p.iter().enumerate() {
                pos[v] = i;
            }
            for w in ranked(p[last]) {
                let i = pos[w];
                if i == usize::MAX || i + 1 >= last {
                    continue;
                }
                let new_end = p[i + 1];
                if seen_end.contains(new_end) {
                    continue;
                }
                seen_end.insert(new_end);
                let mut q = p.clone();
                q[i + 1..].reverse();
                if goal(&q) {
                    found = Some(q);
                    break 'bfs;
                }
                queue.push_back(q);
            }
        }
        match found {
            Some(p) => cur.path = p,
            None => return None,
        }
    }
}

fn seeded_ham_path(g: &Graph, a: usize, b: usize, seed: u64) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 1 {
        return (a == b).then(|| vec![a]);
    }
    if a == b {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    for attempt in 0..RESTARTS {
        if attempt > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
            order.shuffle(&mut rng);
        }
        if let Some(p) = rotation_extension(g, a, b, &order) {
            return Some(p);
        }
    }
    None
}

/// A hamiltonian `(a, b)`-path. Dense graphs (`δ ≥ n/2 + 1`) go through
/// rotation–extension, graphs on at most [`STRICT_FALLBACK_LIMIT`] vertices
/// through exhaustive search. Anything else has no constructive guarantee.
pub fn dirac_ham_path(g: &Graph, a: usize, b: usize) -> Result<Vec<usize>> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let n = g.n();
    let path = if 2 * g.min_degree() >= n + 2 {
        match seeded_ham_path(g, a, b, 0) {
            Some(p) => Some(p),
            None if n <= STRICT_FALLBACK_LIMIT => hamiltonian_path_exhaustive(g, a, b, STRICT_FALLBACK_LIMIT)?,
            None => None,
        }
    } else if n <= STRICT_FALLBACK_LIMIT {
        hamiltonian_path_exhaustive(g, a, b, STRICT_FALLBACK_LIMIT)?
    } else {
        return Err(Error::NoConstructiveGuarantee);
    };
    let path = path.ok_or(Error::NoHamiltonianPath)?;
    assert!(is_hamiltonian_path(g, &path, a, b));
    Ok(path)
}

/// A perfect `U`–`V` matching containing every edge of `forced`, as `(u, v)`
/// pairs. Forced edges come first in the given order, the rest follow by `u`.
pub fn perfect_matching_with_forced(
    g: &Graph,
    parts: &Bipartition,
    forced: &[(usize, usize)],
) -> Result<Vec<(usize, usize)>> {
    let n = g.n();
    if parts.n() != n {
        return Err(Error::InvalidRequest("bipartition does not match the graph"));
    }
    if !parts.is_balanced() {
        return Err(Error::InvalidRequest("bipartition is not balanced"));
    }
    let mut used = vec![false; n];
    let mut out = Vec::with_capacity(n / 2);
    for &e in forced {
        let (u, v) = parts.orient(e).ok_or(Error::InvalidRequest("forced edge inside a class"))?;
        if !g.has_edge(u, v) {
            return Err(Error::InvalidRequest("forced edge missing from the graph"));
        }
        if used[u] || used[v] {
            return Err(Error::InvalidRequest("forced edges share a vertex"));
        }
        used[u] = true;
        used[v] = true;
        out.push((u, v));
    }
    let us: Vec<usize> = parts.u_class().into_iter().filter(|&v| !used[v]).collect();
    let mut mate_of_v: Vec<Option<usize>> = vec![None; n];
    for &u in &us {
        let mut visited_v = vec![false; n];
        if !augment(g, parts, &used, u, &mut visited_v, &mut mate_of_v) {
            // Alternating reach of u is a Hall violator.
            let mut visited_v = vec![false; n];
            let mut reach_u = Vec::new();
            alternating_reach(g, parts, &used, u, &mate_of_v, &mut visited_v, &mut reach_u);
            let mut neighbours: Vec<usize> = (0..n).filter(|&v| visited_v[v]).collect();
            reach_u.sort_unstable();
            neighbours.sort_unstable();
            return Err(Error::NoPerfectMatching {
                deficient: reach_u,
                neighbours,
            });
        }
    }
    let mut rest: Vec<(usize, usize)> = (0..n).filter_map(|v| mate_of_v[v].map(|u| (u, v))).collect();
    rest.sort_unstable();
    out.extend(rest);
    Ok(out)
}

fn augment(
    g: &Graph,
    parts: &Bipartition,
    used: &[bool],
    u: usize,
    visited_v: &mut [bool],
    mate_of_v: &mut [Option<usize>],
) -> bool {
    for &v in g.neighbors(u) {
        if used[v] || visited_v[v] || parts.class(v) != Class::V {
            continue;
        }
        visited_v[v] = true;
        let free = match mate_of_v[v] {
            None => true,
            Some(w) => augment(g, parts, used, w, visited_v, mate_of_v),
        };
        if free {
            mate_of_v[v] = Some(u);
            return true;
        }
    }
    false
}

fn alternating_reach(
    g: &Graph,
    parts: &Bipartition,
    used: &[bool],
    u: usize,
    mate_of_v: &[Option<usize>],
    visited_v: &mut [bool],
    reach_u: &mut Vec<usize>,
) {
    reach_u.push(u);
    for &v in g.neighbors(u) {
        if used[v] || visited_v[v] || parts.class(v) != Class::V {
            continue;
        }
        visited_v[v] = true;
        if let Some(w) = mate_of_v[v] {
            alternating_reach(g, parts, used, w, mate_of_v, visited_v, reach_u);
        }
    }
}

/// A node of `H'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxNode {
    Rung(usize, usize),
    /// Closes one ladder with `close` and opens the next with `open`.
    Merged { close: (usize, usize), open: (usize, usize) },
}

impl AuxNode {
    fn rungs(&self) -> impl Iterator<Item = (usize, usize)> {
        let (first, second) = match *self {
            AuxNode::Rung(u, v) => ((u, v), None),
            AuxNode::Merged { close, open } => (close, Some(open)),
        };
        core::iter::once(first).chain(second)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryGraph {
    pub nodes: Vec<AuxNode>,
    pub graph: Graph,
}

impl AuxiliaryGraph {
    /// Index of the node holding the rung `(u, v)`.
    pub fn node_of(&self, rung: (usize, usize)) -> Option<usize> {
        self.nodes.iter().position(|n| n.rungs().any(|r| r == rung))
    }
}

/// `xy ~ uv` in `H'`.
fn crosswise(g: &Graph, (x, y): (usize, usize), (u, v): (usize, usize)) -> bool {
    g.has_edge(x, v) && g.has_edge(y, u)
}

/// `H'` over the oriented matching `m`. Each `identify` pair `(close, open)`
/// becomes one merged node adjacent to `pq` iff `pq` is crosswise adjacent
/// to both rungs.
pub fn build_aux_graph(
    g: &Graph,
    parts: &Bipartition,
    m: &[(usize, usize)],
    identify: &[((usize, usize), (usize, usize))],
) -> Result<AuxiliaryGraph> {
    let orient = |e| parts.orient(e).ok_or(Error::InvalidRequest("rung inside a class"));
    let m: Vec<(usize, usize)> = m.iter().map(|&e| orient(e)).collect::<Result<_>>()?;
    let mut merged_away = vec![false; m.len()];
    let mut nodes = Vec::with_capacity(m.len());
    let mut pending = Vec::new();
    for &(c, o) in identify {
        let (c, o) = (orient(c)?, orient(o)?);
        let ic = m.iter().position(|&e| e == c);
        let io = m.iter().position(|&e| e == o);
        match (ic, io) {
            (Some(ic), Some(io)) if ic != io && !merged_away[ic] && !merged_away[io] => {
                merged_away[ic] = true;
                merged_away[io] = true;
                pending.push(AuxNode::Merged { close: c, open: o });
            }
            _ => return Err(Error::InvalidRequest("identified rungs must be distinct matching edges")),
        }
    }
    for (i, &(u, v)) in m.iter().enumerate() {
        if !merged_away[i] {
            nodes.push(AuxNode::Rung(u, v));
        }
    }
    nodes.extend(pending);
    let mut h = Graph::empty(nodes.len());
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            let adjacent = nodes[i]
                .rungs()
                .all(|r| nodes[j].rungs().all(|s| crosswise(g, r, s)));
            if adjacent {
                h.add_edge(i, j)?;
            }
        }
    }
    Ok(AuxiliaryGraph { nodes, graph: h })
}

/// Turns a node path of `H'` into ladders, splitting at merged nodes.
pub fn unfold(aux: &AuxiliaryGraph, path: &[usize]) -> Result<Vec<Ladder>> {
    let mut out = Vec::new();
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for &i in path {
        match aux.nodes[i] {
            AuxNode::Rung(u, v) => {
                a.push(u);
                b.push(v);
            }
            AuxNode::Merged { close, open } => {
                a.push(close.0);
                b.push(close.1);
                out.push(Ladder::from_sides(core::mem::take(&mut a), core::mem::take(&mut b))?);
                a.push(open.0);
                b.push(open.1);
            }
        }
    }
    out.push(Ladder::from_sides(a, b)?);
    Ok(out)
}

/// Inverse of [`unfold`]: the node path of `H'` that the ladders spell.
pub fn fold(aux: &AuxiliaryGraph, ladders: &[Ladder]) -> Option<Vec<usize>> {
    let mut path = Vec::new();
    for (k, l) in ladders.iter().enumerate() {
        for (i, r) in l.rungs().enumerate() {
            let node = aux.node_of((r.a, r.b))?;
            // The opening rung of every ladder after the first is already
            // covered by the merged node that closed the previous one.
            if k > 0 && i == 0 {
                continue;
            }
            path.push(node);
        }
    }
    Some(path)
}

/// What [`find_spanning_ladders`] is asked to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderRequest {
    pub base: Graph,
    pub parts: Bipartition,
    pub first_rung: (usize, usize),
    pub last_rung: (usize, usize),
    /// Each `(close, open)` pair ends one ladder with `close` and starts the
    /// next with `open`.
    pub forced: Vec<((usize, usize), (usize, usize))>,
    pub seed: u64,
}

impl LadderRequest {
    /// A request over the natural bipartition of a bipartite `base`.
    pub fn bipartite(base: Graph, first_rung: (usize, usize), last_rung: (usize, usize)) -> Result<Self> {
        let parts = Bipartition::from_coloring(&base).ok_or(Error::InvalidRequest("graph is not bipartite"))?;
        Ok(LadderRequest {
            base,
            parts,
            first_rung,
            last_rung,
            forced: Vec::new(),
            seed: 0,
        })
    }

    pub fn with_forced(mut self, close: (usize, usize), open: (usize, usize)) -> Self {
        self.forced.push((close, open));
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn named_edges(&self) -> Vec<(usize, usize)> {
        let mut named = vec![self.first_rung];
        if self.last_rung != self.first_rung {
            named.push(self.last_rung);
        }
        for &(c, o) in &self.forced {
            named.extend([c, o]);
        }
        named
    }
}

/// `forced.len() + 1` vertex-disjoint ladders spanning the base. The first
/// starts with `first_rung`, the last ends with `last_rung`, and ladder `i`
/// ends with `forced[i].0` while ladder `i + 1` starts with `forced[i].1`.
/// Rungs are oriented `(U, V)`: the A side of every ladder lies in `U`.
pub fn find_spanning_ladders(req: &LadderRequest) -> Result<Vec<Ladder>> {
    let g = &req.base;
    let n = g.n();
    let named = req.named_edges();
    let mut touched = vec![false; n];
    for &(x, y) in &named {
        g.check_vertex(x)?;
        g.check_vertex(y)?;
        if !g.has_edge(x, y) {
            return Err(Error::InvalidRequest("named rung missing from the graph"));
        }
        if touched[x] || touched[y] {
            return Err(Error::InvalidRequest("named rungs must be pairwise disjoint"));
        }
        touched[x] = true;
        touched[y] = true;
    }
    if req.first_rung == req.last_rung && n != 2 {
        return Err(Error::InvalidRequest("first and last rung coincide"));
    }
    let orient = |e| req.parts.orient(e).ok_or(Error::InvalidRequest("named rung inside a class"));
    let first = orient(req.first_rung)?;
    let last = orient(req.last_rung)?;
    let m = perfect_matching_with_forced(g, &req.parts, &named)?;
    let identify: Vec<_> = req
        .forced
        .iter()
        .map(|&(c, o)| Ok((orient(c)?, orient(o)?)))
        .collect::<Result<_>>()?;
    let aux = build_aux_graph(g, &req.parts, &m, &identify)?;
    let s = aux.node_of(first).expect("first rung is matched");
    let t = aux.node_of(last).expect("last rung is matched");
    let h = &aux.graph;
    let path = match seeded_ham_path(h, s, t, req.seed) {
        Some(p) => p,
        None if h.n() <= FINDER_FALLBACK_LIMIT => {
            hamiltonian_path_exhaustive(h, s, t, FINDER_FALLBACK_LIMIT)?.ok_or(Error::NoHamiltonianPath)?
        }
        None => return Err(Error::NoHamiltonianPath),
    };
    debug_assert!(is_hamiltonian_path(h, &path, s, t));
    let ladders = unfold(&aux, &path)?;
    let mut seen = vec![false; n];
    for l in &ladders {
        assert!(l.validate_in(g), "unfolded ladder must be a subgraph of the base");
        for v in l.vertices() {
            assert!(!seen[v], "unfolded ladders must be disjoint");
            seen[v] = true;
        }
    }
    assert!(seen.iter().all(|&s| s), "unfolded ladders must span the base");
    Ok(ladders)
}
