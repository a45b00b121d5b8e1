//! Absorbing a vertex set `R` into a ladder with helpers from `S`.
//!
//! For `R = {w_1..w_r}` each `w_i` gets three neighbours `x_i1, x_i2, x_i3`
//! and two caps `y12_i ∈ Γ(x_i1, x_i2)`, `y23_i ∈ Γ(x_i2, x_i3)`, which makes
//! the 3-rung block
//!
//! ```text
//! A: y12_i  w_i   y23_i
//! B: x_i1   x_i2  x_i3
//! ```
//!
//! Consecutive blocks are joined by a connector rung `(z_i, u_i)` with
//! `z_i ∈ Γ(x_i3, x_{i+1,1})` on the A side and
//! `u_i ∈ Γ(y23_i, y12_{i+1}, z_i)` on the B side. The result has `4r - 1`
//! rungs and uses `7r - 2` helpers.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ladder::Ladder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsorbInstance {
    graph: Graph,
    helpers: VertexSet,
    targets: VertexSet,
}

impl AbsorbInstance {
    /// `helpers` (S) and `targets` (R) must partition the vertex set.
    pub fn new(graph: Graph, helpers: VertexSet, targets: VertexSet) -> Result<Self> {
        for v in helpers.iter().chain(targets.iter()) {
            graph.check_vertex(v)?;
        }
        if helpers.iter().any(|v| targets.contains(v)) || helpers.len() + targets.len() != graph.n() {
            return Err(Error::InvalidParameter("S and R must partition V(F)"));
        }
        Ok(AbsorbInstance {
            graph,
            helpers,
            targets,
        })
    }

    /// `S` is everything outside `targets`.
    pub fn with_targets(graph: Graph, targets: VertexSet) -> Result<Self> {
        let helpers = (0..graph.n()).filter(|&v| !targets.contains(v)).collect();
        Self::new(graph, helpers, targets)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn helpers(&self) -> &VertexSet {
        &self.helpers
    }

    pub fn targets(&self) -> &VertexSet {
        &self.targets
    }
}

/// The first failed precondition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A target with `deg(w, S) < 3|R|`.
    TargetDegree { vertex: usize, degree: usize, required: usize },
    /// Two vertices of `N(R, S)` with fewer than `6|R|` common neighbours in `S`.
    PairCommon { pair: (usize, usize), common: usize, required: usize },
    /// Three vertices of `N(N(R, S), S)` with fewer than `7|R|`.
    TripleCommon { triple: (usize, usize, usize), common: usize, required: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TargetDegree { vertex, degree, required } => {
                write!(f, "target degree: deg({vertex}, S) = {degree} < {required}")
            }
            Violation::PairCommon { pair: (u, v), common, required } => {
                write!(f, "pair common neighbours: deg({u}, {v}, S) = {common} < {required}")
            }
            Violation::TripleCommon { triple: (u, v, w), common, required } => {
                write!(f, "triple common neighbours: deg({u}, {v}, {w}, S) = {common} < {required}")
            }
        }
    }
}

/// `N(U, S)` as a bit set.
fn neighbourhood_in(g: &Graph, from: impl Iterator<Item = usize>, s: &BitSet) -> BitSet {
    let mut acc = BitSet::new(g.n());
    for v in from {
        acc.union_with(g.row(v));
    }
    acc.intersect_with(s);
    acc
}

/// Evaluates the three degree conditions literally, over all pairs of
/// `N(R, S)` and all triples of `N(N(R, S), S)`.
pub fn check_absorb_preconditions(inst: &AbsorbInstance) -> core::result::Result<(), Violation> {
    let g = &inst.graph;
    let r = inst.targets.len();
    if r == 0 {
        return Ok(());
    }
    let s = inst.helpers.bits(g.n());
    for w in inst.targets.iter() {
        let degree = g.row(w).intersection_len(&s);
        if degree < 3 * r {
            return Err(Violation::TargetDegree { vertex: w, degree, required: 3 * r });
        }
    }
    let first: Vec<usize> = neighbourhood_in(g, inst.targets.iter(), &s).iter().collect();
    for (i, &u) in first.iter().enumerate() {
        let mut su = g.row(u).clone();
        su.intersect_with(&s);
        for &v in &first[i + 1..] {
            let common = su.intersection_len(g.row(v));
            if common < 6 * r {
                return Err(Violation::PairCommon { pair: (u, v), common, required: 6 * r });
            }
        }
    }
    let second: Vec<usize> = neighbourhood_in(g, first.iter().copied(), &s).iter().collect();
    for (i, &u) in second.iter().enumerate() {
        let mut su = g.row(u).clone();
        su.intersect_with(&s);
        for (j, &v) in second.iter().enumerate().skip(i + 1) {
            let mut suv = su.clone();
            suv.intersect_with(g.row(v));
            if suv.len() < 7 * r {
                // Any triple through this pair fails as well.
                if let Some(&w) = second.iter().find(|&&w| w != u && w != v) {
                    let common = suv.intersection_len(g.row(w));
                    return Err(Violation::TripleCommon { triple: (u, v, w), common, required: 7 * r });
                }
            }
            for &w in &second[j + 1..] {
                let common = suv.intersection_len(g.row(w));
                if common < 7 * r {
                    return Err(Violation::TripleCommon { triple: (u, v, w), common, required: 7 * r });
                }
            }
        }
    }
    Ok(())
}

/// Helpers chosen for one target `w_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbsorbBlock {
    pub target: usize,
    pub x: [usize; 3],
    pub y12: usize,
    pub y23: usize,
}

/// The rung `(z_i, u_i)` joining block `i` to block `i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Connector {
    pub z: usize,
    pub u: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Absorption {
    pub ladder: Ladder,
    pub blocks: Vec<AbsorbBlock>,
    pub connectors: Vec<Connector>,
}

impl Absorption {
    /// Helpers taken from `S`.
    pub fn helpers_used(&self) -> usize {
        self.ladder.order() - self.blocks.len()
    }
}

struct Picker<'a> {
    g: &'a Graph,
    free: BitSet,
}

impl Picker<'_> {
    /// Lowest free helper adjacent to all of `to`.
    fn take(&mut self, to: &[usize]) -> Result<usize> {
        let mut cand = self.free.clone();
        for &v in to {
            cand.intersect_with(self.g.row(v));
        }
        let v = cand.iter().next().ok_or(Error::AbsorbExhausted)?;
        self.free.remove(v);
        Ok(v)
    }
}

/// Builds a ladder on `R` plus `7|R| - 2` helpers. Choices are greedy in the
/// order x's, then y's and z's, then u's, always taking the lowest admissible
/// id.
pub fn absorb(inst: &AbsorbInstance) -> Result<Absorption> {
    check_absorb_preconditions(inst).map_err(Error::AbsorbPrecondition)?;
    absorb_greedy(inst)
}

/// The greedy construction without the precondition check. Fails with
/// [`Error::AbsorbExhausted`] when some step has no free admissible helper.
pub fn absorb_greedy(inst: &AbsorbInstance) -> Result<Absorption> {
    let r = inst.targets.len();
    if r == 0 {
        return Ok(Absorption {
            ladder: Ladder::empty(),
            blocks: Vec::new(),
            connectors: Vec::new(),
        });
    }
    let g = &inst.graph;
    let mut pick = Picker {
        g,
        free: inst.helpers.bits(g.n()),
    };
    let targets = inst.targets.as_slice();

    let mut xs = Vec::with_capacity(r);
    for &w in targets {
        xs.push([pick.take(&[w])?, pick.take(&[w])?, pick.take(&[w])?]);
    }
    let mut ys = Vec::with_capacity(r);
    for x in &xs {
        ys.push((pick.take(&[x[0], x[1]])?, pick.take(&[x[1], x[2]])?));
    }
    let mut zs = Vec::with_capacity(r - 1);
    for i in 0..r - 1 {
        zs.push(pick.take(&[xs[i][2], xs[i + 1][0]])?);
    }
    let mut connectors = Vec::with_capacity(r - 1);
    for (i, &z) in zs.iter().enumerate() {
        let u = pick.take(&[ys[i].1, ys[i + 1].0, z])?;
        connectors.push(Connector { z, u });
    }

    let mut a = Vec::with_capacity(4 * r - 1);
    let mut b = Vec::with_capacity(4 * r - 1);
    let mut blocks = Vec::with_capacity(r);
    for i in 0..r {
        let (y12, y23) = ys[i];
        a.extend([y12, targets[i], y23]);
        b.extend(xs[i]);
        blocks.push(AbsorbBlock {
            target: targets[i],
            x: xs[i],
            y12,
            y23,
        });
        if let Some(c) = connectors.get(i) {
            a.push(c.z);
            b.push(c.u);
        }
    }
    let ladder = Ladder::from_sides(a, b)?;
    let out = Absorption {
        ladder,
        blocks,
        connectors,
    };
    assert_eq!(out.helpers_used(), 3 * r + 2 * r + (r - 1) + (r - 1));
    assert!(out.ladder.validate_in(g), "absorbed ladder must be a subgraph of F");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_satisfies_everything() {
        let inst = AbsorbInstance::with_targets(Graph::complete(30), VertexSet::new([0, 1])).unwrap();
        assert_eq!(check_absorb_preconditions(&inst), Ok(()));
        let out = absorb(&inst).unwrap();
        assert_eq!(out.ladder.order(), 14);
        assert!(out.ladder.validate_in(inst.graph()));
    }

    #[test]
    fn low_target_degree() {
        let mut g = Graph::complete(30);
        for v in 7..30 {
            g.remove_edge(0, v);
        }
        // 0 keeps 1..=6, and 1 is the other target.
        let inst = AbsorbInstance::with_targets(g, VertexSet::new([0, 1])).unwrap();
        assert!(matches!(
            check_absorb_preconditions(&inst),
            Err(Violation::TargetDegree { vertex: 0, degree: 5, required: 6 })
        ));
        assert!(matches!(absorb(&inst), Err(Error::AbsorbPrecondition(_))));
    }

    #[test]
    fn single_target() {
        let inst = AbsorbInstance::with_targets(Graph::complete(6), VertexSet::new([0])).unwrap();
        // K6 is too small for the pair condition; the greedy still succeeds.
        assert!(matches!(check_absorb_preconditions(&inst), Err(Violation::PairCommon { .. })));
        let out = absorb_greedy(&inst).unwrap();
        assert_eq!(out.ladder.order(), 6);
        assert_eq!(out.ladder.a_side()[1], 0);
        assert!(out.connectors.is_empty());
    }

    #[test]
    fn empty_targets() {
        let inst = AbsorbInstance::with_targets(Graph::complete(4), VertexSet::default()).unwrap();
        assert!(absorb(&inst).unwrap().ladder.is_empty());
    }

    #[test]
    fn partition_checked() {
        let g = Graph::complete(5);
        assert!(AbsorbInstance::new(g.clone(), VertexSet::new([0, 1]), VertexSet::new([1, 2])).is_err());
        assert!(AbsorbInstance::new(g, VertexSet::new([0, 1]), VertexSet::new([2])).is_err());
    }
}
