//! Seeded random instances. Every generator takes the RNG by reference so
//! callers control reproducibility.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::verify::HalinCertificate;

/// Largest complement degree that still forces `δ(G) ≥ ⌈(n+1)/2⌉`.
pub fn dirac_complement_cap(n: usize) -> usize {
    n.saturating_sub(3) / 2
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for (u, v) in all_pairs(n) {
        if rng.gen_bool(p) {
            g.add_edge(u, v).expect("fresh pair");
        }
    }
    g
}

/// A random graph whose complement has maximum degree at most `cap`. Pairs
/// are visited in random order and each enters the complement with
/// probability one half while both ends have room.
pub fn random_capped_complement<R: Rng + ?Sized>(n: usize, cap: usize, rng: &mut R) -> Graph {
    let mut pairs = all_pairs(n);
    pairs.shuffle(rng);
    let mut missing = Graph::empty(n);
    for (u, v) in pairs {
        if missing.degree(u) < cap && missing.degree(v) < cap && rng.gen_bool(0.5) {
            missing.add_edge(u, v).expect("fresh pair");
        }
    }
    missing.complement()
}

/// A random graph with `δ(G) ≥ ⌈(n+1)/2⌉`.
pub fn random_dirac_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    random_capped_complement(n, dirac_complement_cap(n), rng)
}

/// Every labelled graph on `n` vertices whose complement has maximum degree
/// at most `cap`.
pub fn capped_complements(n: usize, cap: usize) -> Vec<Graph> {
    fn walk(pairs: &[(usize, usize)], i: usize, missing: &mut Graph, cap: usize, out: &mut Vec<Graph>) {
        if i == pairs.len() {
            out.push(missing.complement());
            return;
        }
        walk(pairs, i + 1, missing, cap, out);
        let (u, v) = pairs[i];
        if missing.degree(u) < cap && missing.degree(v) < cap {
            missing.add_edge(u, v).expect("fresh pair");
            walk(pairs, i + 1, missing, cap, out);
            missing.remove_edge(u, v);
        }
    }
    let pairs = all_pairs(n);
    let mut out = Vec::new();
    walk(&pairs, 0, &mut Graph::empty(n), cap, &mut out);
    out
}

/// A random balanced bipartite graph with classes `U`, `V` of size `m` and
/// minimum degree at least `min_degree`, relabelled by a random permutation.
/// Returns the graph and its `U` class.
pub fn random_balanced_bipartite<R: Rng + ?Sized>(
    m: usize,
    min_degree: usize,
    rng: &mut R,
) -> (Graph, Vec<usize>) {
    let mut label: Vec<usize> = (0..2 * m).collect();
    label.shuffle(rng);
    let mut pairs: Vec<(usize, usize)> = (0..m).flat_map(|u| (m..2 * m).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = Graph::complete_bipartite(m, m);
    for (u, v) in pairs {
        if g.degree(u) > min_degree && g.degree(v) > min_degree && rng.gen_bool(0.5) {
            g.remove_edge(u, v);
        }
    }
    let relabelled = Graph::from_edges(2 * m, g.edges().map(|(u, v)| (label[u], label[v]))).expect("relabelling is injective");
    (relabelled, label[..m].to_vec())
}

/// A random Halin graph on at most `max_vertices` vertices (at least 4).
///
/// The tree grows from a star with 3 to 5 leaves; each step expands a random
/// leaf into an internal vertex with 2 or 3 new leaf children, so every
/// internal vertex keeps degree at least 3. Children are kept in embedding
/// order, and the leaf cycle follows a depth-first walk. Labels are shuffled.
pub fn random_halin<R: Rng + ?Sized>(max_vertices: usize, rng: &mut R) -> (Graph, HalinCertificate) {
    assert!(max_vertices >= 4, "a Halin graph has at least 4 vertices");
    let root_degree = rng.gen_range(3..=5.min(max_vertices - 1));
    let mut children: Vec<Vec<usize>> = vec![(1..=root_degree).collect()];
    children.extend((0..root_degree).map(|_| Vec::new()));
    let target = rng.gen_range(root_degree + 1..=max_vertices);
    loop {
        let n = children.len();
        let room = target - n;
        if room < 2 {
            break;
        }
        let leaves: Vec<usize> = (1..n).filter(|&v| children[v].is_empty()).collect();
        let parent = *leaves.choose(rng).expect("a tree has leaves");
        let k = rng.gen_range(2..=3.min(room));
        children[parent] = (n..n + k).collect();
        children.extend((0..k).map(|_| Vec::new()));
    }
    let n = children.len();
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut tree_edges = Vec::with_capacity(n - 1);
    let mut leaf_cycle = Vec::new();
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        if children[v].is_empty() {
            leaf_cycle.push(label[v]);
        }
        for &c in children[v].iter().rev() {
            tree_edges.push((label[v], label[c]));
            stack.push(c);
        }
    }
    let cert = HalinCertificate {
        tree_edges,
        leaf_cycle,
    };
    let g = cert.to_graph(n).expect("generated certificate is simple");
    (g, cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_halin, Mode};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn halin_graphs_verify() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let (g, cert) = random_halin(14, &mut rng);
            assert!(g.n() <= 14);
            assert_eq!(verify_halin(&g, &cert, Mode::Exact), Ok(()));
        }
    }

    #[test]
    fn complement_enumeration_counts() {
        // Matchings of K5 and K6.
        assert_eq!(capped_complements(5, 1).len(), 26);
        assert_eq!(capped_complements(6, 1).len(), 76);
        assert_eq!(capped_complements(4, 0).len(), 1);
    }

    #[test]
    fn dirac_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 4..14 {
            for _ in 0..20 {
                let g = random_dirac_graph(n, &mut rng);
                assert!(2 * g.min_degree() >= n + 1);
            }
        }
    }

    #[test]
    fn bipartite_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (g, u) = random_balanced_bipartite(16, 15, &mut rng);
        assert!(g.min_degree() >= 15);
        assert_eq!(u.len(), 16);
        for (x, y) in g.edges() {
            assert_ne!(u.contains(&x), u.contains(&y));
        }
    }
}
