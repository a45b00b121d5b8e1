//! Brute-force reference implementations. Nothing here calls into the
//! algorithms under test beyond `Graph` adjacency queries.
#![allow(dead_code)]

use std::collections::BTreeSet;

use halin_core::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Vertices of `s` adjacent to all of `u`, by scanning.
pub fn brute_common(g: &Graph, u: &[usize], s: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = s.iter().copied().filter(|&w| u.iter().all(|&x| g.has_edge(x, w))).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `max(0, |S| - k(|S| - δ(U, S)))`.
pub fn brute_bound(g: &Graph, u: &[usize], s: &[usize]) -> usize {
    let min_deg = u
        .iter()
        .map(|&x| s.iter().filter(|&&w| g.has_edge(x, w)).count())
        .min()
        .unwrap();
    let deficit = (u.len() * (s.len() - min_deg)) as i64;
    (s.len() as i64 - deficit).max(0) as usize
}

fn connected_without(adj: &[Vec<bool>], removed: &[bool]) -> bool {
    let n = adj.len();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if adj[v][w] && !removed[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..n).all(|v| removed[v] || seen[v])
}

/// More than `k` vertices and connected after deleting any `k - 1`.
pub fn brute_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    let adj = adjacency(g);
    (0u32..1 << n)
        .filter(|m| (m.count_ones() as usize) < k)
        .all(|m| {
            let removed: Vec<bool> = (0..n).map(|v| m >> v & 1 == 1).collect();
            connected_without(&adj, &removed)
        })
}

/// Every simple cycle length, by extending paths from their lowest vertex.
pub fn brute_cycle_lengths(g: &Graph) -> BTreeSet<usize> {
    fn extend(adj: &[Vec<bool>], start: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut BTreeSet<usize>) {
        let last = *path.last().unwrap();
        if path.len() >= 3 && adj[last][start] {
            out.insert(path.len());
        }
        for w in start + 1..adj.len() {
            if adj[last][w] && !on[w] {
                on[w] = true;
                path.push(w);
                extend(adj, start, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let adj = adjacency(g);
    let mut out = BTreeSet::new();
    for s in 0..g.n() {
        let mut on = vec![false; g.n()];
        on[s] = true;
        extend(&adj, s, &mut vec![s], &mut on, &mut out);
    }
    out
}

/// `true` iff a hamiltonian `(a, b)`-path exists, by depth-first search.
pub fn brute_ham_path(g: &Graph, a: usize, b: usize) -> bool {
    fn go(adj: &[Vec<bool>], b: usize, cur: usize, on: &mut [bool], count: usize) -> bool {
        if count == adj.len() {
            return cur == b;
        }
        for w in 0..adj.len() {
            if adj[cur][w] && !on[w] && (w != b || count + 1 == adj.len()) {
                on[w] = true;
                if go(adj, b, w, on, count + 1) {
                    return true;
                }
                on[w] = false;
            }
        }
        false
    }
    let n = g.n();
    if n == 1 {
        return a == b;
    }
    if a == b {
        return false;
    }
    let adj = adjacency(g);
    let mut on = vec![false; n];
    on[a] = true;
    go(&adj, b, a, &mut on, 1)
}

pub fn brute_ham_connected(g: &Graph) -> bool {
    let n = g.n();
    (0..n).all(|a| (a + 1..n).all(|b| brute_ham_path(g, a, b)))
}

/// Ladder adjacency straight from the definition.
pub fn is_ladder_in(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    let k = a.len();
    if b.len() != k {
        return false;
    }
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    if all.len() != 2 * k {
        return false;
    }
    (0..k).all(|i| (0..k).all(|j| i.abs_diff(j) > 1 || g.has_edge(a[i], b[j])))
}

/// All ordered `(a, b)` side pairs of `k`-rung ladders in `g`.
pub fn brute_ladder_embeddings(g: &Graph, k: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn go(g: &Graph, k: usize, a: &mut Vec<usize>, b: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Vec<usize>)>) {
        if a.len() == k {
            out.push((a.clone(), b.clone()));
            return;
        }
        for x in 0..g.n() {
            for y in 0..g.n() {
                if x == y || a.contains(&x) || a.contains(&y) || b.contains(&x) || b.contains(&y) {
                    continue;
                }
                a.push(x);
                b.push(y);
                if is_ladder_in(g, a, b) {
                    go(g, k, a, b, out);
                }
                a.pop();
                b.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, k, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// `true` iff a perfect matching between `u` and the rest contains `forced`.
pub fn brute_perfect_matching(g: &Graph, u: &[usize], forced: &[(usize, usize)]) -> bool {
    fn go(g: &Graph, us: &[usize], i: usize, free: &mut Vec<usize>) -> bool {
        if i == us.len() {
            return true;
        }
        for j in 0..free.len() {
            let v = free[j];
            if g.has_edge(us[i], v) {
                free.remove(j);
                if go(g, us, i + 1, free) {
                    return true;
                }
                free.insert(j, v);
            }
        }
        false
    }
    let n = g.n();
    let mut used = vec![false; n];
    for &(x, y) in forced {
        if !g.has_edge(x, y) || used[x] || used[y] || u.contains(&x) == u.contains(&y) {
            return false;
        }
        used[x] = true;
        used[y] = true;
    }
    let us: Vec<usize> = u.iter().copied().filter(|&x| !used[x]).collect();
    let mut vs: Vec<usize> = (0..n).filter(|x| !u.contains(x) && !used[*x]).collect();
    us.len() == vs.len() && go(g, &us, 0, &mut vs)
}

/// Literal evaluation of the three absorbing conditions.
pub fn brute_absorb_conditions(g: &Graph, s: &[usize], r: &[usize]) -> bool {
    let k = r.len();
    let deg = |set: &[usize]| s.iter().filter(|&&w| set.iter().all(|&x| g.has_edge(x, w))).count();
    if r.iter().any(|&w| deg(&[w]) < 3 * k) {
        return false;
    }
    let n1: Vec<usize> = s.iter().copied().filter(|&x| r.iter().any(|&w| g.has_edge(w, x))).collect();
    for i in 0..n1.len() {
        for j in i + 1..n1.len() {
            if deg(&[n1[i], n1[j]]) < 6 * k {
                return false;
            }
        }
    }
    let n2: Vec<usize> = s.iter().copied().filter(|&x| n1.iter().any(|&y| g.has_edge(y, x))).collect();
    for i in 0..n2.len() {
        for j in i + 1..n2.len() {
            for l in j + 1..n2.len() {
                if deg(&[n2[i], n2[j], n2[l]]) < 7 * k {
                    return false;
                }
            }
        }
    }
    true
}

/// Vertex sets of tree paths between every pair, as bit masks.
fn tree_paths(tree: &[Vec<usize>]) -> Vec<Vec<u64>> {
    let n = tree.len();
    let mut out = vec![vec![0u64; n]; n];
    for s in 0..n {
        let mut parent = vec![usize::MAX; n];
        let mut order = vec![s];
        parent[s] = s;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in &tree[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
        for t in 0..n {
            let mut mask = 1u64 << t;
            let mut v = t;
            while v != s {
                v = parent[v];
                mask |= 1 << v;
            }
            out[s][t] = mask;
        }
    }
    out
}

/// A cyclic leaf order fits a plane embedding iff no two tree paths between
/// interleaved leaf pairs are vertex-disjoint.
pub fn planar_by_crossings(tree: &[Vec<usize>], order: &[usize]) -> bool {
    let paths = tree_paths(tree);
    let k = order.len();
    for i in 0..k {
        for j in i + 1..k {
            for p in j + 1..k {
                for q in p + 1..k {
                    let ac = paths[order[i]][order[p]];
                    let bd = paths[order[j]][order[q]];
                    if ac & bd == 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Spanning Halin subgraph by enumerating every spanning tree, keeping the
/// HITs, and trying every cyclic order of their leaves.
pub fn naive_spanning_halin(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let adj = adjacency(g);
    let mut found = false;
    let mut chosen = Vec::new();
    let comp: Vec<usize> = (0..n).collect();
    spanning_trees(&edges, 0, &comp, &mut chosen, n, &mut |tree_edges| {
        if !found && tree_admits_cycle(&adj, tree_edges, n) {
            found = true;
        }
        found
    });
    found
}

fn spanning_trees(
    edges: &[(usize, usize)],
    i: usize,
    comp: &[usize],
    chosen: &mut Vec<(usize, usize)>,
    n: usize,
    visit: &mut dyn FnMut(&[(usize, usize)]) -> bool,
) -> bool {
    if chosen.len() == n - 1 {
        return visit(chosen);
    }
    if edges.len() - i < n - 1 - chosen.len() {
        return false;
    }
    let (u, v) = edges[i];
    if comp[u] != comp[v] {
        let (keep, drop) = (comp[u], comp[v]);
        let merged: Vec<usize> = comp.iter().map(|&c| if c == drop { keep } else { c }).collect();
        chosen.push((u, v));
        let stop = spanning_trees(edges, i + 1, &merged, chosen, n, visit);
        chosen.pop();
        if stop {
            return true;
        }
    }
    spanning_trees(edges, i + 1, comp, chosen, n, visit)
}

fn tree_admits_cycle(adj: &[Vec<bool>], tree_edges: &[(usize, usize)], n: usize) -> bool {
    let mut tree = vec![Vec::new(); n];
    for &(u, v) in tree_edges {
        tree[u].push(v);
        tree[v].push(u);
    }
    if tree.iter().any(|nb| nb.len() == 2) {
        return false;
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| tree[v].len() == 1).collect();
    if leaves.len() < 3 {
        return false;
    }
    let mut order = vec![leaves[0]];
    let mut rest = leaves[1..].to_vec();
    leaf_cycles(adj, &tree, &mut order, &mut rest)
}

fn leaf_cycles(adj: &[Vec<bool>], tree: &[Vec<usize>], order: &mut Vec<usize>, rest: &mut Vec<usize>) -> bool {
    let last = *order.last().unwrap();
    if rest.is_empty() {
        return adj[last][order[0]] && planar_by_crossings(tree, order);
    }
    for i in 0..rest.len() {
        let l = rest[i];
        if adj[last][l] {
            rest.remove(i);
            order.push(l);
            let ok = leaf_cycles(adj, tree, order, rest);
            order.pop();
            rest.insert(i, l);
            if ok {
                return true;
            }
        }
    }
    false
}

/// Adjacency lists of a tree given by its edges.
pub fn tree_lists(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut tree = vec![Vec::new(); n];
    for &(u, v) in edges {
        tree[u].push(v);
        tree[v].push(u);
    }
    tree
}
