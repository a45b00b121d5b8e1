//! Ladders `L_n`: two vertex sequences `a_1..a_n`, `b_1..b_n` with
//! `a_i ~ b_j` exactly when `|i - j| <= 1`.
//!
//! A [`Ladder`] is a view over some host [`Graph`]; it only stores the two
//! sides. Extra chords of the host are allowed, since ladders are always used
//! as subgraphs.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ladder {
    a: Vec<usize>,
    b: Vec<usize>,
}

/// The `index`-th rung `a_i b_i` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rung {
    pub index: usize,
    pub a: usize,
    pub b: usize,
}

/// Which crosswise matching joined the two ladders in [`concatenate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Crossing {
    /// `a_n ~ b'_1` and `b_n ~ a'_1`: the second ladder keeps its sides.
    Straight,
    /// `a_n ~ a'_1` and `b_n ~ b'_1`: the second ladder's sides are swapped.
    Flipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Concatenation {
    pub ladder: Ladder,
    pub crossing: Crossing,
}

impl Ladder {
    /// Wraps two sides. Checks shape only (equal length, distinct vertices);
    /// use [`Ladder::validate_in`] for the edges.
    pub fn from_sides(a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::NotALadder);
        }
        let mut all: Vec<usize> = a.iter().chain(&b).copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotALadder);
        }
        Ok(Ladder { a, b })
    }

    /// The ladder with no rungs.
    pub fn empty() -> Self {
        Ladder {
            a: Vec::new(),
            b: Vec::new(),
        }
    }

    /// Number of rungs.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Number of vertices, `2n`.
    pub fn order(&self) -> usize {
        2 * self.a.len()
    }

    pub fn a_side(&self) -> &[usize] {
        &self.a
    }

    pub fn b_side(&self) -> &[usize] {
        &self.b
    }

    pub fn rung(&self, index: usize) -> Option<Rung> {
        (1..=self.len()).contains(&index).then(|| Rung {
            index,
            a: self.a[index - 1],
            b: self.b[index - 1],
        })
    }

    pub fn rungs(&self) -> impl Iterator<Item = Rung> + '_ {
        self.a
            .iter()
            .zip(&self.b)
            .enumerate()
            .map(|(i, (&a, &b))| Rung { index: i + 1, a, b })
    }

    pub fn first_rung(&self) -> Option<Rung> {
        self.rung(1)
    }

    pub fn last_rung(&self) -> Option<Rung> {
        self.rung(self.len())
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.a.iter().chain(&self.b).copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a.contains(&v) || self.b.contains(&v)
    }

    /// The `3n - 2` edges a ladder must have.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::with_capacity((3 * n).saturating_sub(2));
        for i in 0..n {
            out.push((self.a[i], self.b[i]));
            if i + 1 < n {
                out.push((self.a[i], self.b[i + 1]));
                out.push((self.a[i + 1], self.b[i]));
            }
        }
        out
    }

    /// Rungs `1..=k`.
    pub fn prefix(&self, k: usize) -> Ladder {
        let k = k.min(self.len());
        Ladder {
            a: self.a[..k].to_vec(),
            b: self.b[..k].to_vec(),
        }
    }

    /// Same ladder with the roles of the two sides exchanged.
    pub fn swapped(&self) -> Ladder {
        Ladder {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Same ladder read from the last rung to the first.
    pub fn reversed(&self) -> Ladder {
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        a.reverse();
        b.reverse();
        Ladder { a, b }
    }

    /// The alternating path `a_1 b_2 a_3 ...` (defined for every `n`).
    pub fn side_from_a1(&self) -> Vec<usize> {
        (0..self.len())
            .map(|i| if i % 2 == 0 { self.a[i] } else { self.b[i] })
            .collect()
    }

    /// The alternating path `b_1 a_2 b_3 ...` (defined for every `n`).
    pub fn side_from_b1(&self) -> Vec<usize> {
        (0..self.len())
            .map(|i| if i % 2 == 0 { self.b[i] } else { self.a[i] })
            .collect()
    }

    /// The two sides of the ladder: the shortest alternating paths starting at
    /// `a_1` and at `b_1`. For even `n` they end at `b_n` and `a_n`, for odd
    /// `n` at `a_n` and `b_n`.
    pub fn sides(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        if self.len() < 2 {
            return Err(Error::DegenerateSides);
        }
        Ok((self.side_from_a1(), self.side_from_b1()))
    }

    pub fn validate_in(&self, g: &Graph) -> bool {
        validate_ladder(g, &self.a, &self.b)
    }
}

/// `L_n` on vertices `a_i = i - 1`, `b_i = n + i - 1`, with its host graph.
pub fn make_ladder(n: usize) -> Result<(Graph, Ladder)> {
    if n == 0 {
        return Err(Error::InvalidParameter("ladder needs at least one rung"));
    }
    let ladder = Ladder {
        a: (0..n).collect(),
        b: (n..2 * n).collect(),
    };
    let g = Graph::from_edges(2 * n, ladder.edges())?;
    Ok((g, ladder))
}

/// Whether the disjoint edges `r = xy` and `s = gh` can be matched crosswise:
/// `x ~ g, y ~ h` or `x ~ h, y ~ g`.
pub fn rungs_adjacent(g: &Graph, r: (usize, usize), s: (usize, usize)) -> Result<bool> {
    for v in [r.0, r.1, s.0, s.1] {
        g.check_vertex(v)?;
    }
    if r.0 == s.0 || r.0 == s.1 || r.1 == s.0 || r.1 == s.1 {
        return Err(Error::SharedEndpoint);
    }
    Ok((g.has_edge(r.0, s.0) && g.has_edge(r.1, s.1))
        || (g.has_edge(r.0, s.1) && g.has_edge(r.1, s.0)))
}

/// `LM`: the rungs of `l` followed by those of `m`, with `m`'s sides swapped
/// if that is the crosswise matching `g` provides.
pub fn concatenate(l: &Ladder, m: &Ladder, g: &Graph) -> Result<Concatenation> {
    let (Some(last), Some(first)) = (l.last_rung(), m.first_rung()) else {
        return Err(Error::CannotConcatenate);
    };
    if m.vertices().any(|v| l.contains(v)) {
        return Err(Error::CannotConcatenate);
    }
    let crossing = if g.has_edge(last.a, first.b) && g.has_edge(last.b, first.a) {
        Crossing::Straight
    } else if g.has_edge(last.a, first.a) && g.has_edge(last.b, first.b) {
        Crossing::Flipped
    } else {
        return Err(Error::CannotConcatenate);
    };
    let tail = match crossing {
        Crossing::Straight => m.clone(),
        Crossing::Flipped => m.swapped(),
    };
    let mut a = l.a.clone();
    let mut b = l.b.clone();
    a.extend_from_slice(&tail.a);
    b.extend_from_slice(&tail.b);
    Ok(Concatenation {
        ladder: Ladder { a, b },
        crossing,
    })
}

/// `true` iff the two lists have equal length, consist of distinct vertices
/// of `g`, and `a_i b_j ∈ E(g)` whenever `|i - j| <= 1`.
pub fn validate_ladder(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() || a.iter().chain(b).any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = alloc::vec![false; g.n()];
    for &v in a.iter().chain(b) {
        if core::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    let n = a.len();
    (0..n).all(|i| {
        g.has_edge(a[i], b[i])
            && (i + 1 == n || (g.has_edge(a[i], b[i + 1]) && g.has_edge(a[i + 1], b[i])))
    })
}
