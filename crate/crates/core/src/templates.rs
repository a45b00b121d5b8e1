//! The ladder-like Halin graphs `H1..H5`, their anchors `T1..T5`, assembly of
//! an anchor with a spanning ladder, and merging of two `H1`/`H2` graphs.
//!
//! Every template is built on `L_n` with `a_i = i - 1`, `b_i = n + i - 1`,
//! followed by the marked vertices in the order `x, y, z, w, u` (only those
//! the kind uses).
//!
//! All certificates share one shape. A *spine* (one side of the ladder)
//! carries the internal tree vertices; every rung hangs the opposite side off
//! the spine; the marked vertices attach at the spine ends. The leaf cycle
//! runs through the opposite side and the marked vertices.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ladder::{make_ladder, Ladder};
use crate::verify::{verify_halin, HalinCertificate, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TemplateKind {
    H1,
    H2,
    H3,
    H4,
    H5,
}

impl TemplateKind {
    pub const ALL: [TemplateKind; 5] = [
        TemplateKind::H1,
        TemplateKind::H2,
        TemplateKind::H3,
        TemplateKind::H4,
        TemplateKind::H5,
    ];

    /// Number of vertices added to the ladder.
    pub fn extra_vertices(self) -> usize {
        match self {
            TemplateKind::H1 => 2,
            TemplateKind::H2 | TemplateKind::H3 => 3,
            TemplateKind::H4 => 4,
            TemplateKind::H5 => 5,
        }
    }

    /// Whether the kind attaches `z` to a rung vertex (and its anchor has a
    /// pendent vertex).
    pub fn needs_attachment(self) -> bool {
        matches!(self, TemplateKind::H3 | TemplateKind::H4 | TemplateKind::H5)
    }

    /// Whether the attachment must lie on the side starting at `b_1`.
    fn attachment_on_b1_side(self) -> bool {
        matches!(self, TemplateKind::H4 | TemplateKind::H5)
    }

    pub fn order(self, n: usize) -> usize {
        2 * n + self.extra_vertices()
    }
}

impl fmt::Display for TemplateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            TemplateKind::H1 => 1,
            TemplateKind::H2 => 2,
            TemplateKind::H3 => 3,
            TemplateKind::H4 => 4,
            TemplateKind::H5 => 5,
        };
        write!(f, "H{i}")
    }
}

impl FromStr for TemplateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "H1" | "T1" => Ok(TemplateKind::H1),
            "H2" | "T2" => Ok(TemplateKind::H2),
            "H3" | "T3" => Ok(TemplateKind::H3),
            "H4" | "T4" => Ok(TemplateKind::H4),
            "H5" | "T5" => Ok(TemplateKind::H5),
            _ => Err(Error::InvalidParameter("unknown template kind")),
        }
    }
}

/// Ladder side of a rung vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SideTag {
    A,
    B,
}

/// Where `z` attaches: `a_index` or `b_index` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZAttach {
    pub side: SideTag,
    pub index: usize,
}

impl ZAttach {
    pub fn new(side: SideTag, index: usize) -> Self {
        ZAttach { side, index }
    }

    fn vertex(self, ladder: &Ladder) -> Option<usize> {
        let r = ladder.rung(self.index)?;
        Some(match self.side {
            SideTag::A => r.a,
            SideTag::B => r.b,
        })
    }

    fn error(self) -> Error {
        Error::InvalidAttachment {
            side: match self.side {
                SideTag::A => 'a',
                SideTag::B => 'b',
            },
            index: self.index,
        }
    }
}

/// The marked vertices of a template or anchor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Marks {
    /// Left end.
    pub x: usize,
    /// Right end.
    pub y: usize,
    pub z: Option<usize>,
    pub w: Option<usize>,
    pub u: Option<usize>,
}

impl Marks {
    fn map(self, f: &impl Fn(usize) -> usize) -> Marks {
        Marks {
            x: f(self.x),
            y: f(self.y),
            z: self.z.map(f),
            w: self.w.map(f),
            u: self.u.map(f),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        [Some(self.x), Some(self.y), self.z, self.w, self.u]
            .into_iter()
            .flatten()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    pub kind: TemplateKind,
    pub host: Graph,
    pub core: Ladder,
    pub marks: Marks,
    pub z_attach: Option<ZAttach>,
    pub certificate: HalinCertificate,
}

/// The boundary gadget `T_i`: the subgraph induced on the marks and the end
/// rungs of the template's ladder. Vertex ids are those of whatever graph the
/// anchor lives in (see [`Anchor::relabel`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anchor {
    pub kind: TemplateKind,
    pub vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
    /// `(a_1, b_1)`.
    pub head_link: (usize, usize),
    /// `(a_n, b_n)`.
    pub tail_link: (usize, usize),
    pub marks: Marks,
}

impl Anchor {
    /// The vertex `z` of `T3..T5`, which lies in no triangle.
    pub fn pendent(&self) -> Option<usize> {
        if self.kind.needs_attachment() {
            self.marks.z
        } else {
            None
        }
    }

    pub fn left_end(&self) -> usize {
        self.marks.x
    }

    pub fn right_end(&self) -> usize {
        self.marks.y
    }

    /// The anchor with every vertex id passed through `map`.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Anchor {
        Anchor {
            kind: self.kind,
            vertices: self.vertices.iter().map(&map).collect(),
            edges: self.edges.iter().map(|&(u, v)| (map(u), map(v))).collect(),
            head_link: (map(self.head_link.0), map(self.head_link.1)),
            tail_link: (map(self.tail_link.0), map(self.tail_link.1)),
            marks: self.marks.map(&map),
        }
    }

    /// The anchor as a graph on `n` vertices (ids must be below `n`).
    pub fn host(&self, n: usize) -> Result<Graph> {
        Graph::from_edges(n, self.edges.iter().copied())
    }
}

/// A spanning Halin subgraph produced by [`assemble`] or [`merge`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assembly {
    /// Tree plus leaf cycle, on the vertex set of the input graph(s).
    pub halin: Graph,
    pub certificate: HalinCertificate,
}

fn mark_layout(kind: TemplateKind, n: usize, with_z: bool) -> Marks {
    let mut next = 2 * n;
    let mut take = || {
        next += 1;
        next - 1
    };
    let x = take();
    let y = take();
    let z = (kind != TemplateKind::H1 && with_z).then(&mut take);
    let w = matches!(kind, TemplateKind::H4 | TemplateKind::H5).then(&mut take);
    let u = (kind == TemplateKind::H5).then(&mut take);
    Marks { x, y, z, w, u }
}

/// Edges each kind adds to the ladder (the pendant edge `zv` excluded).
fn frame_edges(kind: TemplateKind, ladder: &Ladder, m: &Marks) -> Vec<(usize, usize)> {
    let (a1, b1) = (ladder.a_side()[0], ladder.b_side()[0]);
    let last = ladder.len() - 1;
    let (an, bn) = (ladder.a_side()[last], ladder.b_side()[last]);
    let x = m.x;
    let y = m.y;
    match kind {
        TemplateKind::H1 => vec![(x, a1), (x, b1), (y, an), (y, bn), (x, y)],
        TemplateKind::H2 => {
            let z = m.z.expect("H2 has z");
            vec![(z, a1), (z, b1), (x, z), (x, b1), (y, an), (y, bn), (x, y)]
        }
        TemplateKind::H3 => {
            let z = m.z.expect("H3 has z");
            vec![(x, a1), (x, b1), (y, an), (y, bn), (x, z), (y, z)]
        }
        TemplateKind::H4 => {
            let (z, w) = (m.z.expect("H4 has z"), m.w.expect("H4 has w"));
            vec![(w, a1), (w, b1), (x, w), (x, b1), (y, an), (y, bn), (x, z), (y, z)]
        }
        TemplateKind::H5 => {
            let (w, u) = (m.w.expect("H5 has w"), m.u.expect("H5 has u"));
            // y meets the end of the side starting at b_1.
            let side_end = *ladder.side_from_b1().last().expect("nonempty");
            let mut e = vec![(w, a1), (w, b1), (x, w), (x, b1), (u, an), (u, bn), (y, u), (y, side_end)];
            match m.z {
                Some(z) => e.extend([(x, z), (y, z)]),
                None => e.push((x, y)),
            }
            e
        }
    }
}

/// Which side an `H1` certificate uses as its spine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Spine {
    FromA1,
    FromB1,
}

/// The certificate for `kind` framed around `ladder`. `attach` is the rung
/// vertex carrying `z` (kinds H3..H5 with `z` present); `spine` only matters
/// for `H1`, which has two underlying trees.
fn frame_certificate(
    kind: TemplateKind,
    ladder: &Ladder,
    m: &Marks,
    attach: Option<usize>,
    spine: Spine,
) -> Result<HalinCertificate> {
    let sa = ladder.side_from_a1();
    let sb = ladder.side_from_b1();
    let (spine, other) = match kind {
        TemplateKind::H1 => match spine {
            Spine::FromA1 => (sa, sb),
            Spine::FromB1 => (sb, sa),
        },
        TemplateKind::H3 => {
            let v = attach.ok_or(Error::MissingAttachment)?;
            if sa.contains(&v) {
                (sa, sb)
            } else if sb.contains(&v) {
                (sb, sa)
            } else {
                return Err(Error::PendantNotOnSide(v));
            }
        }
        _ => (sb, sa),
    };
    if let (Some(v), true) = (attach, kind.attachment_on_b1_side()) {
        if !spine.contains(&v) {
            return Err(Error::PendantNotOnSide(v));
        }
    }
    let start = spine[0];
    let end = *spine.last().expect("nonempty ladder");
    let mut tree: Vec<(usize, usize)> = spine.windows(2).map(|w| (w[0], w[1])).collect();
    tree.extend(ladder.rungs().map(|r| (r.a, r.b)));
    let (x, y) = (m.x, m.y);
    let mut cycle = vec![x];
    match kind {
        TemplateKind::H1 => {
            tree.extend([(x, start), (y, end)]);
            cycle.extend(&other);
            cycle.push(y);
        }
        TemplateKind::H2 => {
            let z = m.z.expect("H2 has z");
            tree.extend([(start, z), (start, x), (y, end)]);
            cycle.push(z);
            cycle.extend(&other);
            cycle.push(y);
        }
        TemplateKind::H3 => {
            let z = m.z.expect("H3 has z");
            tree.extend([(x, start), (y, end), (z, attach.expect("checked"))]);
            cycle.extend([z, y]);
            cycle.extend(other.iter().rev());
        }
        TemplateKind::H4 => {
            let (z, w) = (m.z.expect("H4 has z"), m.w.expect("H4 has w"));
            let v = attach.ok_or(Error::MissingAttachment)?;
            tree.extend([(start, w), (start, x), (y, end), (z, v)]);
            cycle.push(w);
            cycle.extend(&other);
            cycle.extend([y, z]);
        }
        TemplateKind::H5 => {
            let (w, u) = (m.w.expect("H5 has w"), m.u.expect("H5 has u"));
            tree.extend([(start, w), (start, x), (end, u), (end, y)]);
            cycle.push(w);
            cycle.extend(&other);
            cycle.extend([u, y]);
            if let Some(z) = m.z {
                tree.push((z, attach.ok_or(Error::MissingAttachment)?));
                cycle.push(z);
            }
        }
    }
    Ok(HalinCertificate {
        tree_edges: tree,
        leaf_cycle: cycle,
    })
}

fn check_attachment(kind: TemplateKind, ladder: &Ladder, at: Option<ZAttach>) -> Result<Option<usize>> {
    match (kind.needs_attachment(), at) {
        (false, None) => Ok(None),
        (false, Some(at)) => Err(at.error()),
        (true, None) => Err(Error::MissingAttachment),
        (true, Some(at)) => {
            let v = at.vertex(ladder).ok_or(at.error())?;
            if kind.attachment_on_b1_side() && !ladder.side_from_b1().contains(&v) {
                return Err(at.error());
            }
            Ok(Some(v))
        }
    }
}

/// Builds `H_kind` on `L_n`. `z_attach` is required for H3..H5; for H4 and
/// H5 it must name a vertex of the side starting at `b_1`.
pub fn build_template(kind: TemplateKind, n: usize, z_attach: Option<ZAttach>) -> Result<Template> {
    let (mut host, core) = make_ladder(n)?;
    let attach = check_attachment(kind, &core, z_attach)?;
    let marks = mark_layout(kind, n, true);
    let mut grown = Graph::empty(kind.order(n));
    for (u, v) in host.edges().chain(frame_edges(kind, &core, &marks)) {
        grown.add_edge(u, v)?;
    }
    if let (Some(z), Some(v)) = (marks.z, attach) {
        grown.add_edge(z, v)?;
    }
    host = grown;
    let certificate = frame_certificate(kind, &core, &marks, attach, Spine::FromA1)?;
    Ok(Template {
        kind,
        host,
        core,
        marks,
        z_attach,
        certificate,
    })
}

impl Template {
    /// For `H5`: the graph with `z` deleted and `xy` added, which is again
    /// Halin. Vertex ids: ladder, then `x, y, w, u`.
    pub fn without_pendent(&self) -> Result<(Graph, HalinCertificate)> {
        if self.kind != TemplateKind::H5 {
            return Err(Error::WrongTemplateKind);
        }
        let n = self.core.len();
        let marks = mark_layout(TemplateKind::H5, n, false);
        let (ladder_graph, _) = make_ladder(n)?;
        let mut g = Graph::empty(2 * n + 4);
        for (u, v) in ladder_graph.edges().chain(frame_edges(TemplateKind::H5, &self.core, &marks)) {
            g.add_edge(u, v)?;
        }
        let cert = frame_certificate(TemplateKind::H5, &self.core, &marks, None, Spine::FromA1)?;
        Ok((g, cert))
    }

    /// A certificate in which `v` is an internal tree vertex, if one exists.
    pub fn certificate_through(&self, v: usize) -> Option<HalinCertificate> {
        let attach = self.z_attach.and_then(|at| at.vertex(&self.core));
        [Spine::FromA1, Spine::FromB1]
            .into_iter()
            .filter_map(|s| frame_certificate(self.kind, &self.core, &self.marks, attach, s).ok())
            .find(|c| c.tree_edges.iter().filter(|&&(p, q)| p == v || q == v).count() >= 3)
    }
}

/// `T_kind`: the subgraph of the template induced on its marks and the end
/// rungs, without the attachment edge of `z`. For `n = 1` head and tail links coincide; [`assemble`] rejects
/// such anchors.
pub fn extract_anchor(t: &Template) -> Anchor {
    let first = t.core.first_rung().expect("templates have a rung");
    let last = t.core.last_rung().expect("templates have a rung");
    let vertices: VertexSet = t
        .marks
        .iter()
        .chain([first.a, first.b, last.a, last.b])
        .collect();
    let vs = vertices.as_slice();
    // The attachment edge zv belongs to the ladder side, not the anchor.
    let pendant = t.marks.z.zip(t.z_attach.and_then(|at| at.vertex(&t.core)));
    let mut edges = Vec::new();
    for (i, &p) in vs.iter().enumerate() {
        for &q in &vs[i + 1..] {
            if t.host.has_edge(p, q) && pendant != Some((p, q)) && pendant != Some((q, p)) {
                edges.push((p, q));
            }
        }
    }
    Anchor {
        kind: t.kind,
        vertices,
        edges,
        head_link: (first.a, first.b),
        tail_link: (last.a, last.b),
        marks: t.marks,
    }
}

/// Vertices of tree degree at least 3 in an underlying tree of the template.
/// `H1` has two underlying trees, so every ladder vertex qualifies.
pub fn halin_constructible_vertices(t: &Template) -> VertexSet {
    match t.kind {
        TemplateKind::H1 => t.core.vertices().collect(),
        _ => {
            let tree = t
                .certificate
                .tree(t.host.n())
                .expect("template certificates are trees");
            (0..tree.n()).filter(|&v| tree.degree(v) >= 3).collect()
        }
    }
}

/// `abLcd ∪ T (∪ {zz'})`: caps the spanning ladder `ladder` of `g - V(T)`
/// with the anchor and returns the resulting spanning Halin subgraph of `g`.
///
/// The ladder may be supplied in either orientation; every crosswise joining
/// the graph allows is tried and the first arrangement that certifies wins.
/// For anchors with a pendent vertex `z`, `pendant_edge` must be `zz'` with
/// `z'` on the spine the kind designates (any ladder side for `T3`, the side
/// through `b_1` for `T4` and `T5`).
pub fn assemble(
    anchor: &Anchor,
    ladder: &Ladder,
    g: &Graph,
    pendant_edge: Option<(usize, usize)>,
) -> Result<Assembly> {
    let (a1, b1) = anchor.head_link;
    let (an, bn) = anchor.tail_link;
    if a1 == an || a1 == bn || b1 == an || b1 == bn {
        return Err(Error::DegenerateAnchor);
    }
    for v in anchor.vertices.iter().chain(ladder.vertices()) {
        g.check_vertex(v)?;
    }
    if let Some(&(p, q)) = anchor.edges.iter().find(|&&(p, q)| !g.has_edge(p, q)) {
        return Err(Error::AssemblyFailed(format!("anchor edge {p} {q} not in graph")));
    }
    let Some(first) = ladder.first_rung() else {
        return Err(Error::InvalidRequest("ladder has no rungs"));
    };
    if !ladder.validate_in(g) {
        return Err(Error::NotALadder);
    }
    if ladder.vertices().any(|v| anchor.vertices.contains(v)) {
        return Err(Error::AssemblyFailed("ladder meets the anchor".into()));
    }
    if anchor.vertices.len() + ladder.order() != g.n() {
        return Err(Error::AssemblyFailed("ladder does not span the rest of the graph".into()));
    }

    let attach = match (anchor.pendent(), pendant_edge) {
        (None, None) => None,
        (None, Some(_)) => return Err(Error::UnexpectedPendantEdge),
        (Some(_), None) => return Err(Error::MissingPendantEdge),
        (Some(z), Some((p, q))) => {
            let other = if p == z {
                q
            } else if q == z {
                p
            } else {
                return Err(Error::InvalidRequest("pendant edge must contain the pendent vertex"));
            };
            if !g.has_edge(z, other) {
                return Err(Error::InvalidRequest("pendant edge not in graph"));
            }
            Some(other)
        }
    };

    let mut heads = Vec::new();
    if g.has_edge(a1, first.b) && g.has_edge(b1, first.a) {
        heads.push(ladder.clone());
    }
    if g.has_edge(a1, first.a) && g.has_edge(b1, first.b) {
        heads.push(ladder.swapped());
    }
    if heads.is_empty() {
        return Err(Error::LinkNotAdjacent("head link"));
    }

    let mut union = Graph::empty(g.n());
    for &(p, q) in &anchor.edges {
        union.add_edge(p, q)?;
    }
    if let (Some(z), Some(v)) = (anchor.pendent(), attach) {
        union.add_edge(z, v)?;
    }

    let mut last_error = Error::LinkNotAdjacent("tail link");
    for body in heads {
        let end = body.last_rung().expect("nonempty");
        let mut tails = Vec::new();
        if g.has_edge(end.a, bn) && g.has_edge(end.b, an) {
            tails.push((an, bn));
        }
        if g.has_edge(end.a, an) && g.has_edge(end.b, bn) {
            tails.push((bn, an));
        }
        for (ta, tb) in tails {
            let mut a = vec![a1];
            a.extend_from_slice(body.a_side());
            a.push(ta);
            let mut b = vec![b1];
            b.extend_from_slice(body.b_side());
            b.push(tb);
            let through = Ladder::from_sides(a, b)?;
            if let Some(v) = attach {
                let admissible = pendant_spine(anchor.kind, &through, v);
                if !admissible.contains(&v) {
                    last_error = Error::PendantNotOnSide(v);
                    continue;
                }
            }
            let cert = match frame_certificate(anchor.kind, &through, &anchor.marks, attach, Spine::FromA1) {
                Ok(c) => c,
                Err(e) => {
                    last_error = e;
                    continue;
                }
            };
            let mut local = union.clone();
            for (p, q) in through.edges() {
                local.add_edge(p, q)?;
            }
            let verdict = verify_halin(&local, &cert, Mode::Subgraph)
                .and_then(|_| verify_halin(g, &cert, Mode::Subgraph));
            match verdict {
                Ok(()) => {
                    let halin = cert.to_graph(g.n())?;
                    return Ok(Assembly {
                        halin,
                        certificate: cert,
                    });
                }
                Err(f) => last_error = Error::AssemblyFailed(format!("{f}")),
            }
        }
    }
    Err(last_error)
}

/// Vertices of the through-ladder that may receive the pendant edge: the
/// spine the certificate will use, recomputed from the kind.
fn pendant_spine(kind: TemplateKind, through: &Ladder, v: usize) -> Vec<usize> {
    match kind {
        TemplateKind::H3 => {
            let sa = through.side_from_a1();
            if sa.contains(&v) {
                sa
            } else {
                through.side_from_b1()
            }
        }
        _ => through.side_from_b1(),
    }
}

/// `G1 ∪ G2 - {x1y1, x2y2} ∪ {x1x2, y1y2, u1u2}` for two `H1`/`H2`
/// templates. The second template's ids are shifted by `|V(G1)|`; `u2` is
/// given in the second template's own ids.
pub fn merge(g1: &Template, g2: &Template, u1: usize, u2: usize) -> Result<Assembly> {
    for t in [g1, g2] {
        if !matches!(t.kind, TemplateKind::H1 | TemplateKind::H2) {
            return Err(Error::WrongTemplateKind);
        }
    }
    let c1 = merge_certificate(g1, u1)?;
    let c2 = merge_certificate(g2, u2)?;
    let offset = g1.host.n();
    let shift = |v: usize| v + offset;
    let n = offset + g2.host.n();

    let mut graph = Graph::empty(n);
    for (p, q) in g1.host.edges() {
        graph.add_edge(p, q)?;
    }
    for (p, q) in g2.host.edges() {
        graph.add_edge(shift(p), shift(q))?;
    }
    let (x1, y1) = (g1.marks.x, g1.marks.y);
    let (x2, y2) = (shift(g2.marks.x), shift(g2.marks.y));
    graph.remove_edge(x1, y1);
    graph.remove_edge(x2, y2);
    graph.add_edge(x1, x2)?;
    graph.add_edge(y1, y2)?;
    graph.add_edge(u1, shift(u2))?;

    let mut tree = c1.tree_edges.clone();
    tree.extend(c2.tree_edges.iter().map(|&(p, q)| (shift(p), shift(q))));
    tree.push((u1, shift(u2)));
    // Both leaf cycles run x .. y; splice them at the removed xy edges.
    let mut cycle = c1.leaf_cycle.clone();
    cycle.extend(c2.leaf_cycle.iter().rev().map(|&v| shift(v)));
    let certificate = HalinCertificate {
        tree_edges: tree,
        leaf_cycle: cycle,
    };
    if let Err(f) = verify_halin(&graph, &certificate, Mode::Exact) {
        return Err(Error::AssemblyFailed(format!("{f}")));
    }
    Ok(Assembly {
        halin: graph,
        certificate,
    })
}

fn merge_certificate(t: &Template, u: usize) -> Result<HalinCertificate> {
    if !halin_constructible_vertices(t).contains(u) {
        return Err(Error::NotHalinConstructible(u));
    }
    let cert = t
        .certificate_through(u)
        .ok_or(Error::NotHalinConstructible(u))?;
    let (first, last) = (cert.leaf_cycle[0], *cert.leaf_cycle.last().expect("nonempty"));
    debug_assert_eq!((first, last), (t.marks.x, t.marks.y));
    Ok(cert)
}

/// `template H3 n=5 z=a,2`
pub fn format_descriptor(kind: TemplateKind, n: usize, z_attach: Option<ZAttach>) -> String {
    match z_attach {
        None => format!("template {kind} n={n}"),
        Some(at) => {
            let side = if at.side == SideTag::A { 'a' } else { 'b' };
            format!("template {kind} n={n} z={side},{}", at.index)
        }
    }
}

/// Parses `template H3 n=5 z=a,2` (the leading keyword is optional).
pub fn parse_descriptor(s: &str) -> Result<(TemplateKind, usize, Option<ZAttach>)> {
    let bad = Error::InvalidParameter("malformed template descriptor");
    let mut words = s.split_whitespace().peekable();
    if words.peek() == Some(&"template") {
        words.next();
    }
    let kind: TemplateKind = words.next().ok_or(bad.clone())?.parse()?;
    let mut n = None;
    let mut at = None;
    for word in words {
        if let Some(v) = word.strip_prefix("n=") {
            n = Some(v.parse::<usize>().map_err(|_| bad.clone())?);
        } else if let Some(v) = word.strip_prefix("z=") {
            let (side, index) = v.split_once(',').ok_or(bad.clone())?;
            let side = match side {
                "a" | "A" => SideTag::A,
                "b" | "B" => SideTag::B,
                _ => return Err(bad),
            };
            let index = index.parse::<usize>().map_err(|_| bad.clone())?;
            at = Some(ZAttach { side, index });
        } else {
            return Err(bad);
        }
    }
    Ok((kind, n.ok_or(bad)?, at))
}

/// Every admissible attachment for `kind` on `L_n`.
pub fn admissible_attachments(kind: TemplateKind, n: usize) -> Vec<ZAttach> {
    if !kind.needs_attachment() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for index in 1..=n {
        for side in [SideTag::A, SideTag::B] {
            let on_b1_side = (side == SideTag::B) == (index % 2 == 1);
            if !kind.attachment_on_b1_side() || on_b1_side {
                out.push(ZAttach { side, index });
            }
        }
    }
    out
}
