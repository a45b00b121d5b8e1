//! Line-oriented text formats. `#` starts a comment; blank lines are
//! ignored. A document holds any of these blocks, in any order:
//!
//! ```text
//! # edge list: header "n m", then m lines "u v"
//! 4 6
//! 0 1
//! ...
//! # ladder certificate
//! ladder 3
//! A: 0 1 2
//! B: 3 4 5
//! # Halin certificate: tree edges, then the cyclic leaf order
//! tree:
//! 0 1
//! ...
//! cycle: 1 2 3
//! # template descriptor and anchor marks
//! template H3 n=5 z=a,2
//! marks: x=10 y=11 z=12
//! ```

use std::fmt::{self, Write as _};

use halin_core::templates::{format_descriptor, parse_descriptor, Marks, TemplateKind, ZAttach};
use halin_core::{Graph, HalinCertificate, Ladder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub graph: Option<Graph>,
    pub ladders: Vec<Ladder>,
    pub halin: Option<HalinCertificate>,
    pub template: Option<(TemplateKind, usize, Option<ZAttach>)>,
    pub marks: Option<Marks>,
}

fn numbers(s: &str, line: usize) -> Result<Vec<usize>, ParseError> {
    s.split_whitespace()
        .map(|w| {
            w.parse::<usize>().map_err(|_| ParseError {
                line,
                msg: format!("expected a vertex id, found {w:?}"),
            })
        })
        .collect()
}

fn pair(s: &str, line: usize) -> Result<(usize, usize), ParseError> {
    match numbers(s, line)?.as_slice() {
        &[u, v] => Ok((u, v)),
        _ => Err(ParseError {
            line,
            msg: format!("expected two vertex ids, found {s:?}"),
        }),
    }
}

fn parse_marks(s: &str, line: usize) -> Result<Marks, ParseError> {
    let bad = |msg: String| ParseError { line, msg };
    let (mut x, mut y) = (None, None);
    let mut marks = Marks {
        x: 0,
        y: 0,
        z: None,
        w: None,
        u: None,
    };
    for word in s.split_whitespace() {
        let (key, value) = word.split_once('=').ok_or_else(|| bad(format!("malformed mark {word:?}")))?;
        let v: usize = value.parse().map_err(|_| bad(format!("malformed mark {word:?}")))?;
        match key {
            "x" => x = Some(v),
            "y" => y = Some(v),
            "z" => marks.z = Some(v),
            "w" => marks.w = Some(v),
            "u" => marks.u = Some(v),
            _ => return Err(bad(format!("unknown mark {key:?}"))),
        }
    }
    marks.x = x.ok_or_else(|| bad("marks need x".into()))?;
    marks.y = y.ok_or_else(|| bad("marks need y".into()))?;
    Ok(marks)
}

/// Meaningful lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut doc = Document::default();
    let mut lines = content_lines(text).peekable();
    while let Some((no, line)) = lines.next() {
        let err = |msg: String| ParseError { line: no, msg };
        if let Some(rest) = line.strip_prefix("ladder") {
            let k = numbers(rest, no)?;
            let &[k] = k.as_slice() else {
                return Err(err("expected \"ladder <rungs>\"".into()));
            };
            let mut side = |tag: &str| -> Result<Vec<usize>, ParseError> {
                let (n2, l2) = lines.next().ok_or_else(|| err(format!("ladder block is missing {tag}")))?;
                let body = l2.strip_prefix(tag).ok_or_else(|| ParseError {
                    line: n2,
                    msg: format!("expected {tag:?}"),
                })?;
                numbers(body, n2)
            };
            let a = side("A:")?;
            let b = side("B:")?;
            if a.len() != k || b.len() != k {
                return Err(err(format!("ladder {k} needs {k} vertices per side")));
            }
            doc.ladders.push(Ladder::from_sides(a, b).map_err(|e| err(e.to_string()))?);
        } else if line == "tree:" {
            let mut tree_edges = Vec::new();
            while let Some(&(n2, l2)) = lines.peek() {
                if l2.starts_with("cycle:") {
                    break;
                }
                tree_edges.push(pair(l2, n2)?);
                lines.next();
            }
            let (n2, l2) = lines.next().ok_or_else(|| err("tree block needs a cycle line".into()))?;
            let leaf_cycle = numbers(l2.strip_prefix("cycle:").expect("peeked"), n2)?;
            doc.halin = Some(HalinCertificate { tree_edges, leaf_cycle });
        } else if line.starts_with("template") {
            doc.template = Some(parse_descriptor(line).map_err(|e| err(e.to_string()))?);
        } else if let Some(rest) = line.strip_prefix("marks:") {
            doc.marks = Some(parse_marks(rest, no)?);
        } else if line.starts_with(|c: char| c.is_ascii_digit()) {
            let (n, m) = pair(line, no)?;
            let mut edges = Vec::with_capacity(m);
            for _ in 0..m {
                let (n2, l2) = lines.next().ok_or_else(|| err(format!("edge list ends before {m} edges")))?;
                edges.push(pair(l2, n2)?);
            }
            if doc.graph.is_some() {
                return Err(err("more than one edge list".into()));
            }
            doc.graph = Some(Graph::from_edges(n, edges).map_err(|e| err(e.to_string()))?);
        } else {
            return Err(err(format!("unrecognised line {line:?}")));
        }
    }
    Ok(doc)
}

pub fn write_graph(out: &mut String, g: &Graph) {
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn write_ladder(out: &mut String, l: &Ladder) {
    writeln!(out, "ladder {}", l.len()).unwrap();
    writeln!(out, "A: {}", join(l.a_side())).unwrap();
    writeln!(out, "B: {}", join(l.b_side())).unwrap();
}

pub fn write_halin(out: &mut String, c: &HalinCertificate) {
    writeln!(out, "tree:").unwrap();
    for (u, v) in &c.tree_edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    writeln!(out, "cycle: {}", join(&c.leaf_cycle)).unwrap();
}

pub fn write_template(out: &mut String, kind: TemplateKind, n: usize, at: Option<ZAttach>) {
    writeln!(out, "{}", format_descriptor(kind, n, at)).unwrap();
}

pub fn write_marks(out: &mut String, m: &Marks) {
    write!(out, "marks: x={} y={}", m.x, m.y).unwrap();
    for (key, v) in [("z", m.z), ("w", m.w), ("u", m.u)] {
        if let Some(v) = v {
            write!(out, " {key}={v}").unwrap();
        }
    }
    out.push('\n');
}

/// Parses `"u v"`.
pub fn parse_edge(s: &str) -> Result<(usize, usize), ParseError> {
    pair(s, 0)
}

/// Parses `"a b / c d"`.
pub fn parse_edge_pair(s: &str) -> Result<((usize, usize), (usize, usize)), ParseError> {
    let (l, r) = s.split_once('/').ok_or(ParseError {
        line: 0,
        msg: format!("expected \"a b / c d\", found {s:?}"),
    })?;
    Ok((pair(l, 0)?, pair(r, 0)?))
}

/// Parses a vertex list separated by spaces or commas.
pub fn parse_ids(s: &str) -> Result<Vec<usize>, ParseError> {
    numbers(&s.replace(',', " "), 0)
}
