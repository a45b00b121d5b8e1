use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::absorb::Violation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop(usize),
    MultiEdge(usize, usize),
    /// Common neighbourhood of an empty vertex set.
    UndefinedIntersection,
    /// An exhaustive routine was asked to work beyond its size limit.
    BudgetExceeded { limit: usize, actual: usize },
    InvalidParameter(&'static str),
    DegenerateSides,
    SharedEndpoint,
    CannotConcatenate,
    NotALadder,
    MissingAttachment,
    InvalidAttachment { side: char, index: usize },
    DegenerateAnchor,
    MissingPendantEdge,
    UnexpectedPendantEdge,
    LinkNotAdjacent(&'static str),
    PendantNotOnSide(usize),
    NotHalinConstructible(usize),
    WrongTemplateKind,
    NotATree,
    NotLeafPermutation,
    AbsorbPrecondition(Violation),
    /// Greedy choice ran dry even though the preconditions held.
    AbsorbExhausted,
    NoConstructiveGuarantee,
    NoHamiltonianPath,
    /// Hall violator: `deficient` has fewer neighbours than members.
    NoPerfectMatching {
        deficient: Vec<usize>,
        neighbours: Vec<usize>,
    },
    InvalidRequest(&'static str),
    /// A search hit its node budget before reaching a verdict.
    SearchTimeout { nodes: u64 },
    AssemblyFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::MultiEdge(u, v) => write!(f, "duplicate edge {u} {v}"),
            Error::UndefinedIntersection => write!(f, "undefined intersection"),
            Error::BudgetExceeded { limit, actual } => write!(
                f,
                "exceeds brute-force budget ({actual} vertices, limit {limit})"
            ),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::DegenerateSides => write!(f, "sides undefined for degenerate ladder"),
            Error::SharedEndpoint => write!(f, "edges share an endpoint"),
            Error::CannotConcatenate => write!(f, "cannot concatenate"),
            Error::NotALadder => write!(f, "vertex lists do not form a ladder"),
            Error::MissingAttachment => write!(f, "template kind requires a z attachment"),
            Error::InvalidAttachment { side, index } => {
                write!(f, "z attachment {side},{index} violates the side constraint")
            }
            Error::DegenerateAnchor => write!(f, "anchor head and tail links share vertices"),
            Error::MissingPendantEdge => write!(f, "anchor has a pendent vertex but no pendant edge"),
            Error::UnexpectedPendantEdge => write!(f, "anchor has no pendent vertex"),
            Error::LinkNotAdjacent(which) => write!(f, "{which} is not adjacent to the ladder"),
            Error::PendantNotOnSide(v) => {
                write!(f, "pendant neighbour {v} is not on the designated side")
            }
            Error::NotHalinConstructible(v) => write!(f, "vertex {v} is not Halin constructible"),
            Error::WrongTemplateKind => write!(f, "operation needs an H1 or H2 template"),
            Error::NotATree => write!(f, "input is not a tree"),
            Error::NotLeafPermutation => write!(f, "order is not a permutation of the leaves"),
            Error::AbsorbPrecondition(v) => write!(f, "absorbing precondition violated: {v}"),
            Error::AbsorbExhausted => write!(f, "no admissible helper vertex left"),
            Error::NoConstructiveGuarantee => write!(f, "no constructive guarantee"),
            Error::NoHamiltonianPath => write!(f, "no hamiltonian path found"),
            Error::NoPerfectMatching { deficient, neighbours } => write!(
                f,
                "no perfect matching: {} vertices {:?} see only {:?}",
                deficient.len(),
                deficient,
                neighbours
            ),
            Error::InvalidRequest(msg) => write!(f, "invalid request: {msg}"),
            Error::SearchTimeout { nodes } => write!(f, "search timed out after {nodes} nodes"),
            Error::AssemblyFailed(msg) => write!(f, "assembly failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
