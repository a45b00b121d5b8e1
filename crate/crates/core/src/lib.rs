//! Constructive toolkit for spanning Halin subgraphs of dense graphs.
//!
//! The crate is `no_std` (it needs `alloc`) and purely algorithmic:
//!
//! * [`graph`]: simple undirected graphs, neighbourhood calculus, small
//!   connectivity and cycle oracles.
//! * [`ladder`]: ladders `L_n`, rung adjacency and concatenation.
//! * [`templates`]: the five ladder-like Halin graphs `H1..H5`, their
//!   anchors, assembly of an anchor with a spanning ladder, and merging.
//! * [`verify`]: certificate based Halin recognition and brute-force checks
//!   of the classical Halin properties.
//! * [`absorb`]: swallowing a small vertex set into a ladder.
//! * [`ladder_finder`]: spanning ladders with prescribed end rungs via a
//!   perfect matching and an auxiliary graph on its edges.
//! * [`search`]: exact spanning-Halin-subgraph search for small graphs and
//!   the minimum degree experiment harness.
//! * [`generate`]: seeded random instance generators.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod absorb;
mod bits;
pub mod error;
pub mod generate;
pub mod graph;
pub mod ladder;
pub mod ladder_finder;
pub mod search;
pub mod templates;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use ladder::Ladder;
pub use verify::HalinCertificate;
