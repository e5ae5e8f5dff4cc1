//! Exact computation of total mutual-visibility invariants of finite graphs.
//!
//! A set `X` of vertices is in total mutual visibility when every pair of
//! vertices of the graph (inside or outside `X`) is joined by at least one
//! shortest path whose internal vertices all avoid `X`.  The largest size of
//! such a set is the invariant `mu_t` computed here, together with the
//! related independent variant, compulsory/forbidden vertex classification,
//! and domination numbers.  The `construct` module builds product graphs and
//! named families; `theorems` checks known identities and bounds over whole
//! families of instances and produces machine-readable verdicts.
//!
//! The crate is `no_std` (allocation required); everything that touches the
//! operating system lives in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod construct;
pub mod domination;
pub mod error;
pub mod graph;
pub mod theorems;
pub mod visibility;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, VertexSet, UNREACHABLE};
