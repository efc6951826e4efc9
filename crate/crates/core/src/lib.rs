//! Exact-arithmetic toolkit for the minimum spectral radius problem over
//! connected graphs with prescribed domination number.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: simple undirected graphs, named families, structural
//!   predicates, tree canonical forms and graph6 I/O.
//! * [`spectral`]: integer characteristic polynomials, Sturm root counting,
//!   certified spectral-radius enclosures and an exact comparator.
//! * [`domination`]: domination numbers with certificates.
//! * [`enumerate`]: free-tree and labeled-graph streams with class filters
//!   and exact minimizer search.
//! * [`verify`]: one verifier per claim, producing structured reports.

pub mod domination;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
