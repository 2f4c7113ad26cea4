//! Exact counting of directed patterns in bounded-outdegree hosts, together
//! with the structural invariants that decide when such counting is
//! fixed-parameter tractable.

pub mod basis;
pub mod brute;
pub mod canon;
pub mod classify;
pub mod digraph;
pub mod error;
pub mod format;
pub mod gadgets;
pub mod hom;
pub mod hypergraph;
pub mod interpolation;
pub mod limits;
pub mod lp;
pub mod rational;

pub use error::{Error, Result};
