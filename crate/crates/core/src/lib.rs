//! Dilations of graphs into hypergraphs, and the exact invariants
//! (domination, matching and transversal numbers) that they preserve.

pub mod cli;
pub mod dilation;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod hypergraph;
pub mod invariants;

pub use error::{Error, Result};
