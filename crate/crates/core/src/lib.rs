//! Co-even domination numbers of graph operations.
//!
//! A set `D` is co-even dominating when it dominates the graph and every
//! vertex outside `D` has even degree. This crate builds join, corona,
//! neighbourhood corona and Hajós sums ([`ops`]), computes domination and
//! co-even domination numbers exactly ([`solver`]), evaluates the known
//! closed forms and bounds ([`formulas`]) and compares the two on families
//! of instances ([`verify`]).

pub mod cli;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod ops;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, ParityProfile, VertexSet};
