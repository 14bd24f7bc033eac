//! Combinatorial-convexity and homological parameters of explicit finite set
//! systems and simplicial complexes.
//!
//! - [`set_system`]: set systems, F-convex hulls, clique predicates
//! - [`params`]: Helly, Radon, partition, colorful and graded parameters
//! - [`homology`]: simplicial complexes and reduced Betti numbers over GF(2)
//! - [`chain_map`]: chain maps and homological almost-embeddings
//! - [`theorems`]: executable checks of the inequalities relating the parameters
//! - [`corpus`]: seeded generators for test corpora

pub mod bitset;
pub mod budget;
pub mod chain_map;
pub mod corpus;
pub mod error;
pub mod homology;
pub mod params;
pub mod set_system;
pub mod theorems;

pub use budget::{Budget, DEFAULT_NODE_BUDGET};
pub use error::{Error, Result};
pub use set_system::{Selector, SetSystem};
