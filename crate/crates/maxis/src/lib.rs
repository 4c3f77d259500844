//! Exact combinatorics of maximum independent sets on small graphs.
//!
//! The crate builds the extremal graphs that maximize the number of maximum
//! independent sets at fixed order and independence number, evaluates their
//! closed-form counts, applies the true-twin and edge-reduction graph
//! transformations, and exhaustively verifies the extremal statements over
//! all small graphs via isomorph-free generation.
//!
//! The CLI binary `maxis` exposes these as subcommands speaking line-oriented
//! graph6 on stdin/stdout. The interchangeable pieces — construction kinds,
//! transformations, verification checks — live behind name-keyed registries
//! ([`constructions::CONSTRUCTORS`], [`transform::TRANSFORMS`],
//! [`verify::CHECKS`]) and are selected at runtime.

pub mod constructions;
pub mod counting;
pub mod error;
pub mod generate;
pub mod graph;
pub mod iso;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
