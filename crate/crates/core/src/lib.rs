//! Exact computation with matroids represented over partial fields.

pub mod arith;
pub mod constructions;
pub mod error;
pub mod gpc;
pub mod graph;
pub mod matrix;
pub mod matroid;
pub mod verify;

pub use error::{Error, Result};
