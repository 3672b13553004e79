//! Stellar and bistellar moves on abstract simplicial complexes.
//!
//! Complexes are stored by their facets over `u32` vertex labels. The crate
//! applies and checks moves, replays transcripts, recognizes small spheres
//! and balls, expands stellar moves into bistellar ones, and searches for
//! bistellar reductions.

pub mod complex;
pub mod error;
pub mod expander;
pub mod fixtures;
pub mod flip;
pub mod moves;
pub mod recognize;

pub use complex::{Complex, FVector, Simplex, VertexId};
pub use error::{Error, Result};
pub use moves::{apply_move, apply_transcript, check_move, Move, MoveFamily, Transcript};
