//! Exact counting of monochromatic paths, cycles, stars and cliques in
//! two-edge-colorings of complete graphs, the split colorings `χ(a, b)`
//! that are conjectured to minimize them, and the supporting machinery:
//! exhaustive and annealed minimization, matchings, bounded-length
//! disjoint paths, ε-regular pairs and extremal-coloring detection.
//!
//! The crate is `no_std` (it needs `alloc`). The default `std` feature
//! turns on rayon-backed parallelism for exhaustive enumeration and
//! annealing restarts; results are identical with or without it.
//!
//! Counts are always of *unlabeled* copies: a path is counted once, not
//! once per direction, and a cycle once, not once per rotation or
//! reflection.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod canonical;
pub mod coloring;
pub mod counting;
mod error;
pub mod frac;
pub mod graph;
mod par;
pub mod ramsey;
pub mod regularity;
pub mod search;
pub mod structure;

pub use coloring::{Color, ColorView, EdgeColoring, SplitSpec};
pub use counting::{MonoCount, Pattern};
pub use error::{Error, Result};
pub use frac::Frac;
pub use graph::SimpleGraph;
