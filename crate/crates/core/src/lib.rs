//! Minimum-weight arc sets that block every minimum-cost rooted
//! arborescence of a digraph.
//!
//! The pipeline: [`arborescence::tight_structure`] computes the arcs and
//! laminar dual family certifying arborescence optimality, and
//! [`blocker::solve_blocker`] turns destroying all optimal arborescences
//! into minimum double cuts ([`mincut::min_double_cut`]) inside the family
//! members, after relocating arc tails onto anchor nodes
//! ([`mincut::anchor_node`]). [`oracle`] holds independent exhaustive
//! reference implementations for cross-checking on small instances.
//!
//! The `parallel` feature (default on) evaluates independent minimum-cut
//! batches on rayon; disabling it gives a sequential build with bit-identical
//! results.

pub mod arborescence;
pub mod blocker;
mod error;
mod flow;
pub mod graph;
pub mod mincut;
pub mod oracle;
mod par;

pub use error::{Error, Result};
