//! Counting triangles in `K_{1,s,t}`-free graphs.
//!
//! This crate holds the allocation-only algorithmic kernels:
//!
//! * [`graph`]: bit-packed simple graphs, triangle and ordered-triangle counts.
//! * [`freeness`]: `K_{s,t}` / `K_{1,s,t}` detection and a seeded repair
//!   procedure that produces free instances.
//! * [`constructions`]: lower-bound families (complete bipartite plus a
//!   matching, Behrend sets feeding the Ruzsa–Szemerédi tripartite graph).
//! * [`bounds`]: explicit Kővári–Sós–Turán bounds and the asymptotic curve.
//! * [`certifier`]: a decomposition certificate giving an explicit upper
//!   bound on the ordered triangle count of a concrete free graph, plus an
//!   independent re-checker.
//! * [`search`]: exact extremal values for small orders and a hill-climbing
//!   lower-bound probe.
//!
//! IO, file formats and threading live in the `turan-lab` companion crate.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod certifier;
pub mod constructions;
pub mod error;
pub mod freeness;
pub mod graph;
pub mod search;
mod set;

pub use error::Error;
pub use freeness::{PatternParams, PatternWitness};
pub use graph::Graph;
pub use set::VertexSet;

pub type Result<T> = core::result::Result<T, Error>;
