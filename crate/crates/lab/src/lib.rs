//! File formats, parallel drivers and the command line for `turan-core`.

pub mod cli;
pub mod document;
pub mod graph6;
pub mod input;
pub mod parallel;
pub mod table;

/// Largest order accepted from files. Graphs are dense bitsets.
pub const MAX_GRAPH_ORDER: usize = 1 << 15;
