//! Extremal values `ex(n, K_3, K_{1,s,t})` for small `n`.
//!
//! [`brute_force_ex`] enumerates every labelled graph and is the oracle.
//! [`ExactSearch`] is a depth-first branch and bound over edge decisions in
//! colexicographic order; its incumbent and node counter live in
//! [`SharedState`] so that subtrees can run on separate threads.
//! [`heuristic_lower`] is a seeded hill climber for orders beyond reach.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::freeness::{edge_completes_pattern, is_k1st_free, PatternParams};
use crate::graph::triangle_count;
use crate::{Error, Graph, Result};

#[cfg(target_has_atomic = "64")]
mod exact;
#[cfg(target_has_atomic = "64")]
pub use exact::{search_ex, ExactSearch, SharedState, SubtreeResult};

/// Largest order [`brute_force_ex`] accepts (2^21 labelled graphs).
pub const BRUTE_FORCE_LIMIT: usize = 7;
/// Adjacency rows of the exact search are single words.
pub const EXACT_SEARCH_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Triangles in `witness`.
    pub value: u64,
    pub witness: Graph,
    /// Only exhaustive runs that finished set this.
    pub exact: bool,
    pub nodes_explored: u64,
}

/// Exhausts all `2^C(n,2)` labelled graphs, using the general freeness
/// checker and triangle counter.
pub fn brute_force_ex(n: usize, p: PatternParams) -> Result<SearchOutcome> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let edges: Vec<(usize, usize)> = Graph::complete(n).edges().collect();
    let mut best = SearchOutcome {
        value: 0,
        witness: Graph::empty(n),
        exact: true,
        nodes_explored: 0,
    };
    let mut g = Graph::empty(n);
    for mask in 0u64..1 << edges.len() {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            } else {
                g.remove_edge(u, v);
            }
        }
        best.nodes_explored += 1;
        let triangles = triangle_count(&g);
        if triangles > best.value && is_k1st_free(&g, p) {
            best.value = triangles;
            best.witness = g.clone();
        }
    }
    Ok(best)
}

/// Seeded hill climbing over single-edge flips.
///
/// A flip is accepted when the graph stays `K_{1,s,t}`-free and the triangle
/// count does not drop. After `stall` rejected proposals in a row the walk
/// restarts from `init` (or the empty graph). The best graph seen is
/// returned; `iters = 0` returns the initializer.
pub fn heuristic_lower(
    n: usize,
    p: PatternParams,
    seed: u64,
    iters: u64,
    init: Option<&Graph>,
) -> Result<SearchOutcome> {
    let start = match init {
        Some(g) if g.n() != n => {
            return Err(Error::InvalidArgument(alloc::format!(
                "initializer has {} vertices, expected {n}",
                g.n()
            )))
        }
        Some(g) if !is_k1st_free(g, p) => {
            return Err(Error::InvalidArgument(
                "initializer is not K_(1,s,t)-free".into(),
            ))
        }
        Some(g) => g.clone(),
        None => Graph::empty(n),
    };
    const STALL: u64 = 500;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = start.clone();
    let mut triangles = triangle_count(&g);
    let mut best = SearchOutcome {
        value: triangles,
        witness: g.clone(),
        exact: false,
        nodes_explored: 0,
    };
    let mut rejected = 0;
    if n < 2 {
        return Ok(best);
    }
    for _ in 0..iters {
        best.nodes_explored += 1;
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        let through = g.neighbors(u).intersection_len(g.neighbors(v)) as u64;
        let accepted = if g.has_edge(u, v) {
            // Removal keeps freeness; only sideways moves are allowed.
            through == 0 && g.remove_edge(u, v)
        } else {
            g.add_edge(u, v);
            if edge_completes_pattern(&g, u, v, p).is_some() {
                g.remove_edge(u, v);
                false
            } else {
                triangles += through;
                true
            }
        };
        if accepted {
            rejected = 0;
            if triangles > best.value {
                best.value = triangles;
                best.witness = g.clone();
            }
        } else {
            rejected += 1;
            if rejected >= STALL {
                rejected = 0;
                g = start.clone();
                triangles = triangle_count(&g);
            }
        }
    }
    Ok(best)
}
