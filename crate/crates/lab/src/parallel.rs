//! Rayon drivers for the certifier and the exact search. They use the
//! current rayon pool; wrap calls in `ThreadPool::install` to size it.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use turan_core::certifier::{
    certify_part, partition_vertices, verify_global, verify_part, Certificate, Verification,
};
use turan_core::graph::triangle_count;
use turan_core::search::{
    brute_force_ex, heuristic_lower, ExactSearch, SearchOutcome, SharedState,
};
use turan_core::{Graph, PatternParams, Result};

use crate::graph6;

pub fn certify(g: &Graph, p: PatternParams) -> Result<Certificate> {
    Certificate::precheck(g, p)?;
    let partition = partition_vertices(g.n());
    let parts = partition
        .par_iter()
        .map(|part| certify_part(g, part, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(Certificate::assemble(g, p, partition, parts))
}

pub fn verify(g: &Graph, cert: &Certificate) -> Result<Verification> {
    let mut violations = verify_global(g, cert)?;
    let per_part = (0..cert.parts.len())
        .into_par_iter()
        .map(|i| verify_part(g, cert, i))
        .collect::<Result<Vec<_>>>()?;
    violations.extend(per_part.into_iter().flatten());
    Ok(Verification { violations })
}

/// Number of leading edge decisions fanned out as independent tasks.
fn split_depth(edge_count: usize) -> usize {
    let workers = rayon::current_num_threads().max(1);
    let wanted = (workers * 16).next_power_of_two().trailing_zeros() as usize;
    wanted.min(edge_count).min(12)
}

/// Exact search with the top `k` edge decisions distributed over the pool.
/// The value does not depend on the thread count; the witness may.
pub fn search_exact(n: usize, p: PatternParams, budget: Option<u64>) -> Result<SearchOutcome> {
    let search = ExactSearch::new(n, p)?;
    let shared = SharedState::new(budget);
    let depth = split_depth(search.edge_count());
    let best = (0..1u64 << depth)
        .into_par_iter()
        .filter_map(|mask| {
            let prefix: Vec<bool> = (0..depth).map(|i| mask >> i & 1 == 1).collect();
            search.run(&prefix, &shared)
        })
        .max_by_key(|r| r.value);
    let (value, witness) = match best {
        Some(r) => (r.value, r.witness),
        None => (0, Graph::empty(n)),
    };
    Ok(SearchOutcome {
        value,
        witness,
        exact: !shared.aborted(),
        nodes_explored: shared.nodes(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BruteForce,
    BranchAndBound,
    Heuristic,
}

/// Search output with timing. `witness` is graph6.
#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub method: Method,
    pub value: u64,
    pub exact: bool,
    pub nodes_explored: u64,
    pub elapsed_ms: f64,
    pub witness: String,
}

impl SearchResult {
    fn new(
        n: usize,
        p: PatternParams,
        method: Method,
        outcome: SearchOutcome,
        elapsed: Duration,
    ) -> Self {
        // The witness is re-checked rather than trusted.
        assert!(
            turan_core::freeness::is_k1st_free(&outcome.witness, p),
            "search returned a non-free witness"
        );
        assert_eq!(
            triangle_count(&outcome.witness),
            outcome.value,
            "witness does not realise the value"
        );
        SearchResult {
            n,
            s: p.s(),
            t: p.t(),
            method,
            value: outcome.value,
            exact: outcome.exact,
            nodes_explored: outcome.nodes_explored,
            elapsed_ms: elapsed.as_secs_f64() * 1e3,
            witness: graph6::encode(&outcome.witness),
        }
    }
}

pub fn timed_brute_force(n: usize, p: PatternParams) -> Result<SearchResult> {
    let start = Instant::now();
    let outcome = brute_force_ex(n, p)?;
    Ok(SearchResult::new(
        n,
        p,
        Method::BruteForce,
        outcome,
        start.elapsed(),
    ))
}

pub fn timed_exact(n: usize, p: PatternParams, budget: Option<u64>) -> Result<SearchResult> {
    let start = Instant::now();
    let outcome = search_exact(n, p, budget)?;
    Ok(SearchResult::new(
        n,
        p,
        Method::BranchAndBound,
        outcome,
        start.elapsed(),
    ))
}

pub fn timed_heuristic(
    n: usize,
    p: PatternParams,
    seed: u64,
    iters: u64,
    init: Option<&Graph>,
) -> Result<SearchResult> {
    let start = Instant::now();
    let outcome = heuristic_lower(n, p, seed, iters, init)?;
    Ok(SearchResult::new(
        n,
        p,
        Method::Heuristic,
        outcome,
        start.elapsed(),
    ))
}
