//! Branch and bound. Needs 64-bit atomics for the shared incumbent.

use alloc::vec::Vec;
use core::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use super::{SearchOutcome, EXACT_SEARCH_LIMIT};
use crate::freeness::PatternParams;
use crate::{Error, Graph, Result};

/// Incumbent value and node accounting shared between search workers.
#[derive(Debug)]
pub struct SharedState {
    best: AtomicU64,
    nodes: AtomicU64,
    budget: u64,
    aborted: AtomicBool,
}

impl SharedState {
    /// `budget` caps the number of search nodes; `None` means unlimited.
    pub fn new(budget: Option<u64>) -> Self {
        SharedState {
            best: AtomicU64::new(0),
            nodes: AtomicU64::new(0),
            budget: budget.unwrap_or(u64::MAX),
            aborted: AtomicBool::new(false),
        }
    }

    pub fn best(&self) -> u64 {
        self.best.load(Ordering::Relaxed)
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    /// True once the node budget has cut some subtree short.
    pub fn aborted(&self) -> bool {
        self.aborted.load(Ordering::Relaxed)
    }

    /// Raises the incumbent to `value`; true if this call improved it.
    fn offer(&self, value: u64) -> bool {
        self.best.fetch_max(value, Ordering::Relaxed) < value
    }

    /// Charges `count` nodes; false (and the search is marked aborted) once
    /// the budget is exceeded.
    fn charge(&self, count: u64) -> bool {
        let before = self.nodes.fetch_add(count, Ordering::Relaxed);
        if before.saturating_add(count) > self.budget {
            self.aborted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn would_exceed(&self, pending: u64) -> bool {
        self.nodes().saturating_add(pending) > self.budget
    }
}

/// Branch and bound over the edges of `K_n` in colexicographic order.
///
/// Every node holds the decided-in graph `current` (always free) and the
/// optimistic graph `current + undecided`. A subtree is cut when the
/// optimistic graph has no more triangles than the incumbent.
#[derive(Debug, Clone)]
pub struct ExactSearch {
    n: usize,
    p: PatternParams,
    edges: Vec<(usize, usize)>,
}

/// Best graph a subtree improved the incumbent with, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeResult {
    pub value: u64,
    pub witness: Graph,
}

struct Frame<'a> {
    search: &'a ExactSearch,
    shared: &'a SharedState,
    current: Vec<u64>,
    optimistic: Vec<u64>,
    current_triangles: u64,
    optimistic_triangles: u64,
    unsynced: u64,
    stopped: bool,
    found: Option<SubtreeResult>,
}

const CHARGE_BATCH: u64 = 256;

impl ExactSearch {
    pub fn new(n: usize, p: PatternParams) -> Result<Self> {
        if n > EXACT_SEARCH_LIMIT {
            return Err(Error::TooLarge {
                n,
                limit: EXACT_SEARCH_LIMIT,
            });
        }
        Ok(ExactSearch {
            n,
            p,
            edges: Graph::complete(n).edges().collect(),
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Explores the subtree whose first `prefix.len()` edge decisions are
    /// fixed (`true` = edge present). Returns `None` when the prefix itself
    /// is infeasible or nothing in the subtree beat the incumbent.
    pub fn run(&self, prefix: &[bool], shared: &SharedState) -> Option<SubtreeResult> {
        assert!(
            prefix.len() <= self.edges.len(),
            "prefix longer than the edge list"
        );
        let full = if self.n == 0 {
            0
        } else {
            u64::MAX >> (64 - self.n)
        };
        let mut frame = Frame {
            search: self,
            shared,
            current: alloc::vec![0; self.n],
            optimistic: (0..self.n).map(|v| full & !(1u64 << v)).collect(),
            current_triangles: 0,
            optimistic_triangles: 0,
            unsynced: 0,
            stopped: false,
            found: None,
        };
        frame.optimistic_triangles = words_triangles(&frame.optimistic);
        for (index, &include) in prefix.iter().enumerate() {
            let (u, v) = self.edges[index];
            if include {
                if !frame.try_include(u, v) {
                    return None;
                }
            } else {
                frame.exclude(u, v);
            }
        }
        frame.descend(prefix.len());
        if !frame.stopped {
            shared.nodes.fetch_add(frame.unsynced, Ordering::Relaxed);
        }
        frame.found
    }
}

impl Frame<'_> {
    fn try_include(&mut self, u: usize, v: usize) -> bool {
        self.current[u] |= 1 << v;
        self.current[v] |= 1 << u;
        if creates_pattern(&self.current, u, v, self.search.p) {
            self.current[u] &= !(1 << v);
            self.current[v] &= !(1 << u);
            return false;
        }
        self.current_triangles += (self.current[u] & self.current[v]).count_ones() as u64;
        true
    }

    fn undo_include(&mut self, u: usize, v: usize) {
        self.current[u] &= !(1 << v);
        self.current[v] &= !(1 << u);
        self.current_triangles -= (self.current[u] & self.current[v]).count_ones() as u64;
    }

    fn exclude(&mut self, u: usize, v: usize) {
        self.optimistic[u] &= !(1 << v);
        self.optimistic[v] &= !(1 << u);
        self.optimistic_triangles -= (self.optimistic[u] & self.optimistic[v]).count_ones() as u64;
    }

    fn undo_exclude(&mut self, u: usize, v: usize) {
        self.optimistic_triangles += (self.optimistic[u] & self.optimistic[v]).count_ones() as u64;
        self.optimistic[u] |= 1 << v;
        self.optimistic[v] |= 1 << u;
    }

    fn descend(&mut self, index: usize) {
        if self.stopped {
            return;
        }
        self.unsynced += 1;
        if self.unsynced >= CHARGE_BATCH || self.shared.would_exceed(self.unsynced) {
            let within_budget = self.shared.charge(self.unsynced);
            self.unsynced = 0;
            if !within_budget {
                self.stopped = true;
                return;
            }
        }
        if self.current_triangles > self.shared.best() && self.shared.offer(self.current_triangles)
        {
            self.found = Some(SubtreeResult {
                value: self.current_triangles,
                witness: words_to_graph(&self.current),
            });
        }
        if self.optimistic_triangles <= self.shared.best() || index == self.search.edges.len() {
            return;
        }
        let (u, v) = self.search.edges[index];
        if self.try_include(u, v) {
            self.descend(index + 1);
            self.undo_include(u, v);
        }
        self.exclude(u, v);
        self.descend(index + 1);
        self.undo_exclude(u, v);
    }
}

pub(super) fn words_triangles(rows: &[u64]) -> u64 {
    let mut per_edge = 0u64;
    for (u, &row) in rows.iter().enumerate() {
        let mut higher = row & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0);
        while higher != 0 {
            let v = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            per_edge += (row & rows[v]).count_ones() as u64;
        }
    }
    per_edge / 3
}

pub(super) fn words_to_graph(rows: &[u64]) -> Graph {
    let mut g = Graph::empty(rows.len());
    for (u, &row) in rows.iter().enumerate() {
        let mut bits = row;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if u < v {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Does some `K_{1,s,t}` use the just-added edge `uv`? Its apex is `u`, `v`
/// or a common neighbour.
fn creates_pattern(rows: &[u64], u: usize, v: usize, p: PatternParams) -> bool {
    let apexes = (1u64 << u) | (1u64 << v) | (rows[u] & rows[v]);
    let mut bits = apexes;
    while bits != 0 {
        let a = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if kst_in_mask(rows, rows[a], p.s(), p.t()) {
            return true;
        }
    }
    false
}

/// `s` vertices of `mask` with at least `t` common neighbours inside `mask`.
fn kst_in_mask(rows: &[u64], mask: u64, s: usize, t: usize) -> bool {
    fn go(rows: &[u64], candidates: u64, common: u64, remaining: usize, t: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let mut bits = candidates;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let next = common & rows[c];
            if (next.count_ones() as usize) < t {
                continue;
            }
            if go(rows, bits, next, remaining - 1, t) {
                return true;
            }
        }
        false
    }
    (mask.count_ones() as usize) >= s + t && go(rows, mask, mask, s, t)
}

/// Single-threaded exact search. `exact` is false when `budget` ran out.
pub fn search_ex(n: usize, p: PatternParams, budget: Option<u64>) -> Result<SearchOutcome> {
    let search = ExactSearch::new(n, p)?;
    let shared = SharedState::new(budget);
    let found = search.run(&[], &shared);
    let (value, witness) = match found {
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
