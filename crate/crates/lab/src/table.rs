//! Rows comparing lower constructions, search results and upper bounds.

use serde::Serialize;
use turan_core::bounds::{main_curve, trivial_triangle_upper_for_order};
use turan_core::constructions::{
    behrend_set, bipartite_plus_matching, greedy_3apfree_set, rs_graph,
};
use turan_core::graph::triangle_count;
use turan_core::search::{heuristic_lower, BRUTE_FORCE_LIMIT};
use turan_core::{Graph, PatternParams, Result};

use crate::parallel::search_exact;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub lower_construction: u64,
    pub lower_search: u64,
    pub upper_trivial: f64,
    /// The growth shape without its constant; not a bound on its own.
    pub upper_curve: Option<f64>,
    pub exact_value: Option<u64>,
}

pub const CSV_HEADER: &str =
    "n,s,t,lower_construction,lower_search,upper_trivial,upper_curve,exact_value";

impl TableRow {
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.s,
            self.t,
            self.lower_construction,
            self.lower_search,
            self.upper_trivial,
            opt(self.upper_curve.map(|v| v.to_string())),
            opt(self.exact_value.map(|v| v.to_string())),
        )
    }

    /// `lower_construction <= lower_search <= exact_value <= upper_trivial`.
    pub fn is_consistent(&self) -> bool {
        let upper = self.upper_trivial * (1.0 + 1e-12);
        let exact_ok = self
            .exact_value
            .is_none_or(|e| self.lower_search <= e && e as f64 <= upper);
        self.lower_construction <= self.lower_search
            && self.lower_search as f64 <= upper
            && exact_ok
    }
}

/// The best known free construction on exactly `n` vertices.
///
/// For `s >= 2` this is the complete bipartite graph plus a matching, which
/// is `K_{1,2,2}`-free and so `K_{1,s,t}`-free. For `s = 1 < t` it is the
/// tripartite graph on `6N <= n` vertices (padded with isolated vertices)
/// over the larger of the Behrend and greedy progression-free sets. `K_3` is
/// forbidden outright when `s = t = 1`.
pub fn lower_construction(n: usize, p: PatternParams) -> Graph {
    if p.s() >= 2 {
        return if n >= 2 {
            bipartite_plus_matching(n).expect("n >= 2")
        } else {
            Graph::empty(n)
        };
    }
    if p.t() == 1 || n < 6 {
        return Graph::empty(n);
    }
    let big = n / 6;
    let (behrend, greedy) = (behrend_set(big), greedy_3apfree_set(big));
    let set = if behrend.len() >= greedy.len() {
        behrend
    } else {
        greedy
    };
    let core = rs_graph(big, &set).expect("set is progression-free");
    let mut g = Graph::empty(n);
    for (u, v) in core.edges() {
        g.add_edge(u, v);
    }
    g
}

#[derive(Debug, Clone, Copy)]
pub struct TableOptions {
    pub seed: u64,
    pub iters: u64,
    /// Fill `exact_value`: brute force up to the oracle limit, then exact search.
    pub oracle: bool,
    /// Node budget for exact search beyond the brute-force range.
    pub budget: Option<u64>,
}

pub fn table_row(n: usize, p: PatternParams, opts: &TableOptions) -> Result<TableRow> {
    let construction = lower_construction(n, p);
    let lower_construction = triangle_count(&construction);
    let climbed = heuristic_lower(n, p, opts.seed, opts.iters, Some(&construction))?;
    let exact_value = if !opts.oracle {
        None
    } else if n <= BRUTE_FORCE_LIMIT {
        Some(turan_core::search::brute_force_ex(n, p)?.value)
    } else {
        let r = search_exact(n, p, opts.budget)?;
        r.exact.then_some(r.value)
    };
    Ok(TableRow {
        n,
        s: p.s(),
        t: p.t(),
        lower_construction,
        lower_search: climbed.value,
        upper_trivial: trivial_triangle_upper_for_order(n, p).value,
        upper_curve: main_curve(n, p.s()).ok().map(|b| b.value),
        exact_value,
    })
}
