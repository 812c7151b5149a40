//! Detection of `K_{s,t}` and `K_{1,s,t}` subgraphs (not necessarily
//! induced), and a seeded repair procedure that deletes edges until a graph
//! is `K_{1,s,t}`-free.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{common_neighbors, Graph};
use crate::{Error, Result, VertexSet};

/// The forbidden pattern `K_{1,s,t}`, with `1 <= s <= t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternParams {
    s: usize,
    t: usize,
}

impl PatternParams {
    pub fn new(s: usize, t: usize) -> Result<Self> {
        if s == 0 || s > t {
            return Err(Error::InvalidPattern { s, t });
        }
        Ok(PatternParams { s, t })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }
}

/// A copy of `K_{s,t}` (no apex) or `K_{1,s,t}` (with apex) in a host graph.
///
/// For bipartite hosts `side_s` and `side_t` are indexed within their own
/// sides, see [`contains_kst_bipartite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub apex: Option<usize>,
    pub side_s: VertexSet,
    pub side_t: VertexSet,
}

impl PatternWitness {
    /// Re-checks the witness against `g`: disjoint parts, complete between
    /// the two sides, apex adjacent to everything.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.side_s.universe() != n || self.side_t.universe() != n {
            return false;
        }
        if !self.side_s.is_disjoint(&self.side_t) {
            return false;
        }
        let cross = self
            .side_s
            .iter()
            .all(|u| self.side_t.is_subset(g.neighbors(u)));
        let apex_ok = match self.apex {
            None => true,
            Some(a) => {
                a < n
                    && !self.side_s.contains(a)
                    && !self.side_t.contains(a)
                    && self.side_s.is_subset(g.neighbors(a))
                    && self.side_t.is_subset(g.neighbors(a))
            }
        };
        cross && apex_ok
    }

    /// Every edge of the pattern copy, each as `(min, max)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let ordered = |u: usize, v: usize| (u.min(v), u.max(v));
        let mut out = Vec::new();
        if let Some(a) = self.apex {
            out.extend(self.side_s.iter().map(|u| ordered(a, u)));
            out.extend(self.side_t.iter().map(|u| ordered(a, u)));
        }
        for u in &self.side_s {
            out.extend(self.side_t.iter().map(|w| ordered(u, w)));
        }
        out
    }
}

/// Searches for `s` rows (drawn from `candidates`) whose common intersection
/// with `start` has at least `t` members. `s`-subsets are visited in
/// colexicographic order; the first hit wins.
fn find_biclique<'a>(
    row: impl Fn(usize) -> &'a VertexSet,
    candidates: &[usize],
    start: &VertexSet,
    s: usize,
    t: usize,
) -> Option<(Vec<usize>, VertexSet)> {
    if candidates.len() < s || start.len() < t {
        return None;
    }
    let mut levels: Vec<VertexSet> = (0..=s).map(|_| start.clone()).collect();
    let mut chosen = Vec::with_capacity(s);
    let found = descend(
        &row,
        candidates,
        &mut levels,
        &mut chosen,
        s,
        candidates.len(),
        t,
    );
    found.map(|common| {
        chosen.sort_unstable();
        (chosen, common)
    })
}

fn descend<'a>(
    row: &impl Fn(usize) -> &'a VertexSet,
    candidates: &[usize],
    levels: &mut [VertexSet],
    chosen: &mut Vec<usize>,
    remaining: usize,
    upper: usize,
    t: usize,
) -> Option<VertexSet> {
    let depth = chosen.len();
    if remaining == 0 {
        return (levels[depth].len() >= t).then(|| levels[depth].clone());
    }
    for i in (remaining - 1)..upper {
        let c = candidates[i];
        let (head, tail) = levels.split_at_mut(depth + 1);
        let next = &mut tail[0];
        next.clone_from(&head[depth]);
        next.intersect_with(row(c));
        if next.len() < t {
            continue;
        }
        chosen.push(c);
        if let Some(found) = descend(row, candidates, levels, chosen, remaining - 1, i, t) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

fn first_k(set: &VertexSet, k: usize) -> VertexSet {
    let mut out = VertexSet::new(set.universe());
    for v in set.iter().take(k) {
        out.insert(v);
    }
    out
}

fn kst_within(g: &Graph, mask: &VertexSet, p: PatternParams) -> Option<(VertexSet, VertexSet)> {
    let candidates = mask.to_vec();
    let (s_side, common) = find_biclique(|v| g.neighbors(v), &candidates, mask, p.s, p.t)?;
    let side_s = VertexSet::from_members(g.n(), s_side).expect("candidates come from the mask");
    let side_t = first_k(&common.difference(&side_s), p.t);
    Some((side_s, side_t))
}

/// Finds a `K_{s,t}` subgraph: `s` vertices with at least `t` common
/// neighbours outside themselves.
pub fn contains_kst(g: &Graph, p: PatternParams) -> Option<PatternWitness> {
    let (side_s, side_t) = kst_within(g, &g.vertices(), p)?;
    Some(PatternWitness {
        apex: None,
        side_s,
        side_t,
    })
}

/// A copy of `K_{1,s,t}` whose apex is `apex`, if one exists. Equivalent to
/// looking for `K_{s,t}` in the subgraph induced on `Γ(apex)`.
pub fn k1st_at_apex(g: &Graph, apex: usize, p: PatternParams) -> Option<PatternWitness> {
    let mask = g.neighbors(apex);
    if mask.len() < p.s + p.t {
        return None;
    }
    let (side_s, side_t) = kst_within(g, mask, p)?;
    Some(PatternWitness {
        apex: Some(apex),
        side_s,
        side_t,
    })
}

/// The first `K_{1,s,t}` copy found, scanning apexes in ascending order.
pub fn k1st_witness(g: &Graph, p: PatternParams) -> Option<PatternWitness> {
    (0..g.n()).find_map(|v| k1st_at_apex(g, v, p))
}

pub fn is_k1st_free(g: &Graph, p: PatternParams) -> bool {
    k1st_witness(g, p).is_none()
}

/// Assuming `g - uv` is `K_{1,s,t}`-free and `g` contains `uv`, returns a
/// copy of `K_{1,s,t}` in `g` if the edge created one. Any new copy uses
/// `uv`, so its apex is `u`, `v` or a common neighbour of both.
pub fn edge_completes_pattern(
    g: &Graph,
    u: usize,
    v: usize,
    p: PatternParams,
) -> Option<PatternWitness> {
    let both = VertexSet::from_members(g.n(), [u, v]).ok()?;
    let common = common_neighbors(g, &both).ok()?;
    [u, v]
        .into_iter()
        .chain(common.iter())
        .find_map(|apex| k1st_at_apex(g, apex, p))
}

/// Deletes edges until `g` is `K_{1,s,t}`-free. Each round takes the first
/// witness (ascending apex) and deletes one of its edges uniformly at random.
pub fn repair_to_free(g: &Graph, p: PatternParams, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = g.clone();
    // Deleting edges never creates a copy, so apexes already cleared stay clear.
    for apex in 0..h.n() {
        while let Some(w) = k1st_at_apex(&h, apex, p) {
            let edges = w.edges();
            let (a, b) = edges[rng.gen_range(0..edges.len())];
            h.remove_edge(a, b);
        }
    }
    h
}

/// A bipartite graph with sides `left` (`0..left_len`) and `right`
/// (`0..right_len`), stored as adjacency rows in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_rows: Vec<VertexSet>,
    right_rows: Vec<VertexSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl BipartiteGraph {
    pub fn empty(left_len: usize, right_len: usize) -> Self {
        BipartiteGraph {
            left_rows: (0..left_len).map(|_| VertexSet::new(right_len)).collect(),
            right_rows: (0..right_len).map(|_| VertexSet::new(left_len)).collect(),
        }
    }

    pub fn from_edges(left_len: usize, right_len: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = Self::empty(left_len, right_len);
        for &(l, r) in edges {
            if l >= left_len {
                return Err(Error::VertexOutOfRange {
                    vertex: l,
                    n: left_len,
                });
            }
            if r >= right_len {
                return Err(Error::VertexOutOfRange {
                    vertex: r,
                    n: right_len,
                });
            }
            b.add_edge(l, r);
        }
        Ok(b)
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        self.left_rows[l].insert(r);
        self.right_rows[r].insert(l);
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.left_rows[l].contains(r)
    }

    pub fn left_len(&self) -> usize {
        self.left_rows.len()
    }

    pub fn right_len(&self) -> usize {
        self.right_rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.left_rows.iter().map(VertexSet::len).sum()
    }

    /// Neighbours of a left vertex, as a subset of the right side.
    pub fn left_neighbors(&self, l: usize) -> &VertexSet {
        &self.left_rows[l]
    }

    /// Neighbours of a right vertex, as a subset of the left side.
    pub fn right_neighbors(&self, r: usize) -> &VertexSet {
        &self.right_rows[r]
    }

    fn rows(&self, side: Side) -> &[VertexSet] {
        match side {
            Side::Left => &self.left_rows,
            Side::Right => &self.right_rows,
        }
    }

    fn side_len(&self, side: Side) -> usize {
        self.rows(side).len()
    }
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Finds `s` vertices on `s_side` with `t` common neighbours on the other
/// side. The witness's `side_s` is indexed within `s_side` and `side_t`
/// within the opposite side.
pub fn contains_kst_bipartite(
    b: &BipartiteGraph,
    p: PatternParams,
    s_side: Side,
) -> Option<PatternWitness> {
    let rows = b.rows(s_side);
    let candidates: Vec<usize> = (0..rows.len()).collect();
    let start = VertexSet::full(b.side_len(s_side.other()));
    let (chosen, common) = find_biclique(|v| &rows[v], &candidates, &start, p.s, p.t)?;
    Some(PatternWitness {
        apex: None,
        side_s: VertexSet::from_members(rows.len(), chosen).expect("indices within side"),
        side_t: first_k(&common, p.t),
    })
}
