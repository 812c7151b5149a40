//! Simple undirected graphs over dense `0..n` vertex indices, with one
//! bit-packed adjacency row per vertex.

use alloc::vec::Vec;

use crate::{Error, Result, VertexSet};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            for u in 0..v {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// `Γ(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, in colexicographic order (by `v`, then `u`).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |v| {
            self.rows[v]
                .iter()
                .take_while(move |&u| u < v)
                .map(move |u| (u, v))
        })
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(self.add_edge(u, v))
    }

    /// Panics on loops or out-of-range endpoints; returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert_ne!(u, v, "self-loop at {u}");
        self.rows[v].insert(u);
        self.rows[u].insert(v)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        self.rows[v].remove(u);
        self.rows[u].remove(v)
    }

    /// Checks symmetry, absence of loops and index range. Always true for
    /// graphs built through this API.
    pub fn is_valid(&self) -> bool {
        let n = self.n();
        self.rows.iter().enumerate().all(|(v, row)| {
            row.universe() == n && !row.contains(v) && row.iter().all(|u| self.rows[u].contains(v))
        })
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Number of triangles (unordered triples spanning three edges).
///
/// Panics if the 64-bit accumulator would overflow.
pub fn triangle_count(g: &Graph) -> u64 {
    // Each triangle is seen once per edge.
    let mut per_edge: u64 = 0;
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection_len(g.neighbors(v)) as u64;
        per_edge = per_edge
            .checked_add(common)
            .expect("triangle count overflows u64");
    }
    per_edge / 3
}

/// `Δ(A, B, C)`: ordered triples `(x, y, z)` with `x ∈ a`, `y ∈ b`, `z ∈ c`
/// that are pairwise adjacent.
///
/// Panics if the 64-bit accumulator would overflow.
pub fn ordered_delta(g: &Graph, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> u64 {
    let n = g.n();
    debug_assert!(a.universe() == n && b.universe() == n && c.universe() == n);
    let (bw, cw) = (b.words(), c.words());
    let mut total: u64 = 0;
    for x in a {
        let gx = g.neighbors(x).words();
        for (i, (&nx, &nb)) in gx.iter().zip(bw).enumerate() {
            let mut ys = nx & nb;
            while ys != 0 {
                let y = i * 64 + ys.trailing_zeros() as usize;
                ys &= ys - 1;
                let k: u64 = gx
                    .iter()
                    .zip(cw)
                    .zip(g.neighbors(y).words())
                    .map(|((&p, &q), &r)| (p & q & r).count_ones() as u64)
                    .sum();
                total = total
                    .checked_add(k)
                    .expect("ordered triangle count overflows u64");
            }
        }
    }
    total
}

/// `{v : s ⊆ Γ(v)}`. The result never contains a member of `s` (graphs have
/// no loops) but callers that need `\ s` semantics should subtract it
/// explicitly rather than rely on that.
pub fn common_neighbors(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    let mut members = s.iter();
    let first = members.next().ok_or(Error::EmptyIntersection)?;
    let mut acc = g.neighbors(first).clone();
    for v in members {
        acc.intersect_with(g.neighbors(v));
    }
    Ok(acc)
}

/// The subgraph induced on `s`, re-indexed in ascending order of the
/// original vertex indices.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Graph {
    let members = s.to_vec();
    let mut h = Graph::empty(members.len());
    for (i, &u) in members.iter().enumerate() {
        for (j, &v) in members.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                h.add_edge(i, j);
            }
        }
    }
    h
}
