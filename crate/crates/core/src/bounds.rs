//! Closed-form bounds. All logarithms are natural.
//!
//! The Kővári–Sós–Turán constants are the explicit ones from the double
//! counting proof: if no `s` vertices of an `m`-vertex side have `t` common
//! neighbours among `n` vertices on the other side, then
//! `Σ_w C(d_w, s) <= (t-1)·C(m, s)` over the `n`-side, and convexity gives
//! `e <= (t-1)^{1/s}·m·n^{1-1/s} + (s-1)·n`.

use libm::{log, pow};

use crate::freeness::{BipartiteGraph, PatternParams};
use crate::{Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundKind {
    Zarankiewicz {
        m: usize,
        n: usize,
        s: usize,
        t: usize,
    },
    MainCurve {
        n: usize,
        s: usize,
    },
    TrivialTriangle {
        n: usize,
        s: usize,
        t: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundValue {
    pub value: f64,
    pub kind: BoundKind,
}

/// Explicit upper bound on `z(m, n; s, t)` with the `s`-subsets in the
/// `m`-part and the common neighbours in the `n`-part. Zero sides are allowed.
pub fn zarankiewicz_bound(m: usize, n: usize, p: PatternParams) -> BoundValue {
    BoundValue {
        value: kst_edge_bound(m, n, p),
        kind: BoundKind::Zarankiewicz {
            m,
            n,
            s: p.s(),
            t: p.t(),
        },
    }
}

pub(crate) fn kst_edge_bound(m: usize, n: usize, p: PatternParams) -> f64 {
    let s = p.s() as f64;
    let lead = pow((p.t() - 1) as f64, 1.0 / s) * m as f64 * pow(n as f64, 1.0 - 1.0 / s);
    lead + (p.s() - 1) as f64 * n as f64
}

/// `C(n, k)` in 128 bits, saturating.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i + 1) as u128,
            None => return u128::MAX,
        };
    }
    acc
}

/// The exact counting inequality behind the Kővári–Sós–Turán bound:
/// `Σ_{w ∈ right} C(deg_left(w), s) <= (t-1)·C(|left|, s)`.
/// Holds whenever no `s` left vertices share `t` right neighbours.
pub fn kst_counting_check(b: &BipartiteGraph, p: PatternParams) -> bool {
    let s = p.s() as u64;
    let lhs = (0..b.right_len())
        .map(|r| binomial(b.right_neighbors(r).len() as u64, s))
        .fold(0u128, u128::saturating_add);
    let rhs = ((p.t() - 1) as u128).saturating_mul(binomial(b.left_len() as u64, s));
    lhs <= rhs
}

/// The shape `n^{3-1/s} (ln n)^{-1+1/s}`, without any constant.
pub fn main_curve(n: usize, s: usize) -> Result<BoundValue> {
    if n < 3 {
        return Err(Error::InvalidArgument(alloc::format!(
            "main curve needs n >= 3, got {n}"
        )));
    }
    if s < 2 {
        return Err(Error::Unsupported("main curve needs s >= 2"));
    }
    let (nf, sf) = (n as f64, s as f64);
    Ok(BoundValue {
        value: pow(nf, 3.0 - 1.0 / sf) * pow(log(nf), -1.0 + 1.0 / sf),
        kind: BoundKind::MainCurve { n, s },
    })
}

/// Per-vertex cap on triangles through a vertex of degree `d` whose
/// neighbourhood is `K_{s,t}`-free.
fn neighborhood_edge_cap(d: usize, p: PatternParams) -> f64 {
    let complete = binomial(d as u64, 2) as f64;
    let s = p.s() as f64;
    let df = d as f64;
    let kst = 0.5 * (pow((p.t() - 1) as f64, 1.0 / s) * pow(df, 2.0 - 1.0 / s) + (s - 1.0) * df);
    complete.min(kst)
}

/// `(1/3)·Σ_v min(C(d_v, 2), ½((t-1)^{1/s} d_v^{2-1/s} + (s-1) d_v))`.
///
/// Valid only for `K_{1,s,t}`-free `g`, which is not re-checked.
pub fn trivial_triangle_upper(g: &Graph, p: PatternParams) -> BoundValue {
    let total: f64 = (0..g.n())
        .map(|v| neighborhood_edge_cap(g.degree(v), p))
        .sum();
    BoundValue {
        value: total / 3.0,
        kind: BoundKind::TrivialTriangle {
            n: g.n(),
            s: p.s(),
            t: p.t(),
        },
    }
}

/// The per-vertex bound evaluated at degree `n - 1` everywhere. The cap is
/// nondecreasing in the degree, so this bounds `ex(n, K_3, K_{1,s,t})`.
pub fn trivial_triangle_upper_for_order(n: usize, p: PatternParams) -> BoundValue {
    let per_vertex = if n == 0 {
        0.0
    } else {
        neighborhood_edge_cap(n - 1, p)
    };
    BoundValue {
        value: n as f64 * per_vertex / 3.0,
        kind: BoundKind::TrivialTriangle {
            n,
            s: p.s(),
            t: p.t(),
        },
    }
}
