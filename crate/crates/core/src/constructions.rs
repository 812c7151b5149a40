//! Lower-bound constructions.
//!
//! * [`bipartite_plus_matching`]: a balanced complete bipartite graph with a
//!   matching inside the larger part. `K_{1,2,2}`-free with `Θ(n²)` triangles.
//! * [`rs_graph`]: the Ruzsa–Szemerédi tripartite graph over a 3-AP-free set,
//!   in which every edge lies in exactly one triangle (so it is
//!   `K_{1,1,2}`-free).
//! * [`behrend_set`] / [`greedy_3apfree_set`]: progression-free sets to feed it.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

/// A set of integers in `[1, bound]` without a 3-term arithmetic progression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgressionFreeSet {
    bound: usize,
    members: Vec<usize>,
}

impl ProgressionFreeSet {
    /// Validates range and progression-freeness; members are sorted and deduplicated.
    pub fn new(bound: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&value) = members.iter().find(|&&m| m == 0 || m > bound) {
            return Err(Error::MemberOutOfRange { value, bound });
        }
        if let Some((x, y, z)) = find_3ap(&members) {
            return Err(Error::NotProgressionFree(x, y, z));
        }
        Ok(ProgressionFreeSet { bound, members })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Expects `sorted` ascending without duplicates.
fn find_3ap(sorted: &[usize]) -> Option<(usize, usize, usize)> {
    for (i, &x) in sorted.iter().enumerate() {
        for &z in &sorted[i + 1..] {
            if (x + z) % 2 == 0 && sorted.binary_search(&((x + z) / 2)).is_ok() {
                return Some((x, (x + z) / 2, z));
            }
        }
    }
    None
}

/// True iff no three distinct members `x < y < z` satisfy `x + z = 2y`.
pub fn is_3ap_free(set: &[usize]) -> bool {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    find_3ap(&sorted).is_none()
}

/// Scans `1..=n` and keeps every integer that leaves the set 3-AP-free.
pub fn greedy_3apfree_set(n: usize) -> ProgressionFreeSet {
    // in_set[v] for v in 0..=n
    let mut in_set = vec![false; n + 1];
    let mut members = Vec::new();
    for z in 1..=n {
        // z would be the top of a progression x < y < z with x = 2y - z >= 1.
        let blocked = members
            .iter()
            .any(|&y: &usize| 2 * y > z && in_set[2 * y - z]);
        if !blocked {
            in_set[z] = true;
            members.push(z);
        }
    }
    ProgressionFreeSet { bound: n, members }
}

/// The Behrend digit-sphere construction.
///
/// For every digit count `k >= 2` and digit bound `d >= 2` with
/// `(2d - 1)^k <= n`, numbers `Σ x_i (2d-1)^i` with digits in `[0, d)` are
/// grouped by `Σ x_i²`. Digits never carry when two such numbers are added,
/// so each group is 3-AP-free. The largest group over the whole scan is
/// returned, shifted by one into `[1, n]`; ties go to the lexicographically
/// smallest `(k, d, r)`. One-digit groups are singletons and orders below 9
/// admit no two-digit scan, so `{1, 2} ∩ [1, n]` is the baseline a group has
/// to strictly beat.
pub fn behrend_set(n: usize) -> ProgressionFreeSet {
    let mut best: Vec<usize> = (0..n.min(2)).collect();
    let mut k: usize = 2;
    while 3usize.checked_pow(k as u32).is_some_and(|m| m <= n) {
        let mut d: usize = 2;
        while (2 * d - 1).checked_pow(k as u32).is_some_and(|m| m <= n) {
            if let Some(group) = largest_sphere(k, d, best.len()) {
                best = group;
            }
            d += 1;
        }
        k += 1;
    }
    for m in best.iter_mut() {
        *m += 1;
    }
    ProgressionFreeSet {
        bound: n,
        members: best,
    }
}

/// Largest sphere group for `(k, d)` if it strictly beats `to_beat`, with the
/// smallest radius winning ties.
fn largest_sphere(k: usize, d: usize, to_beat: usize) -> Option<Vec<usize>> {
    let base = 2 * d - 1;
    let max_r = k * (d - 1) * (d - 1);
    let mut counts = vec![0usize; max_r + 1];
    let mut digits = vec![0usize; k];
    loop {
        counts[digits.iter().map(|x| x * x).sum::<usize>()] += 1;
        if !increment(&mut digits, d) {
            break;
        }
    }
    let (r, &size) = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))?;
    if size <= to_beat {
        return None;
    }
    let mut group = Vec::with_capacity(size);
    digits.iter_mut().for_each(|x| *x = 0);
    loop {
        if digits.iter().map(|x| x * x).sum::<usize>() == r {
            group.push(digits.iter().rev().fold(0, |acc, &x| acc * base + x));
        }
        if !increment(&mut digits, d) {
            break;
        }
    }
    group.sort_unstable();
    Some(group)
}

/// Odometer over digit vectors in `[0, d)^k`; false after the last one.
fn increment(digits: &mut [usize], d: usize) -> bool {
    for x in digits.iter_mut() {
        *x += 1;
        if *x < d {
            return true;
        }
        *x = 0;
    }
    false
}

/// Complete bipartite graph between `X = 0..⌈n/2⌉` and `Y = ⌈n/2⌉..n` plus the
/// matching `0–1, 2–3, …` inside `X`. Has `⌊⌈n/2⌉/2⌋·⌊n/2⌋` triangles.
pub fn bipartite_plus_matching(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidArgument(alloc::format!(
            "bipartite-plus-matching needs n >= 2, got {n}"
        )));
    }
    let x = n.div_ceil(2);
    let mut g = Graph::empty(n);
    for u in 0..x {
        for v in x..n {
            g.add_edge(u, v);
        }
    }
    for pair in 0..x / 2 {
        g.add_edge(2 * pair, 2 * pair + 1);
    }
    Ok(g)
}

pub fn bipartite_plus_matching_triangles(n: usize) -> u64 {
    (n.div_ceil(2) / 2) as u64 * (n / 2) as u64
}

/// Ruzsa–Szemerédi tripartite graph on `6n` vertices.
///
/// Parts are `X = [1, n]`, `Y = [1, 2n]`, `Z = [1, 3n]`, laid out as index
/// blocks `0..n`, `n..3n`, `3n..6n`. For every `x` and `α ∈ set`, the triangle
/// `x, x + α, x + 2α` is added across the three parts.
pub fn rs_graph(n: usize, set: &ProgressionFreeSet) -> Result<Graph> {
    if let Some(&value) = set.members().iter().find(|&&a| a == 0 || a > n) {
        return Err(Error::MemberOutOfRange { value, bound: n });
    }
    Ok(rs_graph_unchecked(n, set.members()))
}

/// Same layout as [`rs_graph`] for an arbitrary set of steps in `[1, n]`.
/// Used to plant progressions; no freeness guarantee.
pub fn rs_graph_unchecked(n: usize, steps: &[usize]) -> Graph {
    let x_idx = |x: usize| x - 1;
    let y_idx = |y: usize| n + y - 1;
    let z_idx = |z: usize| 3 * n + z - 1;
    let mut g = Graph::empty(6 * n);
    for x in 1..=n {
        for &a in steps {
            let (y, z) = (x + a, x + 2 * a);
            g.add_edge(x_idx(x), y_idx(y));
            g.add_edge(y_idx(y), z_idx(z));
            g.add_edge(x_idx(x), z_idx(z));
        }
    }
    g
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetSource {
    Behrend,
    Greedy,
    Explicit(Vec<usize>),
}

/// CLI-facing description of a construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionSpec {
    BipartiteMatching { n: usize },
    RuzsaSzemeredi { n: usize, set: SetSource },
}

impl ConstructionSpec {
    pub fn progression_free_set(n: usize, source: &SetSource) -> Result<ProgressionFreeSet> {
        match source {
            SetSource::Behrend => Ok(behrend_set(n)),
            SetSource::Greedy => Ok(greedy_3apfree_set(n)),
            SetSource::Explicit(members) => ProgressionFreeSet::new(n, members.clone()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            ConstructionSpec::BipartiteMatching { n } => bipartite_plus_matching(*n),
            ConstructionSpec::RuzsaSzemeredi { n, set } => {
                if *n == 0 {
                    return Err(Error::InvalidArgument(
                        "Ruzsa-Szemerédi needs N >= 1".into(),
                    ));
                }
                rs_graph(*n, &Self::progression_free_set(*n, set)?)
            }
        }
    }
}
