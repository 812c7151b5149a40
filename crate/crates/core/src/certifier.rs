//! Certificates bounding the number of ordered triangles in a concrete
//! `K_{1,s,t}`-free graph (`s >= 2`).
//!
//! The vertex set is cut into blocks `P` of at most `⌊ln n / ln 8⌋` vertices.
//! Inside a block, vertices are grouped by their trace `S = Γ(v) ∩ P`; the
//! class `V_S` is complete to `S`, so every vertex either has fewer than `s`
//! neighbours in `S` (set `A`) or fewer than `t` in `V_S` (set `B`). Triangles
//! through `B` are at most `t·|S|·|B|`, and those through `A` are the edges of
//! the bipartite graphs `G_v` (`v ∈ S`) between a copy of `V_S` and a copy of
//! `Γ(v) ∩ A`, which are `K_{s,t}`-free and so obey the Kővári–Sós–Turán
//! bound. Summing gives the explicit bound `U >= Δ(V, V, V)`.
//!
//! [`verify_certificate`] recomputes every recorded quantity from the graph
//! and re-checks each link of that chain.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use libm::pow;

use crate::bounds::{kst_counting_check, kst_edge_bound};
use crate::freeness::{k1st_witness, BipartiteGraph, PatternParams, PatternWitness};
use crate::graph::ordered_delta;
use crate::{Error, Graph, Result, VertexSet};

/// Relative slack granted to real-valued right-hand sides.
const SLACK: f64 = 1.0 / (1u64 << 40) as f64;
/// Relative tolerance for the Jensen direction check.
const JENSEN_TOLERANCE: f64 = 1e-9;

/// Per-`v ∈ S` record of `G_v`.
#[derive(Debug, Clone, PartialEq)]
pub struct GvRecord {
    pub vertex: usize,
    /// `|Γ(v) ∩ A|`
    pub right_size: usize,
    /// `e(G_v)`
    pub edges: u64,
    /// Kővári–Sós–Turán bound for a `|V_S|` by `|Γ(v) ∩ A|` graph.
    pub kst_bound: f64,
    /// `kst_bound` clamped at `|V_S|·|Γ(v) ∩ A|`.
    pub capped_bound: f64,
}

/// Everything recorded for one trace class `(P, S)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassRecord {
    pub trace: VertexSet,
    pub class_size: usize,
    pub a_size: usize,
    pub b_size: usize,
    /// `Δ(P, V_S, V)`
    pub delta_part: u64,
    /// `Δ(S, V_S, V)`
    pub delta_trace: u64,
    /// `Δ(S, V_S, A)`
    pub delta_a: u64,
    /// `Δ(S, V_S, B)`
    pub delta_b: u64,
    /// `t·|S|·|B|`
    pub b_bound: u64,
    /// `Σ_{v ∈ S} |Γ(v) ∩ A|`
    pub degree_sum: u64,
    pub gv: Vec<GvRecord>,
    /// `Σ capped_bound`, the term entering the final bound.
    pub kst_sum: f64,
    /// `Σ kst_bound`, unclamped.
    pub raw_kst_sum: f64,
    /// The concavity-aggregated closed form
    /// `(t-1)^{1/s}·|V_S|·(s|A|)^{1-1/s}·|S|^{1/s} + (s-1)·s|A|`.
    pub jensen_bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartRecord {
    pub classes: Vec<ClassRecord>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainTotals {
    /// `Σ_P Σ_S Δ(P, V_S, V)`
    pub delta: u64,
    /// `Σ t·|S|·|B|`
    pub b_bound: u64,
    /// `Σ kst_sum`
    pub kst: f64,
    /// `Σ jensen_bound`
    pub jensen: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub n: usize,
    pub params: PatternParams,
    pub part_size: usize,
    pub partition: Vec<VertexSet>,
    /// One record per block of `partition`, in the same order.
    pub parts: Vec<PartRecord>,
    pub totals: ChainTotals,
    /// `U`
    pub final_bound: f64,
    /// `Δ(V, V, V)`
    pub actual: u64,
}

/// `max(1, ⌊ln n / ln 8⌋)`, computed exactly as the largest `p` with `8^p <= n`.
pub fn part_size(n: usize) -> usize {
    let mut p = 0;
    let mut power: usize = 8;
    while power <= n {
        p += 1;
        match power.checked_mul(8) {
            Some(next) => power = next,
            None => break,
        }
    }
    p.max(1)
}

/// Consecutive blocks of [`part_size`] vertices; the last may be smaller.
pub fn partition_vertices(n: usize) -> Vec<VertexSet> {
    let size = part_size(n);
    (0..n)
        .step_by(size)
        .map(|start| {
            VertexSet::from_members(n, start..(start + size).min(n)).expect("block within range")
        })
        .collect()
}

/// Groups all vertices by `Γ(v) ∩ part`. Only realised traces appear.
pub fn trace_classes(g: &Graph, part: &VertexSet) -> BTreeMap<VertexSet, VertexSet> {
    let n = g.n();
    let members = part.to_vec();
    if members.len() > 64 {
        let mut classes: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
        for v in 0..n {
            let trace = g.neighbors(v).intersection(part);
            classes
                .entry(trace)
                .or_insert_with(|| VertexSet::new(n))
                .insert(v);
        }
        return classes;
    }
    // Small blocks: key each trace by a bitmask over the block first.
    let mut by_mask: BTreeMap<u64, VertexSet> = BTreeMap::new();
    for v in 0..n {
        let row = g.neighbors(v);
        let mask = members
            .iter()
            .enumerate()
            .filter(|&(_, &u)| row.contains(u))
            .fold(0u64, |m, (j, _)| m | 1 << j);
        by_mask
            .entry(mask)
            .or_insert_with(|| VertexSet::new(n))
            .insert(v);
    }
    by_mask
        .into_iter()
        .map(|(mask, class)| {
            let trace = VertexSet::from_members(
                n,
                members
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &u)| u),
            )
            .expect("block members are vertices");
            (trace, class)
        })
        .collect()
}

/// `A = {v : |Γ(v) ∩ S| < s}` and `B = {v : |Γ(v) ∩ V_S| < t}`.
///
/// When `V_S` is the class of trace `S` the two cover `V` unless `g`
/// contains `K_{1,s,t}`; a vertex in neither set is returned as the apex
/// of a witness.
pub fn split_ab(
    g: &Graph,
    s_set: &VertexSet,
    v_s: &VertexSet,
    p: PatternParams,
) -> Result<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut a = VertexSet::new(n);
    let mut b = VertexSet::new(n);
    for v in 0..n {
        let in_s = g.neighbors(v).intersection(s_set);
        let in_class = g.neighbors(v).intersection(v_s);
        let in_a = in_s.len() < p.s();
        let in_b = in_class.len() < p.t();
        if !in_a && !in_b {
            return Err(Error::NotFree(PatternWitness {
                apex: Some(v),
                side_s: first(&in_s, p.s()),
                side_t: first(&in_class, p.t()),
            }));
        }
        if in_a {
            a.insert(v);
        }
        if in_b {
            b.insert(v);
        }
    }
    Ok((a, b))
}

fn first(set: &VertexSet, k: usize) -> VertexSet {
    let mut out = VertexSet::new(set.universe());
    set.iter().take(k).for_each(|v| {
        out.insert(v);
    });
    out
}

/// `G_v`: disjoint copies of `V_S` (left) and `Γ(v) ∩ A` (right), with the
/// copies of `u` and `w` adjacent iff `uw` is an edge. A vertex in both sets
/// gets two copies, which are never adjacent.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteView {
    pub left: VertexSet,
    pub right: VertexSet,
    pub graph: BipartiteGraph,
}

impl BipartiteView {
    pub fn edge_count(&self) -> u64 {
        self.graph.edge_count() as u64
    }
}

pub fn build_gv(g: &Graph, v: usize, v_s: &VertexSet, a: &VertexSet) -> BipartiteView {
    let left = v_s.clone();
    let right = g.neighbors(v).intersection(a);
    let right_members = right.to_vec();
    let mut graph = BipartiteGraph::empty(left.len(), right_members.len());
    for (i, u) in left.iter().enumerate() {
        for (j, &w) in right_members.iter().enumerate() {
            if g.has_edge(u, w) {
                graph.add_edge(i, j);
            }
        }
    }
    BipartiteView { left, right, graph }
}

fn capped(kst: f64, class_size: usize, right_size: usize) -> f64 {
    kst.min((class_size * right_size) as f64)
}

fn jensen_bound(p: PatternParams, class_size: usize, trace_size: usize, a_size: usize) -> f64 {
    let s = p.s() as f64;
    let mass = s * a_size as f64;
    pow((p.t() - 1) as f64, 1.0 / s)
        * class_size as f64
        * pow(mass, 1.0 - 1.0 / s)
        * pow(trace_size as f64, 1.0 / s)
        + (s - 1.0) * mass
}

fn class_contribution(c: &ClassRecord) -> f64 {
    c.b_bound as f64 + c.kst_sum
}

fn chain_totals(parts: &[PartRecord]) -> (ChainTotals, f64) {
    let mut totals = ChainTotals {
        delta: 0,
        b_bound: 0,
        kst: 0.0,
        jensen: 0.0,
    };
    let mut bound = 0.0;
    for c in parts.iter().flat_map(|p| &p.classes) {
        totals.delta += c.delta_part;
        totals.b_bound += c.b_bound;
        totals.kst += c.kst_sum;
        totals.jensen += c.jensen_bound;
        bound += class_contribution(c);
    }
    (totals, bound)
}

fn certify_class(
    g: &Graph,
    part: &VertexSet,
    trace: &VertexSet,
    class: &VertexSet,
    p: PatternParams,
) -> Result<ClassRecord> {
    let all = g.vertices();
    let (a, b) = split_ab(g, trace, class, p)?;
    let mut gv = Vec::with_capacity(trace.len());
    let mut degree_sum = 0u64;
    let (mut kst_sum, mut raw_kst_sum) = (0.0, 0.0);
    for v in trace {
        let right = g.neighbors(v).intersection(&a);
        let edges: u64 = class
            .iter()
            .map(|u| g.neighbors(u).intersection_len(&right) as u64)
            .sum();
        let kst_bound = kst_edge_bound(class.len(), right.len(), p);
        let capped_bound = capped(kst_bound, class.len(), right.len());
        degree_sum += right.len() as u64;
        kst_sum += capped_bound;
        raw_kst_sum += kst_bound;
        gv.push(GvRecord {
            vertex: v,
            right_size: right.len(),
            edges,
            kst_bound,
            capped_bound,
        });
    }
    Ok(ClassRecord {
        trace: trace.clone(),
        class_size: class.len(),
        a_size: a.len(),
        b_size: b.len(),
        delta_part: ordered_delta(g, part, class, &all),
        delta_trace: ordered_delta(g, trace, class, &all),
        delta_a: ordered_delta(g, trace, class, &a),
        delta_b: ordered_delta(g, trace, class, &b),
        b_bound: (p.t() * trace.len() * b.len()) as u64,
        degree_sum,
        gv,
        kst_sum,
        raw_kst_sum,
        jensen_bound: jensen_bound(p, class.len(), trace.len(), a.len()),
    })
}

/// Records every trace class of one block. Blocks are independent, so
/// callers may run this in parallel and hand the results to
/// [`Certificate::assemble`].
pub fn certify_part(g: &Graph, part: &VertexSet, p: PatternParams) -> Result<PartRecord> {
    let classes = trace_classes(g, part)
        .iter()
        .map(|(trace, class)| certify_class(g, part, trace, class, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(PartRecord { classes })
}

fn check_certifiable(g: &Graph, p: PatternParams) -> Result<()> {
    if p.s() < 2 {
        return Err(Error::Unsupported("certificates need s >= 2"));
    }
    match k1st_witness(g, p) {
        Some(w) => Err(Error::NotFree(w)),
        None => Ok(()),
    }
}

impl Certificate {
    /// Checks the preconditions of [`build_certificate`]: `s >= 2` and
    /// `g` is `K_{1,s,t}`-free.
    pub fn precheck(g: &Graph, p: PatternParams) -> Result<()> {
        check_certifiable(g, p)
    }

    pub fn assemble(
        g: &Graph,
        p: PatternParams,
        partition: Vec<VertexSet>,
        parts: Vec<PartRecord>,
    ) -> Certificate {
        let (totals, final_bound) = chain_totals(&parts);
        let all = g.vertices();
        Certificate {
            n: g.n(),
            params: p,
            part_size: part_size(g.n()),
            partition,
            parts,
            totals,
            final_bound,
            actual: ordered_delta(g, &all, &all, &all),
        }
    }
}

/// Runs the whole decomposition on a `K_{1,s,t}`-free graph.
pub fn build_certificate(g: &Graph, p: PatternParams) -> Result<Certificate> {
    check_certifiable(g, p)?;
    let partition = partition_vertices(g.n());
    let parts = partition
        .iter()
        .map(|part| certify_part(g, part, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(Certificate::assemble(g, p, partition, parts))
}

/// The link of the inequality chain a violation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    /// `part_size` differs from `max(1, ⌊ln n / ln 8⌋)`.
    PartSize,
    /// Blocks overlap, miss a vertex, are empty or exceed `part_size`.
    Partition,
    /// Recorded traces differ from the realised ones.
    TraceClasses,
    ClassSize,
    /// `A ∪ B ≠ V`: the graph is not `K_{1,s,t}`-free.
    SplitCover,
    SplitSizes,
    DeltaPart,
    DeltaTrace,
    /// `Δ(P, V_S, V) = Δ(S, V_S, V)`
    DeltaPartEqualsTrace,
    DeltaA,
    DeltaB,
    /// `Δ(S, V_S, V) <= Δ(S, V_S, A) + Δ(S, V_S, B)`
    DeltaSplit,
    BBound,
    /// `Δ(S, V_S, B) <= t·|S|·|B|`
    BSide,
    /// The `G_v` records do not list exactly the vertices of `S`.
    GvVertices,
    GvRightSize,
    GvEdges,
    /// `Δ(S, V_S, A) = Σ e(G_v)`
    DeltaAEqualsGvSum,
    GvKstBound,
    GvCappedBound,
    /// `e(G_v) <=` clamped Kővári–Sós–Turán bound
    GvKstInequality,
    /// `Σ_w C(deg w, s) <= (t-1)·C(|V_S|, s)` on `G_v`
    GvCountingCheck,
    DegreeSum,
    /// `Σ |Γ(v) ∩ A| <= s·|A|`
    DegreeSumBound,
    KstSum,
    JensenBound,
    /// Jensen-aggregated bound dominates the raw per-vertex sum.
    JensenDirection,
    /// `Σ Δ(P, V_S, V) = Δ(V, V, V)`
    PartitionSum,
    Totals,
    Actual,
    FinalBound,
    /// `Δ(V, V, V) <= U`
    ActualWithinBound,
}

/// Where a violation sits: block index, trace `S` and vertex `v`, as applicable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub clause: Clause,
    pub part: Option<usize>,
    pub trace: Option<Vec<usize>>,
    pub vertex: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.clause)?;
        if let Some(p) = self.part {
            write!(f, " part={p}")?;
        }
        if let Some(s) = &self.trace {
            write!(f, " S={s:?}")?;
        }
        if let Some(v) = self.vertex {
            write!(f, " v={v}")?;
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Verification {
    pub violations: Vec<Violation>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn within(lhs: u64, rhs: f64) -> bool {
    lhs as f64 <= rhs + rhs.abs() * SLACK
}

struct Report<'a> {
    out: &'a mut Vec<Violation>,
    part: Option<usize>,
    trace: Option<Vec<usize>>,
}

impl Report<'_> {
    fn check(
        &mut self,
        ok: bool,
        clause: Clause,
        vertex: Option<usize>,
        detail: impl FnOnce() -> String,
    ) {
        if !ok {
            self.out.push(Violation {
                clause,
                part: self.part,
                trace: self.trace.clone(),
                vertex,
                detail: detail(),
            });
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(
        &mut self,
        clause: Clause,
        vertex: Option<usize>,
        recorded: T,
        expected: T,
    ) {
        let ok = recorded == expected;
        self.check(ok, clause, vertex, || {
            alloc::format!("recorded {recorded:?}, recomputed {expected:?}")
        });
    }
}

/// Structural checks: sizes and index ranges must match `g`.
fn check_header(g: &Graph, cert: &Certificate) -> Result<()> {
    let n = g.n();
    let bad = |msg: String| Err(Error::Structural(msg));
    if cert.n != n {
        return bad(alloc::format!(
            "certificate is for n={}, graph has n={n}",
            cert.n
        ));
    }
    if cert.params.s() < 2 {
        return bad("certificates need s >= 2".into());
    }
    if cert.partition.len() != cert.parts.len() {
        return bad(alloc::format!(
            "{} blocks but {} block records",
            cert.partition.len(),
            cert.parts.len()
        ));
    }
    Ok(())
}

fn check_block(g: &Graph, cert: &Certificate, index: usize) -> Result<()> {
    let n = g.n();
    if index >= cert.parts.len() {
        return Err(Error::Structural(alloc::format!(
            "block {index} out of range ({} blocks)",
            cert.parts.len()
        )));
    }
    let universe_ok = cert.partition[index].universe() == n
        && cert.parts[index]
            .classes
            .iter()
            .all(|c| c.trace.universe() == n && c.gv.iter().all(|r| r.vertex < n));
    if !universe_ok {
        return Err(Error::Structural(alloc::format!(
            "block {index} references vertices outside the graph"
        )));
    }
    Ok(())
}

/// Checks that do not belong to a single block.
pub fn verify_global(g: &Graph, cert: &Certificate) -> Result<Vec<Violation>> {
    check_header(g, cert)?;
    if cert.partition.iter().any(|b| b.universe() != g.n()) {
        return Err(Error::Structural(
            "partition references vertices outside the graph".into(),
        ));
    }
    let mut out = Vec::new();
    let mut r = Report {
        out: &mut out,
        part: None,
        trace: None,
    };
    let n = g.n();

    r.eq(Clause::PartSize, None, cert.part_size, part_size(n));
    let mut seen = VertexSet::new(n);
    let mut partition_ok = true;
    for block in &cert.partition {
        partition_ok &= !block.is_empty() && block.len() <= part_size(n) && seen.is_disjoint(block);
        seen = seen.union(block);
    }
    partition_ok &= seen.len() == n;
    r.check(partition_ok, Clause::Partition, None, || {
        "blocks do not partition V within the size cap".into()
    });

    let all = g.vertices();
    let actual = ordered_delta(g, &all, &all, &all);
    r.eq(Clause::Actual, None, cert.actual, actual);

    let (totals, bound) = chain_totals(&cert.parts);
    r.eq(Clause::PartitionSum, None, totals.delta, actual);
    r.eq(Clause::Totals, None, &cert.totals, &totals);
    r.eq(Clause::FinalBound, None, cert.final_bound, bound);
    r.check(
        within(cert.actual, cert.final_bound),
        Clause::ActualWithinBound,
        None,
        || alloc::format!("actual {} exceeds U = {}", cert.actual, cert.final_bound),
    );
    Ok(out)
}

/// Re-derives every record of block `index` from `g`.
pub fn verify_part(g: &Graph, cert: &Certificate, index: usize) -> Result<Vec<Violation>> {
    check_header(g, cert)?;
    check_block(g, cert, index)?;
    let p = cert.params;
    let part = &cert.partition[index];
    let record = &cert.parts[index];
    let all = g.vertices();
    let mut out = Vec::new();

    let realised = trace_classes(g, part);
    {
        let mut r = Report {
            out: &mut out,
            part: Some(index),
            trace: None,
        };
        let recorded: Vec<&VertexSet> = record.classes.iter().map(|c| &c.trace).collect();
        let expected: Vec<&VertexSet> = realised.keys().collect();
        r.eq(Clause::TraceClasses, None, recorded, expected);
    }

    for c in &record.classes {
        let mut r = Report {
            out: &mut out,
            part: Some(index),
            trace: Some(c.trace.to_vec()),
        };
        let Some(class) = realised.get(&c.trace) else {
            continue;
        };
        let s_set = &c.trace;
        r.eq(Clause::ClassSize, None, c.class_size, class.len());

        // A and B straight from their definitions.
        let mut a = VertexSet::new(g.n());
        let mut b = VertexSet::new(g.n());
        for v in 0..g.n() {
            if g.neighbors(v).intersection_len(s_set) < p.s() {
                a.insert(v);
            }
            if g.neighbors(v).intersection_len(class) < p.t() {
                b.insert(v);
            }
        }
        r.check(a.union(&b).len() == g.n(), Clause::SplitCover, None, || {
            "some vertex has s neighbours in S and t in V_S".into()
        });
        r.eq(
            Clause::SplitSizes,
            None,
            (c.a_size, c.b_size),
            (a.len(), b.len()),
        );

        let delta_part = ordered_delta(g, part, class, &all);
        let delta_trace = ordered_delta(g, s_set, class, &all);
        let delta_a = ordered_delta(g, s_set, class, &a);
        let delta_b = ordered_delta(g, s_set, class, &b);
        r.eq(Clause::DeltaPart, None, c.delta_part, delta_part);
        r.eq(Clause::DeltaTrace, None, c.delta_trace, delta_trace);
        r.eq(Clause::DeltaA, None, c.delta_a, delta_a);
        r.eq(Clause::DeltaB, None, c.delta_b, delta_b);
        r.check(
            c.delta_part == c.delta_trace,
            Clause::DeltaPartEqualsTrace,
            None,
            || alloc::format!("{} != {}", c.delta_part, c.delta_trace),
        );
        r.check(
            c.delta_trace <= c.delta_a + c.delta_b,
            Clause::DeltaSplit,
            None,
            || alloc::format!("{} > {} + {}", c.delta_trace, c.delta_a, c.delta_b),
        );
        let b_bound = (p.t() * s_set.len() * b.len()) as u64;
        r.eq(Clause::BBound, None, c.b_bound, b_bound);
        r.check(c.delta_b <= c.b_bound, Clause::BSide, None, || {
            alloc::format!("{} > {}", c.delta_b, c.b_bound)
        });

        let recorded_vertices: Vec<usize> = c.gv.iter().map(|x| x.vertex).collect();
        r.eq(Clause::GvVertices, None, recorded_vertices, s_set.to_vec());

        let mut edge_sum = 0u64;
        let mut degree_sum = 0u64;
        let (mut kst_sum, mut raw_kst_sum) = (0.0, 0.0);
        for (rec, v) in c.gv.iter().zip(s_set.iter()) {
            let view = build_gv(g, v, class, &a);
            let edges = view.edge_count();
            // Second route: e(G_v) counts the ordered triangles (v, u, w), u ∈ V_S, w ∈ A.
            let single = VertexSet::from_members(g.n(), [v]).expect("v < n");
            let via_delta = ordered_delta(g, &single, class, &a);
            let right_size = view.right.len();
            let kst = kst_edge_bound(class.len(), right_size, p);
            let cap = capped(kst, class.len(), right_size);
            let at = Some(v);
            r.check(edges == via_delta, Clause::GvEdges, at, || {
                alloc::format!("G_v has {edges} edges but Δ({{v}}, V_S, A) = {via_delta}")
            });
            r.eq(Clause::GvRightSize, at, rec.right_size, right_size);
            r.eq(Clause::GvEdges, at, rec.edges, edges);
            r.eq(Clause::GvKstBound, at, rec.kst_bound, kst);
            r.eq(Clause::GvCappedBound, at, rec.capped_bound, cap);
            r.check(
                within(rec.edges, rec.capped_bound),
                Clause::GvKstInequality,
                at,
                || alloc::format!("e(G_v) = {} > {}", rec.edges, rec.capped_bound),
            );
            r.check(
                kst_counting_check(&view.graph, p),
                Clause::GvCountingCheck,
                at,
                || "counting inequality fails on G_v".into(),
            );
            edge_sum += rec.edges;
            degree_sum += rec.right_size as u64;
            kst_sum += rec.capped_bound;
            raw_kst_sum += rec.kst_bound;
        }
        r.check(
            c.delta_a == edge_sum,
            Clause::DeltaAEqualsGvSum,
            None,
            || alloc::format!("{} != {}", c.delta_a, edge_sum),
        );
        r.eq(Clause::DegreeSum, None, c.degree_sum, degree_sum);
        r.check(
            c.degree_sum <= (p.s() * c.a_size) as u64,
            Clause::DegreeSumBound,
            None,
            || alloc::format!("{} > s·|A| = {}", c.degree_sum, p.s() * c.a_size),
        );
        r.eq(
            Clause::KstSum,
            None,
            (c.kst_sum, c.raw_kst_sum),
            (kst_sum, raw_kst_sum),
        );
        r.eq(
            Clause::JensenBound,
            None,
            c.jensen_bound,
            jensen_bound(p, class.len(), s_set.len(), a.len()),
        );
        r.check(
            c.raw_kst_sum <= c.jensen_bound * (1.0 + JENSEN_TOLERANCE),
            Clause::JensenDirection,
            None,
            || alloc::format!("raw sum {} > aggregated {}", c.raw_kst_sum, c.jensen_bound),
        );
    }
    Ok(out)
}

/// Recomputes the whole certificate from `g`. `Err` only for structural
/// problems (wrong order, references outside the graph); broken clauses are
/// listed in the returned [`Verification`].
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<Verification> {
    let mut violations = verify_global(g, cert)?;
    for index in 0..cert.parts.len() {
        violations.extend(verify_part(g, cert, index)?);
    }
    Ok(Verification { violations })
}
