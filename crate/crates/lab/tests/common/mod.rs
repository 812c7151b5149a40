#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use turan_core::certifier::{verify_certificate, verify_global, verify_part, Certificate};
use turan_core::{Graph, PatternParams, VertexSet};

pub fn pp(s: usize, t: usize) -> PatternParams {
    PatternParams::new(s, t).unwrap()
}

pub fn random_graph(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Plain graph6 decoder working through an explicit bit string.
pub fn reference_decode(text: &str) -> Option<Graph> {
    let values: Vec<u32> = text.bytes().map(|b| b as u32).collect();
    if values.iter().any(|&v| !(63..=126).contains(&v)) || values.is_empty() {
        return None;
    }
    let (n, rest) = if values[0] < 126 {
        ((values[0] - 63) as usize, &values[1..])
    } else {
        let n = values[1..4]
            .iter()
            .fold(0usize, |acc, &v| acc * 64 + (v - 63) as usize);
        (n, &values[4..])
    };
    let bits: String = rest.iter().map(|&v| format!("{:06b}", v - 63)).collect();
    let needed = n * n.saturating_sub(1) / 2;
    if bits.len() != needed.div_ceil(6) * 6 {
        return None;
    }
    let mut g = Graph::empty(n);
    let mut chars = bits.chars();
    for j in 0..n {
        for i in 0..j {
            if chars.next()? == '1' {
                g.add_edge(i, j);
            }
        }
    }
    Some(g)
}

/// Which verification a tampered field can be checked by first.
#[derive(Debug, Clone, Copy)]
pub enum Scope {
    Global,
    Part(usize),
}

trait Tweak: Copy {
    fn tweak(self) -> Self;
}

impl Tweak for usize {
    fn tweak(self) -> Self {
        self + 1
    }
}

impl Tweak for u64 {
    fn tweak(self) -> Self {
        self + 1
    }
}

impl Tweak for f64 {
    fn tweak(self) -> Self {
        self + self.abs().max(1.0) * 1e-6
    }
}

#[derive(Debug, Default)]
pub struct TamperReport {
    pub sites: usize,
    pub missed: Vec<String>,
}

/// True if the verifier rejects `cert`. `verify_certificate` is the union of
/// the global check and every block check, so they are run one at a time,
/// starting with the block named by `scope`, until one fails.
pub fn rejected(g: &Graph, cert: &Certificate, scope: Scope) -> bool {
    let flags = |r: turan_core::Result<Vec<_>>| r.map_or(true, |v| !v.is_empty());
    let first = match scope {
        Scope::Part(i) => Some(i),
        Scope::Global => None,
    };
    if let Some(i) = first {
        if flags(verify_part(g, cert, i)) {
            return true;
        }
    }
    if flags(verify_global(g, cert)) {
        return true;
    }
    (0..cert.parts.len())
        .filter(|&i| Some(i) != first)
        .any(|i| flags(verify_part(g, cert, i)))
}

/// Same verdict through the single public entry point.
pub fn rejected_in_full(g: &Graph, cert: &Certificate) -> bool {
    verify_certificate(g, cert).map_or(true, |v| !v.is_valid())
}

fn toggles(set: &VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for v in set.iter() {
        let mut s = set.clone();
        s.remove(v);
        out.push(s);
    }
    if let Some(v) = (0..set.universe()).find(|&v| !set.contains(v)) {
        let mut s = set.clone();
        s.insert(v);
        out.push(s);
    }
    out
}

/// Changes every field of `cert` in turn (numbers bumped, sets with one
/// member removed or added) and records the changes `g` fails to reject.
/// `cert` is restored afterwards.
pub fn tamper_sweep(g: &Graph, cert: &mut Certificate) -> TamperReport {
    let mut report = TamperReport::default();
    macro_rules! bump {
        ($place:expr, $scope:expr, $label:expr) => {{
            let old = $place;
            $place = Tweak::tweak(old);
            report.sites += 1;
            if !rejected(g, cert, $scope) {
                report.missed.push($label);
            }
            $place = old;
        }};
    }
    macro_rules! toggle {
        ($place:expr, $scope:expr, $label:expr) => {{
            let old = $place.clone();
            for changed in toggles(&old) {
                $place = changed;
                report.sites += 1;
                if !rejected(g, cert, $scope) {
                    report.missed.push($label);
                }
            }
            $place = old;
        }};
    }

    bump!(cert.n, Scope::Global, "n".to_string());
    bump!(cert.part_size, Scope::Global, "part_size".to_string());
    bump!(cert.actual, Scope::Global, "actual".to_string());
    bump!(cert.final_bound, Scope::Global, "final_bound".to_string());
    bump!(cert.totals.delta, Scope::Global, "totals.delta".to_string());
    bump!(
        cert.totals.b_bound,
        Scope::Global,
        "totals.b_bound".to_string()
    );
    bump!(cert.totals.kst, Scope::Global, "totals.kst".to_string());
    bump!(
        cert.totals.jensen,
        Scope::Global,
        "totals.jensen".to_string()
    );
    let params = cert.params;
    for (s, t) in [
        (params.s() + 1, params.t() + 1),
        (params.s(), params.t() + 1),
        (params.s() + 1, params.t()),
    ] {
        if let Ok(q) = PatternParams::new(s, t) {
            cert.params = q;
            report.sites += 1;
            if !rejected(g, cert, Scope::Global) {
                report.missed.push(format!("params ({s},{t})"));
            }
        }
    }
    cert.params = params;

    for i in 0..cert.partition.len() {
        toggle!(cert.partition[i], Scope::Part(i), format!("partition[{i}]"));
        for c in 0..cert.parts[i].classes.len() {
            let scope = Scope::Part(i);
            let at = |field: &str| format!("parts[{i}].classes[{c}].{field}");
            toggle!(cert.parts[i].classes[c].trace, scope, at("trace"));
            bump!(cert.parts[i].classes[c].class_size, scope, at("class_size"));
            bump!(cert.parts[i].classes[c].a_size, scope, at("a_size"));
            bump!(cert.parts[i].classes[c].b_size, scope, at("b_size"));
            bump!(cert.parts[i].classes[c].delta_part, scope, at("delta_part"));
            bump!(
                cert.parts[i].classes[c].delta_trace,
                scope,
                at("delta_trace")
            );
            bump!(cert.parts[i].classes[c].delta_a, scope, at("delta_a"));
            bump!(cert.parts[i].classes[c].delta_b, scope, at("delta_b"));
            bump!(cert.parts[i].classes[c].b_bound, scope, at("b_bound"));
            bump!(cert.parts[i].classes[c].degree_sum, scope, at("degree_sum"));
            bump!(cert.parts[i].classes[c].kst_sum, scope, at("kst_sum"));
            bump!(
                cert.parts[i].classes[c].raw_kst_sum,
                scope,
                at("raw_kst_sum")
            );
            bump!(
                cert.parts[i].classes[c].jensen_bound,
                scope,
                at("jensen_bound")
            );
            for k in 0..cert.parts[i].classes[c].gv.len() {
                let at = |field: &str| format!("parts[{i}].classes[{c}].gv[{k}].{field}");
                bump!(cert.parts[i].classes[c].gv[k].vertex, scope, at("vertex"));
                bump!(
                    cert.parts[i].classes[c].gv[k].right_size,
                    scope,
                    at("right_size")
                );
                bump!(cert.parts[i].classes[c].gv[k].edges, scope, at("edges"));
                bump!(
                    cert.parts[i].classes[c].gv[k].kst_bound,
                    scope,
                    at("kst_bound")
                );
                bump!(
                    cert.parts[i].classes[c].gv[k].capped_bound,
                    scope,
                    at("capped_bound")
                );
            }
        }
    }
    report
}
