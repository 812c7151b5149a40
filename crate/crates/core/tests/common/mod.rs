#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use turan_core::{Graph, PatternParams};

pub fn pp(s: usize, t: usize) -> PatternParams {
    PatternParams::new(s, t).unwrap()
}

/// The labelled graph on `n` vertices whose colex edge list is selected by `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = Graph::complete(n).edges().collect();
    let chosen: Vec<_> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &chosen).unwrap()
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

/// Triple loop.
pub fn naive_triangles(g: &Graph) -> u64 {
    let n = g.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

fn subsets_of_size(universe: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if universe.len() < k {
        return vec![];
    }
    let (head, tail) = (universe[0], &universe[1..]);
    let mut with: Vec<Vec<usize>> = subsets_of_size(tail, k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, head);
            s
        })
        .collect();
    with.extend(subsets_of_size(tail, k));
    with
}

/// Tries every assignment of `1 + s + t` distinct vertices to apex, `s`-part
/// and `t`-part.
pub fn naive_contains_k1st(g: &Graph, s: usize, t: usize) -> bool {
    let n = g.n();
    for apex in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&v| v != apex).collect();
        for side_s in subsets_of_size(&rest, s) {
            let remaining: Vec<usize> = rest
                .iter()
                .copied()
                .filter(|v| !side_s.contains(v))
                .collect();
            for side_t in subsets_of_size(&remaining, t) {
                let apex_ok = side_s.iter().chain(&side_t).all(|&v| g.has_edge(apex, v));
                let cross_ok = side_s
                    .iter()
                    .all(|&a| side_t.iter().all(|&b| g.has_edge(a, b)));
                if apex_ok && cross_ok {
                    return true;
                }
            }
        }
    }
    false
}

/// Every edge lies in at most one triangle.
pub fn is_book_free(g: &Graph) -> bool {
    g.edges()
        .all(|(u, v)| g.neighbors(u).intersection_len(g.neighbors(v)) <= 1)
}
