//! Independent reference code shared by the integration tests. Nothing here
//! calls into the search code under test.

#![allow(dead_code)]

use pcpath_core::{Colour, EdgeColouredGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every edge present and consecutive edges coloured differently.
pub fn naive_is_pc_path(g: &EdgeColouredGraph, t: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    for &v in t {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let cols: Option<Vec<Colour>> = t.windows(2).map(|w| g.colour(w[0], w[1])).collect();
    match cols {
        Some(c) => c.windows(2).all(|w| w[0] != w[1]),
        None => false,
    }
}

/// Closed tuple `(v0, ..., v0)` on at least three distinct vertices.
pub fn naive_is_pc_cycle(g: &EdgeColouredGraph, t: &[usize]) -> bool {
    if t.len() < 4 || t[0] != t[t.len() - 1] {
        return false;
    }
    let ring = &t[..t.len() - 1];
    if !naive_is_pc_path(g, ring) {
        return false;
    }
    let k = ring.len();
    let Some(close) = g.colour(ring[k - 1], ring[0]) else { return false };
    close != g.colour(ring[k - 2], ring[k - 1]).unwrap() && close != g.colour(ring[0], ring[1]).unwrap()
}

/// All p.c. paths with at least one vertex, each direction listed.
pub fn all_pc_paths(g: &EdgeColouredGraph) -> Vec<Vec<usize>> {
    fn grow(g: &EdgeColouredGraph, t: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(t.clone());
        let last = *t.last().unwrap();
        for w in 0..g.n() {
            if t.contains(&w) || !g.has_edge(last, w) {
                continue;
            }
            t.push(w);
            if naive_is_pc_path(g, t) {
                grow(g, t, out);
            }
            t.pop();
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        grow(g, &mut vec![s], &mut out);
    }
    out
}

/// Longest p.c. path length (edges) and the lexicographically smallest
/// tuple attaining it.
pub fn naive_longest_path(g: &EdgeColouredGraph) -> (usize, Vec<usize>) {
    let paths = all_pc_paths(g);
    let best = paths.iter().map(Vec::len).max().unwrap();
    let tuple = paths.into_iter().filter(|p| p.len() == best).min().unwrap();
    (best - 1, tuple)
}

/// Longest p.c. cycle length, if any.
pub fn naive_longest_cycle(g: &EdgeColouredGraph) -> Option<usize> {
    all_pc_paths(g)
        .into_iter()
        .filter(|p| p.len() >= 3)
        .filter(|p| {
            let mut c = p.clone();
            c.push(p[0]);
            naive_is_pc_cycle(g, &c)
        })
        .map(|p| p.len())
        .max()
}

/// Each pair joined independently with probability `p`, colours uniform in
/// `0..colours`.
pub fn random_graph(n: usize, p: f64, colours: u64, seed: u64) -> EdgeColouredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = EdgeColouredGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v, Colour(rng.random_range(0..colours))).unwrap();
            }
        }
    }
    g
}
