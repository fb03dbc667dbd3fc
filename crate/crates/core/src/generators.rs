//! Extremal constructions and seeded random instances.
//!
//! Constructions draw colours from a counter starting at 0, so every "new
//! colour" of a construction gets its own id and blocks never share colours.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Colour, EdgeColouredGraph, GraphError, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    Params(String),
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<(), GenError> {
    if ok {
        Ok(())
    } else {
        Err(GenError::Params(msg()))
    }
}

#[derive(Default)]
struct Fresh(u64);

impl Fresh {
    fn next(&mut self) -> Colour {
        self.0 += 1;
        Colour(self.0 - 1)
    }
}

fn edge(g: &mut EdgeColouredGraph, u: Vertex, v: Vertex, c: Colour) {
    g.add_edge(u, v, c).expect("constructions only add fresh edges");
}

fn rainbow_clique(g: &mut EdgeColouredGraph, vertices: &[Vertex], fresh: &mut Fresh) {
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            edge(g, u, v, fresh.next());
        }
    }
}

/// Rainbow `K_n`.
pub fn gen_rainbow_complete(n: usize) -> EdgeColouredGraph {
    let mut g = EdgeColouredGraph::new(n);
    rainbow_clique(&mut g, &(0..n).collect::<Vec<_>>(), &mut Fresh::default());
    g
}

/// A hub `x = 0` joined to `p` disjoint rainbow copies of `K_d`, copy `j`
/// occupying vertices `1 + j*d .. 1 + (j+1)*d` and joined to `x` in its own
/// colour.
pub fn gen_tilde(d: usize, p: usize) -> Result<EdgeColouredGraph, GenError> {
    require(d >= 2 && p >= d, || format!("tilde needs p >= d >= 2, got d={d}, p={p}"))?;
    let mut g = EdgeColouredGraph::new(1 + p * d);
    let mut fresh = Fresh::default();
    for j in 0..p {
        let block: Vec<Vertex> = (1 + j * d..1 + (j + 1) * d).collect();
        rainbow_clique(&mut g, &block, &mut fresh);
        let hub = fresh.next();
        for &v in &block {
            edge(&mut g, 0, v, hub);
        }
    }
    Ok(g)
}

/// Rainbow `K_d` on `X = 0..d` and an independent set `Y = d..n`, with
/// `x_i` joined to every `y` in a colour of its own.
pub fn gen_hat(d: usize, n: usize) -> Result<EdgeColouredGraph, GenError> {
    require(d >= 1 && 2 * n >= 3 * d && n > d, || {
        format!("hat needs d >= 1 and n >= ceil(3d/2), got d={d}, n={n}")
    })?;
    let mut g = EdgeColouredGraph::new(n);
    let mut fresh = Fresh::default();
    rainbow_clique(&mut g, &(0..d).collect::<Vec<_>>(), &mut fresh);
    for x in 0..d {
        let c = fresh.next();
        for y in d..n {
            edge(&mut g, x, y, c);
        }
    }
    Ok(g)
}

/// The recursive family: for `d = k-1` this is [`gen_tilde`]`(k-1, p)`;
/// otherwise a hub `x = 0` joined, in a fresh colour per copy, to `p`
/// colour-disjoint copies of `gen_recursive(d-1, k, p)`.
pub fn gen_recursive(d: usize, k: usize, p: usize) -> Result<EdgeColouredGraph, GenError> {
    require(k >= 3 && d + 1 >= k && p >= d, || {
        format!("recursive needs d >= k-1 >= 2 and p >= d, got d={d}, k={k}, p={p}")
    })?;
    if d + 1 == k {
        return gen_tilde(d, p);
    }
    let inner = gen_recursive(d - 1, k, p)?;
    let span = inner.colours().iter().next_back().map_or(0, |c| c.0 + 1);
    let size = inner.n();
    let mut g = EdgeColouredGraph::new(1 + p * size);
    let mut next = 0u64;
    for j in 0..p {
        let shift = 1 + j * size;
        for (u, v, c) in inner.edges() {
            edge(&mut g, u + shift, v + shift, Colour(c.0 + next));
        }
        next += span;
        let hub = Colour(next);
        next += 1;
        for v in shift..shift + size {
            edge(&mut g, 0, v, hub);
        }
    }
    Ok(g)
}

/// Number of vertices of [`gen_recursive`]`(d, k, p)`, without building it.
pub fn recursive_order(d: usize, k: usize, p: usize) -> usize {
    if d < k {
        1 + p * d
    } else {
        1 + p * recursive_order(d - 1, k, p)
    }
}

/// Proper edge colouring of `K_n` by the round-robin (circle) schedule.
///
/// Even `n` uses colours `0..n-1`, each a perfect matching. Odd `n` uses
/// colours `0..n`, and the second value lists, for every vertex, the one
/// colour missing there: vertex `i` misses colour `i`.
pub fn gen_proper_complete(n: usize) -> Result<(EdgeColouredGraph, Option<Vec<Colour>>), GenError> {
    require(n >= 2, || format!("proper-complete needs n >= 2, got {n}"))?;
    let even = n + n % 2;
    let rounds = even - 1;
    let mut g = EdgeColouredGraph::new(n);
    for r in 0..rounds {
        let mut pairs = vec![(even - 1, r)];
        for i in 1..even / 2 {
            pairs.push(((r + i) % rounds, (r + rounds - i) % rounds));
        }
        for (u, v) in pairs {
            if u < n && v < n {
                edge(&mut g, u, v, Colour(r as u64));
            }
        }
    }
    let missing = (n % 2 == 1).then(|| (0..n).map(|v| Colour(v as u64)).collect());
    Ok((g, missing))
}

/// Replaces every vertex `v` by `delta` independent copies `v*delta + t`,
/// joining copies of adjacent vertices in the original edge's colour.
pub fn blow_up(g: &EdgeColouredGraph, delta: usize) -> Result<EdgeColouredGraph, GenError> {
    require(delta >= 1, || "blow-up needs delta >= 1".into())?;
    let mut h = EdgeColouredGraph::new(g.n() * delta);
    for (u, v, c) in g.edges() {
        for s in 0..delta {
            for t in 0..delta {
                edge(&mut h, u * delta + s, v * delta + t, c);
            }
        }
    }
    Ok(h)
}

/// Minimum over the colours present of the minimum degree of that colour
/// class, taken over all vertices of `g`.
pub fn mono_min_degree(g: &EdgeColouredGraph) -> Result<usize, GraphError> {
    if g.edge_count() == 0 {
        return Err(GraphError::Edgeless);
    }
    Ok(g.colours()
        .into_iter()
        .map(|c| (0..g.n()).map(|v| g.colour_class_degree(v, c)).min().unwrap_or(0))
        .min()
        .unwrap_or(0))
}

/// The k-edge-coloured graph with large monochromatic minimum degree but
/// short p.c. paths, with `|Y| = k + epsilon` before the blow-up.
pub fn gen_counterexample_mono(k: usize, delta: usize) -> Result<EdgeColouredGraph, GenError> {
    gen_counterexample_mono_with_y(k, delta, k + epsilon(k))
}

fn epsilon(k: usize) -> usize {
    usize::from(k.is_multiple_of(2))
}

/// As [`gen_counterexample_mono`] with an explicit number of `Y` vertices.
/// Vertex layout before blow-up: `X = 0..k+epsilon`, then `Y`. Colour `i`
/// is `c_{i+1}` in one-based notation.
pub fn gen_counterexample_mono_with_y(k: usize, delta: usize, y: usize) -> Result<EdgeColouredGraph, GenError> {
    require(k >= 3 && delta >= 1 && y >= 1, || {
        format!("mono-counterexample needs k >= 3, delta >= 1, |Y| >= 1, got k={k}, delta={delta}, y={y}")
    })?;
    let x = k + epsilon(k);
    let (complete, _) = gen_proper_complete(x)?;
    let mut g = EdgeColouredGraph::new(x + y);
    for (u, v, c) in complete.edges() {
        if (c.0 as usize) < k {
            edge(&mut g, u, v, c);
        }
    }
    for yv in x..x + y {
        for i in 0..k {
            edge(&mut g, yv, i, Colour(i as u64));
        }
    }
    blow_up(&g, delta)
}

/// Parameters for [`gen_random_min_cdeg`].
#[derive(Clone, Debug)]
pub struct RandomSpec {
    pub n: usize,
    pub d: usize,
    pub colours: usize,
    /// Probability of each extra edge between non-adjacent vertices.
    pub density: f64,
    pub seed: u64,
    /// Join components with extra random edges.
    pub connected: bool,
}

impl RandomSpec {
    pub fn new(n: usize, d: usize, colours: usize, seed: u64) -> Self {
        Self { n, d, colours, density: 0.3, seed, connected: false }
    }
}

enum Plant {
    Rainbow,
    Proper,
    Latin,
}

fn plant_kind(d: usize, colours: usize) -> Plant {
    if colours >= d * (d + 1) / 2 {
        Plant::Rainbow
    } else if colours >= d + usize::from(d.is_multiple_of(2)) {
        // K_{d+1} has a proper colouring with d colours when d+1 is even,
        // and with d+1 colours otherwise.
        Plant::Proper
    } else {
        Plant::Latin
    }
}

/// Seeded random graph with minimum colour degree at least `d`.
///
/// Disjoint blocks of colour degree `d` are planted first: rainbow
/// `K_{d+1}` when the palette allows, otherwise a properly coloured
/// `K_{d+1}`, otherwise `K_{d,d}` coloured by a Latin square. Leftover
/// vertices are joined to `d` planted vertices in `d` distinct colours.
/// Extra edges are then added with probability `density` and the labels are
/// shuffled. Colour degrees never drop when edges are added, so the bound
/// survives.
pub fn gen_random_min_cdeg(spec: &RandomSpec) -> Result<EdgeColouredGraph, GenError> {
    let RandomSpec { n, d, colours, density, seed, connected } = *spec;
    require(d >= 1 && n > d && colours >= d, || {
        format!("random needs n >= d+1, colours >= d, d >= 1, got n={n}, d={d}, colours={colours}")
    })?;
    require((0.0..=1.0).contains(&density), || format!("density {density} outside [0, 1]"))?;
    let kind = plant_kind(d, colours);
    let block = if matches!(kind, Plant::Latin) { 2 * d } else { d + 1 };
    require(n >= block, || format!("n={n} too small for a {block}-vertex block with {colours} colours"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = EdgeColouredGraph::new(n);
    let mut palette: Vec<u64> = (0..colours as u64).collect();
    let blocks = n / block;
    for b in 0..blocks {
        palette.shuffle(&mut rng);
        let vs: Vec<Vertex> = (b * block..(b + 1) * block).collect();
        match kind {
            Plant::Rainbow => {
                let mut i = 0;
                for (a, &u) in vs.iter().enumerate() {
                    for &v in &vs[a + 1..] {
                        edge(&mut g, u, v, Colour(palette[i]));
                        i += 1;
                    }
                }
            }
            Plant::Proper => {
                let (k, _) = gen_proper_complete(d + 1)?;
                for (u, v, c) in k.edges() {
                    edge(&mut g, vs[u], vs[v], Colour(palette[c.0 as usize]));
                }
            }
            Plant::Latin => {
                for i in 0..d {
                    for j in 0..d {
                        edge(&mut g, vs[i], vs[d + j], Colour(palette[(i + j) % d]));
                    }
                }
            }
        }
    }
    let planted = blocks * block;
    for v in planted..n {
        palette.shuffle(&mut rng);
        let mut targets: Vec<Vertex> = (0..planted).collect();
        targets.shuffle(&mut rng);
        for (i, &t) in targets.iter().take(d).enumerate() {
            edge(&mut g, v, t, Colour(palette[i]));
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.random_bool(density) {
                edge(&mut g, u, v, Colour(rng.random_range(0..colours as u64)));
            }
        }
    }
    if connected {
        let comps = g.components();
        for w in comps.windows(2) {
            let u = w[0][rng.random_range(0..w[0].len())];
            let v = w[1][rng.random_range(0..w[1].len())];
            edge(&mut g, u, v, Colour(rng.random_range(0..colours as u64)));
        }
    }
    Ok(shuffle_labels(&g, &mut rng))
}

/// Erdos-Renyi `G(n, p)` with uniformly random colours from `0..colours`.
pub fn gen_random_gnp(n: usize, p: f64, colours: usize, seed: u64) -> Result<EdgeColouredGraph, GenError> {
    require(colours >= 1 && (0.0..=1.0).contains(&p), || {
        format!("gnp needs colours >= 1 and p in [0, 1], got colours={colours}, p={p}")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = EdgeColouredGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edge(&mut g, u, v, Colour(rng.random_range(0..colours as u64)));
            }
        }
    }
    Ok(g)
}

fn shuffle_labels(g: &EdgeColouredGraph, rng: &mut ChaCha8Rng) -> EdgeColouredGraph {
    let mut perm: Vec<Vertex> = (0..g.n()).collect();
    perm.shuffle(rng);
    let mut h = EdgeColouredGraph::new(g.n());
    for (u, v, c) in g.edges() {
        edge(&mut h, perm[u], perm[v], c);
    }
    h
}
