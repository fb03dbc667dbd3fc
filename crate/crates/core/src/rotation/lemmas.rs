//! Constructive versions of the path lemmas: the simple cycle through a
//! pair of chords, the endpoint structure of a stuck path with a crossing,
//! and the cycle-plus-path decomposition of a maximal path.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeColouredGraph, Vertex};
use crate::neighbourhood::ColourNeighbourhoodChoice;
use crate::oracle::{find_cycle_with_tail, has_pc_cycle_of_length_at_least, OracleError};
use crate::path::{check_pc_path, is_pc_cycle, is_pc_path, ColouredCycle, ColouredPath, PathError};

use super::closure::{closure, ClosureKind};
use super::{crossing_unchecked, extension_unchecked, positions_in};

/// Hypotheses of the simple-cycle lemma, for error reporting.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// `a` must be eligible at the first vertex and differ from position 2.
    FirstNeighbourhood,
    /// `b` must be eligible at the last vertex and differ from position l-1.
    LastNeighbourhood,
    /// Positions must satisfy `1 <= b < a <= l`.
    Order,
    /// `c(1,a) != c(a,a+1)` when `a < l`.
    FirstColour,
    /// `c(l,b) != c(b,b-1)` when `b > 1`.
    LastColour,
    /// A p.c. cycle spans the path's vertex set.
    SpanningCycle,
    /// The constructed tuple is not a p.c. cycle for another reason.
    Construction,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::FirstNeighbourhood => "a is not an eligible neighbour of the first vertex (other than position 2)",
            Hypothesis::LastNeighbourhood => "b is not an eligible neighbour of the last vertex (other than position l-1)",
            Hypothesis::Order => "positions must satisfy 1 <= b < a <= l",
            Hypothesis::FirstColour => "c(1,a) = c(a,a+1)",
            Hypothesis::LastColour => "c(l,b) = c(b,b-1)",
            Hypothesis::SpanningCycle => "a p.c. cycle spans V(P)",
            Hypothesis::Construction => "constructed tuple is not a p.c. cycle",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LemmaError {
    #[error("invalid path: {0}")]
    InvalidPath(#[from] PathError),
    #[error("hypothesis violated: {0}")]
    Hypothesis(Hypothesis),
}

fn cmatch(g: &EdgeColouredGraph, x: Vertex, y: Vertex, z: Vertex) -> bool {
    // c(x,y) == c(y,z), both edges present
    matches!((g.colour(x, y), g.colour(y, z)), (Some(a), Some(b)) if a == b)
}

/// The cycle `(1, ..., b, l, l-1, ..., a, 1)` for positions `b < a`.
/// With `b = 1` this is `(1, l, l-1, ..., a, 1)`.
pub fn lemma_simplecycle(g: &EdgeColouredGraph, path: &[Vertex], a: usize, b: usize) -> Result<ColouredCycle, LemmaError> {
    check_pc_path(g, path)?;
    let l = path.len();
    let p = |i: usize| path[i - 1];
    let hyp = |h| Err(LemmaError::Hypothesis(h));
    if !(1 <= b && b < a && a <= l) {
        return hyp(Hypothesis::Order);
    }
    let eligible_first = a != 2 && g.has_edge(p(1), p(a)) && g.colour(p(1), p(a)) != g.colour(p(1), p(2));
    if !eligible_first {
        return hyp(Hypothesis::FirstNeighbourhood);
    }
    let eligible_last = b + 1 != l && g.has_edge(p(l), p(b)) && g.colour(p(l), p(b)) != g.colour(p(l), p(l - 1));
    if !eligible_last {
        return hyp(Hypothesis::LastNeighbourhood);
    }
    if a < l && g.colour(p(1), p(a)) == g.colour(p(a), p(a + 1)) {
        return hyp(Hypothesis::FirstColour);
    }
    if b > 1 && g.colour(p(l), p(b)) == g.colour(p(b), p(b - 1)) {
        return hyp(Hypothesis::LastColour);
    }
    let mut closed: Vec<Vertex> = path[..b].to_vec();
    closed.extend(path[a - 1..].iter().rev());
    closed.push(p(1));
    if closed.len() >= 4 && is_pc_cycle(g, &closed) {
        return Ok(ColouredCycle::from_vec_unchecked(closed));
    }
    let mut spanning = path.to_vec();
    spanning.push(p(1));
    if is_pc_cycle(g, &spanning) {
        hyp(Hypothesis::SpanningCycle)
    } else {
        hyp(Hypothesis::Construction)
    }
}

/// Per-clause outcome of the endpoint analysis. Clauses (d)-(f) and the
/// ordering are only required when `s >= 2`; otherwise they read `true`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClauseReport {
    pub a: bool,
    pub b: bool,
    /// Clause (c) with position 2 excluded.
    pub c: bool,
    /// Clause (c) with position 2 included.
    pub c_including_2: bool,
    pub d: bool,
    pub e: bool,
    pub f: bool,
    pub ordering: bool,
}

impl ClauseReport {
    pub fn all_hold(&self) -> bool {
        self.a && self.b && self.c && self.d && self.e && self.f && self.ordering
    }
}

/// The `r, s, u, w` structure at the ends of a stuck path with a crossing.
/// All positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointAnalysis {
    /// Positions of the chosen colour neighbourhood of the first vertex.
    pub first_neighbourhood: BTreeSet<usize>,
    /// Positions of the chosen colour neighbourhood of the last vertex.
    pub last_neighbourhood: BTreeSet<usize>,
    pub crossing: (usize, usize),
    pub r: usize,
    /// `None` when `c(l,r) != c(r,r+1)`, so no `s` satisfies clause (a).
    pub s: Option<usize>,
    pub u: Option<usize>,
    pub w: Option<usize>,
    /// `[r, s]` intersected with the last vertex's neighbourhood.
    pub s_set: BTreeSet<usize>,
    pub clauses: ClauseReport,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("invalid path: {0}")]
    InvalidPath(#[from] PathError),
    #[error("path has no crossing")]
    NoCrossing,
    #[error("path is extensible")]
    Extensible,
}

fn forced_choice(g: &EdgeColouredGraph, v: Vertex, forced: &[Vertex]) -> BTreeSet<Vertex> {
    let mut f = forced.to_vec();
    f.dedup();
    ColourNeighbourhoodChoice::build(g, v, &f)
        .expect("forced vertices are eligible and distinctly coloured")
        .members()
}

/// Computes `A = N^c(1;P)`, `B = N^c(l;P)` (choices forced to contain the
/// path neighbours and the crossing pair; other colours take the smallest
/// vertex), `r = min B`, the largest `s` satisfying clause (a), and `u`, `w`
/// per clauses (d)-(f), then checks every clause independently.
pub fn analyze_endpoints(g: &EdgeColouredGraph, path: &[Vertex]) -> Result<EndpointAnalysis, AnalysisError> {
    check_pc_path(g, path)?;
    if extension_unchecked(g, path).is_some() {
        return Err(AnalysisError::Extensible);
    }
    let (ca, cb) = crossing_unchecked(g, path).ok_or(AnalysisError::NoCrossing)?;
    let l = path.len();
    let p = |i: usize| path[i - 1];

    let a_set: BTreeSet<usize> = positions_in(path, &forced_choice(g, p(1), &[p(2), p(cb)])).into_iter().collect();
    let b_set: BTreeSet<usize> = positions_in(path, &forced_choice(g, p(l), &[p(l - 1), p(ca)])).into_iter().collect();

    // c(l,b) = c(b,b+1)
    let last_eq = |b: usize| b < l && cmatch(g, p(l), p(b), p(b + 1));
    // c(1,a) = c(a,a+1) != c(a,a-1)
    let first_eq = |a: usize| a < l && cmatch(g, p(1), p(a), p(a + 1)) && (a == 1 || !cmatch(g, p(a - 1), p(a), p(a + 1)));

    let r = *b_set.iter().next().expect("B contains position l-1");
    let s = b_set.iter().copied().take_while(|&b| last_eq(b)).last();

    let (mut u, mut w) = (None, None);
    if let Some(s) = s.filter(|&s| s >= 2) {
        let above: Vec<usize> = a_set.range(s + 1..).copied().collect();
        let run = above.iter().take_while(|&&a| first_eq(a)).count();
        if run > 0 {
            u = Some(above[run - 1]);
            w = above.get(run).copied();
        }
    }

    let s_set: BTreeSet<usize> = match s {
        Some(s) => b_set.range(r..=s).copied().collect(),
        None => BTreeSet::new(),
    };

    let mut clauses = ClauseReport::default();
    if let Some(s) = s {
        clauses.a = b_set.range(r..=s).all(|&b| last_eq(b));
        clauses.b = b_set.range(s + 1..).next().is_none_or(|&b| !last_eq(b));
        let c_range = || a_set.range(r + 1..=s.max(r));
        clauses.c = c_range().filter(|&&a| a != 2).all(|&a| first_eq(a));
        clauses.c_including_2 = c_range().all(|&a| first_eq(a));
        if s >= 2 {
            if let (Some(u), Some(w)) = (u, w) {
                clauses.d = a_set.range(s + 1..=u).all(|&a| first_eq(a));
                clauses.e = a_set.range(..w).all(|&a| a <= u);
                clauses.f = w == l || !cmatch(g, p(1), p(w), p(w + 1));
                clauses.ordering = r <= s && s < u && u < w && w <= l;
            }
        } else {
            clauses.d = true;
            clauses.e = true;
            clauses.f = true;
            clauses.ordering = r <= s;
        }
    }

    Ok(EndpointAnalysis {
        first_neighbourhood: a_set,
        last_neighbourhood: b_set,
        crossing: (ca, cb),
        r,
        s,
        u,
        w,
        s_set,
        clauses,
    })
}

/// A p.c. cycle `C` and a p.c. path `Q` (possibly empty) with disjoint
/// vertex sets, where the head of `Q` is joined to `cycle.ring()[attach]`
/// by an edge whose colour differs from the first edge of `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycle: ColouredCycle,
    pub path: ColouredPath,
    pub attach: usize,
}

impl CycleDecomposition {
    /// Re-checks every invariant against `g`, requiring the union of the
    /// two vertex sets to be `cover`.
    pub fn check(&self, g: &EdgeColouredGraph, cover: &BTreeSet<Vertex>) -> Result<(), String> {
        if !is_pc_cycle(g, self.cycle.closed_tuple()) {
            return Err(format!("{} is not a p.c. cycle", self.cycle));
        }
        let q = self.path.vertices();
        if !q.is_empty() && !is_pc_path(g, q) {
            return Err(format!("{} is not a p.c. path", self.path));
        }
        let cv = self.cycle.vertex_set();
        if q.iter().any(|v| cv.contains(v)) {
            return Err("cycle and path intersect".into());
        }
        let mut all = cv;
        all.extend(q.iter().copied());
        if all != *cover {
            return Err("cycle and path do not cover the vertex set".into());
        }
        if let Some(&head) = q.first() {
            let x = *self.cycle.ring().get(self.attach).ok_or("attach index out of range")?;
            let Some(cx) = g.colour(head, x) else {
                return Err(format!("head {head} not adjacent to cycle vertex {x}"));
            };
            if q.len() >= 2 && g.colour(head, q[1]) == Some(cx) {
                return Err(format!("attachment edge {head}-{x} repeats the colour of the path's first edge"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct DecomposeOptions {
    /// Maximum number of closure members explored.
    pub cap: usize,
    /// Node budget for the exhaustive fallback.
    pub oracle_budget: Option<u64>,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self { cap: 100_000, oracle_budget: None }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DecomposeRoute {
    /// Found among cycles of a closure member whose complement is an
    /// interval of that member; `member` indexes the closure order.
    Structural { member: usize },
    /// Found by exhaustive search inside `G[V(P)]`.
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub decomposition: CycleDecomposition,
    pub route: DecomposeRoute,
    /// Minimum colour degree of the graph.
    pub d: usize,
    /// Required number of cycle vertices.
    pub target: usize,
    /// Closure members inspected.
    pub explored: usize,
    /// Whether the closure was enumerated completely (maximality certified).
    pub closure_complete: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("invalid path: {0}")]
    InvalidPath(#[from] PathError),
    #[error("path has no crossing")]
    NoCrossing,
    #[error("path is not maximal: closure member extends to {0}")]
    NotMaximal(ColouredPath),
    #[error("minimum colour degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("exhaustive search ran out of budget")]
    Inconclusive,
    #[error("contract violation: {0}")]
    ContractViolation(String),
}

/// Cycles of `t` whose complement in `t` is an interval, each with the
/// complementary path oriented so its head hangs off the cycle by a path
/// edge. Yields `(closed cycle, path)`.
fn interval_cycles(t: &[Vertex]) -> Vec<(Vec<Vertex>, Vec<Vertex>)> {
    let l = t.len();
    let mut out = Vec::new();
    // (t_0 .. t_p, t_0)
    for p in 2..l {
        let mut c = t[..=p].to_vec();
        c.push(t[0]);
        out.push((c, t[p + 1..].to_vec()));
    }
    // (t_q .. t_{l-1}, t_q)
    for q in 1..l.saturating_sub(2) {
        let mut c = t[q..].to_vec();
        c.push(t[q]);
        out.push((c, t[..q].iter().rev().copied().collect()));
    }
    for p in 0..l {
        for q in p + 1..l {
            let gap = t[p + 1..q].to_vec();
            // (t_0 .. t_p, t_{l-1} .. t_q, t_0)
            let mut c = t[..=p].to_vec();
            c.extend(t[q..].iter().rev());
            c.push(t[0]);
            if c.len() >= 4 {
                out.push((c, gap.clone()));
            }
            // (t_0 .. t_p, t_q .. t_{l-1}, t_0)
            if q > p + 1 {
                let mut c = t[..=p].to_vec();
                c.extend(&t[q..]);
                c.push(t[0]);
                if c.len() >= 4 {
                    out.push((c, gap));
                }
            }
        }
    }
    out
}

fn attach_index(g: &EdgeColouredGraph, ring: &[Vertex], q: &[Vertex]) -> Option<usize> {
    let Some(&head) = q.first() else { return Some(0) };
    let next = q.get(1).and_then(|&w| g.colour(head, w));
    ring.iter().position(|&x| matches!(g.colour(head, x), Some(c) if Some(c) != next))
}

/// Cycle `C` plus spanning path `Q` of the rest of `V(P)` for a maximal p.c.
/// path with a crossing. For `d = 2` only a p.c. cycle in `G[V(P)]` is
/// produced. For `d >= 3` the cycle has at least `d` vertices, and at least
/// `d + 1` when `P` has at most `2d` vertices.
///
/// Closure members are inspected in breadth-first order for a cycle whose
/// complement is an interval; failing that, an exhaustive search over
/// `G[V(P)]` is run. Failure of both is reported as a contract violation.
pub fn crossing_decompose(
    g: &EdgeColouredGraph,
    path: &[Vertex],
    opts: &DecomposeOptions,
) -> Result<Decomposition, DecomposeError> {
    check_pc_path(g, path)?;
    if crossing_unchecked(g, path).is_none() {
        return Err(DecomposeError::NoCrossing);
    }
    let d = g.min_colour_degree().map_err(|_| DecomposeError::DegreeTooSmall(0))?;
    if d < 2 {
        return Err(DecomposeError::DegreeTooSmall(d));
    }
    let r = closure(g, path, ClosureKind::R, opts.cap)?;
    if let Some(e) = r.members.iter().find_map(|m| extension_unchecked(g, m.vertices())) {
        return Err(DecomposeError::NotMaximal(e));
    }
    let cover: BTreeSet<Vertex> = path.iter().copied().collect();
    let (sub, map) = g.induced_subgraph(&cover).expect("path vertices are in range");
    let all: BTreeSet<Vertex> = (0..sub.n()).collect();
    let lift = |vs: &[Vertex]| vs.iter().map(|&v| map[v]).collect::<Vec<_>>();

    if d == 2 {
        let hit = has_pc_cycle_of_length_at_least(&sub, 3, opts.oracle_budget)?;
        let Some(c) = hit.cycle else {
            return Err(if hit.exact {
                DecomposeError::ContractViolation("no p.c. cycle in G[V(P)]".into())
            } else {
                DecomposeError::Inconclusive
            });
        };
        let decomposition = CycleDecomposition {
            cycle: ColouredCycle::from_vec_unchecked(lift(c.closed_tuple())),
            path: ColouredPath::from_vec_unchecked(Vec::new()),
            attach: 0,
        };
        return Ok(Decomposition {
            decomposition,
            route: DecomposeRoute::Exhaustive,
            d,
            target: 3,
            explored: r.len(),
            closure_complete: r.complete,
        });
    }

    let target = if path.len() <= 2 * d { d + 1 } else { d };
    for (i, m) in r.members.iter().enumerate() {
        let best = interval_cycles(m.vertices())
            .into_iter()
            .filter(|(c, _)| c.len() > target && is_pc_cycle(g, c))
            .max_by_key(|(c, _)| c.len());
        if let Some((c, q)) = best {
            let ring = &c[..c.len() - 1];
            let Some(attach) = attach_index(g, ring, &q) else { continue };
            let decomposition = CycleDecomposition {
                cycle: ColouredCycle::from_vec_unchecked(c.clone()),
                path: ColouredPath::from_vec_unchecked(q),
                attach,
            };
            return Ok(Decomposition {
                decomposition,
                route: DecomposeRoute::Structural { member: i },
                d,
                target,
                explored: i + 1,
                closure_complete: r.complete,
            });
        }
    }

    let (hit, exact) = find_cycle_with_tail(&sub, &all, target, opts.oracle_budget)?;
    match hit {
        Some(w) => {
            let ring = lift(&w.ring);
            let mut closed = ring.clone();
            closed.push(ring[0]);
            Ok(Decomposition {
                decomposition: CycleDecomposition {
                    cycle: ColouredCycle::from_vec_unchecked(closed),
                    path: ColouredPath::from_vec_unchecked(lift(&w.path)),
                    attach: w.attach,
                },
                route: DecomposeRoute::Exhaustive,
                d,
                target,
                explored: r.len(),
                closure_complete: r.complete,
            })
        }
        None if exact => Err(DecomposeError::ContractViolation(format!(
            "no p.c. cycle on {target} or more vertices with an attached spanning path in G[V(P)]"
        ))),
        None => Err(DecomposeError::Inconclusive),
    }
}
