//! Exact search for longest properly coloured paths and cycles.
//!
//! Graphs of up to [`MAX_ORACLE_VERTICES`] vertices are handled with bitset
//! state. Every search counts node expansions; with a budget, a search that
//! runs out reports `exact = false` together with the best witness so far.
//! Ties between equally long witnesses go to the lexicographically smallest
//! tuple (cycles are compared in canonical form: smallest vertex first, then
//! the smaller of its two neighbours).

mod block_dp;
mod cover;
mod cycles;
mod dense;
mod paths;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::blocks::block_decomposition;
use crate::graph::{EdgeColouredGraph, Vertex};
use crate::path::{ColouredCycle, ColouredPath};

use cycles::{visit_cycles, AtLeast, Longest};
use dense::{mask_of, Budget, Dense};

pub use dense::MAX_ORACLE_VERTICES;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {0} vertices; the exact oracle handles at most {MAX_ORACLE_VERTICES}")]
    TooLarge(usize),
    #[error("graph has no vertices")]
    Empty,
}

/// Blocks larger than this are not enumerated segment by segment.
const BLOCK_DP_MAX_BLOCK: usize = 10;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Node-expansion limit; `None` searches to completion.
    pub budget: Option<u64>,
    /// Fan root branches out over the rayon pool (unbudgeted runs only).
    pub parallel: bool,
    /// Use the block-cut tree when the graph has cut vertices.
    pub use_blocks: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { budget: None, parallel: true, use_blocks: true }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: Option<u64>) -> Self {
        Self { budget, ..Self::default() }
    }

    pub fn sequential() -> Self {
        Self { parallel: false, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSearch {
    pub path: ColouredPath,
    pub exact: bool,
    pub expansions: u64,
}

impl PathSearch {
    pub fn length(&self) -> usize {
        self.path.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSearch {
    pub cycle: Option<ColouredCycle>,
    pub exact: bool,
    pub expansions: u64,
}

impl CycleSearch {
    pub fn length(&self) -> Option<usize> {
        self.cycle.as_ref().map(ColouredCycle::len)
    }

    pub fn found(&self) -> bool {
        self.cycle.is_some()
    }
}

fn dense(g: &EdgeColouredGraph) -> Result<Dense, OracleError> {
    if g.n() == 0 {
        return Err(OracleError::Empty);
    }
    Dense::new(g)
}

fn closed(ring: &[usize]) -> ColouredCycle {
    let mut v = ring.to_vec();
    v.push(ring[0]);
    ColouredCycle::from_vec_unchecked(v)
}

pub fn longest_pc_path(g: &EdgeColouredGraph, budget: Option<u64>) -> Result<PathSearch, OracleError> {
    longest_pc_path_with(g, &SearchOptions::with_budget(budget))
}

pub fn longest_pc_path_with(g: &EdgeColouredGraph, opts: &SearchOptions) -> Result<PathSearch, OracleError> {
    let d = dense(g)?;
    let mut budget = Budget::new(opts.budget);
    let mut target = None;
    if opts.use_blocks {
        let bd = block_decomposition(g);
        if bd.blocks.len() >= 2 && bd.largest_block() <= BLOCK_DP_MAX_BLOCK {
            target = block_dp::longest_length(&d, &bd, &mut budget);
        }
    }
    let out = match target {
        Some(t) => paths::longest_path(&d, budget.remaining(), Some(t)),
        None if opts.parallel && opts.budget.is_none() => paths::longest_path_parallel(&d),
        None => paths::longest_path(&d, budget.remaining(), None),
    };
    budget.absorb(&out.budget);
    // A budget spent before the first expansion still leaves a trivial path.
    let path = if out.path.is_empty() { vec![0] } else { out.path };
    Ok(PathSearch {
        path: ColouredPath::from_vec_unchecked(path),
        exact: !budget.exhausted,
        expansions: budget.used,
    })
}

/// Length of a longest p.c. path computed by the block-cut tree dynamic
/// programme alone, without a witness. `None` if some block exceeds
/// `max_block` vertices.
pub fn longest_pc_path_length_by_blocks(
    g: &EdgeColouredGraph,
    max_block: usize,
) -> Result<Option<usize>, OracleError> {
    let d = dense(g)?;
    let bd = block_decomposition(g);
    if bd.largest_block() > max_block {
        return Ok(None);
    }
    Ok(block_dp::longest_length(&d, &bd, &mut Budget::new(None)))
}

/// Vertex masks of the blocks that could hold a cycle on `k` or more vertices.
fn cycle_blocks(g: &EdgeColouredGraph, k: usize) -> Vec<u64> {
    let mut masks: Vec<u64> = block_decomposition(g)
        .blocks
        .into_iter()
        .filter(|b| b.len() >= k.max(3))
        .map(mask_of)
        .collect();
    masks.sort_by_key(|m| m.trailing_zeros());
    masks
}

pub fn longest_pc_cycle(g: &EdgeColouredGraph, budget: Option<u64>) -> Result<CycleSearch, OracleError> {
    let d = dense(g)?;
    let mut b = Budget::new(budget);
    let mut best: Vec<usize> = Vec::new();
    let mut exact = true;
    for mask in cycle_blocks(g, 3) {
        // Equal-length rings in later blocks may still be lexicographically
        // smaller, so the floor admits ties.
        let mut v = Longest { best: Vec::new(), floor: best.len().max(3) };
        if !visit_cycles(&d, mask, &mut b, &mut v) {
            exact = false;
        }
        let better = v.best.len() > best.len() || (v.best.len() == best.len() && v.best < best);
        if !v.best.is_empty() && better {
            best = v.best;
        }
        if !exact {
            break;
        }
    }
    Ok(CycleSearch {
        cycle: (!best.is_empty()).then(|| closed(&best)),
        exact,
        expansions: b.used,
    })
}

/// Decides whether a p.c. cycle on at least `k` vertices exists, stopping at
/// the first witness. `exact` is false only when the budget ran out before
/// either a witness or exhaustion.
pub fn has_pc_cycle_of_length_at_least(
    g: &EdgeColouredGraph,
    k: usize,
    budget: Option<u64>,
) -> Result<CycleSearch, OracleError> {
    let d = dense(g)?;
    let mut b = Budget::new(budget);
    for mask in cycle_blocks(g, k) {
        let mut v = AtLeast { k: k.max(3), hit: None };
        visit_cycles(&d, mask, &mut b, &mut v);
        if let Some(ring) = v.hit {
            return Ok(CycleSearch { cycle: Some(closed(&ring)), exact: true, expansions: b.used });
        }
        if b.exhausted {
            return Ok(CycleSearch { cycle: None, exact: false, expansions: b.used });
        }
    }
    Ok(CycleSearch { cycle: None, exact: true, expansions: b.used })
}

pub fn has_pc_hamiltonian_cycle(g: &EdgeColouredGraph, budget: Option<u64>) -> Result<CycleSearch, OracleError> {
    let n = g.n();
    if n < 3 {
        dense(g)?;
        return Ok(CycleSearch { cycle: None, exact: true, expansions: 0 });
    }
    has_pc_cycle_of_length_at_least(g, n, budget)
}

/// A p.c. cycle together with a p.c. path that spans the rest of `within`,
/// the head of the path joined to cycle vertex `ring[attach]` by an edge
/// coloured differently from the path's first edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverWitness {
    pub ring: Vec<Vertex>,
    pub path: Vec<Vertex>,
    pub attach: usize,
}

/// Exhaustive search for a cycle on at least `min_len` vertices of `within`
/// plus an attached spanning path of the remainder. Longer cycles first.
pub fn find_cycle_with_tail(
    g: &EdgeColouredGraph,
    within: &BTreeSet<Vertex>,
    min_len: usize,
    budget: Option<u64>,
) -> Result<(Option<CoverWitness>, bool), OracleError> {
    let d = dense(g)?;
    let mut b = Budget::new(budget);
    let hit = cover::find_cover(&d, mask_of(within.iter().copied()), min_len, &mut b);
    let exact = hit.is_some() || !b.exhausted;
    Ok((hit.map(|c| CoverWitness { ring: c.ring, path: c.path, attach: c.attach }), exact))
}
