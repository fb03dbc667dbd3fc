//! Canonical enumeration of properly coloured cycles.
//!
//! Each cycle is generated once, as the ring starting at its smallest vertex
//! whose second vertex is smaller than its last. Rings are produced in
//! lexicographic order of that canonical tuple.

use std::ops::ControlFlow;

use super::dense::{Budget, Dense, NO_COLOUR};

pub(crate) trait CycleVisitor {
    /// Shortest ring length (vertex count) still worth generating.
    fn threshold(&self) -> usize;
    fn found(&mut self, ring: &[usize]) -> ControlFlow<()>;
}

struct Walk<'a, V> {
    d: &'a Dense,
    visitor: &'a mut V,
    budget: &'a mut Budget,
    start: usize,
    allowed: u64,
    stack: Vec<usize>,
    stop: bool,
}

impl<V: CycleVisitor> Walk<'_, V> {
    fn dfs(&mut self, v: usize, visited: u64, in_colour: u32, first_colour: u32) {
        if self.stop || !self.budget.tick() {
            self.stop = true;
            return;
        }
        let len = self.stack.len();
        let s = self.start;
        if len >= 3 && len >= self.visitor.threshold() && self.d.has_edge(v, s) && self.stack[1] < v {
            let c = self.d.colour(v, s);
            if c != in_colour && c != first_colour && self.visitor.found(&self.stack).is_break() {
                self.stop = true;
                return;
            }
        }
        let free = self.allowed & !visited;
        let need = self.visitor.threshold().max(3);
        if len + (free.count_ones() as usize) < need {
            return;
        }
        if len + (self.d.reach(v, free) as usize) < need {
            return;
        }
        for i in 0..self.d.nbrs[v].len() {
            let (w, c) = self.d.nbrs[v][i];
            if free >> w & 1 == 0 || c == in_colour {
                continue;
            }
            let first = if len == 1 { c } else { first_colour };
            self.stack.push(w);
            self.dfs(w, visited | 1 << w, c, first);
            self.stack.pop();
            if self.stop {
                return;
            }
        }
    }
}

/// Visits canonical p.c. cycles inside the vertex mask `within`. Returns
/// false if the visitor stopped early or the budget ran out.
pub(crate) fn visit_cycles<V: CycleVisitor>(
    d: &Dense,
    within: u64,
    budget: &mut Budget,
    visitor: &mut V,
) -> bool {
    let mut rest = within;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let allowed = rest;
        if 1 + (allowed.count_ones() as usize) < visitor.threshold().max(3) {
            break;
        }
        let mut walk = Walk {
            d,
            visitor: &mut *visitor,
            budget: &mut *budget,
            start: s,
            allowed,
            stack: vec![s],
            stop: false,
        };
        walk.dfs(s, 1 << s, NO_COLOUR, NO_COLOUR);
        if walk.stop {
            return false;
        }
    }
    true
}

/// Keeps the longest ring; ties keep the earliest, i.e. lexicographically
/// smallest canonical ring.
pub(crate) struct Longest {
    pub best: Vec<usize>,
    pub floor: usize,
}

impl CycleVisitor for Longest {
    fn threshold(&self) -> usize {
        (self.best.len() + 1).max(self.floor)
    }

    fn found(&mut self, ring: &[usize]) -> ControlFlow<()> {
        if ring.len() > self.best.len() {
            self.best = ring.to_vec();
        }
        ControlFlow::Continue(())
    }
}

/// Stops on the first ring of at least `k` vertices.
pub(crate) struct AtLeast {
    pub k: usize,
    pub hit: Option<Vec<usize>>,
}

impl CycleVisitor for AtLeast {
    fn threshold(&self) -> usize {
        self.k
    }

    fn found(&mut self, ring: &[usize]) -> ControlFlow<()> {
        self.hit = Some(ring.to_vec());
        ControlFlow::Break(())
    }
}

/// Feeds every ring of exactly `len` vertices to a callback.
pub(crate) struct Exactly<F> {
    pub len: usize,
    pub f: F,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> CycleVisitor for Exactly<F> {
    fn threshold(&self) -> usize {
        self.len
    }

    fn found(&mut self, ring: &[usize]) -> ControlFlow<()> {
        if ring.len() == self.len {
            (self.f)(ring)
        } else {
            ControlFlow::Continue(())
        }
    }
}
