//! Depth-first branch and bound for longest properly coloured paths.
//!
//! Search state is (current vertex, incoming colour, visited set). Start
//! vertices and neighbours are tried in ascending order, so the first path
//! reaching a given length is the lexicographically smallest of that length;
//! the incumbent is only replaced by strictly longer paths.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::dense::{Budget, Dense, NO_COLOUR};

pub(crate) struct PathOutcome {
    pub path: Vec<usize>,
    pub budget: Budget,
}

struct Search<'a> {
    d: &'a Dense,
    stack: Vec<usize>,
    best: Vec<usize>,
    budget: Budget,
    /// When set, stop at the first path of this many edges.
    target: Option<usize>,
    done: bool,
}

impl Search<'_> {
    fn best_len(&self) -> isize {
        self.best.len() as isize - 1
    }

    fn dfs(&mut self, v: usize, visited: u64, in_colour: u32) {
        if self.done || !self.budget.tick() {
            self.done = true;
            return;
        }
        let len = self.stack.len() - 1;
        if len as isize > self.best_len() {
            self.best.clone_from(&self.stack);
            if self.target == Some(len) {
                self.done = true;
                return;
            }
        }
        let free = self.d.full() & !visited;
        let need = match self.target {
            Some(t) => t as isize,
            None => self.best_len() + 1,
        };
        if ((len + free.count_ones() as usize) as isize) < need {
            return;
        }
        if ((len + self.d.reach(v, free) as usize) as isize) < need {
            return;
        }
        for i in 0..self.d.nbrs[v].len() {
            let (w, c) = self.d.nbrs[v][i];
            if free >> w & 1 == 0 || c == in_colour {
                continue;
            }
            self.stack.push(w);
            self.dfs(w, visited | 1 << w, c);
            self.stack.pop();
            if self.done {
                return;
            }
        }
    }
}

/// Sequential exact search. With `target`, returns the lexicographically
/// first path having exactly `target` edges, if any.
pub(crate) fn longest_path(d: &Dense, limit: Option<u64>, target: Option<usize>) -> PathOutcome {
    let mut s = Search {
        d,
        stack: Vec::with_capacity(d.n),
        best: Vec::new(),
        budget: Budget::new(limit),
        target,
        done: false,
    };
    for start in 0..d.n {
        if s.best_len() >= d.n as isize - 1 {
            break;
        }
        s.stack.clear();
        s.stack.push(start);
        s.dfs(start, 1 << start, NO_COLOUR);
        if s.done {
            break;
        }
    }
    PathOutcome { path: s.best, budget: s.budget }
}

fn pack(len: usize, start: usize) -> u64 {
    ((len as u64) << 32) | (u32::MAX as u64 - start as u64)
}

struct ParSearch<'a> {
    d: &'a Dense,
    start: usize,
    stack: Vec<usize>,
    best: Vec<usize>,
    expansions: u64,
    global: &'a AtomicU64,
}

impl ParSearch<'_> {
    fn dfs(&mut self, v: usize, visited: u64, in_colour: u32) {
        self.expansions += 1;
        let len = self.stack.len() - 1;
        if len as isize > self.best.len() as isize - 1 {
            self.best.clone_from(&self.stack);
            self.global.fetch_max(pack(len, self.start), Ordering::Relaxed);
        }
        let free = self.d.full() & !visited;
        // A branch survives only if it could beat the global incumbent
        // under the (length desc, start asc) order.
        let g = self.global.load(Ordering::Relaxed);
        let bound = len + self.d.reach(v, free) as usize;
        if pack(bound, self.start) <= g {
            return;
        }
        for i in 0..self.d.nbrs[v].len() {
            let (w, c) = self.d.nbrs[v][i];
            if free >> w & 1 == 0 || c == in_colour {
                continue;
            }
            self.stack.push(w);
            self.dfs(w, visited | 1 << w, c);
            self.stack.pop();
        }
    }
}

/// Root-parallel exact search without a budget. Gives the same path as
/// [`longest_path`].
pub(crate) fn longest_path_parallel(d: &Dense) -> PathOutcome {
    let global = AtomicU64::new(0);
    let results: Vec<(Vec<usize>, u64)> = (0..d.n)
        .into_par_iter()
        .map(|start| {
            let mut s = ParSearch {
                d,
                start,
                stack: vec![start],
                best: Vec::new(),
                expansions: 0,
                global: &global,
            };
            s.dfs(start, 1 << start, NO_COLOUR);
            (s.best, s.expansions)
        })
        .collect();
    let mut budget = Budget::new(None);
    let mut best: Vec<usize> = Vec::new();
    for (path, used) in results {
        budget.used += used;
        if path.len() > best.len() {
            best = path;
        }
    }
    PathOutcome { path: best, budget }
}
