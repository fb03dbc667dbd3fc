//! Exact search for a p.c. cycle plus an attached p.c. path covering a
//! vertex set.

use std::ops::ControlFlow;

use super::cycles::{visit_cycles, Exactly};
use super::dense::{Budget, Dense, NO_COLOUR};

pub(crate) struct Cover {
    pub ring: Vec<usize>,
    pub path: Vec<usize>,
    /// Index into `ring` of the cycle vertex the path head attaches to.
    pub attach: usize,
}

/// Hamiltonian p.c. path of `rest` whose head attaches to the cycle `ring`.
fn attached_path(d: &Dense, rest: u64, ring: &[usize], budget: &mut Budget) -> Option<(Vec<usize>, usize)> {
    let size = rest.count_ones() as usize;
    let mut heads = rest;
    while heads != 0 {
        let h = heads.trailing_zeros() as usize;
        heads &= heads - 1;
        if !ring.iter().any(|&x| d.has_edge(h, x)) {
            continue;
        }
        let mut stack = vec![h];
        let mut hit = None;
        let check = |p: &[usize]| {
            let next = p.get(1).map_or(NO_COLOUR, |&q| d.colour(h, q));
            ring.iter().position(|&x| d.has_edge(h, x) && d.colour(h, x) != next)
        };
        let _ = ham(d, rest, size, h, 1 << h, NO_COLOUR, &mut stack, budget, &mut |p| {
            match check(p) {
                Some(j) => {
                    hit = Some((p.to_vec(), j));
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            }
        });
        if hit.is_some() {
            return hit;
        }
        if budget.exhausted {
            return None;
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn ham(
    d: &Dense,
    within: u64,
    size: usize,
    v: usize,
    visited: u64,
    in_colour: u32,
    stack: &mut Vec<usize>,
    budget: &mut Budget,
    found: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if !budget.tick() {
        return ControlFlow::Break(());
    }
    if stack.len() == size {
        return found(stack);
    }
    let free = within & !visited;
    if (stack.len() + d.reach(v, free) as usize) < size {
        return ControlFlow::Continue(());
    }
    for &(w, c) in &d.nbrs[v] {
        if free >> w & 1 == 0 || c == in_colour {
            continue;
        }
        stack.push(w);
        let flow = ham(d, within, size, w, visited | 1 << w, c, stack, budget, found);
        stack.pop();
        if flow.is_break() {
            return flow;
        }
    }
    ControlFlow::Continue(())
}

/// Finds a p.c. cycle on at least `min_len` vertices of `within` together
/// with a p.c. path spanning the remaining vertices, attached per the
/// crossing lemma. Longer cycles are tried first.
pub(crate) fn find_cover(d: &Dense, within: u64, min_len: usize, budget: &mut Budget) -> Option<Cover> {
    let total = within.count_ones() as usize;
    for len in (min_len.max(3)..=total).rev() {
        let mut hit = None;
        let mut inner = Budget::new(budget.remaining());
        let mut visitor = Exactly {
            len,
            f: |ring: &[usize]| {
                let rest = within & !ring.iter().fold(0u64, |m, &v| m | 1 << v);
                if rest == 0 {
                    hit = Some(Cover { ring: ring.to_vec(), path: Vec::new(), attach: 0 });
                    return ControlFlow::Break(());
                }
                let mut sub = Budget::new(None);
                if let Some((path, attach)) = attached_path(d, rest, ring, &mut sub) {
                    hit = Some(Cover { ring: ring.to_vec(), path, attach });
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            },
        };
        visit_cycles(d, within, &mut inner, &mut visitor);
        budget.absorb(&inner);
        if hit.is_some() || budget.exhausted {
            return hit;
        }
    }
    None
}
