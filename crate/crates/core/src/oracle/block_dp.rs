//! Longest p.c. path length by dynamic programming over the block-cut tree.
//!
//! A simple path meets every block in a contiguous segment, and the blocks it
//! meets form a path in the block-cut tree. So it suffices to enumerate p.c.
//! segments inside each block (keyed by end vertices and end colours) and
//! glue them at cut vertices with differently coloured edges.

use std::collections::HashMap;

use crate::blocks::BlockDecomposition;

use super::dense::{mask_of, Budget, Dense, NO_COLOUR};

/// Max segment length per (start, first colour, end, last colour).
type Segments = HashMap<(usize, u32, usize, u32), usize>;

fn block_segments(d: &Dense, block: &[usize], budget: &mut Budget) -> Option<Segments> {
    let mask = mask_of(block.iter().copied());
    let mut out = Segments::new();
    let mut stack = Vec::with_capacity(block.len());
    for &s in block {
        stack.clear();
        stack.push(s);
        if !walk(d, mask, s, 1 << s, NO_COLOUR, NO_COLOUR, &mut stack, &mut out, budget) {
            return None;
        }
    }
    Some(out)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    d: &Dense,
    mask: u64,
    v: usize,
    visited: u64,
    first: u32,
    last: u32,
    stack: &mut Vec<usize>,
    out: &mut Segments,
    budget: &mut Budget,
) -> bool {
    if !budget.tick() {
        return false;
    }
    if stack.len() >= 2 {
        let e = out.entry((stack[0], first, v, last)).or_insert(0);
        *e = (*e).max(stack.len() - 1);
    }
    for &(w, c) in &d.nbrs[v] {
        if (mask & !visited) >> w & 1 == 0 || c == last {
            continue;
        }
        let f = if stack.len() == 1 { c } else { first };
        stack.push(w);
        let ok = walk(d, mask, w, visited | 1 << w, f, c, stack, out, budget);
        stack.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Best extension into a subtree, by the colour of its first edge.
#[derive(Default, Clone)]
struct Ext {
    by_colour: HashMap<u32, usize>,
}

impl Ext {
    fn add(&mut self, colour: u32, len: usize) {
        let e = self.by_colour.entry(colour).or_insert(0);
        *e = (*e).max(len);
    }

    /// Longest extension whose first edge avoids `forbidden`.
    fn query(&self, forbidden: u32) -> usize {
        self.by_colour
            .iter()
            .filter(|(&c, _)| c != forbidden)
            .map(|(_, &l)| l)
            .max()
            .unwrap_or(0)
    }
}

/// Length (in edges) of a longest p.c. path, or `None` if a block was too
/// large for the budget.
pub(crate) fn longest_length(d: &Dense, bd: &BlockDecomposition, budget: &mut Budget) -> Option<usize> {
    let nb = bd.blocks.len();
    let blocks_of = bd.blocks_of(d.n);

    // Root every component of the block-cut tree at a block; record parent
    // cut vertex per block and a top-down order.
    let mut parent: Vec<Option<usize>> = vec![None; nb];
    let mut seen = vec![false; nb];
    let mut order = Vec::with_capacity(nb);
    for root in 0..nb {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = vec![root];
        while let Some(b) = queue.pop() {
            order.push(b);
            for &c in &bd.blocks[b] {
                if Some(c) == parent[b] || !bd.cut_vertices.contains(&c) {
                    continue;
                }
                for &child in &blocks_of[c] {
                    if !seen[child] {
                        seen[child] = true;
                        parent[child] = Some(c);
                        queue.push(child);
                    }
                }
            }
        }
    }

    let mut segs = Vec::with_capacity(nb);
    for b in &bd.blocks {
        segs.push(block_segments(d, b, budget)?);
    }

    // ext[c]: paths leaving cut vertex c downwards, over all child blocks.
    // down[b]: paths starting at the parent cut of b and staying below it.
    let mut ext: Vec<Ext> = vec![Ext::default(); d.n];
    let mut down: Vec<Ext> = vec![Ext::default(); nb];
    let is_child_cut = |b: usize, v: usize| Some(v) != parent[b] && bd.cut_vertices.contains(&v);
    let mut best = 0;

    for &b in order.iter().rev() {
        let ext_at = |v: usize, colour: u32, ext: &[Ext]| {
            if is_child_cut(b, v) {
                ext[v].query(colour)
            } else {
                0
            }
        };
        for (&(a, fc, e, lc), &len) in &segs[b] {
            let tail = ext_at(e, lc, &ext);
            best = best.max(len + ext_at(a, fc, &ext) + tail);
            if Some(a) == parent[b] {
                down[b].add(fc, len + tail);
            }
        }
        if let Some(p) = parent[b] {
            for (&c, &l) in &down[b].by_colour {
                ext[p].add(c, l);
            }
        }
    }

    // Paths whose highest point is a cut vertex joining two child blocks.
    for c in bd.cut_vertices.iter().copied() {
        let children: Vec<usize> = blocks_of[c].iter().copied().filter(|&b| parent[b] == Some(c)).collect();
        for (i, &b1) in children.iter().enumerate() {
            for (&c1, &l1) in &down[b1].by_colour {
                best = best.max(l1);
                for &b2 in &children[i + 1..] {
                    for (&c2, &l2) in &down[b2].by_colour {
                        if c1 != c2 {
                            best = best.max(l1 + l2);
                        }
                    }
                }
            }
        }
    }
    Some(best)
}
