//! Blocks (biconnected components) and cut vertices.

use std::collections::BTreeSet;

use crate::graph::{EdgeColouredGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, each sorted. Bridges form 2-vertex blocks
    /// and isolated vertices form singleton blocks.
    pub blocks: Vec<Vec<Vertex>>,
    /// Vertices lying in two or more blocks.
    pub cut_vertices: BTreeSet<Vertex>,
}

impl BlockDecomposition {
    /// For every vertex, the indices of the blocks containing it.
    pub fn blocks_of(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v].push(i);
            }
        }
        out
    }

    pub fn largest_block(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Hopcroft-Tarjan block decomposition with an explicit stack.
pub fn block_decomposition(g: &EdgeColouredGraph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if g.degree(root) == 0 {
            blocks.push(vec![root]);
            continue;
        }
        // (vertex, parent, next neighbour index)
        let mut frames: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = frames.last_mut() {
            let (v, parent, i) = *frame;
            if i < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbours(v)[i].0;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(u, _, _)) = frames.last() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut set = BTreeSet::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        set.insert(a);
                        set.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    blocks.push(set.into_iter().collect());
                }
            }
        }
    }

    let mut count = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            count[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| count[v] >= 2).collect();
    BlockDecomposition { blocks, cut_vertices }
}
