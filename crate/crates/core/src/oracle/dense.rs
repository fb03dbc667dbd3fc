use std::collections::HashMap;

use crate::graph::{EdgeColouredGraph, Vertex};

use super::OracleError;

pub(crate) const NO_COLOUR: u32 = u32::MAX;

/// Largest graph the bitset searches accept.
pub const MAX_ORACLE_VERTICES: usize = 64;

/// Bitset adjacency with colours compressed to dense indices.
pub(crate) struct Dense {
    pub n: usize,
    pub adj: Vec<u64>,
    col: Vec<u32>,
    pub nbrs: Vec<Vec<(usize, u32)>>,
}

impl Dense {
    pub fn new(g: &EdgeColouredGraph) -> Result<Self, OracleError> {
        let n = g.n();
        if n > MAX_ORACLE_VERTICES {
            return Err(OracleError::TooLarge(n));
        }
        let mut ids = HashMap::new();
        let mut adj = vec![0u64; n];
        let mut col = vec![NO_COLOUR; n * n];
        let mut nbrs = vec![Vec::new(); n];
        for v in 0..n {
            for &(w, c) in g.neighbours(v) {
                let next = ids.len() as u32;
                let id = *ids.entry(c).or_insert(next);
                adj[v] |= 1 << w;
                col[v * n + w] = id;
                nbrs[v].push((w, id));
            }
        }
        Ok(Self { n, adj, col, nbrs })
    }

    pub fn full(&self) -> u64 {
        mask_below(self.n)
    }

    #[inline]
    pub fn colour(&self, u: Vertex, v: Vertex) -> u32 {
        self.col[u * self.n + v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Number of vertices of `free` reachable from `v` by walks whose
    /// interior stays inside `free`. `v` itself is not counted.
    pub fn reach(&self, v: Vertex, free: u64) -> u32 {
        let mut seen = self.adj[v] & free;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let b = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[b];
            }
            next &= free & !seen;
            seen |= next;
            frontier = next;
        }
        seen.count_ones()
    }
}

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_of(vertices: impl IntoIterator<Item = Vertex>) -> u64 {
    vertices.into_iter().fold(0, |m, v| m | 1 << v)
}

/// Counts search-node expansions against an optional limit.
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    pub used: u64,
    pub limit: Option<u64>,
    pub exhausted: bool,
}

impl Budget {
    pub fn new(limit: Option<u64>) -> Self {
        Self { used: 0, limit, exhausted: false }
    }

    /// Records one expansion; false once the limit has been passed.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.used += 1;
        if let Some(l) = self.limit {
            if self.used > l {
                self.exhausted = true;
            }
        }
        !self.exhausted
    }

    /// A budget for a sub-search, carrying over what remains.
    pub fn remaining(&self) -> Option<u64> {
        self.limit.map(|l| l.saturating_sub(self.used))
    }

    pub fn absorb(&mut self, other: &Budget) {
        self.used += other.used;
        self.exhausted |= other.exhausted;
    }
}
