//! Path and cycle tuples plus the properly-coloured and rainbow predicates.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeColouredGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("empty vertex sequence")]
    Empty,
    #[error("vertex {0} repeated")]
    Repeated(Vertex),
    #[error("vertex {0} out of range")]
    OutOfRange(Vertex),
    #[error("{0}-{1} is not an edge")]
    MissingEdge(Vertex, Vertex),
    #[error("edges meeting at {0} share a colour")]
    ColourClash(Vertex),
    #[error("cycle must close on its first vertex and have length at least 3")]
    NotClosed,
}

/// A properly coloured path stored as its vertex tuple `(i_1, ..., i_l)`.
///
/// The path length is `l - 1`. Construction through [`ColouredPath::new`]
/// guarantees validity in the given graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColouredPath(Vec<Vertex>);

impl ColouredPath {
    pub fn new(g: &EdgeColouredGraph, vertices: Vec<Vertex>) -> Result<Self, PathError> {
        check_pc_path(g, &vertices)?;
        Ok(Self(vertices))
    }

    /// Wraps a tuple without checking it against any graph.
    pub fn from_vec_unchecked(vertices: Vec<Vertex>) -> Self {
        Self(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.0.len()
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        *self.0.last().expect("paths are non-empty")
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.0.iter().copied().collect()
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        Self(v)
    }

    /// The orientation with the lexicographically smaller tuple.
    pub fn canonical(&self) -> Self {
        let r = self.reversed();
        if r < *self {
            r
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for ColouredPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// A properly coloured cycle stored as `(i_1, ..., i_l, i_1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColouredCycle(Vec<Vertex>);

impl ColouredCycle {
    /// `closed` must repeat its first vertex at the end.
    pub fn new(g: &EdgeColouredGraph, closed: Vec<Vertex>) -> Result<Self, PathError> {
        check_pc_cycle(g, &closed)?;
        Ok(Self(closed))
    }

    pub fn from_vec_unchecked(closed: Vec<Vertex>) -> Self {
        Self(closed)
    }

    /// Closes an open vertex ring `(i_1, ..., i_l)` and validates it.
    pub fn from_ring(g: &EdgeColouredGraph, ring: &[Vertex]) -> Result<Self, PathError> {
        let mut closed = ring.to_vec();
        if let Some(&f) = ring.first() {
            closed.push(f);
        }
        Self::new(g, closed)
    }

    pub fn closed_tuple(&self) -> &[Vertex] {
        &self.0
    }

    /// Distinct vertices in cycle order, without the closing repeat.
    pub fn ring(&self) -> &[Vertex] {
        &self.0[..self.0.len() - 1]
    }

    /// Number of edges, equal to the number of distinct vertices.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.ring().iter().copied().collect()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl fmt::Display for ColouredCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, t: &[Vertex]) -> fmt::Result {
    for (i, v) in t.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

pub(crate) fn check_pc_path(g: &EdgeColouredGraph, seq: &[Vertex]) -> Result<(), PathError> {
    if seq.is_empty() {
        return Err(PathError::Empty);
    }
    let mut seen = BTreeSet::new();
    for &v in seq {
        if v >= g.n() {
            return Err(PathError::OutOfRange(v));
        }
        if !seen.insert(v) {
            return Err(PathError::Repeated(v));
        }
    }
    let mut prev = None;
    for w in seq.windows(2) {
        let c = g.colour(w[0], w[1]).ok_or(PathError::MissingEdge(w[0], w[1]))?;
        if prev == Some(c) {
            return Err(PathError::ColourClash(w[0]));
        }
        prev = Some(c);
    }
    Ok(())
}

pub(crate) fn check_pc_cycle(g: &EdgeColouredGraph, closed: &[Vertex]) -> Result<(), PathError> {
    if closed.len() < 4 || closed.first() != closed.last() {
        return Err(PathError::NotClosed);
    }
    let ring = &closed[..closed.len() - 1];
    check_pc_path(g, ring)?;
    let l = ring.len();
    let close = g
        .colour(ring[l - 1], ring[0])
        .ok_or(PathError::MissingEdge(ring[l - 1], ring[0]))?;
    let into_last = g.colour(ring[l - 2], ring[l - 1]).expect("checked");
    let out_of_first = g.colour(ring[0], ring[1]).expect("checked");
    if close == into_last {
        return Err(PathError::ColourClash(ring[l - 1]));
    }
    if close == out_of_first {
        return Err(PathError::ColourClash(ring[0]));
    }
    Ok(())
}

/// True iff `seq` is a properly coloured path in `g`. A single vertex is a
/// path of length 0; malformed sequences give `false`.
pub fn is_pc_path(g: &EdgeColouredGraph, seq: &[Vertex]) -> bool {
    check_pc_path(g, seq).is_ok()
}

/// True iff `seq = (i_1, ..., i_l, i_1)` is a properly coloured cycle,
/// including the wrap-around pair at `i_1`.
pub fn is_pc_cycle(g: &EdgeColouredGraph, seq: &[Vertex]) -> bool {
    check_pc_cycle(g, seq).is_ok()
}

/// True iff all edges of `G[U]` carry pairwise distinct colours.
pub fn is_rainbow(g: &EdgeColouredGraph, vertices: &BTreeSet<Vertex>) -> bool {
    let mut seen = BTreeSet::new();
    for &u in vertices {
        if u >= g.n() {
            return false;
        }
        for &(v, c) in g.neighbours(u) {
            if u < v && vertices.contains(&v) && !seen.insert(c) {
                return false;
            }
        }
    }
    true
}
