//! Rotations, reflections and crossings of properly coloured path tuples.
//!
//! Positions are 1-based, matching the tuple `(1, 2, ..., l)` notation:
//! position `i` of a path `p` is `p[i - 1]`.
//!
//! * `f_i` fixes the last vertex and pivots at position `i`:
//!   `(p_{i-1}, ..., p_1, p_i, ..., p_l)`, valid when `p_1 p_i` is an edge
//!   and `c(p_1, p_2) != c(p_1, p_i) != c(p_i, p_{i+1})`.
//! * `g_j` fixes the first vertex and pivots at position `j`:
//!   `(p_1, ..., p_j, p_l, ..., p_{j+1})`, valid when `p_j p_l` is an edge
//!   and `c(p_l, p_{l-1}) != c(p_j, p_l) != c(p_{j-1}, p_j)`.
//!
//! As raw permutations `f_i` reverses the first `i - 1` entries and `g_j`
//! the last `l - j` entries.

mod closure;
mod lemmas;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{EdgeColouredGraph, Vertex};
use crate::neighbourhood::{eligible_unchecked, End};
use crate::path::{check_pc_path, ColouredPath, PathError};

pub use closure::{closure, endpoint_sets, extend_to_maximal, two_phase_closure, Closure, ClosureKind, Maximal};
pub use lemmas::{
    analyze_endpoints, crossing_decompose, lemma_simplecycle, AnalysisError, ClauseReport, CycleDecomposition,
    DecomposeError, DecomposeOptions, DecomposeRoute, Decomposition, EndpointAnalysis, Hypothesis, LemmaError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RotationError {
    #[error("position {pos} out of range {min}..={max}")]
    PositionOutOfRange { pos: usize, min: usize, max: usize },
    #[error("edge missing: {0}-{1} is not an edge")]
    MissingEdge(Vertex, Vertex),
    #[error("colour clash at vertex {0}")]
    ColourClash(Vertex),
    #[error("invalid path: {0}")]
    InvalidPath(#[from] PathError),
}

/// A single move on a path tuple.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    F(usize),
    G(usize),
    Reflect,
}

impl std::str::FromStr for Move {
    type Err = String;

    /// Parses `f:i`, `g:j` or `reflect`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "reflect" || s == "h" {
            return Ok(Move::Reflect);
        }
        let (kind, pos) = s.split_once(':').ok_or_else(|| format!("bad move `{s}`: expected f:i, g:j or reflect"))?;
        let pos: usize = pos.trim().parse().map_err(|_| format!("bad position in move `{s}`"))?;
        match kind.trim() {
            "f" => Ok(Move::F(pos)),
            "g" => Ok(Move::G(pos)),
            _ => Err(format!("bad move `{s}`: expected f:i, g:j or reflect")),
        }
    }
}

/// `f_i` as a pure permutation: reverse the first `i - 1` entries.
/// Any `i` in `1..=len` is accepted.
pub fn apply_f<T: Clone>(t: &[T], i: usize) -> Vec<T> {
    assert!(i >= 1 && i <= t.len(), "f_{i} on a {}-tuple", t.len());
    let mut out = t.to_vec();
    out[..i - 1].reverse();
    out
}

/// `g_j` as a pure permutation: reverse the last `len - j` entries.
/// Any `j` in `0..=len` is accepted.
pub fn apply_g<T: Clone>(t: &[T], j: usize) -> Vec<T> {
    assert!(j <= t.len(), "g_{j} on a {}-tuple", t.len());
    let mut out = t.to_vec();
    out[j..].reverse();
    out
}

/// Applies a move positionally, without any colour checks.
pub fn apply_positional<T: Clone>(t: &[T], m: Move) -> Result<Vec<T>, RotationError> {
    let l = t.len();
    match m {
        Move::F(i) if (1..=l).contains(&i) => Ok(apply_f(t, i)),
        Move::F(i) => Err(RotationError::PositionOutOfRange { pos: i, min: 1, max: l }),
        Move::G(j) if j <= l => Ok(apply_g(t, j)),
        Move::G(j) => Err(RotationError::PositionOutOfRange { pos: j, min: 0, max: l }),
        Move::Reflect => Ok(t.iter().rev().cloned().collect()),
    }
}

fn colour(g: &EdgeColouredGraph, u: Vertex, v: Vertex) -> Result<crate::graph::Colour, RotationError> {
    g.colour(u, v).ok_or(RotationError::MissingEdge(u, v))
}

/// Validity of `f_i` on a path already known to be p.c.
pub(crate) fn f_error(g: &EdgeColouredGraph, p: &[Vertex], i: usize) -> Option<RotationError> {
    let l = p.len();
    if i < 3 || i > l {
        return Some(RotationError::PositionOutOfRange { pos: i, min: 3, max: l });
    }
    let (first, pivot) = (p[0], p[i - 1]);
    let chord = match colour(g, first, pivot) {
        Ok(c) => c,
        Err(e) => return Some(e),
    };
    if g.colour(first, p[1]) == Some(chord) {
        return Some(RotationError::ColourClash(first));
    }
    if i < l && g.colour(pivot, p[i]) == Some(chord) {
        return Some(RotationError::ColourClash(pivot));
    }
    None
}

/// Validity of `g_j` on a path already known to be p.c.
pub(crate) fn g_error(g: &EdgeColouredGraph, p: &[Vertex], j: usize) -> Option<RotationError> {
    let l = p.len();
    if j < 1 || j + 2 > l {
        return Some(RotationError::PositionOutOfRange { pos: j, min: 1, max: l.saturating_sub(2) });
    }
    let (pivot, last) = (p[j - 1], p[l - 1]);
    let chord = match colour(g, pivot, last) {
        Ok(c) => c,
        Err(e) => return Some(e),
    };
    if g.colour(last, p[l - 2]) == Some(chord) {
        return Some(RotationError::ColourClash(last));
    }
    if j > 1 && g.colour(p[j - 2], pivot) == Some(chord) {
        return Some(RotationError::ColourClash(pivot));
    }
    None
}

/// `f_i(P)`; `i` ranges over `3..=l`.
pub fn rotate_f(g: &EdgeColouredGraph, path: &[Vertex], i: usize) -> Result<ColouredPath, RotationError> {
    check_pc_path(g, path)?;
    if let Some(e) = f_error(g, path, i) {
        return Err(e);
    }
    Ok(ColouredPath::from_vec_unchecked(apply_f(path, i)))
}

/// `g_j(P)`; `j` ranges over `1..=l-2`.
pub fn rotate_g(g: &EdgeColouredGraph, path: &[Vertex], j: usize) -> Result<ColouredPath, RotationError> {
    check_pc_path(g, path)?;
    if let Some(e) = g_error(g, path, j) {
        return Err(e);
    }
    Ok(ColouredPath::from_vec_unchecked(apply_g(path, j)))
}

pub fn reflect(g: &EdgeColouredGraph, path: &[Vertex]) -> Result<ColouredPath, RotationError> {
    check_pc_path(g, path)?;
    Ok(ColouredPath::from_vec_unchecked(path.iter().rev().copied().collect()))
}

/// Applies a validated move.
pub fn apply_move(g: &EdgeColouredGraph, path: &[Vertex], m: Move) -> Result<ColouredPath, RotationError> {
    match m {
        Move::F(i) => rotate_f(g, path, i),
        Move::G(j) => rotate_g(g, path, j),
        Move::Reflect => reflect(g, path),
    }
}

/// Positions (1-based) of a tuple's vertices lying in `set`.
pub(crate) fn positions_in(path: &[Vertex], set: &BTreeSet<Vertex>) -> Vec<usize> {
    path.iter()
        .enumerate()
        .filter(|(_, v)| set.contains(v))
        .map(|(i, _)| i + 1)
        .collect()
}

/// A crossing `(a, b)`: positions `a < b` with `p_a` eligible for the
/// colour neighbourhood of the last vertex and `p_b` for that of the first.
///
/// Pairs other than the ones formed by the path neighbours (`a = l-1` or
/// `b = 2`) are preferred; among those, the smallest `a`, then smallest `b`.
pub fn find_crossing(g: &EdgeColouredGraph, path: &[Vertex]) -> Result<Option<(usize, usize)>, PathError> {
    check_pc_path(g, path)?;
    Ok(crossing_unchecked(g, path))
}

pub(crate) fn crossing_unchecked(g: &EdgeColouredGraph, path: &[Vertex]) -> Option<(usize, usize)> {
    let l = path.len();
    if l < 2 {
        return None;
    }
    let last = positions_in(path, &eligible_unchecked(g, path, End::Last));
    let first = positions_in(path, &eligible_unchecked(g, path, End::First));
    let pairs = || last.iter().flat_map(|&a| first.iter().filter(move |&&b| a < b).map(move |&b| (a, b)));
    pairs().find(|&(a, b)| a + 1 != l && b != 2).or_else(|| pairs().next())
}

pub fn has_crossing(g: &EdgeColouredGraph, path: &[Vertex]) -> Result<bool, PathError> {
    Ok(find_crossing(g, path)?.is_some())
}

/// Some one-vertex extension of `path` at either end, if there is one.
/// Extensions at the last vertex are tried first, by ascending new vertex.
pub fn extension(g: &EdgeColouredGraph, path: &[Vertex]) -> Result<Option<ColouredPath>, PathError> {
    check_pc_path(g, path)?;
    Ok(extension_unchecked(g, path))
}

pub(crate) fn extension_unchecked(g: &EdgeColouredGraph, path: &[Vertex]) -> Option<ColouredPath> {
    let used: BTreeSet<Vertex> = path.iter().copied().collect();
    let l = path.len();
    let ends = [
        (path[l - 1], (l >= 2).then(|| path[l - 2]), true),
        (path[0], path.get(1).copied(), false),
    ];
    for (e, nb, at_end) in ends {
        let avoid = nb.and_then(|w| g.colour(e, w));
        if let Some(&(w, _)) = g.neighbours(e).iter().find(|&&(w, c)| !used.contains(&w) && Some(c) != avoid) {
            let mut v = path.to_vec();
            if at_end {
                v.push(w);
            } else {
                v.insert(0, w);
            }
            return Some(ColouredPath::from_vec_unchecked(v));
        }
    }
    None
}

pub fn is_extensible(g: &EdgeColouredGraph, path: &[Vertex]) -> Result<bool, PathError> {
    Ok(extension(g, path)?.is_some())
}
