//! Closures of a path under rotations (and reflections), and growth of a
//! path until no member of its closure extends.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::graph::{EdgeColouredGraph, Vertex};
use crate::path::{check_pc_path, ColouredPath, PathError};

use super::{apply_f, apply_g, extension_unchecked, f_error, g_error};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ClosureKind {
    /// Rotations and reflections.
    R,
    /// Rotations only.
    RPrime,
}

#[derive(Clone, Debug)]
pub struct Closure {
    pub kind: ClosureKind,
    /// Members in discovery order, the input path first. For `R` every
    /// member is followed by its reflection.
    pub members: Vec<ColouredPath>,
    /// False when exploration stopped at the cap.
    pub complete: bool,
}

impl Closure {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, tuple: &[Vertex]) -> bool {
        self.members.iter().any(|m| m.vertices() == tuple)
    }
}

fn rotations(g: &EdgeColouredGraph, p: &[Vertex], use_f: bool, use_g: bool, out: &mut Vec<Vec<Vertex>>) {
    let l = p.len();
    if use_f {
        for i in 3..=l {
            if f_error(g, p, i).is_none() {
                out.push(apply_f(p, i));
            }
        }
    }
    if use_g {
        for j in 1..l.saturating_sub(1) {
            if g_error(g, p, j).is_none() {
                out.push(apply_g(p, j));
            }
        }
    }
}

fn canonical(mut t: Vec<Vertex>) -> Vec<Vertex> {
    let r: Vec<Vertex> = t.iter().rev().copied().collect();
    if r < t {
        t = r;
    }
    t
}

/// Breadth-first closure of `path`. `cap` bounds the number of stored
/// tuples (reflection pairs count once for `R`).
pub fn closure(g: &EdgeColouredGraph, path: &[Vertex], kind: ClosureKind, cap: usize) -> Result<Closure, PathError> {
    check_pc_path(g, path)?;
    let key = |t: Vec<Vertex>| match kind {
        ClosureKind::R => canonical(t),
        ClosureKind::RPrime => t,
    };
    let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
    let mut order: Vec<Vec<Vertex>> = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(key(path.to_vec()));
    order.push(path.to_vec());
    queue.push_back(path.to_vec());
    let mut complete = true;
    let mut next = Vec::new();
    'bfs: while let Some(t) = queue.pop_front() {
        next.clear();
        rotations(g, &t, true, true, &mut next);
        if kind == ClosureKind::R {
            let r: Vec<Vertex> = t.iter().rev().copied().collect();
            rotations(g, &r, true, true, &mut next);
        }
        for n in next.drain(..) {
            if seen.contains(&key(n.clone())) {
                continue;
            }
            if seen.len() >= cap {
                complete = false;
                break 'bfs;
            }
            seen.insert(key(n.clone()));
            order.push(n.clone());
            queue.push_back(n);
        }
    }
    let members = match kind {
        ClosureKind::RPrime => order.into_iter().map(ColouredPath::from_vec_unchecked).collect(),
        ClosureKind::R => order
            .into_iter()
            .flat_map(|t| {
                let r: Vec<Vertex> = t.iter().rev().copied().collect();
                [ColouredPath::from_vec_unchecked(t), ColouredPath::from_vec_unchecked(r)]
            })
            .collect(),
    };
    Ok(Closure { kind, members, complete })
}

/// `X(P)` and `Y(P)`: first and last vertices over the members of a
/// closure (meaningful for `R'`).
pub fn endpoint_sets(c: &Closure) -> (BTreeSet<Vertex>, BTreeSet<Vertex>) {
    let xs = c.members.iter().map(ColouredPath::first).collect();
    let ys = c.members.iter().map(ColouredPath::last).collect();
    (xs, ys)
}

fn closure_with(g: &EdgeColouredGraph, seeds: Vec<Vec<Vertex>>, use_f: bool, cap: usize) -> (HashSet<Vec<Vertex>>, bool) {
    let mut seen: HashSet<Vec<Vertex>> = seeds.iter().cloned().collect();
    let mut queue: VecDeque<Vec<Vertex>> = seeds.into();
    let mut next = Vec::new();
    while let Some(t) = queue.pop_front() {
        next.clear();
        rotations(g, &t, use_f, !use_f, &mut next);
        for n in next.drain(..) {
            if seen.contains(&n) {
                continue;
            }
            if seen.len() >= cap {
                return (seen, false);
            }
            seen.insert(n.clone());
            queue.push_back(n);
        }
    }
    (seen, true)
}

/// Paths reachable by a run of `f` rotations followed by a run of `g`
/// rotations (or the other way round when `f_first` is false). Returns the
/// set and whether it was enumerated within `cap`.
pub fn two_phase_closure(
    g: &EdgeColouredGraph,
    path: &[Vertex],
    f_first: bool,
    cap: usize,
) -> Result<(BTreeSet<Vec<Vertex>>, bool), PathError> {
    check_pc_path(g, path)?;
    let (first, ok1) = closure_with(g, vec![path.to_vec()], f_first, cap);
    let (second, ok2) = closure_with(g, first.into_iter().collect(), !f_first, cap);
    Ok((second.into_iter().collect(), ok1 && ok2))
}

#[derive(Clone, Debug)]
pub struct Maximal {
    pub path: ColouredPath,
    /// True when the whole closure `R` of the result was enumerated and no
    /// member extends.
    pub certified: bool,
    /// Number of one-vertex extensions performed.
    pub extensions: usize,
}

/// Extends `path` greedily, rotating whenever the path itself is stuck,
/// until no explored member of its closure `R` is extensible.
pub fn extend_to_maximal(g: &EdgeColouredGraph, path: &[Vertex], cap: usize) -> Result<Maximal, PathError> {
    check_pc_path(g, path)?;
    let mut current = path.to_vec();
    let mut extensions = 0;
    loop {
        if let Some(e) = extension_unchecked(g, &current) {
            current = e.into_vec();
            extensions += 1;
            continue;
        }
        let c = closure(g, &current, ClosureKind::R, cap)?;
        match c.members.iter().find_map(|m| extension_unchecked(g, m.vertices())) {
            Some(e) => {
                current = e.into_vec();
                extensions += 1;
            }
            None => {
                return Ok(Maximal {
                    path: ColouredPath::from_vec_unchecked(current),
                    certified: c.complete,
                    extensions,
                })
            }
        }
    }
}
