//! Colour neighbourhoods: one representative neighbour per incident colour.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Colour, EdgeColouredGraph, Vertex};
use crate::path::{check_pc_path, PathError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NeighbourhoodError {
    #[error("vertex {0} out of range")]
    OutOfRange(Vertex),
    #[error("forced vertex {forced} is not a neighbour of {vertex}")]
    NotNeighbour { vertex: Vertex, forced: Vertex },
    #[error("forced vertices {0} and {1} share colour {2}")]
    ForcedClash(Vertex, Vertex, Colour),
}

/// Which end of a path tuple.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum End {
    First,
    Last,
}

/// A colour neighbourhood of `vertex`: exactly one adjacent vertex for each
/// colour present at `vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColourNeighbourhoodChoice {
    pub vertex: Vertex,
    pub representatives: BTreeMap<Colour, Vertex>,
}

impl ColourNeighbourhoodChoice {
    /// Builds the deterministic choice: forced vertices first, then the
    /// smallest neighbour id for every remaining colour.
    pub fn build(
        g: &EdgeColouredGraph,
        vertex: Vertex,
        forced: &[Vertex],
    ) -> Result<Self, NeighbourhoodError> {
        let mut representatives = forced_map(g, vertex, forced)?;
        for &(w, c) in g.neighbours(vertex) {
            representatives.entry(c).or_insert(w);
        }
        Ok(Self { vertex, representatives })
    }

    /// Every valid choice containing `forced`. Exponential in the colour
    /// degree; intended for brute-force checks on small graphs.
    pub fn enumerate(
        g: &EdgeColouredGraph,
        vertex: Vertex,
        forced: &[Vertex],
    ) -> Result<Vec<Self>, NeighbourhoodError> {
        let fixed = forced_map(g, vertex, forced)?;
        let mut classes: BTreeMap<Colour, Vec<Vertex>> = BTreeMap::new();
        for &(w, c) in g.neighbours(vertex) {
            if !fixed.contains_key(&c) {
                classes.entry(c).or_default().push(w);
            }
        }
        let mut out = vec![fixed];
        for (c, members) in classes {
            out = out
                .into_iter()
                .flat_map(|partial| {
                    members.iter().map(move |&w| {
                        let mut next = partial.clone();
                        next.insert(c, w);
                        next
                    })
                })
                .collect();
        }
        Ok(out
            .into_iter()
            .map(|representatives| Self { vertex, representatives })
            .collect())
    }

    pub fn members(&self) -> BTreeSet<Vertex> {
        self.representatives.values().copied().collect()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.representatives.values().any(|&w| w == v)
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Checks the choice against `g`: one representative per colour at the
    /// vertex, each joined by an edge of its key colour, forced members kept.
    pub fn is_valid(&self, g: &EdgeColouredGraph, forced: &[Vertex]) -> bool {
        if self.vertex >= g.n() {
            return false;
        }
        let colours = g.incident_colours(self.vertex);
        if colours.len() != self.representatives.len() {
            return false;
        }
        let consistent = self
            .representatives
            .iter()
            .all(|(&c, &w)| g.colour(self.vertex, w) == Some(c));
        consistent && forced.iter().all(|&f| self.contains(f))
    }
}

fn forced_map(
    g: &EdgeColouredGraph,
    vertex: Vertex,
    forced: &[Vertex],
) -> Result<BTreeMap<Colour, Vertex>, NeighbourhoodError> {
    if vertex >= g.n() {
        return Err(NeighbourhoodError::OutOfRange(vertex));
    }
    let mut map = BTreeMap::new();
    for &f in forced {
        let c = g
            .colour(vertex, f)
            .ok_or(NeighbourhoodError::NotNeighbour { vertex, forced: f })?;
        match map.get(&c) {
            Some(&other) if other != f => {
                return Err(NeighbourhoodError::ForcedClash(other, f, c));
            }
            _ => {
                map.insert(c, f);
            }
        }
    }
    Ok(map)
}

/// The path neighbour of the chosen end, if the path has an edge.
pub(crate) fn end_and_neighbour(path: &[Vertex], end: End) -> (Vertex, Option<Vertex>) {
    match end {
        End::First => (path[0], path.get(1).copied()),
        End::Last => {
            let l = path.len();
            (path[l - 1], if l >= 2 { Some(path[l - 2]) } else { None })
        }
    }
}

/// All vertices that belong to at least one admissible colour neighbourhood
/// of the chosen endpoint: the path neighbour itself, plus every neighbour
/// whose edge colour differs from the path edge at that end.
pub fn eligible_endpoint_set(
    g: &EdgeColouredGraph,
    path: &[Vertex],
    end: End,
) -> Result<BTreeSet<Vertex>, PathError> {
    check_pc_path(g, path)?;
    Ok(eligible_unchecked(g, path, end))
}

pub(crate) fn eligible_unchecked(g: &EdgeColouredGraph, path: &[Vertex], end: End) -> BTreeSet<Vertex> {
    let (e, nb) = end_and_neighbour(path, end);
    let path_colour = nb.and_then(|w| g.colour(e, w));
    g.neighbours(e)
        .iter()
        .filter(|&&(w, c)| Some(w) == nb || Some(c) != path_colour)
        .map(|&(w, _)| w)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rainbow_k4() -> EdgeColouredGraph {
        EdgeColouredGraph::from_edges(
            4,
            [(0, 1, 0), (0, 2, 1), (0, 3, 2), (1, 2, 3), (1, 3, 4), (2, 3, 5)],
        )
        .unwrap()
    }

    #[test]
    fn eligible_sets() {
        let g = rainbow_k4();
        let last = eligible_endpoint_set(&g, &[0, 1, 2, 3], End::Last).unwrap();
        assert_eq!(last, [0, 1, 2].into_iter().collect());

        let mono = EdgeColouredGraph::from_edges(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
        assert!(eligible_endpoint_set(&mono, &[0, 1, 2], End::Last).is_err());

        let edge = EdgeColouredGraph::from_edges(2, [(0, 1, 1)]).unwrap();
        let first = eligible_endpoint_set(&edge, &[0, 1], End::First).unwrap();
        assert_eq!(first, [1].into_iter().collect());
    }

    #[test]
    fn eligible_excludes_same_coloured_non_neighbours() {
        // Star at 0: 1 and 2 coloured 7, 3 coloured 8.
        let g = EdgeColouredGraph::from_edges(4, [(0, 1, 7), (0, 2, 7), (0, 3, 8)]).unwrap();
        let set = eligible_endpoint_set(&g, &[0, 1], End::First).unwrap();
        assert_eq!(set, [1, 3].into_iter().collect());
    }

    #[test]
    fn choice_build_and_enumerate() {
        let g = EdgeColouredGraph::from_edges(5, [(0, 1, 7), (0, 2, 7), (0, 3, 8), (0, 4, 8)])
            .unwrap();
        let c = ColourNeighbourhoodChoice::build(&g, 0, &[]).unwrap();
        assert_eq!(c.members(), [1, 3].into_iter().collect());
        assert_eq!(c.len(), g.colour_degree(0).unwrap());
        let forced = ColourNeighbourhoodChoice::build(&g, 0, &[2]).unwrap();
        assert_eq!(forced.members(), [2, 3].into_iter().collect());
        assert!(forced.is_valid(&g, &[2]));
        assert!(!forced.is_valid(&g, &[1]));

        let all = ColourNeighbourhoodChoice::enumerate(&g, 0, &[]).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|c| c.is_valid(&g, &[])));
        let some = ColourNeighbourhoodChoice::enumerate(&g, 0, &[4]).unwrap();
        assert_eq!(some.len(), 2);

        assert_eq!(
            ColourNeighbourhoodChoice::build(&g, 0, &[1, 2]),
            Err(NeighbourhoodError::ForcedClash(1, 2, Colour(7)))
        );
        assert!(matches!(
            ColourNeighbourhoodChoice::build(&g, 1, &[2]),
            Err(NeighbourhoodError::NotNeighbour { .. })
        ));
    }
}
