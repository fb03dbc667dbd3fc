//! Simple undirected graphs with one integer colour per edge.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex ids are `0..n`.
pub type Vertex = usize;

/// An opaque, non-negative colour id. Ids need not be contiguous.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Colour(pub u64);

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {0}-{1} not present")]
    MissingEdge(Vertex, Vertex),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph has no edges")]
    Edgeless,
}

/// A simple edge-coloured graph.
///
/// Adjacency lists are kept sorted by neighbour id, so `colour` is a binary
/// search and iteration order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EdgeColouredGraph {
    adj: Vec<Vec<(Vertex, Colour)>>,
    m: usize,
}

impl EdgeColouredGraph {
    pub fn new(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from `(u, v, colour)` triples, rejecting loops and
    /// duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, u64)>,
    {
        let mut g = Self::new(n);
        for (u, v, c) in edges {
            g.add_edge(u, v, Colour(c))?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, colour: Colour) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let pos_u = match self.adj[u].binary_search_by_key(&v, |&(w, _)| w) {
            Ok(_) => return Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(p) => p,
        };
        self.adj[u].insert(pos_u, (v, colour));
        let pos_v = self.adj[v]
            .binary_search_by_key(&u, |&(w, _)| w)
            .unwrap_err();
        self.adj[v].insert(pos_v, (u, colour));
        self.m += 1;
        Ok(())
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Colour of edge `uv`, or `None` when absent or out of range.
    pub fn colour(&self, u: Vertex, v: Vertex) -> Option<Colour> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.colour(u, v).is_some()
    }

    /// Neighbours of `v` with edge colours, sorted by neighbour id.
    pub fn neighbours(&self, v: Vertex) -> &[(Vertex, Colour)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// All edges as `(u, v, colour)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Colour)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&(v, _)| u < v)
                .map(move |&(v, c)| (u, v, c))
        })
    }

    /// Distinct colours present on edges, ascending.
    pub fn colours(&self) -> BTreeSet<Colour> {
        self.edges().map(|(_, _, c)| c).collect()
    }

    /// Number of distinct colours on edges incident to `v`.
    pub fn colour_degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.incident_colours(v).len())
    }

    /// Distinct colours at `v`, ascending.
    pub fn incident_colours(&self, v: Vertex) -> BTreeSet<Colour> {
        self.adj[v].iter().map(|&(_, c)| c).collect()
    }

    /// Minimum colour degree over all vertices; 0 if some vertex is isolated.
    pub fn min_colour_degree(&self) -> Result<usize, GraphError> {
        if self.n() == 0 {
            return Err(GraphError::Empty);
        }
        Ok((0..self.n())
            .map(|v| self.incident_colours(v).len())
            .min()
            .unwrap_or(0))
    }

    /// Degree of `v` in the subgraph formed by edges of `colour`.
    pub fn colour_class_degree(&self, v: Vertex, colour: Colour) -> usize {
        self.adj[v].iter().filter(|&&(_, c)| c == colour).count()
    }

    /// Spanning subgraph containing only the edges of `colour`.
    pub fn colour_class(&self, colour: Colour) -> EdgeColouredGraph {
        let mut g = EdgeColouredGraph::new(self.n());
        for (u, v, c) in self.edges() {
            if c == colour {
                g.add_edge(u, v, c).expect("subgraph of a simple graph is simple");
            }
        }
        g
    }

    /// Subgraph induced by `vertices`, relabelled to `0..k` in ascending
    /// order of the original ids. The second value maps new ids to old ids.
    pub fn induced_subgraph(
        &self,
        vertices: &BTreeSet<Vertex>,
    ) -> Result<(EdgeColouredGraph, Vec<Vertex>), GraphError> {
        if let Some(&v) = vertices.iter().next_back() {
            self.check_vertex(v)?;
        }
        let map: Vec<Vertex> = vertices.iter().copied().collect();
        let mut inverse = vec![usize::MAX; self.n()];
        for (new, &old) in map.iter().enumerate() {
            inverse[old] = new;
        }
        let mut g = EdgeColouredGraph::new(map.len());
        for (new_u, &old_u) in map.iter().enumerate() {
            for &(old_v, c) in &self.adj[old_u] {
                let new_v = inverse[old_v];
                if new_v != usize::MAX && new_u < new_v {
                    g.add_edge(new_u, new_v, c)?;
                }
            }
        }
        Ok((g, map))
    }

    /// Removes `v` and relabels the remaining vertices compactly.
    pub fn remove_vertex(&self, v: Vertex) -> Result<(EdgeColouredGraph, Vec<Vertex>), GraphError> {
        self.check_vertex(v)?;
        let keep: BTreeSet<Vertex> = (0..self.n()).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn remove_edge(&self, u: Vertex, v: Vertex) -> Result<EdgeColouredGraph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&(w, _)| w != v);
        g.adj[v].retain(|&(w, _)| w != u);
        g.m -= 1;
        Ok(g)
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(None)
    }

    /// Components of `G - z` (or of `G` when `z` is `None`).
    pub fn components_avoiding(&self, z: Option<Vertex>) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        if let Some(z) = z {
            seen[z] = true;
        }
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &EdgeColouredGraph) -> EdgeColouredGraph {
        let shift = self.n();
        let mut g = self.clone();
        g.adj.extend((0..other.n()).map(|_| Vec::new()));
        for (u, v, c) in other.edges() {
            g.add_edge(u + shift, v + shift, c)
                .expect("shifted edges are fresh");
        }
        g
    }

    /// Colour histogram at `v`: colour -> number of incident edges.
    pub fn colour_profile(&self, v: Vertex) -> BTreeMap<Colour, usize> {
        let mut m = BTreeMap::new();
        for &(_, c) in &self.adj[v] {
            *m.entry(c).or_insert(0) += 1;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rainbow_k(n: usize) -> EdgeColouredGraph {
        let mut g = EdgeColouredGraph::new(n);
        let mut c = 0;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v, Colour(c)).unwrap();
                c += 1;
            }
        }
        g
    }

    #[test]
    fn add_edge_and_errors() {
        let mut g = EdgeColouredGraph::new(2);
        g.add_edge(0, 1, Colour(5)).unwrap();
        assert_eq!(g.colour(1, 0), Some(Colour(5)));
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.add_edge(0, 0, Colour(1)), Err(GraphError::Loop(0)));
        assert_eq!(
            g.add_edge(1, 0, Colour(1)),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            g.add_edge(0, 2, Colour(1)),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn colour_degrees() {
        let k3 = rainbow_k(3);
        for v in 0..3 {
            assert_eq!(k3.colour_degree(v).unwrap(), 2);
        }
        let star = EdgeColouredGraph::from_edges(6, (1..6).map(|v| (0, v, 9))).unwrap();
        assert_eq!(star.colour_degree(0).unwrap(), 1);
        assert_eq!(star.min_colour_degree().unwrap(), 1);
        assert!(star.colour_degree(6).is_err());
        assert_eq!(EdgeColouredGraph::new(0).min_colour_degree(), Err(GraphError::Empty));
        assert_eq!(EdgeColouredGraph::new(3).min_colour_degree().unwrap(), 0);
    }

    #[test]
    fn union_of_rainbow_cliques() {
        let g = rainbow_k(4).disjoint_union(&rainbow_k(4));
        assert_eq!(g.n(), 8);
        assert_eq!(g.min_colour_degree().unwrap(), 3);
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn surgery() {
        let k2 = EdgeColouredGraph::from_edges(2, [(0, 1, 3)]).unwrap();
        let (g, map) = k2.remove_vertex(1).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(map, vec![0]);

        let k4 = rainbow_k(4);
        let all: BTreeSet<_> = (0..4).collect();
        let (same, map) = k4.induced_subgraph(&all).unwrap();
        assert_eq!(same, k4);
        assert_eq!(map, vec![0, 1, 2, 3]);

        let sub: BTreeSet<_> = [1, 3].into_iter().collect();
        let (h, map) = k4.induced_subgraph(&sub).unwrap();
        assert_eq!(map, vec![1, 3]);
        assert_eq!(h.colour(0, 1), k4.colour(1, 3));

        let e = k4.remove_edge(0, 1).unwrap();
        assert_eq!(e.edge_count(), 5);
        assert!(!e.has_edge(1, 0));
        assert_eq!(e.remove_edge(0, 1), Err(GraphError::MissingEdge(0, 1)));
    }

    #[test]
    fn edges_sorted() {
        let g = EdgeColouredGraph::from_edges(4, [(3, 2, 1), (0, 3, 2), (1, 0, 0)]).unwrap();
        let e: Vec<_> = g.edges().map(|(u, v, c)| (u, v, c.0)).collect();
        assert_eq!(e, vec![(0, 1, 0), (0, 3, 2), (2, 3, 1)]);
    }
}
