//! Yeo's cut-vertex structure for graphs without properly coloured cycles.
//!
//! A vertex `z` qualifies when every component of `G - z` is joined to `z`
//! by edges of at most one colour. Every p.c.-cycle-free graph has such a
//! vertex; conversely, if `z` qualifies and every component of `G - z` is
//! p.c.-cycle-free, so is `G` (a cycle through `z` would enter and leave
//! one component in the same colour). Recursing therefore certifies
//! acyclicity.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Colour, EdgeColouredGraph, Vertex};
use crate::oracle::{has_pc_cycle_of_length_at_least, OracleError};
use crate::path::ColouredCycle;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YeoCertificate {
    pub z: Vertex,
    /// Components of `G - z` with the single colour joining each to `z`
    /// (`None` when the component is not adjacent to `z`).
    pub components: Vec<(Vec<Vertex>, Option<Colour>)>,
}

fn joining_colours(g: &EdgeColouredGraph, z: Vertex, comp: &[Vertex]) -> BTreeSet<Colour> {
    let members: BTreeSet<Vertex> = comp.iter().copied().collect();
    g.neighbours(z).iter().filter(|(w, _)| members.contains(w)).map(|&(_, c)| c).collect()
}

fn certificate_at(g: &EdgeColouredGraph, z: Vertex) -> Option<YeoCertificate> {
    let mut components = Vec::new();
    for comp in g.components_avoiding(Some(z)) {
        let cols = joining_colours(g, z, &comp);
        if cols.len() > 1 {
            return None;
        }
        components.push((comp, cols.into_iter().next()));
    }
    Some(YeoCertificate { z, components })
}

/// The qualifying vertex with the smallest id, if any.
pub fn find_yeo_vertex(g: &EdgeColouredGraph) -> Option<YeoCertificate> {
    (0..g.n()).find_map(|z| certificate_at(g, z))
}

/// Recomputes everything a certificate claims: the listed components are
/// exactly those of `G - z`, and each is joined to `z` by its listed colour
/// only.
pub fn verify_certificate(g: &EdgeColouredGraph, cert: &YeoCertificate) -> bool {
    if cert.z >= g.n() {
        return false;
    }
    let mut listed: Vec<Vec<Vertex>> = cert.components.iter().map(|(c, _)| c.clone()).collect();
    listed.sort();
    let mut actual = g.components_avoiding(Some(cert.z));
    actual.sort();
    if listed != actual {
        return false;
    }
    cert.components.iter().all(|(comp, colour)| {
        let cols = joining_colours(g, cert.z, comp);
        match colour {
            Some(c) => cols.len() == 1 && cols.contains(c),
            None => cols.is_empty(),
        }
    })
}

/// One level of a recursive certificate, in original vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YeoStep {
    pub depth: usize,
    /// Vertex set of the subgraph this step certifies.
    pub vertices: Vec<Vertex>,
    pub certificate: YeoCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Acyclicity {
    /// Certificates for the whole graph and, depth first, every component
    /// with two or more vertices.
    Certified(Vec<YeoStep>),
    /// A p.c. cycle, in original labels.
    Cycle(ColouredCycle),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YeoError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("no qualifying vertex and no p.c. cycle in a subgraph on {0} vertices")]
    NoWitness(usize),
}

/// Either a recursive chain of certificates proving that `g` has no p.c.
/// cycle, or a p.c. cycle found by the oracle.
pub fn certify_acyclic(g: &EdgeColouredGraph) -> Result<Acyclicity, YeoError> {
    let mut steps = Vec::new();
    let all: Vec<Vertex> = (0..g.n()).collect();
    if g.n() == 0 {
        return Ok(Acyclicity::Certified(steps));
    }
    match descend(g, &all, 0, &mut steps)? {
        Some(c) => Ok(Acyclicity::Cycle(c)),
        None => Ok(Acyclicity::Certified(steps)),
    }
}

fn descend(
    h: &EdgeColouredGraph,
    labels: &[Vertex],
    depth: usize,
    steps: &mut Vec<YeoStep>,
) -> Result<Option<ColouredCycle>, YeoError> {
    let Some(cert) = find_yeo_vertex(h) else {
        let hit = has_pc_cycle_of_length_at_least(h, 3, None)?;
        let c = hit.cycle.ok_or(YeoError::NoWitness(h.n()))?;
        let lifted = c.closed_tuple().iter().map(|&v| labels[v]).collect();
        return Ok(Some(ColouredCycle::from_vec_unchecked(lifted)));
    };
    let lift = |vs: &[Vertex]| vs.iter().map(|&v| labels[v]).collect::<Vec<_>>();
    steps.push(YeoStep {
        depth,
        vertices: labels.to_vec(),
        certificate: YeoCertificate {
            z: labels[cert.z],
            components: cert.components.iter().map(|(c, col)| (lift(c), *col)).collect(),
        },
    });
    for (comp, _) in &cert.components {
        if comp.len() < 2 {
            continue;
        }
        let set: BTreeSet<Vertex> = comp.iter().copied().collect();
        let (sub, map) = h.induced_subgraph(&set).expect("component vertices are in range");
        let sub_labels: Vec<Vertex> = map.iter().map(|&v| labels[v]).collect();
        if let Some(c) = descend(&sub, &sub_labels, depth + 1, steps)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_rainbow_complete, gen_tilde};
    use crate::path::is_pc_cycle;

    #[test]
    fn tilde_hub_qualifies() {
        let g = gen_tilde(2, 3).unwrap();
        let cert = find_yeo_vertex(&g).unwrap();
        assert_eq!(cert.z, 0);
        assert_eq!(cert.components.len(), 3);
        let colours: BTreeSet<_> = cert.components.iter().map(|(_, c)| c.unwrap()).collect();
        assert_eq!(colours.len(), 3);
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn rainbow_k4_has_none() {
        assert!(find_yeo_vertex(&gen_rainbow_complete(4)).is_none());
    }

    #[test]
    fn single_vertex() {
        let cert = find_yeo_vertex(&EdgeColouredGraph::new(1)).unwrap();
        assert_eq!(cert.z, 0);
        assert!(cert.components.is_empty());
    }

    #[test]
    fn certify() {
        let g = gen_tilde(2, 5).unwrap();
        let Acyclicity::Certified(steps) = certify_acyclic(&g).unwrap() else { panic!("expected chain") };
        assert_eq!(steps[0].certificate.z, 0);
        assert_eq!(steps.len(), 6);
        let g = gen_rainbow_complete(3);
        let Acyclicity::Cycle(c) = certify_acyclic(&g).unwrap() else { panic!("expected cycle") };
        assert_eq!(c.closed_tuple(), &[0, 1, 2, 0]);
        assert!(is_pc_cycle(&g, c.closed_tuple()));
    }

    #[test]
    fn tampered_certificate_rejected() {
        let g = gen_tilde(2, 3).unwrap();
        let mut cert = find_yeo_vertex(&g).unwrap();
        cert.components[0].1 = Some(Colour(999));
        assert!(!verify_certificate(&g, &cert));
        cert.components.pop();
        assert!(!verify_certificate(&g, &cert));
    }
}
