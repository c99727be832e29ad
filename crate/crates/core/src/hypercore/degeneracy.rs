use std::collections::{BTreeMap, BTreeSet};

use super::Hypergraph;
use crate::{EdgeId, VertexId, VertexSet};

/// A min-degree peeling order of a hypergraph.
///
/// Each entry is a vertex together with its degree at the moment it left the
/// hypergraph. Vertices dropped as a side effect of shrinking away an earlier
/// vertex follow it immediately with degree 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrder {
    order: Vec<(VertexId, usize)>,
    degeneracy: usize,
}

impl DegeneracyOrder {
    pub fn order(&self) -> &[(VertexId, usize)] {
        &self.order
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// One `H := H ⊖ {v}` step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct PeelStep {
    pub vertex: VertexId,
    pub degree: usize,
    pub removed_edges: Vec<EdgeId>,
    pub co_removed: Vec<VertexId>,
}

/// Incremental `⊖ {v}` with degree bookkeeping.
pub(crate) struct Peeler<'a> {
    members: BTreeMap<EdgeId, &'a VertexSet>,
    incidence: BTreeMap<VertexId, Vec<EdgeId>>,
    alive_edges: BTreeSet<EdgeId>,
    degree: BTreeMap<VertexId, usize>,
    queue: BTreeSet<(usize, VertexId)>,
}

impl<'a> Peeler<'a> {
    pub fn new(h: &'a Hypergraph) -> Self {
        let members: BTreeMap<_, _> = h.edges().collect();
        let mut incidence: BTreeMap<VertexId, Vec<EdgeId>> =
            h.vertices().iter().map(|&v| (v, Vec::new())).collect();
        for (&id, e) in &members {
            for v in e.iter() {
                incidence.entry(*v).or_default().push(id);
            }
        }
        let degree: BTreeMap<_, _> = incidence.iter().map(|(&v, es)| (v, es.len())).collect();
        let queue = degree.iter().map(|(&v, &d)| (d, v)).collect();
        Self {
            alive_edges: members.keys().copied().collect(),
            members,
            incidence,
            degree,
            queue,
        }
    }

    pub fn is_alive(&self, v: VertexId) -> bool {
        self.degree
            .get(&v)
            .is_some_and(|&d| self.queue.contains(&(d, v)))
    }

    /// Minimum-degree live vertex, ties to the smallest id.
    pub fn min_degree_vertex(&self) -> Option<(VertexId, usize)> {
        self.queue.first().map(|&(d, v)| (v, d))
    }

    pub fn remove(&mut self, v: VertexId) -> PeelStep {
        let degree = self.degree[&v];
        self.queue.remove(&(degree, v));
        let removed_edges: Vec<EdgeId> = self.incidence[&v]
            .iter()
            .copied()
            .filter(|id| self.alive_edges.contains(id))
            .collect();
        let mut touched = VertexSet::new();
        for id in &removed_edges {
            self.alive_edges.remove(id);
            for &u in self.members[id].iter() {
                if u == v {
                    continue;
                }
                let d = self.degree.get_mut(&u).expect("edge member is a vertex");
                if self.queue.remove(&(*d, u)) {
                    *d -= 1;
                    self.queue.insert((*d, u));
                    touched.insert(u);
                }
            }
        }
        let co_removed: Vec<VertexId> = touched
            .into_iter()
            .filter(|u| self.degree[u] == 0)
            .collect();
        for u in &co_removed {
            self.queue.remove(&(0, *u));
        }
        PeelStep {
            vertex: v,
            degree,
            removed_edges,
            co_removed,
        }
    }
}

/// Peels `h` by repeatedly shrinking away a minimum-degree vertex (smallest id
/// on ties). The largest recorded degree is `deg(H)`.
pub fn degeneracy_order(h: &Hypergraph) -> DegeneracyOrder {
    let mut peeler = Peeler::new(h);
    let mut order = Vec::with_capacity(h.vertex_count());
    let mut degeneracy = 0;
    while let Some((v, _)) = peeler.min_degree_vertex() {
        let step = peeler.remove(v);
        degeneracy = degeneracy.max(step.degree);
        order.push((step.vertex, step.degree));
        order.extend(step.co_removed.iter().map(|&u| (u, 0)));
    }
    DegeneracyOrder { order, degeneracy }
}

pub fn degeneracy(h: &Hypergraph) -> usize {
    degeneracy_order(h).degeneracy()
}
