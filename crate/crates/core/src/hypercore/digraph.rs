use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::{VertexId, VertexSet};

/// A loop-free directed graph with stable vertex ids.
///
/// Self-loops are dropped on insertion: a vertex outside a dominating set
/// cannot dominate itself, so a loop never changes which sets dominate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertices: VertexSet,
    arcs: BTreeSet<(VertexId, VertexId)>,
    // (head, tail) mirror of `arcs` for in-neighbourhood lookups.
    reverse: BTreeSet<(VertexId, VertexId)>,
    next_vertex: VertexId,
}

impl Default for Digraph {
    fn default() -> Self {
        Self::new()
    }
}

impl Digraph {
    pub fn new() -> Self {
        Self {
            vertices: VertexSet::new(),
            arcs: BTreeSet::new(),
            reverse: BTreeSet::new(),
            next_vertex: 1,
        }
    }

    pub fn with_vertices(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut d = Self::new();
        for v in vertices {
            d.add_vertex(v);
        }
        d
    }

    /// Builds a digraph from arcs; endpoints are added as vertices and
    /// self-loops are skipped.
    pub fn from_arcs(
        arcs: impl IntoIterator<Item = (VertexId, VertexId)>,
        extra_vertices: impl IntoIterator<Item = VertexId>,
    ) -> Self {
        let mut d = Self::with_vertices(extra_vertices);
        for (u, v) in arcs {
            d.add_vertex(u);
            d.add_vertex(v);
            d.insert_arc(u, v);
        }
        d
    }

    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        self.next_vertex = self.next_vertex.max(v + 1);
        self.vertices.insert(v)
    }

    /// Adds a vertex under an id that has never been used in this digraph.
    pub fn add_fresh_vertex(&mut self) -> VertexId {
        let v = self.next_vertex;
        self.add_vertex(v);
        v
    }

    /// Adds the arc `u -> v`. Returns `Ok(false)` for a self-loop or an arc
    /// that is already present.
    pub fn add_arc(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        for w in [u, v] {
            if !self.vertices.contains(&w) {
                return Err(Error::UnknownVertex(w));
            }
        }
        Ok(self.insert_arc(u, v))
    }

    fn insert_arc(&mut self, u: VertexId, v: VertexId) -> bool {
        if u == v {
            return false;
        }
        self.reverse.insert((v, u));
        self.arcs.insert((u, v))
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn out_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.arcs
            .range((v, VertexId::MIN)..=(v, VertexId::MAX))
            .map(|&(_, w)| w)
    }

    pub fn in_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.reverse
            .range((v, VertexId::MIN)..=(v, VertexId::MAX))
            .map(|&(_, w)| w)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_neighbors(v).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_neighbors(v).count()
    }

    /// `N⁻[v]`: `v` together with its in-neighbours.
    pub fn closed_in_neighborhood(&self, v: VertexId) -> VertexSet {
        let mut n: VertexSet = self.in_neighbors(v).collect();
        n.insert(v);
        n
    }

    pub fn is_isolated(&self, v: VertexId) -> bool {
        self.out_degree(v) == 0 && self.in_degree(v) == 0
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| self.is_isolated(v))
            .collect()
    }

    /// Vertices of in-degree zero.
    pub fn sources(&self) -> VertexSet {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| self.in_degree(v) == 0)
            .collect()
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> Result<()> {
        if !self.vertices.remove(&v) {
            return Err(Error::UnknownVertex(v));
        }
        let outs: Vec<_> = self.out_neighbors(v).collect();
        let ins: Vec<_> = self.in_neighbors(v).collect();
        for w in outs {
            self.arcs.remove(&(v, w));
            self.reverse.remove(&(w, v));
        }
        for u in ins {
            self.arcs.remove(&(u, v));
            self.reverse.remove(&(v, u));
        }
        Ok(())
    }

    /// True iff every vertex outside `set` has an in-neighbour inside it.
    /// Members of `set` that are not vertices make the answer false.
    pub fn is_dominating_set(&self, set: &VertexSet) -> bool {
        set.is_subset(&self.vertices)
            && self
                .vertices
                .iter()
                .all(|&v| set.contains(&v) || self.in_neighbors(v).any(|u| set.contains(&u)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_loops_are_dropped() {
        let mut d = Digraph::with_vertices([1]);
        assert_eq!(d.add_arc(1, 1), Ok(false));
        assert_eq!(d.arc_count(), 0);
        let d = Digraph::from_arcs([(1, 2), (2, 2)], []);
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn neighbourhoods() {
        let d = Digraph::from_arcs([(1, 2), (2, 3), (3, 1), (1, 3)], [9]);
        assert_eq!(d.out_neighbors(1).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(d.in_neighbors(3).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(d.closed_in_neighborhood(2), [1, 2].into_iter().collect());
        assert!(d.is_isolated(9));
        assert_eq!(d.sources(), [9].into_iter().collect());
    }

    #[test]
    fn remove_vertex_drops_arcs() {
        let mut d = Digraph::from_arcs([(1, 2), (2, 3), (3, 1)], []);
        d.remove_vertex(2).unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(3, 1)]);
        assert_eq!(d.in_degree(3), 0);
        assert_eq!(d.remove_vertex(2), Err(Error::UnknownVertex(2)));
    }

    #[test]
    fn fresh_ids_skip_removed_vertices() {
        let mut d = Digraph::with_vertices([1, 2, 3]);
        d.remove_vertex(3).unwrap();
        assert_eq!(d.add_fresh_vertex(), 4);
    }

    #[test]
    fn domination() {
        let d = Digraph::from_arcs([(1, 2), (2, 3), (3, 1)], []);
        assert!(d.is_dominating_set(&[1, 2].into_iter().collect()));
        assert!(!d.is_dominating_set(&[1].into_iter().collect()));
        assert!(Digraph::new().is_dominating_set(&VertexSet::new()));
    }
}
