use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::{EdgeId, EdgeSet, VertexId, VertexSet};

/// A hypergraph with stable vertex and edge identifiers.
///
/// Edges form a multiset: two edges may carry the same vertex set under
/// different ids. Edge ids are handed out from a monotone counter and are
/// never reused, even after deletions, so reduction traces can name edges
/// that no longer exist.
///
/// An edge may become empty through [`Hypergraph::remove_vertex`]; such an
/// edge cannot be hit and marks the instance infeasible. Callers are expected
/// to check [`Hypergraph::has_empty_edge`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: VertexSet,
    edges: BTreeMap<EdgeId, VertexSet>,
    next_edge: EdgeId,
}

/// What a single application of the shrink operator removed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ShrinkEffect {
    pub removed_edges: EdgeSet,
    pub removed_vertices: VertexSet,
}

impl Default for Hypergraph {
    fn default() -> Self {
        Self::new()
    }
}

impl Hypergraph {
    pub fn new() -> Self {
        Self {
            vertices: VertexSet::new(),
            edges: BTreeMap::new(),
            next_edge: 1,
        }
    }

    /// An edgeless hypergraph on the given vertices.
    pub fn with_vertices(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut h = Self::new();
        h.vertices.extend(vertices);
        h
    }

    /// Builds a hypergraph from edge lists, numbering edges `1..=m` in order.
    /// The vertex set is the union of the edges plus `extra_vertices`.
    pub fn from_edges<E, I>(edges: E, extra_vertices: impl IntoIterator<Item = VertexId>) -> Self
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = VertexId>,
    {
        let mut h = Self::with_vertices(extra_vertices);
        for edge in edges {
            let edge: VertexSet = edge.into_iter().collect();
            h.vertices.extend(edge.iter().copied());
            let id = h.next_edge;
            h.next_edge += 1;
            h.edges.insert(id, edge);
        }
        h
    }

    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        self.vertices.insert(v)
    }

    /// Adds an edge under the next free id. All members must already be vertices.
    pub fn add_edge(&mut self, members: impl IntoIterator<Item = VertexId>) -> Result<EdgeId> {
        let id = self.next_edge;
        self.add_edge_with_id(id, members)?;
        Ok(id)
    }

    /// Adds an edge under a caller-chosen id, which must be at least
    /// [`Hypergraph::next_edge_id`].
    pub fn add_edge_with_id(
        &mut self,
        id: EdgeId,
        members: impl IntoIterator<Item = VertexId>,
    ) -> Result<()> {
        // Ids below the counter may belong to deleted edges.
        if id == 0 || id < self.next_edge {
            return Err(Error::DuplicateEdgeId(id));
        }
        let members: VertexSet = members.into_iter().collect();
        if let Some(&v) = members.iter().find(|v| !self.vertices.contains(v)) {
            return Err(Error::UnknownVertex(v));
        }
        self.edges.insert(id, members);
        self.next_edge = self.next_edge.max(id + 1);
        Ok(())
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &VertexSet)> + '_ {
        self.edges.iter().map(|(&id, e)| (id, e))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&VertexSet> {
        self.edges.get(&id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }

    /// Next id [`Hypergraph::add_edge`] would hand out.
    pub fn next_edge_id(&self) -> EdgeId {
        self.next_edge
    }

    /// `d(v)`: the number of edges containing `v`.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.values().filter(|e| e.contains(&v)).count())
    }

    pub fn max_degree(&self) -> usize {
        self.incidence()
            .values()
            .map(BTreeSet::len)
            .max()
            .unwrap_or(0)
    }

    /// `F[v]`: ids of the edges containing `v`.
    pub fn incident_edges(&self, v: VertexId) -> Result<EdgeSet> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter(|(_, e)| e.contains(&v))
            .map(|(&id, _)| id)
            .collect())
    }

    /// `F[T]`: ids of edges hit by at least one member of `set`.
    pub fn edges_hit_by(&self, set: &VertexSet) -> EdgeSet {
        self.edges
            .iter()
            .filter(|(_, e)| !e.is_disjoint(set))
            .map(|(&id, _)| id)
            .collect()
    }

    /// `F[v]` for every vertex at once, including isolated vertices.
    pub fn incidence(&self) -> BTreeMap<VertexId, EdgeSet> {
        let mut inc: BTreeMap<VertexId, EdgeSet> =
            self.vertices.iter().map(|&v| (v, EdgeSet::new())).collect();
        for (&id, e) in &self.edges {
            for v in e {
                inc.entry(*v).or_default().insert(id);
            }
        }
        inc
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.values().any(BTreeSet::is_empty)
    }

    pub fn empty_edges(&self) -> EdgeSet {
        self.edges
            .iter()
            .filter(|(_, e)| e.is_empty())
            .map(|(&id, _)| id)
            .collect()
    }

    pub fn remove_edge(&mut self, id: EdgeId) -> Result<VertexSet> {
        self.edges.remove(&id).ok_or(Error::UnknownEdge(id))
    }

    /// `H - e`.
    pub fn delete_edge(&self, id: EdgeId) -> Result<Self> {
        let mut h = self.clone();
        h.remove_edge(id)?;
        Ok(h)
    }

    /// Removes `v` from the vertex set and from every edge. Edges left empty
    /// are kept.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<()> {
        if !self.vertices.remove(&v) {
            return Err(Error::UnknownVertex(v));
        }
        for e in self.edges.values_mut() {
            e.remove(&v);
        }
        Ok(())
    }

    /// `H - v`.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Self> {
        let mut h = self.clone();
        h.remove_vertex(v)?;
        Ok(h)
    }

    /// Applies `H ⊖ X` in place: drops every edge meeting `set`, then every
    /// vertex of `set` and every vertex that lay only in dropped edges.
    /// Vertices outside `set` that had no edges to begin with are kept.
    pub fn shrink_in_place(&mut self, set: &VertexSet) -> Result<ShrinkEffect> {
        if let Some(&v) = set.iter().find(|v| !self.vertices.contains(v)) {
            return Err(Error::UnknownVertex(v));
        }
        let removed_edges: EdgeSet = self.edges_hit_by(set);
        let mut touched = VertexSet::new();
        for id in &removed_edges {
            if let Some(e) = self.edges.remove(id) {
                touched.extend(e);
            }
        }
        let mut surviving = VertexSet::new();
        for e in self.edges.values() {
            surviving.extend(e.iter().copied());
        }
        let removed_vertices: VertexSet = touched
            .difference(&surviving)
            .copied()
            .chain(set.iter().copied())
            .collect();
        for v in &removed_vertices {
            self.vertices.remove(v);
        }
        Ok(ShrinkEffect {
            removed_edges,
            removed_vertices,
        })
    }

    /// `H ⊖ X`.
    pub fn shrink(&self, set: &VertexSet) -> Result<Self> {
        let mut h = self.clone();
        h.shrink_in_place(set)?;
        Ok(h)
    }

    /// True iff every edge meets `set`.
    pub fn is_hitting_set(&self, set: &VertexSet) -> bool {
        self.edges.values().all(|e| !e.is_disjoint(set))
    }

    /// True iff no edge is contained in `set`.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        self.edges.values().all(|e| !e.is_subset(set))
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.vertices.contains(&v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[VertexId]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn triangle() -> Hypergraph {
        Hypergraph::from_edges([vec![1, 2], vec![2, 3], vec![1, 3]], [])
    }

    #[test]
    fn degrees() {
        let h = triangle();
        assert_eq!(h.degree(1).unwrap(), 2);
        let h = Hypergraph::from_edges([vec![1, 2, 3]], [4]);
        assert_eq!(h.degree(2).unwrap(), 1);
        assert_eq!(h.degree(4).unwrap(), 0);
        assert_eq!(h.degree(9), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn delete_edge_keeps_vertices() {
        let h = Hypergraph::from_edges([vec![1, 2]], []);
        let h2 = h.delete_edge(1).unwrap();
        assert_eq!(h2.vertices(), &set(&[1, 2]));
        assert_eq!(h2.edge_count(), 0);
        assert_eq!(h2.delete_edge(1), Err(Error::UnknownEdge(1)));

        let t = triangle().delete_edge(2).unwrap();
        assert_eq!(t.edge_count(), 2);
        assert_eq!(t.vertex_count(), 3);
    }

    #[test]
    fn delete_vertex_keeps_empty_edges() {
        let h = Hypergraph::from_edges([vec![1, 2], vec![2, 3]], []);
        let h2 = h.delete_vertex(2).unwrap();
        assert_eq!(h2.edge(1), Some(&set(&[1])));
        assert_eq!(h2.edge(2), Some(&set(&[3])));

        let h = Hypergraph::from_edges([vec![1]], []);
        let h2 = h.delete_vertex(1).unwrap();
        assert!(h2.has_empty_edge());
        assert_eq!(h2.edge_count(), 1);

        let t = triangle().delete_vertex(1).unwrap();
        let edges: Vec<_> = t.edges().map(|(_, e)| e.clone()).collect();
        assert_eq!(edges, vec![set(&[2]), set(&[2, 3]), set(&[3])]);
    }

    #[test]
    fn shrink_examples() {
        let path = Hypergraph::from_edges([vec![1, 2], vec![2, 3]], []);
        let s = path.shrink(&set(&[1])).unwrap();
        assert_eq!(s.vertices(), &set(&[2, 3]));
        assert_eq!(s.edges().collect::<Vec<_>>(), vec![(2, &set(&[2, 3]))]);

        assert_eq!(path.shrink(&VertexSet::new()).unwrap(), path);

        let h = Hypergraph::from_edges([vec![2], vec![1, 2]], []);
        let s = h.shrink(&set(&[2])).unwrap();
        assert!(s.vertices().is_empty());
        assert_eq!(s.edge_count(), 0);
    }

    #[test]
    fn shrink_keeps_untouched_isolated_vertices() {
        let h = Hypergraph::from_edges([vec![1, 2]], [5]);
        let s = h.shrink(&set(&[1])).unwrap();
        assert_eq!(s.vertices(), &set(&[5]));
        let s = h.shrink(&set(&[5])).unwrap();
        assert_eq!(s.vertices(), &set(&[1, 2]));
    }

    #[test]
    fn hitting_and_independent() {
        let t = triangle();
        assert!(t.is_hitting_set(&set(&[1, 2])));
        assert!(!t.is_hitting_set(&set(&[1])));
        assert!(t.is_hitting_set(&set(&[1, 2, 3])));
        assert!(t.is_independent(&set(&[3])));
        assert!(!t.is_independent(&set(&[2, 3])));
    }

    #[test]
    fn edge_ids_are_not_reused() {
        let mut h = triangle();
        h.remove_edge(3).unwrap();
        assert_eq!(h.add_edge([1, 2]).unwrap(), 4);
        assert_eq!(h.add_edge_with_id(3, [1]), Err(Error::DuplicateEdgeId(3)));
        assert_eq!(h.add_edge([7]), Err(Error::UnknownVertex(7)));
    }
}
