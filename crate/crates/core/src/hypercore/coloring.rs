use std::collections::{BTreeMap, BTreeSet};

use super::degeneracy::{DegeneracyOrder, Peeler};
use super::Hypergraph;
use crate::error::{Error, Result};
use crate::{VertexId, VertexSet};

pub type Color = u32;

/// A vertex colouring with colours `1..=color_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    assignment: BTreeMap<VertexId, Color>,
    color_count: Color,
}

impl Coloring {
    pub fn assignment(&self) -> &BTreeMap<VertexId, Color> {
        &self.assignment
    }

    pub fn color(&self, v: VertexId) -> Option<Color> {
        self.assignment.get(&v).copied()
    }

    pub fn color_count(&self) -> Color {
        self.color_count
    }

    /// True iff the colouring covers every vertex and no edge with at least
    /// two vertices is monochromatic.
    pub fn is_proper(&self, h: &Hypergraph) -> bool {
        h.vertices().iter().all(|v| self.assignment.contains_key(v))
            && h.edges().all(|(_, e)| {
                e.len() < 2
                    || e.iter()
                        .map(|v| self.assignment.get(v))
                        .collect::<BTreeSet<_>>()
                        .len()
                        > 1
            })
    }

    pub fn classes(&self) -> BTreeMap<Color, VertexSet> {
        let mut classes: BTreeMap<Color, VertexSet> = BTreeMap::new();
        for (&v, &c) in &self.assignment {
            classes.entry(c).or_default().insert(v);
        }
        classes
    }

    /// A largest colour class; among equally large classes, the one holding
    /// the smallest vertex id.
    pub fn largest_class(&self) -> VertexSet {
        self.classes()
            .into_values()
            .max_by(|a, b| {
                a.len()
                    .cmp(&b.len())
                    .then_with(|| b.first().cmp(&a.first()))
            })
            .unwrap_or_default()
    }
}

/// Colours `h` with at most `ord.degeneracy() + 1` colours so that no edge of
/// size two or more is monochromatic.
///
/// Vertices are put back in reverse peeling order. When a peeled vertex `v`
/// returns with edges `e_1..e_q`, one colour already present in each partly
/// coloured `e_i` is collected into `C` (`C = {1}` if there is none); `v`
/// takes the smallest colour outside `C` and the vertices that left together
/// with `v` take the smallest colour in `C`.
pub fn proper_coloring(h: &Hypergraph, ord: &DegeneracyOrder) -> Result<Coloring> {
    if let Some((id, _)) = h.edges().find(|(_, e)| e.len() <= 1) {
        return Err(Error::precondition(format!(
            "edge {id} has fewer than two vertices"
        )));
    }
    let listed: VertexSet = ord.order().iter().map(|&(v, _)| v).collect();
    if listed.len() != ord.len() || &listed != h.vertices() {
        return Err(Error::precondition(
            "order does not list every vertex exactly once",
        ));
    }

    let palette = ord.degeneracy() as Color + 1;
    let mut peeler = Peeler::new(h);
    let mut steps = Vec::new();
    for &(v, _) in ord.order() {
        if peeler.is_alive(v) {
            steps.push(peeler.remove(v));
        }
    }

    let mut assignment: BTreeMap<VertexId, Color> = BTreeMap::new();
    for step in steps.iter().rev() {
        if step.removed_edges.is_empty() {
            assignment.insert(step.vertex, 1);
            continue;
        }
        let mut used = BTreeSet::new();
        for id in &step.removed_edges {
            let edge = h.edge(*id).expect("peeled edge exists");
            if let Some(c) = edge.iter().filter_map(|v| assignment.get(v)).min() {
                used.insert(*c);
            }
        }
        if used.is_empty() {
            used.insert(1);
        }
        let own = (1..=palette).find(|c| !used.contains(c)).ok_or_else(|| {
            Error::precondition(format!(
                "vertex {} returns with {} coloured edges but the order claims degeneracy {}",
                step.vertex,
                used.len(),
                ord.degeneracy()
            ))
        })?;
        assignment.insert(step.vertex, own);
        let shared = *used.first().expect("non-empty");
        for u in &step.co_removed {
            assignment.entry(*u).or_insert(shared);
        }
    }

    let color_count = assignment.values().copied().max().unwrap_or(0);
    Ok(Coloring {
        assignment,
        color_count,
    })
}
