//! Exponential-time exact solvers used as ground truth.
//!
//! These are plain branching searches with no pruning beyond forced choices
//! and the incumbent bound. They are meant for instances with up to about 25
//! vertices. Every solver accepts an optional node budget and fails with
//! [`Error::BudgetExhausted`] when it runs out.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypercore::{Digraph, Hypergraph};
use crate::{VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub optimum: usize,
    pub witness: VertexSet,
    /// Search nodes visited.
    pub explored: u64,
}

struct Counter {
    explored: u64,
    budget: Option<u64>,
}

impl Counter {
    fn new(budget: Option<u64>) -> Self {
        Self {
            explored: 0,
            budget,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.explored += 1;
        match self.budget {
            Some(b) if self.explored > b => Err(Error::BudgetExhausted { budget: b }),
            _ => Ok(()),
        }
    }
}

/// Dense re-indexing of a hypergraph for the searches below.
struct Indexed {
    ids: Vec<VertexId>,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl Indexed {
    fn new(h: &Hypergraph) -> Self {
        let ids: Vec<VertexId> = h.vertices().iter().copied().collect();
        let index: BTreeMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<Vec<usize>> = h
            .edges()
            .map(|(_, e)| e.iter().map(|v| index[v]).collect())
            .collect();
        let mut incidence = vec![Vec::new(); ids.len()];
        for (j, e) in edges.iter().enumerate() {
            for &i in e {
                incidence[i].push(j);
            }
        }
        Self {
            ids,
            edges,
            incidence,
        }
    }

    fn to_set(&self, chosen: &[bool]) -> VertexSet {
        chosen
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(i, _)| self.ids[i])
            .collect()
    }
}

struct HittingSearch<'a> {
    g: &'a Indexed,
    chosen: Vec<bool>,
    banned: Vec<bool>,
    size: usize,
    best: Option<(usize, Vec<bool>)>,
    counter: Counter,
}

impl HittingSearch<'_> {
    /// Smallest unhit edge by number of allowed vertices (first on ties).
    /// `Err(())` when some unhit edge has no allowed vertex left.
    fn pick_edge(&self) -> std::result::Result<Option<Vec<usize>>, ()> {
        let mut best: Option<Vec<usize>> = None;
        for e in &self.g.edges {
            if e.iter().any(|&v| self.chosen[v]) {
                continue;
            }
            let allowed: Vec<usize> = e.iter().copied().filter(|&v| !self.banned[v]).collect();
            if allowed.is_empty() {
                return Err(());
            }
            if best.as_ref().is_none_or(|b| allowed.len() < b.len()) {
                best = Some(allowed);
            }
        }
        Ok(best)
    }

    fn run(&mut self) -> Result<()> {
        self.counter.tick()?;
        if let Some((best, _)) = &self.best {
            if self.size >= *best {
                return Ok(());
            }
        }
        let edge = match self.pick_edge() {
            Err(()) => return Ok(()),
            Ok(None) => {
                self.best = Some((self.size, self.chosen.clone()));
                return Ok(());
            }
            Ok(Some(edge)) => edge,
        };
        if let Some((best, _)) = &self.best {
            if self.size + 1 >= *best {
                return Ok(());
            }
        }
        // Branch i takes edge[i] and bans edge[..i], so branches are disjoint.
        let mut banned_here = Vec::new();
        for &v in &edge {
            self.chosen[v] = true;
            self.size += 1;
            let r = self.run();
            self.chosen[v] = false;
            self.size -= 1;
            if let Err(e) = r {
                for b in banned_here {
                    self.banned[b] = false;
                }
                return Err(e);
            }
            self.banned[v] = true;
            banned_here.push(v);
        }
        for b in banned_here {
            self.banned[b] = false;
        }
        Ok(())
    }
}

/// Minimum hitting set, `t(H)`.
pub fn min_hitting_set(h: &Hypergraph, budget: Option<u64>) -> Result<ExactResult> {
    if h.has_empty_edge() {
        return Err(Error::EmptyEdge);
    }
    let g = Indexed::new(h);
    let n = g.ids.len();
    let mut search = HittingSearch {
        g: &g,
        chosen: vec![false; n],
        banned: vec![false; n],
        size: 0,
        best: None,
        counter: Counter::new(budget),
    };
    search.run()?;
    let (optimum, chosen) = search.best.expect("V hits every non-empty edge");
    Ok(ExactResult {
        optimum,
        witness: g.to_set(&chosen),
        explored: search.counter.explored,
    })
}

struct IndependentSearch<'a> {
    g: &'a Indexed,
    inside: Vec<bool>,
    // Per edge, how many of its vertices are currently inside.
    filled: Vec<usize>,
    size: usize,
    best: (usize, Vec<bool>),
    counter: Counter,
}

impl IndependentSearch<'_> {
    fn can_add(&self, v: usize) -> bool {
        self.g.incidence[v]
            .iter()
            .all(|&j| self.filled[j] + 1 < self.g.edges[j].len())
    }

    fn run(&mut self, next: usize) -> Result<()> {
        self.counter.tick()?;
        let n = self.g.ids.len();
        if self.size + (n - next) <= self.best.0 {
            return Ok(());
        }
        if next == n {
            self.best = (self.size, self.inside.clone());
            return Ok(());
        }
        if self.can_add(next) {
            self.inside[next] = true;
            self.size += 1;
            for &j in &self.g.incidence[next] {
                self.filled[j] += 1;
            }
            let r = self.run(next + 1);
            for &j in &self.g.incidence[next] {
                self.filled[j] -= 1;
            }
            self.inside[next] = false;
            self.size -= 1;
            r?;
        }
        self.run(next + 1)
    }
}

/// Maximum independent set, `α(H)`: no edge may lie entirely inside it.
pub fn max_independent_set(h: &Hypergraph, budget: Option<u64>) -> Result<ExactResult> {
    if h.has_empty_edge() {
        return Err(Error::EmptyEdge);
    }
    let g = Indexed::new(h);
    let n = g.ids.len();
    let mut search = IndependentSearch {
        g: &g,
        inside: vec![false; n],
        filled: vec![0; g.edges.len()],
        size: 0,
        best: (0, vec![false; n]),
        counter: Counter::new(budget),
    };
    search.run(0)?;
    let (optimum, inside) = search.best.clone();
    Ok(ExactResult {
        optimum,
        witness: g.to_set(&inside),
        explored: search.counter.explored,
    })
}

struct DominationSearch<'a> {
    ids: Vec<VertexId>,
    // Closed in-neighbourhood of each vertex: the vertices able to dominate it.
    dominators: Vec<Vec<usize>>,
    // Closed out-neighbourhood: what choosing a vertex dominates.
    reach: Vec<Vec<usize>>,
    cover: Vec<usize>,
    chosen: Vec<bool>,
    banned: Vec<bool>,
    size: usize,
    best: Option<(usize, Vec<bool>)>,
    counter: Counter,
    _digraph: &'a Digraph,
}

impl DominationSearch<'_> {
    fn run(&mut self) -> Result<()> {
        self.counter.tick()?;
        if let Some((best, _)) = &self.best {
            if self.size >= *best {
                return Ok(());
            }
        }
        let Some(target) = (0..self.ids.len()).find(|&v| self.cover[v] == 0) else {
            self.best = Some((self.size, self.chosen.clone()));
            return Ok(());
        };
        let options: Vec<usize> = self.dominators[target]
            .iter()
            .copied()
            .filter(|&u| !self.banned[u])
            .collect();
        let mut banned_here = Vec::new();
        let mut result = Ok(());
        for u in options {
            self.chosen[u] = true;
            self.size += 1;
            for i in 0..self.reach[u].len() {
                self.cover[self.reach[u][i]] += 1;
            }
            result = self.run();
            for i in 0..self.reach[u].len() {
                self.cover[self.reach[u][i]] -= 1;
            }
            self.chosen[u] = false;
            self.size -= 1;
            if result.is_err() {
                break;
            }
            self.banned[u] = true;
            banned_here.push(u);
        }
        for b in banned_here {
            self.banned[b] = false;
        }
        result
    }
}

/// Minimum dominating set, `γ(D)`.
pub fn min_dominating_set(d: &Digraph, budget: Option<u64>) -> Result<ExactResult> {
    let ids: Vec<VertexId> = d.vertices().iter().copied().collect();
    let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let dominators = ids
        .iter()
        .map(|&v| {
            d.closed_in_neighborhood(v)
                .iter()
                .map(|u| index[u])
                .collect()
        })
        .collect();
    let reach = ids
        .iter()
        .map(|&v| {
            std::iter::once(index[&v])
                .chain(d.out_neighbors(v).map(|w| index[&w]))
                .collect()
        })
        .collect();
    let n = ids.len();
    let mut search = DominationSearch {
        ids,
        dominators,
        reach,
        cover: vec![0; n],
        chosen: vec![false; n],
        banned: vec![false; n],
        size: 0,
        best: None,
        counter: Counter::new(budget),
        _digraph: d,
    };
    search.run()?;
    let (optimum, chosen) = search.best.clone().expect("V dominates");
    let witness = chosen
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(i, _)| search.ids[i])
        .collect();
    Ok(ExactResult {
        optimum,
        witness,
        explored: search.counter.explored,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Hitting,
    Independent,
    Dominating,
}

impl std::str::FromStr for WitnessKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hitting" => Ok(WitnessKind::Hitting),
            "independent" => Ok(WitnessKind::Independent),
            "dominating" => Ok(WitnessKind::Dominating),
            other => Err(Error::precondition(format!(
                "unknown witness kind `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum InstanceRef<'a> {
    Hypergraph(&'a Hypergraph),
    Digraph(&'a Digraph),
}

/// Checks a witness: the predicate for `kind`, membership of every id, and
/// the size bound. Hitting and dominating sets must have at most `bound`
/// vertices; independent sets at least `bound`.
pub fn verify(
    kind: WitnessKind,
    instance: InstanceRef<'_>,
    witness: &VertexSet,
    bound: usize,
) -> Result<bool> {
    match (kind, instance) {
        (WitnessKind::Hitting, InstanceRef::Hypergraph(h)) => Ok(witness.is_subset(h.vertices())
            && h.is_hitting_set(witness)
            && witness.len() <= bound),
        (WitnessKind::Independent, InstanceRef::Hypergraph(h)) => Ok(witness
            .is_subset(h.vertices())
            && h.is_independent(witness)
            && witness.len() >= bound),
        (WitnessKind::Dominating, InstanceRef::Digraph(d)) => {
            Ok(d.is_dominating_set(witness) && witness.len() <= bound)
        }
        (kind, _) => Err(Error::precondition(format!(
            "{kind:?} witnesses do not apply to this kind of instance"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Hypergraph {
        Hypergraph::from_edges([vec![1, 2], vec![2, 3], vec![1, 3]], [])
    }

    #[test]
    fn hitting_set_examples() {
        let r = min_hitting_set(&triangle(), None).unwrap();
        assert_eq!(r.optimum, 2);
        assert!(triangle().is_hitting_set(&r.witness));
        assert_eq!(
            min_hitting_set(&Hypergraph::from_edges([vec![1, 2, 3]], []), None)
                .unwrap()
                .optimum,
            1
        );
        let r = min_hitting_set(&Hypergraph::with_vertices([1, 2]), None).unwrap();
        assert_eq!(r.optimum, 0);
        assert!(r.witness.is_empty());
        assert_eq!(
            min_hitting_set(&Hypergraph::from_edges([Vec::<u32>::new()], []), None),
            Err(Error::EmptyEdge)
        );
    }

    #[test]
    fn independent_set_examples() {
        assert_eq!(max_independent_set(&triangle(), None).unwrap().optimum, 1);
        assert_eq!(
            max_independent_set(&Hypergraph::with_vertices(1..=5), None)
                .unwrap()
                .optimum,
            5
        );
    }

    #[test]
    fn domination_examples() {
        let tri = Digraph::from_arcs([(1, 2), (2, 3), (3, 1)], []);
        assert_eq!(min_dominating_set(&tri, None).unwrap().optimum, 2);
        assert_eq!(
            min_dominating_set(&Digraph::with_vertices([1]), None)
                .unwrap()
                .optimum,
            1
        );
        let fork = Digraph::from_arcs([(1, 2), (1, 3)], []);
        let r = min_dominating_set(&fork, None).unwrap();
        assert_eq!(r.optimum, 1);
        assert_eq!(r.witness, [1].into_iter().collect());
    }

    #[test]
    fn budget_is_enforced() {
        let big = Hypergraph::from_edges((1..=20u32).map(|i| vec![i, i % 20 + 1]), []);
        assert!(matches!(
            min_hitting_set(&big, Some(5)),
            Err(Error::BudgetExhausted { budget: 5 })
        ));
    }

    #[test]
    fn verify_examples() {
        let t = triangle();
        let s = |v: &[u32]| v.iter().copied().collect::<VertexSet>();
        assert!(verify(
            WitnessKind::Hitting,
            InstanceRef::Hypergraph(&t),
            &s(&[1, 2]),
            2
        )
        .unwrap());
        assert!(!verify(
            WitnessKind::Hitting,
            InstanceRef::Hypergraph(&t),
            &s(&[1]),
            2
        )
        .unwrap());
        assert!(verify(
            WitnessKind::Dominating,
            InstanceRef::Digraph(&Digraph::new()),
            &VertexSet::new(),
            0
        )
        .unwrap());
        assert!(verify(
            WitnessKind::Independent,
            InstanceRef::Hypergraph(&t),
            &s(&[3]),
            1
        )
        .unwrap());
        assert!(verify(
            WitnessKind::Dominating,
            InstanceRef::Hypergraph(&t),
            &s(&[1]),
            1
        )
        .is_err());
    }
}
