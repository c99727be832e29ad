//! Directed Nonblocker: does a digraph on `n` vertices have a dominating set
//! of size at most `n - k`?
//!
//! After deleting isolated vertices and merging all in-degree-zero vertices
//! into one, every digraph has a dominating set of size at most `2n/3`,
//! found constructively through the closed in-neighbourhood hypergraph. So
//! either `n >= 3k` and the answer is yes, or at most `3k - 1` vertices
//! remain. A second route through the below-`n` hitting set kernel gives a
//! `k² + k - 1` vertex kernel and serves as a cross-check.

use crate::error::{Error, Result};
use crate::hypercore::{Digraph, Hypergraph};
use crate::kernel_below_n::{decide_or_kernel_below_n, BelowNInstance};
use crate::problem::{KernelOutcome, Problem};
use crate::trace::{ReductionStep, ReductionTrace};
use crate::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonblockerInstance {
    pub digraph: Digraph,
    pub k: i64,
}

impl NonblockerInstance {
    pub fn new(digraph: Digraph, k: i64) -> Self {
        Self { digraph, k }
    }

    /// `n - k`.
    pub fn target_size(&self) -> i64 {
        self.digraph.vertex_count() as i64 - self.k
    }

    pub fn is_solution(&self, witness: &VertexSet) -> bool {
        self.digraph.is_dominating_set(witness) && witness.len() as i64 <= self.target_size()
    }
}

/// Deletes every isolated vertex. Each one sits in every dominating set, so
/// `γ` and `n` both drop by one and `k` is unchanged.
pub fn strip_isolated(inst: &NonblockerInstance) -> (NonblockerInstance, Vec<ReductionStep>) {
    let mut next = inst.clone();
    let isolated = next.digraph.isolated_vertices();
    let steps = isolated
        .into_iter()
        .map(|vertex| {
            next.digraph
                .remove_vertex(vertex)
                .expect("isolated vertex exists");
            ReductionStep::IsolatedDeleted { vertex }
        })
        .collect();
    (next, steps)
}

/// Merges the in-degree-zero vertices, when there are at least two, into a
/// fresh vertex dominating their joint out-neighbourhood.
pub fn contract_sources(inst: &NonblockerInstance) -> Option<(NonblockerInstance, ReductionStep)> {
    let sources = inst.digraph.sources();
    if sources.len() <= 1 {
        return None;
    }
    let mut next = inst.clone();
    let targets: VertexSet = sources
        .iter()
        .flat_map(|&s| inst.digraph.out_neighbors(s))
        .collect();
    for &s in &sources {
        next.digraph.remove_vertex(s).expect("source exists");
    }
    let merged = next.digraph.add_fresh_vertex();
    for t in targets {
        next.digraph.add_arc(merged, t).expect("target survives");
    }
    Some((next, ReductionStep::SourcesContracted { sources, merged }))
}

/// If some vertex has out-degree at least `k`, everything but its
/// out-neighbours dominates. Picks the vertex of largest out-degree,
/// smallest id on ties.
pub fn high_outdegree_rule(inst: &NonblockerInstance) -> Option<VertexSet> {
    let d = &inst.digraph;
    if inst.k <= 0 && d.vertex_count() == 0 {
        return Some(VertexSet::new());
    }
    let (deg, v) = d
        .vertices()
        .iter()
        .map(|&v| (d.out_degree(v), v))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))?;
    if (deg as i64) < inst.k {
        return None;
    }
    let outs: VertexSet = d.out_neighbors(v).collect();
    Some(d.vertices().difference(&outs).copied().collect())
}

/// The hypergraph of closed in-neighbourhoods: one edge `N⁻[v]` per vertex,
/// carrying the id of `v`. A set hits it iff it dominates the digraph.
pub fn to_hitting_set(d: &Digraph) -> Hypergraph {
    let mut h = Hypergraph::with_vertices(d.vertices().iter().copied());
    for &v in d.vertices() {
        h.add_edge_with_id(v, d.closed_in_neighborhood(v))
            .expect("ids ascend and members are vertices");
    }
    h
}

/// Builds a hitting set of size at most `⌊(|V| + |F|)/3⌋` by repeatedly
/// taking the vertex of a unit edge, or else a vertex of maximum degree, and
/// shrinking it away.
///
/// Requires every edge to have two or more vertices, except for at most one
/// unit edge `{v}` whose vertex also lies in another edge.
pub fn hitting_set_third(h: &Hypergraph) -> Result<VertexSet> {
    if h.has_empty_edge() {
        return Err(Error::EmptyEdge);
    }
    let units: Vec<_> = h.edges().filter(|(_, e)| e.len() == 1).collect();
    match units.as_slice() {
        [] => {}
        [(id, e)] => {
            let v = *e.first().expect("unit edge");
            if !h.edges().any(|(other, f)| other != *id && f.contains(&v)) {
                return Err(Error::precondition(format!(
                    "unit edge {{{v}}} is the only edge at {v}"
                )));
            }
        }
        _ => return Err(Error::precondition("more than one unit edge")),
    }

    let mut h = h.clone();
    let mut out = VertexSet::new();
    while h.edge_count() > 0 {
        let unit = h
            .edges()
            .find(|(_, e)| e.len() == 1)
            .and_then(|(_, e)| e.first().copied());
        let u = match unit {
            Some(v) => v,
            None => {
                let inc = h.incidence();
                inc.iter()
                    .max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(a.0)))
                    .map(|(&v, _)| v)
                    .expect("edges imply vertices")
            }
        };
        out.insert(u);
        h.shrink_in_place(&[u].into_iter().collect())
            .expect("u is a vertex");
    }
    Ok(out)
}

/// A dominating set of size at most `⌊2n/3⌋` for a digraph with no isolated
/// vertex and at most one vertex of in-degree zero.
pub fn dominating_two_thirds(d: &Digraph) -> Result<VertexSet> {
    if let Some(v) = d.isolated_vertices().first() {
        return Err(Error::precondition(format!("vertex {v} is isolated")));
    }
    if d.sources().len() > 1 {
        return Err(Error::precondition(
            "more than one vertex of in-degree zero",
        ));
    }
    hitting_set_third(&to_hitting_set(d))
}

pub fn kernelize_nonblocker(inst: &NonblockerInstance) -> KernelOutcome {
    let mut trace = ReductionTrace::new();
    let (mut cur, steps) = strip_isolated(inst);
    steps.into_iter().for_each(|s| trace.push(s));
    if let Some((next, step)) = contract_sources(&cur) {
        trace.push(step);
        cur = next;
    }
    let lift = |w: VertexSet| KernelOutcome::Decided {
        yes: true,
        witness: Some(trace.lift(&w).expect("witness holds the merged source")),
    };
    let n = cur.digraph.vertex_count() as i64;
    if cur.k <= 0 {
        return lift(cur.digraph.vertices().clone());
    }
    if n == 0 {
        return KernelOutcome::no();
    }
    if n >= 3 * cur.k {
        let w = dominating_two_thirds(&cur.digraph)
            .expect("preprocessing established the preconditions");
        return lift(w);
    }
    KernelOutcome::Kernel {
        instance: Problem::Nonblocker(cur),
        trace,
    }
}

/// `3k - 1`.
pub fn linear_bound(k: i64) -> u128 {
    if k <= 0 {
        0
    } else {
        3 * k as u128 - 1
    }
}

/// `k² + k - 1`.
pub fn quadratic_bound(k: i64) -> u128 {
    if k <= 0 {
        0
    } else {
        let k = k as u128;
        k * k + k - 1
    }
}

/// Kernelizes through the closed in-neighbourhood hypergraph and the
/// below-`n` hitting set kernel. The kernel, when one is returned, is a
/// hitting set instance on the digraph's vertex ids.
pub fn kernelize_nonblocker_quadratic(inst: &NonblockerInstance) -> KernelOutcome {
    if let Some(w) = high_outdegree_rule(inst) {
        return KernelOutcome::Decided {
            yes: true,
            witness: Some(w),
        };
    }
    let h = to_hitting_set(&inst.digraph);
    decide_or_kernel_below_n(&BelowNInstance::new(h, inst.k))
}

/// Lifts a dominating set of the preprocessed digraph back to the input.
pub fn lift_witness_nb(
    kernel: &NonblockerInstance,
    trace: &ReductionTrace,
    witness: &VertexSet,
) -> Result<VertexSet> {
    if !kernel.is_solution(witness) {
        return Err(Error::InvalidWitness(
            "not a dominating set of the kernel within n - k".into(),
        ));
    }
    trace.lift(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn triangle(k: i64) -> NonblockerInstance {
        NonblockerInstance::new(Digraph::from_arcs([(1, 2), (2, 3), (3, 1)], []), k)
    }

    #[test]
    fn strip_isolated_examples() {
        let i = NonblockerInstance::new(Digraph::from_arcs([(1, 2)], [3]), 1);
        let (next, steps) = strip_isolated(&i);
        assert_eq!(next.digraph.vertices(), &set(&[1, 2]));
        assert_eq!(steps, vec![ReductionStep::IsolatedDeleted { vertex: 3 }]);

        let (same, steps) = strip_isolated(&triangle(1));
        assert_eq!(same, triangle(1));
        assert!(steps.is_empty());

        let all = NonblockerInstance::new(Digraph::with_vertices([1, 2]), 0);
        let (next, steps) = strip_isolated(&all);
        assert_eq!(next.digraph.vertex_count(), 0);
        assert_eq!(steps.len(), 2);
    }

    #[test]
    fn contraction() {
        let i = NonblockerInstance::new(Digraph::from_arcs([(1, 3), (2, 3)], []), 1);
        let (next, step) = contract_sources(&i).unwrap();
        assert_eq!(
            step,
            ReductionStep::SourcesContracted {
                sources: set(&[1, 2]),
                merged: 4
            }
        );
        assert_eq!(next.digraph.vertices(), &set(&[3, 4]));
        assert_eq!(next.digraph.arcs().collect::<Vec<_>>(), vec![(4, 3)]);

        let single = NonblockerInstance::new(Digraph::from_arcs([(1, 2), (1, 3)], []), 1);
        assert!(contract_sources(&single).is_none());
        assert!(contract_sources(&triangle(1)).is_none());
    }

    #[test]
    fn high_outdegree() {
        let star = NonblockerInstance::new(Digraph::from_arcs((1..=5).map(|i| (0, i)), []), 3);
        let w = high_outdegree_rule(&star).unwrap();
        assert_eq!(w, set(&[0]));
        assert_eq!(w.len(), star.digraph.vertex_count() - 5);
        assert!(star.digraph.is_dominating_set(&w));

        assert!(high_outdegree_rule(&triangle(0)).is_some());
        assert!(high_outdegree_rule(&triangle(2)).is_none());
    }

    #[test]
    fn closed_in_neighbourhood_hypergraph() {
        let h = to_hitting_set(&triangle(1).digraph);
        assert_eq!(h.edge(1), Some(&set(&[1, 3])));
        assert_eq!(h.edge(2), Some(&set(&[1, 2])));
        assert_eq!(h.edge(3), Some(&set(&[2, 3])));

        let merged = to_hitting_set(&Digraph::from_arcs([(4, 3)], []));
        assert_eq!(merged.edge(4), Some(&set(&[4])));
    }

    #[test]
    fn third_examples() {
        let h = Hypergraph::from_edges([vec![1, 2], vec![1, 3]], []);
        assert_eq!(hitting_set_third(&h).unwrap(), set(&[1]));

        let h = Hypergraph::from_edges([vec![1], vec![1, 2]], []);
        assert_eq!(hitting_set_third(&h).unwrap(), set(&[1]));

        assert!(hitting_set_third(&Hypergraph::with_vertices([1, 2]))
            .unwrap()
            .is_empty());

        let lonely = Hypergraph::from_edges([vec![1], vec![2, 3]], []);
        assert!(hitting_set_third(&lonely).is_err());
        let two_units = Hypergraph::from_edges([vec![1], vec![2], vec![1, 2]], []);
        assert!(hitting_set_third(&two_units).is_err());
    }

    #[test]
    fn two_thirds_examples() {
        let w = dominating_two_thirds(&triangle(1).digraph).unwrap();
        assert!(w.len() <= 2);
        let d = Digraph::from_arcs([(1, 2)], []);
        assert_eq!(dominating_two_thirds(&d).unwrap(), set(&[1]));
        let cycle = Digraph::from_arcs((1..=6).map(|i| (i, i % 6 + 1)), []);
        let w = dominating_two_thirds(&cycle).unwrap();
        assert!(w.len() <= 4);
        assert!(cycle.is_dominating_set(&w));
        assert!(dominating_two_thirds(&Digraph::from_arcs([(1, 3), (2, 3)], [])).is_err());
    }

    #[test]
    fn kernelize_examples() {
        match kernelize_nonblocker(&triangle(1)) {
            KernelOutcome::Decided {
                yes: true,
                witness: Some(w),
            } => {
                assert_eq!(w.len(), 2);
                assert!(triangle(1).is_solution(&w));
            }
            other => panic!("unexpected {other:?}"),
        }
        match kernelize_nonblocker(&triangle(2)) {
            KernelOutcome::Kernel { instance, .. } => {
                assert_eq!(instance, Problem::Nonblocker(triangle(2)));
            }
            other => panic!("unexpected {other:?}"),
        }
        let path = NonblockerInstance::new(Digraph::from_arcs([(1, 2)], []), 1);
        assert!(matches!(
            kernelize_nonblocker(&path),
            KernelOutcome::Kernel { .. }
        ));
        let empty = NonblockerInstance::new(Digraph::with_vertices([1]), 1);
        assert_eq!(kernelize_nonblocker(&empty), KernelOutcome::no());
    }

    #[test]
    fn quadratic_examples() {
        let star = NonblockerInstance::new(Digraph::from_arcs((1..=3).map(|i| (0, i)), []), 3);
        assert!(matches!(
            kernelize_nonblocker_quadratic(&star),
            KernelOutcome::Decided { yes: true, .. }
        ));
        match kernelize_nonblocker_quadratic(&triangle(1)) {
            KernelOutcome::Decided {
                yes: true,
                witness: Some(w),
            } => assert!(triangle(1).is_solution(&w)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lift_replaces_merged_source() {
        let trace: ReductionTrace = [ReductionStep::SourcesContracted {
            sources: set(&[1, 2]),
            merged: 4,
        }]
        .into_iter()
        .collect();
        let kernel = NonblockerInstance::new(Digraph::from_arcs([(4, 3)], []), 0);
        assert_eq!(
            lift_witness_nb(&kernel, &trace, &set(&[4, 3])).unwrap(),
            set(&[1, 2, 3])
        );
        assert!(lift_witness_nb(&kernel, &trace, &set(&[3])).is_err());
    }
}
