//! Hitting Set parameterized below `n` with the degeneracy `d` as a second
//! parameter: is there a hitting set of size at most `n - k`, equivalently an
//! independent set of size at least `k`?
//!
//! Unit edges are shrunk away first. Afterwards a `d`-degenerate hypergraph
//! has a proper `(d+1)`-colouring, whose largest class is an independent set
//! of size at least `n/(d+1)`. So either `n >= (d+1)k` and the answer is yes,
//! or fewer than `(d+1)k` vertices remain.

use crate::error::{Error, Result};
use crate::hypercore::{degeneracy_order, proper_coloring, Hypergraph};
use crate::problem::{KernelOutcome, Problem};
use crate::trace::{ReductionStep, ReductionTrace};
use crate::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BelowNInstance {
    pub hypergraph: Hypergraph,
    pub k: i64,
}

impl BelowNInstance {
    pub fn new(hypergraph: Hypergraph, k: i64) -> Self {
        Self { hypergraph, k }
    }

    /// `n - k`.
    pub fn target_size(&self) -> i64 {
        self.hypergraph.vertex_count() as i64 - self.k
    }

    pub fn is_solution(&self, witness: &VertexSet) -> bool {
        witness.is_subset(self.hypergraph.vertices())
            && self.hypergraph.is_hitting_set(witness)
            && witness.len() as i64 <= self.target_size()
    }
}

/// Shrinks away the vertex of the first unit edge `{v}`. Every vertex that
/// disappears along with `v` lay only in edges through `v`, so it can join
/// any independent set: `α(H) = α(H ⊖ {v}) + t` where `t` counts those
/// vertices, and `k` drops by `t`.
pub fn rule_unit_edge(inst: &BelowNInstance) -> Option<(BelowNInstance, ReductionStep)> {
    let mut next = inst.clone();
    apply_unit_edge(&mut next).map(|step| (next, step))
}

fn apply_unit_edge(inst: &mut BelowNInstance) -> Option<ReductionStep> {
    let vertex = inst
        .hypergraph
        .edges()
        .find(|(_, e)| e.len() == 1)
        .and_then(|(_, e)| e.first().copied())?;
    let unit: VertexSet = [vertex].into_iter().collect();
    let effect = inst
        .hypergraph
        .shrink_in_place(&unit)
        .expect("edge members are vertices");
    let mut co_removed = effect.removed_vertices;
    co_removed.remove(&vertex);
    inst.k -= co_removed.len() as i64;
    Some(ReductionStep::UnitEdgeShrunk { vertex, co_removed })
}

/// Applies [`rule_unit_edge`] until no unit edge is left.
pub fn reduce_unit_edges(inst: &BelowNInstance) -> (BelowNInstance, ReductionTrace) {
    let mut cur = inst.clone();
    let mut trace = ReductionTrace::new();
    while let Some(step) = apply_unit_edge(&mut cur) {
        trace.push(step);
    }
    (cur, trace)
}

/// `(d+1)k - 1`, the largest vertex count a kernel can have.
pub fn vertex_bound(d: usize, k: i64) -> u128 {
    if k <= 0 {
        return 0;
    }
    ((d as u128 + 1) * k as u128).saturating_sub(1)
}

/// `d(d+1)k`.
pub fn edge_bound(d: usize, k: i64) -> u128 {
    if k <= 0 {
        return 0;
    }
    d as u128 * (d as u128 + 1) * k as u128
}

pub fn decide_or_kernel_below_n(inst: &BelowNInstance) -> KernelOutcome {
    if inst.hypergraph.has_empty_edge() {
        return KernelOutcome::no();
    }
    let (reduced, trace) = reduce_unit_edges(inst);
    let h = &reduced.hypergraph;
    let lift = |w: VertexSet| KernelOutcome::Decided {
        yes: true,
        witness: Some(trace.lift(&w).expect("unit-edge steps always lift")),
    };
    if reduced.k <= 0 {
        return lift(h.vertices().clone());
    }
    if reduced.k > h.vertex_count() as i64 {
        return KernelOutcome::no();
    }
    let order = degeneracy_order(h);
    let d = order.degeneracy();
    if h.vertex_count() as u128 >= (d as u128 + 1) * reduced.k as u128 {
        let coloring = proper_coloring(h, &order).expect("no unit or empty edges remain");
        let independent = coloring.largest_class();
        let witness = h.vertices().difference(&independent).copied().collect();
        return lift(witness);
    }
    KernelOutcome::Kernel {
        instance: Problem::BelowN(reduced),
        trace,
    }
}

/// Lifts a kernel solution back through the unit-edge steps. Each step
/// contributes its forced vertex; the free co-removed vertices stay out.
pub fn lift_witness_n(
    kernel: &BelowNInstance,
    trace: &ReductionTrace,
    witness: &VertexSet,
) -> Result<VertexSet> {
    if !kernel.is_solution(witness) {
        return Err(Error::InvalidWitness(
            "not a hitting set of the kernel within n - k".into(),
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

    fn inst(edges: &[&[u32]], k: i64) -> BelowNInstance {
        BelowNInstance::new(
            Hypergraph::from_edges(edges.iter().map(|e| e.iter().copied()), []),
            k,
        )
    }

    #[test]
    fn unit_edge_with_free_vertex() {
        let (next, step) = rule_unit_edge(&inst(&[&[1], &[1, 2], &[3, 4]], 2)).unwrap();
        assert_eq!(
            step,
            ReductionStep::UnitEdgeShrunk {
                vertex: 1,
                co_removed: set(&[2])
            }
        );
        assert_eq!(next.k, 1);
        assert_eq!(next.hypergraph.vertices(), &set(&[3, 4]));
    }

    #[test]
    fn unit_edge_without_free_vertex() {
        let (next, step) = rule_unit_edge(&inst(&[&[1], &[2, 3]], 1)).unwrap();
        assert_eq!(step.k_delta(), 0);
        assert_eq!(next.k, 1);
        assert_eq!(next.hypergraph.vertices(), &set(&[2, 3]));
        assert!(rule_unit_edge(&inst(&[&[2, 3]], 1)).is_none());
    }

    #[test]
    fn triangle_decisions() {
        let t = |k| inst(&[&[1, 2], &[2, 3], &[1, 3]], k);
        match decide_or_kernel_below_n(&t(1)) {
            KernelOutcome::Decided {
                yes: true,
                witness: Some(w),
            } => {
                assert_eq!(w.len(), 2);
                assert!(t(1).is_solution(&w));
            }
            other => panic!("unexpected {other:?}"),
        }
        match decide_or_kernel_below_n(&t(2)) {
            KernelOutcome::Kernel { instance, trace } => {
                assert_eq!(instance, Problem::BelowN(t(2)));
                assert!(trace.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unit_edges_can_decide() {
        let i = inst(&[&[1], &[1, 2]], 1);
        match decide_or_kernel_below_n(&i) {
            KernelOutcome::Decided {
                yes: true,
                witness: Some(w),
            } => {
                assert_eq!(w, set(&[1]));
                assert!(i.is_solution(&w));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            decide_or_kernel_below_n(&inst(&[&[1, 2]], 3)),
            KernelOutcome::no()
        );
        assert_eq!(
            decide_or_kernel_below_n(&inst(&[&[1, 2], &[]], 0)),
            KernelOutcome::no()
        );
    }

    #[test]
    fn lift_adds_forced_vertex_only() {
        let trace: ReductionTrace = [ReductionStep::UnitEdgeShrunk {
            vertex: 1,
            co_removed: set(&[2]),
        }]
        .into_iter()
        .collect();
        let kernel = inst(&[&[3, 4]], 1);
        assert_eq!(
            lift_witness_n(&kernel, &trace, &set(&[3])).unwrap(),
            set(&[1, 3])
        );
        assert_eq!(
            lift_witness_n(&kernel, &ReductionTrace::new(), &set(&[4])).unwrap(),
            set(&[4])
        );
        assert!(lift_witness_n(&kernel, &trace, &set(&[3, 4])).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(vertex_bound(2, 2), 5);
        assert_eq!(edge_bound(2, 2), 12);
        assert_eq!(vertex_bound(0, 3), 2);
    }
}
