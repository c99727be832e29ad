//! Kernelize, solve the kernel exactly, lift, verify.

use crate::error::{Error, Result};
use crate::problem::{KernelOutcome, Problem};
use crate::registry::{KernelBounds, Kernelizer};
use crate::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelSummary {
    pub vertices: usize,
    pub edges: usize,
    pub k: i64,
    pub bounds: KernelBounds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub yes: bool,
    /// A verified solution of the input whenever `yes` holds.
    pub witness: Option<VertexSet>,
    /// Present when the kernelizer returned a kernel instead of deciding.
    pub kernel: Option<KernelSummary>,
}

/// Runs `kernelizer` on `problem` and finishes with the exact oracle on the
/// kernel. Every yes witness is checked against the input; a failed check,
/// or a kernel outside its size bounds, is reported as
/// [`Error::Invariant`].
pub fn solve(
    kernelizer: &dyn Kernelizer,
    problem: &Problem,
    budget: Option<u64>,
) -> Result<Solution> {
    let (yes, witness, kernel) = match kernelizer.kernelize(problem)? {
        KernelOutcome::Decided { yes, witness } => (yes, witness, None),
        KernelOutcome::Kernel { instance, trace } => {
            let bounds = kernelizer.bounds(problem, &instance);
            if !bounds.admits(&instance) {
                return Err(Error::Invariant(format!(
                    "kernel with {} vertices and {} edges exceeds {bounds:?}",
                    instance.vertex_count(),
                    instance.edge_count()
                )));
            }
            let summary = KernelSummary {
                vertices: instance.vertex_count(),
                edges: instance.edge_count(),
                k: instance.k(),
                bounds,
            };
            match instance.solve_exact(budget)? {
                Some(w) => {
                    let lifted = instance
                        .lift(&trace, &w)
                        .map_err(|e| Error::Invariant(format!("lifting failed: {e}")))?;
                    (true, Some(lifted), Some(summary))
                }
                None => (false, None, Some(summary)),
            }
        }
    };
    if yes {
        match &witness {
            Some(w) if problem.is_solution(w) => {}
            Some(_) => return Err(Error::Invariant("lifted witness does not verify".into())),
            None => return Err(Error::Invariant("yes answer without a witness".into())),
        }
    }
    Ok(Solution {
        yes,
        witness,
        kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{Digraph, Hypergraph};
    use crate::problem::Graph;
    use crate::registry::Registry;

    #[test]
    fn triangle_through_every_variant() {
        let r = Registry::default();
        let tri = Hypergraph::from_edges([[1, 2], [2, 3], [1, 3]], []);
        let dtri = Digraph::from_arcs([(1, 2), (2, 3), (3, 1)], []);
        for (name, graph, k, expect) in [
            ("below-m", Graph::Hypergraph(tri.clone()), 1, true),
            ("below-m", Graph::Hypergraph(tri.clone()), 2, false),
            ("below-n", Graph::Hypergraph(tri.clone()), 1, true),
            ("below-n", Graph::Hypergraph(tri), 2, false),
            ("nonblocker", Graph::Digraph(dtri.clone()), 1, true),
            ("nonblocker", Graph::Digraph(dtri.clone()), 2, false),
            ("nonblocker-quadratic", Graph::Digraph(dtri), 2, false),
        ] {
            let kz = r.get(name).unwrap();
            let p = kz.problem(graph, k).unwrap();
            let s = solve(kz, &p, None).unwrap();
            assert_eq!(s.yes, expect, "{name} k={k}");
        }
    }
}
