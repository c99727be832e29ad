//! The three parameterized problems under one type, so that kernelizers,
//! solvers and the command line can treat them uniformly.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypercore::{Digraph, Hypergraph};
use crate::kernel_below_m::BelowMInstance;
use crate::kernel_below_n::BelowNInstance;
use crate::nonblocker::NonblockerInstance;
use crate::oracles::{self, InstanceRef, WitnessKind};
use crate::trace::ReductionTrace;
use crate::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Hypergraph,
    Digraph,
}

impl fmt::Display for InputKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputKind::Hypergraph => "hypergraph",
            InputKind::Digraph => "digraph",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph {
    Hypergraph(Hypergraph),
    Digraph(Digraph),
}

impl Graph {
    pub fn kind(&self) -> InputKind {
        match self {
            Graph::Hypergraph(_) => InputKind::Hypergraph,
            Graph::Digraph(_) => InputKind::Digraph,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    /// Hitting set of size at most `m - k`.
    BelowM(BelowMInstance),
    /// Hitting set of size at most `n - k`.
    BelowN(BelowNInstance),
    /// Dominating set of size at most `n - k`.
    Nonblocker(NonblockerInstance),
}

impl Problem {
    pub fn k(&self) -> i64 {
        match self {
            Problem::BelowM(i) => i.k,
            Problem::BelowN(i) => i.k,
            Problem::Nonblocker(i) => i.k,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Problem::BelowM(i) => i.hypergraph.vertex_count(),
            Problem::BelowN(i) => i.hypergraph.vertex_count(),
            Problem::Nonblocker(i) => i.digraph.vertex_count(),
        }
    }

    /// Edges of a hypergraph, arcs of a digraph.
    pub fn edge_count(&self) -> usize {
        match self {
            Problem::BelowM(i) => i.hypergraph.edge_count(),
            Problem::BelowN(i) => i.hypergraph.edge_count(),
            Problem::Nonblocker(i) => i.digraph.arc_count(),
        }
    }

    /// Largest allowed witness size.
    pub fn target_size(&self) -> i64 {
        match self {
            Problem::BelowM(i) => i.target_size(),
            Problem::BelowN(i) => i.target_size(),
            Problem::Nonblocker(i) => i.target_size(),
        }
    }

    pub fn is_solution(&self, witness: &VertexSet) -> bool {
        match self {
            Problem::BelowM(i) => i.is_solution(witness),
            Problem::BelowN(i) => i.is_solution(witness),
            Problem::Nonblocker(i) => i.is_solution(witness),
        }
    }

    pub fn witness_kind(&self) -> WitnessKind {
        match self {
            Problem::BelowM(_) | Problem::BelowN(_) => WitnessKind::Hitting,
            Problem::Nonblocker(_) => WitnessKind::Dominating,
        }
    }

    pub fn instance(&self) -> InstanceRef<'_> {
        match self {
            Problem::BelowM(i) => InstanceRef::Hypergraph(&i.hypergraph),
            Problem::BelowN(i) => InstanceRef::Hypergraph(&i.hypergraph),
            Problem::Nonblocker(i) => InstanceRef::Digraph(&i.digraph),
        }
    }

    /// Solves the instance with the exact oracle. Returns an optimal witness
    /// when it fits the target size, `None` otherwise.
    pub fn solve_exact(&self, budget: Option<u64>) -> Result<Option<VertexSet>> {
        let target = self.target_size();
        let best = match self.instance() {
            InstanceRef::Hypergraph(h) => match oracles::min_hitting_set(h, budget) {
                Ok(r) => r,
                Err(Error::EmptyEdge) => return Ok(None),
                Err(e) => return Err(e),
            },
            InstanceRef::Digraph(d) => oracles::min_dominating_set(d, budget)?,
        };
        Ok((best.optimum as i64 <= target).then_some(best.witness))
    }

    /// Checks `witness` against this kernel and maps it back through `trace`.
    pub fn lift(&self, trace: &ReductionTrace, witness: &VertexSet) -> Result<VertexSet> {
        if !self.is_solution(witness) {
            return Err(Error::InvalidWitness(format!(
                "not a solution of the kernel within {}",
                self.target_size()
            )));
        }
        trace.lift(witness)
    }
}

/// What a kernelizer produces: a decision or an equivalent smaller instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelOutcome {
    /// `witness` is present for every yes answer and is a solution of the
    /// original instance.
    Decided {
        yes: bool,
        witness: Option<VertexSet>,
    },
    /// `instance` is equivalent to the input; `trace` lifts its solutions.
    Kernel {
        instance: Problem,
        trace: ReductionTrace,
    },
}

impl KernelOutcome {
    pub fn no() -> Self {
        KernelOutcome::Decided {
            yes: false,
            witness: None,
        }
    }
}
