//! Kernelizers behind a common trait, looked up by name.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hypercore::degeneracy;
use crate::kernel_below_m::{self, BelowMInstance};
use crate::kernel_below_n::{self, BelowNInstance};
use crate::nonblocker::{self, NonblockerInstance};
use crate::problem::{Graph, InputKind, KernelOutcome, Problem};

/// Guaranteed size limits for a kernel. `None` means no edge bound is
/// claimed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelBounds {
    pub vertices: u128,
    pub edges: Option<u128>,
}

impl KernelBounds {
    pub fn admits(&self, kernel: &Problem) -> bool {
        kernel.vertex_count() as u128 <= self.vertices
            && self.edges.is_none_or(|e| kernel.edge_count() as u128 <= e)
    }
}

pub trait Kernelizer: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn input_kind(&self) -> InputKind;

    /// Wraps an input graph and parameter into the problem this kernelizer
    /// handles.
    fn problem(&self, graph: Graph, k: i64) -> Result<Problem>;

    fn kernelize(&self, problem: &Problem) -> Result<KernelOutcome>;

    /// Size limits that `kernel`, produced from `input`, is guaranteed to
    /// satisfy.
    fn bounds(&self, input: &Problem, kernel: &Problem) -> KernelBounds;
}

fn wrong_input(variant: &'static str, found: &Graph) -> Error {
    Error::WrongInput {
        variant,
        found: match found {
            Graph::Hypergraph(_) => "hypergraph",
            Graph::Digraph(_) => "digraph",
        },
    }
}

fn wrong_problem(variant: &'static str, found: &Problem) -> Error {
    Error::WrongInput {
        variant,
        found: match found {
            Problem::BelowM(_) => "below-m",
            Problem::BelowN(_) => "below-n",
            Problem::Nonblocker(_) => "nonblocker",
        },
    }
}

pub struct BelowM;

impl Kernelizer for BelowM {
    fn name(&self) -> &'static str {
        "below-m"
    }

    fn description(&self) -> &'static str {
        "hitting set of size at most m - k; kernel with at most k*4^k vertices and edges"
    }

    fn input_kind(&self) -> InputKind {
        InputKind::Hypergraph
    }

    fn problem(&self, graph: Graph, k: i64) -> Result<Problem> {
        match graph {
            Graph::Hypergraph(h) => Ok(Problem::BelowM(BelowMInstance::new(h, k))),
            other => Err(wrong_input(self.name(), &other)),
        }
    }

    fn kernelize(&self, problem: &Problem) -> Result<KernelOutcome> {
        match problem {
            Problem::BelowM(i) => Ok(kernel_below_m::kernelize_below_m(i)),
            other => Err(wrong_problem(self.name(), other)),
        }
    }

    fn bounds(&self, _input: &Problem, kernel: &Problem) -> KernelBounds {
        let b = kernel_below_m::kernel_bound(kernel.k());
        KernelBounds {
            vertices: b,
            edges: Some(b),
        }
    }
}

pub struct BelowN;

fn below_n_bounds(kernel: &Problem) -> KernelBounds {
    let Problem::BelowN(i) = kernel else {
        return KernelBounds {
            vertices: 0,
            edges: Some(0),
        };
    };
    let d = degeneracy(&i.hypergraph);
    KernelBounds {
        vertices: kernel_below_n::vertex_bound(d, i.k),
        edges: Some(kernel_below_n::edge_bound(d, i.k)),
    }
}

impl Kernelizer for BelowN {
    fn name(&self) -> &'static str {
        "below-n"
    }

    fn description(&self) -> &'static str {
        "hitting set of size at most n - k in a d-degenerate hypergraph; kernel below (d+1)k vertices"
    }

    fn input_kind(&self) -> InputKind {
        InputKind::Hypergraph
    }

    fn problem(&self, graph: Graph, k: i64) -> Result<Problem> {
        match graph {
            Graph::Hypergraph(h) => Ok(Problem::BelowN(BelowNInstance::new(h, k))),
            other => Err(wrong_input(self.name(), &other)),
        }
    }

    fn kernelize(&self, problem: &Problem) -> Result<KernelOutcome> {
        match problem {
            Problem::BelowN(i) => Ok(kernel_below_n::decide_or_kernel_below_n(i)),
            other => Err(wrong_problem(self.name(), other)),
        }
    }

    fn bounds(&self, _input: &Problem, kernel: &Problem) -> KernelBounds {
        below_n_bounds(kernel)
    }
}

pub struct Nonblocker;

impl Kernelizer for Nonblocker {
    fn name(&self) -> &'static str {
        "nonblocker"
    }

    fn description(&self) -> &'static str {
        "dominating set of size at most n - k in a digraph; kernel with at most 3k - 1 vertices"
    }

    fn input_kind(&self) -> InputKind {
        InputKind::Digraph
    }

    fn problem(&self, graph: Graph, k: i64) -> Result<Problem> {
        match graph {
            Graph::Digraph(d) => Ok(Problem::Nonblocker(NonblockerInstance::new(d, k))),
            other => Err(wrong_input(self.name(), &other)),
        }
    }

    fn kernelize(&self, problem: &Problem) -> Result<KernelOutcome> {
        match problem {
            Problem::Nonblocker(i) => Ok(nonblocker::kernelize_nonblocker(i)),
            other => Err(wrong_problem(self.name(), other)),
        }
    }

    fn bounds(&self, _input: &Problem, kernel: &Problem) -> KernelBounds {
        KernelBounds {
            vertices: nonblocker::linear_bound(kernel.k()),
            edges: None,
        }
    }
}

/// The nonblocker problem solved through the below-`n` hitting set kernel.
pub struct NonblockerQuadratic;

impl Kernelizer for NonblockerQuadratic {
    fn name(&self) -> &'static str {
        "nonblocker-quadratic"
    }

    fn description(&self) -> &'static str {
        "nonblocker through the below-n kernel; at most k^2 + k - 1 vertices"
    }

    fn input_kind(&self) -> InputKind {
        InputKind::Digraph
    }

    fn problem(&self, graph: Graph, k: i64) -> Result<Problem> {
        Nonblocker.problem(graph, k)
    }

    fn kernelize(&self, problem: &Problem) -> Result<KernelOutcome> {
        match problem {
            Problem::Nonblocker(i) => Ok(nonblocker::kernelize_nonblocker_quadratic(i)),
            other => Err(wrong_problem(self.name(), other)),
        }
    }

    fn bounds(&self, input: &Problem, kernel: &Problem) -> KernelBounds {
        let mut b = below_n_bounds(kernel);
        b.vertices = b.vertices.min(nonblocker::quadratic_bound(input.k()));
        b
    }
}

#[derive(Clone)]
pub struct Registry {
    entries: BTreeMap<&'static str, Arc<dyn Kernelizer>>,
}

impl Registry {
    pub fn empty() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    /// Adds `k` under its name, replacing any earlier entry of that name.
    pub fn register(&mut self, k: Arc<dyn Kernelizer>) {
        self.entries.insert(k.name(), k);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Kernelizer> {
        self.entries.get(name).map(|k| k.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Kernelizer> + '_ {
        self.entries.values().map(|k| k.as_ref())
    }
}

impl Default for Registry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Arc::new(BelowM));
        r.register(Arc::new(BelowN));
        r.register(Arc::new(Nonblocker));
        r.register(Arc::new(NonblockerQuadratic));
        r
    }
}
