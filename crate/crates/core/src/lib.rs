//! Kernelization for Hitting Set parameterized below the number of edges
//! (`m - k`) and below the number of vertices (`n - k`, with degeneracy as a
//! second parameter), and for Directed Nonblocker.
//!
//! Every kernelizer either decides its instance outright, with a witness
//! that can be checked against the input, or returns an equivalent smaller
//! instance together with a [`ReductionTrace`] that lifts kernel solutions
//! back to the original ids.
//!
//! Kernelizers share the [`Kernelizer`] trait and are looked up by name in a
//! [`Registry`]:
//!
//! ```
//! use hskernel::{Hypergraph, Registry, Graph, KernelOutcome};
//!
//! let registry = Registry::default();
//! let below_m = registry.get("below-m").unwrap();
//! let triangle = Hypergraph::from_edges([[1, 2], [2, 3], [1, 3]], []);
//! let problem = below_m.problem(Graph::Hypergraph(triangle), 1).unwrap();
//! match below_m.kernelize(&problem).unwrap() {
//!     KernelOutcome::Decided { yes, .. } => assert!(yes),
//!     KernelOutcome::Kernel { .. } => unreachable!(),
//! }
//! ```

use std::collections::BTreeSet;

pub mod error;
pub mod generate;
pub mod hypercore;
pub mod io;
pub mod kernel_below_m;
pub mod kernel_below_n;
pub mod nonblocker;
pub mod oracles;
pub mod pipeline;
pub mod problem;
pub mod registry;
pub mod trace;

pub type VertexId = u32;
pub type EdgeId = u32;
pub type VertexSet = BTreeSet<VertexId>;
pub type EdgeSet = BTreeSet<EdgeId>;

pub use error::{Error, Result};
pub use hypercore::{Digraph, Hypergraph};
pub use problem::{Graph, KernelOutcome, Problem};
pub use registry::{Kernelizer, Registry};
pub use trace::{ReductionStep, ReductionTrace};
