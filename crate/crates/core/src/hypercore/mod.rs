//! Hypergraphs, digraphs and the primitive operations the kernels are built
//! from: deletions, the shrink operator `⊖`, degeneracy peeling and the
//! degeneracy-bounded colouring.

mod coloring;
mod degeneracy;
mod digraph;
mod hypergraph;

pub use coloring::{proper_coloring, Color, Coloring};
pub use degeneracy::{degeneracy, degeneracy_order, DegeneracyOrder};
pub use digraph::Digraph;
pub use hypergraph::{Hypergraph, ShrinkEffect};
