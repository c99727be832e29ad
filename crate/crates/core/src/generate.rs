//! Seeded instance generators.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypercore::{Digraph, Hypergraph};
use crate::kernel_below_n::BelowNInstance;
use crate::VertexId;

/// Largest edge size used by [`gen_random_degenerate`].
pub const DEFAULT_MAX_EDGE: usize = 3;

/// A random hypergraph on `1..=n` with `m` edges and degeneracy at most `d`.
///
/// Vertices are inserted in order. Each vertex `i` owns at most `d` edges,
/// and all other members of an owned edge come from `1..i`, so removing
/// vertices in reverse insertion order never meets a degree above `d`.
/// Edges have between 2 and `max_edge` vertices.
pub fn gen_random_degenerate_with(
    n: usize,
    d: usize,
    m: usize,
    max_edge: usize,
    seed: u64,
) -> Result<Hypergraph> {
    if max_edge < 2 {
        return Err(Error::Generator("edges need room for 2 vertices".into()));
    }
    if n > VertexId::MAX as usize {
        return Err(Error::Generator(format!("n = {n} is too large")));
    }
    let capacity = d.saturating_mul(n.saturating_sub(1));
    if m > capacity {
        return Err(Error::Generator(format!(
            "{m} edges do not fit: n = {n}, d = {d} allows at most {capacity}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = Hypergraph::with_vertices(1..=n as VertexId);
    // Slot s belongs to vertex 2 + s / d.
    let mut slots = index::sample(&mut rng, capacity, m).into_vec();
    slots.sort_unstable();
    for s in slots {
        let owner = 2 + s / d;
        let size = rng.gen_range(2..=max_edge.min(owner));
        let mut edge: Vec<VertexId> = index::sample(&mut rng, owner - 1, size - 1)
            .into_iter()
            .map(|i| i as VertexId + 1)
            .collect();
        edge.push(owner as VertexId);
        h.add_edge(edge).expect("members are in range");
    }
    Ok(h)
}

pub fn gen_random_degenerate(n: usize, d: usize, m: usize, seed: u64) -> Result<Hypergraph> {
    gen_random_degenerate_with(n, d, m, DEFAULT_MAX_EDGE, seed)
}

/// Each ordered pair of distinct vertices in `1..=n` becomes an arc with
/// probability `arc_prob`.
pub fn gen_random_digraph(n: usize, arc_prob: f64, seed: u64) -> Result<Digraph> {
    if !(0.0..=1.0).contains(&arc_prob) {
        return Err(Error::Generator(format!(
            "arc probability {arc_prob} outside [0, 1]"
        )));
    }
    if n > VertexId::MAX as usize {
        return Err(Error::Generator(format!("n = {n} is too large")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Digraph::with_vertices(1..=n as VertexId);
    for u in 1..=n as VertexId {
        for v in 1..=n as VertexId {
            if u != v && rng.gen_bool(arc_prob) {
                g.add_arc(u, v).expect("vertices exist");
            }
        }
    }
    Ok(g)
}

/// Reads `g` as an undirected graph and makes each edge a hyperedge of size
/// 2. `g` has an independent set of size `k` iff the result has a hitting
/// set of size `n - k`.
pub fn gen_from_graph_is(g: &Digraph, k: i64) -> BelowNInstance {
    let mut h = Hypergraph::with_vertices(g.vertices().iter().copied());
    for (u, v) in g.arcs() {
        if u < v || !g.has_arc(v, u) {
            h.add_edge([u, v]).expect("arc ends are vertices");
        }
    }
    BelowNInstance::new(h, k)
}
