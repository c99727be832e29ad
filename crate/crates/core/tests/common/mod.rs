//! Brute-force reference oracles and seeded instance factories shared by the
//! integration tests. The oracles enumerate subsets over bitmasks and only
//! read vertex and edge lists from the library types.
#![allow(dead_code)]

use hskernel::{Digraph, Hypergraph, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Vertex ids in increasing order and every edge as a bitmask over them.
pub fn masks(h: &Hypergraph) -> (Vec<VertexId>, Vec<u32>) {
    let ids: Vec<VertexId> = h.vertices().iter().copied().collect();
    assert!(ids.len() <= 24, "brute force is limited to 24 vertices");
    let pos = |v: &VertexId| ids.iter().position(|u| u == v).unwrap();
    let edges = h
        .edges()
        .map(|(_, e)| e.iter().fold(0u32, |acc, v| acc | 1 << pos(v)))
        .collect();
    (ids, edges)
}

pub fn mask_of(ids: &[VertexId], set: impl IntoIterator<Item = VertexId>) -> u32 {
    set.into_iter().fold(0, |acc, v| {
        acc | 1 << ids.iter().position(|u| *u == v).unwrap()
    })
}

/// Minimum hitting set size, `None` when an empty edge makes it infeasible.
pub fn min_hitting_set(h: &Hypergraph) -> Option<usize> {
    let (ids, edges) = masks(h);
    (0u32..1 << ids.len())
        .filter(|s| edges.iter().all(|e| e & s != 0))
        .map(|s| s.count_ones() as usize)
        .min()
}

pub fn hitting_set_within(h: &Hypergraph, size: i64) -> bool {
    min_hitting_set(h).is_some_and(|t| t as i64 <= size)
}

/// Largest set containing no edge entirely.
pub fn alpha(h: &Hypergraph) -> usize {
    let (ids, edges) = masks(h);
    (0u32..1 << ids.len())
        .filter(|s| edges.iter().all(|e| e & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Minimum dominating set of a digraph: every vertex is chosen or has an
/// in-neighbour that is chosen.
pub fn gamma(d: &Digraph) -> usize {
    let ids: Vec<VertexId> = d.vertices().iter().copied().collect();
    assert!(ids.len() <= 24);
    let pos = |v: VertexId| ids.iter().position(|u| *u == v).unwrap();
    let mut reach: Vec<u32> = (0..ids.len()).map(|i| 1 << i).collect();
    for (u, v) in d.arcs() {
        reach[pos(u)] |= 1 << pos(v);
    }
    let all = if ids.is_empty() {
        0
    } else {
        u32::MAX >> (32 - ids.len())
    };
    (0u32..1 << ids.len())
        .filter(|s| {
            let covered = (0..ids.len())
                .filter(|i| s >> i & 1 == 1)
                .fold(0, |acc, i| acc | reach[i]);
            covered == all
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Independence number of `g` read as an undirected graph.
pub fn graph_alpha(g: &Digraph) -> usize {
    let ids: Vec<VertexId> = g.vertices().iter().copied().collect();
    let pos = |v: VertexId| ids.iter().position(|u| *u == v).unwrap();
    let pairs: Vec<u32> = g.arcs().map(|(u, v)| 1 << pos(u) | 1 << pos(v)).collect();
    (0u32..1 << ids.len())
        .filter(|s| pairs.iter().all(|p| p & s != *p))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Degeneracy straight from the definition: the largest minimum degree of
/// `H ⊖ X` over all proper subsets `X`. `H ⊖ X` drops the edges meeting `X`,
/// the vertices of `X`, and every vertex all of whose edges were dropped.
pub fn degeneracy_by_definition(h: &Hypergraph) -> usize {
    let (ids, edges) = masks(h);
    let n = ids.len();
    let all: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut best = 0;
    for x in 0..all {
        let kept: Vec<u32> = edges.iter().copied().filter(|e| e & x == 0).collect();
        let dropped_span = edges
            .iter()
            .filter(|e| *e & x != 0)
            .fold(0, |acc, e| acc | e);
        let kept_span = kept.iter().fold(0, |acc, e| acc | e);
        let gone = x | (dropped_span & !kept_span);
        let min_deg = (0..n)
            .filter(|i| gone >> i & 1 == 0)
            .map(|i| kept.iter().filter(|e| *e >> i & 1 == 1).count())
            .min();
        if let Some(m) = min_deg {
            best = best.max(m);
        }
    }
    best
}

/// Whether some `S` with `|S| <= k` hits at least `|S| + k` edges.
pub fn has_mini_hitting_set(h: &Hypergraph, k: i64) -> bool {
    let (ids, edges) = masks(h);
    (0u32..1 << ids.len()).any(|s| {
        let size = s.count_ones() as i64;
        let hit = edges.iter().filter(|e| *e & s != 0).count() as i64;
        size <= k && hit >= size + k
    })
}

pub fn is_proper_coloring(h: &Hypergraph, color: impl Fn(VertexId) -> u32) -> bool {
    h.edges().all(|(_, e)| {
        let mut it = e.iter().map(|v| color(*v));
        match it.next() {
            Some(first) => it.any(|c| c != first),
            None => true,
        }
    })
}

/// Random hypergraph on `1..=n` with `m` edges of size `1..=max_edge`.
/// Parallel edges and unit edges occur on purpose.
pub fn random_hypergraph(rng: &mut impl Rng, n: usize, m: usize, max_edge: usize) -> Hypergraph {
    let mut edges = Vec::new();
    for _ in 0..m {
        let size = rng.gen_range(1..=max_edge.min(n));
        let members = rand::seq::index::sample(rng, n, size)
            .into_iter()
            .map(|i| i as VertexId + 1)
            .collect::<Vec<_>>();
        edges.push(members);
    }
    Hypergraph::from_edges(edges, 1..=n as VertexId)
}

pub fn random_digraph(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let mut d = Digraph::with_vertices(1..=n as VertexId);
    for u in 1..=n as VertexId {
        for v in 1..=n as VertexId {
            if u != v && rng.gen_bool(p) {
                d.add_arc(u, v).unwrap();
            }
        }
    }
    d
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The hypergraph corpus: `count` instances with `n <= 12`, `m <= 14`,
/// mixing dense small-edge and sparse large-edge shapes.
pub fn hypergraph_corpus(count: usize, seed: u64) -> Vec<Hypergraph> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let n = r.gen_range(1..=12);
            let m = r.gen_range(0..=14);
            let max_edge = [2, 3, 4, n][i % 4];
            random_hypergraph(&mut r, n, m, max_edge.max(1))
        })
        .collect()
}

/// Digraphs with `n <= 12` and a spread of densities, some with isolated
/// vertices and several sources.
pub fn digraph_corpus(count: usize, seed: u64) -> Vec<Digraph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=12);
            let p = [0.05, 0.15, 0.3, 0.6][r.gen_range(0..4)];
            random_digraph(&mut r, n, p)
        })
        .collect()
}

fn set_of(ids: &[VertexId], mask: u32) -> hskernel::VertexSet {
    (0..ids.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| ids[i])
        .collect()
}

/// Some minimum hitting set, `None` when infeasible.
pub fn min_hitting_set_witness(h: &Hypergraph) -> Option<hskernel::VertexSet> {
    let (ids, edges) = masks(h);
    (0u32..1 << ids.len())
        .filter(|s| edges.iter().all(|e| e & s != 0))
        .min_by_key(|s| s.count_ones())
        .map(|s| set_of(&ids, s))
}

/// Some set `S` with `|S| <= k` hitting at least `|S| + k` edges.
pub fn mini_hitting_set_witness(h: &Hypergraph, k: i64) -> Option<hskernel::VertexSet> {
    let (ids, edges) = masks(h);
    (0u32..1 << ids.len())
        .find(|s| {
            let size = s.count_ones() as i64;
            let hit = edges.iter().filter(|e| *e & s != 0).count() as i64;
            size <= k && hit >= size + k
        })
        .map(|s| set_of(&ids, s))
}

pub fn hits_all(h: &Hypergraph, w: &hskernel::VertexSet) -> bool {
    w.is_subset(h.vertices()) && h.edges().all(|(_, e)| e.iter().any(|v| w.contains(v)))
}

pub fn dominates(d: &Digraph, w: &hskernel::VertexSet) -> bool {
    w.is_subset(d.vertices())
        && d.vertices()
            .iter()
            .all(|v| w.contains(v) || d.arcs().any(|(a, b)| b == *v && w.contains(&a)))
}

/// `k·4^k`, saturating, `0` for `k <= 0`.
pub fn below_m_bound(k: i64) -> u128 {
    if k <= 0 {
        return 0;
    }
    let mut b = k as u128;
    for _ in 0..k {
        b = b.saturating_mul(4);
    }
    b
}
