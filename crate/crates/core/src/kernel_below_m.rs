//! Hitting Set parameterized below `m`: is there a hitting set of size at
//! most `m - k`?
//!
//! The kernel is built from three cleanup rules run to a fixpoint (superset
//! edges, dominated vertices, isolated unit edges), a greedy search for a
//! *mini-hitting set* (at most `k` vertices covering at least `|S| + k`
//! edges), and, when the greedy search stalls, a rule that trims vertex
//! classes sharing the same covered edges. An irreducible instance has at
//! most `k·4^k` vertices and edges.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypercore::Hypergraph;
use crate::problem::{KernelOutcome, Problem};
use crate::trace::{ReductionStep, ReductionTrace};
use crate::{EdgeId, EdgeSet, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BelowMInstance {
    pub hypergraph: Hypergraph,
    pub k: i64,
}

impl BelowMInstance {
    pub fn new(hypergraph: Hypergraph, k: i64) -> Self {
        Self { hypergraph, k }
    }

    /// `m - k`, the largest admissible hitting set size.
    pub fn target_size(&self) -> i64 {
        self.hypergraph.edge_count() as i64 - self.k
    }

    pub fn is_solution(&self, witness: &VertexSet) -> bool {
        witness.is_subset(self.hypergraph.vertices())
            && self.hypergraph.is_hitting_set(witness)
            && witness.len() as i64 <= self.target_size()
    }
}

/// A set of at most `k` vertices hitting at least `|S| + k` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiniHittingSet(pub VertexSet);

impl MiniHittingSet {
    pub fn vertices(&self) -> &VertexSet {
        &self.0
    }
}

pub fn is_mini_hitting_set(inst: &BelowMInstance, set: &VertexSet) -> bool {
    let size = set.len() as i64;
    set.is_subset(inst.hypergraph.vertices())
        && size <= inst.k
        && inst.hypergraph.edges_hit_by(set).len() as i64 >= size + inst.k
}

/// Where greedy localization stopped without finding a mini-hitting set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationState {
    /// The greedily chosen vertices `S*`.
    pub chosen: VertexSet,
    /// `C = F[S*]`.
    pub covered: EdgeSet,
    /// `I = F \ C`.
    pub uncovered: EdgeSet,
}

impl LocalizationState {
    /// Checks the structure a stalled greedy run guarantees on a reduced
    /// instance: `|S*| < k`, `|C| < 2k`, every vertex meets `C` and meets at
    /// most one edge of `I`, and every degree is at most `k`. Returns one
    /// message per violated property.
    pub fn property_violations(&self, inst: &BelowMInstance) -> Vec<String> {
        let k = inst.k;
        let mut out = Vec::new();
        if self.chosen.len() as i64 >= k {
            out.push(format!("|S*| = {} is not below k = {k}", self.chosen.len()));
        }
        if self.covered.len() as i64 >= 2 * k {
            out.push(format!(
                "|C| = {} is not below 2k = {}",
                self.covered.len(),
                2 * k
            ));
        }
        for (v, edges) in inst.hypergraph.incidence() {
            let in_c = edges.intersection(&self.covered).count();
            let in_i = edges.intersection(&self.uncovered).count();
            if in_c < 1 {
                out.push(format!("vertex {v} meets no edge of C"));
            }
            if in_i > 1 {
                out.push(format!("vertex {v} meets {in_i} edges of I"));
            }
            if edges.len() as i64 > k {
                out.push(format!("vertex {v} has degree {} > k", edges.len()));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Localization {
    Mini(MiniHittingSet),
    Stalled(LocalizationState),
}

fn find_subset_pair(h: &Hypergraph) -> Option<(EdgeId, EdgeId)> {
    let edges: Vec<(EdgeId, &VertexSet)> = h.edges().collect();
    for (i, &(a, ea)) in edges.iter().enumerate() {
        for &(b, eb) in &edges[i + 1..] {
            if ea.is_subset(eb) {
                return Some((a, b));
            }
            if eb.is_subset(ea) {
                return Some((b, a));
            }
        }
    }
    None
}

fn find_dominated_vertex(h: &Hypergraph) -> Option<(VertexId, VertexId)> {
    let inc = h.incidence();
    for (&u, fu) in &inc {
        for (&v, fv) in &inc {
            if u != v && fu.len() <= fv.len() && fu.is_subset(fv) {
                return Some((u, v));
            }
        }
    }
    None
}

fn find_isolated_unit(h: &Hypergraph) -> Option<(VertexId, EdgeId)> {
    let inc = h.incidence();
    inc.iter().find_map(|(&v, fv)| {
        let &e = fv.first()?;
        (fv.len() == 1 && h.edge(e)?.len() == 1).then_some((v, e))
    })
}

fn apply_subset(inst: &mut BelowMInstance) -> Option<ReductionStep> {
    let (kept, deleted) = find_subset_pair(&inst.hypergraph)?;
    inst.hypergraph.remove_edge(deleted).ok()?;
    inst.k -= 1;
    Some(ReductionStep::SupersetEdgeDeleted { kept, deleted })
}

fn apply_subelement(inst: &mut BelowMInstance) -> Option<ReductionStep> {
    let (deleted, dominator) = find_dominated_vertex(&inst.hypergraph)?;
    inst.hypergraph.remove_vertex(deleted).ok()?;
    Some(ReductionStep::DominatedVertexDeleted { deleted, dominator })
}

fn apply_unit_self(inst: &mut BelowMInstance) -> Option<ReductionStep> {
    let (vertex, edge) = find_isolated_unit(&inst.hypergraph)?;
    inst.hypergraph.remove_edge(edge).ok()?;
    inst.hypergraph.remove_vertex(vertex).ok()?;
    Some(ReductionStep::UnitSelfDeleted { vertex, edge })
}

fn apply_pure(
    inst: &BelowMInstance,
    rule: fn(&mut BelowMInstance) -> Option<ReductionStep>,
) -> Option<(BelowMInstance, ReductionStep)> {
    let mut next = inst.clone();
    rule(&mut next).map(|step| (next, step))
}

/// If some edge contains another (first pair in id order), deletes the
/// superset edge and decrements `k`. Hitting sets are unchanged and so is
/// `m - k`.
pub fn rule_subset(inst: &BelowMInstance) -> Option<(BelowMInstance, ReductionStep)> {
    apply_pure(inst, apply_subset)
}

/// If `F[u] ⊆ F[v]` for distinct `u`, `v` (smallest pair in id order),
/// deletes `u`.
pub fn rule_subelement(inst: &BelowMInstance) -> Option<(BelowMInstance, ReductionStep)> {
    apply_pure(inst, apply_subelement)
}

/// If `{v}` is an edge and the only edge at `v`, deletes both.
pub fn rule_unit_self(inst: &BelowMInstance) -> Option<(BelowMInstance, ReductionStep)> {
    apply_pure(inst, apply_unit_self)
}

/// Runs the three cleanup rules, in priority order, until none applies.
///
/// Fails with [`Error::EmptyEdge`] if the instance has an edge that can
/// never be hit.
pub fn reduce_m(inst: &BelowMInstance) -> Result<(BelowMInstance, ReductionTrace)> {
    let mut cur = inst.clone();
    let mut trace = ReductionTrace::new();
    loop {
        if cur.hypergraph.has_empty_edge() {
            return Err(Error::EmptyEdge);
        }
        let step = apply_subset(&mut cur)
            .or_else(|| apply_subelement(&mut cur))
            .or_else(|| apply_unit_self(&mut cur));
        match step {
            Some(step) => trace.push(step),
            None => return Ok((cur, trace)),
        }
    }
}

/// Greedily grows `S*` by the vertex covering the most new edges (smallest
/// id on ties) while `S*` is not yet a mini-hitting set and some vertex
/// still covers at least two new edges.
pub fn greedy_localize(inst: &BelowMInstance) -> Localization {
    let inc = inst.hypergraph.incidence();
    let mut chosen = VertexSet::new();
    let mut covered = EdgeSet::new();
    while (covered.len() as i64) < chosen.len() as i64 + inst.k {
        let best = inc
            .iter()
            .map(|(&v, fv)| (fv.difference(&covered).count(), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        match best {
            Some((gain, v)) if gain > 1 => {
                chosen.insert(v);
                covered.extend(inc[&v].iter().copied());
            }
            _ => break,
        }
    }
    if covered.len() as i64 >= chosen.len() as i64 + inst.k {
        Localization::Mini(MiniHittingSet(chosen))
    } else {
        let uncovered = inst
            .hypergraph
            .edge_ids()
            .filter(|id| !covered.contains(id))
            .collect();
        Localization::Stalled(LocalizationState {
            chosen,
            covered,
            uncovered,
        })
    }
}

fn add_one_vertex_per_unhit_edge(h: &Hypergraph, start: &VertexSet) -> Result<VertexSet> {
    let mut out = start.clone();
    for (_, e) in h.edges() {
        if e.is_disjoint(start) {
            out.insert(*e.first().ok_or(Error::EmptyEdge)?);
        }
    }
    Ok(out)
}

/// Extends a mini-hitting set to a hitting set of size at most `m - k` by
/// adding the smallest vertex of every edge it misses.
pub fn expand_mini(inst: &BelowMInstance, mini: &VertexSet) -> Result<VertexSet> {
    if !is_mini_hitting_set(inst, mini) {
        return Err(Error::precondition("not a mini-hitting set"));
    }
    add_one_vertex_per_unhit_edge(&inst.hypergraph, mini)
}

/// Extracts a mini-hitting set from a hitting set of size at most `m - k`:
/// the set itself when it has at most `k` vertices, otherwise the first `k`
/// picks of a max-coverage greedy run over its members.
pub fn compress_to_mini(inst: &BelowMInstance, set: &VertexSet) -> Result<MiniHittingSet> {
    let h = &inst.hypergraph;
    if inst.k < 0 {
        return Err(Error::precondition("k must be non-negative"));
    }
    if !set.is_subset(h.vertices()) || !h.is_hitting_set(set) {
        return Err(Error::precondition("not a hitting set"));
    }
    if set.len() as i64 > inst.target_size() {
        return Err(Error::precondition(format!(
            "hitting set has {} vertices, more than m - k = {}",
            set.len(),
            inst.target_size()
        )));
    }
    if set.len() as i64 <= inst.k {
        return Ok(MiniHittingSet(set.clone()));
    }
    let inc = h.incidence();
    let mut picked = VertexSet::new();
    let mut covered = EdgeSet::new();
    for _ in 0..inst.k {
        let (_, v) = set
            .iter()
            .filter(|v| !picked.contains(v))
            .map(|&v| (inc[&v].difference(&covered).count(), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .expect("|S| > k leaves a candidate");
        picked.insert(v);
        covered.extend(inc[&v].iter().copied());
    }
    Ok(MiniHittingSet(picked))
}

/// Groups vertices by the set of `C`-edges they lie in. If a group has more
/// than `k` members, deletes its smallest vertex (from the group whose
/// smallest vertex is smallest, when several qualify).
pub fn rule_c_neighbourhood(
    inst: &BelowMInstance,
    state: &LocalizationState,
) -> Option<(BelowMInstance, ReductionStep)> {
    let mut classes: BTreeMap<EdgeSet, VertexSet> = BTreeMap::new();
    for (v, fv) in inst.hypergraph.incidence() {
        let signature: EdgeSet = fv.intersection(&state.covered).copied().collect();
        classes.entry(signature).or_default().insert(v);
    }
    let (signature, vertex) = classes
        .into_iter()
        .filter(|(_, members)| members.len() as i64 > inst.k)
        .map(|(sig, members)| (sig, *members.first().expect("non-empty class")))
        .min_by_key(|&(_, v)| v)?;
    let mut next = inst.clone();
    next.hypergraph.remove_vertex(vertex).ok()?;
    Some((
        next,
        ReductionStep::ClassVertexDeleted { vertex, signature },
    ))
}

/// `k·4^k`, saturating; 0 for `k <= 0`.
pub fn kernel_bound(k: i64) -> u128 {
    if k <= 0 {
        return 0;
    }
    let k = k as u32;
    4u128
        .checked_pow(k)
        .and_then(|p| p.checked_mul(k as u128))
        .unwrap_or(u128::MAX)
}

fn decided_yes(trace: &ReductionTrace, witness: VertexSet) -> KernelOutcome {
    let witness = trace.lift(&witness).expect("below-m steps always lift");
    KernelOutcome::Decided {
        yes: true,
        witness: Some(witness),
    }
}

/// Full pipeline: cleanup rules, greedy localization, class trimming,
/// repeated until the instance is decided or irreducible. A returned kernel
/// satisfies `n', m' <= k'·4^k'`.
pub fn kernelize_below_m(inst: &BelowMInstance) -> KernelOutcome {
    if inst.hypergraph.has_empty_edge() {
        return KernelOutcome::no();
    }
    let mut trace = ReductionTrace::new();
    let mut cur = inst.clone();
    loop {
        if cur.k <= 0 {
            let w = add_one_vertex_per_unhit_edge(&cur.hypergraph, &VertexSet::new())
                .expect("no empty edges");
            return decided_yes(&trace, w);
        }
        if cur.k > cur.hypergraph.edge_count() as i64 {
            return KernelOutcome::no();
        }
        let (reduced, steps) = match reduce_m(&cur) {
            Ok(r) => r,
            Err(_) => return KernelOutcome::no(),
        };
        trace.extend(steps);
        cur = reduced;
        if cur.k <= 0 || cur.k > cur.hypergraph.edge_count() as i64 {
            continue;
        }
        match greedy_localize(&cur) {
            Localization::Mini(mini) => {
                let w = expand_mini(&cur, mini.vertices()).expect("greedy output is a mini set");
                return decided_yes(&trace, w);
            }
            Localization::Stalled(state) => match rule_c_neighbourhood(&cur, &state) {
                Some((next, step)) => {
                    trace.push(step);
                    cur = next;
                }
                None => {
                    return KernelOutcome::Kernel {
                        instance: Problem::BelowM(cur),
                        trace,
                    }
                }
            },
        }
    }
}

/// Lifts a solution of `kernel` back through `trace`. The witness must be a
/// hitting set of the kernel of size at most `m' - k'`.
pub fn lift_witness_m(
    kernel: &BelowMInstance,
    trace: &ReductionTrace,
    witness: &VertexSet,
) -> Result<VertexSet> {
    if !kernel.is_solution(witness) {
        return Err(Error::InvalidWitness(
            "not a hitting set of the kernel within m - k".into(),
        ));
    }
    trace.lift(witness)
}
