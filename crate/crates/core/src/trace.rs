//! Reduction traces.
//!
//! A trace records every rule application made while kernelizing, in order,
//! using the ids of the input instance. Replaying it on the input reproduces
//! the kernel exactly; walking it backwards turns a kernel solution into a
//! solution of the input.
//!
//! The text form has one step per line: a tag, the ids involved and the
//! change applied to `k`. Id lists are comma separated, `-` when empty.
//!
//! ```text
//! superset-edge 3 7 -1
//! dominated-vertex 4 9 0
//! unit-self 2 5 0
//! class-vertex 8 1,4 0
//! unit-edge 6 10,11 -2
//! isolated 12 0
//! contract 14 1,2,3 0
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypercore::{Digraph, Hypergraph};
use crate::{EdgeId, EdgeSet, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionStep {
    /// `deleted ⊇ kept`; the superset edge is dropped and `k` decreases by one.
    SupersetEdgeDeleted { kept: EdgeId, deleted: EdgeId },
    /// `F[deleted] ⊆ F[dominator]`; `deleted` is removed from the hypergraph.
    DominatedVertexDeleted {
        deleted: VertexId,
        dominator: VertexId,
    },
    /// `edge = {vertex}` was the only edge at `vertex`; both are dropped.
    UnitSelfDeleted { vertex: VertexId, edge: EdgeId },
    /// `vertex` belonged to an oversized class of vertices sharing the same
    /// set of covered edges `signature`.
    ClassVertexDeleted {
        vertex: VertexId,
        signature: EdgeSet,
    },
    /// A unit edge `{vertex}` was shrunk away, taking the free vertices
    /// `co_removed` with it; `k` decreases by `|co_removed|`.
    UnitEdgeShrunk {
        vertex: VertexId,
        co_removed: VertexSet,
    },
    /// An isolated digraph vertex was deleted.
    IsolatedDeleted { vertex: VertexId },
    /// The in-degree-zero vertices `sources` were merged into `merged`.
    SourcesContracted {
        sources: VertexSet,
        merged: VertexId,
    },
}

impl ReductionStep {
    pub fn k_delta(&self) -> i64 {
        match self {
            ReductionStep::SupersetEdgeDeleted { .. } => -1,
            ReductionStep::UnitEdgeShrunk { co_removed, .. } => -(co_removed.len() as i64),
            _ => 0,
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            ReductionStep::SupersetEdgeDeleted { .. } => "superset-edge",
            ReductionStep::DominatedVertexDeleted { .. } => "dominated-vertex",
            ReductionStep::UnitSelfDeleted { .. } => "unit-self",
            ReductionStep::ClassVertexDeleted { .. } => "class-vertex",
            ReductionStep::UnitEdgeShrunk { .. } => "unit-edge",
            ReductionStep::IsolatedDeleted { .. } => "isolated",
            ReductionStep::SourcesContracted { .. } => "contract",
        }
    }

    /// Undoes this step on a witness of the reduced instance.
    fn lift(&self, witness: &mut VertexSet) -> Result<()> {
        match self {
            ReductionStep::UnitSelfDeleted { vertex, .. }
            | ReductionStep::UnitEdgeShrunk { vertex, .. }
            | ReductionStep::IsolatedDeleted { vertex } => {
                witness.insert(*vertex);
            }
            ReductionStep::SourcesContracted { sources, merged } => {
                if !witness.remove(merged) {
                    return Err(Error::InvalidWitness(format!(
                        "contracted source {merged} is missing from the witness"
                    )));
                }
                witness.extend(sources.iter().copied());
            }
            ReductionStep::SupersetEdgeDeleted { .. }
            | ReductionStep::DominatedVertexDeleted { .. }
            | ReductionStep::ClassVertexDeleted { .. } => {}
        }
        Ok(())
    }

    fn apply_to_hypergraph(&self, h: &mut Hypergraph, k: &mut i64) -> Result<()> {
        match self {
            ReductionStep::SupersetEdgeDeleted { kept, deleted } => {
                let small = h.edge(*kept).ok_or(Error::UnknownEdge(*kept))?;
                let big = h.edge(*deleted).ok_or(Error::UnknownEdge(*deleted))?;
                if kept == deleted || !small.is_subset(big) {
                    return Err(replay_mismatch(self));
                }
                h.remove_edge(*deleted)?;
            }
            ReductionStep::DominatedVertexDeleted { deleted, dominator } => {
                if deleted == dominator
                    || !h
                        .incident_edges(*deleted)?
                        .is_subset(&h.incident_edges(*dominator)?)
                {
                    return Err(replay_mismatch(self));
                }
                h.remove_vertex(*deleted)?;
            }
            ReductionStep::UnitSelfDeleted { vertex, edge } => {
                let unit: VertexSet = [*vertex].into_iter().collect();
                if h.edge(*edge) != Some(&unit)
                    || h.incident_edges(*vertex)? != [*edge].into_iter().collect()
                {
                    return Err(replay_mismatch(self));
                }
                h.remove_edge(*edge)?;
                h.remove_vertex(*vertex)?;
            }
            ReductionStep::ClassVertexDeleted { vertex, .. } => {
                h.remove_vertex(*vertex)?;
            }
            ReductionStep::UnitEdgeShrunk { vertex, co_removed } => {
                let unit: VertexSet = [*vertex].into_iter().collect();
                if !h.edges().any(|(_, e)| e == &unit) {
                    return Err(replay_mismatch(self));
                }
                let effect = h.shrink_in_place(&unit)?;
                let mut others = effect.removed_vertices;
                others.remove(vertex);
                if &others != co_removed {
                    return Err(replay_mismatch(self));
                }
            }
            ReductionStep::IsolatedDeleted { .. } | ReductionStep::SourcesContracted { .. } => {
                return Err(Error::precondition(format!(
                    "`{}` step cannot be replayed on a hypergraph",
                    self.tag()
                )));
            }
        }
        *k += self.k_delta();
        Ok(())
    }

    fn apply_to_digraph(&self, d: &mut Digraph) -> Result<()> {
        match self {
            ReductionStep::IsolatedDeleted { vertex } => {
                if !d.contains_vertex(*vertex) || !d.is_isolated(*vertex) {
                    return Err(replay_mismatch(self));
                }
                d.remove_vertex(*vertex)?;
            }
            ReductionStep::SourcesContracted { sources, merged } => {
                if d.contains_vertex(*merged) || sources.iter().any(|&s| d.in_degree(s) > 0) {
                    return Err(replay_mismatch(self));
                }
                let mut targets = VertexSet::new();
                for &s in sources {
                    if !d.contains_vertex(s) {
                        return Err(Error::UnknownVertex(s));
                    }
                    targets.extend(d.out_neighbors(s));
                }
                for &s in sources {
                    d.remove_vertex(s)?;
                }
                d.add_vertex(*merged);
                for t in targets {
                    d.add_arc(*merged, t)?;
                }
            }
            _ => {
                return Err(Error::precondition(format!(
                    "`{}` step cannot be replayed on a digraph",
                    self.tag()
                )));
            }
        }
        Ok(())
    }
}

fn replay_mismatch(step: &ReductionStep) -> Error {
    Error::precondition(format!("trace step `{step}` does not match the instance"))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, step: ReductionStep) {
        self.steps.push(step);
    }

    pub fn extend(&mut self, other: ReductionTrace) {
        self.steps.extend(other.steps);
    }

    pub fn steps(&self) -> &[ReductionStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Total change applied to `k`.
    pub fn k_delta(&self) -> i64 {
        self.steps.iter().map(ReductionStep::k_delta).sum()
    }

    /// Walks the trace backwards, turning a kernel witness into a witness for
    /// the traced input. Only structural checks happen here; the callers in
    /// the kernel modules verify the witness itself.
    pub fn lift(&self, witness: &VertexSet) -> Result<VertexSet> {
        let mut w = witness.clone();
        for step in self.steps.iter().rev() {
            step.lift(&mut w)?;
        }
        Ok(w)
    }

    /// Re-applies every step to `h`, checking each rule's precondition.
    pub fn replay_hypergraph(&self, h: &Hypergraph, k: i64) -> Result<(Hypergraph, i64)> {
        let mut h = h.clone();
        let mut k = k;
        for step in &self.steps {
            step.apply_to_hypergraph(&mut h, &mut k)?;
        }
        Ok((h, k))
    }

    pub fn replay_digraph(&self, d: &Digraph, k: i64) -> Result<(Digraph, i64)> {
        let mut d = d.clone();
        for step in &self.steps {
            step.apply_to_digraph(&mut d)?;
        }
        Ok((d, k))
    }
}

impl FromIterator<ReductionStep> for ReductionTrace {
    fn from_iter<T: IntoIterator<Item = ReductionStep>>(iter: T) -> Self {
        Self {
            steps: iter.into_iter().collect(),
        }
    }
}

fn write_ids<'a>(
    f: &mut fmt::Formatter<'_>,
    ids: impl IntoIterator<Item = &'a u32>,
) -> fmt::Result {
    let ids: Vec<String> = ids.into_iter().map(u32::to_string).collect();
    if ids.is_empty() {
        write!(f, "-")
    } else {
        write!(f, "{}", ids.join(","))
    }
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.tag())?;
        match self {
            ReductionStep::SupersetEdgeDeleted { kept, deleted } => write!(f, "{kept} {deleted}")?,
            ReductionStep::DominatedVertexDeleted { deleted, dominator } => {
                write!(f, "{deleted} {dominator}")?
            }
            ReductionStep::UnitSelfDeleted { vertex, edge } => write!(f, "{vertex} {edge}")?,
            ReductionStep::ClassVertexDeleted { vertex, signature } => {
                write!(f, "{vertex} ")?;
                write_ids(f, signature)?;
            }
            ReductionStep::UnitEdgeShrunk { vertex, co_removed } => {
                write!(f, "{vertex} ")?;
                write_ids(f, co_removed)?;
            }
            ReductionStep::IsolatedDeleted { vertex } => write!(f, "{vertex}")?,
            ReductionStep::SourcesContracted { sources, merged } => {
                write!(f, "{merged} ")?;
                write_ids(f, sources)?;
            }
        }
        write!(f, " {}", self.k_delta())
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

fn parse_id(tok: &str, line: usize) -> Result<u32> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected an id, found `{tok}`")))
}

fn parse_id_list(tok: &str, line: usize) -> Result<VertexSet> {
    if tok == "-" {
        return Ok(VertexSet::new());
    }
    tok.split(',').map(|t| parse_id(t, line)).collect()
}

fn parse_step(text: &str, line: usize) -> Result<ReductionStep> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    let arity = |n: usize| {
        if toks.len() == n + 2 {
            Ok(())
        } else {
            Err(Error::parse(
                line,
                format!("`{}` takes {n} arguments and a k-delta", toks[0]),
            ))
        }
    };
    let step = match toks[0] {
        "superset-edge" => {
            arity(2)?;
            ReductionStep::SupersetEdgeDeleted {
                kept: parse_id(toks[1], line)?,
                deleted: parse_id(toks[2], line)?,
            }
        }
        "dominated-vertex" => {
            arity(2)?;
            ReductionStep::DominatedVertexDeleted {
                deleted: parse_id(toks[1], line)?,
                dominator: parse_id(toks[2], line)?,
            }
        }
        "unit-self" => {
            arity(2)?;
            ReductionStep::UnitSelfDeleted {
                vertex: parse_id(toks[1], line)?,
                edge: parse_id(toks[2], line)?,
            }
        }
        "class-vertex" => {
            arity(2)?;
            ReductionStep::ClassVertexDeleted {
                vertex: parse_id(toks[1], line)?,
                signature: parse_id_list(toks[2], line)?,
            }
        }
        "unit-edge" => {
            arity(2)?;
            ReductionStep::UnitEdgeShrunk {
                vertex: parse_id(toks[1], line)?,
                co_removed: parse_id_list(toks[2], line)?,
            }
        }
        "isolated" => {
            arity(1)?;
            ReductionStep::IsolatedDeleted {
                vertex: parse_id(toks[1], line)?,
            }
        }
        "contract" => {
            arity(2)?;
            ReductionStep::SourcesContracted {
                merged: parse_id(toks[1], line)?,
                sources: parse_id_list(toks[2], line)?,
            }
        }
        other => return Err(Error::parse(line, format!("unknown trace tag `{other}`"))),
    };
    let delta_tok = toks[toks.len() - 1];
    let delta: i64 = delta_tok
        .parse()
        .map_err(|_| Error::parse(line, format!("bad k-delta `{delta_tok}`")))?;
    if delta != step.k_delta() {
        return Err(Error::parse(
            line,
            format!(
                "k-delta {delta} does not match step (expected {})",
                step.k_delta()
            ),
        ));
    }
    Ok(step)
}

impl FromStr for ReductionTrace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut trace = ReductionTrace::new();
        for (i, raw) in s.lines().enumerate() {
            let text = raw.trim();
            if text.is_empty() || text == "c" || text.starts_with("c ") {
                continue;
            }
            trace.push(parse_step(text, i + 1)?);
        }
        Ok(trace)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn sample() -> ReductionTrace {
        [
            ReductionStep::SupersetEdgeDeleted {
                kept: 3,
                deleted: 7,
            },
            ReductionStep::DominatedVertexDeleted {
                deleted: 4,
                dominator: 9,
            },
            ReductionStep::UnitSelfDeleted { vertex: 2, edge: 5 },
            ReductionStep::ClassVertexDeleted {
                vertex: 8,
                signature: set(&[1, 4]),
            },
            ReductionStep::UnitEdgeShrunk {
                vertex: 6,
                co_removed: set(&[10, 11]),
            },
            ReductionStep::UnitEdgeShrunk {
                vertex: 13,
                co_removed: VertexSet::new(),
            },
            ReductionStep::IsolatedDeleted { vertex: 12 },
            ReductionStep::SourcesContracted {
                sources: set(&[1, 2, 3]),
                merged: 14,
            },
        ]
        .into_iter()
        .collect()
    }

    #[test]
    fn text_format() {
        let text = sample().to_string();
        assert_eq!(
            text,
            "superset-edge 3 7 -1\n\
             dominated-vertex 4 9 0\n\
             unit-self 2 5 0\n\
             class-vertex 8 1,4 0\n\
             unit-edge 6 10,11 -2\n\
             unit-edge 13 - 0\n\
             isolated 12 0\n\
             contract 14 1,2,3 0\n"
        );
        assert_eq!(text.parse::<ReductionTrace>().unwrap(), sample());
        assert_eq!(sample().k_delta(), -3);
    }

    #[test]
    fn parse_errors() {
        assert!("superset-edge 1 2 0".parse::<ReductionTrace>().is_err());
        assert!("bogus 1 0".parse::<ReductionTrace>().is_err());
        assert!("isolated 1".parse::<ReductionTrace>().is_err());
        assert!("c a comment\n\nisolated 1 0"
            .parse::<ReductionTrace>()
            .is_ok());
    }

    #[test]
    fn lifting() {
        let trace: ReductionTrace = [
            ReductionStep::IsolatedDeleted { vertex: 9 },
            ReductionStep::SourcesContracted {
                sources: set(&[1, 2]),
                merged: 10,
            },
        ]
        .into_iter()
        .collect();
        assert_eq!(trace.lift(&set(&[10, 3])).unwrap(), set(&[1, 2, 3, 9]));
        assert!(matches!(
            trace.lift(&set(&[3])),
            Err(Error::InvalidWitness(_))
        ));
        assert_eq!(ReductionTrace::new().lift(&set(&[4])).unwrap(), set(&[4]));
    }
}
