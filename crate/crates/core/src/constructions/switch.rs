//! Matching 2-switches on alternating 4-cycles.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::matching::Matching;

/// Exchange of the matching edges `{u1,v1}, {u2,v2}` of the alternating
/// 4-cycle `u1 v1 v2 u2` for `{u1,u2}, {v1,v2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoSwitchStep {
    /// `[u1, v1, v2, u2]`
    pub cycle: [VertexId; 4],
}

impl TwoSwitchStep {
    pub fn new(cycle: [VertexId; 4]) -> Self {
        TwoSwitchStep { cycle }
    }

    pub fn removed(&self) -> [Edge; 2] {
        let [u1, v1, v2, u2] = self.cycle;
        sorted_pair(Edge::new(u1, v1), Edge::new(u2, v2))
    }

    pub fn added(&self) -> [Edge; 2] {
        let [u1, v1, v2, u2] = self.cycle;
        sorted_pair(Edge::new(u1, u2), Edge::new(v1, v2))
    }

    /// The step that undoes this one.
    pub fn inverse(&self) -> Self {
        let [u1, v1, v2, u2] = self.cycle;
        TwoSwitchStep::new([u1, u2, v2, v1])
    }
}

fn sorted_pair(a: Edge, b: Edge) -> [Edge; 2] {
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}

/// `M \ removed ∪ added`, after checking the step is a genuine 2-switch of `m`.
pub fn apply_two_switch(g: &Graph, m: &Matching, step: &TwoSwitchStep) -> Result<Matching> {
    let mut distinct = step.cycle;
    distinct.sort_unstable();
    if distinct.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSwitch(format!(
            "cycle {:?} repeats a vertex",
            step.cycle
        )));
    }
    if let Some(&v) = step.cycle.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::InvalidSwitch(format!("vertex {v} out of range")));
    }
    for e in step.removed() {
        if !m.contains(e) {
            return Err(Error::InvalidSwitch(format!(
                "removed edge {e} is not in the matching"
            )));
        }
    }
    for e in step.added() {
        if !g.contains_edge(e) {
            return Err(Error::InvalidSwitch(format!(
                "added edge {e} is not in the graph"
            )));
        }
    }
    Ok(m.swapped(&step.removed(), &step.added()))
}

/// Every 2-switch available to `m`, one per alternating 4-cycle, ordered by
/// the pair of matching edges involved.
pub fn alternating_four_cycles(g: &Graph, m: &Matching) -> Vec<TwoSwitchStep> {
    let mut steps = Vec::new();
    for &e in m.edges() {
        let (a, b) = e.endpoints();
        for &c in g.neighbors(a) {
            if c == b {
                continue;
            }
            let d = m.partner(c);
            if d == a || d == b || Edge::new(c, d) <= e || !g.has_edge(b, d) {
                continue;
            }
            steps.push(TwoSwitchStep::new([a, b, d, c]));
        }
    }
    steps
}
