//! Machine-readable record of reduction rule applications, and replay of a
//! record against the original instance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Instance, Outcome, ProblemKind};

pub const TRACE_SCHEMA_VERSION: u32 = 1;

/// One rule application. All vertices are given by their original labels.
/// Replay applies the fields in declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub recolored_red: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub capacity_decremented: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub removed: Vec<usize>,
    /// `(leaf label, neighbor label)` pairs; leaves are appended in order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub attached_leaves: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub k_delta: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind_after: Option<ProblemKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decided: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn is_zero(x: &i64) -> bool {
    *x == 0
}

impl TraceStep {
    pub fn new(rule: &str) -> Self {
        TraceStep {
            rule: rule.to_string(),
            ..Default::default()
        }
    }

    pub fn removed(mut self, labels: Vec<usize>) -> Self {
        self.removed = labels;
        self
    }

    pub fn recolored(mut self, labels: Vec<usize>) -> Self {
        self.recolored_red = labels;
        self
    }

    pub fn decremented(mut self, labels: Vec<usize>) -> Self {
        self.capacity_decremented = labels;
        self
    }

    pub fn leaves(mut self, pairs: Vec<(usize, usize)>) -> Self {
        self.attached_leaves = pairs;
        self
    }

    pub fn k_delta(mut self, d: i64) -> Self {
        self.k_delta = d;
        self
    }

    pub fn kind_after(mut self, kind: ProblemKind) -> Self {
        self.kind_after = Some(kind);
        self
    }

    pub fn decided(mut self, answer: bool) -> Self {
        self.decided = Some(answer);
        self
    }

    pub fn detail(mut self, text: impl Into<String>) -> Self {
        self.detail = Some(text.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub schema_version: u32,
    pub problem: ProblemKind,
    pub steps: Vec<TraceStep>,
}

impl Trace {
    pub fn new(problem: ProblemKind) -> Self {
        Trace {
            schema_version: TRACE_SCHEMA_VERSION,
            problem,
            steps: Vec::new(),
        }
    }

    pub fn push(&mut self, step: TraceStep) {
        self.steps.push(step);
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of applications of the named rule.
    pub fn count(&self, rule: &str) -> usize {
        self.steps.iter().filter(|s| s.rule == rule).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Trace> {
        let t: Trace = serde_json::from_str(text).map_err(|e| Error::invalid(format!("bad trace: {e}")))?;
        if t.schema_version != TRACE_SCHEMA_VERSION {
            return Err(Error::invalid(format!(
                "unsupported trace schema version {}",
                t.schema_version
            )));
        }
        Ok(t)
    }

    /// Re-applies every step to `original` without consulting any rule.
    pub fn replay(&self, original: &Instance) -> Result<Outcome<Instance>> {
        let mut cur = original.clone();
        for step in &self.steps {
            for &l in &step.recolored_red {
                let v = cur.id_of(l)?;
                cur.red[v] = true;
            }
            for &l in &step.capacity_decremented {
                let v = cur.id_of(l)?;
                let caps = cur
                    .caps
                    .as_mut()
                    .ok_or_else(|| Error::invalid("capacity step on an instance without capacities"))?;
                caps[v] -= 1;
            }
            if !step.removed.is_empty() {
                let ids = step
                    .removed
                    .iter()
                    .map(|&l| cur.id_of(l))
                    .collect::<Result<Vec<_>>>()?;
                cur = cur.without(&ids)?;
            }
            if !step.attached_leaves.is_empty() {
                let n = cur.graph.n();
                let mut edges = Vec::new();
                for (i, &(leaf, parent)) in step.attached_leaves.iter().enumerate() {
                    if cur.labels.contains(&leaf) {
                        return Err(Error::invalid(format!("leaf label {leaf} already in use")));
                    }
                    edges.push((n + i, cur.id_of(parent)?));
                    cur.labels.push(leaf);
                    cur.red.push(false);
                }
                let extra = step.attached_leaves.len();
                cur.graph = cur.graph.extended(extra, &edges)?;
                if let Some(c) = cur.caps.as_mut() {
                    c.extend(std::iter::repeat(0).take(extra));
                }
                if let Some(p) = cur.parts.as_mut() {
                    p.extend(std::iter::repeat(0).take(extra));
                }
            }
            if step.k_delta != 0 {
                let k = cur.k as i64 + step.k_delta;
                if k < 0 {
                    return Err(Error::invalid("replay drives the budget below zero"));
                }
                cur.k = k as usize;
            }
            if let Some(kind) = step.kind_after {
                cur.kind = kind;
                if kind != ProblemKind::AConVc {
                    cur.red = vec![false; cur.graph.n()];
                }
            }
            if let Some(answer) = step.decided {
                return Ok(Outcome::Decided(answer));
            }
        }
        Ok(Outcome::Reduced(cur))
    }
}

/// Canonical tiny instance with the given answer, used to materialize a
/// decided kernel as a file.
pub fn trivial_instance(kind: ProblemKind, answer: bool) -> Instance {
    let (n, k) = match (kind, answer) {
        (_, true) => (0, 0),
        // a lone vertex with budget 0 cannot be dominated
        (ProblemKind::Ds, false) => (1, 0),
        // no vertices, yet one matching edge or one independent vertex is demanded
        (ProblemKind::Im | ProblemKind::Is | ProblemKind::Mcis, false) => (0, 1),
        // a single edge with no budget
        (_, false) => (2, 0),
    };
    let graph = if n == 2 {
        Graph::from_edges(2, [(0, 1)]).expect("valid")
    } else {
        Graph::empty(n)
    };
    let mut inst = Instance::new(kind, graph, k);
    match kind {
        ProblemKind::CapVc => inst.caps = Some(vec![0; n]),
        ProblemKind::Coc => inst.ell = Some(1),
        ProblemKind::Mcis => inst.parts = Some(vec![0; n]),
        _ => {}
    }
    inst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn replay_applies_fields_in_order() {
        let mut inst = Instance::new(ProblemKind::AConVc, path(4), 3);
        inst.labels = vec![10, 11, 12, 13];
        let mut t = Trace::new(ProblemKind::AConVc);
        t.push(TraceStep::new("a").recolored(vec![11]).removed(vec![10]).k_delta(-1));
        t.push(
            TraceStep::new("b")
                .leaves(vec![(20, 11)])
                .kind_after(ProblemKind::ConVc),
        );
        let out = t.replay(&inst).unwrap();
        let r = out.reduced().unwrap();
        assert_eq!(r.labels, vec![11, 12, 13, 20]);
        assert_eq!(r.graph.edge_list(), vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(r.k, 2);
        assert_eq!(r.kind, ProblemKind::ConVc);
        assert!(r.red.iter().all(|&x| !x));
    }

    #[test]
    fn json_round_trip() {
        let mut t = Trace::new(ProblemKind::CapVc);
        t.push(TraceStep::new("capvc.twin_crown").removed(vec![3]).decremented(vec![0]));
        t.push(TraceStep::new("stop").decided(false));
        let back = Trace::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert!(Trace::from_json("{\"schema_version\":99,\"problem\":\"im\",\"steps\":[]}").is_err());
    }
}
