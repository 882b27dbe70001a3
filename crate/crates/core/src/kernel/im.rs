//! Induced matching: vertex deletion for matching-rich posterior
//! neighborhoods, the vertex-cover LP shortcut, twin removal, and witness
//! extraction on bipartite graphs.

use num_bigint::BigUint;

use crate::closure::{split_with_positions, weak_closure_ordering, ClosureOrdering};
use crate::combinatorics::{is_induced_matching, maximum_matching, vclp_half_integral};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::instance::{GraphInstance, ImInstance, Outcome, ProblemKind};
use crate::trace::{Trace, TraceStep};

pub const RULE_DELV: &str = "im.delv";
pub const RULE_VPOS: &str = "im.vpos";
pub const RULE_TWIN: &str = "im.twin";

/// Thresholds of the induced matching kernel, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImThresholds {
    pub gamma: u64,
    pub k: u64,
    /// `4γk² + 3k`: matching size forcing an induced matching of size `k`
    /// in a bipartite graph.
    pub f: BigUint,
    /// `4γk² + k²`: set size forcing an independent subset of size `k`.
    pub g: BigUint,
    /// `2·g(g(f))`.
    pub vpos_threshold: BigUint,
}

fn f_gamma(gamma: &BigUint, k: &BigUint) -> BigUint {
    4u32 * gamma * k * k + 3u32 * k
}

fn g_gamma(gamma: &BigUint, k: &BigUint) -> BigUint {
    4u32 * gamma * k * k + k * k
}

impl ImThresholds {
    pub fn new(gamma: u64, k: u64) -> Self {
        let (gb, kb) = (BigUint::from(gamma), BigUint::from(k));
        let f = f_gamma(&gb, &kb);
        let g = g_gamma(&gb, &kb);
        let vpos_threshold = 2u32 * g_gamma(&gb, &g_gamma(&gb, &f));
        ImThresholds {
            gamma,
            k,
            f,
            g,
            vpos_threshold,
        }
    }
}

/// Smallest vertex whose posterior neighborhood induces a graph with a
/// matching of size at least `2γk`.
pub fn find_delv(g: &Graph, ordering: &ClosureOrdering, k: usize) -> Option<Vertex> {
    let need = 2 * ordering.gamma * k;
    let pos = ordering.positions();
    g.vertices().find(|&v| {
        let q = split_with_positions(g, &pos, v).posterior;
        if q.len() < 2 * need {
            return need == 0;
        }
        let (sub, _) = g.induced_subgraph(&q).expect("valid ids");
        maximum_matching(&sub).size() >= need
    })
}

pub fn rr_im_delv(inst: &ImInstance, ordering: &ClosureOrdering) -> (ImInstance, bool) {
    match find_delv(&inst.graph, ordering, inst.k) {
        Some(v) => (inst.without(&[v]), true),
        None => (inst.clone(), false),
    }
}

/// `Decided(true)` when the vertex-cover LP optimum reaches the threshold.
pub fn rr_im_vpos(inst: &ImInstance, gamma: usize) -> Outcome<ImInstance> {
    if vpos_fires(&inst.graph, gamma, inst.k) {
        Outcome::Decided(true)
    } else {
        Outcome::Reduced(inst.clone())
    }
}

fn vpos_fires(g: &Graph, gamma: usize, k: usize) -> bool {
    let t = ImThresholds::new(gamma as u64, k as u64);
    let doubled = BigUint::from(vclp_half_integral(g).objective_doubled());
    doubled >= 2u32 * t.vpos_threshold
}

/// Larger vertex of the first pair with identical open neighborhoods.
pub fn find_im_twin(g: &Graph) -> Option<Vertex> {
    super::false_twin_classes(g)
        .into_iter()
        .find(|c| c.members.len() >= 2)
        .map(|c| *c.members.last().expect("nonempty"))
}

pub fn rr_im_twin(inst: &ImInstance) -> (ImInstance, bool) {
    match find_im_twin(&inst.graph) {
        Some(v) => (inst.without(&[v]), true),
        None => (inst.clone(), false),
    }
}

/// Deletion rule to exhaustion (ordering recomputed after each deletion),
/// then the LP check, then twin removal to exhaustion.
pub fn kernelize_im(inst: &ImInstance) -> (Outcome<ImInstance>, Trace) {
    let mut trace = Trace::new(ProblemKind::Im);
    let mut cur = inst.clone();
    let mut ordering = weak_closure_ordering(&cur.graph);
    while let Some(v) = find_delv(&cur.graph, &ordering, cur.k) {
        trace.push(
            TraceStep::new(RULE_DELV)
                .removed(cur.label_set(&[v]))
                .detail(format!("gamma = {}", ordering.gamma)),
        );
        cur = cur.without(&[v]);
        ordering = weak_closure_ordering(&cur.graph);
    }
    if vpos_fires(&cur.graph, ordering.gamma, cur.k) {
        trace.push(TraceStep::new(RULE_VPOS).decided(true));
        return (Outcome::Decided(true), trace);
    }
    while let Some(v) = find_im_twin(&cur.graph) {
        trace.push(TraceStep::new(RULE_TWIN).removed(cur.label_set(&[v])));
        cur = cur.without(&[v]);
    }
    (Outcome::Reduced(cur), trace)
}

/// Induced matching by repeatedly taking a matching edge that conflicts with
/// the fewest remaining matching edges. Two matching edges conflict when an
/// edge of `g` joins them.
pub fn greedy_induced_matching(g: &Graph, matching: &[(Vertex, Vertex)]) -> Vec<(Vertex, Vertex)> {
    let m = matching.len();
    let mut owner = vec![usize::MAX; g.n()];
    for (i, &(a, b)) in matching.iter().enumerate() {
        owner[a] = i;
        owner[b] = i;
    }
    let mut conflicts: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, &(a, b)) in matching.iter().enumerate() {
        let mut c: Vec<usize> = [a, b]
            .iter()
            .flat_map(|&x| g.neighbors(x).iter().map(|&w| owner[w]))
            .filter(|&j| j != usize::MAX && j != i)
            .collect();
        c.sort_unstable();
        c.dedup();
        conflicts[i] = c;
    }
    let mut alive = vec![true; m];
    let mut degree: Vec<usize> = conflicts.iter().map(Vec::len).collect();
    let mut out = Vec::new();
    while let Some(i) = (0..m).filter(|&i| alive[i]).min_by_key(|&i| (degree[i], i)) {
        out.push(matching[i]);
        alive[i] = false;
        for &j in &conflicts[i] {
            if alive[j] {
                alive[j] = false;
                for &x in &conflicts[j] {
                    degree[x] = degree[x].saturating_sub(1);
                }
            }
        }
    }
    out
}

/// Induced matching of size `k` in a bipartite graph with parts `a`/`b`.
/// Either `k` vertices on one side have large posterior neighborhoods and
/// each picks a private posterior neighbor, or the remaining graph is
/// sparse and the greedy conflict-avoiding selection applies. Guaranteed to
/// succeed when `g` has a matching of size `4γk² + 3k`.
pub fn extract_im_bipartite(g: &Graph, a: &[Vertex], b: &[Vertex], k: usize) -> Result<Option<Vec<(Vertex, Vertex)>>> {
    let mut side = vec![None; g.n()];
    for (&v, s) in a.iter().map(|v| (v, 0u8)).chain(b.iter().map(|v| (v, 1u8))) {
        g.check_vertex(v)?;
        if side[v].replace(s).is_some() {
            return Err(Error::invalid(format!("vertex {v} listed twice in the bipartition")));
        }
    }
    if side.iter().any(Option::is_none) {
        return Err(Error::invalid("bipartition does not cover every vertex"));
    }
    if g.edges().any(|(u, v)| side[u] == side[v]) {
        return Err(Error::invalid("graph is not bipartite with the given parts"));
    }
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    let ordering = weak_closure_ordering(g);
    let pos = ordering.positions();
    let q: Vec<Vec<Vertex>> = g
        .vertices()
        .map(|v| split_with_positions(g, &pos, v).posterior)
        .collect();
    let heavy: Vec<Vertex> = g.vertices().filter(|&v| q[v].len() >= ordering.gamma * k).collect();

    for s in [0u8, 1] {
        let chosen: Vec<Vertex> = heavy.iter().copied().filter(|&v| side[v] == Some(s)).take(k).collect();
        if chosen.len() < k {
            continue;
        }
        let private: Option<Vec<(Vertex, Vertex)>> = chosen
            .iter()
            .map(|&v| {
                q[v].iter()
                    .copied()
                    .find(|&w| chosen.iter().all(|&o| o == v || !g.has_edge(o, w)))
                    .map(|w| (v, w))
            })
            .collect();
        if let Some(edges) = private {
            if is_induced_matching(g, &edges) {
                return Ok(Some(edges));
            }
        }
    }

    let (sparse, map) = g.remove_vertices(&heavy)?;
    let matching: Vec<(Vertex, Vertex)> = maximum_matching(&sparse).edges();
    let mut found: Vec<(Vertex, Vertex)> = greedy_induced_matching(&sparse, &matching)
        .into_iter()
        .map(|(x, y)| (map[x], map[y]))
        .collect();
    if found.len() < k {
        let full = maximum_matching(g).edges();
        found = greedy_induced_matching(g, &full);
    }
    if found.len() >= k {
        found.truncate(k);
        debug_assert!(is_induced_matching(g, &found));
        Ok(Some(found))
    } else {
        Ok(None)
    }
}
