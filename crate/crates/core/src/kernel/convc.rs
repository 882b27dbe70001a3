//! Connected vertex cover: the twin-set rule, and the annotated pipeline
//! (isolated/trivial rule, simplicial rule, closure size bound, leaf
//! re-attachment).

use crate::closure::closure_number;
use crate::graph::{Graph, Vertex};
use crate::instance::{AnnotatedConVcInstance, ConVcInstance, GraphInstance, Outcome, ProblemKind};
use crate::kernel::false_twin_classes;
use crate::oracles::{solve_annotated_convc_exact, OracleLimits};
use crate::trace::{Trace, TraceStep};

pub const RULE_TWINSET: &str = "convc.twinset";
pub const RULE_ANNOTATE: &str = "convc.annotate";
pub const RULE_ISOLATED_WHITE: &str = "convc.isolated_white";
pub const RULE_TRIVIAL: &str = "convc.trivial";
pub const RULE_SIMPLICIAL: &str = "convc.simplicial";
pub const RULE_SIZE_BOUND: &str = "convc.size_bound";
pub const RULE_SMALL_EXACT: &str = "convc.small_exact";
pub const RULE_ATTACH_LEAVES: &str = "convc.attach_leaves";

/// Vertex removed by the twin-set rule: the largest member of the first
/// twin class `S` with `|S| ≥ 2` and `|S| > |N(S)|`.
pub fn find_twinset(g: &Graph) -> Option<Vertex> {
    false_twin_classes(g)
        .into_iter()
        .find(|c| c.members.len() >= 2 && c.members.len() > c.neighborhood.len())
        .map(|c| *c.members.last().expect("nonempty"))
}

pub fn rr_twinset(inst: &ConVcInstance) -> (ConVcInstance, bool) {
    match find_twinset(&inst.graph) {
        Some(v) => (inst.without(&[v]), true),
        None => (inst.clone(), false),
    }
}

/// Twin-set rule to exhaustion.
pub fn kernelize_convc_gamma(inst: &ConVcInstance) -> (ConVcInstance, Trace) {
    let mut trace = Trace::new(ProblemKind::ConVc);
    let mut cur = inst.clone();
    while let Some(v) = find_twinset(&cur.graph) {
        trace.push(TraceStep::new(RULE_TWINSET).removed(cur.label_set(&[v])));
        cur = cur.without(&[v]);
    }
    (cur, trace)
}

/// Result of the trivial rule before any decision, in current ids.
fn isolated_white(inst: &AnnotatedConVcInstance) -> Vec<Vertex> {
    inst.graph
        .vertices()
        .filter(|&v| inst.graph.degree(v) == 0 && !inst.red[v])
        .collect()
}

/// Decision of the trivial rule on an instance without isolated white
/// vertices, if any.
fn trivial_decision(inst: &AnnotatedConVcInstance) -> Option<bool> {
    let g = &inst.graph;
    let comps = g.components();
    let with_edges = comps.iter().filter(|c| c.iter().any(|&v| g.degree(v) > 0)).count();
    let with_red = comps.iter().filter(|c| c.iter().any(|&v| inst.red[v])).count();
    let edge_or_red = comps
        .iter()
        .filter(|c| c.iter().any(|&v| g.degree(v) > 0 || inst.red[v]))
        .count();
    if with_edges >= 2 || with_red >= 2 || edge_or_red >= 2 {
        return Some(false);
    }
    let red = inst.red_vertices();
    if g.m() == 0 && red.is_empty() {
        return Some(true);
    }
    if inst.k >= 1 {
        let single = g.vertices().any(|v| {
            red.iter().all(|&r| r == v) && g.edges().all(|(a, b)| a == v || b == v)
        });
        if single {
            return Some(true);
        }
    }
    None
}

/// Removes isolated white vertices, then answers No when two components
/// need solution vertices, and Yes when a solution with at most one vertex
/// exists.
pub fn rr_annotated_trivial(inst: &AnnotatedConVcInstance) -> (Outcome<AnnotatedConVcInstance>, bool) {
    let iso = isolated_white(inst);
    let cur = inst.without(&iso);
    match trivial_decision(&cur) {
        Some(answer) => (Outcome::Decided(answer), true),
        None => (Outcome::Reduced(cur), !iso.is_empty()),
    }
}

/// Smallest simplicial vertex of a graph.
pub fn find_simplicial(g: &Graph) -> Option<Vertex> {
    g.vertices()
        .find(|&v| g.is_clique(g.neighbors(v)).expect("valid ids"))
}

/// Simplicial rule. Assumes a connected graph with at least three vertices;
/// returns `Decided(false)` when a red simplicial vertex meets a zero budget.
pub fn rr_simplicial(inst: &AnnotatedConVcInstance) -> (Outcome<AnnotatedConVcInstance>, bool) {
    match simplicial_step(inst) {
        None => (Outcome::Reduced(inst.clone()), false),
        Some(step) => (step.outcome, true),
    }
}

struct SimplicialStep {
    vertex: Vertex,
    recolored: Vec<Vertex>,
    k_delta: i64,
    outcome: Outcome<AnnotatedConVcInstance>,
}

fn simplicial_step(inst: &AnnotatedConVcInstance) -> Option<SimplicialStep> {
    let g = &inst.graph;
    let v = find_simplicial(g)?;
    let red_v = inst.red[v];
    let k_delta = if red_v { -1 } else { 0 };
    let recolored: Vec<Vertex> = if !red_v || g.degree(v) == 1 {
        g.neighbors(v).iter().copied().filter(|&w| !inst.red[w]).collect()
    } else {
        Vec::new()
    };
    let outcome = if red_v && inst.k == 0 {
        Outcome::Decided(false)
    } else {
        let mut next = inst.clone();
        for &w in g.neighbors(v) {
            if !red_v || g.degree(v) == 1 {
                next.red[w] = true;
            }
        }
        next.k = (inst.k as i64 + k_delta) as usize;
        Outcome::Reduced(next.without(&[v]))
    };
    Some(SimplicialStep {
        vertex: v,
        recolored,
        k_delta,
        outcome,
    })
}

/// Largest vertex count of a reduced yes-instance: each vertex outside a
/// solution has two nonadjacent neighbors inside it, and each such pair
/// has at most `c-1` common neighbors.
pub fn annotated_size_limit(k: usize, c: usize) -> usize {
    k + c.saturating_sub(1) * (k * k.saturating_sub(1) / 2)
}

/// Annotated pipeline on the all-white lift, then one pendant leaf per red
/// vertex. Leaves get fresh labels above every original label.
pub fn kernelize_convc_c(inst: &ConVcInstance) -> (Outcome<ConVcInstance>, Trace) {
    let mut trace = Trace::new(ProblemKind::ConVc);
    trace.push(TraceStep::new(RULE_ANNOTATE).kind_after(ProblemKind::AConVc));
    let mut cur = AnnotatedConVcInstance::from_plain(inst);
    let decided = |trace: &mut Trace, rule: &str, answer: bool| {
        trace.push(TraceStep::new(rule).decided(answer));
        Outcome::Decided(answer)
    };
    loop {
        let iso = isolated_white(&cur);
        if !iso.is_empty() {
            trace.push(TraceStep::new(RULE_ISOLATED_WHITE).removed(cur.label_set(&iso)));
            cur = cur.without(&iso);
        }
        if let Some(answer) = trivial_decision(&cur) {
            return (decided(&mut trace, RULE_TRIVIAL, answer), trace);
        }
        if cur.graph.n() < 3 || !cur.graph.is_connected() {
            break;
        }
        let Some(step) = simplicial_step(&cur) else { break };
        let mut ts = TraceStep::new(RULE_SIMPLICIAL)
            .recolored(cur.label_set(&step.recolored))
            .removed(cur.label_set(&[step.vertex]))
            .k_delta(step.k_delta);
        match step.outcome {
            Outcome::Decided(answer) => {
                ts = ts.k_delta(0).decided(answer);
                trace.push(ts);
                return (Outcome::Decided(answer), trace);
            }
            Outcome::Reduced(next) => {
                trace.push(ts);
                cur = next;
            }
        }
    }
    if cur.graph.n() >= 3 && cur.graph.is_connected() {
        let c = closure_number(&cur.graph);
        if cur.graph.n() > annotated_size_limit(cur.k, c) {
            let step = TraceStep::new(RULE_SIZE_BOUND)
                .decided(false)
                .detail(format!("{} vertices, c = {c}, k = {}", cur.graph.n(), cur.k));
            trace.push(step);
            return (Outcome::Decided(false), trace);
        }
    } else {
        let answer = solve_annotated_convc_exact(&cur, OracleLimits::default())
            .expect("fewer than three vertices")
            .answer;
        return (decided(&mut trace, RULE_SMALL_EXACT, answer), trace);
    }
    let next_label = inst.labels.iter().copied().max().map_or(0, |m| m + 1);
    let red = cur.red_vertices();
    let pairs: Vec<(usize, usize)> = red
        .iter()
        .enumerate()
        .map(|(j, &v)| (next_label + j, cur.labels[v]))
        .collect();
    let n = cur.graph.n();
    let edges: Vec<(Vertex, Vertex)> = red.iter().enumerate().map(|(j, &v)| (n + j, v)).collect();
    let graph = cur.graph.extended(red.len(), &edges).expect("valid leaves");
    let mut labels = cur.labels.clone();
    labels.extend(pairs.iter().map(|p| p.0));
    trace.push(
        TraceStep::new(RULE_ATTACH_LEAVES)
            .leaves(pairs)
            .kind_after(ProblemKind::ConVc),
    );
    (
        Outcome::Reduced(ConVcInstance {
            graph,
            k: cur.k,
            labels,
        }),
        trace,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::oracles::solve_convc_exact;
    use proptest::prelude::*;

    fn answer(inst: &ConVcInstance) -> bool {
        solve_convc_exact(inst, OracleLimits::default()).unwrap().answer
    }

    fn annotated_answer(inst: &AnnotatedConVcInstance) -> bool {
        solve_annotated_convc_exact(inst, OracleLimits::default()).unwrap().answer
    }

    fn outcome_answer(o: &Outcome<AnnotatedConVcInstance>) -> bool {
        match o {
            Outcome::Decided(a) => *a,
            Outcome::Reduced(i) => annotated_answer(i),
        }
    }

    #[test]
    fn twinset_examples() {
        let (out, applied) = rr_twinset(&ConVcInstance::new(star(3), 1));
        assert!(applied);
        assert_eq!(out.graph.n(), 3);
        assert!(!rr_twinset(&ConVcInstance::new(cycle(4), 2)).1);
        let (out, trace) = kernelize_convc_gamma(&ConVcInstance::new(complete_bipartite(2, 5), 2));
        assert_eq!(out.graph, complete_bipartite(2, 2));
        assert_eq!(trace.count(RULE_TWINSET), 3);
        let (out, _) = kernelize_convc_gamma(&ConVcInstance::new(star(6), 1));
        assert_eq!(out.graph, star(1));
        let (out, trace) = kernelize_convc_gamma(&ConVcInstance::new(path(5), 2));
        assert!(trace.is_empty());
        assert_eq!(out.graph, path(5));
    }

    #[test]
    fn trivial_rule_examples() {
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let inst = AnnotatedConVcInstance::from_plain(&ConVcInstance::new(two_edges, 3));
        assert_eq!(rr_annotated_trivial(&inst).0, Outcome::Decided(false));

        let inst = AnnotatedConVcInstance::from_plain(&ConVcInstance::new(star(4), 1));
        assert_eq!(rr_annotated_trivial(&inst).0, Outcome::Decided(true));

        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let inst = AnnotatedConVcInstance::from_plain(&ConVcInstance::new(g, 2));
        let (out, applied) = rr_annotated_trivial(&inst);
        assert!(applied);
        assert_eq!(out.reduced().unwrap().graph, complete(3));
    }

    #[test]
    fn simplicial_examples() {
        let inst = AnnotatedConVcInstance::from_plain(&ConVcInstance::new(complete(3), 2));
        let (out, applied) = rr_simplicial(&inst);
        assert!(applied);
        let out = out.reduced().unwrap().clone();
        assert_eq!(out.graph.n(), 2);
        assert_eq!(out.red, vec![true, true]);
        assert_eq!(annotated_answer(&inst), annotated_answer(&out));

        let inst = AnnotatedConVcInstance::from_plain(&ConVcInstance::new(path(3), 1));
        let out = rr_simplicial(&inst).0.reduced().unwrap().clone();
        assert_eq!(out.labels, vec![1, 2]);
        assert_eq!(out.red, vec![true, false]);

        let inst = AnnotatedConVcInstance::from_plain(&ConVcInstance::new(cycle(5), 3));
        assert!(!rr_simplicial(&inst).1);
    }

    #[test]
    fn p5_through_annotated_pipeline() {
        for k in 0..5 {
            let inst = ConVcInstance::new(path(5), k);
            let (out, trace) = kernelize_convc_c(&inst);
            let got = match &out {
                Outcome::Decided(a) => *a,
                Outcome::Reduced(r) => answer(r),
            };
            assert_eq!(got, answer(&inst), "k = {k}");
            let replayed = trace.replay(&inst.to_instance()).unwrap();
            match (&out, replayed) {
                (Outcome::Reduced(r), Outcome::Reduced(x)) => assert_eq!(r.to_instance(), x),
                (Outcome::Decided(a), Outcome::Decided(b)) => assert_eq!(*a, b),
                _ => panic!("replay disagrees"),
            }
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..2 * n).prop_map(move |pairs| {
                Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rules_preserve_answers(g in arb_graph(9), k in 0usize..5, red_mask in any::<u16>()) {
            let plain = ConVcInstance::new(g.clone(), k);
            let (twin, _) = rr_twinset(&plain);
            prop_assert_eq!(answer(&plain), answer(&twin));

            let mut ann = AnnotatedConVcInstance::from_plain(&plain);
            for v in g.vertices() {
                ann.red[v] = red_mask >> v & 1 == 1;
            }
            let (triv, _) = rr_annotated_trivial(&ann);
            prop_assert_eq!(annotated_answer(&ann), outcome_answer(&triv));
            if let Outcome::Reduced(r) = &triv {
                if r.graph.n() >= 3 && r.graph.is_connected() {
                    let (simp, _) = rr_simplicial(r);
                    prop_assert_eq!(annotated_answer(r), outcome_answer(&simp));
                }
            }

            let (kernel, _) = kernelize_convc_c(&plain);
            let got = match &kernel {
                Outcome::Decided(a) => *a,
                Outcome::Reduced(r) => answer(r),
            };
            prop_assert_eq!(got, answer(&plain));
        }
    }
}
