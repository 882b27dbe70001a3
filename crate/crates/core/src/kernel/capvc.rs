//! Capacitated vertex cover: the twin-crown rule and its exhaustive
//! application.

use crate::graph::Vertex;
use crate::instance::{CapVcInstance, GraphInstance, ProblemKind};
use crate::kernel::false_twin_classes;
use crate::trace::{Trace, TraceStep};

pub const RULE_TWIN_CROWN: &str = "capvc.twin_crown";

/// What one application of the twin-crown rule did, in current ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinCrownApplication {
    pub class: Vec<Vertex>,
    pub removed: Vertex,
    pub decremented: Vec<Vertex>,
}

/// Finds a twin class with at least `k+2` members and at most `k+2` common
/// neighbors. Among its members, the `k+2` with the smallest
/// `(capacity, id)` form the rule's set; the first of them is the one
/// removed.
pub fn find_twin_crown(inst: &CapVcInstance) -> Option<TwinCrownApplication> {
    let t = inst.k + 2;
    false_twin_classes(&inst.graph)
        .into_iter()
        .find(|c| c.members.len() >= t && c.neighborhood.len() <= t)
        .map(|c| {
            let mut ranked = c.members.clone();
            ranked.sort_by_key(|&v| (inst.cap[v], v));
            ranked.truncate(t);
            let removed = ranked[0];
            ranked.sort_unstable();
            TwinCrownApplication {
                class: ranked,
                removed,
                decremented: c.neighborhood,
            }
        })
}

/// One application of the twin-crown rule. Capacities are decremented
/// without clamping.
pub fn rr_twin_crown(inst: &CapVcInstance) -> (CapVcInstance, bool) {
    match find_twin_crown(inst) {
        None => (inst.clone(), false),
        Some(app) => (apply(inst, &app), true),
    }
}

fn apply(inst: &CapVcInstance, app: &TwinCrownApplication) -> CapVcInstance {
    let mut next = inst.clone();
    for &v in &app.decremented {
        next.cap[v] -= 1;
    }
    next.without(&[app.removed])
}

/// Applies the twin-crown rule until no twin class qualifies.
pub fn kernelize_capvc(inst: &CapVcInstance) -> (CapVcInstance, Trace) {
    let mut trace = Trace::new(ProblemKind::CapVc);
    let mut cur = inst.clone();
    while let Some(app) = find_twin_crown(&cur) {
        trace.push(
            TraceStep::new(RULE_TWIN_CROWN)
                .decremented(cur.label_set(&app.decremented))
                .removed(cur.label_set(&[app.removed]))
                .detail(format!("twin set {:?}", cur.label_set(&app.class))),
        );
        cur = apply(&cur, &app);
    }
    (cur, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::weak_closure;
    use crate::graph::named::*;
    use crate::graph::Graph;
    use crate::oracles::{solve_capvc_exact, OracleLimits};
    use proptest::prelude::*;

    fn answer(inst: &CapVcInstance) -> bool {
        solve_capvc_exact(inst, OracleLimits::default()).unwrap().answer
    }

    #[test]
    fn star_with_mixed_capacities() {
        let inst = CapVcInstance::new(star(3), vec![3, 0, 5, 7], 1).unwrap();
        let (out, applied) = rr_twin_crown(&inst);
        assert!(applied);
        assert_eq!(out.labels, vec![0, 2, 3]);
        assert_eq!(out.cap, vec![2, 5, 7]);
        assert_eq!(answer(&inst), answer(&out));
    }

    #[test]
    fn triangle_untouched() {
        for k in 0..4 {
            let inst = CapVcInstance::new(complete(3), vec![2; 3], k).unwrap();
            assert!(!rr_twin_crown(&inst).1);
        }
    }

    #[test]
    fn two_twins_with_two_neighbors_at_budget_zero() {
        let g = complete_bipartite(2, 2);
        let inst = CapVcInstance::new(g, vec![1, 1, 1, 1], 0).unwrap();
        let (out, applied) = rr_twin_crown(&inst);
        assert!(applied);
        assert_eq!(answer(&inst), answer(&out));
    }

    #[test]
    fn star_reduces_to_k_plus_one_leaves() {
        let k = 2;
        for m in k + 2..9 {
            let mut caps = vec![m as i64];
            caps.extend(std::iter::repeat(1).take(m));
            let inst = CapVcInstance::new(star(m), caps, k).unwrap();
            let (out, trace) = kernelize_capvc(&inst);
            assert_eq!(trace.count(RULE_TWIN_CROWN), m - (k + 1));
            assert_eq!(out.graph.n(), k + 2);
            assert_eq!(answer(&inst), answer(&out));
        }
    }

    #[test]
    fn no_qualifying_class_gives_empty_trace() {
        let inst = CapVcInstance::new(path(5), vec![2; 5], 2).unwrap();
        let (out, trace) = kernelize_capvc(&inst);
        assert!(trace.is_empty());
        assert_eq!(out, inst);
    }

    fn arb_instance() -> impl Strategy<Value = CapVcInstance> {
        (2usize..10).prop_flat_map(|n| {
            (
                proptest::collection::vec((0..n, 0..n), 0..18),
                proptest::collection::vec(0i64..=4, n),
                0usize..=4,
            )
                .prop_map(move |(pairs, caps, k)| {
                    let g = Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap();
                    CapVcInstance::new(g, caps, k).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn rule_preserves_answer_and_weak_closure(inst in arb_instance()) {
            let (out, applied) = rr_twin_crown(&inst);
            if applied {
                prop_assert_eq!(answer(&inst), answer(&out));
                prop_assert!(weak_closure(&out.graph) <= weak_closure(&inst.graph));
            }
            let (kernel, _) = kernelize_capvc(&inst);
            prop_assert_eq!(answer(&inst), answer(&kernel));
        }
    }
}
