//! Connected ℓ-component order connectivity: small-component deletion and
//! removal of surplus ℓ-twin sets.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::{CocInstance, GraphInstance, ProblemKind};
use crate::trace::{Trace, TraceStep};

pub const RULE_SMALL_COMPONENT: &str = "coc.small_component";
pub const RULE_TWIN_SETS: &str = "coc.twin_sets";

/// Largest ℓ accepted by [`kernelize_coc`] unless raised explicitly.
pub const DEFAULT_MAX_ELL: usize = 4;

/// All vertex sets of size exactly `r` that induce a connected subgraph,
/// each sorted, in lexicographic order.
pub fn connected_subsets(g: &Graph, r: usize) -> Vec<Vec<Vertex>> {
    if r == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<Vec<Vertex>> = g.vertices().map(|v| vec![v]).collect();
    for _ in 1..r {
        let mut next = BTreeSet::new();
        for s in &level {
            for &u in s {
                for &w in g.neighbors(u) {
                    if s.binary_search(&w).is_err() {
                        let mut t = s.clone();
                        let pos = t.binary_search(&w).unwrap_err();
                        t.insert(pos, w);
                        next.insert(t);
                    }
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

fn outside(g: &Graph, a: Vertex, set: &[Vertex]) -> Vec<Vertex> {
    g.neighbors(a)
        .iter()
        .copied()
        .filter(|w| set.binary_search(w).is_err())
        .collect()
}

/// Sorted multiset of the neighborhoods leaving `set`. Two sets of equal
/// size are ℓ-twins exactly when these agree.
fn twin_signature(g: &Graph, set: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut sig: Vec<Vec<Vertex>> = set.iter().map(|&a| outside(g, a, set)).collect();
    sig.sort();
    sig
}

/// Whether some bijection `a_i ↦ b_i` between `a` and `b` satisfies
/// `N(a_i) \ a = N(b_i) \ b` for every `i`. Tries every ordering of `b`.
pub fn are_ell_twins(g: &Graph, a: &[Vertex], b: &[Vertex]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut sa = a.to_vec();
    sa.sort_unstable();
    let mut sb = b.to_vec();
    sb.sort_unstable();
    let na: Vec<Vec<Vertex>> = sa.iter().map(|&x| outside(g, x, &sa)).collect();
    let nb: Vec<Vec<Vertex>> = sb.iter().map(|&x| outside(g, x, &sb)).collect();
    let mut used = vec![false; nb.len()];
    fn assign(i: usize, na: &[Vec<Vertex>], nb: &[Vec<Vertex>], used: &mut [bool]) -> bool {
        if i == na.len() {
            return true;
        }
        for j in 0..nb.len() {
            if !used[j] && na[i] == nb[j] {
                used[j] = true;
                if assign(i + 1, na, nb, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    assign(0, &na, &nb, &mut used)
}

/// Connected vertex sets of size 1..=ℓ grouped into ℓ-twin classes. Classes
/// are ordered by set size, then by their smallest member; members are
/// sorted.
pub fn ell_twin_classes(g: &Graph, ell: usize) -> Vec<Vec<VertexSet>> {
    let mut classes = Vec::new();
    for r in 1..=ell {
        let mut by_sig: BTreeMap<Vec<Vec<Vertex>>, Vec<VertexSet>> = BTreeMap::new();
        for s in connected_subsets(g, r) {
            by_sig
                .entry(twin_signature(g, &s))
                .or_default()
                .push(VertexSet::from(s));
        }
        let mut group: Vec<Vec<VertexSet>> = by_sig.into_values().collect();
        group.sort_by(|x, y| x[0].as_slice().cmp(y[0].as_slice()));
        classes.extend(group);
    }
    classes
}

/// Deletes every connected component with at most `ell` vertices.
pub fn rr_small_components(inst: &CocInstance) -> (CocInstance, bool) {
    let small = small_component_vertices(inst);
    if small.is_empty() {
        (inst.clone(), false)
    } else {
        (inst.without(&small), true)
    }
}

fn small_component_vertices(inst: &CocInstance) -> Vec<Vertex> {
    let mut small: Vec<Vertex> = inst
        .graph
        .components()
        .into_iter()
        .filter(|c| c.len() <= inst.ell)
        .flatten()
        .collect();
    small.sort_unstable();
    small
}

/// Picks pairwise disjoint members of the first twin class holding at least
/// `k + ℓ + 2` of them and returns the last one picked.
pub fn find_surplus_twin_set(inst: &CocInstance) -> Option<VertexSet> {
    let threshold = inst.k + inst.ell + 2;
    for class in ell_twin_classes(&inst.graph, inst.ell) {
        if class.len() < threshold {
            continue;
        }
        let mut taken = vec![false; inst.graph.n()];
        let mut picked: Vec<&VertexSet> = Vec::new();
        for s in &class {
            if s.iter().all(|&v| !taken[v]) {
                for &v in s.iter() {
                    taken[v] = true;
                }
                picked.push(s);
            }
        }
        if picked.len() >= threshold {
            return picked.last().map(|s| (*s).clone());
        }
    }
    None
}

pub fn rr_surplus_twin_sets(inst: &CocInstance) -> (CocInstance, bool) {
    match find_surplus_twin_set(inst) {
        Some(s) => (inst.without(&s), true),
        None => (inst.clone(), false),
    }
}

/// Both rules to exhaustion. Fails when `ell` exceeds [`DEFAULT_MAX_ELL`].
pub fn kernelize_coc(inst: &CocInstance) -> Result<(CocInstance, Trace)> {
    kernelize_coc_with_max(inst, DEFAULT_MAX_ELL)
}

pub fn kernelize_coc_with_max(inst: &CocInstance, max_ell: usize) -> Result<(CocInstance, Trace)> {
    if inst.ell == 0 || inst.ell > max_ell {
        return Err(Error::Precondition(format!(
            "ell = {} outside the supported range 1..={max_ell}",
            inst.ell
        )));
    }
    let mut trace = Trace::new(ProblemKind::Coc);
    let mut cur = inst.clone();
    loop {
        let small = small_component_vertices(&cur);
        if !small.is_empty() {
            trace.push(TraceStep::new(RULE_SMALL_COMPONENT).removed(cur.label_set(&small)));
            cur = cur.without(&small);
            continue;
        }
        match find_surplus_twin_set(&cur) {
            Some(s) => {
                trace.push(TraceStep::new(RULE_TWIN_SETS).removed(cur.label_set(&s)));
                cur = cur.without(&s);
            }
            None => break,
        }
    }
    Ok((cur, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::oracles::{solve_coc_exact, OracleLimits};
    use proptest::prelude::*;

    fn answer(inst: &CocInstance) -> bool {
        solve_coc_exact(inst, OracleLimits::with_vertices(20)).unwrap().answer
    }

    #[test]
    fn twin_class_examples() {
        // two disjoint edges {0,1} and {2,3}, both ends seeing hubs 4 and 5
        let g = Graph::from_edges(
            6,
            [(0, 1), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        )
        .unwrap();
        assert!(are_ell_twins(&g, &[0, 1], &[2, 3]));
        let classes = ell_twin_classes(&g, 2);
        let pair = classes
            .iter()
            .find(|c| c.iter().any(|s| s.as_slice() == [0, 1]))
            .unwrap();
        assert_eq!(pair.len(), 2);

        // mirrored paths 0-1-2 and 3-4-5, with 0 and 5 attached to hub 6
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 6), (5, 6)]).unwrap();
        assert!(are_ell_twins(&g, &[0, 1, 2], &[3, 4, 5]));
        assert!(!are_ell_twins(&g, &[0, 1], &[3, 4]));
        assert!(!are_ell_twins(&g, &[0, 1, 2], &[3, 4]));
    }

    #[test]
    fn small_components_vanish() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let inst = CocInstance::new(g, 2, 0).unwrap();
        let (out, trace) = kernelize_coc(&inst).unwrap();
        assert_eq!(out.graph.n(), 0);
        assert_eq!(trace.count(RULE_SMALL_COMPONENT), 1);
        assert!(answer(&inst));
    }

    #[test]
    fn pendant_pairs_on_hub_pair() {
        let (ell, k) = (2, 1);
        let pairs = k + ell + 3;
        let mut edges = vec![(0, 1)];
        for i in 0..pairs {
            let (a, b) = (2 + 2 * i, 3 + 2 * i);
            edges.extend([(a, b), (a, 0), (b, 1)]);
        }
        let g = Graph::from_edges(2 + 2 * pairs, edges).unwrap();
        let inst = CocInstance::new(g, ell, k).unwrap();
        let (once, applied) = rr_surplus_twin_sets(&inst);
        assert!(applied);
        assert_eq!(once.graph.n(), inst.graph.n() - 2);
        let (out, trace) = kernelize_coc(&inst).unwrap();
        assert_eq!(trace.count(RULE_TWIN_SETS), 2);
        assert_eq!(out.graph.n(), 2 + 2 * (k + ell + 1));
        assert_eq!(answer(&inst), answer(&out));
    }

    #[test]
    fn ell_cap_enforced() {
        let inst = CocInstance::new(path(3), 5, 1).unwrap();
        assert!(matches!(kernelize_coc(&inst), Err(Error::Precondition(_))));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..2 * n).prop_map(move |pairs| {
                Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    /// A small core plus `copies` identical gadgets of size `r` wired the
    /// same way to the core, so twin sets are plentiful.
    fn gadget_graph(core: usize, core_edges: &[(usize, usize)], r: usize, inner: &[(usize, usize)], attach: &[(usize, usize)], copies: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = core_edges.to_vec();
        for c in 0..copies {
            let base = core + c * r;
            edges.extend(inner.iter().map(|&(a, b)| (base + a, base + b)));
            edges.extend(attach.iter().map(|&(a, h)| (base + a, h)));
        }
        Graph::from_edges(core + copies * r, edges.into_iter().filter(|(u, v)| u != v)).unwrap()
    }

    proptest! {
        #[test]
        fn gadget_copies_preserve_answer(
            core in 2usize..5,
            core_edges in proptest::collection::vec((0usize..5, 0usize..5), 0..6),
            r in 1usize..=2,
            inner_edge in any::<bool>(),
            attach in proptest::collection::vec((0usize..2, 0usize..5), 1..4),
            copies in 3usize..7,
            ell in 1usize..=2,
            k in 0usize..3,
        ) {
            let core_edges: Vec<_> = core_edges.into_iter().map(|(a, b)| (a % core, b % core)).collect();
            let attach: Vec<_> = attach.into_iter().map(|(a, h)| (a % r, h % core)).collect();
            let inner = if inner_edge && r == 2 { vec![(0, 1)] } else { vec![] };
            let g = gadget_graph(core, &core_edges, r, &inner, &attach, copies);
            let inst = CocInstance::new(g, ell, k).unwrap();
            let (out, _) = kernelize_coc(&inst).unwrap();
            prop_assert_eq!(answer(&inst), answer(&out));
        }

        #[test]
        fn signature_matches_bijection_search(g in arb_graph(8), r in 1usize..4) {
            let sets = connected_subsets(&g, r);
            for a in sets.iter().take(6) {
                for b in sets.iter().take(6) {
                    prop_assert_eq!(
                        twin_signature(&g, a) == twin_signature(&g, b),
                        are_ell_twins(&g, a, b)
                    );
                }
            }
        }

        #[test]
        fn kernel_preserves_answer(g in arb_graph(10), ell in 1usize..=2, k in 0usize..4) {
            let inst = CocInstance::new(g, ell, k).unwrap();
            let (out, trace) = kernelize_coc(&inst).unwrap();
            prop_assert_eq!(answer(&inst), answer(&out));
            let replayed = trace.replay(&inst.to_instance()).unwrap();
            prop_assert_eq!(replayed.reduced().unwrap(), &out.to_instance());
        }
    }
}
