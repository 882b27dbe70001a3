//! Clique-or-independent-set search guided by a weak closure ordering, with
//! explicit size thresholds.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::closure::weak_closure_ordering;
use crate::combinatorics::{binomial, max_clique};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Clique,
    IndependentSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyWitness {
    pub kind: WitnessKind,
    pub vertices: VertexSet,
}

impl RamseyWitness {
    fn new(kind: WitnessKind, mut vs: Vec<Vertex>) -> Self {
        vs.sort_unstable();
        RamseyWitness {
            kind,
            vertices: VertexSet::from(vs),
        }
    }

    pub fn validates(&self, g: &Graph) -> bool {
        match self.kind {
            WitnessKind::Clique => g.is_clique(&self.vertices).unwrap_or(false),
            WitnessKind::IndependentSet => g.is_independent_set(&self.vertices).unwrap_or(false),
        }
    }
}

fn threshold_at(a: u64, b: u64, gamma: u64) -> BigUint {
    if a <= 1 || b <= 1 {
        return BigUint::from(1u32);
    }
    if a <= gamma || b <= gamma {
        return binomial(a + b, a.min(b));
    }
    let one = BigUint::from(1u32);
    let stated = a * binomial(b, gamma)
        + b * binomial(a, gamma) * (1..=b).map(|bp| binomial(bp - 1, gamma)).sum::<BigUint>()
        + &one;
    // per block: one vertex, fewer than `a` per γ-subset of the current
    // independent set, and fewer than R(a, j+1) ≤ C(a+j−1, j) per nonempty
    // subset of size j < γ
    let small: BigUint = (1..gamma)
        .map(|j| binomial(b - 1, j) * (binomial(a + j - 1, j) - &one))
        .sum();
    let block = &one + (a - 1) * binomial(b - 1, gamma) + small;
    stated.max(b * block)
}

/// Vertex count above which every graph of weak closure at most `gamma`
/// has a clique of size `a` or an independent set of size `b`. Taken as
/// the maximum of the per-parameter thresholds over all `a' ≤ a`,
/// `b' ≤ b`, `γ' ≤ γ`, so it is monotone in every argument.
pub fn r_gamma_bound(a: u64, b: u64, gamma: u64) -> BigUint {
    let mut best = BigUint::from(1u32);
    for ap in 1..=a {
        for bp in 1..=b {
            for gp in 1..=gamma.max(1) {
                let t = threshold_at(ap, bp, gp);
                if t > best {
                    best = t;
                }
            }
        }
    }
    best
}

/// Classical recursion: a vertex with its neighbors (clique side) or its
/// non-neighbors (independent side). Succeeds whenever
/// `|verts| ≥ C(a+b−2, a−1)`. Gives up after `budget` calls.
fn classical(g: &Graph, verts: &[Vertex], a: usize, b: usize, budget: &mut u64) -> Option<RamseyWitness> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    let &v = verts.first()?;
    if a <= 1 {
        return Some(RamseyWitness::new(WitnessKind::Clique, vec![v]));
    }
    if b <= 1 {
        return Some(RamseyWitness::new(WitnessKind::IndependentSet, vec![v]));
    }
    let (near, far): (Vec<Vertex>, Vec<Vertex>) = verts[1..].iter().partition(|&&w| g.has_edge(v, w));
    if let Some(w) = classical(g, &near, a - 1, b, budget) {
        return Some(extend(w, WitnessKind::Clique, v));
    }
    classical(g, &far, a, b - 1, budget).map(|w| extend(w, WitnessKind::IndependentSet, v))
}

fn extend(w: RamseyWitness, kind: WitnessKind, v: Vertex) -> RamseyWitness {
    if w.kind == kind {
        let mut vs = w.vertices.into_vec();
        vs.push(v);
        RamseyWitness::new(kind, vs)
    } else {
        w
    }
}

const CLASSICAL_BUDGET: u64 = 1 << 20;

/// Blocks of the closure ordering processed from the back: an independent
/// set inside the processed suffix grows by one per block, either by a
/// vertex with no neighbor in it, or by swapping the common neighborhood
/// `X` (`|X| < γ`) of many block vertices for an independent set of size
/// `|X|+1` among them. Many block vertices sharing `γ` neighbors in the set
/// form a clique instead.
fn block_construction(g: &Graph, a: usize, b: usize) -> Option<RamseyWitness> {
    let n = g.n();
    if n < b || b == 0 {
        return None;
    }
    let ordering = weak_closure_ordering(g);
    let gamma = ordering.gamma;
    let q = n / b;
    // block 1 takes the last q + (n mod b) vertices
    let mut ends = Vec::with_capacity(b + 1);
    ends.push(n);
    ends.push(n - q - n % b);
    for _ in 2..=b {
        let last = *ends.last().expect("nonempty");
        ends.push(last - q);
    }
    let block = |i: usize| &ordering.order[ends[i]..ends[i - 1]];
    let mut indep: Vec<Vertex> = vec![*block(1).first()?];
    for i in 2..=b {
        let mut shared: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
        let mut partial: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
        let mut grown = false;
        for &v in block(i) {
            let x: Vec<Vertex> = indep.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            if x.is_empty() {
                indep.push(v);
                grown = true;
                break;
            }
            if x.len() >= gamma {
                let group = shared.entry(x[..gamma].to_vec()).or_default();
                group.push(v);
                if group.len() >= a {
                    let w = RamseyWitness::new(WitnessKind::Clique, group.clone());
                    if w.validates(g) {
                        return Some(w);
                    }
                }
            } else {
                partial.entry(x).or_default().push(v);
            }
        }
        if !grown {
            for (x, group) in &partial {
                let mut budget = CLASSICAL_BUDGET;
                match classical(g, group, a, x.len() + 1, &mut budget) {
                    Some(w) if w.kind == WitnessKind::Clique => return Some(w),
                    Some(w) => {
                        indep.retain(|u| !x.contains(u));
                        indep.extend(w.vertices.iter().copied());
                        grown = true;
                        break;
                    }
                    None => {}
                }
            }
        }
        if !grown {
            return None;
        }
    }
    Some(RamseyWitness::new(WitnessKind::IndependentSet, indep))
}

/// Vertex count up to which the exhaustive fallback runs.
pub const EXACT_FALLBACK_VERTICES: usize = 20;

/// Clique of size `a` or independent set of size `b`. Tries the block
/// construction, then the classical recursion, then (up to
/// [`EXACT_FALLBACK_VERTICES`] vertices) exact search. `None` means no
/// witness was found; below the bound that can be the true answer.
pub fn clique_or_independent_set(g: &Graph, a: usize, b: usize) -> Option<RamseyWitness> {
    if a == 0 {
        return Some(RamseyWitness::new(WitnessKind::Clique, Vec::new()));
    }
    if b == 0 {
        return Some(RamseyWitness::new(WitnessKind::IndependentSet, Vec::new()));
    }
    if let Some(w) = block_construction(g, a, b) {
        return Some(trim(w, a, b));
    }
    let all: Vec<Vertex> = g.vertices().collect();
    let mut budget = CLASSICAL_BUDGET;
    if let Some(w) = classical(g, &all, a, b, &mut budget) {
        return Some(w);
    }
    if g.n() <= EXACT_FALLBACK_VERTICES {
        let c = max_clique(g);
        if c.len() >= a {
            return Some(RamseyWitness::new(WitnessKind::Clique, c[..a].to_vec()));
        }
        let i = max_clique(&g.complement());
        if i.len() >= b {
            return Some(RamseyWitness::new(WitnessKind::IndependentSet, i[..b].to_vec()));
        }
    }
    None
}

fn trim(w: RamseyWitness, a: usize, b: usize) -> RamseyWitness {
    let size = match w.kind {
        WitnessKind::Clique => a,
        WitnessKind::IndependentSet => b,
    };
    let mut vs = w.vertices.into_vec();
    vs.truncate(size);
    RamseyWitness::new(w.kind, vs)
}

/// Whether a graph is large enough that a clique or an independent set of
/// size `k` is guaranteed, deciding any hereditary subgraph problem whose
/// class holds all cliques and edgeless graphs.
pub fn subgraph_decided_by_size(g: &Graph, k: u64) -> bool {
    let gamma = weak_closure_ordering(g).gamma as u64;
    BigUint::from(g.n()) >= r_gamma_bound(k, k, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use proptest::prelude::*;

    fn witness_exists(g: &Graph, a: usize, b: usize) -> bool {
        max_clique(g).len() >= a || max_clique(&g.complement()).len() >= b
    }

    #[test]
    fn bound_examples() {
        assert_eq!(r_gamma_bound(1, 5, 2), BigUint::from(1u32));
        assert_eq!(r_gamma_bound(5, 1, 2), BigUint::from(1u32));
        for b in 1..6 {
            assert!(r_gamma_bound(2, b, 1) >= BigUint::from(b));
        }
        // a, b > γ: stated expression 3·3 + 3·3·(0+1+2) + 1
        assert_eq!(threshold_at(3, 3, 1), BigUint::from(37u32));
        assert_eq!(threshold_at(3, 3, 3), binomial(6, 3));
    }

    #[test]
    fn bound_is_monotone() {
        for a in 1..6u64 {
            for b in 1..6u64 {
                for g in 1..4u64 {
                    let here = r_gamma_bound(a, b, g);
                    assert!(r_gamma_bound(a + 1, b, g) >= here);
                    assert!(r_gamma_bound(a, b + 1, g) >= here);
                    assert!(r_gamma_bound(a, b, g + 1) >= here);
                }
            }
        }
    }

    #[test]
    fn simple_witnesses() {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(7, edges).unwrap();
        let w = clique_or_independent_set(&g, 4, 5).unwrap();
        assert_eq!(w.kind, WitnessKind::Clique);
        assert!(w.validates(&g));

        let e = Graph::empty(6);
        let w = clique_or_independent_set(&e, 2, 6).unwrap();
        assert_eq!(w.kind, WitnessKind::IndependentSet);
        assert_eq!(w.vertices.len(), 6);

        assert!(clique_or_independent_set(&cycle(5), 3, 3).is_none());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| {
                Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn witnesses_validate_and_exist_when_possible(g in arb_graph(14), a in 1usize..5, b in 1usize..5) {
            let got = clique_or_independent_set(&g, a, b);
            if let Some(w) = &got {
                prop_assert!(w.validates(&g));
                let size = if w.kind == WitnessKind::Clique { a } else { b };
                prop_assert_eq!(w.vertices.len(), size);
            }
            prop_assert_eq!(got.is_some(), witness_exists(&g, a, b));
        }

        #[test]
        fn block_construction_meets_threshold(g in arb_graph(40), a in 2usize..4, b in 2usize..4) {
            let gamma = weak_closure_ordering(&g).gamma as u64;
            if BigUint::from(g.n()) >= threshold_at(a as u64, b as u64, gamma) && a as u64 > gamma && b as u64 > gamma {
                let w = block_construction(&g, a, b);
                prop_assert!(w.is_some());
                prop_assert!(w.unwrap().validates(&g));
            }
        }
    }
}
