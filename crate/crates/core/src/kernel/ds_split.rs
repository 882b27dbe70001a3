//! Dominating set on split graphs: split recognition, good orderings,
//! S-neighborhoods, and the non-dominating, sunflower and dominated-clique
//! rules. Also the biclique-freeness certificate.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::closure::{weak_closure, weak_closure_ordering, ClosureOrdering};
use crate::combinatorics::{clique_number, factorial, find_sunflower, Sunflower};
use crate::error::{Error, Result};
use crate::graph::{sorted_intersection_len, Graph, Vertex};
use crate::instance::{DsInstance, GraphInstance, Outcome, ProblemKind};
use crate::trace::{Trace, TraceStep};

pub const RULE_ISOLATED: &str = "ds.isolated";
pub const RULE_NC: &str = "ds.nc";
pub const RULE_SUNFLOWER: &str = "ds.sunflower";
pub const RULE_TWIN: &str = "ds.twin";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
}

impl SplitPartition {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut all: Vec<Vertex> = self.clique.iter().chain(&self.independent).copied().collect();
        all.sort_unstable();
        all == (0..g.n()).collect::<Vec<_>>()
            && g.is_clique(&self.clique).unwrap_or(false)
            && g.is_independent_set(&self.independent).unwrap_or(false)
    }
}

/// Split partition whose clique side is a maximum clique, via the
/// degree-sequence characterization: with degrees sorted descending and
/// `m = max{i : d_i ≥ i−1}`, the graph is split iff
/// `Σ_{i≤m} d_i = m(m−1) + Σ_{i>m} d_i`, and the top `m` vertices form the
/// clique side.
pub fn split_partition(g: &Graph) -> Result<SplitPartition> {
    let mut by_degree: Vec<Vertex> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = by_degree
        .iter()
        .enumerate()
        .filter(|&(i, &v)| g.degree(v) >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let top: usize = by_degree[..m].iter().map(|&v| g.degree(v)).sum();
    let rest: usize = by_degree[m..].iter().map(|&v| g.degree(v)).sum();
    if top != m * m.saturating_sub(1) + rest {
        return Err(Error::NotSplit);
    }
    let mut clique = by_degree[..m].to_vec();
    let mut independent = by_degree[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    Ok(SplitPartition { clique, independent })
}

/// Partition whose independent side is a maximum independent set: moves
/// the (at most one) clique vertex without neighbors on the independent
/// side over.
pub fn independent_maximum_partition(g: &Graph) -> Result<SplitPartition> {
    let mut part = split_partition(g)?;
    let mut on_i = vec![false; g.n()];
    for &v in &part.independent {
        on_i[v] = true;
    }
    if let Some(pos) = part
        .clique
        .iter()
        .position(|&c| g.neighbors(c).iter().all(|&w| !on_i[w]))
    {
        let c = part.clique.remove(pos);
        let at = part.independent.binary_search(&c).unwrap_err();
        part.independent.insert(at, c);
    }
    Ok(part)
}

/// Independent-side vertices adjacent to the whole (nonempty) clique side.
pub fn non_dominating_candidates(g: &Graph, part: &SplitPartition) -> Vec<Vertex> {
    if part.clique.is_empty() {
        return Vec::new();
    }
    part.independent
        .iter()
        .copied()
        .filter(|&v| g.degree(v) == part.clique.len())
        .collect()
}

pub fn rr_dss_nc(inst: &DsInstance, part: &SplitPartition) -> (DsInstance, bool) {
    let del = non_dominating_candidates(&inst.graph, part);
    if del.is_empty() {
        (inst.clone(), false)
    } else {
        (inst.without(&del), true)
    }
}

/// Closure ordering with every clique vertex before every independent
/// vertex: clique vertices are peeled by minimum closure in the remaining
/// graph (smallest id on ties), each required to stay below the weak
/// closure of `g`; independent vertices follow in id order.
pub fn good_ordering(g: &Graph, part: &SplitPartition) -> Result<ClosureOrdering> {
    let gamma = weak_closure(g);
    let mut alive = vec![true; g.n()];
    let mut rest: Vec<Vertex> = part.clique.clone();
    let mut order = Vec::with_capacity(g.n());
    while !rest.is_empty() {
        let (cl, at) = rest
            .iter()
            .enumerate()
            .map(|(i, &v)| (closure_within(g, v, &alive), i))
            .min()
            .expect("nonempty");
        if cl >= gamma {
            return Err(Error::Precondition(format!(
                "no clique vertex with closure below {gamma} among {rest:?}"
            )));
        }
        let v = rest.remove(at);
        alive[v] = false;
        order.push(v);
    }
    order.extend(part.independent.iter().copied());
    ClosureOrdering::from_order(g, order)
}

fn closure_within(g: &Graph, v: Vertex, alive: &[bool]) -> usize {
    let nv: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
    g.vertices()
        .filter(|&w| alive[w] && w != v && !g.has_edge(v, w))
        .map(|w| {
            let nw: Vec<Vertex> = g.neighbors(w).iter().copied().filter(|&x| alive[x]).collect();
            sorted_intersection_len(&nv, &nw)
        })
        .max()
        .unwrap_or(0)
}

/// `prefix` is the number of leading clique vertices (in the ordering) all
/// adjacent to `vertex`; `rest` is the remaining neighborhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SNeighborhood {
    pub vertex: Vertex,
    pub prefix: usize,
    pub rest: Vec<Vertex>,
}

pub fn compute_s_neighborhoods(g: &Graph, part: &SplitPartition, ordering: &ClosureOrdering) -> Result<Vec<SNeighborhood>> {
    let clique_order: Vec<Vertex> = ordering.order[..part.clique.len()].to_vec();
    let mut sorted = clique_order.clone();
    sorted.sort_unstable();
    if sorted != part.clique {
        return Err(Error::Precondition("ordering does not start with the clique side".into()));
    }
    part.independent
        .iter()
        .map(|&u| {
            let prefix = clique_order.iter().take_while(|&&c| g.has_edge(u, c)).count();
            if prefix == clique_order.len() && prefix > 0 {
                return Err(Error::Precondition(format!(
                    "vertex {u} sees the whole clique side; apply the non-dominating rule first"
                )));
            }
            let head = &clique_order[..prefix];
            let rest = g.neighbors(u).iter().copied().filter(|w| !head.contains(w)).collect();
            Ok(SNeighborhood { vertex: u, prefix, rest })
        })
        .collect()
}

/// Sunflower with at least `k + 2` members among the S-sets. A set
/// repeated `k + 2` times is taken directly; otherwise the greedy search
/// runs on the distinct sets, one representative each, so repeated sets
/// cannot block it.
pub fn find_s_sunflower(table: &[SNeighborhood], k: usize) -> Option<Sunflower> {
    let mut by_set: BTreeMap<&Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, e) in table.iter().enumerate() {
        by_set.entry(&e.rest).or_default().push(i);
    }
    if let Some((s, members)) = by_set.iter().find(|(_, m)| m.len() >= k + 2) {
        return Some(Sunflower {
            core: (*s).clone(),
            members: members.clone(),
        });
    }
    let (distinct, reps): (Vec<Vec<usize>>, Vec<usize>) = by_set
        .iter()
        .map(|(s, m)| ((*s).clone(), m[0]))
        .unzip();
    find_sunflower(&distinct, k + 2).map(|sf| Sunflower {
        core: sf.core,
        members: sf.members.iter().map(|&i| reps[i]).collect(),
    })
}

/// Member of the sunflower with the largest prefix (largest id on ties).
fn sunflower_victim(table: &[SNeighborhood], sf: &Sunflower) -> Vertex {
    sf.members
        .iter()
        .map(|&i| (table[i].prefix, table[i].vertex))
        .max()
        .expect("nonempty")
        .1
}

pub fn rr_dss_sunflower(inst: &DsInstance, table: &[SNeighborhood]) -> (DsInstance, bool) {
    match find_s_sunflower(table, inst.k) {
        Some(sf) => (inst.without(&[sunflower_victim(table, &sf)]), true),
        None => (inst.clone(), false),
    }
}

/// How clique-side domination is compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Domination {
    /// `N[u] ⊇ N[v]`.
    #[default]
    Closed,
    /// `N(u) ⊇ N(v)`; never holds for two distinct adjacent vertices.
    Open,
}

/// Clique vertex `v` dominated by another clique vertex `u`, scanning `v`
/// from the largest id down.
pub fn find_dominated_clique_vertex(g: &Graph, part: &SplitPartition, mode: Domination) -> Option<Vertex> {
    let hood = |v: Vertex| -> Vec<Vertex> {
        let mut h = g.neighbors(v).to_vec();
        if mode == Domination::Closed {
            let at = h.binary_search(&v).unwrap_err();
            h.insert(at, v);
        }
        h
    };
    part.clique.iter().rev().copied().find(|&v| {
        let hv = hood(v);
        part.clique.iter().any(|&u| {
            u != v && sorted_intersection_len(&hood(u), &hv) == hv.len()
        })
    })
}

pub fn rr_dss_twin(inst: &DsInstance, part: &SplitPartition, mode: Domination) -> (DsInstance, bool) {
    match find_dominated_clique_vertex(&inst.graph, part, mode) {
        Some(v) => (inst.without(&[v]), true),
        None => (inst.clone(), false),
    }
}

/// Full pipeline with closed-neighborhood domination.
pub fn kernelize_ds_split(inst: &DsInstance) -> Result<(Outcome<DsInstance>, Trace)> {
    kernelize_ds_split_with(inst, Domination::Closed)
}

/// Isolated vertices are deleted with a budget decrement each (answering No
/// when the budget runs out). Then, recomputing the partition after every
/// change: the non-dominating rule, the sunflower rule, the dominated-clique
/// rule.
pub fn kernelize_ds_split_with(inst: &DsInstance, mode: Domination) -> Result<(Outcome<DsInstance>, Trace)> {
    split_partition(&inst.graph)?;
    let mut trace = Trace::new(ProblemKind::Ds);
    let mut cur = inst.clone();
    loop {
        let isolated: Vec<Vertex> = cur.graph.vertices().filter(|&v| cur.graph.degree(v) == 0).collect();
        if !isolated.is_empty() {
            if isolated.len() > cur.k {
                trace.push(TraceStep::new(RULE_ISOLATED).decided(false));
                return Ok((Outcome::Decided(false), trace));
            }
            trace.push(
                TraceStep::new(RULE_ISOLATED)
                    .removed(cur.label_set(&isolated))
                    .k_delta(-(isolated.len() as i64)),
            );
            let k = cur.k - isolated.len();
            cur = cur.without(&isolated);
            cur.k = k;
            continue;
        }
        let part = independent_maximum_partition(&cur.graph)?;
        let nc = non_dominating_candidates(&cur.graph, &part);
        if !nc.is_empty() {
            trace.push(TraceStep::new(RULE_NC).removed(cur.label_set(&nc)));
            cur = cur.without(&nc);
            continue;
        }
        let ordering = good_ordering(&cur.graph, &part)?;
        let table = compute_s_neighborhoods(&cur.graph, &part, &ordering)?;
        if let Some(sf) = find_s_sunflower(&table, cur.k) {
            let v = sunflower_victim(&table, &sf);
            let core: Vec<usize> = sf.core.iter().map(|&c| cur.labels[c]).collect();
            trace.push(
                TraceStep::new(RULE_SUNFLOWER)
                    .removed(cur.label_set(&[v]))
                    .detail(format!("{} members, core {core:?}", sf.members.len())),
            );
            cur = cur.without(&[v]);
            continue;
        }
        if let Some(v) = find_dominated_clique_vertex(&cur.graph, &part, mode) {
            trace.push(TraceStep::new(RULE_TWIN).removed(cur.label_set(&[v])));
            cur = cur.without(&[v]);
            continue;
        }
        return Ok((Outcome::Reduced(cur), trace));
    }
}

/// Independent-side size at which the sunflower lemma promises a
/// sunflower with `k + 2` members among `λ = γ−1`-bounded sets, namely
/// `λ!(k+2)^λ`. Only valid for families without repeated sets.
pub fn ds_split_sunflower_threshold(gamma: usize, k: usize) -> BigUint {
    let lambda = gamma.saturating_sub(1);
    factorial(lambda as u64) * BigUint::from(k + 2).pow(lambda as u32)
}

/// Largest independent side left after the sunflower rule is exhausted:
/// each S-set repeats at most `k+1` times, and there are at most
/// `λ!(k+1)^λ + 1` distinct ones (the greedy search succeeds on more
/// distinct nonempty sets; the empty set adds one).
pub fn ds_split_independent_limit(gamma: usize, k: usize) -> BigUint {
    let lambda = gamma.saturating_sub(1);
    let distinct = factorial(lambda as u64) * BigUint::from(k + 1).pow(lambda as u32) + 1u32;
    BigUint::from(k + 1) * distinct
}

/// Largest clique side left once the dominated-clique rule is exhausted.
pub fn ds_split_clique_limit(gamma: usize, independent: usize) -> usize {
    gamma * independent + 1
}

/// Weak closure, clique number and `ρ = γ + ω + 1` of a graph, with the
/// check that no `K_{ρ,ρ}` subgraph exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicliqueCertificate {
    pub gamma: usize,
    pub omega: usize,
    pub rho: usize,
}

pub fn rho_biclique_certificate(g: &Graph) -> Result<BicliqueCertificate> {
    let gamma = weak_closure_ordering(g).gamma;
    let omega = clique_number(g);
    let rho = gamma + omega + 1;
    if let Some((a, b)) = g.contains_biclique(rho, rho)? {
        return Err(Error::Certificate(format!(
            "K_{{{rho},{rho}}} found between {:?} and {:?}",
            a.as_slice(),
            b.as_slice()
        )));
    }
    Ok(BicliqueCertificate { gamma, omega, rho })
}
