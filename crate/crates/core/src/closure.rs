//! Closure numbers, weak closure orderings, degeneracy and neighborhood
//! class counting over an independent set.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, binomial_prefix_sum};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// `cl_G(v)`: the largest number of common neighbors `v` has with a vertex
/// outside `N[v]`, or 0 when there is no such vertex.
pub fn vertex_closure(g: &Graph, v: Vertex) -> Result<usize> {
    g.check_vertex(v)?;
    Ok(g.vertices()
        .filter(|&w| w != v && !g.has_edge(v, w))
        .map(|w| g.common_neighbor_count(v, w))
        .max()
        .unwrap_or(0))
}

pub fn closure_values(g: &Graph) -> Vec<usize> {
    g.vertices()
        .map(|v| vertex_closure(g, v).expect("valid vertex"))
        .collect()
}

/// Smallest `c` such that the graph is c-closed.
pub fn closure_number(g: &Graph) -> usize {
    1 + closure_values(g).into_iter().max().unwrap_or(0)
}

/// A vertex ordering together with the closure of each vertex in the graph
/// induced by itself and the vertices after it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureOrdering {
    pub order: Vec<Vertex>,
    pub step_closure: Vec<usize>,
    pub gamma: usize,
}

impl ClosureOrdering {
    /// Computes step closures of an arbitrary permutation from scratch.
    pub fn from_order(g: &Graph, order: Vec<Vertex>) -> Result<Self> {
        let n = g.n();
        if order.len() != n || VertexSet::new(order.iter().copied()).len() != n {
            return Err(Error::invalid("ordering is not a permutation of the vertices"));
        }
        order.iter().try_for_each(|&v| g.check_vertex(v))?;
        let mut step_closure = Vec::with_capacity(n);
        for i in 0..n {
            let (sub, map) = g.induced_subgraph(&order[i..])?;
            let local = map.binary_search(&order[i]).expect("present");
            step_closure.push(vertex_closure(&sub, local)?);
        }
        let gamma = 1 + step_closure.iter().copied().max().unwrap_or(0);
        Ok(ClosureOrdering {
            order,
            step_closure,
            gamma,
        })
    }

    /// Position of each vertex in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Re-derives the certificate independently and compares.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let fresh = ClosureOrdering::from_order(g, self.order.clone())?;
        if fresh != *self {
            return Err(Error::Certificate(
                "step closures do not match the ordering".into(),
            ));
        }
        Ok(())
    }
}

/// Common-neighbor counts for every pair, restricted to alive vertices.
struct PairCounts {
    n: usize,
    cnt: Vec<u32>,
}

impl PairCounts {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut cnt = vec![0u32; n * n];
        for x in g.vertices() {
            let nb = g.neighbors(x);
            for (i, &u) in nb.iter().enumerate() {
                for &w in &nb[i + 1..] {
                    cnt[u * n + w] += 1;
                    cnt[w * n + u] += 1;
                }
            }
        }
        PairCounts { n, cnt }
    }

    fn remove(&mut self, g: &Graph, x: Vertex, alive: &[bool]) {
        let nb: Vec<Vertex> = g.neighbors(x).iter().copied().filter(|&u| alive[u]).collect();
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                self.cnt[u * self.n + w] -= 1;
                self.cnt[w * self.n + u] -= 1;
            }
        }
    }

    fn closure(&self, g: &Graph, v: Vertex, alive: &[bool]) -> usize {
        (0..self.n)
            .filter(|&w| alive[w] && w != v && !g.has_edge(v, w))
            .map(|w| self.cnt[v * self.n + w] as usize)
            .max()
            .unwrap_or(0)
    }
}

/// Greedy peeling: repeatedly removes a vertex of minimum closure in the
/// remaining graph (smallest id on ties). The resulting `gamma` is the weak
/// closure of `g`.
pub fn weak_closure_ordering(g: &Graph) -> ClosureOrdering {
    let n = g.n();
    let mut counts = PairCounts::new(g);
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut step_closure = Vec::with_capacity(n);
    for _ in 0..n {
        let (cl, v) = (0..n)
            .filter(|&v| alive[v])
            .map(|v| (counts.closure(g, v, &alive), v))
            .min()
            .expect("some vertex alive");
        alive[v] = false;
        counts.remove(g, v, &alive);
        order.push(v);
        step_closure.push(cl);
    }
    let gamma = 1 + step_closure.iter().copied().max().unwrap_or(0);
    ClosureOrdering {
        order,
        step_closure,
        gamma,
    }
}

/// Weak closure number γ.
pub fn weak_closure(g: &Graph) -> usize {
    weak_closure_ordering(g).gamma
}

/// Neighbors of `vertex` split into those before it (prior) and after it
/// (posterior) in an ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqSplit {
    pub vertex: Vertex,
    pub prior: Vec<Vertex>,
    pub posterior: Vec<Vertex>,
}

pub fn pq_split(g: &Graph, ordering: &ClosureOrdering, v: Vertex) -> Result<PqSplit> {
    g.check_vertex(v)?;
    if ordering.order.len() != g.n() {
        return Err(Error::invalid("ordering does not cover the graph"));
    }
    let pos = ordering.positions();
    Ok(split_with_positions(g, &pos, v))
}

pub(crate) fn split_with_positions(g: &Graph, pos: &[usize], v: Vertex) -> PqSplit {
    let (prior, posterior) = g.neighbors(v).iter().partition(|&&w| pos[w] < pos[v]);
    PqSplit {
        vertex: v,
        prior,
        posterior,
    }
}

/// Checks `|Q(u) ∩ Q(v)| ≤ |Q(u) ∩ N(v)| < γ` for every nonadjacent pair
/// under the given ordering.
pub fn check_posterior_intersections(g: &Graph, ordering: &ClosureOrdering) -> Result<()> {
    let pos = ordering.positions();
    let q: Vec<Vec<Vertex>> = g.vertices().map(|v| split_with_positions(g, &pos, v).posterior).collect();
    for u in g.vertices() {
        for v in g.vertices() {
            if u == v || g.has_edge(u, v) {
                continue;
            }
            let qq = q[u].iter().filter(|x| q[v].contains(x)).count();
            let qn = q[u].iter().filter(|&&x| g.has_edge(x, v)).count();
            if qq > qn || qn >= ordering.gamma {
                return Err(Error::Certificate(format!(
                    "pair ({u}, {v}): |Q∩Q| = {qq}, |Q∩N| = {qn}, gamma = {}",
                    ordering.gamma
                )));
            }
        }
    }
    Ok(())
}

/// Degeneracy by min-degree peeling (smallest id on ties), with the peeling
/// order.
pub fn degeneracy(g: &Graph) -> (usize, Vec<Vertex>) {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("some vertex alive");
        d = d.max(deg[v]);
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
        order.push(v);
    }
    (d, order)
}

/// Sizes of the prior-, posterior- and full-neighborhood equivalence classes
/// of the independent set `V \ cover`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub independent_size: usize,
    pub prior_classes: usize,
    pub posterior_classes: usize,
    pub neighborhood_classes: usize,
    /// Largest class of vertices sharing the same neighborhood.
    pub largest_class: usize,
}

pub fn neighborhood_classes(g: &Graph, cover: &[Vertex], ordering: &ClosureOrdering) -> Result<ClassCounts> {
    let cover = VertexSet::new(cover.iter().copied());
    cover.validate_for(g)?;
    if ordering.order.len() != g.n() {
        return Err(Error::invalid("ordering does not cover the graph"));
    }
    let rest: Vec<Vertex> = g.vertices().filter(|&v| !cover.contains(v)).collect();
    if !g.is_independent_set(&rest)? {
        return Err(Error::invalid("vertices outside the cover are not independent"));
    }
    let pos = ordering.positions();
    let mut by_p: BTreeMap<Vec<Vertex>, usize> = BTreeMap::new();
    let mut by_q: BTreeMap<Vec<Vertex>, usize> = BTreeMap::new();
    let mut by_n: BTreeMap<&[Vertex], usize> = BTreeMap::new();
    for &v in &rest {
        let split = split_with_positions(g, &pos, v);
        *by_p.entry(split.prior).or_default() += 1;
        *by_q.entry(split.posterior).or_default() += 1;
        *by_n.entry(g.neighbors(v)).or_default() += 1;
    }
    Ok(ClassCounts {
        independent_size: rest.len(),
        prior_classes: by_p.len(),
        posterior_classes: by_q.len(),
        neighborhood_classes: by_n.len(),
        largest_class: by_n.values().copied().max().unwrap_or(0),
    })
}

/// `3^⌈k/3⌉`, an upper bound on the number of maximal cliques of any graph
/// on `k` vertices.
pub fn moon_moser(k: u64) -> BigUint {
    BigUint::from(3u32).pow(k.div_ceil(3) as u32)
}

/// Explicit bound on the size of an independent set `I` whose complement
/// has `k` vertices, in a weakly γ-closed graph where every class of
/// vertices of `I` with equal neighborhoods has at most `t` members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSideBound {
    /// Bound on the number of distinct prior neighborhoods.
    pub prior_classes: BigUint,
    /// Bound on the number of distinct posterior neighborhoods.
    pub posterior_classes: BigUint,
    pub value: BigUint,
}

/// `prior = (γ−1)·C(k,2) + M + M·k·Σ_{i<γ} C(k,i)`,
/// `posterior = Σ_{i≤γ} C(k,i)`, `value = t·prior·posterior`, where `M` is
/// the number of maximal cliques of the graph induced on the complement
/// (Moon–Moser when `None`).
pub fn independent_side_bound(k: u64, gamma: u64, t: u64, maximal_cliques: Option<u64>) -> IndependentSideBound {
    let gamma = gamma.max(1);
    let m = maximal_cliques.map_or_else(|| moon_moser(k), BigUint::from);
    let small_subsets = binomial_prefix_sum(k, gamma - 1);
    let prior_classes =
        BigUint::from(gamma - 1) * binomial(k, 2) + &m + &m * BigUint::from(k) * small_subsets;
    let posterior_classes = binomial_prefix_sum(k, gamma);
    let value = BigUint::from(t) * &prior_classes * &posterior_classes;
    IndependentSideBound {
        prior_classes,
        posterior_classes,
        value,
    }
}
