//! Undirected simple graphs over dense vertex ids `0..n`.
//!
//! Adjacency lists are kept sorted so that neighborhood intersections run as
//! linear merges. Graphs are immutable once built; every "mutation" used by
//! the reduction rules produces a fresh graph plus an id map back to the
//! parent.

use std::collections::VecDeque;
use std::ops::Deref;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    /// Checks that every id is valid for `g`.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        self.0.iter().try_for_each(|&v| g.check_vertex(v))
    }
}

impl Deref for VertexSet {
    type Target = [Vertex];
    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        VertexSet::new(v)
    }
}

/// Undirected simple graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; self
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            if u == v {
                return Err(Error::invalid(format!("self loop on vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Ok(Graph { adj, m: m2 / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(Vertex, Vertex)> {
        self.edges().collect()
    }

    /// |N(u) ∩ N(v)|.
    pub fn common_neighbor_count(&self, u: Vertex, v: Vertex) -> usize {
        sorted_intersection_len(&self.adj[u], &self.adj[v])
    }

    /// Graph induced on `keep`, renumbered densely in ascending id order.
    /// The returned map sends each new id to its id in `self`.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
        let keep = VertexSet::new(keep.iter().copied());
        keep.validate_for(self)?;
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut m2 = 0;
        let adj: Vec<Vec<Vertex>> = keep
            .iter()
            .map(|&v| {
                let list: Vec<Vertex> = self.adj[v]
                    .iter()
                    .filter(|&&w| new_id[w] != usize::MAX)
                    .map(|&w| new_id[w])
                    .collect();
                m2 += list.len();
                list
            })
            .collect();
        Ok((Graph { adj, m: m2 / 2 }, keep.into_vec()))
    }

    /// `G - del`, with the id map of the surviving vertices.
    pub fn remove_vertices(&self, del: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
        let mut gone = vec![false; self.n()];
        for &v in del {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Copy of the graph with extra vertices appended and the given edges added.
    pub fn extended(&self, extra: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let all = self.edges().chain(edges.iter().copied());
        Graph::from_edges(self.n() + extra, all.collect::<Vec<_>>())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).expect("complement of a valid graph")
    }

    fn distinct_valid(&self, s: &[Vertex]) -> Result<()> {
        for (i, &v) in s.iter().enumerate() {
            self.check_vertex(v)?;
            if s[..i].contains(&v) {
                return Err(Error::invalid(format!("vertex {v} repeated in set")));
            }
        }
        Ok(())
    }

    /// True iff no two vertices of `s` are adjacent.
    pub fn is_independent_set(&self, s: &[Vertex]) -> Result<bool> {
        self.distinct_valid(s)?;
        Ok(s
            .iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v))))
    }

    /// True iff every two vertices of `s` are adjacent.
    pub fn is_clique(&self, s: &[Vertex]) -> Result<bool> {
        self.distinct_valid(s)?;
        Ok(s
            .iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v))))
    }

    /// True iff every edge has an endpoint in `s`.
    pub fn is_vertex_cover(&self, s: &[Vertex]) -> Result<bool> {
        let mut inside = vec![false; self.n()];
        for &v in s {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        Ok(self.edges().all(|(u, v)| inside[u] || inside[v]))
    }

    /// Connected components restricted to vertices with `alive[v]`, each
    /// sorted, listed by smallest member.
    pub fn components_within(&self, alive: &[bool]) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if !alive[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if alive[w] && !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_within(&vec![true; self.n()])
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `G[s]` is connected. The empty set and singletons count as
    /// connected.
    pub fn is_connected_set(&self, s: &[Vertex]) -> Result<bool> {
        let mut alive = vec![false; self.n()];
        for &v in s {
            self.check_vertex(v)?;
            alive[v] = true;
        }
        Ok(self.components_within(&alive).len() <= 1)
    }

    /// Two-coloring if the graph is bipartite (smallest id of each
    /// component goes to the first side).
    pub fn bipartition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let mut side = vec![u8::MAX; self.n()];
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        let a = self.vertices().filter(|&v| side[v] == 0).collect();
        let b = self.vertices().filter(|&v| side[v] == 1).collect();
        Some((a, b))
    }

    /// Adjacency as bitmasks; `None` above 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &w| m | (1u64 << w)))
                .collect(),
        )
    }

    /// Searches for disjoint `U`, `W` with `|U| = r`, `|W| = s` and every
    /// `u ∈ U` adjacent to every `w ∈ W` (a `K_{r,s}` subgraph, not
    /// necessarily induced). Exhaustive over `r`-subsets with
    /// common-neighborhood pruning.
    pub fn contains_biclique(&self, r: usize, s: usize) -> Result<Option<(VertexSet, VertexSet)>> {
        if r == 0 || s == 0 {
            return Err(Error::invalid("biclique sides must be at least 1"));
        }
        if r + s > self.n() {
            return Ok(None);
        }
        let mut chosen = Vec::with_capacity(r);
        for first in self.vertices() {
            if self.degree(first) < s {
                continue;
            }
            chosen.push(first);
            let common = self.adj[first].clone();
            if let Some(w) = self.extend_biclique(&mut chosen, common, first, r, s) {
                return Ok(Some((VertexSet::new(chosen), VertexSet::new(w))));
            }
            chosen.pop();
        }
        Ok(None)
    }

    fn extend_biclique(
        &self,
        chosen: &mut Vec<Vertex>,
        common: Vec<Vertex>,
        last: Vertex,
        r: usize,
        s: usize,
    ) -> Option<Vec<Vertex>> {
        if common.len() < s {
            return None;
        }
        if chosen.len() == r {
            return Some(common[..s].to_vec());
        }
        for next in last + 1..self.n() {
            if self.degree(next) < s {
                continue;
            }
            let narrowed = sorted_intersection(&common, &self.adj[next]);
            if narrowed.len() < s {
                continue;
            }
            chosen.push(next);
            if let Some(w) = self.extend_biclique(chosen, narrowed, next, r, s) {
                return Some(w);
            }
            chosen.pop();
        }
        None
    }
}

pub(crate) fn sorted_intersection_len(a: &[Vertex], b: &[Vertex]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

pub(crate) fn sorted_intersection(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Small named graphs used across tests, examples and generators.
pub mod named {
    use super::{Graph, Vertex};

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("valid")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<(Vertex, Vertex)> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, edges).expect("valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<(Vertex, Vertex)> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, edges).expect("valid")
    }

    /// `K_{1,leaves}` with the center at id 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<(Vertex, Vertex)> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, edges).expect("valid")
    }

    /// `K_{a,b}` with the `a`-side at ids `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges.collect::<Vec<_>>()).expect("valid")
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, edges).expect("valid")
    }
}
