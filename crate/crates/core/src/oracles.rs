//! Exhaustive exact solvers. They are the ground truth for every reduction
//! test and are deliberately simple.

use crate::combinatorics::flow::FlowNetwork;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::instance::{
    AnnotatedConVcInstance, CapVcInstance, CocInstance, ConVcInstance, DsInstance, ImInstance, Instance,
    IsInstance, ProblemKind, SetCoverInstance,
};

pub const DEFAULT_VERTEX_CAP: usize = 14;
pub const DEFAULT_EDGE_CAP: usize = 60;

/// Largest instance an oracle accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub vertices: usize,
    pub edges: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            vertices: DEFAULT_VERTEX_CAP,
            edges: DEFAULT_EDGE_CAP,
        }
    }
}

impl OracleLimits {
    pub fn with_vertices(vertices: usize) -> Self {
        OracleLimits {
            vertices,
            edges: usize::MAX,
        }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.n() > self.vertices.min(64) {
            return Err(Error::OracleCapExceeded {
                size: g.n(),
                cap: self.vertices.min(64),
            });
        }
        if g.m() > self.edges {
            return Err(Error::OracleEdgeCapExceeded {
                size: g.m(),
                cap: self.edges,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vertices(Vec<Vertex>),
    Edges(Vec<(Vertex, Vertex)>),
    /// A capacitated cover; `charged_to[i]` is the endpoint that pays for the
    /// `i`-th edge of `edge_list()`.
    Assignment {
        cover: Vec<Vertex>,
        charged_to: Vec<Vertex>,
    },
    /// Indices into a set family.
    Subfamily(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub answer: bool,
    pub witness: Option<Witness>,
    /// Number of candidate solutions examined.
    pub explored: u64,
}

impl OracleResult {
    fn no(explored: u64) -> Self {
        OracleResult {
            answer: false,
            witness: None,
            explored,
        }
    }

    fn yes(witness: Witness, explored: u64) -> Self {
        OracleResult {
            answer: true,
            witness: Some(witness),
            explored,
        }
    }

    pub fn vertices(&self) -> Option<&[Vertex]> {
        match &self.witness {
            Some(Witness::Vertices(v)) => Some(v),
            Some(Witness::Assignment { cover, .. }) => Some(cover),
            _ => None,
        }
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as Vertex;
            m &= m - 1;
            Some(v)
        }
    })
}

fn mask_of(vs: &[Vertex]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1u64 << v)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_connected(adj: &[u64], s: u64) -> bool {
    if s == 0 {
        return true;
    }
    let mut seen = 1u64 << s.trailing_zeros();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let nb = adj[v] & s & !seen;
        seen |= nb;
        frontier |= nb;
    }
    seen == s
}

fn max_component(adj: &[u64], s: u64) -> usize {
    let mut rest = s;
    let mut best = 0;
    while rest != 0 {
        let mut comp = 1u64 << rest.trailing_zeros();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = adj[v] & rest & !comp;
            comp |= nb;
            frontier |= nb;
        }
        best = best.max(comp.count_ones() as usize);
        rest &= !comp;
    }
    best
}

fn edge_masks(g: &Graph) -> Vec<u64> {
    g.edges().map(|(u, v)| 1u64 << u | 1u64 << v).collect()
}

fn is_cover_mask(edges: &[u64], s: u64) -> bool {
    edges.iter().all(|&e| e & s != 0)
}

/// Smallest-first scan over all vertex subsets of size at most `k`
/// (numeric mask order within the scan), returning the first accepted one.
fn first_subset<F: FnMut(u64) -> bool>(n: usize, k: usize, mut accept: F) -> (Option<u64>, u64) {
    let mut explored = 0;
    for s in 0..=full_mask(n) {
        if s.count_ones() as usize > k {
            continue;
        }
        explored += 1;
        if accept(s) {
            return (Some(s), explored);
        }
        if n == 64 && s == u64::MAX {
            break;
        }
    }
    (None, explored)
}

// ---------------------------------------------------------------- validators

pub fn is_connected_vertex_cover(g: &Graph, s: &[Vertex]) -> bool {
    g.is_vertex_cover(s).unwrap_or(false) && g.is_connected_set(s).unwrap_or(false)
}

pub fn is_dominating_set(g: &Graph, s: &[Vertex]) -> bool {
    let mut dom = vec![false; g.n()];
    for &v in s {
        if v >= g.n() {
            return false;
        }
        dom[v] = true;
        for &w in g.neighbors(v) {
            dom[w] = true;
        }
    }
    dom.into_iter().all(|d| d)
}

/// `s` is a connected deletion set leaving components of at most `ell`
/// vertices.
pub fn is_coc_solution(g: &Graph, ell: usize, s: &[Vertex]) -> bool {
    let mut alive = vec![true; g.n()];
    for &v in s {
        if v >= g.n() {
            return false;
        }
        alive[v] = false;
    }
    g.is_connected_set(s).unwrap_or(false) && g.components_within(&alive).iter().all(|c| c.len() <= ell)
}

/// Checks a capacitated cover with an explicit charging of every edge.
pub fn is_capvc_solution(inst: &CapVcInstance, cover: &[Vertex], charged_to: &[Vertex]) -> bool {
    let g = &inst.graph;
    let edges = g.edge_list();
    if charged_to.len() != edges.len() || cover.len() > inst.k {
        return false;
    }
    let mut in_cover = vec![false; g.n()];
    for &v in cover {
        if v >= g.n() || in_cover[v] || inst.cap[v] < 0 {
            return false;
        }
        in_cover[v] = true;
    }
    let mut load = vec![0i64; g.n()];
    for (&(u, v), &c) in edges.iter().zip(charged_to) {
        if (c != u && c != v) || !in_cover[c] {
            return false;
        }
        load[c] += 1;
    }
    (0..g.n()).all(|v| load[v] <= inst.cap[v].max(0))
}

// ------------------------------------------------------------------- solvers

/// Capacity feasibility of a fixed cover, by max flow from edges to cover
/// vertices. Returns the charging when feasible.
pub fn capvc_charging(inst: &CapVcInstance, cover: &[Vertex]) -> Option<Vec<Vertex>> {
    let g = &inst.graph;
    let edges = g.edge_list();
    let m = edges.len();
    let n = g.n();
    let source = m + n;
    let sink = source + 1;
    let mut net = FlowNetwork::new(m + n + 2);
    let mut in_cover = vec![false; n];
    for &v in cover {
        in_cover[v] = true;
    }
    let mut choice_arcs = Vec::with_capacity(m);
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add_arc(source, i, 1);
        let au = in_cover[u].then(|| net.add_arc(i, m + u, 1));
        let av = in_cover[v].then(|| net.add_arc(i, m + v, 1));
        choice_arcs.push((au, av));
    }
    for &v in cover {
        net.add_arc(m + v, sink, inst.cap[v].max(0));
    }
    if net.max_flow(source, sink) != m as i64 {
        return None;
    }
    Some(
        edges
            .iter()
            .zip(&choice_arcs)
            .map(|(&(u, v), &(au, _))| if au.is_some_and(|a| net.flow(a) == 1) { u } else { v })
            .collect(),
    )
}

/// Capacitated vertex cover. Vertices with capacity below one never help,
/// so their neighbors are forced; the remaining choices are enumerated at
/// the largest useful size, since feasibility is monotone under adding
/// vertices.
pub fn solve_capvc_exact(inst: &CapVcInstance, limits: OracleLimits) -> Result<OracleResult> {
    let g = &inst.graph;
    limits.check(g)?;
    if inst.cap.len() != g.n() {
        return Err(Error::invalid("one capacity per vertex required"));
    }
    let usable: Vec<bool> = inst.cap.iter().map(|&c| c >= 1).collect();
    let mut forced = vec![false; g.n()];
    for (u, v) in g.edges() {
        match (usable[u], usable[v]) {
            (false, false) => return Ok(OracleResult::no(0)),
            (false, true) => forced[v] = true,
            (true, false) => forced[u] = true,
            _ => {}
        }
    }
    let forced_list: Vec<Vertex> = g.vertices().filter(|&v| forced[v]).collect();
    if forced_list.len() > inst.k {
        return Ok(OracleResult::no(0));
    }
    let cand: Vec<Vertex> = g.vertices().filter(|&v| usable[v] && !forced[v]).collect();
    let need = (inst.k - forced_list.len()).min(cand.len());
    let adj = g.adjacency_masks().expect("within cap");
    let total_edges = g.m() as i64;

    struct Search<'a> {
        inst: &'a CapVcInstance,
        cand: &'a [Vertex],
        adj: &'a [u64],
        forced: &'a [Vertex],
        total_edges: i64,
        explored: u64,
        chosen: Vec<Vertex>,
    }
    impl Search<'_> {
        fn run(&mut self, i: usize, need: usize, excluded: u64) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
            if need == 0 || i == self.cand.len() {
                if need > 0 {
                    return None;
                }
                // all remaining candidates are excluded
                let rest = self.cand[i..].iter().fold(excluded, |m, &v| m | 1u64 << v);
                if self.cand[i..].iter().any(|&v| self.adj[v] & rest != 0) {
                    return None;
                }
                let mut cover: Vec<Vertex> = self.forced.iter().chain(&self.chosen).copied().collect();
                cover.sort_unstable();
                let capacity: i64 = cover.iter().map(|&v| self.inst.cap[v].max(0)).sum();
                if capacity < self.total_edges {
                    return None;
                }
                self.explored += 1;
                return capvc_charging(self.inst, &cover).map(|c| (cover, c));
            }
            if self.cand.len() - i < need {
                return None;
            }
            let v = self.cand[i];
            self.chosen.push(v);
            if let Some(found) = self.run(i + 1, need - 1, excluded) {
                return Some(found);
            }
            self.chosen.pop();
            if self.adj[v] & excluded == 0 {
                return self.run(i + 1, need, excluded | 1u64 << v);
            }
            None
        }
    }
    let mut search = Search {
        inst,
        cand: &cand,
        adj: &adj,
        forced: &forced_list,
        total_edges,
        explored: 0,
        chosen: Vec::new(),
    };
    Ok(match search.run(0, need, 0) {
        Some((cover, charged_to)) => OracleResult::yes(Witness::Assignment { cover, charged_to }, search.explored),
        None => OracleResult::no(search.explored),
    })
}

fn solve_convc_masks(g: &Graph, k: usize, red: u64) -> (Option<u64>, u64) {
    let adj = g.adjacency_masks().expect("within cap");
    let edges = edge_masks(g);
    first_subset(g.n(), k, |s| s & red == red && is_cover_mask(&edges, s) && mask_connected(&adj, s))
}

/// Connected vertex cover of size at most `k`. The empty set counts as
/// connected.
pub fn solve_convc_exact(inst: &ConVcInstance, limits: OracleLimits) -> Result<OracleResult> {
    limits.check(&inst.graph)?;
    let (found, explored) = solve_convc_masks(&inst.graph, inst.k, 0);
    Ok(match found {
        Some(s) => OracleResult::yes(Witness::Vertices(bits(s).collect()), explored),
        None => OracleResult::no(explored),
    })
}

/// Connected vertex cover of size at most `k` containing every red vertex.
pub fn solve_annotated_convc_exact(inst: &AnnotatedConVcInstance, limits: OracleLimits) -> Result<OracleResult> {
    limits.check(&inst.graph)?;
    let red = mask_of(&inst.red_vertices());
    let (found, explored) = solve_convc_masks(&inst.graph, inst.k, red);
    Ok(match found {
        Some(s) => OracleResult::yes(Witness::Vertices(bits(s).collect()), explored),
        None => OracleResult::no(explored),
    })
}

/// Connected deletion set of size at most `k` after which every component
/// has at most `ell` vertices.
pub fn solve_coc_exact(inst: &CocInstance, limits: OracleLimits) -> Result<OracleResult> {
    let g = &inst.graph;
    limits.check(g)?;
    let adj = g.adjacency_masks().expect("within cap");
    let full = full_mask(g.n());
    let (found, explored) = first_subset(g.n(), inst.k, |s| {
        mask_connected(&adj, s) && max_component(&adj, full & !s) <= inst.ell
    });
    Ok(match found {
        Some(s) => OracleResult::yes(Witness::Vertices(bits(s).collect()), explored),
        None => OracleResult::no(explored),
    })
}

struct MaxIndependent<'a> {
    adj: &'a [u64],
    target: usize,
    best: Vec<Vertex>,
    cur: Vec<Vertex>,
    explored: u64,
}

impl MaxIndependent<'_> {
    fn run(&mut self, p: u64) {
        self.explored += 1;
        if self.best.len() >= self.target || self.cur.len() + p.count_ones() as usize <= self.best.len() {
            return;
        }
        if p == 0 {
            self.best = self.cur.clone();
            return;
        }
        let deg = |v: Vertex| (self.adj[v] & p).count_ones();
        let low = bits(p).min_by_key(|&v| (deg(v), v)).expect("nonempty");
        if deg(low) <= 1 {
            self.cur.push(low);
            self.run(p & !(self.adj[low] | 1u64 << low));
            self.cur.pop();
            return;
        }
        let high = bits(p).max_by_key(|&v| (deg(v), std::cmp::Reverse(v))).expect("nonempty");
        self.cur.push(high);
        self.run(p & !(self.adj[high] | 1u64 << high));
        self.cur.pop();
        self.run(p & !(1u64 << high));
    }
}

/// Independent set of size at most `target`-capped maximum, by branch and
/// bound; stops once `target` is reached.
fn independent_set_up_to(g: &Graph, target: usize) -> (Vec<Vertex>, u64) {
    let adj = g.adjacency_masks().expect("at most 64 vertices");
    let mut s = MaxIndependent {
        adj: &adj,
        target,
        best: Vec::new(),
        cur: Vec::new(),
        explored: 0,
    };
    s.run(full_mask(g.n()));
    let mut best = s.best;
    best.sort_unstable();
    best.truncate(target);
    (best, s.explored)
}

/// Independence number by branch and bound (at most 64 vertices).
pub fn independence_number(g: &Graph) -> Result<usize> {
    if g.n() > 64 {
        return Err(Error::OracleCapExceeded { size: g.n(), cap: 64 });
    }
    Ok(independent_set_up_to(g, usize::MAX).0.len())
}

/// Minimum vertex cover size, as the complement of a maximum independent set.
pub fn min_vertex_cover(g: &Graph) -> Result<Vec<Vertex>> {
    if g.n() > 64 {
        return Err(Error::OracleCapExceeded { size: g.n(), cap: 64 });
    }
    let (is, _) = independent_set_up_to(g, usize::MAX);
    Ok(g.vertices().filter(|v| is.binary_search(v).is_err()).collect())
}

pub fn solve_is_exact(inst: &IsInstance, limits: OracleLimits) -> Result<OracleResult> {
    limits.check(&inst.graph)?;
    let (best, explored) = independent_set_up_to(&inst.graph, inst.k);
    Ok(if best.len() >= inst.k {
        OracleResult::yes(Witness::Vertices(best), explored)
    } else {
        OracleResult::no(explored)
    })
}

/// Induced matching with `k` edges, by backtracking over edges in order.
pub fn solve_im_exact(inst: &ImInstance, limits: OracleLimits) -> Result<OracleResult> {
    let g = &inst.graph;
    limits.check(g)?;
    let adj = g.adjacency_masks().expect("within cap");
    let closed: Vec<u64> = (0..g.n()).map(|v| adj[v] | 1u64 << v).collect();
    let edges = g.edge_list();
    fn rec(
        edges: &[(Vertex, Vertex)],
        closed: &[u64],
        i: usize,
        blocked: u64,
        need: usize,
        chosen: &mut Vec<(Vertex, Vertex)>,
        explored: &mut u64,
    ) -> bool {
        *explored += 1;
        if need == 0 {
            return true;
        }
        for j in i..edges.len() {
            if edges.len() - j < need {
                return false;
            }
            let (u, v) = edges[j];
            if blocked & (1u64 << u | 1u64 << v) != 0 {
                continue;
            }
            chosen.push((u, v));
            if rec(edges, closed, j + 1, blocked | closed[u] | closed[v], need - 1, chosen, explored) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    let mut explored = 0;
    Ok(if rec(&edges, &closed, 0, 0, inst.k, &mut chosen, &mut explored) {
        OracleResult::yes(Witness::Edges(chosen), explored)
    } else {
        OracleResult::no(explored)
    })
}

/// Dominating set of size at most `k` using only vertices of `allowed`.
/// Branches on the dominator of the smallest undominated vertex.
pub fn solve_ds_within(g: &Graph, k: usize, allowed: &[Vertex], limits: OracleLimits) -> Result<OracleResult> {
    limits.check(g)?;
    let adj = g.adjacency_masks().expect("within cap");
    let closed: Vec<u64> = (0..g.n()).map(|v| adj[v] | 1u64 << v).collect();
    let allowed = mask_of(allowed);
    let full = full_mask(g.n());
    fn rec(closed: &[u64], allowed: u64, full: u64, dom: u64, k: usize, chosen: &mut Vec<Vertex>, explored: &mut u64) -> bool {
        *explored += 1;
        if dom == full {
            return true;
        }
        if k == 0 {
            return false;
        }
        let u = (!dom & full).trailing_zeros() as usize;
        for w in bits(closed[u] & allowed) {
            chosen.push(w);
            if rec(closed, allowed, full, dom | closed[w], k - 1, chosen, explored) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    let mut explored = 0;
    Ok(if rec(&closed, allowed, full, 0, k, &mut chosen, &mut explored) {
        chosen.sort_unstable();
        OracleResult::yes(Witness::Vertices(chosen), explored)
    } else {
        OracleResult::no(explored)
    })
}

pub fn solve_ds_exact(inst: &DsInstance, limits: OracleLimits) -> Result<OracleResult> {
    let all: Vec<Vertex> = inst.graph.vertices().collect();
    solve_ds_within(&inst.graph, inst.k, &all, limits)
}

/// Multicolored independent set: one vertex from each of the `k` parts,
/// pairwise nonadjacent. Parts must be cliques.
pub fn solve_multicolored_is_exact(g: &Graph, parts: &[usize], k: usize, limits: OracleLimits) -> Result<OracleResult> {
    limits.check(g)?;
    if parts.len() != g.n() {
        return Err(Error::invalid("one part index per vertex required"));
    }
    let mut members: Vec<Vec<Vertex>> = vec![Vec::new(); k];
    for v in g.vertices() {
        let p = parts[v];
        if p >= k {
            return Err(Error::invalid(format!("part index {p} out of range for {k} parts")));
        }
        members[p].push(v);
    }
    for (p, m) in members.iter().enumerate() {
        if !g.is_clique(m)? {
            return Err(Error::invalid(format!("part {p} is not a clique")));
        }
    }
    fn rec(g: &Graph, members: &[Vec<Vertex>], chosen: &mut Vec<Vertex>, explored: &mut u64) -> bool {
        let p = chosen.len();
        if p == members.len() {
            return true;
        }
        for &v in &members[p] {
            *explored += 1;
            if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
                if rec(g, members, chosen, explored) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    let mut explored = 0;
    Ok(if rec(g, &members, &mut chosen, &mut explored) {
        OracleResult::yes(Witness::Vertices(chosen), explored)
    } else {
        OracleResult::no(explored)
    })
}

/// Exact set cover: `k` pairwise disjoint sets, which then cover the
/// universe since it has exactly `lambda * k` elements.
pub fn solve_exact_set_cover(inst: &SetCoverInstance) -> Result<OracleResult> {
    let checked = SetCoverInstance::new(inst.universe, inst.family.clone(), inst.lambda, inst.k)?;
    let fam = &checked.family;
    fn rec(fam: &[Vec<usize>], start: usize, used: &mut Vec<bool>, need: usize, chosen: &mut Vec<usize>, explored: &mut u64) -> bool {
        *explored += 1;
        if need == 0 {
            return used.iter().all(|&u| u);
        }
        for i in start..fam.len() {
            if fam.len() - i < need {
                return false;
            }
            if fam[i].iter().any(|&x| used[x]) {
                continue;
            }
            fam[i].iter().for_each(|&x| used[x] = true);
            chosen.push(i);
            if rec(fam, i + 1, used, need - 1, chosen, explored) {
                return true;
            }
            chosen.pop();
            fam[i].iter().for_each(|&x| used[x] = false);
        }
        false
    }
    let mut used = vec![false; checked.universe];
    let mut chosen = Vec::new();
    let mut explored = 0;
    Ok(if rec(fam, 0, &mut used, checked.k, &mut chosen, &mut explored) {
        OracleResult::yes(Witness::Subfamily(chosen), explored)
    } else {
        OracleResult::no(explored)
    })
}

/// Weak closure by dynamic programming over vertex subsets: the best
/// achievable maximum step closure of any ordering of each subset.
pub fn weak_closure_exhaustive(g: &Graph, max_vertices: usize) -> Result<usize> {
    let n = g.n();
    let cap = max_vertices.min(24);
    if n > cap {
        return Err(Error::OracleCapExceeded { size: n, cap });
    }
    let adj: Vec<u32> = g
        .adjacency_masks()
        .expect("within cap")
        .into_iter()
        .map(|m| m as u32)
        .collect();
    let mut best = vec![0u8; 1 << n];
    for s in 1u32..(1 << n) {
        let mut value = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut cl = 0;
            let mut others = s & !adj[v] & !(1 << v);
            while others != 0 {
                let w = others.trailing_zeros() as usize;
                others &= others - 1;
                cl = cl.max((adj[v] & adj[w] & s).count_ones() as u8);
            }
            value = value.min(cl.max(best[(s & !(1 << v)) as usize]));
        }
        best[s as usize] = value;
    }
    Ok(1 + best[(1usize << n) - 1] as usize)
}

/// Exact answer for a generic instance, dispatched on its kind. Plain
/// graphs have no question attached.
pub fn solve_instance(inst: &Instance, limits: OracleLimits) -> Result<OracleResult> {
    match inst.kind {
        ProblemKind::CapVc => solve_capvc_exact(&CapVcInstance::from_instance(inst)?, limits),
        ProblemKind::ConVc => solve_convc_exact(&ConVcInstance::from_instance(inst)?, limits),
        ProblemKind::AConVc => solve_annotated_convc_exact(&AnnotatedConVcInstance::from_instance(inst)?, limits),
        ProblemKind::Coc => solve_coc_exact(&CocInstance::from_instance(inst)?, limits),
        ProblemKind::Im => solve_im_exact(&ImInstance::from_instance(inst)?, limits),
        ProblemKind::Ds => solve_ds_exact(&DsInstance::from_instance(inst)?, limits),
        ProblemKind::Is => solve_is_exact(&IsInstance::from_instance(inst)?, limits),
        ProblemKind::Mcis => {
            inst.validate()?;
            let parts = inst.parts.as_ref().expect("validated");
            solve_multicolored_is_exact(&inst.graph, parts, inst.k, limits)
        }
        ProblemKind::Graph => Err(Error::invalid("a plain graph has no problem to solve")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn lim() -> OracleLimits {
        OracleLimits::default()
    }

    #[test]
    fn capvc_micro() {
        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        let r = solve_capvc_exact(&CapVcInstance::new(edge, vec![1, 1], 1).unwrap(), lim()).unwrap();
        assert!(r.answer);
        let inst = CapVcInstance::new(star(3), vec![2, 1, 1, 1], 1).unwrap();
        assert!(!solve_capvc_exact(&inst, lim()).unwrap().answer);
        let inst = CapVcInstance::new(star(3), vec![3, 0, 0, 0], 1).unwrap();
        let r = solve_capvc_exact(&inst, lim()).unwrap();
        assert!(r.answer);
        if let Some(Witness::Assignment { cover, charged_to }) = &r.witness {
            assert!(is_capvc_solution(&inst, cover, charged_to));
        } else {
            panic!("missing witness");
        }
        // negative capacity cannot be used at all
        let inst = CapVcInstance::new(star(1), vec![-1, 0], 2).unwrap();
        assert!(!solve_capvc_exact(&inst, lim()).unwrap().answer);
    }

    #[test]
    fn convc_micro() {
        let c4 = |k| ConVcInstance::new(cycle(4), k);
        assert!(!solve_convc_exact(&c4(2), lim()).unwrap().answer);
        let r = solve_convc_exact(&c4(3), lim()).unwrap();
        assert!(r.answer);
        assert!(is_connected_vertex_cover(&cycle(4), r.vertices().unwrap()));
        assert!(solve_convc_exact(&ConVcInstance::new(Graph::empty(3), 0), lim()).unwrap().answer);
        assert!(solve_convc_exact(&ConVcInstance::new(star(5), 1), lim()).unwrap().answer);
        assert!(!solve_convc_exact(&ConVcInstance::new(path(5), 2), lim()).unwrap().answer);
        assert!(solve_convc_exact(&ConVcInstance::new(path(5), 3), lim()).unwrap().answer);
    }

    #[test]
    fn annotated_convc_micro() {
        let mut inst = AnnotatedConVcInstance::from_plain(&ConVcInstance::new(star(3), 1));
        assert!(solve_annotated_convc_exact(&inst, lim()).unwrap().answer);
        inst.red[1] = true;
        assert!(!solve_annotated_convc_exact(&inst, lim()).unwrap().answer);
        inst.k = 2;
        assert!(solve_annotated_convc_exact(&inst, lim()).unwrap().answer);
    }

    #[test]
    fn im_micro() {
        assert!(solve_im_exact(&ImInstance::new(cycle(4), 1), lim()).unwrap().answer);
        assert!(!solve_im_exact(&ImInstance::new(cycle(4), 2), lim()).unwrap().answer);
        let r = solve_im_exact(&ImInstance::new(path(5), 2), lim()).unwrap();
        assert_eq!(r.witness, Some(Witness::Edges(vec![(0, 1), (3, 4)])));
        assert!(solve_im_exact(&ImInstance::new(Graph::empty(2), 0), lim()).unwrap().answer);
        assert!(!solve_im_exact(&ImInstance::new(Graph::empty(2), 1), lim()).unwrap().answer);
        assert!(!solve_im_exact(&ImInstance::new(complete(6), 2), lim()).unwrap().answer);
    }

    #[test]
    fn ds_micro() {
        for n in 1..7 {
            assert!(solve_ds_exact(&DsInstance::new(complete(n), 1), lim()).unwrap().answer);
        }
        assert!(!solve_ds_exact(&DsInstance::new(path(4), 1), lim()).unwrap().answer);
        assert!(solve_ds_exact(&DsInstance::new(path(6), 2), lim()).unwrap().answer);
        assert!(!solve_ds_exact(&DsInstance::new(cycle(6), 1), lim()).unwrap().answer);
        let r = solve_ds_exact(&DsInstance::new(cycle(6), 2), lim()).unwrap();
        assert!(is_dominating_set(&cycle(6), r.vertices().unwrap()));
        assert!(solve_ds_exact(&DsInstance::new(Graph::empty(0), 0), lim()).unwrap().answer);
    }

    #[test]
    fn is_micro() {
        assert!(solve_is_exact(&IsInstance::new(cycle(5), 2), lim()).unwrap().answer);
        assert!(!solve_is_exact(&IsInstance::new(cycle(5), 3), lim()).unwrap().answer);
        assert_eq!(independence_number(&petersen()).unwrap(), 4);
        assert_eq!(min_vertex_cover(&star(4)).unwrap(), vec![0]);
    }

    #[test]
    fn coc_micro() {
        // ell = 1 is connected vertex cover
        let inst = CocInstance::new(path(5), 1, 3).unwrap();
        assert!(solve_coc_exact(&inst, lim()).unwrap().answer);
        let inst = CocInstance::new(path(5), 2, 1).unwrap();
        assert!(solve_coc_exact(&inst, lim()).unwrap().answer);
        let inst = CocInstance::new(path(7), 2, 1).unwrap();
        assert!(!solve_coc_exact(&inst, lim()).unwrap().answer);
        let inst = CocInstance::new(Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap(), 2, 0).unwrap();
        assert!(solve_coc_exact(&inst, lim()).unwrap().answer);
    }

    #[test]
    fn multicolored_micro() {
        let g = Graph::empty(3);
        assert!(solve_multicolored_is_exact(&g, &[0, 1, 2], 3, lim()).unwrap().answer);
        let g = complete_bipartite(2, 2);
        // parts {0,1} and {2,3} are not cliques
        assert!(solve_multicolored_is_exact(&g, &[0, 0, 1, 1], 2, lim()).is_err());
        let g = Graph::from_edges(4, [(0, 1), (2, 3), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!solve_multicolored_is_exact(&g, &[0, 0, 1, 1], 2, lim()).unwrap().answer);
    }

    #[test]
    fn set_cover_micro() {
        let yes = SetCoverInstance::new(6, vec![vec![0, 1, 2], vec![1, 2, 3], vec![3, 4, 5]], 3, 2).unwrap();
        assert_eq!(solve_exact_set_cover(&yes).unwrap().witness, Some(Witness::Subfamily(vec![0, 2])));
        let no = SetCoverInstance::new(6, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 4, 5]], 3, 2).unwrap();
        assert!(!solve_exact_set_cover(&no).unwrap().answer);
        assert!(SetCoverInstance::new(5, vec![], 3, 2).is_err());
    }

    #[test]
    fn caps_are_enforced() {
        let big = ConVcInstance::new(path(20), 3);
        assert!(matches!(
            solve_convc_exact(&big, lim()),
            Err(Error::OracleCapExceeded { size: 20, cap: 14 })
        ));
    }

    #[test]
    fn exhaustive_weak_closure_examples() {
        assert_eq!(weak_closure_exhaustive(&cycle(4), 8).unwrap(), 3);
        assert_eq!(weak_closure_exhaustive(&complete(5), 8).unwrap(), 1);
        assert_eq!(weak_closure_exhaustive(&star(5), 8).unwrap(), 1);
        assert_eq!(weak_closure_exhaustive(&complete_bipartite(2, 5), 8).unwrap(), 3);
    }
}
