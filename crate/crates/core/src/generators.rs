//! Seeded instance generators: random families and the two lower-bound
//! constructions (capacitated vertex cover from exact set cover, and the
//! independent set composition).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closure::{closure_number, weak_closure};
use crate::error::{Error, Result};
use crate::graph::{named, Graph, Vertex};
use crate::instance::{CapVcInstance, Instance, ProblemKind, SetCoverInstance};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("ids in range")
}

/// Split graph: a clique of random size in `1..=n`, every other vertex
/// joined to each clique vertex with probability 1/2.
pub fn gen_random_split(n: usize, seed: u64) -> Graph {
    if n == 0 {
        return Graph::empty(0);
    }
    let mut r = rng(seed);
    let c = r.gen_range(1..=n);
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
    }
    for v in c..n {
        for u in 0..c {
            if r.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    shuffled(&Graph::from_edges(n, edges).expect("ids in range"), &mut r)
}

/// Bipartite graph with sides `0..a` and `a..n` (`a` random), each cross
/// pair joined with probability 0.4.
pub fn gen_random_bipartite(n: usize, seed: u64) -> (Graph, usize) {
    let mut r = rng(seed);
    let a = if n == 0 { 0 } else { r.gen_range(0..=n) };
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..n {
            if r.gen_bool(0.4) {
                edges.push((u, v));
            }
        }
    }
    (Graph::from_edges(n, edges).expect("ids in range"), a)
}

pub fn gen_k_ab(a: usize, b: usize) -> Graph {
    named::complete_bipartite(a, b)
}

fn shuffled(g: &Graph, r: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<Vertex> = g.vertices().collect();
    perm.shuffle(r);
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).expect("permutation")
}

/// Random graph with weak closure at most `target_gamma`, with its measured
/// weak closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeaklyClosedSample {
    pub graph: Graph,
    pub gamma: usize,
}

const MAX_REJECTIONS: usize = 64;

/// Vertices are inserted at the front of a closure ordering: each new
/// vertex draws random neighbors among the already placed ones, then drops
/// neighbors until every non-neighbor shares fewer than `target_gamma` of
/// them. The result is relabeled at random and its weak closure measured;
/// samples above the target are rejected.
pub fn gen_random_weakly_closed(n: usize, target_gamma: usize, seed: u64) -> Result<WeaklyClosedSample> {
    if target_gamma == 0 {
        return Err(Error::Generator("weak closure is at least 1".into()));
    }
    let mut r = rng(seed);
    for _ in 0..MAX_REJECTIONS {
        let p: f64 = r.gen_range(0.1..0.9);
        let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
        for v in (0..n).rev() {
            let placed: Vec<Vertex> = (v + 1..n).collect();
            let mut nbrs: Vec<Vertex> = placed.iter().copied().filter(|_| r.gen_bool(p)).collect();
            loop {
                let bad = placed.iter().copied().find(|&w| {
                    !nbrs.contains(&w) && nbrs.iter().filter(|&&x| adj[w][x]).count() >= target_gamma
                });
                let Some(w) = bad else { break };
                let shared: Vec<Vertex> = nbrs.iter().copied().filter(|&x| adj[w][x]).collect();
                if r.gen_bool(0.3) {
                    nbrs.push(w);
                } else {
                    let x = *shared.choose(&mut r).expect("nonempty");
                    nbrs.retain(|&y| y != x);
                }
            }
            for &w in &nbrs {
                adj[v][w] = true;
                adj[w][v] = true;
            }
        }
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]);
        let g = shuffled(&Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("ids"), &mut r);
        let gamma = weak_closure(&g);
        if gamma <= target_gamma {
            return Ok(WeaklyClosedSample { graph: g, gamma });
        }
    }
    Err(Error::Generator(format!(
        "no graph with weak closure at most {target_gamma} after {MAX_REJECTIONS} attempts"
    )))
}

/// Random graph with many false twins: a random base graph on
/// `base` vertices whose vertices are blown up into independent classes,
/// `n` vertices in total.
pub fn gen_twin_rich(n: usize, base: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let base = base.clamp(1, n.max(1));
    let h = gen_random_graph(base, p, r.gen());
    let class: Vec<usize> = (0..n).map(|v| if v < base { v } else { r.gen_range(0..base) }).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if h.has_edge(class[u], class[v]) {
                edges.push((u, v));
            }
        }
    }
    shuffled(&Graph::from_edges(n, edges).expect("ids"), &mut r)
}

/// Uniformly random labeled tree (random attachment).
pub fn gen_random_tree(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (r.gen_range(0..v), v)).collect();
    shuffled(&Graph::from_edges(n, edges).expect("ids"), &mut r)
}

/// Named generator families with their size parameters, for
/// reproducible corpora.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorSpec {
    Gnp { n: usize, p: f64 },
    Split { n: usize },
    Bipartite { n: usize },
    WeaklyClosed { n: usize, gamma: usize },
    TwinRich { n: usize, base: usize, p: f64 },
    Tree { n: usize },
    Kab { a: usize, b: usize },
}

impl GeneratorSpec {
    pub fn generate(&self, seed: u64) -> Result<Graph> {
        Ok(match *self {
            GeneratorSpec::Gnp { n, p } => gen_random_graph(n, p, seed),
            GeneratorSpec::Split { n } => gen_random_split(n, seed),
            GeneratorSpec::Bipartite { n } => gen_random_bipartite(n, seed).0,
            GeneratorSpec::WeaklyClosed { n, gamma } => gen_random_weakly_closed(n, gamma, seed)?.graph,
            GeneratorSpec::TwinRich { n, base, p } => gen_twin_rich(n, base, p, seed),
            GeneratorSpec::Tree { n } => gen_random_tree(n, seed),
            GeneratorSpec::Kab { a, b } => gen_k_ab(a, b),
        })
    }

    /// Upper bound on the weak closure the family promises, if any.
    pub fn gamma_promise(&self) -> Option<usize> {
        match *self {
            GeneratorSpec::WeaklyClosed { gamma, .. } => Some(gamma),
            GeneratorSpec::Tree { .. } => Some(2),
            _ => None,
        }
    }
}

/// Random capacitated instance on `G(n, p)` with capacities in `0..=max_cap`.
pub fn gen_random_capvc(n: usize, p: f64, k: usize, max_cap: i64, seed: u64) -> CapVcInstance {
    let graph = gen_random_graph(n, p, seed);
    let mut r = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    let cap = (0..n).map(|_| r.gen_range(0..=max_cap)).collect();
    CapVcInstance::new(graph, cap, k).expect("one capacity per vertex")
}

/// Random exact set cover instance over `λk` elements with `sets` members.
/// With probability 1/2 an exact cover is planted among them.
pub fn gen_random_set_cover(lambda: usize, k: usize, sets: usize, seed: u64) -> SetCoverInstance {
    let mut r = rng(seed);
    let universe = lambda * k;
    let elements: Vec<usize> = (0..universe).collect();
    let mut family: Vec<Vec<usize>> = Vec::new();
    if r.gen_bool(0.5) && sets >= k {
        let mut perm = elements.clone();
        perm.shuffle(&mut r);
        family.extend(perm.chunks(lambda).map(|c| c.to_vec()));
    }
    while family.len() < sets {
        family.push(elements.choose_multiple(&mut r, lambda).copied().collect());
    }
    family.shuffle(&mut r);
    SetCoverInstance::new(universe, family, lambda, k).expect("well-formed by construction")
}

/// Vertex layout of the capacitated vertex cover gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapVcGadget {
    pub instance: CapVcInstance,
    pub family: Vec<Vertex>,
    pub first_copy: Vec<Vertex>,
    pub second_copy: Vec<Vertex>,
    pub leaves: Vec<Vertex>,
}

/// Capacitated vertex cover instance equivalent to an exact set cover
/// instance: one vertex per set, two copies of the universe forming a
/// clique, incidence edges to both copies, and a pendant leaf on every
/// universe vertex. Capacities: `2λ` per set, `z_i + 2λk − i` and
/// `z_i + i − 1` for the `i`-th element's copies (`z_i` = sets holding it),
/// 0 per leaf. Budget `2λk + k`.
pub fn gen_capvc_lowerbound(sc: &SetCoverInstance) -> Result<CapVcGadget> {
    let (lambda, k) = (sc.lambda, sc.k);
    if lambda == 0 || sc.universe != lambda * k {
        return Err(Error::Generator("universe must have lambda*k elements".into()));
    }
    if sc.family.iter().any(|s| s.len() != lambda) {
        return Err(Error::Generator(format!("every set must have {lambda} elements")));
    }
    let u = sc.universe;
    let f = sc.family.len();
    let family: Vec<Vertex> = (0..f).collect();
    let first_copy: Vec<Vertex> = (f..f + u).collect();
    let second_copy: Vec<Vertex> = (f + u..f + 2 * u).collect();
    let leaves: Vec<Vertex> = (f + 2 * u..f + 4 * u).collect();
    let mut edges = Vec::new();
    for (s, set) in sc.family.iter().enumerate() {
        for &e in set {
            edges.push((family[s], first_copy[e]));
            edges.push((family[s], second_copy[e]));
        }
    }
    let universe_side: Vec<Vertex> = first_copy.iter().chain(&second_copy).copied().collect();
    for (a, &x) in universe_side.iter().enumerate() {
        for &y in &universe_side[a + 1..] {
            edges.push((x, y));
        }
        edges.push((x, leaves[a]));
    }
    let graph = Graph::from_edges(f + 4 * u, edges)?;
    let mut z = vec![0i64; u];
    for set in &sc.family {
        for &e in set {
            z[e] += 1;
        }
    }
    let (l, kk) = (lambda as i64, k as i64);
    let mut cap = vec![0i64; graph.n()];
    for &v in &family {
        cap[v] = 2 * l;
    }
    for i in 1..=u {
        cap[first_copy[i - 1]] = z[i - 1] + 2 * l * kk - i as i64;
        cap[second_copy[i - 1]] = z[i - 1] + i as i64 - 1;
    }
    let instance = CapVcInstance::new(graph, cap, 2 * lambda * k + k)?;
    Ok(CapVcGadget {
        instance,
        family,
        first_copy,
        second_copy,
        leaves,
    })
}

/// Checks the gadget's closure (`c ≤ 2λ + 1`) and its edge count
/// `2λk + 2λ|F| + λk(2λk − 1)`.
pub fn verify_capvc_lowerbound(gadget: &CapVcGadget, sc: &SetCoverInstance) -> Result<()> {
    let g = &gadget.instance.graph;
    let (l, k, f) = (sc.lambda, sc.k, sc.family.len());
    let c = closure_number(g);
    if c > 2 * l + 1 {
        return Err(Error::Certificate(format!("gadget has closure {c} > {}", 2 * l + 1)));
    }
    let expected = 2 * l * k + 2 * l * f + l * k * (2 * l * k - 1);
    if g.m() != expected {
        return Err(Error::Certificate(format!("gadget has {} edges, expected {expected}", g.m())));
    }
    Ok(())
}

/// Composed independent set instance with its vertex layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsComposition {
    pub graph: Graph,
    /// `qkt − qk + k`.
    pub k: usize,
    pub t: usize,
    pub q: usize,
    pub parts: usize,
    /// `instance_vertices[x][v]` is the id of vertex `v` of instance `x`.
    pub instance_vertices: Vec<Vec<Vertex>>,
    /// `paths[i][r]` lists the selector path of part `i`, dimension `r`.
    pub paths: Vec<Vec<Vec<Vertex>>>,
}

impl IsComposition {
    /// Selector vertex `p^i_{r,j,s}` for 1-based `j`; `s = 1` exists for
    /// `j ≤ t−1`, `s = 2` for `j ≥ 2`.
    pub fn selector(&self, i: usize, r: usize, j: usize, s: u8) -> Option<Vertex> {
        let pos = match s {
            1 if (1..self.t).contains(&j) => 2 * j - 2,
            2 if (2..=self.t).contains(&j) => 2 * j - 3,
            _ => return None,
        };
        Some(self.paths[i][r][pos])
    }

    /// Selector vertices of `P^i_{r,j}`.
    pub fn selector_group(&self, i: usize, r: usize, j: usize) -> Vec<Vertex> {
        [1u8, 2].iter().filter_map(|&s| self.selector(i, r, j, s)).collect()
    }

    /// Coordinates (0-based) of the instance at grid index `x`.
    pub fn coordinates(&self, x: usize) -> Vec<usize> {
        let mut c = vec![0; self.q];
        let mut rest = x;
        for r in (0..self.q).rev() {
            c[r] = rest % self.t;
            rest /= self.t;
        }
        c
    }

    /// Independent set of size `k` in `H` built from a multicolored
    /// independent set `solution` (instance-local ids) of instance `x`: the
    /// solution plus, on every selector path, the `s = 1` vertices before
    /// the selected index and the `s = 2` vertices after it.
    pub fn lift_solution(&self, x: usize, solution: &[Vertex]) -> Vec<Vertex> {
        let coords = self.coordinates(x);
        let mut out: Vec<Vertex> = solution.iter().map(|&v| self.instance_vertices[x][v]).collect();
        for i in 0..self.parts {
            for (r, &c) in coords.iter().enumerate() {
                let sel = c + 1;
                out.extend((1..sel).filter_map(|j| self.selector(i, r, j, 1)));
                out.extend((sel + 1..=self.t).filter_map(|j| self.selector(i, r, j, 2)));
            }
        }
        out.sort_unstable();
        out
    }
}

/// Maximum degree and part size accepted by [`gen_is_composition`].
pub const COMPOSITION_MAX_DEGREE: usize = 3;
pub const COMPOSITION_MAX_PART: usize = 3;

/// Composes `t^q` multicolored independent set instances (each with the
/// same number `k` of parts, given in grid order with the first coordinate
/// most significant) into one independent set instance with budget
/// `qkt − qk + k`.
pub fn gen_is_composition(instances: &[Instance], t: usize, q: usize) -> Result<IsComposition> {
    if t < 2 || q < 1 {
        return Err(Error::Generator("need t ≥ 2 and q ≥ 1".into()));
    }
    let count = t.checked_pow(q as u32).ok_or_else(|| Error::Generator("t^q overflows".into()))?;
    if instances.len() != count {
        return Err(Error::Generator(format!("expected {count} instances, got {}", instances.len())));
    }
    let k = instances.first().map_or(0, |i| i.k);
    let mut part_lists: Vec<Vec<Vec<Vertex>>> = Vec::with_capacity(count);
    for (x, inst) in instances.iter().enumerate() {
        if inst.kind != ProblemKind::Mcis {
            return Err(Error::Generator(format!("instance {x} is not multicolored independent set")));
        }
        let parts = inst
            .parts
            .as_ref()
            .ok_or_else(|| Error::Generator(format!("instance {x} has no partition")))?;
        if inst.k != k || parts.iter().any(|&p| p >= k) {
            return Err(Error::Generator(format!("instance {x} does not have exactly {k} parts")));
        }
        if inst.graph.max_degree() > COMPOSITION_MAX_DEGREE {
            return Err(Error::Generator(format!("instance {x} has degree above {COMPOSITION_MAX_DEGREE}")));
        }
        let mut members = vec![Vec::new(); k];
        for v in inst.graph.vertices() {
            members[parts[v]].push(v);
        }
        for (i, m) in members.iter().enumerate() {
            if m.len() > COMPOSITION_MAX_PART {
                return Err(Error::Generator(format!("part {i} of instance {x} has more than {COMPOSITION_MAX_PART} vertices")));
            }
            if !inst.graph.is_clique(m)? {
                return Err(Error::Generator(format!("part {i} of instance {x} is not a clique")));
            }
        }
        part_lists.push(members);
    }

    let mut next = 0;
    let instance_vertices: Vec<Vec<Vertex>> = instances
        .iter()
        .map(|inst| {
            let ids: Vec<Vertex> = (next..next + inst.graph.n()).collect();
            next += inst.graph.n();
            ids
        })
        .collect();
    let path_len = 2 * t - 2;
    let paths: Vec<Vec<Vec<Vertex>>> = (0..k)
        .map(|_| {
            (0..q)
                .map(|_| {
                    let ids: Vec<Vertex> = (next..next + path_len).collect();
                    next += path_len;
                    ids
                })
                .collect()
        })
        .collect();
    let mut comp = IsComposition {
        graph: Graph::empty(0),
        k: q * k * t - q * k + k,
        t,
        q,
        parts: k,
        instance_vertices,
        paths,
    };

    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (x, inst) in instances.iter().enumerate() {
        let ids = &comp.instance_vertices[x];
        edges.extend(inst.graph.edges().map(|(u, v)| (ids[u], ids[v])));
    }
    for i in 0..k {
        for r in 0..q {
            let path = &comp.paths[i][r];
            edges.extend(path.windows(2).map(|w| (w[0], w[1])));
            for j in 1..=t {
                let mut clique = comp.selector_group(i, r, j);
                for x in 0..count {
                    if comp.coordinates(x)[r] + 1 == j {
                        clique.extend(part_lists[x][i].iter().map(|&v| comp.instance_vertices[x][v]));
                    }
                }
                for (a, &u) in clique.iter().enumerate() {
                    edges.extend(clique[a + 1..].iter().map(|&v| (u, v)));
                }
            }
            if i + 1 < k {
                for j in 1..t {
                    let sel = |ii, jj, s| comp.selector(ii, r, jj, s).expect("in range");
                    edges.push((sel(i, j, 1), sel(i + 1, j + 1, 2)));
                    edges.push((sel(i + 1, j, 1), sel(i, j + 1, 2)));
                }
            }
        }
    }
    comp.graph = Graph::from_edges(next, edges)?;
    Ok(comp)
}

/// Multicolored independent set instance with `k` parts of sizes in
/// `1..=max_part`, each a clique, plus random cross edges keeping degree at
/// most [`COMPOSITION_MAX_DEGREE`].
pub fn gen_random_mcis(k: usize, max_part: usize, seed: u64) -> Instance {
    let mut r = rng(seed);
    let mut parts = Vec::new();
    for i in 0..k {
        let size = r.gen_range(1..=max_part.max(1));
        parts.extend(std::iter::repeat(i).take(size));
    }
    let n = parts.len();
    let mut edges = Vec::new();
    let mut deg = vec![0usize; n];
    for u in 0..n {
        for v in u + 1..n {
            if parts[u] == parts[v] {
                edges.push((u, v));
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    for _ in 0..2 * n {
        let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
        if parts[u] != parts[v] && deg[u] < COMPOSITION_MAX_DEGREE && deg[v] < COMPOSITION_MAX_DEGREE && !edges.contains(&(u.min(v), u.max(v))) {
            edges.push((u.min(v), u.max(v)));
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    let mut inst = Instance::new(ProblemKind::Mcis, Graph::from_edges(n, edges).expect("ids"), k);
    inst.parts = Some(parts);
    inst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::weak_closure_ordering;
    use crate::oracles::{solve_capvc_exact, solve_exact_set_cover, solve_is_exact, OracleLimits};
    use crate::instance::IsInstance;

    #[test]
    fn determinism() {
        assert_eq!(gen_random_split(8, 7), gen_random_split(8, 7));
        assert_eq!(gen_random_graph(9, 0.3, 1), gen_random_graph(9, 0.3, 1));
        assert_eq!(
            gen_random_weakly_closed(12, 2, 5).unwrap(),
            gen_random_weakly_closed(12, 2, 5).unwrap()
        );
        let spec = GeneratorSpec::TwinRich { n: 10, base: 4, p: 0.5 };
        assert_eq!(spec.generate(3).unwrap(), spec.generate(3).unwrap());
    }

    #[test]
    fn families_have_their_shape() {
        let (g, a) = gen_random_bipartite(10, 3);
        let part = g.bipartition();
        assert!(part.is_some());
        assert!(g.edges().all(|(u, v)| (u < a) != (v < a)));
        let k25 = gen_k_ab(2, 5);
        assert_eq!(closure_number(&k25), 6);
        assert_eq!(weak_closure(&k25), 3);
        for seed in 0..20 {
            let s = gen_random_weakly_closed(15, 2, seed).unwrap();
            assert!(s.gamma <= 2);
            assert_eq!(weak_closure_ordering(&s.graph).gamma, s.gamma);
        }
        for seed in 0..20 {
            let t = gen_random_tree(9, seed);
            assert!(t.is_connected() && t.m() == 8);
            assert!(weak_closure(&t) <= 2);
            let g = gen_twin_rich(10, 3, 0.6, seed);
            assert_eq!(g.n(), 10);
        }
    }

    #[test]
    fn capvc_gadget_examples() {
        let yes = SetCoverInstance::new(3, vec![vec![0, 1, 2]], 3, 1).unwrap();
        let gadget = gen_capvc_lowerbound(&yes).unwrap();
        verify_capvc_lowerbound(&gadget, &yes).unwrap();
        assert_eq!(gadget.instance.k, 7);
        let limits = OracleLimits { vertices: 20, edges: 60 };
        assert!(solve_exact_set_cover(&yes).unwrap().answer);
        assert!(solve_capvc_exact(&gadget.instance, limits).unwrap().answer);

        let no = SetCoverInstance::new(6, vec![vec![0, 1, 3], vec![1, 2, 4], vec![2, 3, 5]], 3, 2).unwrap();
        let gadget = gen_capvc_lowerbound(&no).unwrap();
        verify_capvc_lowerbound(&gadget, &no).unwrap();
        assert!(!solve_exact_set_cover(&no).unwrap().answer);
        let wide = OracleLimits { vertices: 30, edges: 120 };
        assert!(!solve_capvc_exact(&gadget.instance, wide).unwrap().answer);
    }

    #[test]
    fn composition_examples() {
        let (t, q) = (2, 2);
        let no = {
            let mut i = Instance::new(ProblemKind::Mcis, Graph::from_edges(2, [(0, 1)]).unwrap(), 2);
            i.parts = Some(vec![0, 1]);
            i
        };
        let yes = {
            let mut i = Instance::new(ProblemKind::Mcis, Graph::empty(2), 2);
            i.parts = Some(vec![0, 1]);
            i
        };
        for pattern in 0u32..16 {
            let insts: Vec<Instance> = (0..4).map(|x| if pattern >> x & 1 == 1 { yes.clone() } else { no.clone() }).collect();
            let comp = gen_is_composition(&insts, t, q).unwrap();
            assert_eq!(comp.k, q * 2 * t - q * 2 + 2);
            let inst = IsInstance::new(comp.graph.clone(), comp.k);
            let got = solve_is_exact(&inst, OracleLimits::with_vertices(32)).unwrap().answer;
            assert_eq!(got, pattern != 0, "pattern {pattern:04b}");
            if let Some(x) = (0..4).find(|x| pattern >> x & 1 == 1) {
                let lifted = comp.lift_solution(x, &[0, 1]);
                assert_eq!(lifted.len(), comp.k);
                assert!(comp.graph.is_independent_set(&lifted).unwrap());
            }
        }
        for path in comp_paths(&yes, t, q) {
            assert_eq!(path.len(), 2 * t - 2);
        }
    }

    fn comp_paths(inst: &Instance, t: usize, q: usize) -> Vec<Vec<Vertex>> {
        let insts = vec![inst.clone(); t.pow(q as u32)];
        let comp = gen_is_composition(&insts, t, q).unwrap();
        comp.paths.into_iter().flatten().collect()
    }

    #[test]
    fn composition_rejects_bad_input() {
        let mut wide = Instance::new(ProblemKind::Mcis, named::complete(4), 1);
        wide.parts = Some(vec![0; 4]);
        assert!(gen_is_composition(&vec![wide; 4], 2, 2).is_err());
        assert!(gen_is_composition(&[], 2, 2).is_err());
    }
}
