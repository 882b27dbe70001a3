//! Maximal clique enumeration (Bron–Kerbosch with pivoting) and maximum
//! clique search.

use crate::graph::{sorted_intersection, Graph, Vertex};

fn bron_kerbosch<F: FnMut(&[Vertex]) -> bool>(
    g: &Graph,
    r: &mut Vec<Vertex>,
    mut p: Vec<Vertex>,
    mut x: Vec<Vertex>,
    visit: &mut F,
) -> bool {
    if p.is_empty() && x.is_empty() {
        return visit(r);
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by(|&a, &b| {
            let ca = sorted_intersection(&p, g.neighbors(a)).len();
            let cb = sorted_intersection(&p, g.neighbors(b)).len();
            ca.cmp(&cb).then(b.cmp(&a))
        })
        .expect("p or x nonempty");
    let candidates: Vec<Vertex> = p
        .iter()
        .copied()
        .filter(|v| g.neighbors(pivot).binary_search(v).is_err())
        .collect();
    for v in candidates {
        r.push(v);
        let keep_going = bron_kerbosch(
            g,
            r,
            sorted_intersection(&p, g.neighbors(v)),
            sorted_intersection(&x, g.neighbors(v)),
            visit,
        );
        r.pop();
        if !keep_going {
            return false;
        }
        p.retain(|&w| w != v);
        let pos = x.binary_search(&v).unwrap_err();
        x.insert(pos, v);
    }
    true
}

/// Calls `visit` on every maximal clique (sorted); stops early when it
/// returns `false`. The empty graph has one maximal clique, the empty set.
pub fn for_each_maximal_clique<F: FnMut(&[Vertex]) -> bool>(g: &Graph, mut visit: F) {
    let mut r = Vec::new();
    bron_kerbosch(
        g,
        &mut r,
        g.vertices().collect(),
        Vec::new(),
        &mut |c: &[Vertex]| {
            let mut c = c.to_vec();
            c.sort_unstable();
            visit(&c)
        },
    );
}

/// All maximal cliques, each sorted, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for_each_maximal_clique(g, |c| {
        out.push(c.to_vec());
        true
    });
    out.sort();
    out
}

pub fn count_maximal_cliques(g: &Graph) -> u64 {
    let mut count = 0;
    for_each_maximal_clique(g, |_| {
        count += 1;
        true
    });
    count
}

fn expand_max(g: &Graph, r: &mut Vec<Vertex>, p: Vec<Vertex>, best: &mut Vec<Vertex>) {
    if p.is_empty() {
        if r.len() > best.len() {
            *best = r.clone();
        }
        return;
    }
    for (i, &v) in p.iter().enumerate() {
        if r.len() + (p.len() - i) <= best.len() {
            return;
        }
        r.push(v);
        let rest = sorted_intersection(&p[i + 1..], g.neighbors(v));
        expand_max(g, r, rest, best);
        r.pop();
    }
}

/// A maximum clique, lexicographically first among those found by the
/// branch and bound (sorted).
pub fn max_clique(g: &Graph) -> Vec<Vertex> {
    let mut best = Vec::new();
    expand_max(g, &mut Vec::new(), g.vertices().collect(), &mut best);
    best
}

/// ω(G); 0 for the graph without vertices.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}
