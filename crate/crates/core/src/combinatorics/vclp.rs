//! Half-integral optimum of the vertex cover LP relaxation, computed through
//! the bipartite double cover and König's theorem.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

/// LP values stored doubled: 0, 1 or 2 stand for 0, 1/2 and 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfIntegralSolution {
    pub doubled: Vec<u8>,
}

impl HalfIntegralSolution {
    /// Twice the objective value.
    pub fn objective_doubled(&self) -> u64 {
        self.doubled.iter().map(|&x| x as u64).sum()
    }

    fn with_value(&self, x: u8) -> Vec<Vertex> {
        (0..self.doubled.len()).filter(|&v| self.doubled[v] == x).collect()
    }

    pub fn v0(&self) -> Vec<Vertex> {
        self.with_value(0)
    }

    pub fn v_half(&self) -> Vec<Vertex> {
        self.with_value(1)
    }

    pub fn v1(&self) -> Vec<Vertex> {
        self.with_value(2)
    }

    pub fn is_feasible(&self, g: &Graph) -> bool {
        self.doubled.len() == g.n()
            && self.doubled.iter().all(|&x| x <= 2)
            && g.edges().all(|(u, v)| self.doubled[u] + self.doubled[v] >= 2)
    }
}

/// Maximum bipartite matching between left copies and right copies, where
/// left `u` sees right `v` iff `uv` is an edge. Returns the right mate of
/// every left vertex.
fn double_cover_matching(g: &Graph) -> (Vec<Option<Vertex>>, Vec<Option<Vertex>>) {
    let n = g.n();
    let mut left = vec![None; n];
    let mut right: Vec<Option<Vertex>> = vec![None; n];
    fn augment(
        g: &Graph,
        u: Vertex,
        seen: &mut [bool],
        left: &mut [Option<Vertex>],
        right: &mut [Option<Vertex>],
    ) -> bool {
        for &v in g.neighbors(u) {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if right[v].map_or(true, |w| augment(g, w, seen, left, right)) {
                left[u] = Some(v);
                right[v] = Some(u);
                return true;
            }
        }
        false
    }
    for u in 0..n {
        let mut seen = vec![false; n];
        augment(g, u, &mut seen, &mut left, &mut right);
    }
    (left, right)
}

/// Optimal half-integral solution of the vertex cover LP.
pub fn vclp_half_integral(g: &Graph) -> HalfIntegralSolution {
    let n = g.n();
    let (left, right) = double_cover_matching(g);
    // König: Z = vertices reachable from free left vertices by alternating paths
    let mut zl = vec![false; n];
    let mut zr = vec![false; n];
    let mut queue = VecDeque::new();
    for u in 0..n {
        if left[u].is_none() {
            zl[u] = true;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if zr[v] {
                continue;
            }
            zr[v] = true;
            if let Some(w) = right[v] {
                if !zl[w] {
                    zl[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    // cover = (L \ Z) ∪ (R ∩ Z)
    let doubled = (0..n)
        .map(|v| u8::from(!zl[v]) + u8::from(zr[v]))
        .collect();
    HalfIntegralSolution { doubled }
}
