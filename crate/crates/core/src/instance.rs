//! Problem instances. Every instance carries `labels`, the original id of
//! each current vertex, so that reductions can be reported in terms of the
//! input graph.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    /// Plain graph, no problem attached.
    Graph,
    CapVc,
    ConVc,
    /// Connected vertex cover with vertices forced into the solution.
    AConVc,
    Coc,
    Im,
    Ds,
    Is,
    /// Multicolored independent set over a partition into cliques.
    Mcis,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 9] = [
        ProblemKind::Graph,
        ProblemKind::CapVc,
        ProblemKind::ConVc,
        ProblemKind::AConVc,
        ProblemKind::Coc,
        ProblemKind::Im,
        ProblemKind::Ds,
        ProblemKind::Is,
        ProblemKind::Mcis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Graph => "graph",
            ProblemKind::CapVc => "capvc",
            ProblemKind::ConVc => "convc",
            ProblemKind::AConVc => "aconvc",
            ProblemKind::Coc => "coc",
            ProblemKind::Im => "im",
            ProblemKind::Ds => "ds",
            ProblemKind::Is => "is",
            ProblemKind::Mcis => "mcis",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ProblemKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown problem kind `{s}`")))
    }
}

/// Problem-agnostic instance: what the file format stores and what trace
/// replay operates on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub kind: ProblemKind,
    pub graph: Graph,
    pub k: usize,
    pub ell: Option<usize>,
    pub caps: Option<Vec<i64>>,
    pub red: Vec<bool>,
    pub parts: Option<Vec<usize>>,
    pub labels: Vec<usize>,
}

impl Instance {
    pub fn new(kind: ProblemKind, graph: Graph, k: usize) -> Self {
        let n = graph.n();
        Instance {
            kind,
            graph,
            k,
            ell: None,
            caps: None,
            red: vec![false; n],
            parts: None,
            labels: (0..n).collect(),
        }
    }

    /// Checks that annotations match the graph.
    pub fn validate(&self) -> Result<()> {
        let n = self.graph.n();
        if self.labels.len() != n || self.red.len() != n {
            return Err(Error::invalid("annotation length differs from vertex count"));
        }
        let mut sorted = self.labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::invalid("duplicate vertex labels"));
        }
        if let Some(c) = &self.caps {
            if c.len() != n {
                return Err(Error::invalid("capacity list length differs from vertex count"));
            }
        }
        if let Some(p) = &self.parts {
            if p.len() != n {
                return Err(Error::invalid("part list length differs from vertex count"));
            }
        }
        match self.kind {
            ProblemKind::CapVc if self.caps.is_none() => Err(Error::invalid("capvc needs capacities")),
            ProblemKind::Coc if self.ell.map_or(true, |l| l == 0) => Err(Error::invalid("coc needs ell >= 1")),
            ProblemKind::Mcis if self.parts.is_none() => Err(Error::invalid("mcis needs a partition")),
            _ => Ok(()),
        }
    }

    /// Copy without the given vertices; annotations follow the survivors.
    pub fn without(&self, del: &[Vertex]) -> Result<Instance> {
        let (graph, keep) = self.graph.remove_vertices(del)?;
        Ok(Instance {
            kind: self.kind,
            graph,
            k: self.k,
            ell: self.ell,
            caps: self.caps.as_ref().map(|c| keep.iter().map(|&v| c[v]).collect()),
            red: keep.iter().map(|&v| self.red[v]).collect(),
            parts: self.parts.as_ref().map(|p| keep.iter().map(|&v| p[v]).collect()),
            labels: keep.iter().map(|&v| self.labels[v]).collect(),
        })
    }

    /// Current id of a vertex with the given original label.
    pub fn id_of(&self, label: usize) -> Result<Vertex> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or_else(|| Error::invalid(format!("no vertex labeled {label}")))
    }

    pub fn expect_kind(&self, kind: ProblemKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "instance kind is {}, expected {}",
                self.kind, kind
            )))
        }
    }
}

/// Operations shared by the typed instances used in the reductions.
pub trait GraphInstance: Clone {
    fn graph(&self) -> &Graph;
    fn labels(&self) -> &[usize];
    fn k(&self) -> usize;
    /// Copy without the given vertices; annotations follow the survivors.
    fn without(&self, del: &[Vertex]) -> Self;

    fn label_set(&self, vs: &[Vertex]) -> Vec<usize> {
        let mut out: Vec<usize> = vs.iter().map(|&v| self.labels()[v]).collect();
        out.sort_unstable();
        out
    }
}

fn surviving(g: &Graph, del: &[Vertex]) -> (Graph, Vec<Vertex>) {
    g.remove_vertices(del).expect("reduction removes valid vertices")
}

macro_rules! plain_instance {
    ($name:ident, $kind:expr) => {
        #[derive(Clone, Debug, PartialEq, Eq)]
        pub struct $name {
            pub graph: Graph,
            pub k: usize,
            pub labels: Vec<usize>,
        }

        impl $name {
            pub fn new(graph: Graph, k: usize) -> Self {
                let labels = (0..graph.n()).collect();
                $name { graph, k, labels }
            }

            pub fn to_instance(&self) -> Instance {
                let mut inst = Instance::new($kind, self.graph.clone(), self.k);
                inst.labels = self.labels.clone();
                inst
            }

            pub fn from_instance(inst: &Instance) -> Result<Self> {
                inst.expect_kind($kind)?;
                inst.validate()?;
                Ok($name {
                    graph: inst.graph.clone(),
                    k: inst.k,
                    labels: inst.labels.clone(),
                })
            }
        }

        impl GraphInstance for $name {
            fn graph(&self) -> &Graph {
                &self.graph
            }
            fn labels(&self) -> &[usize] {
                &self.labels
            }
            fn k(&self) -> usize {
                self.k
            }
            fn without(&self, del: &[Vertex]) -> Self {
                let (graph, keep) = surviving(&self.graph, del);
                $name {
                    graph,
                    k: self.k,
                    labels: keep.iter().map(|&v| self.labels[v]).collect(),
                }
            }
        }
    };
}

plain_instance!(ConVcInstance, ProblemKind::ConVc);
plain_instance!(ImInstance, ProblemKind::Im);
plain_instance!(DsInstance, ProblemKind::Ds);
plain_instance!(IsInstance, ProblemKind::Is);

/// Capacities are signed: reductions may push them below zero, and a vertex
/// with negative capacity can never be used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapVcInstance {
    pub graph: Graph,
    pub cap: Vec<i64>,
    pub k: usize,
    pub labels: Vec<usize>,
}

impl CapVcInstance {
    pub fn new(graph: Graph, cap: Vec<i64>, k: usize) -> Result<Self> {
        if cap.len() != graph.n() {
            return Err(Error::invalid("one capacity per vertex required"));
        }
        let labels = (0..graph.n()).collect();
        Ok(CapVcInstance { graph, cap, k, labels })
    }

    pub fn to_instance(&self) -> Instance {
        let mut inst = Instance::new(ProblemKind::CapVc, self.graph.clone(), self.k);
        inst.caps = Some(self.cap.clone());
        inst.labels = self.labels.clone();
        inst
    }

    pub fn from_instance(inst: &Instance) -> Result<Self> {
        inst.expect_kind(ProblemKind::CapVc)?;
        inst.validate()?;
        Ok(CapVcInstance {
            graph: inst.graph.clone(),
            cap: inst.caps.clone().expect("validated"),
            k: inst.k,
            labels: inst.labels.clone(),
        })
    }
}

impl GraphInstance for CapVcInstance {
    fn graph(&self) -> &Graph {
        &self.graph
    }
    fn labels(&self) -> &[usize] {
        &self.labels
    }
    fn k(&self) -> usize {
        self.k
    }
    fn without(&self, del: &[Vertex]) -> Self {
        let (graph, keep) = surviving(&self.graph, del);
        CapVcInstance {
            graph,
            cap: keep.iter().map(|&v| self.cap[v]).collect(),
            k: self.k,
            labels: keep.iter().map(|&v| self.labels[v]).collect(),
        }
    }
}

/// Connected vertex cover where red vertices must be in the solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotatedConVcInstance {
    pub graph: Graph,
    pub red: Vec<bool>,
    pub k: usize,
    pub labels: Vec<usize>,
}

impl AnnotatedConVcInstance {
    /// All-white lift of a plain instance.
    pub fn from_plain(inst: &ConVcInstance) -> Self {
        AnnotatedConVcInstance {
            graph: inst.graph.clone(),
            red: vec![false; inst.graph.n()],
            k: inst.k,
            labels: inst.labels.clone(),
        }
    }

    pub fn red_vertices(&self) -> Vec<Vertex> {
        (0..self.red.len()).filter(|&v| self.red[v]).collect()
    }

    pub fn to_instance(&self) -> Instance {
        let mut inst = Instance::new(ProblemKind::AConVc, self.graph.clone(), self.k);
        inst.red = self.red.clone();
        inst.labels = self.labels.clone();
        inst
    }

    pub fn from_instance(inst: &Instance) -> Result<Self> {
        inst.expect_kind(ProblemKind::AConVc)?;
        inst.validate()?;
        Ok(AnnotatedConVcInstance {
            graph: inst.graph.clone(),
            red: inst.red.clone(),
            k: inst.k,
            labels: inst.labels.clone(),
        })
    }
}

impl GraphInstance for AnnotatedConVcInstance {
    fn graph(&self) -> &Graph {
        &self.graph
    }
    fn labels(&self) -> &[usize] {
        &self.labels
    }
    fn k(&self) -> usize {
        self.k
    }
    fn without(&self, del: &[Vertex]) -> Self {
        let (graph, keep) = surviving(&self.graph, del);
        AnnotatedConVcInstance {
            graph,
            red: keep.iter().map(|&v| self.red[v]).collect(),
            k: self.k,
            labels: keep.iter().map(|&v| self.labels[v]).collect(),
        }
    }
}

/// Connected ℓ-component order connectivity: delete a connected set of at
/// most `k` vertices so that every remaining component has at most `ell`
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocInstance {
    pub graph: Graph,
    pub ell: usize,
    pub k: usize,
    pub labels: Vec<usize>,
}

impl CocInstance {
    pub fn new(graph: Graph, ell: usize, k: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::invalid("ell must be at least 1"));
        }
        let labels = (0..graph.n()).collect();
        Ok(CocInstance { graph, ell, k, labels })
    }

    pub fn to_instance(&self) -> Instance {
        let mut inst = Instance::new(ProblemKind::Coc, self.graph.clone(), self.k);
        inst.ell = Some(self.ell);
        inst.labels = self.labels.clone();
        inst
    }

    pub fn from_instance(inst: &Instance) -> Result<Self> {
        inst.expect_kind(ProblemKind::Coc)?;
        inst.validate()?;
        Ok(CocInstance {
            graph: inst.graph.clone(),
            ell: inst.ell.expect("validated"),
            k: inst.k,
            labels: inst.labels.clone(),
        })
    }
}

impl GraphInstance for CocInstance {
    fn graph(&self) -> &Graph {
        &self.graph
    }
    fn labels(&self) -> &[usize] {
        &self.labels
    }
    fn k(&self) -> usize {
        self.k
    }
    fn without(&self, del: &[Vertex]) -> Self {
        let (graph, keep) = surviving(&self.graph, del);
        CocInstance {
            graph,
            ell: self.ell,
            k: self.k,
            labels: keep.iter().map(|&v| self.labels[v]).collect(),
        }
    }
}

/// Result of a reduction that may settle the instance outright.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Reduced(T),
    Decided(bool),
}

impl<T> Outcome<T> {
    pub fn reduced(&self) -> Option<&T> {
        match self {
            Outcome::Reduced(t) => Some(t),
            Outcome::Decided(_) => None,
        }
    }

    pub fn decided(&self) -> Option<bool> {
        match self {
            Outcome::Reduced(_) => None,
            Outcome::Decided(b) => Some(*b),
        }
    }
}


/// Exact set cover where every set has `lambda` elements and the universe
/// `0..universe` has `lambda * k` elements: pick `k` pairwise disjoint sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe: usize,
    pub family: Vec<Vec<usize>>,
    pub lambda: usize,
    pub k: usize,
}

impl SetCoverInstance {
    pub fn new(universe: usize, family: Vec<Vec<usize>>, lambda: usize, k: usize) -> Result<Self> {
        if universe != lambda * k {
            return Err(Error::invalid(format!(
                "universe has {universe} elements, expected lambda*k = {}",
                lambda * k
            )));
        }
        let mut fam = Vec::with_capacity(family.len());
        for set in family {
            let mut s = set;
            s.sort_unstable();
            s.dedup();
            if s.len() != lambda {
                return Err(Error::invalid(format!("set {s:?} does not have {lambda} elements")));
            }
            if s.iter().any(|&x| x >= universe) {
                return Err(Error::invalid(format!("set {s:?} leaves the universe")));
            }
            fam.push(s);
        }
        Ok(SetCoverInstance {
            universe,
            family: fam,
            lambda,
            k,
        })
    }
}
