//! Reduction rules and kernelization pipelines.

pub mod capvc;
pub mod coc;
pub mod convc;
pub mod ds_split;
pub mod im;

use std::collections::BTreeMap;

use crate::graph::{Graph, Vertex};

/// A class of vertices with identical open neighborhoods.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClass {
    pub members: Vec<Vertex>,
    pub neighborhood: Vec<Vertex>,
}

/// All false-twin classes (including singletons), ordered by smallest member.
pub fn false_twin_classes(g: &Graph) -> Vec<TwinClass> {
    let mut by_nbhd: BTreeMap<&[Vertex], Vec<Vertex>> = BTreeMap::new();
    for v in g.vertices() {
        by_nbhd.entry(g.neighbors(v)).or_default().push(v);
    }
    let mut classes: Vec<TwinClass> = by_nbhd
        .into_iter()
        .map(|(nb, members)| TwinClass {
            members,
            neighborhood: nb.to_vec(),
        })
        .collect();
    classes.sort_by_key(|c| c.members[0]);
    classes
}
