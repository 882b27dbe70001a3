//! Kernelization toolkit for graph problems parameterized by the closure
//! number and the weak closure number.

pub mod closure;
pub mod combinatorics;
pub mod error;
pub mod generators;
pub mod graph;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub mod instance;
pub mod io;
pub mod kernel;
pub mod oracles;
pub mod pipeline;
pub mod ramsey;
pub mod trace;
pub mod verify;

pub use instance::{
    AnnotatedConVcInstance, CapVcInstance, CocInstance, ConVcInstance, DsInstance, ImInstance, Instance,
    IsInstance, Outcome, ProblemKind, SetCoverInstance,
};
pub use trace::{Trace, TraceStep};
