//! Problem dispatch for the kernel pipelines, with the parameter report
//! and the size checks evaluated on the result.

use num_bigint::BigUint;
use serde::Serialize;

use crate::closure::{closure_number, degeneracy, independent_side_bound, weak_closure};
use crate::combinatorics::cliques::clique_number;
use crate::combinatorics::vclp_half_integral;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{
    AnnotatedConVcInstance, CapVcInstance, CocInstance, ConVcInstance, DsInstance, ImInstance, Instance, Outcome,
    ProblemKind,
};
use crate::kernel::{capvc, coc, convc, ds_split, im};
use crate::trace::Trace;

/// Graph parameters. `omega` is only computed up to [`OMEGA_VERTEX_CAP`]
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub m: usize,
    pub c: usize,
    pub gamma: usize,
    pub degeneracy: usize,
    pub omega: Option<usize>,
}

pub const OMEGA_VERTEX_CAP: usize = 200;

impl Params {
    pub fn of(g: &Graph) -> Params {
        Params {
            n: g.n(),
            m: g.m(),
            c: closure_number(g),
            gamma: weak_closure(g),
            degeneracy: degeneracy(g).0,
            omega: (g.n() <= OMEGA_VERTEX_CAP).then(|| clique_number(g)),
        }
    }

    /// `γ ≤ c`.
    pub fn gamma_at_most_c(&self) -> bool {
        self.gamma <= self.c
    }

    /// `γ ≤ d + 1`.
    pub fn gamma_at_most_degeneracy_plus_one(&self) -> bool {
        self.gamma <= self.degeneracy + 1
    }
}

/// Which connected vertex cover pipeline to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConVcMode {
    /// Twin-set rule, size bound in terms of γ.
    #[default]
    Gamma,
    /// Annotated pipeline, size bound in terms of c.
    C,
}

impl std::str::FromStr for ConVcMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma" => Ok(ConVcMode::Gamma),
            "c" => Ok(ConVcMode::C),
            other => Err(Error::invalid(format!("unknown convc mode `{other}` (expected gamma or c)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct KernelOptions {
    pub convc_mode: ConVcMode,
    pub domination: ds_split::Domination,
}

/// A size inequality `value ≤ limit` (or `<` when `strict`) evaluated on a
/// reduced instance. Most only hold for yes-instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    #[serde(serialize_with = "as_string")]
    pub value: BigUint,
    #[serde(serialize_with = "as_string")]
    pub limit: BigUint,
    pub strict: bool,
    pub holds: bool,
    pub yes_instances_only: bool,
}

fn as_string<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl BoundCheck {
    fn new(name: &str, value: impl Into<BigUint>, limit: BigUint, strict: bool) -> Self {
        let value = value.into();
        let holds = if strict { value < limit } else { value <= limit };
        BoundCheck {
            name: name.to_string(),
            value,
            limit,
            strict,
            holds,
            yes_instances_only: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "status")]
pub enum KernelResult {
    Reduced { n: usize, m: usize, k: usize },
    Decided { answer: bool },
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub problem: ProblemKind,
    pub input: Params,
    pub k: usize,
    pub result: KernelResult,
    pub bound_checks: Vec<BoundCheck>,
    pub trace: Trace,
    #[serde(skip)]
    pub outcome: Outcome<Instance>,
}

impl KernelReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs the pipeline for the instance's kind. Plain graphs, independent
/// set and multicolored independent set have no kernel here.
pub fn kernelize(inst: &Instance, opts: KernelOptions) -> Result<KernelReport> {
    inst.validate()?;
    let input = Params::of(&inst.graph);
    let (outcome, trace, bound_checks) = match inst.kind {
        ProblemKind::CapVc => {
            let (r, t) = capvc::kernelize_capvc(&CapVcInstance::from_instance(inst)?);
            let t_cap = r.k as u64 + 2;
            let checks = vec![vertex_cover_side_check("capvc.vertices", &r.graph, r.k, t_cap)];
            (Outcome::Reduced(r.to_instance()), t, checks)
        }
        ProblemKind::ConVc => {
            let plain = ConVcInstance::from_instance(inst)?;
            match opts.convc_mode {
                ConVcMode::Gamma => {
                    let (r, t) = convc::kernelize_convc_gamma(&plain);
                    let t_cap = r.k.max(1) as u64;
                    let checks = vec![vertex_cover_side_check("convc.vertices", &r.graph, r.k, t_cap)];
                    (Outcome::Reduced(r.to_instance()), t, checks)
                }
                ConVcMode::C => {
                    let (o, t) = convc::kernelize_convc_c(&plain);
                    let checks = match &o {
                        Outcome::Reduced(r) => annotated_checks(r, &t),
                        Outcome::Decided(_) => Vec::new(),
                    };
                    (map_outcome(o, |r| r.to_instance()), t, checks)
                }
            }
        }
        ProblemKind::AConVc => {
            return Err(Error::invalid(
                "annotated instances are produced by the convc pipeline, not kernelized directly",
            ))
        }
        ProblemKind::Coc => {
            let (r, t) = coc::kernelize_coc(&CocInstance::from_instance(inst)?)?;
            (Outcome::Reduced(r.to_instance()), t, Vec::new())
        }
        ProblemKind::Im => {
            let (o, t) = im::kernelize_im(&ImInstance::from_instance(inst)?);
            let checks = match &o {
                Outcome::Reduced(r) => vec![im_check(&r.graph)],
                Outcome::Decided(_) => Vec::new(),
            };
            (map_outcome(o, |r| r.to_instance()), t, checks)
        }
        ProblemKind::Ds => {
            let (o, t) = ds_split::kernelize_ds_split_with(&DsInstance::from_instance(inst)?, opts.domination)?;
            let checks = match &o {
                Outcome::Reduced(r) => ds_checks(r)?,
                Outcome::Decided(_) => Vec::new(),
            };
            (map_outcome(o, |r| r.to_instance()), t, checks)
        }
        ProblemKind::Graph | ProblemKind::Is | ProblemKind::Mcis => {
            return Err(Error::invalid(format!("no kernel pipeline for `{}` instances", inst.kind)))
        }
    };
    let result = match &outcome {
        Outcome::Reduced(r) => KernelResult::Reduced {
            n: r.graph.n(),
            m: r.graph.m(),
            k: r.k,
        },
        Outcome::Decided(a) => KernelResult::Decided { answer: *a },
    };
    Ok(KernelReport {
        problem: inst.kind,
        input,
        k: inst.k,
        result,
        bound_checks,
        trace,
        outcome,
    })
}

fn map_outcome<T>(o: Outcome<T>, f: impl FnOnce(T) -> Instance) -> Outcome<Instance> {
    match o {
        Outcome::Reduced(r) => Outcome::Reduced(f(r)),
        Outcome::Decided(a) => Outcome::Decided(a),
    }
}

/// `|V| ≤ k + bound(k, γ, t)`: a vertex cover of size `k` leaves an
/// independent side whose neighborhood classes have at most `t` members.
fn vertex_cover_side_check(name: &str, g: &Graph, k: usize, t: u64) -> BoundCheck {
    let gamma = weak_closure(g) as u64;
    let side = independent_side_bound(k as u64, gamma, t, None).value;
    BoundCheck::new(name, g.n(), BigUint::from(k) + side, false)
}

/// After twin removal the LP's zero side `V_0` is an independent set of
/// pairwise non-twins whose neighbors lie in `V_1`, so
/// `|V| ≤ k' + bound(k', γ, 1)` with `k' = |V_½ ∪ V_1|`.
fn im_check(g: &Graph) -> BoundCheck {
    let lp = vclp_half_integral(g);
    let rest = (g.n() - lp.v0().len()) as u64;
    let gamma = weak_closure(g) as u64;
    let side = independent_side_bound(rest, gamma, 1, None).value;
    BoundCheck {
        yes_instances_only: false,
        ..BoundCheck::new("im.vertices", g.n(), BigUint::from(rest) + side, false)
    }
}

/// Vertex count of the annotated instance (before leaf attachment) against
/// `k + c·k(k−1)/2`.
fn annotated_checks(r: &ConVcInstance, trace: &Trace) -> Vec<BoundCheck> {
    let leaves: Vec<usize> = trace
        .steps
        .iter()
        .flat_map(|s| s.attached_leaves.iter().map(|p| p.0))
        .collect();
    let keep: Vec<usize> = r.graph.vertices().filter(|&v| !leaves.contains(&r.labels[v])).collect();
    let (core, _) = r.graph.induced_subgraph(&keep).expect("valid ids");
    let c = closure_number(&core);
    let k = r.k;
    let strict_limit = BigUint::from(k) + BigUint::from(c) * BigUint::from(k * k.saturating_sub(1) / 2);
    let mut out = vec![BoundCheck::new(
        "convc.annotated_vertices",
        core.n(),
        BigUint::from(convc::annotated_size_limit(k, c)),
        false,
    )];
    if k >= 2 {
        out.push(BoundCheck::new("convc.annotated_vertices_strict", core.n(), strict_limit, true));
    }
    out
}

fn ds_checks(r: &DsInstance) -> Result<Vec<BoundCheck>> {
    if r.graph.n() == 0 {
        return Ok(Vec::new());
    }
    let part = ds_split::independent_maximum_partition(&r.graph)?;
    let gamma = weak_closure(&r.graph);
    let (ni, nc) = (part.independent.len(), part.clique.len());
    Ok(vec![
        BoundCheck::new(
            "ds.independent_sunflower_threshold",
            ni,
            ds_split::ds_split_sunflower_threshold(gamma, r.k),
            true,
        ),
        BoundCheck::new(
            "ds.independent_limit",
            ni,
            ds_split::ds_split_independent_limit(gamma, r.k),
            false,
        ),
        BoundCheck {
            yes_instances_only: false,
            ..BoundCheck::new(
                "ds.clique_limit",
                nc,
                BigUint::from(ds_split::ds_split_clique_limit(gamma, ni)),
                false,
            )
        },
    ])
}

/// Independent check that replaying the trace on the input reproduces the
/// reported outcome.
pub fn replay_matches(inst: &Instance, report: &KernelReport) -> Result<bool> {
    Ok(report.trace.replay(inst)? == report.outcome)
}

/// Lifts an annotated instance to the generic form; used by the CLI when
/// printing intermediate instances.
pub fn annotated_to_instance(a: &AnnotatedConVcInstance) -> Instance {
    a.to_instance()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn params_examples() {
        let p = Params::of(&complete_bipartite(2, 5));
        assert_eq!((p.c, p.gamma, p.degeneracy, p.omega), (6, 3, 2, Some(2)));
        let p = Params::of(&complete(5));
        assert_eq!((p.c, p.gamma, p.degeneracy), (1, 1, 4));
        let p = Params::of(&cycle(4));
        assert_eq!((p.c, p.gamma, p.degeneracy), (3, 3, 2));
        assert!(p.gamma_at_most_c() && p.gamma_at_most_degeneracy_plus_one());
    }

    #[test]
    fn dispatch_and_replay() {
        let mut capvc = Instance::new(ProblemKind::CapVc, star(6), 1);
        capvc.caps = Some(vec![6, 0, 0, 0, 0, 0, 0]);
        let im = Instance::new(ProblemKind::Im, Graph::empty(5), 1);
        let convc = Instance::new(ProblemKind::ConVc, path(5), 2);
        for (inst, opts) in [
            (capvc, KernelOptions::default()),
            (im.clone(), KernelOptions::default()),
            (
                convc,
                KernelOptions {
                    convc_mode: ConVcMode::C,
                    ..Default::default()
                },
            ),
        ] {
            let rep = kernelize(&inst, opts).unwrap();
            assert!(replay_matches(&inst, &rep).unwrap());
            assert!(rep.to_json().contains("\"trace\""));
        }
        let rep = kernelize(&im, KernelOptions::default()).unwrap();
        let reduced = rep.outcome.reduced().unwrap();
        assert!(reduced.graph.n() <= 1);
        assert!(rep.bound_checks.iter().all(|c| c.holds));
        assert!(kernelize(&Instance::new(ProblemKind::Ds, cycle(5), 1), KernelOptions::default()).is_err());
        assert!(kernelize(&Instance::new(ProblemKind::Graph, cycle(5), 1), KernelOptions::default()).is_err());
    }
}
