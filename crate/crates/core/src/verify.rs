//! Randomized end-to-end suites: kernel pipelines against the exact
//! oracles, and the structural invariants of the closure machinery.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closure::{
    check_posterior_intersections, closure_number, degeneracy, independent_side_bound, neighborhood_classes,
    weak_closure_ordering,
};
use crate::combinatorics::cliques::count_maximal_cliques;
use crate::combinatorics::vclp_half_integral;
use crate::generators::{
    gen_random_bipartite, gen_random_graph, gen_random_split, gen_random_tree, gen_random_weakly_closed,
    gen_twin_rich,
};
use crate::graph::Graph;
use crate::instance::{Instance, Outcome, ProblemKind};
use crate::kernel::ds_split::{self, compute_s_neighborhoods, good_ordering, independent_maximum_partition};
use crate::oracles::{min_vertex_cover, solve_instance, weak_closure_exhaustive, OracleLimits};
use crate::pipeline::{kernelize, ConVcMode, KernelOptions};
use crate::ramsey::{clique_or_independent_set, r_gamma_bound};
use crate::trace::Trace;

/// A failed trial: what went wrong and, when there is one, the instance
/// that shows it.
#[derive(Clone, Debug)]
pub struct Failure {
    pub message: String,
    pub instance: Option<Instance>,
}

impl Failure {
    pub fn new(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            instance: None,
        }
    }

    pub fn on(instance: &Instance, message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            instance: Some(instance.clone()),
        }
    }
}

/// Per-rule tallies; kernel suites count instances on which a rule fired.
pub type RuleCounts = BTreeMap<String, usize>;

pub type TrialFn = fn(&mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure>;

#[derive(Clone, Copy)]
pub struct Suite {
    pub name: &'static str,
    pub trial: TrialFn,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    /// Lowest-numbered failing trial.
    pub first_failure: Option<(usize, Failure)>,
    pub rule_counts: RuleCounts,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn trial_seed(seed: u64, name: &str, trial: usize) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (trial as u64).wrapping_mul(0xd1b5_4a32_d192_ed03)
}

/// Runs `trials` independent trials in parallel. Trial `i` always sees the
/// same random stream for a given seed, so reports are reproducible.
pub fn run_suite(suite: &Suite, trials: usize, seed: u64) -> SuiteReport {
    let results: Vec<_> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, suite.name, i));
            (suite.trial)(&mut rng)
        })
        .collect();
    let mut report = SuiteReport {
        name: suite.name.to_string(),
        trials,
        failures: 0,
        first_failure: None,
        rule_counts: RuleCounts::new(),
    };
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(counts) => {
                for (rule, c) in counts {
                    *report.rule_counts.entry(rule).or_default() += c;
                }
            }
            Err(f) => {
                report.failures += 1;
                if report.first_failure.is_none() {
                    report.first_failure = Some((i, f));
                }
            }
        }
    }
    report
}

fn oracle(inst: &Instance) -> std::result::Result<bool, Failure> {
    let limits = OracleLimits {
        vertices: 20,
        edges: 120,
    };
    solve_instance(inst, limits)
        .map(|r| r.answer)
        .map_err(|e| Failure::on(inst, format!("oracle: {e}")))
}

/// Replays the trace one step at a time and checks that every intermediate
/// instance (and any decision) has the input's answer, and that the full
/// replay reproduces `outcome`.
pub fn check_stepwise(
    inst: &Instance,
    trace: &Trace,
    outcome: &Outcome<Instance>,
) -> std::result::Result<RuleCounts, Failure> {
    let expected = oracle(inst)?;
    let mut counts = RuleCounts::new();
    for i in 1..=trace.steps.len() {
        let prefix = Trace {
            steps: trace.steps[..i].to_vec(),
            ..trace.clone()
        };
        let rule = &trace.steps[i - 1].rule;
        let got = match prefix.replay(inst).map_err(|e| Failure::on(inst, format!("replay: {e}")))? {
            Outcome::Decided(a) => a,
            Outcome::Reduced(r) => oracle(&r)?,
        };
        if got != expected {
            return Err(Failure::on(
                inst,
                format!("answer changed from {expected} to {got} after step {i} ({rule})"),
            ));
        }
        *counts.entry(rule.clone()).or_default() += 1;
    }
    let full = trace.replay(inst).map_err(|e| Failure::on(inst, format!("replay: {e}")))?;
    if &full != outcome {
        return Err(Failure::on(inst, "trace replay differs from the reported outcome"));
    }
    if let Outcome::Decided(a) = outcome {
        if *a != expected {
            return Err(Failure::on(inst, format!("decided {a}, oracle says {expected}")));
        }
    }
    Ok(counts)
}

fn kernel_trial(inst: Instance, opts: KernelOptions) -> std::result::Result<RuleCounts, Failure> {
    let report = kernelize(&inst, opts).map_err(|e| Failure::on(&inst, format!("kernel: {e}")))?;
    let mut counts = check_stepwise(&inst, &report.trace, &report.outcome)?;
    // per instance: did the rule fire at all
    counts.values_mut().for_each(|c| *c = 1);
    counts.insert("instances".into(), 1);
    Ok(counts)
}

/// Mix of sparse, dense, twin-rich and tree-like graphs on `2..=max_n`
/// vertices.
pub fn random_test_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let seed = rng.gen();
    match rng.gen_range(0..4) {
        0 => gen_random_graph(n, rng.gen_range(0.15..0.7), seed),
        1 => gen_twin_rich(n, rng.gen_range(1..=4), rng.gen_range(0.3..0.9), seed),
        2 => {
            let t = gen_random_tree(n, seed);
            let extra = gen_random_graph(n, 0.1, seed ^ 1);
            Graph::from_edges(n, t.edges().chain(extra.edges())).expect("ids")
        }
        _ => gen_random_weakly_closed(n, rng.gen_range(1..=3), seed)
            .map(|s| s.graph)
            .unwrap_or_else(|_| gen_random_graph(n, 0.3, seed)),
    }
}

pub const MAX_TEST_N: usize = 11;
pub const MAX_TEST_K: usize = 4;
pub const MAX_TEST_CAP: i64 = 4;

pub fn random_instance(rng: &mut ChaCha8Rng, kind: ProblemKind) -> Instance {
    let k = rng.gen_range(0..=MAX_TEST_K);
    let graph = if kind == ProblemKind::Ds {
        gen_random_split(rng.gen_range(1..=MAX_TEST_N), rng.gen())
    } else {
        random_test_graph(rng, MAX_TEST_N)
    };
    let n = graph.n();
    let mut inst = Instance::new(kind, graph, k);
    match kind {
        ProblemKind::CapVc => inst.caps = Some((0..n).map(|_| rng.gen_range(0..=MAX_TEST_CAP)).collect()),
        ProblemKind::Coc => inst.ell = Some(rng.gen_range(1..=2)),
        _ => {}
    }
    inst
}

fn capvc_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    kernel_trial(random_instance(rng, ProblemKind::CapVc), KernelOptions::default())
}

fn convc_gamma_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    kernel_trial(random_instance(rng, ProblemKind::ConVc), KernelOptions::default())
}

fn convc_c_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    let opts = KernelOptions {
        convc_mode: ConVcMode::C,
        ..Default::default()
    };
    kernel_trial(random_instance(rng, ProblemKind::ConVc), opts)
}

fn coc_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    kernel_trial(random_instance(rng, ProblemKind::Coc), KernelOptions::default())
}

fn im_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    kernel_trial(random_instance(rng, ProblemKind::Im), KernelOptions::default())
}

fn ds_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    kernel_trial(random_instance(rng, ProblemKind::Ds), KernelOptions::default())
}

fn ds_open_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    let opts = KernelOptions {
        domination: ds_split::Domination::Open,
        ..Default::default()
    };
    kernel_trial(random_instance(rng, ProblemKind::Ds), opts)
}

fn graph_failure(g: &Graph, message: impl Into<String>) -> Failure {
    Failure::on(&Instance::new(ProblemKind::Graph, g.clone(), 0), message)
}

/// Greedy weak closure against the exhaustive minimum, `γ ≤ c`,
/// `γ ≤ d + 1`, the ordering certificate and posterior intersections.
fn params_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    let n = rng.gen_range(1..=8);
    let g = gen_random_graph(n, rng.gen_range(0.1..0.9), rng.gen());
    let ord = weak_closure_ordering(&g);
    ord.verify(&g).map_err(|e| graph_failure(&g, e.to_string()))?;
    check_posterior_intersections(&g, &ord).map_err(|e| graph_failure(&g, e.to_string()))?;
    let exact = weak_closure_exhaustive(&g, 8).map_err(|e| graph_failure(&g, e.to_string()))?;
    if exact != ord.gamma {
        return Err(graph_failure(&g, format!("greedy gamma {} but exhaustive {exact}", ord.gamma)));
    }
    if ord.gamma > closure_number(&g) || ord.gamma > degeneracy(&g).0 + 1 {
        return Err(graph_failure(&g, "gamma exceeds c or d+1"));
    }
    Ok(RuleCounts::new())
}

/// The independent side of a minimum vertex cover stays within the
/// explicit bound, and the class counts within their factors.
fn neighborhood_class_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    let g = random_test_graph(rng, 12);
    let cover = min_vertex_cover(&g).map_err(|e| graph_failure(&g, e.to_string()))?;
    let ord = weak_closure_ordering(&g);
    let classes = neighborhood_classes(&g, &cover, &ord).map_err(|e| graph_failure(&g, e.to_string()))?;
    let (sub, _) = g.induced_subgraph(&cover).expect("valid");
    let m = count_maximal_cliques(&sub);
    let b = independent_side_bound(cover.len() as u64, ord.gamma as u64, classes.largest_class as u64, Some(m));
    let ok = num_bigint::BigUint::from(classes.independent_size) <= b.value
        && num_bigint::BigUint::from(classes.prior_classes) <= b.prior_classes
        && num_bigint::BigUint::from(classes.posterior_classes) <= b.posterior_classes;
    if !ok {
        return Err(graph_failure(&g, format!("class counts {classes:?} exceed {b:?}")));
    }
    Ok(RuleCounts::new())
}

/// Every S-set of a good ordering has fewer than γ elements, on split
/// graphs reduced by the dominating set kernel.
fn s_bound_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    let start = gen_random_split(rng.gen_range(1..=14), rng.gen());
    let inst = crate::instance::DsInstance::new(start.clone(), rng.gen_range(1..=MAX_TEST_K));
    let reduced = ds_split::kernelize_ds_split(&inst).map_err(|e| graph_failure(&start, e.to_string()))?.0;
    let g = match reduced {
        Outcome::Reduced(r) if r.graph.n() > 0 => r.graph,
        _ => return Ok(RuleCounts::new()),
    };
    let fail = |e: crate::Error| graph_failure(&g, e.to_string());
    let part = independent_maximum_partition(&g).map_err(fail)?;
    let ord = good_ordering(&g, &part).map_err(fail)?;
    let table = compute_s_neighborhoods(&g, &part, &ord).map_err(fail)?;
    if let Some(s) = table.iter().find(|s| s.rest.len() + 1 > ord.gamma) {
        return Err(graph_failure(&g, format!("S-set of vertex {} has {} elements, gamma {}", s.vertex, s.rest.len(), ord.gamma)));
    }
    Ok(RuleCounts::new())
}

/// No `K_{ρ,ρ}` with `ρ = γ + ω + 1`.
fn biclique_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    let n = rng.gen_range(2..=18);
    let g = if rng.gen_bool(0.5) {
        gen_random_bipartite(n, rng.gen()).0
    } else {
        gen_random_weakly_closed(n, rng.gen_range(1..=3), rng.gen())
            .map(|s| s.graph)
            .unwrap_or_else(|_| gen_random_graph(n, 0.2, 0))
    };
    ds_split::rho_biclique_certificate(&g).map_err(|e| graph_failure(&g, e.to_string()))?;
    Ok(RuleCounts::new())
}

/// Witnesses validate, and above the bound one is always found.
fn ramsey_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    let gamma = rng.gen_range(1..=2);
    let (a, b) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
    let n = rng.gen_range(1..=20);
    let g = gen_random_weakly_closed(n, gamma, rng.gen()).map_err(|e| Failure::new(e.to_string()))?.graph;
    let found = clique_or_independent_set(&g, a, b);
    let mut counts = RuleCounts::new();
    match &found {
        Some(w) if !w.validates(&g) => return Err(graph_failure(&g, format!("invalid witness {w:?}"))),
        None if num_bigint::BigUint::from(n) >= r_gamma_bound(a as u64, b as u64, gamma as u64) => {
            return Err(graph_failure(&g, format!("no witness for a={a}, b={b} above the bound")))
        }
        _ => {}
    }
    if num_bigint::BigUint::from(n) >= r_gamma_bound(a as u64, b as u64, gamma as u64) {
        counts.insert("above_bound".into(), 1);
    }
    Ok(counts)
}

/// LP objective against exhaustive search over half-integral assignments.
fn vclp_trial(rng: &mut ChaCha8Rng) -> std::result::Result<RuleCounts, Failure> {
    let g = gen_random_graph(rng.gen_range(1..=8), rng.gen_range(0.1..0.8), rng.gen());
    let lp = vclp_half_integral(&g);
    if !lp.is_feasible(&g) {
        return Err(graph_failure(&g, "LP solution infeasible"));
    }
    let best = exhaustive_half_integral_doubled(&g);
    let formula = lp.v_half().len() as u64 + 2 * lp.v1().len() as u64;
    if lp.objective_doubled() != best || formula != best {
        return Err(graph_failure(&g, format!("LP {} / formula {formula} vs exhaustive {best}", lp.objective_doubled())));
    }
    Ok(RuleCounts::new())
}

/// Minimum of `Σ 2x_v` over feasible `x ∈ {0, ½, 1}^V`.
pub fn exhaustive_half_integral_doubled(g: &Graph) -> u64 {
    let n = g.n();
    let edges = g.edge_list();
    let mut x = vec![0u8; n];
    let mut best = u64::MAX;
    loop {
        if edges.iter().all(|&(u, v)| x[u] + x[v] >= 2) {
            best = best.min(x.iter().map(|&t| t as u64).sum());
        }
        let mut i = 0;
        while i < n && x[i] == 2 {
            x[i] = 0;
            i += 1;
        }
        if i == n {
            return best;
        }
        x[i] += 1;
    }
}

pub fn default_suites() -> Vec<Suite> {
    vec![
        Suite { name: "params", trial: params_trial },
        Suite { name: "neighborhood-classes", trial: neighborhood_class_trial },
        Suite { name: "ds-s-bound", trial: s_bound_trial },
        Suite { name: "biclique-certificate", trial: biclique_trial },
        Suite { name: "vclp", trial: vclp_trial },
        Suite { name: "ramsey", trial: ramsey_trial },
        Suite { name: "kernel-capvc", trial: capvc_trial },
        Suite { name: "kernel-convc-gamma", trial: convc_gamma_trial },
        Suite { name: "kernel-convc-c", trial: convc_c_trial },
        Suite { name: "kernel-coc", trial: coc_trial },
        Suite { name: "kernel-im", trial: im_trial },
        Suite { name: "kernel-ds", trial: ds_trial },
        Suite { name: "kernel-ds-open", trial: ds_open_trial },
    ]
}
