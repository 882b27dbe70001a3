use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use closure_kernels::generators::{self, GeneratorSpec};
use closure_kernels::io::{parse_instance, write_instance};
use closure_kernels::kernel::ds_split::Domination;
use closure_kernels::oracles::{solve_instance, OracleLimits, Witness, DEFAULT_EDGE_CAP, DEFAULT_VERTEX_CAP};
use closure_kernels::pipeline::{kernelize, ConVcMode, KernelOptions, Params};
use closure_kernels::verify::{default_suites, run_suite};
use closure_kernels::{Error, Instance, Outcome, ProblemKind};

const EXIT_SUITE_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;

#[derive(Parser)]
#[command(name = "ckernel", version, about = "Kernelization for graph problems parameterized by closure numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, m, closure number, weak closure, degeneracy and clique number.
    Params {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run a kernel pipeline; writes the reduced instance and a JSON report.
    Kernel {
        problem: ProblemKind,
        path: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
        #[arg(long, default_value = "gamma")]
        mode: ConVcMode,
        #[arg(long, value_enum, default_value_t = DominationArg::Closed)]
        domination: DominationArg,
        /// Reduced instance file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON report with the trace (stderr when absent).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Solve exactly by brute force.
    Solve {
        problem: ProblemKind,
        path: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
        #[command(flatten)]
        caps: CapArgs,
        /// Write the witness (original labels, one per line) here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Randomized kernel-versus-oracle and invariant suites.
    Verify {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict to these suites (repeatable).
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Directory for counterexample instance files.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
    /// Generate an instance file.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
}

#[derive(Args)]
struct Overrides {
    /// Override the budget from the file.
    #[arg(long)]
    k: Option<usize>,
    /// Override the component size bound from the file.
    #[arg(long)]
    ell: Option<usize>,
}

#[derive(Args)]
struct CapArgs {
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    oracle_cap: usize,
    #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
    oracle_edge_cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum DominationArg {
    Closed,
    Open,
}

#[derive(Args)]
struct GenCommon {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Problem kind written in the header.
    #[arg(long, default_value = "graph")]
    kind: ProblemKind,
    #[arg(long, default_value_t = 0)]
    k: usize,
}

#[derive(Subcommand)]
enum GenFamily {
    Gnp {
        n: usize,
        p: f64,
        #[command(flatten)]
        common: GenCommon,
    },
    Split {
        n: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    Bipartite {
        n: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    WeaklyClosed {
        n: usize,
        gamma: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    TwinRich {
        n: usize,
        base: usize,
        p: f64,
        #[command(flatten)]
        common: GenCommon,
    },
    Tree {
        n: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    Kab {
        a: usize,
        b: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Capacitated vertex cover gadget over a random exact set cover instance.
    CapvcLowerbound {
        #[arg(long, default_value_t = 3)]
        lambda: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        sets: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Independent set composition of `t^q` random multicolored instances.
    IsComposition {
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, default_value_t = 2)]
        q: usize,
        /// Parts per input instance.
        #[arg(long, default_value_t = 1)]
        parts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Parse { .. }) { EXIT_PARSE } else { EXIT_USAGE };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<Instance, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| match e {
        Error::Parse { line, column, message } => Failure {
            code: EXIT_PARSE,
            message: format!("{}:{line}:{column}: {message}", path.display()),
        },
        other => other.into(),
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn load(problem: ProblemKind, path: &Path, o: &Overrides) -> Result<Instance, Failure> {
    let mut inst = read(path)?;
    if inst.kind != problem {
        return Err(usage(format!("{} holds a {} instance, not {problem}", path.display(), inst.kind)));
    }
    if let Some(k) = o.k {
        inst.k = k;
    }
    if o.ell.is_some() {
        inst.ell = o.ell;
    }
    inst.validate()?;
    Ok(inst)
}

fn params_text(p: &Params) -> String {
    let mut s = String::new();
    writeln!(s, "n {}", p.n).unwrap();
    writeln!(s, "m {}", p.m).unwrap();
    writeln!(s, "c {}", p.c).unwrap();
    writeln!(s, "gamma {}", p.gamma).unwrap();
    writeln!(s, "degeneracy {}", p.degeneracy).unwrap();
    match p.omega {
        Some(w) => writeln!(s, "omega {w}").unwrap(),
        None => writeln!(s, "omega skipped").unwrap(),
    }
    writeln!(s, "check gamma<=c {}", p.gamma_at_most_c()).unwrap();
    writeln!(s, "check gamma<=d+1 {}", p.gamma_at_most_degeneracy_plus_one()).unwrap();
    s
}

fn witness_lines(inst: &Instance, w: &Witness) -> Vec<String> {
    let label = |v: usize| inst.labels[v].to_string();
    match w {
        Witness::Vertices(vs) => vs.iter().map(|&v| label(v)).collect(),
        Witness::Assignment { cover, .. } => cover.iter().map(|&v| label(v)).collect(),
        Witness::Edges(es) => es.iter().map(|&(u, v)| format!("{} {}", label(u), label(v))).collect(),
        Witness::Subfamily(ix) => ix.iter().map(|i| i.to_string()).collect(),
    }
}

fn generate(family: GenFamily) -> Result<String, Failure> {
    let graph_family = |spec: GeneratorSpec, c: GenCommon| -> Result<String, Failure> {
        let g = spec.generate(c.seed)?;
        let n = g.n();
        let mut inst = Instance::new(c.kind, g, c.k);
        match c.kind {
            ProblemKind::CapVc => inst.caps = Some(vec![0; n]),
            ProblemKind::Coc => inst.ell = Some(1),
            ProblemKind::Mcis => inst.parts = Some((0..n).collect()),
            _ => {}
        }
        inst.validate()?;
        Ok(write_instance(&inst))
    };
    match family {
        GenFamily::Gnp { n, p, common } => graph_family(GeneratorSpec::Gnp { n, p }, common),
        GenFamily::Split { n, common } => graph_family(GeneratorSpec::Split { n }, common),
        GenFamily::Bipartite { n, common } => graph_family(GeneratorSpec::Bipartite { n }, common),
        GenFamily::WeaklyClosed { n, gamma, common } => {
            graph_family(GeneratorSpec::WeaklyClosed { n, gamma }, common)
        }
        GenFamily::TwinRich { n, base, p, common } => graph_family(GeneratorSpec::TwinRich { n, base, p }, common),
        GenFamily::Tree { n, common } => graph_family(GeneratorSpec::Tree { n }, common),
        GenFamily::Kab { a, b, common } => graph_family(GeneratorSpec::Kab { a, b }, common),
        GenFamily::CapvcLowerbound { lambda, k, sets, seed } => {
            let sc = generators::gen_random_set_cover(lambda, k, sets, seed);
            let gadget = generators::gen_capvc_lowerbound(&sc)?;
            generators::verify_capvc_lowerbound(&gadget, &sc)?;
            let mut text = String::new();
            for (i, s) in sc.family.iter().enumerate() {
                writeln!(text, "c set {i} {s:?}").unwrap();
            }
            text.push_str(&write_instance(&gadget.instance.to_instance()));
            Ok(text)
        }
        GenFamily::IsComposition { t, q, parts, seed } => {
            let count = t.checked_pow(q as u32).ok_or_else(|| usage("t^q overflows"))?;
            let inputs: Vec<Instance> = (0..count as u64)
                .map(|x| generators::gen_random_mcis(parts, 3, seed.wrapping_add(x)))
                .collect();
            let comp = generators::gen_is_composition(&inputs, t, q)?;
            Ok(write_instance(&Instance::new(ProblemKind::Is, comp.graph, comp.k)))
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Params { path, json } => {
            let inst = read(&path)?;
            let p = Params::of(&inst.graph);
            if json {
                println!("{}", serde_json::to_string_pretty(&p).expect("serializes"));
            } else {
                print!("{}", params_text(&p));
            }
            Ok(0)
        }
        Command::Kernel {
            problem,
            path,
            overrides,
            mode,
            domination,
            out,
            report,
        } => {
            let inst = load(problem, &path, &overrides)?;
            let opts = KernelOptions {
                convc_mode: mode,
                domination: match domination {
                    DominationArg::Closed => Domination::Closed,
                    DominationArg::Open => Domination::Open,
                },
            };
            let rep = kernelize(&inst, opts)?;
            let reduced = match &rep.outcome {
                Outcome::Reduced(r) => r.clone(),
                Outcome::Decided(a) => closure_kernels::trace::trivial_instance(problem, *a),
            };
            let text = write_instance(&reduced);
            match out {
                Some(p) => write_file(&p, &text)?,
                None => print!("{text}"),
            }
            let json = rep.to_json();
            match report {
                Some(p) => write_file(&p, &(json + "\n"))?,
                None => eprintln!("{json}"),
            }
            Ok(0)
        }
        Command::Solve {
            problem,
            path,
            overrides,
            caps,
            witness,
        } => {
            let inst = load(problem, &path, &overrides)?;
            let limits = OracleLimits {
                vertices: caps.oracle_cap,
                edges: caps.oracle_edge_cap,
            };
            let res = solve_instance(&inst, limits)?;
            println!("{}", if res.answer { "yes" } else { "no" });
            let lines = res.witness.as_ref().map(|w| witness_lines(&inst, w)).unwrap_or_default();
            match witness {
                Some(p) => write_file(&p, &lines.iter().map(|l| format!("{l}\n")).collect::<String>())?,
                None => lines.iter().for_each(|l| println!("w {l}")),
            }
            Ok(0)
        }
        Command::Verify {
            trials,
            seed,
            suites,
            dump_dir,
        } => {
            let all = default_suites();
            let unknown: Vec<&String> = suites.iter().filter(|s| !all.iter().any(|a| a.name == s.as_str())).collect();
            if !unknown.is_empty() {
                let names: Vec<&str> = all.iter().map(|s| s.name).collect();
                return Err(usage(format!("unknown suite(s) {unknown:?}; available: {}", names.join(", "))));
            }
            let mut failed = false;
            for suite in all.iter().filter(|s| suites.is_empty() || suites.iter().any(|n| n == s.name)) {
                let r = run_suite(suite, trials, seed);
                let status = if r.passed() { "PASS" } else { "FAIL" };
                let rules: Vec<String> = r
                    .rule_counts
                    .iter()
                    .filter(|(k, _)| k.as_str() != "instances")
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                println!("{status} {} trials={} failures={} {}", r.name, r.trials, r.failures, rules.join(" "));
                if let Some((i, f)) = &r.first_failure {
                    failed = true;
                    println!("  trial {i}: {}", f.message);
                    if let (Some(dir), Some(inst)) = (&dump_dir, &f.instance) {
                        std::fs::create_dir_all(dir).map_err(|e| usage(e.to_string()))?;
                        let p = dir.join(format!("{}-seed{seed}-trial{i}.txt", r.name));
                        write_file(&p, &write_instance(inst))?;
                        println!("  counterexample written to {}", p.display());
                    }
                }
            }
            Ok(if failed { EXIT_SUITE_FAILURE } else { 0 })
        }
        Command::Gen { family } => {
            print!("{}", generate(family)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
