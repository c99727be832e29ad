use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use hskernel::generate::{gen_from_graph_is, gen_random_degenerate_with, gen_random_digraph};
use hskernel::hypercore::{degeneracy_order, Hypergraph};
use hskernel::io::{self, format_witness};
use hskernel::kernel_below_n::BelowNInstance;
use hskernel::oracles::{self, InstanceRef, WitnessKind};
use hskernel::pipeline::solve;
use hskernel::problem::InputKind;
use hskernel::{Graph, KernelOutcome, Kernelizer, Problem, Registry};

mod stats;

#[derive(Parser)]
#[command(
    name = "hskernel",
    version,
    about = "Kernelization for hitting set and nonblocker instances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Instance {
    /// Kernelizer to use; defaults to below-m for hypergraphs and
    /// nonblocker for digraphs.
    #[arg(long)]
    variant: Option<String>,
    /// Parameter k; defaults to the file's `c k <k>` comment.
    #[arg(short, long, allow_hyphen_values = true)]
    k: Option<i64>,
    file: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Kernelize an instance and print the kernel, its trace and a stats line.
    Kernelize {
        #[command(flatten)]
        instance: Instance,
        /// Write the kernel here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the trace here instead of embedding it as comments.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Kernelize, solve the kernel exactly and lift the answer.
    Solve {
        #[command(flatten)]
        instance: Instance,
        /// Node budget for the exact search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Exact minimum hitting set (hypergraph) or dominating set (digraph).
    Exact {
        file: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Verify a witness file against an instance.
    Check {
        /// hitting, independent or dominating.
        #[arg(long)]
        kind: WitnessKind,
        #[arg(long)]
        witness: PathBuf,
        /// Size limit: at most this for hitting and dominating sets, at
        /// least this for independent sets.
        #[arg(long)]
        bound: usize,
        file: PathBuf,
    },
    /// Print the degeneracy of a hypergraph.
    Degeneracy {
        file: PathBuf,
        /// Also print the peeling order as `vertex degree` lines.
        #[arg(long)]
        order: bool,
    },
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Write the all-negative CNF of a below-n instance.
    ExportCnf {
        #[arg(short, long, allow_hyphen_values = true)]
        k: Option<i64>,
        file: PathBuf,
    },
    /// Kernelize and solve every file in a directory, CSV on stdout.
    Stats {
        #[arg(long)]
        batch: PathBuf,
        #[arg(long)]
        variant: Option<String>,
        #[arg(short, long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// List the registered kernelizers.
    Variants,
}

#[derive(Subcommand)]
enum GenKind {
    /// Random hypergraph with degeneracy at most d.
    Degenerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = hskernel::generate::DEFAULT_MAX_EDGE)]
        max_edge: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random digraph, each arc present with probability p.
    Digraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hypergraph whose hitting sets of size n - k are the complements of
    /// the independent k-sets of a graph given as a digraph file.
    FromGraphIs {
        #[arg(short, long, allow_hyphen_values = true)]
        k: i64,
        file: PathBuf,
    },
}

/// Failures that map to exit code 3.
#[derive(Debug)]
struct InvariantViolation(String);

impl std::fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InvariantViolation {}

fn lib_err(e: hskernel::Error) -> anyhow::Error {
    match e {
        hskernel::Error::Invariant(msg) => InvariantViolation(msg).into(),
        other => other.into(),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub(crate) struct Loaded {
    pub text: String,
    pub graph: Graph,
}

pub(crate) fn load(path: &Path) -> anyhow::Result<Loaded> {
    let text = read(path)?;
    let (graph, warnings) =
        io::parse_graph(&text).with_context(|| format!("cannot parse {}", path.display()))?;
    for w in warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(Loaded { text, graph })
}

pub(crate) fn pick_variant<'r>(
    registry: &'r Registry,
    name: Option<&str>,
    kind: InputKind,
) -> anyhow::Result<&'r dyn Kernelizer> {
    let name = name.unwrap_or(match kind {
        InputKind::Hypergraph => "below-m",
        InputKind::Digraph => "nonblocker",
    });
    let kz = registry.get(name).ok_or_else(|| {
        anyhow!(
            "unknown variant `{name}`; available: {}",
            registry.names().collect::<Vec<_>>().join(", ")
        )
    })?;
    if kz.input_kind() != kind {
        bail!(
            "variant `{name}` expects a {} file, got a {kind}",
            kz.input_kind()
        );
    }
    Ok(kz)
}

pub(crate) fn resolve_k(k: Option<i64>, text: &str, path: &Path) -> anyhow::Result<i64> {
    match k {
        Some(k) => Ok(k),
        None => io::parse_k_comment(text)?
            .ok_or_else(|| anyhow!("no -k given and {} has no `c k` comment", path.display())),
    }
}

fn problem_for(registry: &Registry, inst: &Instance) -> anyhow::Result<(Problem, &'static str)> {
    let loaded = load(&inst.file)?;
    let k = resolve_k(inst.k, &loaded.text, &inst.file)?;
    let kz = pick_variant(registry, inst.variant.as_deref(), loaded.graph.kind())?;
    Ok((kz.problem(loaded.graph, k)?, kz.name()))
}

fn kernel_text(instance: &Problem) -> String {
    let body = match instance {
        Problem::BelowM(i) => io::serialize_hypergraph(&i.hypergraph),
        Problem::BelowN(i) => io::serialize_hypergraph(&i.hypergraph),
        Problem::Nonblocker(i) => io::serialize_digraph(&i.digraph),
    };
    format!("c k {}\n{body}", instance.k())
}

fn write_or_print(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn kernelize(
    registry: &Registry,
    inst: &Instance,
    output: Option<&Path>,
    trace_path: Option<&Path>,
) -> anyhow::Result<u8> {
    let (problem, name) = problem_for(registry, inst)?;
    let kz = registry.get(name).expect("just looked up");
    match kz.kernelize(&problem).map_err(lib_err)? {
        KernelOutcome::Decided { yes, witness } => {
            println!("{}", if yes { "YES" } else { "NO" });
            if let Some(w) = witness {
                println!("v {}", format_witness(&w));
            }
        }
        KernelOutcome::Kernel { instance, trace } => {
            let bounds = kz.bounds(&problem, &instance);
            let mut text = kernel_text(&instance);
            match trace_path {
                Some(p) => fs::write(p, trace.to_string())
                    .with_context(|| format!("cannot write {}", p.display()))?,
                None => {
                    for line in trace.to_string().lines() {
                        text.push_str(&format!("c trace {line}\n"));
                    }
                }
            }
            write_or_print(output, &text)?;
            println!(
                "{} {} {} {}",
                instance.vertex_count(),
                instance.edge_count(),
                instance.k(),
                bounds.vertices
            );
        }
    }
    Ok(0)
}

fn solve_cmd(registry: &Registry, inst: &Instance, budget: Option<u64>) -> anyhow::Result<u8> {
    let (problem, name) = problem_for(registry, inst)?;
    let kz = registry.get(name).expect("just looked up");
    let solution = solve(kz, &problem, budget).map_err(lib_err)?;
    if solution.yes {
        println!("YES");
        let w = solution.witness.expect("pipeline checks yes witnesses");
        println!("v {}", format_witness(&w));
        Ok(0)
    } else {
        println!("NO");
        Ok(1)
    }
}

fn exact(file: &Path, budget: Option<u64>) -> anyhow::Result<u8> {
    let r = match load(file)?.graph {
        Graph::Hypergraph(h) => oracles::min_hitting_set(&h, budget)?,
        Graph::Digraph(d) => oracles::min_dominating_set(&d, budget)?,
    };
    println!("{}", r.optimum);
    println!("v {}", format_witness(&r.witness));
    eprintln!("explored {} nodes", r.explored);
    Ok(0)
}

fn check(kind: WitnessKind, witness: &Path, bound: usize, file: &Path) -> anyhow::Result<u8> {
    let graph = load(file)?.graph;
    let w = io::parse_witness(&read(witness)?)
        .with_context(|| format!("cannot parse {}", witness.display()))?;
    let instance = match &graph {
        Graph::Hypergraph(h) => InstanceRef::Hypergraph(h),
        Graph::Digraph(d) => InstanceRef::Digraph(d),
    };
    if oracles::verify(kind, instance, &w, bound)? {
        println!("VALID");
        Ok(0)
    } else {
        println!("INVALID");
        Ok(1)
    }
}

fn hypergraph_only(graph: Graph, path: &Path) -> anyhow::Result<Hypergraph> {
    match graph {
        Graph::Hypergraph(h) => Ok(h),
        Graph::Digraph(_) => bail!("{} is a digraph; a hypergraph is required", path.display()),
    }
}

fn degeneracy_cmd(file: &Path, show_order: bool) -> anyhow::Result<u8> {
    let h = hypergraph_only(load(file)?.graph, file)?;
    let ord = degeneracy_order(&h);
    println!("{}", ord.degeneracy());
    if show_order {
        for (v, d) in ord.order() {
            println!("{v} {d}");
        }
    }
    Ok(0)
}

fn gen(kind: &GenKind, output: Option<&Path>) -> anyhow::Result<u8> {
    let text = match kind {
        GenKind::Degenerate {
            n,
            d,
            m,
            max_edge,
            seed,
        } => io::serialize_hypergraph(&gen_random_degenerate_with(*n, *d, *m, *max_edge, *seed)?),
        GenKind::Digraph { n, p, seed } => {
            io::serialize_digraph(&gen_random_digraph(*n, *p, *seed)?)
        }
        GenKind::FromGraphIs { k, file } => {
            let Graph::Digraph(g) = load(file)?.graph else {
                bail!("{} must be a digraph file", file.display());
            };
            let inst = gen_from_graph_is(&g, *k);
            format!(
                "c k {}\n{}",
                inst.k,
                io::serialize_hypergraph(&inst.hypergraph)
            )
        }
    };
    write_or_print(output, &text)?;
    Ok(0)
}

fn export_cnf(k: Option<i64>, file: &Path) -> anyhow::Result<u8> {
    let loaded = load(file)?;
    let k = resolve_k(k, &loaded.text, file)?;
    let h = hypergraph_only(loaded.graph, file)?;
    print!("{}", io::export_cnf(&BelowNInstance::new(h, k)));
    Ok(0)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let registry = Registry::default();
    match &cli.command {
        Command::Kernelize {
            instance,
            output,
            trace,
        } => kernelize(&registry, instance, output.as_deref(), trace.as_deref()),
        Command::Solve { instance, budget } => solve_cmd(&registry, instance, *budget),
        Command::Exact { file, budget } => exact(file, *budget),
        Command::Check {
            kind,
            witness,
            bound,
            file,
        } => check(*kind, witness, *bound, file),
        Command::Degeneracy { file, order } => degeneracy_cmd(file, *order),
        Command::Gen { kind, output } => gen(kind, output.as_deref()),
        Command::ExportCnf { k, file } => export_cnf(*k, file),
        Command::Stats {
            batch,
            variant,
            k,
            budget,
        } => stats::run(&registry, batch, variant.as_deref(), *k, *budget),
        Command::Variants => {
            for kz in registry.iter() {
                println!("{:<22} {}", kz.name(), kz.description());
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => {
            let _ = std::io::stdout().flush();
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InvariantViolation>().is_some() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
