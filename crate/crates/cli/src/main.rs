use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cutwidth::format::{parse_graph, parse_partition, serialize_graph, serialize_partition};
use cutwidth::generators::{gen_lower_g, gen_lower_h, gen_lower_k, gen_nolow_gn, gen_random};
use cutwidth::solver::MAX_SOLVER_VERTICES;
use cutwidth::verify::{self, Suite, VerifyConfig};
use cutwidth::{
    compose_simple, compose_theorem, exact_cutwidth_with_budget, optimal_orders, scc_partition,
    BoundCertificate, ComposeError, Multigraph, SolveError, VertexPartition, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(name = "cutwidth", version, about = "Exact cutwidth and partition-based cutwidth bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact cutwidth of a graph file, with an optimal ordering.
    Cutwidth {
        graph: PathBuf,
        /// Also write the optimal ordering to this file.
        #[arg(long)]
        ordering_out: Option<PathBuf>,
        /// Largest connected component the exact solver accepts.
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = parse_budget)]
        budget: usize,
    },
    /// Build a partition-compatible ordering and report its certificate.
    Bound {
        graph: PathBuf,
        #[arg(long, conflicts_with = "scc", required_unless_present = "scc")]
        partition: Option<PathBuf>,
        /// Partition a directed graph into its strongly connected components.
        #[arg(long)]
        scc: bool,
        #[arg(long, value_enum, default_value_t = Method::Theorem)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = parse_budget)]
        budget: usize,
    },
    /// Write a generated graph (and partition) file.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        x: Option<u32>,
        #[arg(long)]
        y: Option<u32>,
        /// Cycle length for `nolow`, vertex count for `random`.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        classes: usize,
        #[arg(long, default_value_t = 3)]
        max_mult: u32,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
        /// Graph output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Partition output path (lower-g and random only).
        #[arg(long)]
        partition_out: Option<PathBuf>,
    },
    /// Run property suites; exits 1 if any check fails.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Simple,
    Theorem,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    LowerG,
    LowerK,
    LowerH,
    Nolow,
    Random,
}

fn parse_budget(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(b) if (1..=MAX_SOLVER_VERTICES).contains(&b) => Ok(b),
        _ => Err(format!("expected an integer in 1..={MAX_SOLVER_VERTICES}")),
    }
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// Failure with its documented exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure { code: 2, message: message.to_string() }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = match e {
            SolveError::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<ComposeError> for Failure {
    fn from(e: ComposeError) -> Self {
        match e {
            ComposeError::Solve(s) => s.into(),
            ComposeError::ClaimViolation { .. } | ComposeError::BoundViolation { .. } => {
                Failure { code: 4, message: format!("internal consistency check failed: {e}") }
            }
            other => Failure::input(other),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Multigraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Cutwidth { graph, ordering_out, budget } => {
            let g = load_graph(&graph)?;
            if g.is_directed() {
                println!("notice converted directed input to its underlying undirected multigraph");
            }
            let result = exact_cutwidth_with_budget(&g.to_undirected(), budget)?;
            println!("cutwidth {}", result.value);
            println!("ordering {}", result.witness);
            if let Some(path) = ordering_out {
                write(&path, &format!("{}\n", result.witness))?;
            }
        }
        Command::Bound { graph, partition, scc, method, budget } => {
            let g = load_graph(&graph)?;
            let p = if scc {
                scc_partition(&g).map_err(|e| Failure::input(format!("--scc: {e}")))?
            } else {
                let path = partition.expect("clap enforces --partition or --scc");
                parse_partition(&read(&path)?, g.vertex_count())
                    .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
            };
            let und = g.to_undirected();
            let (q, classes) = optimal_orders(&und, &p, budget)?;
            let cert = match method {
                Method::Simple => compose_simple(&und, &p, &q, &classes)?,
                Method::Theorem => compose_theorem(&und, &p, &q, &classes)?,
            };
            print_certificate(&cert, &p);
        }
        Command::Gen { family, x, y, n, seed, classes, max_mult, density, out, partition_out } => {
            let need = |v: Option<u32>, flag: &str| {
                v.ok_or_else(|| Failure::input(format!("--{flag} is required for this family")))
            };
            let (g, p): (Multigraph, Option<VertexPartition>) = match family {
                Family::LowerG => {
                    let (g, p) = gen_lower_g(need(x, "x")?, need(y, "y")?).map_err(Failure::input)?;
                    (g, Some(p))
                }
                Family::LowerK => {
                    (gen_lower_k(need(x, "x")?, need(y, "y")?).map_err(Failure::input)?, None)
                }
                Family::LowerH => {
                    (gen_lower_h(need(x, "x")?, need(y, "y")?).map_err(Failure::input)?, None)
                }
                Family::Nolow => {
                    let n = n.ok_or_else(|| Failure::input("--n is required for nolow"))?;
                    (gen_nolow_gn(n).map_err(Failure::input)?, None)
                }
                Family::Random => {
                    let n = n.ok_or_else(|| Failure::input("--n is required for random"))?;
                    let (g, p) =
                        gen_random(seed, n, max_mult, density, classes).map_err(Failure::input)?;
                    (g, Some(p))
                }
            };
            let text = serialize_graph(&g);
            match out {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            if let Some(path) = partition_out {
                let p = p.ok_or_else(|| Failure::input("this family has no partition"))?;
                write(&path, &serialize_partition(&p))?;
            }
        }
        Command::Verify { suite, trials, seed, max_n } => {
            let reports = verify::run(suite, &VerifyConfig { trials, seed, max_n });
            for r in &reports {
                println!("{r}");
            }
            if !reports.iter().all(|r| r.passed()) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_certificate(cert: &BoundCertificate, p: &VertexPartition) {
    println!("bound_kind {}", cert.kind);
    println!("x {}", cert.x);
    println!("y {}", cert.y);
    println!("achieved {}", cert.achieved);
    println!("bound {}", cert.bound_display());
    for (i, dir) in cert.directions.iter().enumerate() {
        let members: Vec<String> = p.classes()[i].iter().map(|v| v.to_string()).collect();
        match cert.choices.get(i) {
            Some(c) => println!(
                "orientation {} {} forward_max={} reverse_max={} class={}",
                i + 1,
                dir,
                c.forward_max,
                c.reverse_max,
                members.join(",")
            ),
            None => println!("orientation {} {} class={}", i + 1, dir, members.join(",")),
        }
    }
    println!("ordering {}", cert.ordering);
}
