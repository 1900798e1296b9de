//! Command-line driver: generate family graphs, take exterior powers,
//! check balance and switching equivalence, build permutation covers,
//! and run the verification suites.
//!
//! Exit codes: 0 success/true, 1 semantic false (unbalanced, not
//! equivalent, counterexamples found), 2 usage or I/O errors.
//!
//! Artifacts go to stdout or `-o`; diagnostics go to stderr. Identical
//! invocations produce byte-identical artifacts: sampling is seeded and
//! report output omits wall-clock timing.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sgwedge::algebra::DEFAULT_MAX_ROWS;
use sgwedge::covers::{build_cover, gain_graph, verify_cover_isomorphism_bounded};
use sgwedge::exterior::wedge_power;
use sgwedge::families::{generate, Family, FamilySpec, Signing};
use sgwedge::io::{
    parse_sg, render_report, reports_to_json, wedge_map_json, wedge_to_dot, wedge_to_json,
    write_sg,
};
use sgwedge::oracle::{
    check_cover_isomorphisms, check_exterior_identities, sweep_balance_characterization,
    verify_fact_suite, FactSuiteConfig, SweepOptions, VerificationReport,
};
use sgwedge::{BalanceReport, Error, SignedGraph};

#[derive(Parser)]
#[command(
    name = "sgwedge",
    version,
    about = "Exterior powers of signed graphs: generate, transform, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a signed graph from a named family
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Compute the exterior k-th power of a graph
    Wedge {
        /// Power to take, between 1 and n-1
        #[arg(short)]
        k: usize,
        /// Input graph file (stdin when omitted)
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Output format. "sg" labels vertices by subset rank and, when
        /// writing to a file, adds a .map.json sidecar giving the
        /// rank-to-subset map
        #[arg(long, value_enum, default_value_t = Format::Sg)]
        format: Format,
    },
    /// Decide balance (or anti-balance) and print a witness
    Balance {
        /// Input graph file (stdin when omitted)
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Check anti-balance (balance of the negated graph) instead
        #[arg(long)]
        anti: bool,
    },
    /// Decide whether two graphs are switching equivalent
    SwitchEquiv {
        /// First graph file
        #[arg(short)]
        a: PathBuf,
        /// Second graph file
        #[arg(short)]
        b: PathBuf,
    },
    /// Build the permutation cover of the gain graph and verify it
    /// against the diagonal-deleted Cartesian power
    Cover {
        /// Cover degree: the k of the k-subsets
        #[arg(short)]
        k: usize,
        /// Input graph file (stdin when omitted)
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Output file for the cover graph (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites and report counterexamples
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest vertex count for the characterization sweep
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        /// Per-graph signing budget for the sweep: exhaustive up to the
        /// budget, seeded sampling beyond it
        #[arg(long, default_value_t = 1024)]
        budget: usize,
        /// Seed for all sampled checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the reports as JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Path on n vertices
    Path {
        n: usize,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// Cycle on n >= 3 vertices
    Cycle {
        n: usize,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// Complete graph on n vertices
    Complete {
        n: usize,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// Hypercube with the given dimension
    Hypercube {
        dim: usize,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// Johnson graph: k-subsets of an n-set, adjacent when the
    /// intersection has size l
    Johnson {
        n: usize,
        k: usize,
        l: usize,
        #[command(flatten)]
        opts: GenOpts,
    },
}

#[derive(Args)]
struct GenOpts {
    /// Edge signing
    #[arg(long, value_enum, default_value_t = SignArg::AllPositive)]
    sign: SignArg,
    /// Seed for --sign random
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge to negate for --sign one-negative, as "U,V" (defaults to
    /// (0, n-1) when that edge exists, else the last edge)
    #[arg(long, value_parser = parse_edge_arg)]
    neg_edge: Option<(usize, usize)>,
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy)]
enum SignArg {
    AllPositive,
    AllNegative,
    OneNegative,
    Random,
}

#[derive(ValueEnum, Clone, Copy)]
enum Format {
    Sg,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy)]
enum Suite {
    All,
    Theorem1,
    Facts,
    Algebra,
    Covers,
}

fn parse_edge_arg(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected U,V got {s:?}"))?;
    let u = a.trim().parse().map_err(|_| format!("bad vertex {a:?}"))?;
    let v = b.trim().parse().map_err(|_| format!("bad vertex {b:?}"))?;
    Ok((u, v))
}

impl GenOpts {
    fn signing(&self) -> Signing {
        match self.sign {
            SignArg::AllPositive => Signing::AllPositive,
            SignArg::AllNegative => Signing::AllNegative,
            SignArg::OneNegative => Signing::OneNegative {
                edge: self.neg_edge,
            },
            SignArg::Random => Signing::Random { seed: self.seed },
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Gen { family } => {
            let (spec, output) = match family {
                GenFamily::Path { n, opts } => (
                    FamilySpec {
                        family: Family::Path { n },
                        signing: opts.signing(),
                    },
                    opts.output,
                ),
                GenFamily::Cycle { n, opts } => (
                    FamilySpec {
                        family: Family::Cycle { n },
                        signing: opts.signing(),
                    },
                    opts.output,
                ),
                GenFamily::Complete { n, opts } => (
                    FamilySpec {
                        family: Family::Complete { n },
                        signing: opts.signing(),
                    },
                    opts.output,
                ),
                GenFamily::Hypercube { dim, opts } => (
                    FamilySpec {
                        family: Family::Hypercube { dim },
                        signing: opts.signing(),
                    },
                    opts.output,
                ),
                GenFamily::Johnson { n, k, l, opts } => (
                    FamilySpec {
                        family: Family::Johnson { n, k, l },
                        signing: opts.signing(),
                    },
                    opts.output,
                ),
            };
            let g = generate(&spec)?;
            write_output(output.as_deref(), &write_sg(&g))?;
            Ok(0)
        }

        Command::Wedge {
            k,
            input,
            output,
            format,
        } => {
            let g = read_graph(input.as_deref())?;
            let w = wedge_power(&g, k)?;
            let rendered = match format {
                Format::Sg => write_sg(w.graph()),
                Format::Json => wedge_to_json(&w),
                Format::Dot => wedge_to_dot(&w),
            };
            write_output(output.as_deref(), &rendered)?;
            if matches!(format, Format::Sg) {
                match &output {
                    Some(path) => {
                        let sidecar = PathBuf::from(format!("{}.map.json", path.display()));
                        std::fs::write(&sidecar, wedge_map_json(&w))?;
                        eprintln!("rank-to-subset map written to {}", sidecar.display());
                    }
                    None => eprintln!(
                        "note: vertices are subset ranks; use -o for a .map.json sidecar or --format json"
                    ),
                }
            }
            Ok(0)
        }

        Command::Balance { input, anti } => {
            let g = read_graph(input.as_deref())?;
            let report = if anti {
                g.is_antibalanced()
            } else {
                g.is_balanced()
            };
            match (&report, anti) {
                (BalanceReport::Balanced(d), false) => {
                    println!("balanced");
                    println!("switching: {d}");
                }
                (BalanceReport::Balanced(d), true) => {
                    println!("anti-balanced");
                    println!("switching of the negation: {d}");
                }
                (BalanceReport::Unbalanced(cycle), false) => {
                    println!("unbalanced");
                    println!("negative cycle: {}", join(cycle));
                }
                (BalanceReport::Unbalanced(cycle), true) => {
                    println!("not anti-balanced");
                    println!("negative cycle of the negation: {}", join(cycle));
                }
            }
            Ok(if report.is_balanced() { 0 } else { 1 })
        }

        Command::SwitchEquiv { a, b } => {
            let ga = parse_sg(&std::fs::read_to_string(&a)?)?;
            let gb = parse_sg(&std::fs::read_to_string(&b)?)?;
            match ga.switching_equivalent(&gb) {
                Ok(Some(d)) => {
                    println!("equivalent");
                    println!("switching: {d}");
                    Ok(0)
                }
                Ok(None) => {
                    println!("not equivalent");
                    Ok(1)
                }
                Err(Error::UnderlyingMismatch) => {
                    println!("not equivalent (underlying graphs differ)");
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }

        Command::Cover { k, input, output } => {
            let g = read_graph(input.as_deref())?;
            let phi = gain_graph(&g, k)?;
            let cover = build_cover(&phi)?;
            write_output(output.as_deref(), &write_sg(cover.graph()))?;
            let ok = verify_cover_isomorphism_bounded(&g, k, size_limit())?;
            eprintln!(
                "cover: {} vertices, {} edges",
                cover.graph().n(),
                cover.graph().num_edges()
            );
            if k == 2 {
                eprintln!("k=2: this is the signed double cover");
            }
            eprintln!("isomorphic: {ok}");
            Ok(if ok { 0 } else { 1 })
        }

        Command::Verify {
            suite,
            nmax,
            budget,
            seed,
            json,
        } => {
            let started = Instant::now();
            let sweep_opts = SweepOptions {
                n_max: nmax,
                signing_budget: budget,
                seed,
                ..SweepOptions::default()
            };
            let mut cfg = FactSuiteConfig {
                seed,
                ..FactSuiteConfig::default()
            };
            if let Some(limit) = env_size_limit() {
                cfg.identity_max_rows = limit;
            }
            let reports: Vec<VerificationReport> = match suite {
                Suite::Theorem1 => vec![sweep_balance_characterization(&sweep_opts)?],
                Suite::Facts => verify_fact_suite(&cfg)?,
                Suite::Algebra => vec![check_exterior_identities(&cfg)?],
                Suite::Covers => vec![check_cover_isomorphisms(&cfg)?],
                Suite::All => {
                    let mut all = vec![sweep_balance_characterization(&sweep_opts)?];
                    all.extend(verify_fact_suite(&cfg)?);
                    all
                }
            };
            if json {
                print!("{}", reports_to_json(&reports));
            } else {
                for r in &reports {
                    print!("{}", render_report(r));
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            eprintln!(
                "{} reports, {} failed, {} ms",
                reports.len(),
                failed,
                started.elapsed().as_millis()
            );
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn read_graph(path: Option<&std::path::Path>) -> Result<SignedGraph, Box<dyn std::error::Error>> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    Ok(parse_sg(&text)?)
}

fn write_output(path: Option<&std::path::Path>, content: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn env_size_limit() -> Option<usize> {
    std::env::var("SGWEDGE_MAX_ROWS").ok()?.parse().ok()
}

fn size_limit() -> usize {
    env_size_limit().unwrap_or(DEFAULT_MAX_ROWS)
}

fn join(items: &[usize]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
