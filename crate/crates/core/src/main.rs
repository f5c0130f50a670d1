use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::Rational64;
use serde::Serialize;

use quiverstab::heart::{chamber_of, exchange_graph, stab_metric, Intermediate, NoFilter};
use quiverstab::io::{self, FORMAT_VERSION};
use quiverstab::periods::{self, Axis, PeriodTable, PolynomialQuadDifferential, ScanSpec};
use quiverstab::qp::{ginzburg_graded_quiver, mutate};
use quiverstab::rep::{hn_filtration, hn_oracle, CentralCharge, ChargeScalar, HnFactor, Representation};
use quiverstab::surface::{compare_exchange_graphs, flip_graph};

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (format_version 1)");

#[derive(Parser, Debug)]
#[command(name = "quiverstab", version = VERSION, about = "Quivers with potential, hearts, stability and periods")]
struct Cli {
    /// Arithmetic for central charges.
    #[arg(long, global = true, value_enum, default_value_t = Backend::Exact)]
    backend: Backend,
    /// Float comparison tolerance (at least 1000 machine epsilons).
    #[arg(long, global = true, default_value_t = 1e-12, value_parser = parse_tol)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Backend {
    Exact,
    Float,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    let floor = 1e3 * f64::EPSILON;
    if !(t.is_finite() && t >= floor) {
        return Err(format!("tolerance must be a finite number >= {floor:e}"));
    }
    Ok(t)
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Mutate a quiver with potential at a vertex.
    Mutate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cyclic derivatives of the potential.
    Jacobian {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Ginzburg graded quiver with its differential on generators.
    Ginzburg {
        #[arg(long = "in")]
        input: PathBuf,
        /// Calabi-Yau dimension.
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Harder-Narasimhan factors of a representation as `class;phase` rows.
    Hn {
        #[arg(long = "in")]
        input: PathBuf,
        /// Values on the simples, `re,im;re,im;...`.
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        /// Use the brute-force chain enumeration instead.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// DOT export of the graph of hearts reachable by simple tilts.
    ExchangeGraph {
        #[arg(long)]
        seed: PathBuf,
        /// Defaults to unbounded with --intermediate-only, else 3.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        intermediate_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chamber label of an A2 central charge.
    Chamber {
        #[arg(long, allow_hyphen_values = true)]
        imz1: String,
        #[arg(long, allow_hyphen_values = true)]
        imz2: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        rez1: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        rez2: String,
    },
    /// Generalized distance over a probe file.
    Metric {
        #[arg(long)]
        probe: PathBuf,
    },
    /// Triangulations of a disc.
    Surface {
        #[command(subcommand)]
        command: SurfaceCommand,
    },
    /// Zeroes and straight-segment periods of a polynomial differential.
    Periods {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chamber scan over b for z^3 + a z + b.
    Chambers {
        /// `min:max:n` for Re b, then for Im b.
        #[arg(long, num_args = 2, allow_hyphen_values = true, value_names = ["RE", "IM"])]
        grid: Vec<String>,
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        a: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum SurfaceCommand {
    /// DOT export of the flip graph of the m-gon.
    FlipGraph {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quiver with potential of a triangulation.
    Quiver {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare flip and heart exchange graphs.
    Compare {
        #[arg(long)]
        m: usize,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

trait Scalar: ChargeScalar {
    fn parse(s: &str) -> Result<Self>;
}

impl Scalar for Rational64 {
    fn parse(s: &str) -> Result<Self> {
        Ok(io::parse_coefficient(s)?)
    }
}

impl Scalar for f64 {
    fn parse(s: &str) -> Result<Self> {
        let x: f64 = s.trim().parse().with_context(|| format!("bad number `{s}`"))?;
        if !x.is_finite() {
            bail!("bad number `{s}`");
        }
        Ok(x)
    }
}

fn parse_charge<S: Scalar>(s: &str, tol: f64) -> Result<CentralCharge<S>> {
    let values = s
        .split(';')
        .map(|pair| {
            let Some((re, im)) = pair.split_once(',') else {
                bail!("charge entries are `re,im`, got `{pair}`");
            };
            Ok((S::parse(re)?, S::parse(im)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CentralCharge::with_tolerance(values, tol)?)
}

fn hn_rows<S: Scalar>(v: &Representation, charge: &str, tol: f64, oracle: bool) -> Result<String> {
    let z = parse_charge::<S>(charge, tol)?;
    let factors: Vec<HnFactor> = if oracle { hn_oracle(v, &z)? } else { hn_filtration(v, &z)? };
    let mut s = String::from("class;phase\n");
    for f in factors {
        let cls: Vec<String> = f.class.iter().map(usize::to_string).collect();
        s.push_str(&format!("{};{}\n", cls.join(","), f.phase));
    }
    Ok(s)
}

fn chamber_label<S: Scalar>(re1: &str, im1: &str, re2: &str, im2: &str, tol: f64) -> Result<String> {
    let z1 = (S::parse(re1)?, S::parse(im1)?);
    let z2 = (S::parse(re2)?, S::parse(im2)?);
    Ok(format!("{}\n", chamber_of(&z1, &z2, tol)?))
}

fn complex(s: &str) -> Result<Complex64> {
    let coeffs = periods::parse_polynomial(s)?;
    if coeffs.len() > 1 {
        bail!("`{s}` is not a complex number");
    }
    Ok(coeffs[0])
}

#[derive(Serialize)]
struct PeriodsDoc {
    format_version: u32,
    polynomial: String,
    discriminant: [f64; 2],
    zeroes: Vec<[f64; 2]>,
    periods: Vec<PeriodRow>,
    blocked: Vec<[usize; 2]>,
    generic_proxy: bool,
}

#[derive(Serialize)]
struct PeriodRow {
    i: usize,
    j: usize,
    value: [f64; 2],
    branch: [f64; 2],
    nodes: usize,
}

fn periods_json(poly: &str) -> Result<String> {
    let p = PolynomialQuadDifferential::parse(poly)?;
    let table = PeriodTable::new(&p)?;
    let pair = |z: Complex64| [z.re, z.im];
    let doc = PeriodsDoc {
        format_version: FORMAT_VERSION,
        polynomial: p.to_string(),
        discriminant: pair(p.discriminant()),
        zeroes: p.zeroes().iter().copied().map(pair).collect(),
        periods: table
            .entries
            .iter()
            .map(|e| PeriodRow {
                i: e.i,
                j: e.j,
                value: pair(e.value),
                branch: pair(e.branch),
                nodes: e.nodes,
            })
            .collect(),
        blocked: table.blocked.iter().map(|&(i, j)| [i, j]).collect(),
        generic_proxy: table.entries.iter().all(|e| e.value.im.abs() > 1e-9 * e.value.norm()),
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

fn run(cli: Cli) -> Result<()> {
    let tol = cli.tol;
    match cli.command {
        Command::Mutate { input, vertex, out } => {
            let qp = io::qp_from_json(&read(&input)?)?;
            emit(out.as_deref(), &io::qp_to_json(&mutate(&qp, &vertex)?))
        }
        Command::Jacobian { input, out } => {
            let qp = io::qp_from_json(&read(&input)?)?;
            emit(out.as_deref(), &io::relations_to_json(&qp.jacobian_relations()))
        }
        Command::Ginzburg { input, n, out } => {
            let qp = io::qp_from_json(&read(&input)?)?;
            emit(out.as_deref(), &io::graded_quiver_to_json(&ginzburg_graded_quiver(&qp, n)?))
        }
        Command::Hn {
            input,
            charge,
            oracle,
            out,
        } => {
            let v = io::rep_from_json(&read(&input)?)?;
            let text = match cli.backend {
                Backend::Exact => hn_rows::<Rational64>(&v, &charge, tol, oracle)?,
                Backend::Float => hn_rows::<f64>(&v, &charge, tol, oracle)?,
            };
            emit(out.as_deref(), &text)
        }
        Command::ExchangeGraph {
            seed,
            depth,
            intermediate_only,
            out,
        } => {
            let heart = io::heart_from_json(&read(&seed)?)?;
            let g = if intermediate_only {
                exchange_graph(&heart, depth, &Intermediate)
            } else {
                exchange_graph(&heart, Some(depth.unwrap_or(3)), &NoFilter)
            };
            emit(out.as_deref(), &g.to_dot())
        }
        Command::Chamber { imz1, imz2, rez1, rez2 } => {
            let text = match cli.backend {
                Backend::Exact => chamber_label::<Rational64>(&rez1, &imz1, &rez2, &imz2, tol)?,
                Backend::Float => chamber_label::<f64>(&rez1, &imz1, &rez2, &imz2, tol)?,
            };
            emit(None, &text)
        }
        Command::Metric { probe } => {
            let entries = io::probe_from_json(&read(&probe)?)?;
            emit(None, &format!("{}\n", stab_metric(&entries)?))
        }
        Command::Surface { command } => match command {
            SurfaceCommand::FlipGraph { m, out } => emit(out.as_deref(), &flip_graph(m)?.to_dot()),
            SurfaceCommand::Quiver { input, out } => {
                let t = io::triangulation_from_json(&read(&input)?)?;
                emit(out.as_deref(), &io::qp_to_json(&t.quiver()))
            }
            SurfaceCommand::Compare { m } => emit(None, &format!("{}\n", compare_exchange_graphs(m)?.report())),
        },
        Command::Periods { poly, out } => emit(out.as_deref(), &periods_json(&poly)?),
        Command::Chambers { grid, a, out } => {
            let spec = ScanSpec {
                a: complex(&a)?,
                re: grid[0].parse::<Axis>()?,
                im: grid[1].parse::<Axis>()?,
            };
            let scan = periods::a2_chamber_scan(&spec)?;
            let mut buf = Vec::new();
            periods::write_csv(&scan.cells, &mut buf)?;
            emit(out.as_deref(), &String::from_utf8(buf)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = format!("{e:#}").replace('\n', " ");
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
