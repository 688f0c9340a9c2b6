use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use shifted_crystal::graph::DEFAULT_MAX_VERTICES;
use shifted_crystal::involutions::{eta, eta_interval, evacuate, reversal};
use shifted_crystal::jdt::rectify;
use shifted_crystal::verify::{self, Options, Suite};
use shifted_crystal::{CrystalGraph, Operator, ShiftedTableau, SkewShape, StrictPartition};

const MAX_VERTICES_VAR: &str = "SHIFTED_CRYSTAL_MAX_VERTICES";

#[derive(Parser)]
#[command(name = "shifted-crystal", version, about = "Shifted tableau crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct TableauArgs {
    /// Tableau file: shape on the first line, filling on the second; `-` reads stdin.
    #[arg(long)]
    tableau: String,
    /// Alphabet size; defaults to the largest letter.
    #[arg(long)]
    n: Option<u8>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List every tableau of a shape.
    Enumerate {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: u8,
        /// Print only the number of tableaux.
        #[arg(long)]
        count: bool,
    },
    /// Apply an operator program such as "F1,E2',S1", left to right.
    Apply {
        #[command(flatten)]
        input: TableauArgs,
        #[arg(long)]
        ops: String,
    },
    /// Rectify by jeu de taquin.
    Rectify {
        #[command(flatten)]
        input: TableauArgs,
        /// Also print the slide record as JSON.
        #[arg(long)]
        record: bool,
    },
    /// Evacuate a straight tableau.
    Evacuate {
        #[command(flatten)]
        input: TableauArgs,
    },
    /// Reversal of a skew tableau.
    Reversal {
        #[command(flatten)]
        input: TableauArgs,
    },
    /// The involution eta, or eta_{p,q} with --interval.
    Eta {
        #[command(flatten)]
        input: TableauArgs,
        /// Letter interval "p,q".
        #[arg(long)]
        interval: Option<String>,
    },
    /// Build a crystal graph and export it.
    Graph {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: u8,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite: golden, cactus, braid, knuth, symmetry, structure or all.
    Verify {
        suite: String,
        /// Restrict graph checks to B(shape, n).
        #[arg(long, requires = "n")]
        shape: Option<String>,
        #[arg(long, requires = "shape")]
        n: Option<u8>,
        /// Longest word for the Knuth check.
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random slide orders per tableau.
        #[arg(long, default_value_t = 50)]
        orders: usize,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Count LRS tableaux of shape lambda/mu and weight nu.
    LrsCount {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long)]
        nu: String,
    },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn parse_tableau(text: &str, n: Option<u8>) -> Result<ShiftedTableau> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let shape = lines.next().ok_or_else(|| anyhow!("tableau file is empty"))?;
    let filling = lines.next().unwrap_or("");
    if let Some(extra) = lines.next() {
        bail!("unexpected line after the filling: {extra:?}");
    }
    Ok(ShiftedTableau::parse_infer(shape, filling, n)?)
}

fn load(args: &TableauArgs) -> Result<ShiftedTableau> {
    let text = read_input(&args.tableau)?;
    parse_tableau(&text, args.n)
}

fn show(t: &ShiftedTableau) -> String {
    format!("{}\n{}\n", t.shape(), t.filling_text())
}

fn parse_shape(s: &str) -> Result<SkewShape> {
    Ok(s.parse::<SkewShape>()?)
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty() && *p != "∅")
        .map(|p| p.parse::<usize>().map_err(|_| anyhow!("bad part {p:?} in {s:?}")))
        .collect()
}

fn max_vertices() -> Result<usize> {
    match std::env::var(MAX_VERTICES_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| anyhow!("{MAX_VERTICES_VAR} must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_MAX_VERTICES),
    }
}

/// Returns `Ok(false)` when a verification suite found a violation. Errors
/// are usage errors: bad input, bad flags, or an unwritable output.
fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::Enumerate { shape, n, count } => {
            let all = ShiftedTableau::enumerate(&parse_shape(&shape)?, n);
            if count {
                writeln!(out, "{}", all.len())?;
            } else {
                for t in &all {
                    writeln!(out, "{}", t.filling_text())?;
                }
            }
        }
        Command::Apply { input, ops } => {
            let t = load(&input)?;
            let program = Operator::parse_program(&ops)?;
            match Operator::run_program(&program, &t)? {
                Some(r) => write!(out, "{}", show(&r))?,
                None => writeln!(out, "none")?,
            }
        }
        Command::Rectify { input, record } => {
            let (r, rec) = rectify(&load(&input)?);
            write!(out, "{}", show(&r))?;
            if record {
                writeln!(out, "{}", serde_json::to_string(&rec)?)?;
            }
        }
        Command::Evacuate { input } => {
            let e = evacuate(&load(&input)?)?;
            write!(out, "{}", show(&e))?;
        }
        Command::Reversal { input } => {
            write!(out, "{}", show(&reversal(&load(&input)?)))?;
        }
        Command::Eta { input, interval } => {
            let t = load(&input)?;
            let r = match interval {
                None => eta(&t),
                Some(iv) => {
                    let parts = parse_parts(&iv)?;
                    let [p, q] = parts[..] else {
                        bail!("--interval takes \"p,q\", got {iv:?}");
                    };
                    eta_interval(&t, p, q)?
                }
            };
            write!(out, "{}", show(&r))?;
        }
        Command::Graph { shape, n, format, out: path } => {
            let g = CrystalGraph::build_with_cap(&parse_shape(&shape)?, n, max_vertices()?)?;
            let text = match format {
                Format::Dot => g.to_dot(),
                Format::Json => g.to_json() + "\n",
            };
            match path {
                Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Verify {
            suite,
            shape,
            n,
            max_size,
            seed,
            orders,
            json,
        } => {
            let suite: Suite = suite.parse()?;
            let graphs = match (shape, n) {
                (Some(s), Some(n)) => Some(vec![(parse_shape(&s)?, n)]),
                _ => None,
            };
            let opts = Options {
                graphs,
                max_size,
                seed,
                orders,
                ..Options::default()
            };
            let report = verify::run_suite(suite, &opts);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                writeln!(out, "{report}")?;
            }
            return Ok(report.passed());
        }
        Command::LrsCount { lambda, mu, nu } => {
            let lambda: StrictPartition = lambda.parse()?;
            let mu: StrictPartition = mu.parse()?;
            let nu = parse_parts(&nu)?;
            let f = shifted_crystal::graph::lrs_count(&lambda, &mu, &nu)?;
            writeln!(out, "{f}")?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
