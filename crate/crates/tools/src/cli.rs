//! The `sps` command line.
//!
//! Exit codes: 0 on success, 1 when a verification finds failures, 2 on
//! usage or IO errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sps_core::constructions::{generate_with, Dedup};
use sps_core::swing::{find_prime_projectivity, find_swing_sequence};
use sps_core::{con, fixture, generate_patch_lattices, join_irreducible_congruences, PlanarLattice, PrimeInterval};

use crate::catalog::{file_name, lattice_id, write_family};
use crate::dot::to_dot;
use crate::error::CliError;
use crate::io;
use crate::suite::{run_on_subjects, run_persistence, Subject, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "sps",
    version,
    about = "Slim, planar, semimodular lattices and congruence spreading"
)]
struct Cli {
    /// Reserved; every algorithm is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate patch lattices by fork insertion and write a catalog.
    Gen {
        #[arg(long)]
        forks: usize,
        #[arg(long)]
        out: PathBuf,
        /// Identify mirror images (default) or keep both.
        #[arg(long, value_enum, default_value_t = DedupArg::Reflection)]
        dedup: DedupArg,
    },
    /// Run a verification suite; prints JSON lines.
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Check the generated family up to this many fork insertions.
        #[arg(long, conflicts_with_all = ["lattice", "fixture"])]
        forks: Option<usize>,
        #[command(flatten)]
        input: OptionalInput,
    },
    /// Find a shortest witness between two prime intervals.
    Seq {
        #[command(flatten)]
        input: Input,
        /// Bottom and top of the source prime, as `a,b`.
        #[arg(long)]
        from: String,
        /// Bottom and top of the target prime, as `c,d`.
        #[arg(long)]
        to: String,
        /// Search prime-perspectivity chains instead of swing witnesses.
        #[arg(long)]
        projectivity: bool,
    },
    /// Print `con(p)`, or the order of join-irreducible congruences.
    Con {
        #[command(flatten)]
        input: Input,
        /// Prime interval `a,b`; omit to list J(Con L).
        #[arg(long)]
        prime: Option<String>,
    },
    /// Write a lattice as JSON or DOT.
    Export {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print structural statistics as JSON.
    Stats {
        #[arg(long, conflicts_with_all = ["lattice", "fixture"])]
        forks: Option<usize>,
        #[command(flatten)]
        input: OptionalInput,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DedupArg {
    Reflection,
    Diagram,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Lattice file in the JSON schema.
    #[arg(long)]
    lattice: Option<PathBuf>,
    /// Built-in fixture: B2, N5, M3, S7, C<n>, C<a>xC<b>.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct OptionalInput {
    #[arg(long)]
    lattice: Option<PathBuf>,
    #[arg(long)]
    fixture: Option<String>,
}

fn load_input(lattice: &Option<PathBuf>, fixture_name: &Option<String>) -> Result<Subject, CliError> {
    match (lattice, fixture_name) {
        (Some(path), _) => Ok(Subject {
            name: path.display().to_string(),
            depth: None,
            lattice: io::load(path)?,
        }),
        (None, Some(name)) => Ok(Subject {
            name: name.clone(),
            depth: None,
            lattice: fixture(name).map_err(|e| CliError::Usage(e.to_string()))?,
        }),
        (None, None) => Err(CliError::Usage(String::from(
            "one of --lattice or --fixture is required",
        ))),
    }
}

fn family(max_forks: usize) -> Result<Vec<Subject>, CliError> {
    Ok(generate_patch_lattices(max_forks)?
        .into_iter()
        .enumerate()
        .map(|(i, g)| Subject {
            name: file_name(i).trim_end_matches(".json").to_string(),
            depth: Some(g.depth),
            lattice: g.lattice,
        })
        .collect())
}

fn subjects(forks: Option<usize>, input: &OptionalInput) -> Result<Vec<Subject>, CliError> {
    match forks {
        Some(k) => family(k),
        None => Ok(vec![load_input(&input.lattice, &input.fixture)?]),
    }
}

/// `a,b` to a prime interval, elements by label or index.
fn parse_prime(l: &PlanarLattice, text: &str) -> Result<PrimeInterval, CliError> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("expected `bottom,top`, got `{text}`")))?;
    let element = |name: &str| {
        l.element(name.trim())
            .ok_or_else(|| CliError::Usage(format!("no element `{}`", name.trim())))
    };
    PrimeInterval::new(l, element(a)?, element(b)?).map_err(|e| CliError::Usage(e.to_string()))
}

fn stats_json(s: &Subject) -> serde_json::Value {
    let l = &s.lattice;
    let ji = join_irreducible_congruences(l);
    json!({
        "lattice": s.name,
        "depth": s.depth,
        "n": l.len(),
        "covers": l.cover_count(),
        "primes": l.prime_intervals().len(),
        "height": l.height(l.top()),
        "dual_atoms": l.lower_covers(l.top()).len(),
        "semimodular": l.is_semimodular(),
        "slim": l.is_slim(),
        "sps": l.is_sps(),
        "patch": l.is_patch_lattice(),
        "ji_congruences": ji.len(),
        "ji_max_upper_covers": ji.max_upper_cover_count(),
        "id": lattice_id(l),
    })
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Gen { forks, out: dir, dedup } => {
            let dedup = match dedup {
                DedupArg::Reflection => Dedup::DiagramUpToReflection,
                DedupArg::Diagram => Dedup::Diagram,
            };
            let family = generate_with(forks, dedup, |_, _, _| {})?;
            let catalog = write_family(&dir, &family)?;
            writeln!(out, "wrote {} lattices to {}", catalog.entries.len(), dir.display())?;
            Ok(EXIT_OK)
        }
        Command::Check { suite, forks, input } => {
            let outcome = match (suite, forks) {
                (Suite::Persistence, Some(k)) => run_persistence(k)?,
                _ => run_on_subjects(suite, &subjects(forks, &input)?),
            };
            out.write_all(outcome.text().as_bytes())?;
            Ok(if outcome.passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Seq {
            input,
            from,
            to,
            projectivity,
        } => {
            let s = load_input(&input.lattice, &input.fixture)?;
            let (p, q) = (parse_prime(&s.lattice, &from)?, parse_prime(&s.lattice, &to)?);
            let found = if projectivity {
                find_prime_projectivity(&s.lattice, p, q)
            } else {
                find_swing_sequence(&s.lattice, p, q)
            };
            match found {
                Some(seq) => writeln!(out, "{}", seq.describe(&s.lattice))?,
                None => writeln!(out, "none")?,
            }
            Ok(EXIT_OK)
        }
        Command::Con { input, prime } => {
            let s = load_input(&input.lattice, &input.fixture)?;
            let l = &s.lattice;
            let names = |xs: &[sps_core::ElementId]| xs.iter().map(|&x| l.label(x)).collect::<Vec<_>>();
            let value = match prime {
                Some(text) => {
                    let p = parse_prime(l, &text)?;
                    let blocks: Vec<Vec<&str>> = con(l, p).blocks().iter().map(|b| names(b)).collect();
                    json!({ "prime": l.describe(p), "blocks": blocks })
                }
                None => {
                    let ji = join_irreducible_congruences(l);
                    let classes: Vec<serde_json::Value> = (0..ji.len())
                        .map(|i| {
                            let primes: Vec<String> = ji
                                .class_of_prime
                                .iter()
                                .filter(|&(_, &c)| c == i)
                                .map(|(p, _)| l.describe(*p))
                                .collect();
                            json!({
                                "index": i,
                                "generator": l.describe(ji.generators[i]),
                                "primes": primes,
                                "upper_covers": ji.upper_covers(i).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    json!({ "ji_congruences": classes })
                }
            };
            writeln!(out, "{value}")?;
            Ok(EXIT_OK)
        }
        Command::Export {
            input,
            format,
            out: path,
        } => {
            let s = load_input(&input.lattice, &input.fixture)?;
            let text = match format {
                Format::Json => io::to_json(&s.lattice),
                Format::Dot => to_dot(&s.lattice),
            };
            match path {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|source| crate::error::IoError::Write { path, source })?
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Stats { forks, input } => {
            for s in subjects(forks, &input)? {
                writeln!(out, "{}", stats_json(&s))?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first), runs the command writing to `out`
/// and errors to `err`, and returns the exit code.
pub fn main_with(
    args: impl IntoIterator<Item = impl Into<OsString> + Clone>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
