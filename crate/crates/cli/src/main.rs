//! `bistellar`: apply, check, expand, and search for moves on simplicial
//! complexes stored as facet lists.
//!
//! Exit status: 0 success, 1 negative answer or illegal request, 2 budget
//! exhausted or verdict unknown, 3 malformed input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bistellar::complex::{format_facets, isomorphic, parse_facets};
use bistellar::expander::{
    barycentric_starrings, barycentric_subdivision, exchange_to_bistellar, factorize_link,
    star_move_transcript, Witness,
};
use bistellar::flip::{prove_equivalent, reduce, verify_certificate, Certificate, Equivalence, Schedule};
use bistellar::moves::{check_move, enumerate_moves};
use bistellar::recognize::{
    audit_links, homology_with_limit, recognize_ball_or_sphere, search_shelling,
    verify_combinatorial_manifold, Budget, ShellingSearch, VerdictKind,
};
use bistellar::{apply_move, Complex, Move, MoveFamily, Simplex, Transcript};
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Parser)]
#[command(name = "bistellar", version, about = "Stellar and bistellar moves on simplicial complexes")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Seed for flip search.
    #[arg(long, global = true, default_value_t = Schedule::DEFAULT_SEED)]
    seed: u64,
    /// Node budget for shelling search.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_SHELLING_NODES)]
    budget: u64,
    /// Walk steps for flip search.
    #[arg(long, global = true, default_value_t = Schedule::DEFAULT_MAX_MOVES)]
    max_moves: u64,
    /// Initial annealing temperature.
    #[arg(long, global = true, default_value_t = Schedule::DEFAULT_TEMPERATURE)]
    temp: f64,
    /// Temperature multiplier per accepted move.
    #[arg(long, global = true, default_value_t = Schedule::DEFAULT_DECAY)]
    decay: f64,
    /// Write the produced complex, transcript or certificate here instead of
    /// standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

impl Opts {
    fn schedule(&self) -> Schedule {
        Schedule {
            seed: self.seed,
            max_moves: self.max_moves,
            temperature: self.temp,
            decay: self.decay,
        }
    }

    fn budget(&self) -> Budget {
        Budget {
            shelling_nodes: self.budget,
            schedule: self.schedule(),
            ..Budget::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    /// Every vertex link is a ball or a sphere.
    Manifold,
    /// The complex itself is a ball or a sphere.
    Recognize,
    /// Every nonempty simplex has a ball or sphere link.
    Links,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a combinatorial manifold, or recognize a ball or sphere.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "manifold")]
        check: Check,
    },
    /// Print the f-vector and Euler characteristic.
    Fvec { file: PathBuf },
    /// Print integral homology.
    Homology { file: PathBuf },
    /// Write the link of a simplex, given as "0 1 2" or "[0 1 2]".
    Link { simplex: String, file: PathBuf },
    /// Write the closed star of a simplex.
    Star { simplex: String, file: PathBuf },
    /// Write the boundary complex.
    Boundary { file: PathBuf },
    /// Apply, check, or list moves.
    Move {
        #[arg(long, conflicts_with_all = ["check", "list"])]
        apply: Option<String>,
        #[arg(long, conflicts_with = "list")]
        check: Option<String>,
        /// One of star, weld, bistellar, exchange, shell, unshell.
        #[arg(long)]
        list: Option<String>,
        file: PathBuf,
    },
    /// Replay a transcript and write the result.
    Replay { transcript: PathBuf, file: PathBuf },
    /// Write the inverse transcript.
    Invert { transcript: PathBuf },
    /// Write the barycentric subdivision.
    Derive {
        file: PathBuf,
        /// Write the starrings producing it instead.
        #[arg(long)]
        starrings: bool,
    },
    /// Bistellar moves performing a starring.
    ExpandStar { simplex: String, file: PathBuf },
    /// Bistellar moves performing a stellar exchange.
    ExpandExchange {
        a: String,
        b: String,
        file: PathBuf,
        /// Transcript of stellar moves reducing L' to a simplex boundary.
        /// Searched with the flip schedule if absent.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Flip search toward a simplex boundary.
    Reduce { file: PathBuf },
    /// Find or check a certificate of bistellar equivalence.
    ProveEquiv {
        first: PathBuf,
        second: PathBuf,
        /// Verify this certificate instead of searching.
        #[arg(long)]
        verify: Option<PathBuf>,
    },
    /// Search for a shelling.
    ShellFind { file: PathBuf },
    /// Search for an isomorphism.
    Iso { first: PathBuf, second: PathBuf },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        source: bistellar::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] bistellar::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Input { .. } | CliError::Usage(_) => 3,
            CliError::Core(e) => match e {
                bistellar::Error::Parse { .. } | bistellar::Error::MalformedSimplex { .. } => 3,
                bistellar::Error::BudgetExhausted { .. } => 2,
                _ => 1,
            },
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_complex(path: &Path) -> CliResult<Complex> {
    parse_facets(&read(path)?).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn read_transcript(path: &Path) -> CliResult<Transcript> {
    Transcript::parse(&read(path)?).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_simplex(text: &str) -> CliResult<Simplex> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    let labels = inner
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| CliError::Usage(format!("bad vertex label `{t}` in `{text}`")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Simplex::new(labels).map_err(CliError::Core)
}

fn parse_move(text: &str) -> CliResult<Move> {
    text.parse::<Move>().map_err(|e| CliError::Usage(format!("`{text}`: {e}")))
}

/// Writes an artifact to `--out`, or to standard output.
fn emit(opts: &Opts, text: &str) -> CliResult<()> {
    match &opts.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verdict_code(kind: VerdictKind) -> u8 {
    match kind {
        VerdictKind::Sphere | VerdictKind::Ball | VerdictKind::Manifold => 0,
        VerdictKind::Unknown => 2,
        VerdictKind::NotManifold | VerdictKind::Other => 1,
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    let opts = &cli.opts;
    match cli.command {
        Command::Validate { file, check } => {
            let m = read_complex(&file)?;
            let budget = opts.budget();
            let v = match check {
                Check::Manifold => verify_combinatorial_manifold(&m, &budget),
                Check::Recognize => recognize_ball_or_sphere(&m, &budget),
                Check::Links => audit_links(&m, &budget),
            };
            print!("{v}");
            Ok(verdict_code(v.kind))
        }
        Command::Fvec { file } => {
            let f = read_complex(&file)?.f_vector();
            let counts: Vec<String> = f.counts.iter().map(u64::to_string).collect();
            println!("f = ({}); chi = {}", counts.join(", "), f.euler);
            Ok(0)
        }
        Command::Homology { file } => {
            let m = read_complex(&file)?;
            let h = homology_with_limit(&m, opts.budget().homology_limit)?;
            print!("{h}");
            Ok(0)
        }
        Command::Link { simplex, file } => {
            let m = read_complex(&file)?;
            emit(opts, &format_facets(&m.link(&parse_simplex(&simplex)?)?))?;
            Ok(0)
        }
        Command::Star { simplex, file } => {
            let m = read_complex(&file)?;
            emit(opts, &format_facets(&m.star(&parse_simplex(&simplex)?)?))?;
            Ok(0)
        }
        Command::Boundary { file } => {
            let m = read_complex(&file)?;
            emit(opts, &format_facets(&m.boundary_complex()?))?;
            Ok(0)
        }
        Command::Move {
            apply,
            check,
            list,
            file,
        } => {
            let m = read_complex(&file)?;
            if let Some(text) = apply {
                let after = apply_move(&m, &parse_move(&text)?)?;
                emit(opts, &format_facets(&after))?;
                Ok(0)
            } else if let Some(text) = check {
                let report = check_move(&m, &parse_move(&text)?);
                println!("{report}");
                if let Some(l) = report.link_factor.as_ref().filter(|_| report.legal) {
                    println!("link factor:");
                    print!("{}", format_facets(l));
                }
                Ok(if report.legal { 0 } else { 1 })
            } else if let Some(name) = list {
                let family = MoveFamily::from_name(&name)
                    .ok_or_else(|| CliError::Usage(format!("unknown move family `{name}`")))?;
                let t: Transcript = enumerate_moves(&m, family).into_iter().collect();
                emit(opts, &t.to_string())?;
                Ok(0)
            } else {
                Err(CliError::Usage("one of --apply, --check, --list is required".into()))
            }
        }
        Command::Replay { transcript, file } => {
            let t = read_transcript(&transcript)?;
            let m = read_complex(&file)?;
            emit(opts, &format_facets(&t.apply(&m)?))?;
            Ok(0)
        }
        Command::Invert { transcript } => {
            emit(opts, &read_transcript(&transcript)?.inverted().to_string())?;
            Ok(0)
        }
        Command::Derive { file, starrings } => {
            let m = read_complex(&file)?;
            let text = if starrings {
                let t: Transcript = barycentric_starrings(&m).into_iter().collect();
                t.to_string()
            } else {
                format_facets(&barycentric_subdivision(&m))
            };
            emit(opts, &text)?;
            Ok(0)
        }
        Command::ExpandStar { simplex, file } => {
            let m = read_complex(&file)?;
            let t = star_move_transcript(&m, &parse_simplex(&simplex)?, &opts.budget())?;
            emit(opts, &t.to_string())?;
            Ok(0)
        }
        Command::ExpandExchange { a, b, file, witness } => {
            let m = read_complex(&file)?;
            let (a, b) = (parse_simplex(&a)?, parse_simplex(&b)?);
            let fact = factorize_link(&m, &a, &b)?;
            let w = match witness {
                Some(path) => Witness::from_transcript(&read_transcript(&path)?)?,
                None => Witness::search(&fact.lprime, &opts.schedule()).ok_or_else(|| {
                    bistellar::Error::BudgetExhausted {
                        what: "witness search for L'".into(),
                        limit: opts.max_moves,
                    }
                })?,
            };
            let t = exchange_to_bistellar(&m, &a, &fact, &w, &opts.budget())?;
            emit(opts, &t.to_string())?;
            Ok(0)
        }
        Command::Reduce { file } => {
            let m = read_complex(&file)?;
            let r = reduce(&m, &opts.schedule());
            emit(opts, &r.transcript.to_string())?;
            let f: Vec<String> = r.complex.f_vector().counts.iter().map(u64::to_string).collect();
            eprintln!("reached f = ({}) after {} steps", f.join(", "), r.steps);
            Ok(if r.reached_simplex_boundary() { 0 } else { 2 })
        }
        Command::ProveEquiv {
            first,
            second,
            verify,
        } => {
            let m1 = read_complex(&first)?;
            let m2 = read_complex(&second)?;
            if let Some(path) = verify {
                let cert = Certificate::parse(&read(&path)?).map_err(|source| CliError::Input {
                    path: path.clone(),
                    source,
                })?;
                return Ok(match verify_certificate(&m1, &m2, &cert) {
                    Ok(()) => {
                        println!("certificate verified");
                        0
                    }
                    Err(e) => {
                        println!("certificate rejected: {e}");
                        1
                    }
                });
            }
            match prove_equivalent(&m1, &m2, &opts.schedule())? {
                Equivalence::Proved(cert) => {
                    verify_certificate(&m1, &m2, &cert)?;
                    emit(opts, &cert.to_string())?;
                    eprintln!("equivalent: certificate verified");
                    Ok(0)
                }
                Equivalence::Disproved => {
                    println!("not equivalent: invariants differ");
                    Ok(1)
                }
                Equivalence::Unknown => {
                    println!("unknown: no certificate found");
                    Ok(2)
                }
            }
        }
        Command::ShellFind { file } => {
            let m = read_complex(&file)?;
            match search_shelling(&m, opts.budget) {
                ShellingSearch::Found(sh) => {
                    emit(opts, &sh.to_string())?;
                    Ok(0)
                }
                ShellingSearch::NoneExists => {
                    println!("no shelling exists");
                    Ok(1)
                }
                ShellingSearch::BudgetExhausted => {
                    println!("unknown: budget of {} nodes exhausted", opts.budget);
                    Ok(2)
                }
            }
        }
        Command::Iso { first, second } => {
            let k = read_complex(&first)?;
            let l = read_complex(&second)?;
            match isomorphic(&k, &l) {
                Some(bij) => {
                    let text: String = bij.iter().map(|(a, b)| format!("{a} {b}\n")).collect();
                    emit(opts, &text)?;
                    Ok(0)
                }
                None => {
                    println!("not isomorphic");
                    Ok(1)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    };
    let _ = std::io::stdout().flush();
    ExitCode::from(code)
}
