//! The `kneser` command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage, input or size error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use kneser_core::format::{write_bridges, write_guide, write_hamiltonian, write_orbits, CycleFormat};
use kneser_core::guide::build_guide_cycle;
use kneser_core::orbits::OrbitPartition;
use kneser_core::perm::{density_report, verify_perm_cycle, write_perm_cycle};
use kneser_core::splice::{build_hamiltonian_with, Pipeline};
use kneser_core::verify::{verify_kneser_cycle, verify_lemmas, CertificateReport};
use kneser_core::{Error, Execution};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "kneser", version, about = "Hamiltonian cycles in Kneser graphs of triangulations and permutations")]
pub struct Cli {
    /// Worker threads for parallel checks (default: single-threaded).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a Hamiltonian cycle of KG(T_n).
    Hamcycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "compact", value_parser = ["compact", "jsonl"])]
        format: String,
    },
    /// Check a cycle certificate.
    Verify {
        #[arg(long)]
        n: usize,
        /// Certificate file; stdin when omitted.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// List rotation orbits.
    Orbits {
        #[arg(long)]
        n: usize,
    },
    /// Print the guide cycle.
    Guide {
        #[arg(long)]
        n: usize,
    },
    /// Print the orbit tree and the chosen bridges.
    Bridges {
        #[arg(long)]
        n: usize,
    },
    /// Run the structural property suites.
    Lemmas {
        #[arg(long)]
        n: usize,
    },
    /// Summary numbers for one n.
    Stats {
        #[arg(long)]
        n: usize,
    },
    /// The permutohedron.
    Perm {
        #[command(subcommand)]
        command: PermCommand,
    },
}

#[derive(Debug, Subcommand)]
enum PermCommand {
    Hamcycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    Density {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    File { path: PathBuf, source: io::Error },
    #[cfg(feature = "parallel")]
    #[error("thread pool: {0}")]
    Pool(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Internal(_)) => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Core(e.into())
    }
}

type Out<'a> = &'a mut dyn Write;

fn open_out<'a>(path: &Option<PathBuf>, stdout: Out<'a>) -> Result<Box<dyn Write + 'a>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|source| CliError::File {
            path: p.clone(),
            source,
        })?)),
        None => Box::new(stdout),
    })
}

fn open_in<'a>(path: &Option<PathBuf>, stdin: &'a mut dyn BufRead) -> Result<Box<dyn BufRead + 'a>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(File::open(p).map_err(|source| CliError::File {
            path: p.clone(),
            source,
        })?)),
        None => Box::new(stdin),
    })
}

fn report(r: &CertificateReport, stdout: Out) -> Result<i32, CliError> {
    writeln!(stdout, "{r}")?;
    Ok(if r.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn stats(n: usize, exec: Execution, out: Out) -> Result<i32, CliError> {
    let part = OrbitPartition::build(n, exec)?;
    writeln!(out, "n={n}")?;
    writeln!(out, "triangulations={}", part.catalog().len())?;
    writeln!(out, "orbits={}", part.len())?;
    let sizes = part.size_multiset();
    let mut hist: Vec<(usize, usize)> = Vec::new();
    for s in sizes {
        match hist.last_mut() {
            Some((size, count)) if *size == s => *count += 1,
            _ => hist.push((s, 1)),
        }
    }
    let hist: Vec<String> = hist.iter().map(|(s, c)| format!("{s}x{c}")).collect();
    writeln!(out, "orbit_sizes={}", hist.join(" "))?;
    if n >= 6 {
        let p = Pipeline::build(n, exec)?;
        writeln!(out, "guide_len={}", p.guide.len())?;
        writeln!(out, "bridges={}", p.factor.bridges().len())?;
        writeln!(out, "max_degree={}", p.factor.max_degree())?;
        let cycle = p.splice()?;
        writeln!(out, "cycle_len={}", cycle.len())?;
        writeln!(out, "checksum={}", cycle.checksum())?;
    } else if n == 5 {
        let cycle = build_hamiltonian_with(n, exec)?;
        writeln!(out, "cycle_len={}", cycle.len())?;
        writeln!(out, "checksum={}", cycle.checksum())?;
    }
    Ok(EXIT_OK)
}

fn dispatch(command: Command, exec: Execution, stdin: &mut dyn BufRead, stdout: Out) -> Result<i32, CliError> {
    match command {
        Command::Hamcycle { n, out, format } => {
            let format: CycleFormat = format.parse()?;
            let cycle = build_hamiltonian_with(n, exec)?;
            write_hamiltonian(&cycle, format, open_out(&out, stdout)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify { n, input } => {
            let r = verify_kneser_cycle(open_in(&input, stdin)?, n, exec)?;
            report(&r, stdout)
        }
        Command::Orbits { n } => {
            write_orbits(&OrbitPartition::build(n, exec)?, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Guide { n } => {
            write_guide(&build_guide_cycle(n)?, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Bridges { n } => {
            let p = Pipeline::build(n, exec)?;
            write_bridges(&p.tree, &p.factor, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Lemmas { n } => report(&verify_lemmas(n, exec)?, stdout),
        Command::Stats { n } => stats(n, exec, stdout),
        Command::Perm { command } => match command {
            PermCommand::Hamcycle { n, out } => {
                write_perm_cycle(n, open_out(&out, stdout)?)?;
                Ok(EXIT_OK)
            }
            PermCommand::Verify { n, input } => report(&verify_perm_cycle(open_in(&input, stdin)?, n, exec)?, stdout),
            PermCommand::Density { n, k } => {
                writeln!(stdout, "{}", density_report(n, k)?)?;
                Ok(EXIT_OK)
            }
        },
    }
}

#[cfg(feature = "parallel")]
fn with_threads<F>(threads: Option<usize>, f: F) -> Result<i32, CliError>
where
    F: FnOnce(Execution) -> Result<i32, CliError> + Send,
{
    match threads {
        None | Some(0) | Some(1) => f(Execution::Sequential),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| CliError::Pool(e.to_string()))?;
            pool.install(|| f(Execution::Parallel))
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn with_threads<F>(_threads: Option<usize>, f: F) -> Result<i32, CliError>
where
    F: FnOnce(Execution) -> Result<i32, CliError> + Send,
{
    f(Execution::Sequential)
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdin: &mut (dyn BufRead + Send), stdout: &mut (dyn Write + Send), stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    let result = with_threads(cli.threads, |exec| {
        let code = dispatch(cli.command, exec, stdin, stdout)?;
        stdout.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
