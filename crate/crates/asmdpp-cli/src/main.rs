//! Command-line surface for the `asmdpp` engine: validation, statistics,
//! conversions, exhaustive enumeration, and verification runs.
//!
//! Exit codes are a stable contract: 0 for success or a passing
//! verification, 1 for domain failures (invalid objects, conversion
//! errors, failed verification), 2 for usage and parse errors.

use asmdpp::{
    check_nonintersecting, dpp_to_paths, dpp_to_perm, paths_to_dpp, perm_to_dpp,
    verify_bijection_exhaustive, verify_equidistribution, Asm, Dpp, InversionWord, PathFamily,
    Permutation, Projection, StatQuadruple,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

mod input;
mod random;

use input::{read_asm, read_dpp, read_invword, read_paths, read_perm, read_source};

#[derive(Parser)]
#[command(
    name = "asmdpp",
    version,
    about = "Alternating sign matrices, descending plane partitions, and their statistics",
    after_help = "Objects are read from FILE or standard input. Exit codes: 0 ok/PASS, 1 invalid/FAIL, 2 usage or parse error."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on enumeration/verification sizes (also settable via DPP_MAX_N).
    #[arg(long, global = true)]
    max_n: Option<u32>,
    /// Partition exhaustive sweeps across threads.
    #[arg(long, global = true)]
    parallel: bool,
    /// Seed for randomized property sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ObjectKind {
    Dpp,
    Asm,
    Perm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertKind {
    Perm,
    Matrix,
    Invword,
    Dpp,
    Paths,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    Equidistribution,
    Bijection,
    Paths,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProjectionArg {
    Triplet,
    Quadruple,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an object and report the first violated condition.
    Validate {
        #[arg(value_enum)]
        kind: ObjectKind,
        file: Option<PathBuf>,
    },
    /// Print the statistic quadruple (p, m, t, b) of an object.
    Stats {
        #[arg(value_enum)]
        kind: ObjectKind,
        file: Option<PathBuf>,
        /// Dimension n (required for DPPs).
        #[arg(long)]
        dim: Option<u32>,
    },
    /// Convert between object representations.
    Convert {
        #[arg(value_enum)]
        from: ConvertKind,
        #[arg(value_enum)]
        to: ConvertKind,
        file: Option<PathBuf>,
        /// Dimension n (required for perm<->dpp).
        #[arg(long)]
        dim: Option<u32>,
    },
    /// Stream all objects of a family at size n in canonical order.
    Enumerate {
        #[arg(value_enum)]
        kind: ObjectKind,
        n: u32,
        /// Print only the cardinality.
        #[arg(long)]
        count_only: bool,
    },
    /// Run an exhaustive verification and exit 0 on PASS, 1 on FAIL.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        n: u32,
        /// Statistics to compare for equidistribution.
        #[arg(long, value_enum, default_value_t = ProjectionArg::Quadruple)]
        projection: ProjectionArg,
        /// Additional randomized round-trip instances (paths target).
        #[arg(long, default_value_t = 0)]
        random: u64,
    },
}

/// Resolved run configuration: flags plus the DPP_MAX_N environment
/// override.
struct Config {
    format: Format,
    max_n: Option<u32>,
    parallel: bool,
    seed: u64,
}

enum CliError {
    /// Domain failure: invalid object, conversion error, FAIL verdict.
    Domain(String),
    /// Usage or parse error.
    Usage(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Domain(m) | CliError::Usage(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match resolve_config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}", e.message());
            return ExitCode::from(e.code());
        }
    };
    match run(cli.command, &config) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn resolve_config(cli: &Cli) -> Result<Config, CliError> {
    let env_cap = match std::env::var("DPP_MAX_N") {
        Ok(v) => Some(v.trim().parse::<u32>().map_err(|_| {
            CliError::Usage(format!("DPP_MAX_N must be a nonnegative integer, got {v:?}"))
        })?),
        Err(_) => None,
    };
    let max_n = match (cli.max_n, env_cap) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    Ok(Config { format: cli.format, max_n, parallel: cli.parallel, seed: cli.seed })
}

fn run(command: Command, config: &Config) -> Result<(), CliError> {
    match command {
        Command::Validate { kind, file } => cmd_validate(kind, file, config),
        Command::Stats { kind, file, dim } => cmd_stats(kind, file, dim, config),
        Command::Convert { from, to, file, dim } => cmd_convert(from, to, file, dim, config),
        Command::Enumerate { kind, n, count_only } => cmd_enumerate(kind, n, count_only, config),
        Command::Verify { target, n, projection, random } => {
            cmd_verify(target, n, projection, random, config)
        }
    }
}

fn check_cap(n: u32, config: &Config) -> Result<(), CliError> {
    if let Some(cap) = config.max_n {
        if n > cap {
            return Err(CliError::Usage(format!("n = {n} exceeds the configured cap {cap}")));
        }
    }
    Ok(())
}

fn cmd_validate(kind: ObjectKind, file: Option<PathBuf>, config: &Config) -> Result<(), CliError> {
    let source = read_source(file)?;
    let (description, outcome) = match kind {
        ObjectKind::Dpp => match read_dpp(&source, config.format == Format::Json) {
            Ok(d) => (format!("valid DPP: {} rows, {} parts", d.row_count(), d.part_count()), Ok(())),
            Err(e) => (String::new(), Err(e)),
        },
        ObjectKind::Asm => match read_asm(&source, config.format == Format::Json) {
            Ok(a) => (format!("valid ASM of dimension {}", a.dim()), Ok(())),
            Err(e) => (String::new(), Err(e)),
        },
        ObjectKind::Perm => match read_perm(&source, config.format == Format::Json) {
            Ok(s) => (format!("valid permutation of size {}", s.size()), Ok(())),
            Err(e) => (String::new(), Err(e)),
        },
    };
    match outcome {
        Ok(()) => {
            match config.format {
                Format::Text => println!("{description}"),
                Format::Json => println!("{}", serde_json::json!({ "valid": true })),
            }
            Ok(())
        }
        Err(e) => {
            if config.format == Format::Json && matches!(e, CliError::Domain(_)) {
                println!("{}", serde_json::json!({ "valid": false, "error": e.message() }));
            }
            Err(e)
        }
    }
}

fn print_stats(q: StatQuadruple, config: &Config) {
    match config.format {
        Format::Text => println!("{q}"),
        Format::Json => println!("{}", serde_json::to_string(&q).expect("stats serialize")),
    }
}

fn cmd_stats(
    kind: ObjectKind,
    file: Option<PathBuf>,
    dim: Option<u32>,
    config: &Config,
) -> Result<(), CliError> {
    let source = read_source(file)?;
    let json = config.format == Format::Json;
    let q = match kind {
        ObjectKind::Dpp => {
            let d = read_dpp(&source, json)?;
            let n = dim.ok_or_else(|| {
                CliError::Usage(String::from("--dim <n> is required for DPP statistics"))
            })?;
            d.stats(n).map_err(|e| CliError::Domain(format!("{}: {e}", e.name())))?
        }
        ObjectKind::Asm => read_asm(&source, json)?.stats(),
        ObjectKind::Perm => Asm::from(&read_perm(&source, json)?).stats(),
    };
    print_stats(q, config);
    Ok(())
}

fn cmd_convert(
    from: ConvertKind,
    to: ConvertKind,
    file: Option<PathBuf>,
    dim: Option<u32>,
    config: &Config,
) -> Result<(), CliError> {
    let source = read_source(file)?;
    let json = config.format == Format::Json;
    let require_dim = || {
        dim.ok_or_else(|| {
            CliError::Usage(String::from("--dim <n> is required for perm<->dpp conversions"))
        })
    };
    let domain = |e: asmdpp::BijectionError| CliError::Domain(format!("{}: {e}", e.name()));
    match (from, to) {
        (ConvertKind::Perm, ConvertKind::Matrix) => {
            print_asm(&Asm::from(&read_perm(&source, json)?), config);
        }
        (ConvertKind::Matrix, ConvertKind::Perm) => {
            let a = read_asm(&source, json)?;
            let s = a.to_permutation().map_err(|e| CliError::Domain(format!("{}: {e}", e.name())))?;
            print_perm(&s, config);
        }
        (ConvertKind::Perm, ConvertKind::Invword) => {
            let w = read_perm(&source, json)?.inversion_word();
            print_invword(&w, config);
        }
        (ConvertKind::Invword, ConvertKind::Perm) => {
            print_perm(&read_invword(&source, json)?.to_permutation(), config);
        }
        (ConvertKind::Dpp, ConvertKind::Paths) => {
            print_paths(&dpp_to_paths(&read_dpp(&source, json)?), config);
        }
        (ConvertKind::Paths, ConvertKind::Dpp) => {
            let f = read_paths(&source)?;
            let d = paths_to_dpp(&f).map_err(|e| CliError::Domain(format!("{}: {e}", e.name())))?;
            print_dpp(&d, config);
        }
        (ConvertKind::Perm, ConvertKind::Dpp) => {
            let s = read_perm(&source, json)?;
            let d = perm_to_dpp(&s, require_dim()?).map_err(domain)?;
            print_dpp(&d, config);
        }
        (ConvertKind::Dpp, ConvertKind::Perm) => {
            let d = read_dpp(&source, json)?;
            let s = dpp_to_perm(&d, require_dim()?).map_err(domain)?;
            print_perm(&s, config);
        }
        _ => {
            return Err(CliError::Usage(String::from(
                "unsupported conversion; supported pairs: perm<->matrix, perm<->invword, dpp<->paths, perm<->dpp",
            )));
        }
    }
    Ok(())
}

fn print_dpp(d: &Dpp, config: &Config) {
    match config.format {
        Format::Text => {
            if d.is_empty() {
                println!("(empty)");
            } else {
                println!("{d}");
            }
        }
        Format::Json => println!("{}", serde_json::to_string(d).expect("dpp serialize")),
    }
}

fn print_asm(a: &Asm, config: &Config) {
    match config.format {
        Format::Text => println!("{a}"),
        Format::Json => println!("{}", serde_json::to_string(a).expect("asm serialize")),
    }
}

fn print_perm(s: &Permutation, config: &Config) {
    match config.format {
        Format::Text => println!("{s}"),
        Format::Json => println!("{}", serde_json::to_string(s).expect("perm serialize")),
    }
}

fn print_invword(w: &InversionWord, config: &Config) {
    match config.format {
        Format::Text => println!("{w}"),
        Format::Json => println!("{}", serde_json::to_string(w).expect("word serialize")),
    }
}

fn print_paths(f: &PathFamily, config: &Config) {
    match config.format {
        // paths have no one-line text form; the text rendering is the
        // ASCII debug diagram, JSON is the interchange format
        Format::Text => print!("{}", f.ascii_diagram()),
        Format::Json => println!("{}", serde_json::to_string(f).expect("paths serialize")),
    }
}

fn cmd_enumerate(
    kind: ObjectKind,
    n: u32,
    count_only: bool,
    config: &Config,
) -> Result<(), CliError> {
    check_cap(n, config)?;
    let usage = |e: asmdpp::SizeOutOfRange| CliError::Usage(e.to_string());
    match kind {
        ObjectKind::Perm => {
            let it = asmdpp::enumerate_perms(n).map_err(usage)?;
            if count_only {
                println!("{}", it.count());
            } else {
                for s in it {
                    print_perm(&s, config);
                }
            }
        }
        ObjectKind::Dpp => {
            let it = asmdpp::enumerate_dpps(n).map_err(usage)?;
            if count_only {
                println!("{}", it.count());
            } else {
                for d in it {
                    match config.format {
                        Format::Text => {
                            let line = if d.is_empty() {
                                String::from("(empty)")
                            } else {
                                d.to_string().replace('\n', " ; ")
                            };
                            println!("{line}");
                        }
                        Format::Json => {
                            println!("{}", serde_json::to_string(&d).expect("dpp serialize"))
                        }
                    }
                }
            }
        }
        ObjectKind::Asm => {
            let it = asmdpp::enumerate_asms(n).map_err(usage)?;
            if count_only {
                println!("{}", it.count());
            } else {
                for a in it {
                    match config.format {
                        Format::Text => println!("{}", a.to_string().replace('\n', " ; ")),
                        Format::Json => {
                            println!("{}", serde_json::to_string(&a).expect("asm serialize"))
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn cmd_verify(
    target: VerifyTarget,
    n: u32,
    projection: ProjectionArg,
    random: u64,
    config: &Config,
) -> Result<(), CliError> {
    check_cap(n, config)?;
    let usage = |e: asmdpp::SizeOutOfRange| CliError::Usage(e.to_string());
    match target {
        VerifyTarget::Equidistribution => {
            let projection = match projection {
                ProjectionArg::Triplet => Projection::Triplet,
                ProjectionArg::Quadruple => Projection::Quadruple,
            };
            let report = verify_equidistribution(n, projection, config.parallel).map_err(usage)?;
            match config.format {
                Format::Text => println!("{report}"),
                Format::Json => {
                    println!("{}", serde_json::to_string(&report).expect("report serialize"))
                }
            }
            if report.pass {
                Ok(())
            } else {
                Err(CliError::Domain(String::from("equidistribution check FAILED")))
            }
        }
        VerifyTarget::Bijection => {
            let report = verify_bijection_exhaustive(n, config.parallel).map_err(usage)?;
            match config.format {
                Format::Text => println!("{report}"),
                Format::Json => {
                    println!("{}", serde_json::to_string(&report).expect("report serialize"))
                }
            }
            if report.pass {
                Ok(())
            } else {
                Err(CliError::Domain(String::from("bijection check FAILED")))
            }
        }
        VerifyTarget::Paths => cmd_verify_paths(n, random, config),
    }
}

/// Round-trips every DPP of dimension `n` (and optionally randomized
/// larger instances) through the lattice-path representation.
fn cmd_verify_paths(n: u32, random: u64, config: &Config) -> Result<(), CliError> {
    let usage = |e: asmdpp::SizeOutOfRange| CliError::Usage(e.to_string());
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for d in asmdpp::enumerate_dpps(n).map_err(usage)? {
        checked += 1;
        let f = dpp_to_paths(&d);
        let ok = f.len() == d.row_count()
            && check_nonintersecting(&f)
            && paths_to_dpp(&f).as_ref() == Ok(&d);
        if !ok {
            failures.push(d.to_string().replace('\n', " ; "));
        }
    }
    let mut rng = random::seeded(config.seed);
    for _ in 0..random {
        let d = random::random_dpp(&mut rng, n.max(8) + 4);
        checked += 1;
        let f = dpp_to_paths(&d);
        let ok = check_nonintersecting(&f) && paths_to_dpp(&f).as_ref() == Ok(&d);
        if !ok {
            failures.push(d.to_string().replace('\n', " ; "));
        }
    }
    let pass = failures.is_empty();
    match config.format {
        Format::Text => {
            println!(
                "paths n={n}: {} — {checked} round-trips ({random} randomized, seed {})",
                if pass { "PASS" } else { "FAIL" },
                config.seed
            );
            if let Some(first) = failures.first() {
                println!("  first failure: {first}");
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "target": "paths",
                    "n": n,
                    "checked": checked,
                    "randomized": random,
                    "seed": config.seed,
                    "pass": pass,
                    "first_failure": failures.first(),
                })
            );
        }
    }
    if pass {
        Ok(())
    } else {
        Err(CliError::Domain(String::from("path round-trip check FAILED")))
    }
}
