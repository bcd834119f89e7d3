//! `qparity`: expand exact q-series, verify the identity catalog and the
//! theorem registry, scan partition functions for mod-2 congruences, and
//! enumerate restricted partitions.
//!
//! Output is deterministic for fixed inputs: JSON lines by default (one
//! record per line), `--format csv` and `--format text` encode the same
//! data. Report timings are zeroed unless `--timings` is passed, so default
//! output is byte-stable. Exit codes: 0 success / all checks pass,
//! 1 verification failure (counterexample emitted), 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use qparity_core::builders::catalog::{self, IdentityEntry};
use qparity_core::parity::{
    self, quad_residues_mod, scan_zero_progressions, JDomain, TheoremEntry, DEFAULT_MIN_SUPPORT,
};
use qparity_core::partitions::{
    bruteforce_list, gf_parity, gf_series, EnumeratedPairs, PartitionId, DEFAULT_ORACLE_BOUND,
};
use qparity_core::series::{ParitySeries, Series};
use qparity_core::VerificationReport;

#[derive(Parser)]
#[command(
    name = "qparity",
    version,
    about = "Exact truncated q-series engine and restricted-partition laboratory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for data and reports.
    #[arg(long, global = true, env = "QPARITY_FORMAT", default_value = "json")]
    format: Format,

    /// Truncation order N (inclusive).
    #[arg(long, global = true, env = "QPARITY_ORDER", default_value_t = 2000)]
    order: usize,

    /// Report real elapsed times instead of zeros (breaks byte-stability).
    #[arg(long, global = true)]
    timings: bool,

    /// Aggregate JSON output into one pretty-printed array.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DomainArg {
    /// All integers.
    All,
    /// j >= 0.
    Nonneg,
    /// j >= 1.
    Pos,
}

impl From<DomainArg> for JDomain {
    fn from(d: DomainArg) -> JDomain {
        match d {
            DomainArg::All => JDomain::AllIntegers,
            DomainArg::Nonneg => JDomain::NonNegative,
            DomainArg::Pos => JDomain::Positive,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print `n,value` coefficient rows of a partition generating function
    /// (c1..c12) or an identity side (`<catalog-id>.lhs` / `<catalog-id>.rhs`).
    Coeffs {
        target: String,
        /// Reduce coefficients mod 2.
        #[arg(long)]
        mod2: bool,
    },
    /// Verify one identity, one theorem, or everything.
    Verify(VerifyArgs),
    /// Scan a partition function for residues r with c(mn+r) always even.
    Scan {
        id: PartitionId,
        /// Progression modulus m.
        #[arg(long = "mod")]
        modulus: usize,
        /// Minimum number of checked indices before a residue may be reported.
        #[arg(long, env = "QPARITY_MIN_SUPPORT", default_value_t = DEFAULT_MIN_SUPPORT)]
        min_support: usize,
    },
    /// List the (j, partition) pairs of weight n for a partition function.
    Enumerate {
        id: PartitionId,
        n: usize,
        /// Refuse enumeration beyond this weight.
        #[arg(long, env = "QPARITY_ORACLE_BOUND", default_value_t = DEFAULT_ORACLE_BOUND)]
        oracle_bound: usize,
    },
    /// Residue classes attained by a*j^2 + b*j modulo m.
    Residues {
        #[arg(long)]
        alpha: i64,
        #[arg(long)]
        beta: i64,
        #[arg(long = "mod")]
        modulus: i64,
        #[arg(long, value_enum, default_value = "all")]
        domain: DomainArg,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    target: Option<VerifyTarget>,
    /// Verify every cataloged identity and registered theorem.
    #[arg(long)]
    all: bool,
    /// Parallelism degree for `--all` (0 = all cores).
    #[arg(long, short = 'j', env = "QPARITY_JOBS", default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// One identity from the catalog, by id.
    Identity { id: String },
    /// One theorem from the registry, by id.
    Theorem { id: String },
}

fn main() -> ExitCode {
    // die quietly on a closed pipe (`qparity ... | head`) like any filter
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if cli.order < 1 {
        eprintln!("error: --order must be at least 1");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Coeffs { target, mod2 } => run_coeffs(&cli, target, *mod2),
        Command::Verify(args) => run_verify(&cli, args),
        Command::Scan {
            id,
            modulus,
            min_support,
        } => run_scan(&cli, *id, *modulus, *min_support),
        Command::Enumerate {
            id,
            n,
            oracle_bound,
        } => {
            if *oracle_bound > cli.order {
                return Err(format!(
                    "--oracle-bound {oracle_bound} exceeds --order {}",
                    cli.order
                ));
            }
            run_enumerate(&cli, *id, *n, *oracle_bound)
        }
        Command::Residues {
            alpha,
            beta,
            modulus,
            domain,
        } => run_residues(&cli, *alpha, *beta, *modulus, *domain),
    }
}

// ---------------------------------------------------------------------------
// coeffs

fn run_coeffs(cli: &Cli, target: &str, mod2: bool) -> Result<ExitCode, String> {
    let values: Vec<String> = if mod2 {
        let p = parity_target(target, cli.order)?;
        (0..=cli.order)
            .map(|n| if p.bit(n).expect("in range") { "1" } else { "0" }.to_string())
            .collect()
    } else {
        let s = exact_target(target, cli.order)?;
        s.coefficients().iter().map(|c| c.to_string()).collect()
    };

    match cli.format {
        Format::Json => {
            if cli.pretty {
                let rows: Vec<serde_json::Value> = values
                    .iter()
                    .enumerate()
                    .map(|(n, v)| serde_json::json!({ "n": n, "value": v }))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).expect("serializable"));
            } else {
                for (n, v) in values.iter().enumerate() {
                    println!("{}", serde_json::json!({ "n": n, "value": v }));
                }
            }
        }
        Format::Csv => {
            println!("n,value");
            for (n, v) in values.iter().enumerate() {
                println!("{n},{v}");
            }
        }
        Format::Text => {
            for (n, v) in values.iter().enumerate() {
                println!("{n}\t{v}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn known_coeff_targets() -> String {
    let mut names: Vec<String> = PartitionId::ALL.iter().map(|id| id.to_string()).collect();
    names.extend(
        catalog::identity_ids()
            .iter()
            .map(|id| format!("{id}.lhs/.rhs")),
    );
    names.join(", ")
}

fn exact_target(target: &str, order: usize) -> Result<Series, String> {
    if let Ok(id) = target.parse::<PartitionId>() {
        return Ok(gf_series(id, order));
    }
    let (entry, side) = identity_side(target)?;
    side_expr(&entry, side)
        .eval(order)
        .map_err(|e| format!("cannot expand {target}: {e}"))
}

fn parity_target(target: &str, order: usize) -> Result<ParitySeries, String> {
    if let Ok(id) = target.parse::<PartitionId>() {
        return Ok(gf_parity(id, order));
    }
    let (entry, side) = identity_side(target)?;
    side_expr(&entry, side)
        .eval(order)
        .map_err(|e| format!("cannot expand {target}: {e}"))
}

fn identity_side(target: &str) -> Result<(IdentityEntry, &'static str), String> {
    let (id, side) = target
        .rsplit_once('.')
        .filter(|(_, side)| *side == "lhs" || *side == "rhs")
        .ok_or_else(|| {
            format!("unknown series '{target}'; known: {}", known_coeff_targets())
        })?;
    let entry = catalog::find_identity(id)
        .map_err(|_| format!("unknown series '{target}'; known: {}", known_coeff_targets()))?;
    Ok((entry, if side == "lhs" { "lhs" } else { "rhs" }))
}

fn side_expr(entry: &IdentityEntry, side: &str) -> qparity_core::builders::Expr {
    if side == "lhs" {
        entry.lhs.clone()
    } else {
        entry.rhs.clone()
    }
}

// ---------------------------------------------------------------------------
// verify

enum VerifyTask {
    Identity(IdentityEntry),
    Theorem(TheoremEntry),
}

impl VerifyTask {
    fn run(&self, order: usize) -> VerificationReport {
        match self {
            VerifyTask::Identity(entry) => {
                let started = std::time::Instant::now();
                let first_failure = catalog::verify_entry(entry, order);
                VerificationReport::new(entry.id, order, first_failure)
                    .with_elapsed(started.elapsed())
            }
            VerifyTask::Theorem(entry) => parity::verify_theorem_entry(entry, order),
        }
    }
}

fn run_verify(cli: &Cli, args: &VerifyArgs) -> Result<ExitCode, String> {
    let reports: Vec<VerificationReport> = match (&args.target, args.all) {
        (Some(_), true) | (None, false) => {
            return Err("pass exactly one of `identity <id>`, `theorem <id>`, or --all".into());
        }
        (Some(VerifyTarget::Identity { id }), false) => {
            let report = catalog::verify_identity(id, cli.order).map_err(|e| {
                format!("{e}; known identities: {}", catalog::identity_ids().join(", "))
            })?;
            vec![report]
        }
        (Some(VerifyTarget::Theorem { id }), false) => {
            let report = parity::verify_theorem(id, cli.order).map_err(|e| {
                format!("{e}; known theorems: {}", parity::theorem_ids().join(", "))
            })?;
            vec![report]
        }
        (None, true) => {
            let tasks: Vec<VerifyTask> = catalog::identity_catalog()
                .into_iter()
                .map(VerifyTask::Identity)
                .chain(
                    parity::theorem_registry()
                        .into_iter()
                        .map(VerifyTask::Theorem),
                )
                .collect();
            let order = cli.order;
            let run_all = |tasks: &[VerifyTask]| -> Vec<VerificationReport> {
                tasks.par_iter().map(|t| t.run(order)).collect()
            };
            if args.jobs == 0 {
                run_all(&tasks)
            } else {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(args.jobs)
                    .build()
                    .map_err(|e| format!("cannot build thread pool: {e}"))?;
                pool.install(|| run_all(&tasks))
            }
        }
    };

    let all_passed = reports.iter().all(VerificationReport::passed);
    emit_reports(cli, reports);
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn emit_reports(cli: &Cli, mut reports: Vec<VerificationReport>) {
    if !cli.timings {
        for r in &mut reports {
            r.elapsed_ms = 0;
        }
    }
    match cli.format {
        Format::Json => {
            if cli.pretty {
                println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"));
            } else {
                for r in &reports {
                    println!("{}", serde_json::to_string(r).expect("serializable"));
                }
            }
        }
        Format::Csv => {
            println!("id,order,status,first_failure,elapsed_ms");
            for r in &reports {
                let ff = r.first_failure.map(|n| n.to_string()).unwrap_or_default();
                let status = if r.passed() { "pass" } else { "fail" };
                println!("{},{},{},{},{}", r.id, r.order, status, ff, r.elapsed_ms);
            }
        }
        Format::Text => {
            for r in &reports {
                if r.passed() {
                    println!("[pass] {} (order {})", r.id, r.order);
                } else {
                    println!(
                        "[FAIL] {} (order {}) first failure at n={}",
                        r.id,
                        r.order,
                        r.first_failure.expect("failed reports carry a counterexample")
                    );
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// scan

fn run_scan(
    cli: &Cli,
    id: PartitionId,
    modulus: usize,
    min_support: usize,
) -> Result<ExitCode, String> {
    if modulus < 2 {
        return Err("--mod must be at least 2".into());
    }
    if min_support < 1 {
        return Err("--min-support must be at least 1".into());
    }
    let parity = gf_parity(id, cli.order);
    let residues = scan_zero_progressions(&parity, modulus, min_support);
    match cli.format {
        Format::Json => {
            let record = serde_json::json!({
                "id": id,
                "modulus": modulus,
                "order": cli.order,
                "min_support": min_support,
                "residues": residues,
            });
            if cli.pretty {
                println!("{}", serde_json::to_string_pretty(&record).expect("serializable"));
            } else {
                println!("{record}");
            }
        }
        Format::Csv => {
            println!("residue");
            for r in &residues {
                println!("{r}");
            }
        }
        Format::Text => {
            let list = residues
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            println!(
                "{id} mod {modulus} (order {}, min support {min_support}): [{list}]",
                cli.order
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// enumerate

fn run_enumerate(
    cli: &Cli,
    id: PartitionId,
    n: usize,
    oracle_bound: usize,
) -> Result<ExitCode, String> {
    let pairs = bruteforce_list(id, n, oracle_bound).map_err(|e| e.to_string())?;
    let listing = EnumeratedPairs { id, n, pairs };
    match cli.format {
        Format::Json => {
            if cli.pretty {
                println!("{}", serde_json::to_string_pretty(&listing).expect("serializable"));
            } else {
                println!("{}", serde_json::to_string(&listing).expect("serializable"));
            }
        }
        Format::Csv => {
            println!("j,parts");
            for pair in &listing.pairs {
                let parts = pair
                    .parts
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(" ");
                println!("{},{parts}", pair.j);
            }
        }
        Format::Text => {
            println!("{id}({n}): {} pairs", listing.pairs.len());
            for pair in &listing.pairs {
                let parts = pair
                    .parts
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(" ");
                println!("j={}: {parts}", pair.j);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// residues

fn run_residues(
    cli: &Cli,
    alpha: i64,
    beta: i64,
    modulus: i64,
    domain: DomainArg,
) -> Result<ExitCode, String> {
    if modulus < 2 {
        return Err("--mod must be at least 2".into());
    }
    let residues: Vec<i64> = quad_residues_mod(alpha, beta, modulus, domain.into())
        .into_iter()
        .collect();
    match cli.format {
        Format::Json => {
            let record = serde_json::json!({
                "alpha": alpha,
                "beta": beta,
                "modulus": modulus,
                "residues": residues,
            });
            if cli.pretty {
                println!("{}", serde_json::to_string_pretty(&record).expect("serializable"));
            } else {
                println!("{record}");
            }
        }
        Format::Csv => {
            println!("residue");
            for r in &residues {
                println!("{r}");
            }
        }
        Format::Text => {
            let list = residues
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            println!("{alpha}j^2{beta:+}j mod {modulus}: [{list}]");
        }
    }
    Ok(ExitCode::SUCCESS)
}
