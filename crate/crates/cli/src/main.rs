use std::process::ExitCode;

use clap::Parser;

use cherednik::suite::{check_statement, emit_report, run_suite, Format, Report, SuiteConfig, SuiteId};
use cherednik::{qdiff, rewrite};

/// Exact verification of the confluent Cherednik algebras: embeddings,
/// spherical subalgebras, rewriting, classical limits, q-difference
/// representations and their polynomial eigenfunctions.
#[derive(Parser, Debug)]
#[command(name = "cherednik", version)]
struct Cli {
    /// Suites to run: presentations, spherical, rewrite, classical, zhedanov,
    /// eigen (repeat or separate with commas; default all)
    #[arg(long = "suite", value_delimiter = ',')]
    suites: Vec<String>,

    /// Keep only checks tagged with this algebra, representation, family or
    /// rewrite variant (e.g. H_V, Z_III^D7, AW, D8)
    #[arg(long = "algebra", value_delimiter = ',')]
    algebras: Vec<String>,

    /// Largest degree for the eigenfunction checks
    #[arg(long, default_value_t = 8)]
    max_n: u32,

    /// Degree of the symmetric basis for operator comparisons
    #[arg(long, default_value_t = qdiff::DEFAULT_BASIS_DEGREE)]
    basis_degree: i32,

    /// Rewrite steps allowed per identity
    #[arg(long, default_value_t = rewrite::DEFAULT_BUDGET)]
    budget: usize,

    /// Report format: text or json
    #[arg(long, default_value = "text")]
    format: String,

    /// Worker threads (0: one per core)
    #[arg(long, default_value_t = 0)]
    jobs: usize,

    /// Ad-hoc statement "<expression> == 0 in <algebra>", evaluated on the
    /// quantum torus embedding; may be repeated
    #[arg(long = "check")]
    checks: Vec<String>,

    /// Treat operator identities verified only on a finite basis as failures
    #[arg(long)]
    strict_basis: bool,

    /// Record wall time per check (reports are then no longer reproducible
    /// byte for byte)
    #[arg(long)]
    timings: bool,
}

fn config(cli: &Cli) -> cherednik::Result<(SuiteConfig, Format)> {
    let format: Format = cli.format.parse()?;
    let suites = if cli.suites.is_empty() {
        SuiteId::ALL.to_vec()
    } else {
        cli.suites.iter().map(|s| s.parse()).collect::<cherednik::Result<_>>()?
    };
    let cfg = SuiteConfig {
        suites,
        algebras: cli.algebras.clone(),
        max_n: cli.max_n,
        basis_degree: cli.basis_degree,
        budget: cli.budget,
        jobs: cli.jobs,
        allow_basis: !cli.strict_basis,
        timings: cli.timings,
    };
    Ok((cfg, format))
}

fn run(cli: &Cli) -> cherednik::Result<(Report, Format)> {
    let (cfg, format) = config(cli)?;
    let mut adhoc = Vec::new();
    for c in &cli.checks {
        adhoc.push(check_statement(c)?);
    }
    // --check alone runs only the statements
    let report = if cli.checks.is_empty() || !cli.suites.is_empty() {
        run_suite(&cfg)?
    } else {
        Report::new(Vec::new(), cfg.allow_basis)
    };
    Ok((report.merge(Report::new(adhoc, cfg.allow_basis)), format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, format)) => {
            print!("{}", emit_report(&report, format));
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
