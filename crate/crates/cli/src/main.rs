use clap::{Args, Parser, Subcommand};
use futaki_cli::run::{self, Formula, SearchOutcome};
use futaki_cli::schema::{fmt_rat, ScenarioFile};
use futaki_cli::exit_code;
use futaki_core::Error;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact Futaki invariants, Chow weights and stability certificates for
/// complete intersections in Grassmannians and projective spaces.
#[derive(Parser)]
#[command(name = "futaki", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a scenario file and emit a report.
    Compute(ComputeArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Run a search campaign.
    Search {
        #[command(subcommand)]
        campaign: Campaign,
    },
}

#[derive(Args)]
struct ComputeArgs {
    /// Path to the scenario JSON document.
    scenario: PathBuf,
    /// Formula selector: thm31|cor33|thm41|cor44|general|all|auto.
    #[arg(long, default_value = "auto")]
    formula: String,
    /// Degenerate first: replace the sections by their flat limit.
    #[arg(long)]
    degenerate: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: lemma51|koszul|localization|invariance|vanishing.
    suite: String,
    /// Number of randomized trials (suite-specific default).
    #[arg(long)]
    trials: Option<usize>,
    /// Random seed.
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Subcommand)]
enum Campaign {
    /// Degenerations of the generic codimension-three section of G(2,5).
    #[command(name = "delpezzo")]
    Delpezzo {
        /// Enumerate weight vectors with entries bounded by this value.
        #[arg(long)]
        bound: i64,
        /// Run the full pipeline only on this many sampled rows.
        #[arg(long)]
        pipeline_samples: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Generic exterior-power degenerations on a Grassmannian.
    #[command(name = "prop63")]
    ExteriorPower {
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        n_big: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        d: usize,
        /// Number of random weight vectors to test.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Verify(args) => verify(args),
        Command::Search { campaign } => search(campaign),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

fn compute(args: ComputeArgs) -> Result<ExitCode, Error> {
    let formula = Formula::parse(&args.formula)?;
    let text = fs::read_to_string(&args.scenario)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", args.scenario.display())))?;
    let file: ScenarioFile = serde_json::from_str(&text)
        .map_err(|e| Error::invalid(format!("bad scenario document: {e}")))?;
    let report = run::compute(file, formula, args.degenerate)?;
    let json = report.to_json();
    match args.report {
        Some(path) => {
            fs::write(&path, &json)
                .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?;
            eprintln!("report written to {}", path.display());
        }
        None => print!("{json}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let report = run::verify(&args.suite, args.trials, args.seed)?;
    for line in &report.lines {
        let status = if line.pass { "ok  " } else { "FAIL" };
        match (&line.detail, line.pass) {
            (Some(detail), false) => println!("{status} {} :: {detail}", line.label),
            _ => println!("{status} {}", line.label),
        }
    }
    let failed = report.lines.iter().filter(|l| !l.pass).count();
    println!(
        "suite {}: {} checks, {} failed",
        report.suite,
        report.lines.len(),
        failed
    );
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn search(campaign: Campaign) -> Result<ExitCode, Error> {
    let outcome = match campaign {
        Campaign::Delpezzo { bound, pipeline_samples, seed } => {
            run::search_delpezzo(bound, pipeline_samples, seed)?
        }
        Campaign::ExteriorPower { k, n_big, ell, d, samples, seed } => {
            run::search_exterior_power(k, n_big, ell, d, samples, seed)?
        }
    };
    match outcome {
        SearchOutcome::Delpezzo(rows) => {
            println!("nu\tsum_alpha\tF_closed\tF_pipeline\tagree");
            for row in &rows {
                let (pipe, agree) = match (&row.futaki_pipeline, row.agrees()) {
                    (Some(f), Some(a)) => (fmt_rat(f), a.to_string()),
                    _ => ("-".to_string(), "-".to_string()),
                };
                println!(
                    "{:?}\t{}\t{}\t{}\t{}",
                    row.nu,
                    row.alpha_sum,
                    fmt_rat(&row.futaki_closed),
                    pipe,
                    agree
                );
            }
            println!("{} rows, all positive and consistent", rows.len());
        }
        SearchOutcome::ExteriorPower(rows) => {
            println!("nu\tsum_alpha\tF\tfano\tchecks");
            for (nu, report) in &rows {
                let checks_ok = report.checks.iter().all(|c| c.pass);
                println!(
                    "{:?}\t{}\t{}\t{}\t{}",
                    nu,
                    fmt_rat(&report.alpha_sum),
                    fmt_rat(&report.futaki),
                    report.fano.unwrap_or(false),
                    if checks_ok { "pass" } else { "fail" }
                );
            }
            println!("{} runs, all positive with hypotheses verified", rows.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}
