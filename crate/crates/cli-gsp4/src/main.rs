use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cli_gsp4::{run, run_path, CliError, Config, Params, Report, Verb};

#[derive(Parser)]
#[command(name = "gspdef", version, about = "Residual hypotheses, lifting ladders and oracles for GSp_2n")]
struct Cli {
    #[command(subcommand)]
    verb: VerbArg,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Clone, Copy)]
enum VerbArg {
    /// Evaluate the residual hypotheses for diagonal data with unipotent generators.
    CheckHypotheses,
    /// Run the worked GSp_4 example pipeline.
    Gsp4Example,
    /// Lift diagonal residual data on the surrogate group.
    Lift,
    /// Tame local conditions at a trivial prime.
    LocalTame,
    /// Commutator, saturation and stable-closure oracles.
    Oracle,
}

impl From<VerbArg> for Verb {
    fn from(v: VerbArg) -> Self {
        match v {
            VerbArg::CheckHypotheses => Verb::CheckHypotheses,
            VerbArg::Gsp4Example => Verb::Gsp4Example,
            VerbArg::Lift => Verb::Lift,
            VerbArg::LocalTame => Verb::LocalTame,
            VerbArg::Oracle => Verb::Oracle,
        }
    }
}

#[derive(clap::Args)]
struct Opts {
    #[arg(long, global = true)]
    p: Option<u64>,
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long = "q-degree", global = true)]
    q_degree: Option<usize>,
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Config file; command-line flags override its parameters.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the TOML report here instead of standard output.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Seed for randomized oracles.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let verb = Verb::from(cli.verb);
    let o = &cli.opts;
    let overrides =
        Params { p: o.p, n: o.n, q_degree: o.q_degree, precision: o.precision, seed: o.seed, ..Params::default() };
    match &o.config {
        Some(path) => run_path(path, Some(verb), &overrides),
        None => run(&Config::new(verb, overrides)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(report) => {
            eprint!("{}", report.summary());
            let text = match report.to_toml() {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            match &cli.opts.report {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_config_error() { 2 } else { 1 })
        }
    }
}
