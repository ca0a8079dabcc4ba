use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use squeezelab::detection::EfficiencyRule;
use squeezelab::experiment::{
    emit_svg, parse_alpha, report_impropriety, run_sweep, validate, write_csv, write_csv_to,
    StatePreset, SweepConfig,
};

const EXIT_USAGE: u8 = 1;
const EXIT_RUNTIME: u8 = 2;
const EXIT_VALIDATION: u8 = 3;

#[derive(Parser)]
#[command(name = "squeezelab", version, about = "Classical squeezed-light Bell test simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the squeezing parameter and estimate S and the efficiency.
    Sweep(SweepArgs),
    /// Print moments and impropriety for a squeezing matrix file.
    Impropriety {
        #[arg(long, value_name = "PATH")]
        xi_file: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        sigma2: f64,
    },
    /// Run the built-in numerical self-checks.
    Validate,
}

#[derive(Clone, Copy, ValueEnum)]
enum StateArg {
    BellSinglet,
    SeparableUniform,
    CustomFile,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    PerDetector,
    PerSide,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 0.0)]
    r_min: f64,
    #[arg(long, default_value_t = 3.0)]
    r_max: f64,
    #[arg(long, default_value_t = 31)]
    r_steps: usize,
    #[arg(long, default_value_t = 1 << 20)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0)]
    gamma: f64,
    #[arg(long, default_value_t = 0.5)]
    sigma2: f64,
    #[arg(long, value_enum, default_value = "bell-singlet")]
    state: StateArg,
    /// Four complex amplitudes as a1r,a1i,a2r,a2i,a3r,a3i,a4r,a4i.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, value_name = "PATH")]
    xi_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "per-detector")]
    efficiency: RuleArg,
    /// CSV destination; standard output when omitted.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
}

fn sweep(args: SweepArgs) -> Result<(), (u8, String)> {
    let usage = |e: squeezelab::experiment::ExperimentError| (EXIT_USAGE, e.to_string());
    let runtime = |e: squeezelab::experiment::ExperimentError| (EXIT_RUNTIME, e.to_string());
    let alpha = args.alpha.as_deref().map(parse_alpha).transpose().map_err(usage)?;
    let config = SweepConfig {
        r_min: args.r_min,
        r_max: args.r_max,
        r_steps: args.r_steps,
        samples: args.samples,
        seed: args.seed,
        gamma: args.gamma,
        sigma2: args.sigma2,
        state: match args.state {
            StateArg::BellSinglet => StatePreset::BellSinglet,
            StateArg::SeparableUniform => StatePreset::SeparableUniform,
            StateArg::CustomFile => StatePreset::CustomFile,
        },
        alpha,
        xi_file: args.xi_file,
        efficiency_rule: match args.efficiency {
            RuleArg::PerDetector => EfficiencyRule::PerDetector,
            RuleArg::PerSide => EfficiencyRule::PerSide,
        },
    };
    config.validate().map_err(usage)?;
    let rows = run_sweep(&config).map_err(runtime)?;
    for row in &rows {
        if let Some(note) = &row.note {
            eprintln!("r = {}: NA cells: {note}", row.r);
        }
    }
    match &args.out {
        Some(path) => write_csv(path, &rows).map_err(runtime)?,
        None => write_csv_to(std::io::stdout().lock(), &rows).map_err(|e| (EXIT_RUNTIME, e.to_string()))?,
    }
    if let Some(path) = &args.svg {
        emit_svg(&rows, path).map_err(runtime)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Sweep(args) => sweep(args),
        Command::Impropriety { xi_file, sigma2 } => report_impropriety(&xi_file, sigma2)
            .map(|report| print!("{report}"))
            .map_err(|e| (EXIT_RUNTIME, e.to_string())),
        Command::Validate => {
            let report = validate();
            print!("{report}");
            if report.passed() {
                Ok(())
            } else {
                Err((EXIT_VALIDATION, "validation failed".into()))
            }
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
