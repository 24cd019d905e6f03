use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use laguerre_zeros::config::{parse_window, ConfigError, Overrides};
use laguerre_zeros::{construct, load_experiment, predict, sweep, verify, zeros, Format, Output, EXIT_INVALID};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(name = "laguerre-zeros", version, about = "Certified zero analysis of Laguerre polynomial combinations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Experiment config (JSON), or a directory of configs for `sweep`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file; a directory for `sweep`. Defaults to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Degree window NMIN:NMAX, overriding the config.
    #[arg(long, global = true)]
    window: Option<String>,
    /// Largest degree built exactly.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Exact coefficients of q_n, P and Q.
    Construct,
    /// Certified zero counts and interlacing over the window.
    Zeros,
    /// Predicted limits of the scaled zeros.
    Predict,
    /// Run the checks named in the config.
    Verify,
    /// Run `verify` on every config of a directory.
    Sweep,
}

fn run(cli: &Cli) -> Result<Output, ConfigError> {
    let ov = Overrides {
        window: cli.window.as_deref().map(parse_window).transpose()?,
        cap: cli.cap,
        seed: cli.seed,
    };
    let Some(path) = &cli.config else {
        return Err(ConfigError("--config is required".into()));
    };
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    if let Command::Sweep = cli.command {
        return sweep(path, cli.out.as_deref(), &ov).map_err(|e| ConfigError(format!("{}: {e}", path.display())));
    }
    let exp = load_experiment(path, &ov)?;
    match cli.command {
        Command::Construct => construct(&exp, format),
        Command::Zeros => zeros(&exp, format),
        Command::Predict => predict(&exp, format),
        Command::Verify => Ok(verify(&exp)),
        Command::Sweep => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let dest = if matches!(cli.command, Command::Sweep) { None } else { cli.out.as_ref() };
            match dest {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, &out.body) {
                        eprintln!("error: cannot write {}: {e}", p.display());
                        return ExitCode::from(EXIT_INVALID as u8);
                    }
                }
                None => print!("{}", out.body),
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID as u8)
        }
    }
}
