//! `discord-lab`: correlation measures and emission dynamics of two atoms.
//!
//! Data goes to stdout (or `--out`), diagnostics to stderr. Exit codes:
//! 1 for I/O failures, 2 for invalid states or parameters, 3 when the
//! integrator disagrees with the closed-form evolution by more than 1e-5.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use discord_lab::experiments::Family;
use discord_lab::ChannelKind;

#[derive(Parser)]
#[command(name = "discord-lab", version, about)]
struct Cli {
    /// Emission rate used to convert reported times from γ₀t to t.
    /// Computations depend on γ₀t only.
    #[arg(long, global = true)]
    gamma0: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the correlation measures of a state file.
    Measures { file: PathBuf },
    /// Evolve a state under spontaneous emission.
    Evolve {
        file: PathBuf,
        #[arg(long, value_enum)]
        channel: Channel,
        /// Evolution time in units of 1/γ₀.
        #[arg(long = "gamma0t", allow_negative_numbers = true)]
        gamma0t: f64,
        /// Emit a CSV of measures on a grid over [0, gamma0t] instead of a state.
        #[arg(long)]
        trajectory: bool,
        #[arg(long, default_value_t = 201, requires = "trajectory")]
        steps: usize,
        /// Integrate the master equation and report the deviation from the
        /// closed-form evolution.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 1e-4, requires = "oracle")]
        dt: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the data behind one of the three figures as CSV.
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Peak discord created from sampled classically correlated states.
    Sweep {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "two-sided")]
        channel: Channel,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest created discord against the Bloch-vector angle.
    DmaxScan {
        #[arg(long, default_value_t = 64)]
        alphas: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the corrected and misprinted one-sided coherence formula with
    /// the integrator.
    VerifyTypo,
    /// Check that a state file holds a valid density matrix.
    Validate { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Channel {
    TwoSided,
    OneSidedA,
    OneSidedB,
}

impl From<Channel> for ChannelKind {
    fn from(c: Channel) -> Self {
        match c {
            Channel::TwoSided => ChannelKind::TwoSided,
            Channel::OneSidedA => ChannelKind::OneSidedA,
            Channel::OneSidedB => ChannelKind::OneSidedB,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cc,
    Cq,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Cc => Family::Cc,
            FamilyArg::Cq => Family::Cq,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("discord-lab: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), commands::Failure> {
    let ctx = commands::Context::from_env(cli.gamma0)?;
    match cli.command {
        Command::Measures { file } => commands::measures(&ctx, &file),
        Command::Evolve {
            file,
            channel,
            gamma0t,
            trajectory,
            steps,
            oracle,
            dt,
            out,
        } => commands::evolve(
            &ctx,
            &commands::EvolveArgs {
                file,
                kind: channel.into(),
                gamma0t,
                trajectory: trajectory.then_some(steps),
                oracle_dt: oracle.then_some(dt),
                out,
            },
        ),
        Command::Figure { which, out } => commands::figure(&ctx, which, out.as_deref()),
        Command::Sweep {
            family,
            n,
            seed,
            channel,
            out,
        } => commands::sweep(&ctx, family.into(), n, seed, channel.into(), out.as_deref()),
        Command::DmaxScan { alphas, out } => commands::dmax_scan(&ctx, alphas, out.as_deref()),
        Command::VerifyTypo => commands::verify_typo(),
        Command::Validate { file } => commands::validate(&ctx, &file),
    }
}
