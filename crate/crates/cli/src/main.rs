//! `mckay-lab`: command-line access to the mckay-core computations.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mckay_core::groups::GroupName;

use crate::render::Output;

/// Largest series order accepted on the command line.
const MAX_ORDER: i64 = 2000;

#[derive(Parser, Debug)]
#[command(
    name = "mckay-lab",
    version,
    about = "Exact computations around the McKay correspondence, moonshine and the McKay conjecture"
)]
struct Cli {
    /// Print a JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// q-expansions of modular forms.
    Series {
        #[command(subcommand)]
        which: SeriesCommand,
    },
    /// Finite group summaries.
    Group {
        #[command(subcommand)]
        which: GroupCommand,
    },
    /// Character table of a named group.
    Chartab(NameArg),
    /// McKay quiver of an SU(2) subgroup and its affine type.
    Quiver(QuiverArgs),
    /// Monster decompositions of j coefficients and related numerics.
    Moonshine(MoonshineArgs),
    /// Compare p'-degree character counts of G and N_G(P).
    Conjecture(ConjectureArgs),
    /// Run the ten acceptance checks.
    Selfcheck,
}

#[derive(Subcommand, Debug)]
enum SeriesCommand {
    /// The modular invariant j, from q^-1 up to q^order.
    J {
        #[arg(long, default_value_t = 10, allow_negative_numbers = true,
              value_parser = clap::value_parser!(i64).range(-1..=MAX_ORDER))]
        order: i64,
    },
    /// Eisenstein series of the given even weight (at least 4).
    Eisenstein {
        #[arg(long, value_parser = parse_weight)]
        weight: i64,
        #[arg(long, default_value_t = 10, allow_negative_numbers = true,
              value_parser = clap::value_parser!(i64).range(0..=MAX_ORDER))]
        order: i64,
    },
    /// The discriminant Delta; its coefficients are tau(n).
    Delta {
        #[arg(long, default_value_t = 10, allow_negative_numbers = true,
              value_parser = clap::value_parser!(i64).range(1..=MAX_ORDER))]
        order: i64,
    },
    /// The cube root of q j(q).
    CubeRoot {
        #[arg(long, default_value_t = 10, allow_negative_numbers = true,
              value_parser = clap::value_parser!(i64).range(0..=MAX_ORDER))]
        order: i64,
    },
}

#[derive(Subcommand, Debug)]
enum GroupCommand {
    /// Order, exponent and conjugacy classes.
    Info(NameArg),
}

#[derive(Args, Debug)]
struct NameArg {
    /// cyclic-N, binary-dihedral-N, binary-tetrahedral, binary-octahedral,
    /// binary-icosahedral or sl2-P.
    #[arg(long, value_parser = parse_group)]
    name: GroupName,
}

#[derive(Args, Debug)]
struct QuiverArgs {
    #[command(flatten)]
    group: NameArg,
    /// Also write the quiver in Graphviz format to this file.
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MoonshineArgs {
    /// File of Monster irrep dimensions, one per line.
    #[arg(long, value_name = "PATH", global = true)]
    monster_dims: Option<PathBuf>,

    #[command(subcommand)]
    which: MoonshineCommand,
}

#[derive(Subcommand, Debug)]
enum MoonshineCommand {
    /// Write a coefficient of j - 744 as a sum of Monster irrep dimensions.
    Decompose {
        /// Exponent n of q^n; -1 is the pole.
        #[arg(long, allow_negative_numbers = true,
              value_parser = clap::value_parser!(i64).range(-1..=MAX_ORDER))]
        coeff_index: i64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(0..=10))]
        max_irreps: u32,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(0..=10))]
        max_mult: u32,
    },
    /// Sum of squared coefficients modulo 70.
    MeaningOfLife {
        #[arg(long, value_enum, default_value_t = Source::Tau)]
        source: Source,
        /// First exponent of the window (default 1).
        #[arg(long, allow_negative_numbers = true,
              value_parser = clap::value_parser!(i64).range(-1..=MAX_ORDER))]
        start: Option<i64>,
        /// Number of coefficients (default 24).
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=MAX_ORDER as u64))]
        count: Option<u64>,
    },
    /// Check the prime factorization of the Monster's order.
    OrderCheck,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Source {
    J,
    Tau,
}

#[derive(Args, Debug)]
struct ConjectureArgs {
    #[arg(long, value_parser = parse_group, required_unless_present = "all_builders",
          conflicts_with = "all_builders")]
    name: Option<GroupName>,
    /// A prime.
    #[arg(long, value_parser = parse_prime, required_unless_present = "all_builders")]
    p: Option<u64>,
    /// Every builder group against every prime dividing its order.
    #[arg(long, conflicts_with = "p")]
    all_builders: bool,
}

fn parse_group(s: &str) -> Result<GroupName, String> {
    s.parse().map_err(|e: mckay_core::Error| e.to_string())
}

fn parse_weight(s: &str) -> Result<i64, String> {
    let k: i64 = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    if k < 4 || k % 2 != 0 || k > 100 {
        return Err("weight must be even, between 4 and 100".into());
    }
    Ok(k)
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s
        .parse()
        .map_err(|_| format!("`{s}` is not a positive integer"))?;
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(format!("{p} is not prime"));
    }
    Ok(p)
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Series { which } => match which {
            SeriesCommand::J { .. } => "series j",
            SeriesCommand::Eisenstein { .. } => "series eisenstein",
            SeriesCommand::Delta { .. } => "series delta",
            SeriesCommand::CubeRoot { .. } => "series cube-root",
        },
        Command::Group { .. } => "group info",
        Command::Chartab(_) => "chartab",
        Command::Quiver(_) => "quiver",
        Command::Moonshine(args) => match args.which {
            MoonshineCommand::Decompose { .. } => "moonshine decompose",
            MoonshineCommand::MeaningOfLife { .. } => "moonshine meaning-of-life",
            MoonshineCommand::OrderCheck => "moonshine order-check",
        },
        Command::Conjecture(_) => "conjecture",
        Command::Selfcheck => "selfcheck",
    }
}

fn run(cli: &Cli) -> mckay_core::Result<Output> {
    match &cli.command {
        Command::Series { which } => match which {
            SeriesCommand::J { order } => commands::series_j(*order),
            SeriesCommand::Eisenstein { weight, order } => {
                commands::series_eisenstein(*weight, *order)
            }
            SeriesCommand::Delta { order } => commands::series_delta(*order),
            SeriesCommand::CubeRoot { order } => commands::series_cube_root(*order),
        },
        Command::Group {
            which: GroupCommand::Info(arg),
        } => commands::group_info(arg.name),
        Command::Chartab(arg) => commands::chartab(arg.name),
        Command::Quiver(args) => commands::quiver(args.group.name, args.dot.as_deref()),
        Command::Moonshine(args) => {
            let dims = args.monster_dims.as_deref();
            match &args.which {
                MoonshineCommand::Decompose {
                    coeff_index,
                    max_irreps,
                    max_mult,
                } => commands::decompose(dims, *coeff_index, *max_irreps as usize, *max_mult),
                MoonshineCommand::MeaningOfLife {
                    source,
                    start,
                    count,
                } => commands::meaning_of_life(*source == Source::J, *start, *count),
                MoonshineCommand::OrderCheck => commands::order_check(dims),
            }
        }
        Command::Conjecture(args) => match (args.all_builders, args.name, args.p) {
            (true, _, _) => commands::conjecture_all(),
            (false, Some(name), Some(p)) => commands::conjecture(name, p),
            _ => unreachable!("clap enforces --name and --p together"),
        },
        Command::Selfcheck => commands::selfcheck(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.envelope());
            } else {
                print!("{}", out.text);
                for d in &out.diagnostics {
                    eprintln!("{d}");
                }
            }
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                println!(
                    "{}",
                    Output::failure(command_name(&cli.command), &e).envelope()
                );
            }
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
