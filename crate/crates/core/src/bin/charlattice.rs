use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use charlattice::verify::commands::{self, Format, Output};

#[derive(Parser)]
#[command(name = "charlattice", version, about = "Exact formal-character computations and verification cases")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Fmt::Text)]
    format: Fmt,
    /// Seed for randomized cases.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of an irreducible, e.g. `dim E7 ω7`.
    Dim { algebra: String, hw: String },
    /// Weights with multiplicities, one row per weight.
    Weights { algebra: String, hw: String },
    /// Whether an irreducible is multiplicity-free.
    Multfree { algebra: String, hw: String },
    /// Character file of an irreducible.
    Char {
        algebra: String,
        hw: String,
        /// Attach an involution: none, delta (diagram involution) or neg.
        #[arg(long, default_value = "none")]
        involution: String,
    },
    /// Isomorphism of formal characters between two character files.
    Samechar { file1: PathBuf, file2: PathBuf },
    /// Factorizations of a character file's weights or an integer list.
    Factorize {
        source: String,
        #[arg(long)]
        profile: String,
    },
    /// Equal-rank subsystems of a simple type.
    Subsystems { stype: String },
    /// Multiplicity-free irreducibles of a simple type.
    Catalog {
        stype: String,
        #[arg(long, default_value_t = 1000)]
        max_dim: u128,
    },
    /// Multiplicity-free (g, V) of dimension n and the divisibility gate.
    AllowedPairs { n: u64 },
    /// Run one case, or the default suite when no case is given.
    Verify {
        case: Option<String>,
        /// Case parameters as key=value.
        #[arg(long = "param", short = 'p')]
        params: Vec<String>,
    },
    /// List case identifiers.
    Cases,
}

fn run(cli: &Cli) -> charlattice::Result<Output> {
    match &cli.command {
        Command::Dim { algebra, hw } => commands::dim(algebra, hw),
        Command::Weights { algebra, hw } => commands::weights(algebra, hw),
        Command::Multfree { algebra, hw } => commands::multfree(algebra, hw),
        Command::Char { algebra, hw, involution } => commands::character(algebra, hw, involution),
        Command::Samechar { file1, file2 } => commands::samechar(file1, file2),
        Command::Factorize { source, profile } => commands::factorize(source, profile),
        Command::Subsystems { stype } => commands::subsystems(stype),
        Command::Catalog { stype, max_dim } => commands::catalog(stype, *max_dim),
        Command::AllowedPairs { n } => commands::allowed_pairs(*n),
        Command::Verify { case, params } => {
            let p = commands::parse_params(params)?;
            commands::verify(case.as_deref(), &p, cli.seed)
        }
        Command::Cases => Ok(commands::list_cases()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        Fmt::Text => Format::Text,
        Fmt::Structured => Format::Structured,
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.render(format));
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::error_code(&e) as u8)
        }
    }
}
