mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hassett::weights::{Rational, WeightVector};
use hassett::{Caps, Error};

/// Tropical moduli complexes of weighted stable curves and their symmetries.
#[derive(Parser, Debug)]
#[command(name = "hassett", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Largest number of simplex classes a complex may have.
    #[arg(long, global = true, env = "HASSETT_CAP_SIMPLICES")]
    pub cap_simplices: Option<usize>,

    /// Largest number of group elements enumerated explicitly.
    #[arg(long, global = true, env = "HASSETT_CAP_GROUP")]
    pub cap_group: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug, Clone)]
pub struct Space {
    /// Genus.
    #[arg(long)]
    pub g: u32,
    /// Weight vector, e.g. "1/3^3,7/12^3".
    #[arg(long)]
    pub weights: WeightVector,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List stable graph classes by edge count.
    Enumerate(Space),
    /// Weight complex: facets, symmetries, admissible transpositions.
    Kw {
        #[arg(long)]
        weights: WeightVector,
        /// Let the admissibility test range over sets meeting the pair.
        #[arg(long)]
        unrestricted: bool,
    },
    /// Automorphism group of the moduli complex.
    AutDelta(Space),
    /// Run named checks.
    Verify(VerifyArgs),
    /// Write graphs, the complex or its 1-skeleton as JSON or DOT.
    Export {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_enum, default_value_t = Export::Complex)]
        what: Export,
    },
    /// Canonical code of a graph given as JSON (file or "-" for stdin).
    Canon { input: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Export {
    Graphs,
    Complex,
    Skeleton,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Check name; `list` prints the available names.
    pub name: Option<String>,
    /// Further checks to run.
    #[arg(long = "check")]
    pub checks: Vec<String>,
    #[arg(long)]
    pub g: Option<u32>,
    #[arg(long)]
    pub weights: Option<WeightVector>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub eps: Option<Rational>,
    /// Block sizes for realize-product, e.g. "2,3".
    #[arg(long, value_delimiter = ',')]
    pub blocks: Vec<usize>,
}

pub const EXIT_FAILED_CHECK: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAPACITY: u8 = 3;
pub const EXIT_DOMAIN: u8 = 4;

impl Cli {
    fn caps(&self) -> Caps {
        let mut caps = Caps::default();
        if let Some(c) = self.cap_simplices {
            caps.max_simplices = c;
        }
        if let Some(c) = self.cap_group {
            caps.max_group_elements = c;
        }
        caps
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli, &cli.caps()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILED_CHECK),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Input(_) => EXIT_USAGE,
                Error::Capacity(_) => EXIT_CAPACITY,
                Error::Domain(_) => EXIT_DOMAIN,
            })
        }
    }
}
