//! `zmono`: validate, enumerate and realize z-monodromy candidates, and
//! inspect maps stored as JSON.

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "zmono", version, about = "Zigzags and z-monodromy of faces in maps on closed surfaces")]
pub struct Cli {
    /// Print a JSON document instead of the human-readable report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Suppress log lines on standard error.
    #[arg(short, long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check conditions M1 and M2 for a signed permutation.
    Validate {
        /// Number of sides of the framed face.
        #[arg(long)]
        k: usize,
        /// Signed permutation in cycle notation, such as "(1,-3)(3,-1)".
        #[arg(long)]
        sigma: String,
    },
    /// List all candidates for k, or their classes under a symmetry group.
    Enumerate {
        /// Number of sides of the framed face.
        #[arg(long)]
        k: usize,
        /// Comma-separated subset of rotation, reflection, reversal (or none, all).
        #[arg(long)]
        classes: Option<String>,
    },
    /// Build a map on a closed surface whose framed face has z-monodromy σ.
    Realize {
        /// Number of sides of the framed face.
        #[arg(long)]
        k: usize,
        /// Signed permutation in cycle notation, such as "(1,-3)(3,-1)".
        #[arg(long)]
        sigma: String,
        /// sphere, genus:<g> or cross:<h>.
        #[arg(long, default_value = "sphere")]
        surface: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the map JSON.
        #[arg(long)]
        out: PathBuf,
        /// Where to write the repair trace as JSON lines.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Map JSON of the target surface with an (SS) triangle marked `T`,
        /// used instead of the built-in base maps.
        #[arg(long, conflicts_with = "surface")]
        base_map: Option<PathBuf>,
    },
    /// List the zigzags of a map, one per reversal pair.
    Zigzags {
        #[arg(long)]
        map: PathBuf,
    },
    /// Compute the z-monodromy of a face.
    Monodromy {
        #[arg(long)]
        map: PathBuf,
        /// Face id (`3` or `f3`), `F` for the mark `face_F`, or any mark name.
        #[arg(long)]
        face: String,
        /// Base edge id (`5` or `e5`) on the face; defaults to the face's first flag.
        #[arg(long)]
        base: Option<String>,
        /// Tail vertex of the base edge (`2` or `v2`).
        #[arg(long, requires = "base")]
        tail: Option<String>,
    },
    /// Check that a stored map satisfies (SS) and realizes σ at a face.
    Verify {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        face: String,
        /// Signed permutation in cycle notation, such as "(1,-3)(3,-1)".
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        base: Option<String>,
        #[arg(long, requires = "base")]
        tail: Option<String>,
        /// Also check the Euler characteristic and orientability.
        #[arg(long)]
        surface: Option<String>,
    },
    /// Write a map as Graphviz DOT, or the plane construction for σ as SVG.
    Export {
        /// Map JSON to export (DOT only; stored maps carry no drawing).
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
        /// With --sigma: draw the construction for σ (SVG).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        sigma: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Svg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(CliError::Reported { code, report }) => {
            print!("{report}");
            ExitCode::from(code)
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({ "ok": false, "error": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.code())
        }
    }
}
