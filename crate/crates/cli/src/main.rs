use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod render;

use render::Report;

#[derive(Parser, Debug)]
#[command(name = "gderham", version, about = "Cohomology of Lie-algebra-valued forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Catalog name (e.g. heisenberg3, so3, abelian:3) or path to an algebra file.
    #[arg(long)]
    pub lie: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = gderham_core::hodge::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Use the identity form on the algebra instead of minus the Killing form.
    #[arg(long)]
    pub override_metric: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structure of an algebra: center, commutator ideal, Killing form.
    LieInfo {
        #[command(flatten)]
        common: Common,
    },
    /// Betti numbers of a model.
    Cohomology {
        #[command(flatten)]
        common: Common,
        /// ce | rn:<n>:<N> | product:<n>:<N> | simplicial:<mesh>
        #[arg(long)]
        model: String,
    },
    /// Harmonic forms and the Hodge-theorem check.
    Hodge {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        model: String,
    },
    /// Poincaré duality pairing on an oriented closed mesh.
    Duality {
        #[command(flatten)]
        common: Common,
        /// simplicial:<mesh>
        #[arg(long)]
        model: String,
        /// Only this degree; all degrees by default.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Mayer–Vietoris sequence of a mesh and a two-piece cover.
    Mv {
        #[command(flatten)]
        common: Common,
        /// simplicial:<mesh>
        #[arg(long)]
        model: String,
        /// Mesh file of the first piece; the bundled cover is used without one.
        #[arg(long, requires = "cover_v")]
        cover_u: Option<String>,
        #[arg(long, requires = "cover_u")]
        cover_v: Option<String>,
    },
    /// Long exact sequence of `0 -> a -> L -> L/a -> 0` in coefficients.
    Bockstein {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "ce")]
        model: String,
        /// derived | center | zero | whole
        #[arg(long, default_value = "derived")]
        ideal: String,
    },
    /// Claimed invariants of R^n against the product-model computation.
    Claims {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        /// Polynomial truncation; defaults to n + dim L.
        #[arg(long = "N")]
        truncation: Option<usize>,
    },
    /// Cohomology superalgebra: bracket table, super-commutation, nilpotency.
    Super {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        model: String,
    },
}

fn run(command: Command) -> Result<(Common, Report), gderham_core::Error> {
    Ok(match command {
        Command::LieInfo { common } => {
            let r = commands::lie_info(&common)?;
            (common, r)
        }
        Command::Cohomology { common, model } => {
            let r = commands::cohomology(&common, &model)?;
            (common, r)
        }
        Command::Hodge { common, model } => {
            let r = commands::hodge(&common, &model)?;
            (common, r)
        }
        Command::Duality { common, model, degree } => {
            let r = commands::duality(&common, &model, degree)?;
            (common, r)
        }
        Command::Mv { common, model, cover_u, cover_v } => {
            let r = commands::mv(&common, &model, cover_u.as_deref().zip(cover_v.as_deref()))?;
            (common, r)
        }
        Command::Bockstein { common, model, ideal } => {
            let r = commands::bockstein(&common, &model, &ideal)?;
            (common, r)
        }
        Command::Claims { common, n, truncation } => {
            let r = commands::claims(&common, n, truncation)?;
            (common, r)
        }
        Command::Super { common, model } => {
            let r = commands::superalgebra(&common, &model)?;
            (common, r)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((common, report)) => {
            let text = match common.format {
                Format::Json => report.json(),
                Format::Text => report.text(render::color_enabled()),
            };
            match &common.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
