//! `pahwalk`: quantum-walk simulations of aromatic hydrocarbons.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pahwalk_cli::commands;
use pahwalk_cli::config::{Command, Manifest, RunConfig};
use pahwalk_cli::error::CliResult;

/// Molecules are catalog names (benzene, naphthalene, anthracene,
/// phenanthrene) or paths to TOML molecule files:
///
///   name = "allyl"
///   nodes = 3
///   edges = [[1, 2, 1.5], [2, 3, 1.5]]   # 1-based [i, j, bond order]
///   classes = [[1, 3], [2]]              # optional
#[derive(Parser)]
#[command(name = "pahwalk", version, about, verbatim_doc_comment)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the built-in molecules.
    List,
    /// Continuous-time walk: per-site MAXP/TRP series and time means.
    Simulate {
        #[arg(long)]
        molecule: String,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Directed discrete-time walk node ranking.
    Rank {
        #[arg(long)]
        molecule: String,
        /// Walk steps [default: 10 N²].
        #[arg(long)]
        steps: Option<usize>,
        /// 1-based start node.
        #[arg(long, default_value_t = 1)]
        start: usize,
        /// `unweighted` (bond count) or `weighted` (bond-order sum).
        #[arg(long, default_value = "unweighted")]
        coin_degree: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Order molecules by overall mean TRP.
    Stability {
        /// Comma-separated molecules.
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        molecules: Vec<String>,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Badger-rule bond orders from force constants.
    BondOrder {
        /// Force constants; one bond order is printed per value.
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required_unless_present = "matrices")]
        k: Vec<f64>,
        /// TOML file with `f`, `d` and optionally `g`, `lambda`.
        #[arg(long, conflicts_with = "k")]
        matrices: Option<PathBuf>,
    },
    /// Write adjacency and Laplacian matrices as CSV.
    ExportGraph {
        #[arg(long)]
        molecule: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Repeat a run from its manifest.json.
    Rerun {
        manifest: PathBuf,
        /// Output directory [default: the one recorded in the manifest].
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value_t = pahwalk_core::simulation::DEFAULT_T_MAX)]
    t_max: f64,
    #[arg(long, default_value_t = pahwalk_core::simulation::DEFAULT_DT)]
    dt: f64,
    #[arg(long, default_value_t = pahwalk_core::simulation::DEFAULT_GAMMA_SCALE)]
    gamma_scale: f64,
    /// Revival tolerance on max |B(t) - B(0)|.
    #[arg(long, default_value_t = pahwalk_core::metrics::DEFAULT_REVIVAL_TOLERANCE)]
    revival_tol: f64,
}

#[derive(Args)]
struct OutArgs {
    #[arg(long, env = "PAHWALK_OUT", default_value = "pahwalk-out")]
    out: PathBuf,
}

impl GridArgs {
    fn apply(self, cfg: &mut RunConfig) {
        cfg.t_max = self.t_max;
        cfg.dt = self.dt;
        cfg.gamma_scale = self.gamma_scale;
        cfg.revival_tolerance = self.revival_tol;
    }
}

fn dispatch(cmd: Cmd) -> CliResult<()> {
    let mut cfg = RunConfig::default();
    match cmd {
        Cmd::List => {
            commands::list();
            return Ok(());
        }
        Cmd::BondOrder { k, matrices } => {
            return match matrices {
                Some(path) => commands::bond_order_matrices(&path),
                None => commands::bond_order_scalars(&k),
            };
        }
        Cmd::Rerun { manifest, out } => {
            let mut recorded = Manifest::read(&manifest)?.config;
            if let Some(out) = out {
                recorded.output_dir = out;
            }
            return commands::run(&recorded);
        }
        Cmd::Simulate {
            molecule,
            grid,
            out,
        } => {
            cfg.command = Command::Simulate;
            cfg.molecules = vec![molecule];
            grid.apply(&mut cfg);
            cfg.output_dir = out.out;
        }
        Cmd::Rank {
            molecule,
            steps,
            start,
            coin_degree,
            out,
        } => {
            cfg.command = Command::Rank;
            cfg.molecules = vec![molecule];
            cfg.steps = steps;
            cfg.start = start;
            cfg.coin_degree = coin_degree;
            cfg.output_dir = out.out;
        }
        Cmd::Stability {
            molecules,
            grid,
            out,
        } => {
            cfg.command = Command::Stability;
            cfg.molecules = molecules;
            grid.apply(&mut cfg);
            cfg.output_dir = out.out;
        }
        Cmd::ExportGraph { molecule, out } => {
            cfg.command = Command::ExportGraph;
            cfg.molecules = vec![molecule];
            cfg.output_dir = out.out;
        }
    }
    commands::run(&cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pahwalk: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
