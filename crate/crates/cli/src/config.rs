//! Run configuration and the JSON run manifest.

use std::path::{Path, PathBuf};

use pahwalk_core::dtqw::{default_steps, CoinDegree, RankConfig};
use pahwalk_core::metrics::DEFAULT_REVIVAL_TOLERANCE;
use pahwalk_core::simulation::{DEFAULT_DT, DEFAULT_GAMMA_SCALE, DEFAULT_T_MAX};
use pahwalk_core::{MoleculeGraph, SimConfig};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const MANIFEST_NAME: &str = "manifest.json";

/// Everything a run depends on. Written verbatim into the manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    pub molecules: Vec<String>,
    pub t_max: f64,
    pub dt: f64,
    pub gamma_scale: f64,
    pub revival_tolerance: f64,
    /// DTQW steps; `None` means `10 N²`.
    pub steps: Option<usize>,
    /// 1-based start node.
    pub start: usize,
    pub coin_degree: String,
    pub output_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Simulate,
    Rank,
    Stability,
    ExportGraph,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            command: Command::Simulate,
            molecules: Vec::new(),
            t_max: DEFAULT_T_MAX,
            dt: DEFAULT_DT,
            gamma_scale: DEFAULT_GAMMA_SCALE,
            revival_tolerance: DEFAULT_REVIVAL_TOLERANCE,
            steps: None,
            start: 1,
            coin_degree: CoinDegree::default().to_string(),
            output_dir: PathBuf::from("."),
        }
    }
}

fn positive(name: &str, v: f64) -> CliResult<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(CliError::Config(format!(
            "{name} must be a positive number, got {v}"
        )))
    }
}

impl RunConfig {
    /// Checks every field and loads the molecules; no numerics run here.
    pub fn validate(&self) -> CliResult<Vec<MoleculeGraph>> {
        if self.command == Command::Stability {
            if self.molecules.len() < 2 {
                return Err(CliError::Config(
                    "stability needs at least two molecules".into(),
                ));
            }
        } else if self.molecules.len() != 1 {
            return Err(CliError::Config(format!(
                "expected exactly one molecule, got {}",
                self.molecules.len()
            )));
        }
        positive("t-max", self.t_max)?;
        positive("dt", self.dt)?;
        positive("gamma-scale", self.gamma_scale)?;
        positive("revival-tol", self.revival_tolerance)?;
        if self.steps == Some(0) {
            return Err(CliError::Config("steps must be at least 1".into()));
        }
        self.coin_degree()?;
        self.sim_config().validate()?;

        let graphs = self
            .molecules
            .iter()
            .map(|m| pahwalk_core::load_molecule(m).map_err(CliError::from))
            .collect::<CliResult<Vec<_>>>()?;
        for g in &graphs {
            if self.start == 0 || self.start > g.node_count() {
                return Err(CliError::Config(format!(
                    "start node {} out of range 1..={} for {}",
                    self.start,
                    g.node_count(),
                    g.name()
                )));
            }
        }
        Ok(graphs)
    }

    pub fn coin_degree(&self) -> CliResult<CoinDegree> {
        self.coin_degree.parse().map_err(CliError::from)
    }

    pub fn sim_config(&self) -> SimConfig {
        SimConfig {
            t_max: self.t_max,
            dt: self.dt,
            gamma_scale: self.gamma_scale,
            revival_tolerance: self.revival_tolerance,
        }
    }

    pub fn rank_config(&self, graph: &MoleculeGraph) -> CliResult<RankConfig> {
        Ok(RankConfig::for_graph(graph)
            .with_steps(
                self.steps
                    .unwrap_or_else(|| default_steps(graph.node_count())),
            )
            .with_start(self.start - 1)
            .with_coin_degree(self.coin_degree()?))
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub config: RunConfig,
    pub outputs: Vec<String>,
    pub wall_time_seconds: f64,
    pub summary: serde_json::Value,
}

impl Manifest {
    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Config(format!("invalid manifest {}: {e}", path.display())))
    }
}
