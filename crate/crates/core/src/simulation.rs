//! End-to-end CTQW run: propagate the walker ensemble over a time grid and
//! reduce it to per-site MAXP/TRP series, time means and revival data.
//!
//! Samples are streamed; the full `B(t)` series is never held in memory.

use crate::ctqw::{Propagator, TimeGrid};
use crate::error::{Error, Result};
use crate::graph::MoleculeGraph;
use crate::metrics::period::RevivalDetector;
use crate::metrics::site::{time_means, SiteReport, SiteSeries};
use crate::metrics::stability::MoleculeTrp;
use crate::metrics::DEFAULT_REVIVAL_TOLERANCE;

pub const DEFAULT_T_MAX: f64 = 200.0;
pub const DEFAULT_DT: f64 = 0.01;
pub const DEFAULT_GAMMA_SCALE: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    pub t_max: f64,
    pub dt: f64,
    pub gamma_scale: f64,
    pub revival_tolerance: f64,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            t_max: DEFAULT_T_MAX,
            dt: DEFAULT_DT,
            gamma_scale: DEFAULT_GAMMA_SCALE,
            revival_tolerance: DEFAULT_REVIVAL_TOLERANCE,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<TimeGrid> {
        if !self.gamma_scale.is_finite() || self.gamma_scale <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "gamma_scale must be positive, got {}",
                self.gamma_scale
            )));
        }
        if !self.revival_tolerance.is_finite() || self.revival_tolerance <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "revival tolerance must be positive, got {}",
                self.revival_tolerance
            )));
        }
        TimeGrid::new(self.t_max, self.dt)
    }
}

#[derive(Debug, Clone)]
pub struct Simulation {
    pub molecule: String,
    pub config: SimConfig,
    pub sites: Vec<SiteSeries>,
    pub reports: Vec<SiteReport>,
    /// TRP averaged over all sites and samples.
    pub mean_trp: f64,
    /// First revival of the ensemble, see [`RevivalDetector`].
    pub period: Option<f64>,
    /// Smallest `‖B(t) − B(0)‖_max` after the first departure.
    pub closest_return: Option<f64>,
}

impl Simulation {
    pub fn stability_input(&self) -> MoleculeTrp {
        MoleculeTrp {
            molecule: self.molecule.clone(),
            mean_trp: self.mean_trp,
            t_max: self.config.t_max,
            dt: self.config.dt,
        }
    }
}

pub fn simulate(graph: &MoleculeGraph, config: &SimConfig) -> Result<Simulation> {
    let grid = config.validate()?;
    let n = graph.node_count();
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "TRP needs at least 3 sites, {} has {n}",
            graph.name()
        )));
    }
    let propagator = Propagator::from_graph(graph, config.gamma_scale)?;

    let mut sites: Vec<SiteSeries> = (0..n).map(SiteSeries::new).collect();
    let mut detector = RevivalDetector::new(config.revival_tolerance);
    let mut closest: Option<f64> = None;
    let mut departed = false;
    let mut b0 = None;

    for (i, (t, b)) in propagator.samples(grid).enumerate() {
        for s in sites.iter_mut() {
            s.push(t, &b)?;
        }
        if i == 0 {
            b0 = Some(b);
            continue;
        }
        let d = b.max_distance(b0.as_ref().expect("first sample stored"));
        detector.observe(t, d);
        if departed {
            closest = Some(closest.map_or(d, |c: f64| c.min(d)));
        } else if d >= config.revival_tolerance {
            departed = true;
        }
    }

    let classes = graph.classes();
    let reports = sites
        .iter()
        .map(|s| time_means(s, classes.class_of(s.node)))
        .collect::<Result<Vec<_>>>()?;
    let mean_trp = reports.iter().map(|r| r.trp_mean).sum::<f64>() / n as f64;

    Ok(Simulation {
        molecule: graph.name().to_string(),
        config: *config,
        sites,
        reports,
        mean_trp,
        period: detector.finish(),
        closest_return: closest,
    })
}
