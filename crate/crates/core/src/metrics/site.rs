//! Per-site observables of the walker ensemble.
//!
//! MAXP(k, t) is the largest probability of any single walker at node `k`;
//! TRP(k, t) is the mean over walkers at node `k` after dropping one
//! largest and one smallest value. Truncation is across walkers at a fixed
//! time; the time average is taken afterwards.

use crate::ctqw::ProbabilityMatrix;
use crate::error::{Error, Result};

pub fn maxp_at(b: &ProbabilityMatrix, node: usize) -> f64 {
    b.matrix().column(node).max()
}

/// Mean of `values` without one maximum and one minimum occurrence.
pub fn truncated_mean(values: &[f64]) -> Result<f64> {
    let n = values.len();
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "truncated mean needs at least 3 values, got {n}"
        )));
    }
    let (mut lo, mut hi, mut sum) = (f64::INFINITY, f64::NEG_INFINITY, 0.0);
    for &v in values {
        lo = lo.min(v);
        hi = hi.max(v);
        sum += v;
    }
    Ok((sum - lo - hi) / (n - 2) as f64)
}

pub fn trp_at(b: &ProbabilityMatrix, node: usize) -> Result<f64> {
    truncated_mean(&b.column(node))
}

fn check(series: &[(f64, ProbabilityMatrix)], node: usize) -> Result<usize> {
    let first = series.first().ok_or(Error::EmptySeries)?;
    let n = first.1.dim();
    if node >= n {
        return Err(Error::NodeOutOfRange {
            node: node + 1,
            node_count: n,
        });
    }
    Ok(n)
}

pub fn maxp(series: &[(f64, ProbabilityMatrix)], node: usize) -> Result<Vec<f64>> {
    check(series, node)?;
    Ok(series.iter().map(|(_, b)| maxp_at(b, node)).collect())
}

pub fn trp(series: &[(f64, ProbabilityMatrix)], node: usize) -> Result<Vec<f64>> {
    check(series, node)?;
    series.iter().map(|(_, b)| trp_at(b, node)).collect()
}

/// MAXP and TRP of one node over a sampled run.
#[derive(Debug, Clone, PartialEq)]
pub struct SiteSeries {
    pub node: usize,
    pub times: Vec<f64>,
    pub maxp: Vec<f64>,
    pub trp: Vec<f64>,
}

impl SiteSeries {
    pub fn new(node: usize) -> Self {
        Self {
            node,
            times: Vec::new(),
            maxp: Vec::new(),
            trp: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn push(&mut self, t: f64, b: &ProbabilityMatrix) -> Result<()> {
        let trp = trp_at(b, self.node)?;
        self.times.push(t);
        self.maxp.push(maxp_at(b, self.node));
        self.trp.push(trp);
        Ok(())
    }
}

pub fn site_series(series: &[(f64, ProbabilityMatrix)], node: usize) -> Result<SiteSeries> {
    check(series, node)?;
    let mut s = SiteSeries::new(node);
    for (t, b) in series {
        s.push(*t, b)?;
    }
    Ok(s)
}

/// Time-averaged MAXP and TRP of one node.
#[derive(Debug, Clone, PartialEq)]
pub struct SiteReport {
    pub node: usize,
    pub class_id: usize,
    pub maxp_mean: f64,
    pub trp_mean: f64,
}

fn mean(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptySeries);
    }
    Ok(values.iter().sum::<f64>() / values.len() as f64)
}

/// Arithmetic means over every sample, `t = 0` included.
pub fn time_means(series: &SiteSeries, class_id: usize) -> Result<SiteReport> {
    Ok(SiteReport {
        node: series.node,
        class_id,
        maxp_mean: mean(&series.maxp)?,
        trp_mean: mean(&series.trp)?,
    })
}
