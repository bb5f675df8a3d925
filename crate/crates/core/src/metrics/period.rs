//! Revival detection for the walker ensemble.
//!
//! The first few samples after `t = 0` are always close to `B(0)`, so a
//! revival is only counted after the ensemble has moved at least
//! `tolerance` away from its initial state. A run that never leaves the
//! band (a zero Hamiltonian, say) is constant and reports the first sample
//! step as its period.

use crate::ctqw::ProbabilityMatrix;

pub const DEFAULT_REVIVAL_TOLERANCE: f64 = 1e-3;

/// Threshold used to assert that a spectrum shows no revival at all.
pub const NO_REVIVAL_THRESHOLD: f64 = 0.05;

/// Streaming revival detector fed with `(t, ‖B(t) − B(0)‖_max)` pairs.
#[derive(Debug, Clone)]
pub struct RevivalDetector {
    tolerance: f64,
    departed: bool,
    first_step: Option<f64>,
    period: Option<f64>,
}

impl RevivalDetector {
    pub fn new(tolerance: f64) -> Self {
        Self {
            tolerance,
            departed: false,
            first_step: None,
            period: None,
        }
    }

    /// Feeds one sample; `t = 0` itself should not be fed.
    pub fn observe(&mut self, t: f64, distance: f64) {
        if self.period.is_some() {
            return;
        }
        self.first_step.get_or_insert(t);
        if distance >= self.tolerance {
            self.departed = true;
        } else if self.departed {
            self.period = Some(t);
        }
    }

    pub fn finish(&self) -> Option<f64> {
        match (self.period, self.departed) {
            (Some(p), _) => Some(p),
            (None, false) => self.first_step,
            (None, true) => None,
        }
    }
}

/// Smallest revival time of a uniformly sampled series, if any.
pub fn detect_period(series: &[(f64, ProbabilityMatrix)], tolerance: f64) -> Option<f64> {
    let (_, b0) = series.first()?;
    let mut detector = RevivalDetector::new(tolerance);
    for (t, b) in &series[1..] {
        detector.observe(*t, b.max_distance(b0));
        if detector.period.is_some() {
            break;
        }
    }
    detector.finish()
}

/// Minimum of `‖B(t) − B(0)‖_max` over samples after the first departure
/// from the tolerance band; `None` if the series never departs.
pub fn closest_return(series: &[(f64, ProbabilityMatrix)], tolerance: f64) -> Option<f64> {
    let (_, b0) = series.first()?;
    let mut departed = false;
    let mut best: Option<f64> = None;
    for (_, b) in &series[1..] {
        let d = b.max_distance(b0);
        if departed {
            best = Some(best.map_or(d, |x: f64| x.min(d)));
        } else if d >= tolerance {
            departed = true;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_return_after_departure() {
        let mut d = RevivalDetector::new(0.1);
        for (t, dist) in [(1.0, 0.01), (2.0, 0.5), (3.0, 0.2), (4.0, 0.05), (5.0, 0.0)] {
            d.observe(t, dist);
        }
        assert_eq!(d.finish(), Some(4.0));
    }

    #[test]
    fn no_return() {
        let mut d = RevivalDetector::new(0.1);
        for (t, dist) in [(1.0, 0.01), (2.0, 0.5), (3.0, 0.2)] {
            d.observe(t, dist);
        }
        assert_eq!(d.finish(), None);
    }

    #[test]
    fn constant_series_reports_first_step() {
        let mut d = RevivalDetector::new(0.1);
        for t in [0.5, 1.0, 1.5] {
            d.observe(t, 0.0);
        }
        assert_eq!(d.finish(), Some(0.5));
    }
}
