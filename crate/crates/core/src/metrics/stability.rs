//! Cross-molecule stability ordering by overall mean TRP.

use std::fmt;

use crate::error::{Error, Result};

/// Adjacent molecules closer than this relative gap are reported as tied.
pub const NEAR_TIE_RELATIVE_GAP: f64 = 0.02;

/// Overall mean TRP of one molecule and the grid it was sampled on.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeTrp {
    pub molecule: String,
    pub mean_trp: f64,
    pub t_max: f64,
    pub dt: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityEntry {
    pub molecule: String,
    pub mean_trp: f64,
    /// Dense rank, 1 = most stable. Near-ties share a rank.
    pub rank: usize,
    /// Within the near-tie band of the entry above.
    pub tied_with_previous: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub entries: Vec<StabilityEntry>,
}

impl StabilityReport {
    pub fn position(&self, molecule: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.molecule == molecule)
    }

    pub fn mean_trp(&self, molecule: &str) -> Option<f64> {
        self.entries
            .iter()
            .find(|e| e.molecule == molecule)
            .map(|e| e.mean_trp)
    }
}

impl fmt::Display for StabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(if e.tied_with_previous { " ~ " } else { " > " })?;
            }
            f.write_str(&e.molecule)?;
        }
        Ok(())
    }
}

pub fn stability_order(inputs: &[MoleculeTrp]) -> Result<StabilityReport> {
    if inputs.len() < 2 {
        return Err(Error::InvalidParameter(
            "stability ordering needs at least two molecules".into(),
        ));
    }
    let first = &inputs[0];
    for other in &inputs[1..] {
        if other.t_max != first.t_max || other.dt != first.dt {
            return Err(Error::GridMismatch(
                first.molecule.clone(),
                other.molecule.clone(),
            ));
        }
    }

    let mut sorted: Vec<&MoleculeTrp> = inputs.iter().collect();
    // stable: equal scores keep input order
    sorted.sort_by(|a, b| b.mean_trp.total_cmp(&a.mean_trp));

    let mut entries: Vec<StabilityEntry> = Vec::with_capacity(sorted.len());
    for m in sorted {
        let (rank, tied) = match entries.last() {
            None => (1, false),
            Some(prev) => {
                let gap = (prev.mean_trp - m.mean_trp) / prev.mean_trp.abs().max(f64::MIN_POSITIVE);
                if gap < NEAR_TIE_RELATIVE_GAP {
                    (prev.rank, true)
                } else {
                    (prev.rank + 1, false)
                }
            }
        };
        entries.push(StabilityEntry {
            molecule: m.molecule.clone(),
            mean_trp: m.mean_trp,
            rank,
            tied_with_previous: tied,
        });
    }
    Ok(StabilityReport { entries })
}
