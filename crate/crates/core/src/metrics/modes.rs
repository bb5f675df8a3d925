//! Delocalization-mode classification from time-averaged MAXP.
//!
//! A candidate mode is a set of delocalized circuits (aromatic sextets or
//! the molecular periphery). A site incident to any bond outside those
//! circuits keeps some localized double-bond character and is predicted to
//! have high MAXP; a site whose bonds all lie on the circuits is predicted
//! low. Each candidate is scored by the MAXP contrast between its
//! predicted-high and predicted-low sites, and the best score is the
//! dominant mode.
//!
//! Candidate identifiers: `a` benzene; `b`, `c` naphthalene; `d`, `e`,
//! `f` anthracene; `g`, `h`, `i` phenanthrene.

use std::collections::BTreeSet;

use crate::graph::MoleculeGraph;
use crate::metrics::site::SiteReport;

/// Spreads of mean MAXP below this are a single bucket.
pub const UNIFORM_TOLERANCE: f64 = 1e-8;

/// One candidate pattern; each variant lists its circuits as 1-based
/// node cycles. Symmetry-related placements are separate variants.
#[derive(Debug, Clone, Copy)]
pub struct ModePattern {
    pub id: &'static str,
    pub molecule: &'static str,
    pub description: &'static str,
    pub variants: &'static [&'static [&'static [usize]]],
}

const NAPHTHALENE_A: &[usize] = &[1, 2, 3, 4, 9, 10];
const NAPHTHALENE_B: &[usize] = &[4, 5, 6, 7, 8, 9];
const ANTHRACENE_LEFT: &[usize] = &[1, 2, 3, 4, 13, 14];
const ANTHRACENE_MIDDLE: &[usize] = &[4, 5, 6, 11, 12, 13];
const ANTHRACENE_RIGHT: &[usize] = &[6, 7, 8, 9, 10, 11];
const PHENANTHRENE_LEFT: &[usize] = &[1, 2, 3, 4, 13, 14];
const PHENANTHRENE_MIDDLE: &[usize] = &[4, 5, 10, 11, 12, 13];
const PHENANTHRENE_RIGHT: &[usize] = &[5, 6, 7, 8, 9, 10];
const PERIPHERY_10: &[usize] = &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10];
const PERIPHERY_14: &[usize] = &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14];

pub const MODE_PATTERNS: &[ModePattern] = &[
    ModePattern {
        id: "a",
        molecule: "benzene",
        description: "single aromatic sextet",
        variants: &[&[&[1, 2, 3, 4, 5, 6]]],
    },
    ModePattern {
        id: "b",
        molecule: "naphthalene",
        description: "one sextet, two localized double bonds in the other ring",
        variants: &[&[NAPHTHALENE_A], &[NAPHTHALENE_B]],
    },
    ModePattern {
        id: "c",
        molecule: "naphthalene",
        description: "10-electron peripheral circuit, fusion bond outside",
        variants: &[&[PERIPHERY_10]],
    },
    ModePattern {
        id: "d",
        molecule: "anthracene",
        description: "sextet in a terminal ring",
        variants: &[&[ANTHRACENE_LEFT], &[ANTHRACENE_RIGHT]],
    },
    ModePattern {
        id: "e",
        molecule: "anthracene",
        description: "sextet in the central ring",
        variants: &[&[ANTHRACENE_MIDDLE]],
    },
    ModePattern {
        id: "f",
        molecule: "anthracene",
        description: "14-electron peripheral circuit",
        variants: &[&[PERIPHERY_14]],
    },
    ModePattern {
        id: "g",
        molecule: "phenanthrene",
        description: "peripheral circuit",
        variants: &[&[PERIPHERY_14]],
    },
    ModePattern {
        id: "h",
        molecule: "phenanthrene",
        description: "sextet in the central ring",
        variants: &[&[PHENANTHRENE_MIDDLE]],
    },
    ModePattern {
        id: "i",
        molecule: "phenanthrene",
        description: "biphenyl unit (two outer sextets) joined by a double-bond bridge",
        variants: &[&[PHENANTHRENE_LEFT, PHENANTHRENE_RIGHT]],
    },
];

pub fn patterns_for(molecule: &str) -> Vec<&'static ModePattern> {
    MODE_PATTERNS
        .iter()
        .filter(|p| p.molecule.eq_ignore_ascii_case(molecule))
        .collect()
}

/// 0-based sites predicted to have high MAXP under one variant.
pub fn predicted_high(graph: &MoleculeGraph, circuits: &[&[usize]]) -> BTreeSet<usize> {
    let mut delocalized = BTreeSet::new();
    for cycle in circuits {
        for (i, &a) in cycle.iter().enumerate() {
            let b = cycle[(i + 1) % cycle.len()];
            let (a, b) = (a - 1, b - 1);
            delocalized.insert((a.min(b), a.max(b)));
        }
    }
    graph
        .edges()
        .iter()
        .filter(|e| !delocalized.contains(&(e.a, e.b)))
        .flat_map(|e| [e.a, e.b])
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeScore {
    pub id: &'static str,
    pub description: &'static str,
    /// Best-scoring placement of this pattern, 0-based sites.
    pub predicted_high: BTreeSet<usize>,
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeReport {
    /// 0-based sites in the high bucket.
    pub high: Vec<usize>,
    pub low: Vec<usize>,
    /// Boundary between buckets; `None` when every site is in one bucket.
    pub threshold: Option<f64>,
    /// Candidates, best first.
    pub candidates: Vec<ModeScore>,
}

impl ModeReport {
    pub fn matched_mode(&self) -> Option<&'static str> {
        self.candidates.first().map(|c| c.id)
    }

    pub fn rank_of(&self, id: &str) -> Option<usize> {
        self.candidates.iter().position(|c| c.id == id)
    }
}

/// Optimal 1-D two-cluster split of `values`: returns the threshold such
/// that the high cluster is `v > threshold`.
pub fn two_means_threshold(values: &[f64]) -> Option<f64> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    if n < 2 || sorted[n - 1] - sorted[0] <= UNIFORM_TOLERANCE {
        return None;
    }
    let sse = |xs: &[f64]| {
        let m = xs.iter().sum::<f64>() / xs.len() as f64;
        xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>()
    };
    let mut best: Option<(f64, f64)> = None;
    for cut in 1..n {
        if sorted[cut] - sorted[cut - 1] <= UNIFORM_TOLERANCE {
            continue;
        }
        let cost = sse(&sorted[..cut]) + sse(&sorted[cut..]);
        if best.is_none_or(|(c, _)| cost < c) {
            best = Some((cost, 0.5 * (sorted[cut - 1] + sorted[cut])));
        }
    }
    best.map(|(_, t)| t)
}

fn contrast(maxp: &[f64], high: &BTreeSet<usize>) -> f64 {
    let n = maxp.len();
    let spread = maxp.iter().copied().fold(f64::NEG_INFINITY, f64::max)
        - maxp.iter().copied().fold(f64::INFINITY, f64::min);
    if high.is_empty() || high.len() == n {
        // a uniform prediction is only as good as the data is flat
        return -spread;
    }
    let (mut hi, mut lo) = (0.0, 0.0);
    for (i, &v) in maxp.iter().enumerate() {
        if high.contains(&i) {
            hi += v;
        } else {
            lo += v;
        }
    }
    hi / high.len() as f64 - lo / (n - high.len()) as f64
}

/// Buckets sites by mean MAXP and scores the stored candidate modes of
/// `graph`'s molecule. Graphs without stored candidates get an empty
/// candidate list.
pub fn classify_modes(reports: &[SiteReport], graph: &MoleculeGraph) -> ModeReport {
    let mut maxp = vec![0.0; graph.node_count()];
    for r in reports {
        maxp[r.node] = r.maxp_mean;
    }
    let threshold = two_means_threshold(&maxp);
    let (high, low): (Vec<usize>, Vec<usize>) = match threshold {
        Some(t) => (0..maxp.len()).partition(|&i| maxp[i] > t),
        None => (Vec::new(), (0..maxp.len()).collect()),
    };

    let mut candidates: Vec<ModeScore> = patterns_for(graph.name())
        .into_iter()
        .filter_map(|p| {
            p.variants
                .iter()
                .map(|circuits| {
                    let predicted = predicted_high(graph, circuits);
                    let score = contrast(&maxp, &predicted);
                    (predicted, score)
                })
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .map(|(predicted_high, score)| ModeScore {
                    id: p.id,
                    description: p.description,
                    predicted_high,
                    score,
                })
        })
        .collect();
    candidates.sort_by(|a, b| b.score.total_cmp(&a.score));

    ModeReport {
        high,
        low,
        threshold,
        candidates,
    }
}
