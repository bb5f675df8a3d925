//! Node ranking by accumulated walker occupancy.
//!
//! The walker performs the directed walk of [`DirectedWalk`]; before each
//! step it is, with probability `restart_probability`, re-injected into
//! the `stay` state of a uniformly chosen node. Between restarts the
//! evolution is coherent. The occupancy distribution of this process
//! converges to a stationary profile that does not depend on the start
//! node. A node's score is its occupancy summed over the second half of
//! the run; the first half is burn-in. The node with the least
//! accumulated occupancy gets rank 1.

use crate::dtqw::graph_walk::{CoinDegree, DirectedWalk};
use crate::error::{Error, Result};
use crate::graph::MoleculeGraph;

/// Restart probability per step (one minus the usual 0.85 damping).
pub const DEFAULT_RESTART_PROBABILITY: f64 = 0.15;

/// Relative tolerance below which two scores share a rank.
pub const RANK_TIE_TOLERANCE: f64 = 1e-6;

/// `10 N²`.
pub fn default_steps(node_count: usize) -> usize {
    10 * node_count * node_count
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankConfig {
    pub steps: usize,
    pub start: usize,
    pub coin_degree: CoinDegree,
    pub restart_probability: f64,
}

impl RankConfig {
    pub fn for_graph(graph: &MoleculeGraph) -> Self {
        Self {
            steps: default_steps(graph.node_count()),
            start: 0,
            coin_degree: CoinDegree::Unweighted,
            restart_probability: DEFAULT_RESTART_PROBABILITY,
        }
    }

    pub fn with_start(mut self, start: usize) -> Self {
        self.start = start;
        self
    }

    pub fn with_steps(mut self, steps: usize) -> Self {
        self.steps = steps;
        self
    }

    pub fn with_coin_degree(mut self, coin_degree: CoinDegree) -> Self {
        self.coin_degree = coin_degree;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodeRanking {
    /// Accumulated occupancy per node.
    pub scores: Vec<f64>,
    /// Dense ranks, 1 = least occupancy = most reactive.
    pub ranks: Vec<usize>,
}

impl NodeRanking {
    pub fn distinct_ranks(&self) -> usize {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    pub fn nodes_with_rank(&self, rank: usize) -> Vec<usize> {
        (0..self.ranks.len())
            .filter(|&i| self.ranks[i] == rank)
            .collect()
    }
}

/// Dense ascending ranks; a score within `rel_tol` of the first score of
/// the current group joins that group.
pub fn assign_ranks(scores: &[f64], rel_tol: f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[a].total_cmp(&scores[b]).then(a.cmp(&b)));
    let mut ranks = vec![0; scores.len()];
    let mut rank = 0;
    let mut anchor = f64::NAN;
    for i in order {
        let s = scores[i];
        let same = (s - anchor).abs() <= rel_tol * anchor.abs().max(s.abs());
        if rank == 0 || !same {
            rank += 1;
            anchor = s;
        }
        ranks[i] = rank;
    }
    ranks
}

pub fn rank_nodes(graph: &MoleculeGraph, config: &RankConfig) -> Result<NodeRanking> {
    let scores = occupancy_scores(graph, config)?;
    let ranks = assign_ranks(&scores, RANK_TIE_TOLERANCE);
    Ok(NodeRanking { scores, ranks })
}

/// Accumulated occupancy of the restarted walk over steps
/// `steps/2 .. steps`.
pub fn occupancy_scores(graph: &MoleculeGraph, config: &RankConfig) -> Result<Vec<f64>> {
    if config.steps < 1 {
        return Err(Error::InvalidParameter("steps must be at least 1".into()));
    }
    let restart = config.restart_probability;
    if !(0.0..1.0).contains(&restart) {
        return Err(Error::InvalidParameter(format!(
            "restart probability must lie in [0, 1), got {restart}"
        )));
    }
    graph.check_node(config.start)?;
    let walk = DirectedWalk::new(graph, config.coin_degree)?;
    let n = graph.node_count();

    // Occupancy at step t is
    //   (1-r)^t P_start(t) + Σ_{k<t} r (1-r)^k P̄(k)
    // where P̄(k) averages k-step occupancies over all restart nodes.
    let mut from_start = walk.localized(config.start)?;
    let mut from_each: Vec<_> = (0..n).map(|x| walk.localized(x)).collect::<Result<_>>()?;
    let mut restarted = vec![0.0; n];
    let mut survival = 1.0;
    let burn_in = config.steps / 2;
    let mut scores = vec![0.0; n];

    for t in 0..config.steps {
        let direct = walk.node_probabilities(&from_start);
        if t >= burn_in {
            for x in 0..n {
                scores[x] += survival * direct[x] + restarted[x];
            }
        }
        if restart > 0.0 {
            let weight = restart * survival / n as f64;
            for state in &from_each {
                for (acc, p) in restarted.iter_mut().zip(walk.node_probabilities(state)) {
                    *acc += weight * p;
                }
            }
            for state in &mut from_each {
                walk.step(state);
            }
        }
        walk.step(&mut from_start);
        survival *= 1.0 - restart;
    }
    Ok(scores)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ties_collapse() {
        let r = assign_ranks(&[3.0, 1.0, 1.0 + 1e-9, 2.0], 1e-6);
        assert_eq!(r, vec![3, 1, 1, 2]);
    }

    #[test]
    fn tie_groups_do_not_chain() {
        // each neighbour is within tolerance of the previous one, but the
        // last is not within tolerance of the group anchor
        let r = assign_ranks(&[1.0, 1.0 + 6e-7, 1.0 + 1.2e-6], 1e-6);
        assert_eq!(r, vec![1, 1, 2]);
    }

    #[test]
    fn zero_steps_rejected() {
        let g = MoleculeGraph::new("pair", 2, [(0, 1, 1.0)]).unwrap();
        let cfg = RankConfig::for_graph(&g).with_steps(0);
        assert!(rank_nodes(&g, &cfg).is_err());
    }

    #[test]
    fn bad_start_rejected() {
        let g = MoleculeGraph::new("pair", 2, [(0, 1, 1.0)]).unwrap();
        let cfg = RankConfig::for_graph(&g).with_start(2);
        assert!(matches!(
            rank_nodes(&g, &cfg),
            Err(Error::NodeOutOfRange { .. })
        ));
    }

    #[test]
    fn restart_probability_range() {
        let g = MoleculeGraph::new("pair", 2, [(0, 1, 1.0)]).unwrap();
        let mut cfg = RankConfig::for_graph(&g);
        cfg.restart_probability = 1.0;
        assert!(rank_nodes(&g, &cfg).is_err());
        cfg.restart_probability = 0.0;
        assert!(rank_nodes(&g, &cfg).is_ok());
    }

    #[test]
    fn scores_sum_to_window_length() {
        let g = MoleculeGraph::new("path", 3, [(0, 1, 1.2), (1, 2, 1.5)]).unwrap();
        let cfg = RankConfig::for_graph(&g);
        let s = occupancy_scores(&g, &cfg).unwrap();
        let window = (cfg.steps - cfg.steps / 2) as f64;
        assert!((s.iter().sum::<f64>() - window).abs() < 1e-9);
    }
}
