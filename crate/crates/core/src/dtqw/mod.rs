//! Discrete-time quantum walks: line primitives, the degree coin, the
//! directed graph walk and the node-ranking procedure built on it.

use nalgebra::{Complex, Matrix2};

use crate::error::Result;
use crate::graph::MoleculeGraph;

pub mod graph_walk;
pub mod line;
pub mod ranking;

pub use graph_walk::{coin_for_alpha, degree_coin, CoinDegree, DirectedWalk, DirectedWalkState};
pub use line::{directed_line_step, line_step, Coin, DirectedShift, Direction, LineWalkState};
pub use ranking::{
    assign_ranks, default_steps, rank_nodes, NodeRanking, RankConfig, DEFAULT_RESTART_PROBABILITY,
    RANK_TIE_TOLERANCE,
};

/// Angle coin or degree coin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoinSpec {
    Angle(f64),
    Degree(CoinDegree),
}

impl CoinSpec {
    /// The 2×2 coin at `node`. The angle coin is the same at every node.
    pub fn matrix(&self, graph: &MoleculeGraph, node: usize) -> Result<Matrix2<Complex<f64>>> {
        match *self {
            CoinSpec::Angle(theta) => {
                let c = Complex::new(theta.cos(), 0.0);
                let s = Complex::new(0.0, -theta.sin());
                Ok(Matrix2::new(c, s, s, c))
            }
            CoinSpec::Degree(degree) => {
                Ok(degree_coin(graph, node, degree)?.map(|v| Complex::new(v, 0.0)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_coin_is_unitary() {
        let g = MoleculeGraph::new("pair", 2, [(0, 1, 1.0)]).unwrap();
        for theta in [0.0, 0.3, 1.0, 2.5, -4.0] {
            let c = CoinSpec::Angle(theta).matrix(&g, 0).unwrap();
            assert!((c.adjoint() * c - Matrix2::identity()).camax() < 1e-15);
        }
    }
}
