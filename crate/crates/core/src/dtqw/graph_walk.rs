//! Directed discrete-time walk on a weighted molecular graph.
//!
//! Each node `x` carries a `stay` amplitude and one amplitude per incident
//! arc `x→y` (arcs in ascending neighbour order). The coin at `x` is the
//! 2×2 degree coin acting on `stay` and the `move` direction
//! `s_x = Σ_y √(w_xy / W_x) |x→y⟩`, and the identity on the rest of the
//! node's arc space. The shift leaves `stay` in place and carries each arc
//! amplitude across its bond (`x→y` becomes `y→x`). Only the `move`
//! component ever leaves a node, and both factors are orthogonal, so the
//! step is unitary.
//!
//! The coin `[[a, b], [b, −a]]` is a reflection, so the node operator is
//! applied as the Householder form `I − 2 r rᵀ` with `r = u₀|stay⟩ + u₁ s_x`.
//! Entries of `r` are nudged by a few ulps so that `|r|²` rounds to 1 as
//! closely as f64 allows; otherwise the norm drifts by ~3e-17 per step.

use nalgebra::{Complex, DMatrix, Matrix2};

use crate::error::{Error, Result};
use crate::graph::MoleculeGraph;

type Complex64 = Complex<f64>;

/// Which degree enters `α_x = d_x / 2` in the degree coin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoinDegree {
    /// Number of incident bonds.
    #[default]
    Unweighted,
    /// Sum of incident bond orders.
    Weighted,
}

impl std::str::FromStr for CoinDegree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unweighted" => Ok(Self::Unweighted),
            "weighted" => Ok(Self::Weighted),
            other => Err(Error::InvalidParameter(format!(
                "coin degree must be `weighted` or `unweighted`, got `{other}`"
            ))),
        }
    }
}

impl std::fmt::Display for CoinDegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Unweighted => "unweighted",
            Self::Weighted => "weighted",
        })
    }
}

/// `[[√(1/(α+1)), √(α/(α+1))], [√(α/(α+1)), −√(1/(α+1))]]`.
pub fn coin_for_alpha(alpha: f64) -> Result<Matrix2<f64>> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "coin parameter must be positive, got {alpha}"
        )));
    }
    let a = (1.0 / (alpha + 1.0)).sqrt();
    let b = (alpha / (alpha + 1.0)).sqrt();
    Ok(Matrix2::new(a, b, b, -a))
}

/// `Σ v² − 1`, evaluated with error-free products and a compensated sum.
fn unit_norm_error(v: &[f64]) -> f64 {
    let (mut sum, mut comp) = (-1.0f64, 0.0f64);
    let mut add = |x: f64| {
        let t = sum + x;
        comp += if sum.abs() >= x.abs() {
            (sum - t) + x
        } else {
            (x - t) + sum
        };
        sum = t;
    };
    for &x in v {
        let hi = x * x;
        add(hi);
        add(x.mul_add(x, -hi));
    }
    sum + comp
}

/// Nudges two entries of different magnitude by up to 32 ulps so that
/// `Σ v²` rounds as close to 1 as possible. Two entries of equal size
/// cannot be used: their first-order corrections cancel.
fn snap_to_unit(v: &mut [f64]) {
    const MAX_ULPS: i64 = 32;
    let Some(i) = (0..v.len()).max_by(|&a, &b| v[a].abs().total_cmp(&v[b].abs())) else {
        return;
    };
    let j = (0..v.len())
        .filter(|&k| v[k].abs() < 0.95 * v[i].abs() && v[k] != 0.0)
        .max_by(|&a, &b| v[a].abs().total_cmp(&v[b].abs()))
        .unwrap_or(i);
    let shift = |x: f64, k: i64| f64::from_bits((x.to_bits() as i64 + k) as u64);
    let (vi, vj) = (v[i], v[j]);
    let mut best = (unit_norm_error(v).abs(), vi, vj);
    for di in -MAX_ULPS..=MAX_ULPS {
        v[i] = shift(vi, di);
        let range = if i == j { 0..=0 } else { -MAX_ULPS..=MAX_ULPS };
        for dj in range {
            if i != j {
                v[j] = shift(vj, dj);
            }
            let e = unit_norm_error(v).abs();
            if e < best.0 {
                best = (e, v[i], v[j]);
            }
        }
    }
    v[j] = best.2;
    v[i] = best.1;
}

/// Degree coin at `node` with `α = d/2`.
pub fn degree_coin(graph: &MoleculeGraph, node: usize, degree: CoinDegree) -> Result<Matrix2<f64>> {
    graph.check_node(node)?;
    let d = match degree {
        CoinDegree::Unweighted => graph.degree(node) as f64,
        CoinDegree::Weighted => graph.weighted_degree(node),
    };
    if d == 0.0 {
        return Err(Error::InvalidGraph(format!(
            "node {} is isolated",
            node + 1
        )));
    }
    coin_for_alpha(d / 2.0)
}

/// Compiled walk operator for one graph.
#[derive(Debug, Clone)]
pub struct DirectedWalk {
    node_count: usize,
    // first basis index of each node's block; block = [stay, arcs...]
    block_start: Vec<usize>,
    // Householder vector of each node block, indexed by basis index
    reflector: Vec<f64>,
    // basis index of the reversed arc (stay entries map to themselves)
    partner: Vec<usize>,
}

impl DirectedWalk {
    pub fn new(graph: &MoleculeGraph, degree: CoinDegree) -> Result<Self> {
        let n = graph.node_count();
        let mut block_start = Vec::with_capacity(n + 1);
        let mut dim = 0;
        for x in 0..n {
            block_start.push(dim);
            dim += 1 + graph.degree(x);
        }
        block_start.push(dim);

        let mut reflector = vec![0.0; dim];
        let mut partner: Vec<usize> = (0..dim).collect();
        for x in 0..n {
            let coin = degree_coin(graph, x, degree)?;
            // [[a, b], [b, −a]] = I − 2uuᵀ with u = (−sin φ/2, cos φ/2)
            let half = coin[(0, 1)].atan2(coin[(0, 0)]) / 2.0;
            let (u0, u1) = (-half.sin(), half.cos());
            let total = graph.weighted_degree(x);
            let block = block_start[x]..block_start[x + 1];
            reflector[block.start] = u0;
            for (k, &(_, w)) in graph.neighbors(x).iter().enumerate() {
                reflector[block.start + 1 + k] = u1 * (w / total).sqrt();
            }
            snap_to_unit(&mut reflector[block]);
            for (k, &(y, _)) in graph.neighbors(x).iter().enumerate() {
                let idx = block_start[x] + 1 + k;
                let back = graph
                    .neighbors(y)
                    .iter()
                    .position(|&(z, _)| z == x)
                    .ok_or_else(|| {
                        Error::NonUnitary(format!("arc {}→{} has no reverse", x + 1, y + 1))
                    })?;
                partner[idx] = block_start[y] + 1 + back;
            }
        }

        // the shift must be an involution on arcs for the step to be unitary
        for (i, &p) in partner.iter().enumerate() {
            if partner[p] != i {
                return Err(Error::NonUnitary("arc pairing is not an involution".into()));
            }
        }

        Ok(Self {
            node_count: n,
            block_start,
            reflector,
            partner,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Dimension of the walk space, `N + 2|E|`.
    pub fn dim(&self) -> usize {
        self.partner.len()
    }

    pub fn stay_index(&self, node: usize) -> usize {
        self.block_start[node]
    }

    /// All amplitude in `(start, stay)`.
    pub fn localized(&self, start: usize) -> Result<DirectedWalkState> {
        if start >= self.node_count {
            return Err(Error::NodeOutOfRange {
                node: start + 1,
                node_count: self.node_count,
            });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); self.dim()];
        amplitudes[self.stay_index(start)] = Complex64::new(1.0, 0.0);
        Ok(DirectedWalkState { amplitudes })
    }

    fn apply_coin(&self, amps: &mut [Complex64]) {
        for x in 0..self.node_count {
            let block = self.block_start[x]..self.block_start[x + 1];
            let r = &self.reflector[block.clone()];
            let v = &mut amps[block];
            let proj: Complex64 = v.iter().zip(r).map(|(z, &w)| z * w).sum::<Complex64>() * 2.0;
            for (z, &w) in v.iter_mut().zip(r) {
                *z -= proj * w;
            }
        }
    }

    /// Coin then shift, in place.
    pub fn step(&self, state: &mut DirectedWalkState) {
        self.apply_coin(&mut state.amplitudes);
        let shifted: Vec<Complex64> = (0..self.dim())
            .map(|i| state.amplitudes[self.partner[i]])
            .collect();
        state.amplitudes = shifted;
    }

    /// Probability of finding the walker at each node.
    pub fn node_probabilities(&self, state: &DirectedWalkState) -> Vec<f64> {
        (0..self.node_count)
            .map(|x| {
                state.amplitudes[self.block_start[x]..self.block_start[x + 1]]
                    .iter()
                    .map(|z| z.norm_sqr())
                    .sum()
            })
            .collect()
    }

    /// Dense matrix of one step, column `j` = image of basis vector `j`.
    pub fn matrix(&self) -> DMatrix<Complex64> {
        let dim = self.dim();
        let mut m = DMatrix::zeros(dim, dim);
        for j in 0..dim {
            let mut s = DirectedWalkState {
                amplitudes: vec![Complex64::new(0.0, 0.0); dim],
            };
            s.amplitudes[j] = Complex64::new(1.0, 0.0);
            self.step(&mut s);
            m.set_column(j, &nalgebra::DVector::from_vec(s.amplitudes));
        }
        m
    }
}

/// Amplitudes over the `(node, stay | arc)` basis of a [`DirectedWalk`].
#[derive(Debug, Clone, PartialEq)]
pub struct DirectedWalkState {
    amplitudes: Vec<Complex64>,
}

impl DirectedWalkState {
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> MoleculeGraph {
        MoleculeGraph::new(
            "ring",
            n,
            (0..n).map(|i| (i, (i + 1) % n, 1.0 + i as f64 * 0.1)),
        )
        .unwrap()
    }

    #[test]
    fn degree_two_coin() {
        let g = ring(6);
        let c = degree_coin(&g, 0, CoinDegree::Unweighted).unwrap();
        let r = 0.5f64.sqrt();
        assert!((c - Matrix2::new(r, r, r, -r)).amax() < 1e-15);
    }

    #[test]
    fn degree_three_coin() {
        let g = MoleculeGraph::new("star", 4, [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)]).unwrap();
        let c = degree_coin(&g, 0, CoinDegree::Unweighted).unwrap();
        assert!((c[(0, 0)] - 0.4f64.sqrt()).abs() < 1e-15);
        assert!((c[(0, 1)] - 0.6f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn isolated_node_rejected() {
        let g = MoleculeGraph::new("atom", 1, []).unwrap();
        assert!(degree_coin(&g, 0, CoinDegree::Unweighted).is_err());
        assert!(DirectedWalk::new(&g, CoinDegree::Unweighted).is_err());
    }

    #[test]
    fn out_of_range_node() {
        assert!(degree_coin(&ring(4), 4, CoinDegree::Unweighted).is_err());
        let w = DirectedWalk::new(&ring(4), CoinDegree::Unweighted).unwrap();
        assert!(w.localized(4).is_err());
    }

    #[test]
    fn step_matrix_is_unitary() {
        for degree in [CoinDegree::Unweighted, CoinDegree::Weighted] {
            let w = DirectedWalk::new(&ring(5), degree).unwrap();
            let u = w.matrix();
            let eye = DMatrix::<Complex64>::identity(w.dim(), w.dim());
            assert!((u.adjoint() * &u - eye).camax() < 1e-14);
        }
    }

    #[test]
    fn dimension_counts_arcs() {
        let w = DirectedWalk::new(&ring(6), CoinDegree::Unweighted).unwrap();
        assert_eq!(w.dim(), 6 + 12);
    }

    #[test]
    fn parse_coin_degree() {
        assert_eq!(
            "weighted".parse::<CoinDegree>().unwrap(),
            CoinDegree::Weighted
        );
        assert!("both".parse::<CoinDegree>().is_err());
    }
}
