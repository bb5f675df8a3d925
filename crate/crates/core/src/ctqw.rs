//! Continuous-time quantum walks on weighted graph Laplacians.
//!
//! Time is measured in units with ħ = 1. The propagator is factored once
//! as `U(t) = Q diag(e^{-iλt}) Qᵀ`, so any sample time costs one complex
//! N×N product.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::MoleculeGraph;

pub type Complex64 = Complex<f64>;

/// `H = gamma_scale · (D − A)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hamiltonian {
    matrix: DMatrix<f64>,
    gamma_scale: f64,
}

impl Hamiltonian {
    pub fn from_graph(graph: &MoleculeGraph, gamma_scale: f64) -> Result<Self> {
        if !gamma_scale.is_finite() || gamma_scale <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "gamma scale must be positive, got {gamma_scale}"
            )));
        }
        Ok(Self {
            matrix: graph.laplacian() * gamma_scale,
            gamma_scale,
        })
    }

    /// Wraps an arbitrary real symmetric matrix.
    pub fn from_matrix(matrix: DMatrix<f64>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() || matrix.nrows() == 0 {
            return Err(Error::DimensionMismatch(
                "Hamiltonian must be square".into(),
            ));
        }
        let scale = matrix.amax().max(1.0);
        if (&matrix - matrix.transpose()).amax() > 1e-12 * scale {
            return Err(Error::InvalidParameter(
                "Hamiltonian must be symmetric".into(),
            ));
        }
        Ok(Self {
            matrix,
            gamma_scale: 1.0,
        })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn gamma_scale(&self) -> f64 {
        self.gamma_scale
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }
}

/// Spectral factors of a Hamiltonian, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct Propagator {
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<f64>,
}

impl Propagator {
    pub fn new(h: &Hamiltonian) -> Result<Self> {
        let eig = h.matrix().clone().symmetric_eigen();
        if eig.eigenvalues.iter().any(|v| !v.is_finite()) {
            return Err(Error::Eigen("non-finite eigenvalue".into()));
        }
        let n = h.dim();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let eigenvalues = DVector::from_iterator(n, order.iter().map(|&i| eig.eigenvalues[i]));
        let eigenvectors = DMatrix::from_columns(
            &order
                .iter()
                .map(|&i| eig.eigenvectors.column(i).into_owned())
                .collect::<Vec<_>>(),
        );
        Ok(Self {
            eigenvalues,
            eigenvectors,
        })
    }

    pub fn from_graph(graph: &MoleculeGraph, gamma_scale: f64) -> Result<Self> {
        Self::new(&Hamiltonian::from_graph(graph, gamma_scale)?)
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &DVector<f64> {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &DMatrix<f64> {
        &self.eigenvectors
    }

    /// `Q diag(λ) Qᵀ`.
    pub fn reconstruct(&self) -> DMatrix<f64> {
        &self.eigenvectors
            * DMatrix::from_diagonal(&self.eigenvalues)
            * self.eigenvectors.transpose()
    }

    /// `U(t) = e^{-iHt}`.
    pub fn unitary(&self, t: f64) -> DMatrix<Complex64> {
        let n = self.dim();
        if t == 0.0 {
            // exact, rather than Q Qᵀ with rounding
            return DMatrix::identity(n, n);
        }
        let q = &self.eigenvectors;
        let mut scaled = DMatrix::<Complex64>::zeros(n, n);
        for m in 0..n {
            let phase = Complex64::from_polar(1.0, -self.eigenvalues[m] * t);
            for r in 0..n {
                scaled[(r, m)] = phase * q[(r, m)];
            }
        }
        scaled * q.transpose().map(Complex64::from)
    }

    /// Walker ensemble at time `t`: walker `j` starts on node `j`.
    pub fn probability_matrix(&self, t: f64) -> ProbabilityMatrix {
        let u = self.unitary(t);
        // B_jk = |<k|U|j>|² = |U_kj|²
        ProbabilityMatrix(u.transpose().map(|z| z.norm_sqr()))
    }

    pub fn samples(&self, grid: TimeGrid) -> impl Iterator<Item = (f64, ProbabilityMatrix)> + '_ {
        grid.times().map(move |t| (t, self.probability_matrix(t)))
    }
}

/// `B_jk(t)`: probability that walker `j` (started at node `j`) is at node `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityMatrix(DMatrix<f64>);

impl ProbabilityMatrix {
    pub fn from_matrix(m: DMatrix<f64>) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, walker: usize, node: usize) -> f64 {
        self.0[(walker, node)]
    }

    /// Occupancies of `node` across all walkers.
    pub fn column(&self, node: usize) -> Vec<f64> {
        self.0.column(node).iter().copied().collect()
    }

    /// Largest deviation of any row or column sum from 1.
    pub fn bistochastic_error(&self) -> f64 {
        let rows = self.0.row_iter().map(|r| (r.sum() - 1.0).abs());
        let cols = self.0.column_iter().map(|c| (c.sum() - 1.0).abs());
        rows.chain(cols).fold(0.0, f64::max)
    }

    pub fn symmetry_error(&self) -> f64 {
        (&self.0 - self.0.transpose()).amax()
    }

    /// `‖self − other‖_max`.
    pub fn max_distance(&self, other: &ProbabilityMatrix) -> f64 {
        (&self.0 - &other.0).amax()
    }

    pub fn distance_from_identity(&self) -> f64 {
        let n = self.dim();
        (&self.0 - DMatrix::<f64>::identity(n, n)).amax()
    }
}

pub fn evolve_ensemble(p: &Propagator, t: f64) -> Result<ProbabilityMatrix> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "time must be non-negative, got {t}"
        )));
    }
    Ok(p.probability_matrix(t))
}

/// Uniform sampling grid `0, dt, 2dt, …` up to and including `t_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t_max: f64,
    dt: f64,
    len: usize,
}

impl TimeGrid {
    pub fn new(t_max: f64, dt: f64) -> Result<Self> {
        if !t_max.is_finite() || t_max <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "t_max must be positive, got {t_max}"
            )));
        }
        if !dt.is_finite() || dt <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "dt must be positive, got {dt}"
            )));
        }
        // tolerate representation error, e.g. 200 / 0.01 = 20000.000000000004
        let steps = (t_max / dt * (1.0 + 1e-12)).floor() as usize;
        Ok(Self {
            t_max,
            dt,
            len: steps + 1,
        })
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn time(&self, i: usize) -> f64 {
        i as f64 * self.dt
    }

    pub fn times(&self) -> impl Iterator<Item = f64> {
        let dt = self.dt;
        (0..self.len).map(move |i| i as f64 * dt)
    }
}

pub fn time_series(p: &Propagator, t_max: f64, dt: f64) -> Result<Vec<(f64, ProbabilityMatrix)>> {
    let grid = TimeGrid::new(t_max, dt)?;
    Ok(p.samples(grid).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(w: f64) -> MoleculeGraph {
        MoleculeGraph::new("pair", 2, [(0, 1, w)]).unwrap()
    }

    #[test]
    fn gamma_scale_must_be_positive() {
        assert!(Hamiltonian::from_graph(&pair(1.0), 0.0).is_err());
        assert!(Hamiltonian::from_graph(&pair(1.0), -2.0).is_err());
    }

    #[test]
    fn two_node_spectrum() {
        let p = Propagator::from_graph(&pair(1.3), 1.0).unwrap();
        assert!(p.eigenvalues()[0].abs() < 1e-14);
        assert!((p.eigenvalues()[1] - 2.6).abs() < 1e-14);
    }

    #[test]
    fn zero_hamiltonian_is_identity_evolution() {
        let h = Hamiltonian::from_matrix(DMatrix::zeros(3, 3)).unwrap();
        let p = Propagator::new(&h).unwrap();
        for t in [0.0, 1.0, 123.4] {
            let u = p.unitary(t);
            let eye = DMatrix::<Complex64>::identity(3, 3);
            assert!((u - eye).camax() < 1e-15);
        }
    }

    #[test]
    fn initial_ensemble_is_identity() {
        let p = Propagator::from_graph(&pair(1.0), 1.0).unwrap();
        assert!(evolve_ensemble(&p, 0.0).unwrap().distance_from_identity() < 1e-15);
        assert!(evolve_ensemble(&p, -1.0).is_err());
    }

    #[test]
    fn grid_counts() {
        assert_eq!(TimeGrid::new(200.0, 0.01).unwrap().len(), 20001);
        let g = TimeGrid::new(1.0, 0.5).unwrap();
        assert_eq!(g.times().collect::<Vec<_>>(), vec![0.0, 0.5, 1.0]);
        assert_eq!(TimeGrid::new(1.0, 0.3).unwrap().len(), 4);
        assert!(TimeGrid::new(0.0, 0.1).is_err());
        assert!(TimeGrid::new(1.0, 0.0).is_err());
    }

    #[test]
    fn asymmetric_matrix_rejected() {
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(Hamiltonian::from_matrix(m).is_err());
    }
}
