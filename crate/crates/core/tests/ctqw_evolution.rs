mod common;

use std::f64::consts::PI;

use nalgebra::{Complex, DMatrix};
use pahwalk_core::catalog;
use pahwalk_core::ctqw::{evolve_ensemble, time_series, Hamiltonian, Propagator, TimeGrid};
use pahwalk_core::MoleculeGraph;
use proptest::prelude::*;

const TOL: f64 = 1e-10;

fn unitarity_error(u: &DMatrix<Complex<f64>>) -> f64 {
    let n = u.nrows();
    (u.adjoint() * u - DMatrix::identity(n, n)).camax()
}

#[test]
fn benzene_hamiltonian_entries() {
    let g = catalog::catalog_molecule("benzene").unwrap();
    let h = Hamiltonian::from_graph(&g, 1.0).unwrap();
    let h2 = Hamiltonian::from_graph(&g, 2.0).unwrap();
    for i in 0..6 {
        assert!((h.matrix()[(i, i)] - 2.936).abs() < 1e-12);
        assert!((h.matrix()[(i, (i + 5) % 6)] + 1.468).abs() < 1e-12);
    }
    assert!((h2.matrix() - h.matrix() * 2.0).amax() < 1e-12);
    assert!(Hamiltonian::from_graph(&g, 0.0).is_err());
    assert!(Hamiltonian::from_graph(&g, -1.0).is_err());
}

#[test]
fn pair_spectrum_is_zero_and_two_w() {
    let w = 1.3;
    let g = MoleculeGraph::new("pair", 2, [(0, 1, w)]).unwrap();
    let p = Propagator::from_graph(&g, 1.0).unwrap();
    assert!(p.eigenvalues()[0].abs() < 1e-12);
    assert!((p.eigenvalues()[1] - 2.0 * w).abs() < 1e-12);
}

#[test]
fn pair_reaches_even_split_in_closed_form() {
    // B_12(t) = sin²(w t) for the two-node walk, so 1/2 at t = π/(4w)
    let w = 1.3;
    let g = MoleculeGraph::new("pair", 2, [(0, 1, w)]).unwrap();
    let p = Propagator::from_graph(&g, 1.0).unwrap();
    let b = p.probability_matrix(PI / (4.0 * w));
    assert!((b.matrix() - DMatrix::from_element(2, 2, 0.5)).amax() < 1e-12);
    for t in [0.1, 0.7, 3.3] {
        let b = p.probability_matrix(t);
        assert!((b.get(0, 1) - (w * t).sin().powi(2)).abs() < 1e-12);
    }
}

#[test]
fn zero_hamiltonian_is_identity() {
    let h = Hamiltonian::from_matrix(DMatrix::zeros(4, 4)).unwrap();
    let p = Propagator::new(&h).unwrap();
    for t in [0.0, 1.0, 123.4] {
        assert_eq!(p.probability_matrix(t).distance_from_identity(), 0.0);
    }
}

#[test]
fn propagator_reconstructs_hamiltonian() {
    for g in catalog::all() {
        let h = Hamiltonian::from_graph(&g, 1.0).unwrap();
        let p = Propagator::new(&h).unwrap();
        assert!((p.reconstruct() - h.matrix()).amax() < TOL, "{}", g.name());
        let q = p.eigenvectors();
        let n = g.node_count();
        assert!((q.transpose() * q - DMatrix::identity(n, n)).amax() < TOL);
    }
}

#[test]
fn benzene_unitarity_at_named_times() {
    let p = Propagator::from_graph(&catalog::catalog_molecule("benzene").unwrap(), 1.0).unwrap();
    for t in [0.5, 7.3, 199.99] {
        assert!(unitarity_error(&p.unitary(t)) < TOL);
    }
}

#[test]
fn semigroup() {
    let p = Propagator::from_graph(&catalog::catalog_molecule("anthracene").unwrap(), 1.0).unwrap();
    for (a, b) in [(0.3, 1.1), (5.0, 17.25), (80.0, 99.5)] {
        let lhs = p.unitary(a) * p.unitary(b);
        assert!((lhs - p.unitary(a + b)).camax() < 1e-9);
    }
}

#[test]
fn initial_ensemble_is_identity() {
    for g in catalog::all() {
        let p = Propagator::from_graph(&g, 1.0).unwrap();
        assert_eq!(
            evolve_ensemble(&p, 0.0).unwrap().distance_from_identity(),
            0.0
        );
    }
}

#[test]
fn negative_time_rejected() {
    let p = Propagator::from_graph(&catalog::catalog_molecule("benzene").unwrap(), 1.0).unwrap();
    assert!(evolve_ensemble(&p, -0.1).is_err());
    assert!(evolve_ensemble(&p, f64::NAN).is_err());
}

#[test]
fn benzene_ensemble_is_circulant() {
    let p = Propagator::from_graph(&catalog::catalog_molecule("benzene").unwrap(), 1.0).unwrap();
    for t in [0.37, 2.0, 11.9, 150.3] {
        let b = p.probability_matrix(t);
        for j in 0..6 {
            for k in 0..6 {
                let reference = b.get(0, (k + 6 - j) % 6);
                assert!((b.get(j, k) - reference).abs() < TOL);
            }
        }
    }
}

#[test]
fn grid_sizes() {
    assert_eq!(TimeGrid::new(200.0, 0.01).unwrap().len(), 20001);
    let times: Vec<f64> = TimeGrid::new(1.0, 0.5).unwrap().times().collect();
    assert_eq!(times, vec![0.0, 0.5, 1.0]);
    assert!(TimeGrid::new(0.0, 0.1).is_err());
    assert!(TimeGrid::new(1.0, 0.0).is_err());
    assert!(TimeGrid::new(1.0, -0.5).is_err());
}

#[test]
fn every_sample_is_bistochastic() {
    for g in catalog::all() {
        let p = Propagator::from_graph(&g, 1.0).unwrap();
        for (_, b) in time_series(&p, 20.0, 0.05).unwrap() {
            assert!(b.bistochastic_error() < TOL);
            assert!(b.symmetry_error() < TOL);
            assert!(b.matrix().iter().all(|&x| (-TOL..=1.0 + TOL).contains(&x)));
        }
    }
}

#[test]
fn small_catalog_matches_oracle() {
    for name in ["benzene", "naphthalene"] {
        let g = catalog::catalog_molecule(name).unwrap();
        let p = Propagator::from_graph(&g, 1.0).unwrap();
        for t in [0.01, 1.0, 4.2801, 33.3, 187.6] {
            let oracle = common::probability_oracle(&g.laplacian(), t);
            assert!(
                (p.probability_matrix(t).matrix() - oracle).amax() < 1e-8,
                "{name} t={t}"
            );
        }
    }
}

fn small_graph() -> impl Strategy<Value = MoleculeGraph> {
    (3usize..7)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(0.5f64..2.0, n),
                any::<bool>(),
            )
        })
        .prop_map(|(n, w, chord)| {
            let mut edges: Vec<(usize, usize, f64)> =
                (0..n - 1).map(|i| (i, i + 1, w[i])).collect();
            if chord {
                edges.push((0, n - 1, w[n - 1]));
            }
            MoleculeGraph::new("ring-or-path", n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unitary_and_bistochastic(g in small_graph(), t in 0.0f64..200.0, scale in 0.1f64..3.0) {
        let p = Propagator::from_graph(&g, scale).unwrap();
        prop_assert!(unitarity_error(&p.unitary(t)) < TOL);
        let b = p.probability_matrix(t);
        prop_assert!(b.bistochastic_error() < TOL);
        prop_assert!(b.symmetry_error() < TOL);
    }

    #[test]
    fn spectral_matches_series_oracle(g in small_graph(), t in 0.0f64..200.0) {
        let p = Propagator::from_graph(&g, 1.0).unwrap();
        let oracle = common::probability_oracle(&g.laplacian(), t);
        prop_assert!((p.probability_matrix(t).matrix() - oracle).amax() < 1e-8);
    }
}
