//! Relative bond strength orders from local-mode force constants.
//!
//! The Badger power law maps a local stretching force constant `k` to a
//! bond order calibrated on ethane (BO = 1) and ethene (BO = 2). The
//! constants assume the force-constant units of the calibration data; this
//! module does not convert units, so callers must supply `k` in those
//! units.
//!
//! The Wilson GF helpers start from already assembled `F`, `G` and `D`
//! matrices.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

pub const BADGER_PREFACTOR: f64 = 0.29909;
pub const BADGER_EXPONENT: f64 = 0.86585;

/// Reject `K = DᵀFD` when its condition estimate exceeds this.
pub const DEFAULT_MAX_CONDITION: f64 = 1e12;

/// Extended Badger rule, `BO = 0.29909 k^0.86585`. `k = 0` is an absent bond.
pub fn badger_bond_order(k: f64) -> Result<f64> {
    if !k.is_finite() || k < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "force constant must be finite and non-negative, got {k}"
        )));
    }
    Ok(BADGER_PREFACTOR * k.powf(BADGER_EXPONENT))
}

/// Inverse of [`badger_bond_order`].
pub fn badger_force_constant(bond_order: f64) -> Result<f64> {
    if !bond_order.is_finite() || bond_order < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "bond order must be finite and non-negative, got {bond_order}"
        )));
    }
    Ok((bond_order / BADGER_PREFACTOR).powf(1.0 / BADGER_EXPONENT))
}

fn square_dim(name: &str, m: &DMatrix<f64>) -> Result<usize> {
    if m.nrows() != m.ncols() || m.nrows() == 0 {
        return Err(Error::DimensionMismatch(format!(
            "{name} must be square and non-empty, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(m.nrows())
}

fn check_same(name: &str, m: &DMatrix<f64>, dim: usize) -> Result<()> {
    if square_dim(name, m)? != dim {
        return Err(Error::DimensionMismatch(format!(
            "{name} is {0}x{0}, expected {dim}x{dim}",
            m.nrows()
        )));
    }
    Ok(())
}

/// Frobenius norm of `G F D - D Λ`. Zero when `(D, Λ)` solves Wilson's
/// equation for the given `G` and `F`.
pub fn wilson_residual(
    g: &DMatrix<f64>,
    f: &DMatrix<f64>,
    d: &DMatrix<f64>,
    lambda: &DVector<f64>,
) -> Result<f64> {
    let m = square_dim("F", f)?;
    check_same("G", g, m)?;
    check_same("D", d, m)?;
    if lambda.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "Λ has {} entries, expected {m}",
            lambda.len()
        )));
    }
    let lhs = g * f * d;
    let rhs = d * DMatrix::from_diagonal(lambda);
    Ok((lhs - rhs).norm())
}

fn condition_estimate(k: &DMatrix<f64>) -> f64 {
    let sv = k.singular_values();
    let max = sv.max();
    let min = sv.min();
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Local-mode force constants `k_μ = 1 / (d_μᵀ K⁻¹ d_μ)` with `K = DᵀFD`,
/// one per column `d_μ` of `D`.
pub fn local_force_constants(f: &DMatrix<f64>, d: &DMatrix<f64>) -> Result<Vec<f64>> {
    local_force_constants_with_limit(f, d, DEFAULT_MAX_CONDITION)
}

pub fn local_force_constants_with_limit(
    f: &DMatrix<f64>,
    d: &DMatrix<f64>,
    max_condition: f64,
) -> Result<Vec<f64>> {
    let m = square_dim("F", f)?;
    check_same("D", d, m)?;
    let scale = f.amax().max(f64::MIN_POSITIVE);
    if (f - f.transpose()).amax() > 1e-9 * scale {
        return Err(Error::InvalidParameter("F must be symmetric".into()));
    }

    let k = d.transpose() * f * d;
    let condition = condition_estimate(&k);
    if condition.is_nan() || condition > max_condition {
        return Err(Error::IllConditioned {
            condition,
            limit: max_condition,
        });
    }
    let lu = k.clone().lu();

    d.column_iter()
        .enumerate()
        .map(|(mu, col)| {
            let col = col.into_owned();
            let x = lu.solve(&col).ok_or(Error::IllConditioned {
                condition: f64::INFINITY,
                limit: max_condition,
            })?;
            let compliance = col.dot(&x);
            if compliance == 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "mode {} has zero compliance",
                    mu + 1
                )));
            }
            Ok(1.0 / compliance)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalMode {
    pub index: usize,
    pub k_mu: f64,
    pub bond_order: f64,
}

/// Local force constants paired with their Badger bond orders.
pub fn local_modes(f: &DMatrix<f64>, d: &DMatrix<f64>) -> Result<Vec<LocalMode>> {
    local_force_constants(f, d)?
        .into_iter()
        .enumerate()
        .map(|(index, k_mu)| {
            Ok(LocalMode {
                index,
                k_mu,
                bond_order: badger_bond_order(k_mu)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absent_bond_has_zero_order() {
        assert_eq!(badger_bond_order(0.0).unwrap(), 0.0);
    }

    #[test]
    fn negative_force_constant_rejected() {
        assert!(badger_bond_order(-1e-3).is_err());
        assert!(badger_bond_order(f64::NAN).is_err());
        assert!(badger_force_constant(-1.0).is_err());
    }

    #[test]
    fn identity_decomposition_has_zero_residual() {
        let f = DMatrix::from_diagonal(&DVector::from_vec(vec![2.0, 5.0, 7.5]));
        let eye = DMatrix::identity(3, 3);
        let lambda = DVector::from_vec(vec![2.0, 5.0, 7.5]);
        assert_eq!(wilson_residual(&eye, &f, &eye, &lambda).unwrap(), 0.0);
    }

    #[test]
    fn perturbed_eigenvalue_shows_in_residual() {
        let f = DMatrix::from_diagonal(&DVector::from_vec(vec![2.0, 5.0]));
        let eye = DMatrix::identity(2, 2);
        let lambda = DVector::from_vec(vec![2.0, 6.0]);
        // column 2 of D is a unit vector, so the residual is exactly 1
        assert_eq!(wilson_residual(&eye, &f, &eye, &lambda).unwrap(), 1.0);
    }

    #[test]
    fn residual_dimension_mismatch() {
        let eye2 = DMatrix::<f64>::identity(2, 2);
        let eye3 = DMatrix::<f64>::identity(3, 3);
        let l2 = DVector::from_vec(vec![1.0, 1.0]);
        assert!(wilson_residual(&eye3, &eye2, &eye2, &l2).is_err());
        let l3 = DVector::from_vec(vec![1.0, 1.0, 1.0]);
        assert!(wilson_residual(&eye2, &eye2, &eye2, &l3).is_err());
    }

    #[test]
    fn diagonal_force_constants_pass_through() {
        let f = DMatrix::from_diagonal(&DVector::from_vec(vec![4.2, 9.1]));
        let k = local_force_constants(&f, &DMatrix::identity(2, 2)).unwrap();
        assert!((k[0] - 4.2).abs() < 1e-14);
        assert!((k[1] - 9.1).abs() < 1e-14);
    }

    #[test]
    fn singular_k_is_signalled() {
        let f = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 1.0, 1.0]);
        let err = local_force_constants(&f, &DMatrix::identity(2, 2)).unwrap_err();
        assert!(matches!(err, Error::IllConditioned { .. }));
    }

    #[test]
    fn asymmetric_f_rejected() {
        let f = DMatrix::from_row_slice(2, 2, &[1.0, 0.5, 0.0, 1.0]);
        assert!(local_force_constants(&f, &DMatrix::identity(2, 2)).is_err());
    }

    #[test]
    fn local_modes_carry_bond_orders() {
        let f = DMatrix::from_diagonal(&DVector::from_vec(vec![4.0, 9.0]));
        let modes = local_modes(&f, &DMatrix::identity(2, 2)).unwrap();
        assert_eq!(modes[1].index, 1);
        assert!((modes[1].bond_order - badger_bond_order(9.0).unwrap()).abs() < 1e-14);
    }
}
