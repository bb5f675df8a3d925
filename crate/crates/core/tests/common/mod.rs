//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's numerics.
#![allow(dead_code)]

use nalgebra::{Complex, DMatrix};

pub type C64 = Complex<f64>;

/// `exp(-i H t)` by scaling and squaring of a truncated Taylor series.
pub fn expm_oracle(h: &DMatrix<f64>, t: f64) -> DMatrix<C64> {
    let n = h.nrows();
    let a: DMatrix<C64> = h.map(|x| C64::new(0.0, -x * t));
    let norm = a.iter().map(|z| z.norm()).sum::<f64>();
    let mut squarings = 0;
    let mut scale = 1.0;
    while norm * scale > 0.5 {
        scale *= 0.5;
        squarings += 1;
    }
    let a = a * C64::new(scale, 0.0);
    let mut sum = DMatrix::<C64>::identity(n, n);
    let mut term = DMatrix::<C64>::identity(n, n);
    for k in 1..=30 {
        term = &term * &a * C64::new(1.0 / k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// `B_jk = |<k|U|j>|²` from the oracle propagator.
pub fn probability_oracle(h: &DMatrix<f64>, t: f64) -> DMatrix<f64> {
    let u = expm_oracle(h, t);
    u.transpose().map(|z| z.norm_sqr())
}

/// Weighted Laplacian assembled straight from an edge list (0-based).
pub fn laplacian_oracle(n: usize, edges: &[(usize, usize, f64)]) -> DMatrix<f64> {
    let mut l = DMatrix::zeros(n, n);
    for &(i, j, w) in edges {
        l[(i, j)] -= w;
        l[(j, i)] -= w;
        l[(i, i)] += w;
        l[(j, j)] += w;
    }
    l
}

pub fn maxp_oracle(b: &DMatrix<f64>, node: usize) -> f64 {
    (0..b.nrows())
        .map(|j| b[(j, node)])
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Sort, drop the first and last, average.
pub fn trp_oracle(b: &DMatrix<f64>, node: usize) -> f64 {
    let mut v: Vec<f64> = (0..b.nrows()).map(|j| b[(j, node)]).collect();
    v.sort_by(f64::total_cmp);
    let inner = &v[1..v.len() - 1];
    inner.iter().sum::<f64>() / inner.len() as f64
}

/// Solves `0.29909 k^0.86585 = bo` by bisection on [0, 1e3].
pub fn badger_inverse_bisect(bo: f64) -> f64 {
    let f = |k: f64| 0.29909 * k.powf(0.86585) - bo;
    let (mut lo, mut hi) = (0.0_f64, 1e3_f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `k_μ = 1 / (d_μᵀ (DᵀFD)⁻¹ d_μ)` with an explicit inverse.
pub fn local_force_constant_oracle(f: &DMatrix<f64>, d: &DMatrix<f64>, mu: usize) -> f64 {
    let k = d.transpose() * f * d;
    let kinv = k.try_inverse().expect("invertible K");
    let dm = d.column(mu);
    1.0 / (dm.transpose() * kinv * dm)[(0, 0)]
}
