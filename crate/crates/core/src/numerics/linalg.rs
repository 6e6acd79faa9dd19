//! Small dense symmetric linear algebra and Kronecker utilities.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};

/// Maximum absolute asymmetry |m_ij - m_ji|.
pub fn asymmetry(m: &DMatrix<f64>) -> f64 {
    let (r, c) = m.shape();
    if r != c {
        return f64::INFINITY;
    }
    let mut worst = 0.0f64;
    for i in 0..r {
        for j in (i + 1)..c {
            worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    worst
}

fn reject_asymmetric(m: &DMatrix<f64>) -> Result<()> {
    let scale = m.iter().fold(0.0f64, |acc, x| acc.max(x.abs())).max(1.0);
    let asym = asymmetry(m);
    if asym > 1e-12 * scale {
        return Err(Error::NotSymmetric { asymmetry: asym });
    }
    Ok(())
}

/// Eigendecomposition of a symmetric matrix. Eigenvalues come back sorted
/// descending; each eigenvector is normalized so its first component of
/// nonnegligible magnitude is positive, which makes downstream measures
/// deterministic.
pub fn sym_eigen(m: &DMatrix<f64>) -> Result<(DVector<f64>, DMatrix<f64>)> {
    reject_asymmetric(m)?;
    let n = m.nrows();
    // symmetrize before factoring so tiny asymmetries cannot leak through
    let sym = (m + m.transpose()) * 0.5;
    let decomp = sym.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        decomp.eigenvalues[j]
            .partial_cmp(&decomp.eigenvalues[i])
            .unwrap()
    });
    let mut values = DVector::zeros(n);
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        values[dst] = decomp.eigenvalues[src];
        let col = decomp.eigenvectors.column(src);
        let maxabs = col.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        let flip = col
            .iter()
            .find(|x| x.abs() > 1e-12 * maxabs.max(1e-300))
            .map(|x| *x < 0.0)
            .unwrap_or(false);
        for i in 0..n {
            vectors[(i, dst)] = if flip { -col[i] } else { col[i] };
        }
    }
    Ok((values, vectors))
}

/// Unique symmetric positive-definite square root.
pub fn psd_sqrt(m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let (values, vectors) = sym_eigen(m)?;
    if values.iter().any(|&v| v <= 0.0) {
        return Err(Error::NotPositiveDefinite);
    }
    let d = DMatrix::from_diagonal(&values.map(|v| v.sqrt()));
    let s = &vectors * d * vectors.transpose();
    Ok((&s + s.transpose()) * 0.5)
}

/// Unique symmetric positive-definite inverse square root.
pub fn psd_inverse_sqrt(m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let (values, vectors) = sym_eigen(m)?;
    if values.iter().any(|&v| v <= 0.0) {
        return Err(Error::NotPositiveDefinite);
    }
    let d = DMatrix::from_diagonal(&values.map(|v| 1.0 / v.sqrt()));
    let s = &vectors * d * vectors.transpose();
    Ok((&s + s.transpose()) * 0.5)
}

/// Inverse of a symmetric positive-definite matrix via Cholesky.
pub fn spd_inverse(m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    reject_asymmetric(m)?;
    let chol = m.clone().cholesky().ok_or(Error::NotPositiveDefinite)?;
    Ok(chol.inverse())
}

/// Kronecker product.
pub fn kron(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a.kronecker(b)
}

/// Column-stacking vectorization.
pub fn vec(m: &DMatrix<f64>) -> DVector<f64> {
    DVector::from_column_slice(m.as_slice())
}
