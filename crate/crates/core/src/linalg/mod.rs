//! Small dense complex linear algebra.

mod antilinear;
mod compare;
mod matrix;
pub mod realify;

pub use antilinear::AntilinearOp;
pub use compare::{proportionality, ApproxCompare, Comparison};
pub use matrix::{CMatrix, CVector};
pub use realify::RealityClass;

use crate::scalar::Real;

/// Pauli matrices `σ¹, σ², σ³`.
pub fn pauli<T: Real>() -> [CMatrix<T>; 3] {
    [
        CMatrix::from_real(&[[0.0, 1.0], [1.0, 0.0]]),
        CMatrix::from_pairs(&[[(0.0, 0.0), (0.0, -1.0)], [(0.0, 1.0), (0.0, 0.0)]]),
        CMatrix::from_real(&[[1.0, 0.0], [0.0, -1.0]]),
    ]
}

/// `Σ_k a_k M_k` with real coefficients.
pub fn real_combination<T: Real>(coeffs: &[T], mats: &[CMatrix<T>]) -> CMatrix<T> {
    let (r, c) = mats[0].shape();
    coeffs.iter().zip(mats).fold(CMatrix::zeros(r, c), |acc, (&a, m)| &acc + &m.scale_real(a))
}

/// Levi-Civita symbol on indices `0..3`.
pub fn levi_civita(i: usize, j: usize, k: usize) -> i32 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests;
