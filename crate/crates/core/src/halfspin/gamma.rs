//! Chiral-representation Dirac matrices, right-handed block on top.
//!
//! `γ⁰ = offdiag(1, 1)`, `γⁱ = offdiag(-σⁱ, σⁱ)`, `γ⁵ = diag(1, -1)`. With
//! `u = (φ_R, φ_L)` this sign of `γⁱ` is the one for which `p̸ u = m u`.

use crate::halfspin::FourMomentum;
use crate::linalg::{pauli, CMatrix, CVector};
use crate::scalar::{Real, C};

/// `Θ = -iσ₂ = [[0, -1], [1, 0]]`.
pub fn big_theta<T: Real>() -> CMatrix<T> {
    CMatrix::from_real(&[[0.0, -1.0], [1.0, 0.0]])
}

pub fn gamma0<T: Real>() -> CMatrix<T> {
    let one = CMatrix::identity(2);
    CMatrix::block_offdiag(&one, &one)
}

/// Spatial `γⁱ`, `i ∈ {1, 2, 3}`.
pub fn gamma_spatial<T: Real>(i: usize) -> CMatrix<T> {
    assert!((1..=3).contains(&i), "spatial index must be 1..=3");
    let s = &pauli::<T>()[i - 1];
    CMatrix::block_offdiag(&-s, s)
}

pub fn gamma<T: Real>(mu: usize) -> CMatrix<T> {
    if mu == 0 {
        gamma0()
    } else {
        gamma_spatial(mu)
    }
}

pub fn gamma5<T: Real>() -> CMatrix<T> {
    let one = CMatrix::<T>::identity(2);
    CMatrix::block_diag(&one, &-&one)
}

/// `σ·v` for a real 3-vector.
pub fn sigma_dot<T: Real>(v: [T; 3]) -> CMatrix<T> {
    crate::linalg::real_combination(&v, &pauli::<T>())
}

/// `γ^μ p_μ = E γ⁰ - p·γ`.
pub fn slash<T: Real>(p: &FourMomentum<T>) -> CMatrix<T> {
    let [e, px, py, pz] = p.contravariant();
    let mut out = gamma0::<T>().scale_real(e);
    for (i, pi) in [px, py, pz].into_iter().enumerate() {
        out = &out - &gamma_spatial::<T>(i + 1).scale_real(pi);
    }
    out
}

/// `ψ̄ χ = ψ† γ⁰ χ`.
pub fn bar_product<T: Real>(psi: &CVector<T>, chi: &CVector<T>) -> C<T> {
    psi.dot(&gamma0::<T>().mul_vec(chi))
}
