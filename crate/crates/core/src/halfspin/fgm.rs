//! Two-component second-order equations with a constant field strength.

use crate::error::{Error, Result};
use crate::linalg::{levi_civita, pauli, CMatrix, CVector};
use crate::scalar::{i_unit, Real};

/// `σ^{μν}` and `σ̃^{μν}` indexed `[μ][ν]`.
#[derive(Debug, Clone)]
pub struct FgmTensors<T: Real> {
    pub sigma: Vec<Vec<CMatrix<T>>>,
    pub sigma_tilde: Vec<Vec<CMatrix<T>>>,
}

/// `σ^{0i} = -σ̃^{0i} = iσ^i`, `σ^{ij} = σ̃^{ij} = ε_{ijk}σ^k`, antisymmetric.
pub fn fgm_tensors<T: Real>() -> FgmTensors<T> {
    let s = pauli::<T>();
    let z = CMatrix::<T>::zeros(2, 2);
    let build = |tilde: bool| {
        let sign = if tilde { -T::one() } else { T::one() };
        (0..4)
            .map(|mu| {
                (0..4)
                    .map(|nu| match (mu, nu) {
                        (0, 0) => z.clone(),
                        (0, i) => s[i - 1].scale(i_unit()).scale_real(sign),
                        (i, 0) => s[i - 1].scale(i_unit()).scale_real(-sign),
                        (i, j) => (0..3).fold(z.clone(), |acc, k| {
                            &acc + &s[k].scale_real(T::lit(levi_civita(i - 1, j - 1, k) as f64))
                        }),
                    })
                    .collect()
            })
            .collect()
    };
    FgmTensors { sigma: build(false), sigma_tilde: build(true) }
}

/// `Σ_{μν} t^{μν} F_{μν}`.
pub fn contract<T: Real>(t: &[Vec<CMatrix<T>>], f: &[[T; 4]; 4]) -> CMatrix<T> {
    let mut acc = CMatrix::zeros(2, 2);
    for mu in 0..4 {
        for nu in 0..4 {
            acc = &acc + &t[mu][nu].scale_real(f[mu][nu]);
        }
    }
    acc
}

/// Residual norms of
/// `[π⁻·π⁻ - m² - (g/2)σF] χ` and `[π⁺·π⁺ - m² + (g/2)σ̃F] φ`
/// at the origin, where the linear gauge `A_μ = -½F_{μν}x^ν` vanishes and
/// `π^± = p`. `p` is contravariant and may be off shell.
pub fn fgm_residuals<T: Real>(
    chi: &CVector<T>,
    phi: &CVector<T>,
    p: [T; 4],
    mass: T,
    f: &[[T; 4]; 4],
    g: T,
) -> Result<(T, T)> {
    let scale = f.iter().flatten().fold(T::one(), |a, x| a.max(x.abs()));
    let tol = T::default_tolerance() * scale;
    for mu in 0..4 {
        for nu in 0..4 {
            let asym = (f[mu][nu] + f[nu][mu]).abs();
            if asym.is_nan() || asym > tol {
                return Err(Error::NotAntisymmetric(asym.to_f64_lossy()));
            }
        }
    }
    if chi.len() != 2 || phi.len() != 2 {
        return Err(Error::DimensionMismatch {
            op: "fgm_residuals",
            expected: "2-spinors".into(),
            found: format!("{}, {}", chi.len(), phi.len()),
        });
    }
    let t = fgm_tensors::<T>();
    let kg = p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3] - mass * mass;
    let half_g = g * T::lit(0.5);
    let id = CMatrix::<T>::identity(2);
    let op_chi = &id.scale_real(kg) - &contract(&t.sigma, f).scale_real(half_g);
    let op_phi = &id.scale_real(kg) + &contract(&t.sigma_tilde, f).scale_real(half_g);
    Ok((op_chi.mul_vec(chi).norm(), op_phi.mul_vec(phi).norm()))
}
