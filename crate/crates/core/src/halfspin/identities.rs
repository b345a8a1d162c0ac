//! Momentum-space identities of the spin-1/2 construction, each evaluated
//! as a residual.

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::halfspin::gamma::{bar_product, gamma0, slash};
use crate::halfspin::symmetry::discrete_ops;
use crate::halfspin::{build_spinor_basis, FourMomentum, Helicity, PhaseConvention};
use crate::linalg::{proportionality, ApproxCompare, CMatrix, CVector};
use crate::scalar::{Real, C};

/// Plane-wave frequency: `e^{-ip·x}` (positive) sends `i∂_μ → p_μ`,
/// `e^{+ip·x}` (negative) sends `i∂_μ → -p_μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Frequency {
    Positive,
    Negative,
}

impl Frequency {
    pub fn sign<T: Real>(self) -> T {
        match self {
            Frequency::Positive => T::one(),
            Frequency::Negative => -T::one(),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Frequency::Positive => Frequency::Negative,
            Frequency::Negative => Frequency::Positive,
        }
    }
}

/// Frequencies attached to the two coupled pairs of the first-order
/// equations. The default follows the field-operator pairing: `λ^S`
/// multiplies `e^{-ip·x}`, `λ^A` multiplies `e^{+ip·x}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrequencyAssignment {
    pub lambda_s_rho_a: Frequency,
    pub lambda_a_rho_s: Frequency,
}

impl Default for FrequencyAssignment {
    fn default() -> Self {
        Self { lambda_s_rho_a: Frequency::Positive, lambda_a_rho_s: Frequency::Negative }
    }
}

/// Signs of the mass terms in the four equations
/// `i∂λ^S - mρ^A`, `i∂ρ^A - mλ^S`, `i∂λ^A + mρ^S`, `i∂ρ^S + mλ^A`.
pub const MASS_TERM_SIGNS: [f64; 4] = [-1.0, -1.0, 1.0, 1.0];

/// Euclidean residual norms of the four first-order equations, per helicity.
pub fn dynamical_residuals<T: Real>(
    p: &FourMomentum<T>,
    conv: &PhaseConvention<T>,
    freq: FrequencyAssignment,
) -> Result<[[T; 4]; 2]> {
    dynamical_residuals_signed(p, conv, freq, MASS_TERM_SIGNS)
}

/// As [`dynamical_residuals`] with explicit mass-term signs.
pub fn dynamical_residuals_signed<T: Real>(
    p: &FourMomentum<T>,
    conv: &PhaseConvention<T>,
    freq: FrequencyAssignment,
    mass_signs: [f64; 4],
) -> Result<[[T; 4]; 2]> {
    p.require_massive("dynamical_residuals")?;
    let b = build_spinor_basis(p, conv)?;
    let ps = slash(p);
    let m = p.mass();
    let s1: T = freq.lambda_s_rho_a.sign();
    let s2: T = freq.lambda_a_rho_s.sign();
    let eq = |s: T, psi: &CVector<T>, sign: f64, chi: &CVector<T>| -> T {
        let lhs = ps.mul_vec(psi).scale_real(s);
        (&lhs + &chi.scale_real(m * T::lit(sign))).norm()
    };
    let per_h = |k: usize| {
        [
            eq(s1, &b.lambda_s[k], mass_signs[0], &b.rho_a[k]),
            eq(s1, &b.rho_a[k], mass_signs[1], &b.lambda_s[k]),
            eq(s2, &b.lambda_a[k], mass_signs[2], &b.rho_s[k]),
            eq(s2, &b.rho_s[k], mass_signs[3], &b.lambda_a[k]),
        ]
    };
    Ok([per_h(0), per_h(1)])
}

/// `½ [[1, i, -1, i], [-i, 1, -i, -1], [1, -i, -1, -i], [i, 1, i, -1]]`.
pub fn connection_matrix<T: Real>() -> CMatrix<T> {
    CMatrix::from_pairs(&[
        [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, 1.0)],
        [(0.0, -1.0), (1.0, 0.0), (0.0, -1.0), (-1.0, 0.0)],
        [(1.0, 0.0), (0.0, -1.0), (-1.0, 0.0), (0.0, -1.0)],
        [(0.0, 1.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0)],
    ])
    .scale_real(T::lit(0.5))
}

#[derive(Debug, Clone)]
pub struct ConnectionReport<T: Real> {
    /// `max_i |λ_i - (M D)_i|∞` with no phase freedom.
    pub raw_residual: T,
    /// Best unit phase per row, `λ_i ≈ e^{iα_i} (M D)_i`.
    pub phases: [C<T>; 4],
    pub aligned_residual: T,
}

/// Compares `(λ^S_↑, λ^S_↓, λ^A_↑, λ^A_↓)` against `M (u_↑, u_↓, v_↑, v_↓)`.
pub fn connection_matrix_check<T: Real>(p: &FourMomentum<T>, conv: &PhaseConvention<T>) -> Result<ConnectionReport<T>> {
    let b = build_spinor_basis(p, conv)?;
    let rows = apply_connection(&connection_matrix(), &b.dirac_stack().map(|v| v.clone()));
    let lam = b.lambda_stack();
    let mut raw = T::zero();
    let mut aligned = T::zero();
    let mut phases = [Complex::new(T::one(), T::zero()); 4];
    for k in 0..4 {
        raw = raw.max(rows[k].max_abs_diff(lam[k])?);
        let overlap = rows[k].dot(lam[k]);
        let ph = if overlap.norm() > T::zero() { overlap / overlap.norm() } else { Complex::new(T::one(), T::zero()) };
        phases[k] = ph;
        aligned = aligned.max(rows[k].scale(ph).max_abs_diff(lam[k])?);
    }
    Ok(ConnectionReport { raw_residual: raw, phases, aligned_residual: aligned })
}

/// Row-combines four bispinors with a 4×4 coefficient matrix.
pub fn apply_connection<T: Real>(m: &CMatrix<T>, stack: &[CVector<T>; 4]) -> [CVector<T>; 4] {
    let n = stack[0].len();
    [0, 1, 2, 3].map(|i| (0..4).fold(CVector::zeros(n), |acc, j| &acc + &stack[j].scale(m[(i, j)])))
}

/// Gram matrix `λ̄_i λ_j` over `(λ^S_↑, λ^S_↓, λ^A_↑, λ^A_↓)`.
pub fn biorthonormality_gram<T: Real>(p: &FourMomentum<T>, conv: &PhaseConvention<T>) -> Result<CMatrix<T>> {
    let b = build_spinor_basis(p, conv)?;
    let lam = b.lambda_stack();
    Ok(CMatrix::from_fn(4, 4, |i, j| bar_product(lam[i], lam[j])))
}

/// `2iN² cos(θ₁ + θ₂)`.
pub fn biorthonormal_cross_product<T: Real>(conv: &PhaseConvention<T>, mass: T) -> C<T> {
    let n = conv.normalization(mass);
    Complex::new(T::zero(), T::lit(2.0) * n * n * (conv.theta1 + conv.theta2).cos())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MasslessRow<T> {
    pub mass: T,
    /// `|λ^S_↑| / |λ^S_↓|`
    pub ratio_s: T,
    /// `|λ^A_↑| / |λ^A_↓|`
    pub ratio_a: T,
    pub norm_s_down: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MasslessScan<T> {
    pub rows: Vec<MasslessRow<T>>,
    pub monotone: bool,
}

/// Tracks the spin-up `λ` norms as the mass is sent to zero at fixed
/// 3-momentum. Requires a helicity rest basis.
pub fn massless_scan<T: Real>(
    magnitude: T,
    polar: T,
    azimuth: T,
    masses: &[T],
    conv: &PhaseConvention<T>,
) -> Result<MasslessScan<T>> {
    if !conv.basis.is_helicity() {
        return Err(Error::InvalidConvention("massless vanishing needs the helicity rest basis".into()));
    }
    if masses.is_empty()
        || masses.iter().any(|&m| m.is_nan() || m <= T::zero())
        || masses.windows(2).any(|w| w[1] >= w[0])
    {
        return Err(Error::BadMassSequence);
    }
    let rows = masses
        .iter()
        .map(|&m| {
            let p = FourMomentum::new(m, magnitude, polar, azimuth)?;
            let b = build_spinor_basis(&p, conv)?;
            let down_s = b.lambda_s[1].norm();
            Ok(MasslessRow {
                mass: m,
                ratio_s: b.lambda_s[0].norm() / down_s,
                ratio_a: b.lambda_a[0].norm() / b.lambda_a[1].norm(),
                norm_s_down: down_s,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let monotone = rows.windows(2).all(|w| w[1].ratio_s < w[0].ratio_s && w[1].ratio_a < w[0].ratio_a);
    Ok(MasslessScan { rows, monotone })
}

/// `(1 + s p̸/m) ψ` for a coefficient spinor of frequency sign `s`.
pub fn dirac_projection<T: Real>(p: &FourMomentum<T>, psi: &CVector<T>, freq: Frequency) -> Result<CVector<T>> {
    p.require_massive("dirac_projection")?;
    let ps = slash(p).scale_real(freq.sign::<T>() / p.mass());
    Ok(psi + &ps.try_mul_vec(psi)?)
}

/// `|p̸ψ - s m ψ|∞`: distance from the `p̸ = s m` eigenspace.
pub fn slash_eigen_residual<T: Real>(p: &FourMomentum<T>, psi: &CVector<T>, freq: Frequency) -> Result<T> {
    let ps = slash(p);
    ps.try_mul_vec(psi)?.max_abs_diff(&psi.scale_real(freq.sign::<T>() * p.mass()))
}

/// Best scalar `c` with `Mψ ≈ cψ` and the relative residual
/// `|Mψ - cψ| / |ψ|`.
pub fn eigen_fit<T: Real>(m: &CMatrix<T>, psi: &CVector<T>) -> Result<(C<T>, T)> {
    Ok(proportionality(psi, &m.try_mul_vec(psi)?))
}

/// Least-squares fit of `h` on a spinor at the momentum direction of `p`.
pub fn helicity_fit<T: Real>(p: &FourMomentum<T>, psi: &CVector<T>) -> Result<(C<T>, T)> {
    eigen_fit(&discrete_ops(p.direction())?.helicity, psi)
}

/// Least-squares fit of `η = -Γ⁵h`.
pub fn chiral_helicity_fit<T: Real>(p: &FourMomentum<T>, psi: &CVector<T>) -> Result<(C<T>, T)> {
    eigen_fit(&discrete_ops(p.direction())?.chiral_helicity, psi)
}

/// Fit of `γ⁰λ^S_h(p')` against `λ^S_h(p)` with `p'` the space-inverted
/// momentum. A relative residual near zero would make `λ^S_h` a parity
/// eigenspinor.
pub fn parity_fit<T: Real>(p: &FourMomentum<T>, conv: &PhaseConvention<T>, h: Helicity) -> Result<(C<T>, T)> {
    let here = build_spinor_basis(p, conv)?;
    let there = build_spinor_basis(&p.space_inverted(), conv)?;
    let image = gamma0::<T>().mul_vec(&there.lambda_s[h.index()]);
    Ok(proportionality(&here.lambda_s[h.index()], &image))
}
