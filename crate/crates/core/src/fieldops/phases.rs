use serde::Serialize;

use crate::error::{Error, Result};
use crate::halfspin::symmetry::{conjugacy_residual, xi_group, XiMap};
use crate::halfspin::{build_spinor_basis, charge_conjugation_op, FourMomentum, PhaseConvention};
use crate::linalg::{real_combination, ApproxCompare, CMatrix};
use crate::scalar::Real;

/// `c₀ + i τ·c`. Group elements have `c₀² + |c|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuaternionPhase<T> {
    pub c0: T,
    pub c: [T; 3],
}

impl<T: Real> QuaternionPhase<T> {
    pub fn new(c0: T, c: [T; 3]) -> Self {
        Self { c0, c }
    }

    pub fn identity() -> Self {
        Self { c0: T::one(), c: [T::zero(); 3] }
    }

    pub fn norm(&self) -> T {
        (self.c0 * self.c0 + self.c.iter().fold(T::zero(), |a, x| a + *x * *x)).sqrt()
    }

    pub fn is_unit(&self, tol: T) -> bool {
        (self.norm() - T::one()).abs() <= tol
    }
}

/// `c₀ + c₁I + c₂J + c₃K` with `I = Q″`, `J = Q‴`, `K = IJ`, the
/// azimuth-free factors of the Ξ-maps.
pub fn quaternion_matrix<T: Real>(q: &QuaternionPhase<T>) -> CMatrix<T> {
    let i = XiMap::Double.unit::<T>();
    let j = XiMap::Triple.unit::<T>();
    let k = &i * &j;
    real_combination(&[q.c0, q.c[0], q.c[1], q.c[2]], &[CMatrix::identity(4), i, j, k])
}

#[derive(Debug, Clone, Serialize)]
pub struct PhaseOrbitReport {
    /// `|M(q) M(q)† - 1|∞`
    pub unitarity: f64,
    /// `max |I² + 1|, |J² + 1|, |K² + 1|, |IJK + 1|`
    pub quaternion_relations: f64,
    /// `K = -Q⁗`
    pub k_is_minus_fourth: f64,
    /// `|(Q″)² λ^S + λ^S|∞`
    pub double_map_square: f64,
    /// Largest `|S^c ψ' ∓ ψ'|∞` over the images of the eight type-II spinors.
    pub conjugacy_residual: f64,
    pub group_order: usize,
    pub group_associative: bool,
    pub group_has_central_minus_one: bool,
}

/// Acts with `M(q)` on every type-II spinor at `p` and checks that the
/// conjugacy sign survives.
pub fn su2_phase_orbit(
    q: &QuaternionPhase<f64>,
    p: &FourMomentum<f64>,
    conv: &PhaseConvention<f64>,
    tol: f64,
) -> Result<PhaseOrbitReport> {
    if !q.is_unit(tol.max(1e-12)) {
        return Err(Error::NonUnitQuaternion(q.norm()));
    }
    let m = quaternion_matrix(q);
    let i = XiMap::Double.unit::<f64>();
    let j = XiMap::Triple.unit::<f64>();
    let k = &i * &j;
    let minus_one = CMatrix::<f64>::identity(4).scale_real(-1.0);
    let mut rel = 0.0f64;
    for x in [&(&i * &i), &(&j * &j), &(&k * &k), &(&(&i * &j) * &k)] {
        rel = rel.max(x.max_abs_diff(&minus_one)?);
    }
    let b = build_spinor_basis(p, conv)?;
    let sc = charge_conjugation_op(conv);
    let mut conj = 0.0f64;
    for (_, c, psi) in b.type_two() {
        conj = conj.max(conjugacy_residual(&sc, &m.mul_vec(psi), c)?);
    }
    let ls = &b.lambda_s[0];
    let group = xi_group::<f64>(tol.max(1e-12), 64);
    Ok(PhaseOrbitReport {
        unitarity: (&m * &m.adjoint()).max_abs_diff(&CMatrix::identity(4))?,
        quaternion_relations: rel,
        k_is_minus_fourth: k.max_abs_diff(&-&XiMap::Fourth.unit::<f64>())?,
        double_map_square: (&i * &i).mul_vec(ls).max_abs_diff(&-ls)?,
        conjugacy_residual: conj,
        group_order: group.order(),
        group_associative: group.associative,
        group_has_central_minus_one: group.has_central_minus_one,
    })
}
