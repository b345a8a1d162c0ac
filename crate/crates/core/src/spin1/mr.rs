use serde::Serialize;

use crate::error::Result;
use crate::halfspin::{FourMomentum, PhaseConvention};
use crate::linalg::{ApproxCompare, CVector};
use crate::scalar::{i_unit, Real};
use crate::spin1::bmw::displayed_majorana_gammas;
use crate::spin1::matrices::{build_spin1_basis, wigner_theta, Spin1Helicity};

/// Majorana-representation 6-spinors for one helicity.
///
/// With `a = φ_L + Θφ_R` and `d = -φ_L + Θφ_R`:
/// `𝒰⁺ = ½(a, a)`, `𝒱⁺ = ½(d, -d)`, `𝒰⁻ = ½(d, d)`, `𝒱⁻ = ½(a, -a)`,
/// `u = 𝒰⁺ + i𝒱⁺`, `v = 𝒰⁻ + i𝒱⁻`.
#[derive(Debug, Clone)]
pub struct MrSpinors<T: Real> {
    pub helicity: Spin1Helicity,
    pub u: CVector<T>,
    pub v: CVector<T>,
    pub u_plus: CVector<T>,
    pub v_plus: CVector<T>,
    pub u_minus: CVector<T>,
    pub v_minus: CVector<T>,
    /// `|v - γ₅u|∞` with the closed-form `γ₅ = offdiag(i, -i)`.
    pub gamma5_residual: T,
}

pub fn mr_spinors<T: Real>(p: &FourMomentum<T>, conv: &PhaseConvention<T>, h: Spin1Helicity) -> Result<MrSpinors<T>> {
    let basis = build_spin1_basis(p, conv)?;
    let th = wigner_theta::<T>();
    let phi_l = &basis.phi_l[h.index()];
    let th_r = th.mul_vec(&basis.phi_r[h.index()]);
    let half = T::lit(0.5);
    let a = (phi_l + &th_r).scale_real(half);
    let d = (&th_r - phi_l).scale_real(half);
    let u_plus = CVector::concat(&a, &a);
    let v_plus = CVector::concat(&d, &-&d);
    let u_minus = CVector::concat(&d, &d);
    let v_minus = CVector::concat(&a, &-&a);
    let i = i_unit::<T>();
    let u = &u_plus + &v_plus.scale(i);
    let v = &u_minus + &v_minus.scale(i);
    let g5 = displayed_majorana_gammas::<T>().gamma5;
    let gamma5_residual = g5.try_mul_vec(&u)?.max_abs_diff(&v)?;
    Ok(MrSpinors { helicity: h, u, v, u_plus, v_plus, u_minus, v_minus, gamma5_residual })
}

/// Residuals of `𝒰⁺_↑ = 𝒰⁺_↓`, `𝒱⁺_↑ = -𝒱⁺_↓`, `𝒰⁺_→ = 0`, with the size
/// of `𝒱⁺_→` that must stay away from zero.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ComponentIdentities<T> {
    pub u_up_minus_down: T,
    pub v_up_plus_down: T,
    pub u_longitudinal: T,
    pub v_longitudinal_norm: T,
    pub gamma5_residual: T,
}

impl<T: Real> ComponentIdentities<T> {
    /// Largest residual among the three vanishing identities.
    pub fn max_residual(&self) -> T {
        self.u_up_minus_down.max(self.v_up_plus_down).max(self.u_longitudinal)
    }
}

pub fn component_identities<T: Real>(p: &FourMomentum<T>, conv: &PhaseConvention<T>) -> Result<ComponentIdentities<T>> {
    let [up, lo, dn] = Spin1Helicity::ALL.map(|h| mr_spinors(p, conv, h));
    let (up, lo, dn) = (up?, lo?, dn?);
    Ok(ComponentIdentities {
        u_up_minus_down: up.u_plus.max_abs_diff(&dn.u_plus)?,
        v_up_plus_down: up.v_plus.max_abs_diff(&-&dn.v_plus)?,
        u_longitudinal: lo.u_plus.max_abs(),
        v_longitudinal_norm: lo.v_plus.norm(),
        gamma5_residual: up.gamma5_residual.max(lo.gamma5_residual).max(dn.gamma5_residual),
    })
}
