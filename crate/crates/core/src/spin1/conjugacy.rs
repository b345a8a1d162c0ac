use serde::Serialize;

use crate::error::{Error, Result};
use crate::halfspin::{build_spinor_basis, charge_conjugation_op, Conjugacy, FourMomentum, PhaseConvention};
use crate::linalg::realify::{majorana_frame, real_eigenspace};
use crate::linalg::{AntilinearOp, ApproxCompare, CMatrix, CVector, RealityClass};
use crate::scalar::Real;
use crate::spin1::bmw::chiral_to_majorana;
use crate::spin1::matrices::{build_spin1_basis, wigner_theta, Spin1Helicity};

/// `S^c = [[0, Θ], [-Θ, 0]] 𝒦` on 6-spinors.
pub fn spin1_charge_conjugation_op<T: Real>() -> AntilinearOp<T> {
    let th = wigner_theta::<T>();
    AntilinearOp::antilinear(CMatrix::block_offdiag(&th, &-&th)).expect("6x6 is square")
}

/// `Γ⁵ S^c = [[0, Θ], [Θ, 0]] 𝒦`.
pub fn spin1_chiral_conjugation_op<T: Real>() -> AntilinearOp<T> {
    let th = wigner_theta::<T>();
    AntilinearOp::antilinear(CMatrix::block_offdiag(&th, &th)).expect("6x6 is square")
}

#[derive(Debug, Clone)]
pub struct SelfConjugacyAnalysis<T: Real> {
    /// `|(S^c_{1/2})² - 1|∞`
    pub half_square_residual: T,
    /// `|(S^c_1)² + 1|∞`
    pub spin1_square_residual: T,
    /// `|(Γ⁵S^c_1)² - 1|∞`
    pub chiral_square_residual: T,
    /// Real dimensions of the `±1` eigenspaces of `S^c_1`.
    pub spin1_eigen_dims: (usize, usize),
    /// Real-orthonormal bases of the `+1` and `-1` eigenspaces of `Γ⁵S^c_1`.
    pub plus: Vec<CVector<T>>,
    pub minus: Vec<CVector<T>>,
    /// `max |Γ⁵S^c ξ ∓ ξ|∞` over the returned vectors.
    pub eigen_residual: T,
}

/// Squares of the spin-1/2 and spin-1 conjugation operators and the
/// explicit eigenvectors of `Γ⁵S^c` found by realification.
pub fn spin1_selfconjugacy_analysis<T: Real>(tol: T) -> Result<SelfConjugacyAnalysis<T>> {
    let half = charge_conjugation_op::<T>(&PhaseConvention::default()).square();
    let sc = spin1_charge_conjugation_op::<T>();
    let gs = spin1_chiral_conjugation_op::<T>();
    let id4 = CMatrix::<T>::identity(4);
    let id6 = CMatrix::<T>::identity(6);
    let sc_dims = (real_eigenspace(&sc, T::one(), tol).len(), real_eigenspace(&sc, -T::one(), tol).len());
    let plus = real_eigenspace(&gs, T::one(), tol);
    let minus = real_eigenspace(&gs, -T::one(), tol);
    let mut eigen_residual = T::zero();
    for (set, s) in [(&plus, T::one()), (&minus, -T::one())] {
        for x in set {
            eigen_residual = eigen_residual.max(gs.apply(x)?.max_abs_diff(&x.scale_real(s))?);
        }
    }
    Ok(SelfConjugacyAnalysis {
        half_square_residual: half.matrix().max_abs_diff(&id4)?,
        spin1_square_residual: sc.square().matrix().max_abs_diff(&id6.scale_real(-T::one()))?,
        chiral_square_residual: gs.square().matrix().max_abs_diff(&id6)?,
        spin1_eigen_dims: sc_dims,
        plus,
        minus,
        eigen_residual,
    })
}

/// `(±Θφ_L*, φ_L)`: the spin-1 `λ` analogues, eigenvectors of `Γ⁵S^c`
/// with eigenvalue `±1`.
pub fn spin1_lambda<T: Real>(phi_l: &CVector<T>, c: Conjugacy) -> CVector<T> {
    let upper = wigner_theta::<T>().mul_vec(&phi_l.conj()).scale_real(c.sign());
    CVector::concat(&upper, phi_l)
}

/// `(φ_R, ±Θφ_R*)`: the spin-1 `ρ` analogues.
pub fn spin1_rho<T: Real>(phi_r: &CVector<T>, c: Conjugacy) -> CVector<T> {
    let lower = wigner_theta::<T>().mul_vec(&phi_r.conj()).scale_real(c.sign());
    CVector::concat(phi_r, &lower)
}

#[derive(Debug, Clone, Serialize)]
pub struct RealityEntry {
    /// `"1/2"` or `"1"`.
    pub spin: &'static str,
    pub name: String,
    pub conjugacy: Conjugacy,
    pub class: RealityClass,
    /// Largest entry of the minority part.
    pub minority: f64,
    /// Largest entry of the majority part.
    pub scale: f64,
}

impl RealityEntry {
    /// Self-conjugate objects map to real spinors, anti-self ones to
    /// imaginary spinors.
    pub fn expected_class(&self) -> RealityClass {
        match self.conjugacy {
            Conjugacy::SelfConjugate => RealityClass::PureReal,
            Conjugacy::AntiSelfConjugate => RealityClass::PureImaginary,
        }
    }
}

fn entry(spin: &'static str, name: String, conjugacy: Conjugacy, v: &CVector<f64>, tol: f64) -> RealityEntry {
    let (class, minority) = RealityClass::of(v, tol);
    RealityEntry { spin, name, conjugacy, class, minority, scale: v.max_real().max(v.max_imag()) }
}

/// Maps the `λ`, `ρ` spinors of both spins into a Majorana frame and
/// classifies each image.
///
/// Spin 1/2 uses the unitary whose rows span the `S^c` fixed space; spin 1
/// uses `T = U W` on the `Γ⁵S^c` eigenvectors.
pub fn lambda_reality_check(p: &FourMomentum<f64>, conv: &PhaseConvention<f64>, tol: f64) -> Result<Vec<RealityEntry>> {
    let sc = charge_conjugation_op(conv);
    let frame = majorana_frame(&sc, tol)
        .ok_or_else(|| Error::InvalidConvention("charge conjugation has no Majorana frame".into()))?;
    let mut out = Vec::new();
    let b = build_spinor_basis(p, conv)?;
    for (name, c, psi) in b.type_two() {
        out.push(entry("1/2", name.to_string(), c, &frame.mul_vec(psi), tol));
    }
    let t = chiral_to_majorana::<f64>();
    let b1 = build_spin1_basis(p, conv)?;
    for h in Spin1Helicity::ALL {
        for c in [Conjugacy::SelfConjugate, Conjugacy::AntiSelfConjugate] {
            let tag = if c == Conjugacy::SelfConjugate { "s" } else { "a" };
            let lam = spin1_lambda(&b1.phi_l[h.index()], c);
            let rho = spin1_rho(&b1.phi_r[h.index()], c);
            out.push(entry("1", format!("lambda_{tag}_{}", h.name()), c, &t.mul_vec(&lam), tol));
            out.push(entry("1", format!("rho_{tag}_{}", h.name()), c, &t.mul_vec(&rho), tol));
        }
    }
    let analysis = spin1_selfconjugacy_analysis::<f64>(tol)?;
    for (k, x) in analysis.plus.iter().enumerate() {
        out.push(entry("1", format!("eigen_plus_{k}"), Conjugacy::SelfConjugate, &t.mul_vec(x), tol));
    }
    for (k, x) in analysis.minus.iter().enumerate() {
        out.push(entry("1", format!("eigen_minus_{k}"), Conjugacy::AntiSelfConjugate, &t.mul_vec(x), tol));
    }
    Ok(out)
}
