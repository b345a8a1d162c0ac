use num_complex::Complex;

use crate::error::Result;
use crate::halfspin::gamma::{big_theta, gamma5, sigma_dot};
use crate::halfspin::momentum::direction_angles;
use crate::halfspin::{Conjugacy, FourMomentum, Helicity, PhaseConvention, RestBasis};
use crate::linalg::{CMatrix, CVector};
use crate::scalar::{i_unit, phase, Real};

/// Unit eigenspinor of `σ·n̂` with eigenvalue `2h`.
pub fn helicity_eigenspinor<T: Real>(n: [T; 3], h: Helicity) -> Result<CVector<T>> {
    let (polar, azimuth) = direction_angles(n)?;
    Ok(rest_spinor(polar, azimuth, h, RestBasis::Helicity))
}

/// Unnormalized-phase rest 2-spinor for the given basis.
pub fn rest_spinor<T: Real>(polar: T, azimuth: T, h: Helicity, basis: RestBasis) -> CVector<T> {
    let half = T::lit(0.5);
    let (s, c) = (polar * half).sin_cos();
    let em = phase(-azimuth * half);
    let ep = phase(azimuth * half);
    let v = |a: T, b: T| CVector::new(vec![em * a, ep * b]);
    match (basis, h) {
        (RestBasis::SigmaZ, Helicity::Up) => CVector::from_real(&[1.0, 0.0]),
        (RestBasis::SigmaZ, Helicity::Down) => CVector::from_real(&[0.0, 1.0]),
        (_, Helicity::Up) => v(c, s),
        (RestBasis::Helicity, Helicity::Down) => v(-s, c),
        (RestBasis::HelicityReflectedDown, Helicity::Down) => v(s, -c),
    }
}

/// Right- and left-handed boosts from rest:
/// `Λ_{R,L} = (E + m ± σ·p) / √(2m(E + m))`.
pub fn boost_ops<T: Real>(p: &FourMomentum<T>) -> Result<(CMatrix<T>, CMatrix<T>)> {
    p.require_massive("boost_ops")?;
    let m = p.mass();
    let e = p.energy();
    let den = (T::lit(2.0) * m * (e + m)).sqrt();
    let diag = CMatrix::<T>::identity(2).scale_real(e + m);
    let sp = sigma_dot(p.spatial());
    Ok(((&diag + &sp).scale_real(den.recip()), (&diag - &sp).scale_real(den.recip())))
}

/// The complete spin-1/2 family at one momentum. Arrays are indexed by
/// [`Helicity::index`].
#[derive(Debug, Clone)]
pub struct SpinorBasis<T: Real> {
    pub momentum: FourMomentum<T>,
    pub convention: PhaseConvention<T>,
    pub phi_l: [CVector<T>; 2],
    pub phi_r: [CVector<T>; 2],
    pub lambda_s: [CVector<T>; 2],
    pub lambda_a: [CVector<T>; 2],
    pub rho_s: [CVector<T>; 2],
    pub rho_a: [CVector<T>; 2],
    pub u: [CVector<T>; 2],
    pub v: [CVector<T>; 2],
}

impl<T: Real> SpinorBasis<T> {
    pub fn lambda(&self, c: Conjugacy, h: Helicity) -> &CVector<T> {
        match c {
            Conjugacy::SelfConjugate => &self.lambda_s[h.index()],
            Conjugacy::AntiSelfConjugate => &self.lambda_a[h.index()],
        }
    }

    pub fn rho(&self, c: Conjugacy, h: Helicity) -> &CVector<T> {
        match c {
            Conjugacy::SelfConjugate => &self.rho_s[h.index()],
            Conjugacy::AntiSelfConjugate => &self.rho_a[h.index()],
        }
    }

    /// `(λ^S_↑, λ^S_↓, λ^A_↑, λ^A_↓)`.
    pub fn lambda_stack(&self) -> [&CVector<T>; 4] {
        [&self.lambda_s[0], &self.lambda_s[1], &self.lambda_a[0], &self.lambda_a[1]]
    }

    /// `(ρ^S_↑, ρ^S_↓, ρ^A_↑, ρ^A_↓)`.
    pub fn rho_stack(&self) -> [&CVector<T>; 4] {
        [&self.rho_s[0], &self.rho_s[1], &self.rho_a[0], &self.rho_a[1]]
    }

    /// `(u_{+1/2}, u_{-1/2}, v_{+1/2}, v_{-1/2})`.
    pub fn dirac_stack(&self) -> [&CVector<T>; 4] {
        [&self.u[0], &self.u[1], &self.v[0], &self.v[1]]
    }

    /// All eight type-II spinors tagged with their conjugacy sign.
    pub fn type_two(&self) -> Vec<(&'static str, Conjugacy, &CVector<T>)> {
        use Conjugacy::*;
        vec![
            ("lambda_s_up", SelfConjugate, &self.lambda_s[0]),
            ("lambda_s_down", SelfConjugate, &self.lambda_s[1]),
            ("lambda_a_up", AntiSelfConjugate, &self.lambda_a[0]),
            ("lambda_a_down", AntiSelfConjugate, &self.lambda_a[1]),
            ("rho_s_up", SelfConjugate, &self.rho_s[0]),
            ("rho_s_down", SelfConjugate, &self.rho_s[1]),
            ("rho_a_up", AntiSelfConjugate, &self.rho_a[0]),
            ("rho_a_down", AntiSelfConjugate, &self.rho_a[1]),
        ]
    }
}

/// Builds `φ_{L,R}`, `λ^{S,A}`, `ρ^{S,A}`, `u`, `v` at `p`.
///
/// `λ^{S,A} = (±iΘφ_L*, φ_L)`, `ρ^{S,A} = (φ_R, ∓iΘφ_R*)`,
/// `u = (φ_R, φ_L)`, `v = γ⁵u`. The rest-frame left and right spinors
/// coincide.
pub fn build_spinor_basis<T: Real>(p: &FourMomentum<T>, conv: &PhaseConvention<T>) -> Result<SpinorBasis<T>> {
    conv.validate()?;
    let (boost_r, boost_l) = boost_ops(p)?;
    let norm = conv.normalization(p.mass());
    let i_theta = big_theta::<T>().scale(i_unit());
    let g5 = gamma5::<T>();

    let seed = |h: Helicity| {
        let angle = match h {
            Helicity::Up => conv.theta1,
            Helicity::Down => conv.theta2,
        };
        rest_spinor(p.polar(), p.azimuth(), h, conv.basis).scale(phase(angle) * Complex::new(norm, T::zero()))
    };
    let per_h = |f: &dyn Fn(Helicity) -> CVector<T>| [f(Helicity::Up), f(Helicity::Down)];

    let phi_l = per_h(&|h| boost_l.mul_vec(&seed(h)));
    let phi_r = per_h(&|h| boost_r.mul_vec(&seed(h)));
    let lam = |sign: T| {
        per_h(&|h| {
            let upper = i_theta.mul_vec(&phi_l[h.index()].conj()).scale_real(sign);
            CVector::concat(&upper, &phi_l[h.index()])
        })
    };
    let rho = |sign: T| {
        per_h(&|h| {
            let lower = i_theta.mul_vec(&phi_r[h.index()].conj()).scale_real(-sign);
            CVector::concat(&phi_r[h.index()], &lower)
        })
    };
    let u = per_h(&|h| CVector::concat(&phi_r[h.index()], &phi_l[h.index()]));
    let v = [g5.mul_vec(&u[0]), g5.mul_vec(&u[1])];

    Ok(SpinorBasis {
        momentum: *p,
        convention: *conv,
        lambda_s: lam(T::one()),
        lambda_a: lam(-T::one()),
        rho_s: rho(T::one()),
        rho_a: rho(-T::one()),
        phi_l,
        phi_r,
        u,
        v,
    })
}
