use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::halfspin::{FourMomentum, PhaseConvention, RestBasis};
use crate::linalg::{CMatrix, CVector};
use crate::scalar::{phase, Real};

/// Spin projection of a spin-1 state along the momentum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Spin1Helicity {
    /// `+1`, drawn as ↑.
    Up,
    /// `0`, drawn as →.
    Longitudinal,
    /// `-1`, drawn as ↓.
    Down,
}

impl Spin1Helicity {
    pub const ALL: [Spin1Helicity; 3] = [Spin1Helicity::Up, Spin1Helicity::Longitudinal, Spin1Helicity::Down];

    /// Row of the `J_z`-diagonal basis, ordered `+1, 0, -1`.
    pub fn index(self) -> usize {
        match self {
            Spin1Helicity::Up => 0,
            Spin1Helicity::Longitudinal => 1,
            Spin1Helicity::Down => 2,
        }
    }

    pub fn value(self) -> i32 {
        1 - self.index() as i32
    }

    pub fn name(self) -> &'static str {
        match self {
            Spin1Helicity::Up => "up",
            Spin1Helicity::Longitudinal => "longitudinal",
            Spin1Helicity::Down => "down",
        }
    }
}

/// `J_x, J_y, J_z` in the basis `m = +1, 0, -1`.
pub fn j_matrices<T: Real>() -> [CMatrix<T>; 3] {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    [
        CMatrix::from_real(&[[0.0, r, 0.0], [r, 0.0, r], [0.0, r, 0.0]]),
        CMatrix::from_pairs(&[
            [(0.0, 0.0), (0.0, -r), (0.0, 0.0)],
            [(0.0, r), (0.0, 0.0), (0.0, -r)],
            [(0.0, 0.0), (0.0, r), (0.0, 0.0)],
        ]),
        CMatrix::from_real(&[[1.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, -1.0]]),
    ]
}

/// `J·v` for a real 3-vector.
pub fn j_dot<T: Real>(v: [T; 3]) -> CMatrix<T> {
    crate::linalg::real_combination(&v, &j_matrices::<T>())
}

/// `Θ = [[0, 0, 1], [0, -1, 0], [1, 0, 0]]`.
pub fn wigner_theta<T: Real>() -> CMatrix<T> {
    CMatrix::from_real(&[[0.0, 0.0, 1.0], [0.0, -1.0, 0.0], [1.0, 0.0, 0.0]])
}

/// `Λ_{R,L} = 1 ± K sinh φ + K² (cosh φ - 1)` with `K = J·n̂`,
/// `sinh φ = |p|/m`, `cosh φ = E/m`.
pub fn spin1_boost_ops<T: Real>(p: &FourMomentum<T>) -> Result<(CMatrix<T>, CMatrix<T>)> {
    p.require_massive("spin1_boost_ops")?;
    let k = j_dot(p.direction());
    let k2 = &k * &k;
    let sh = p.magnitude() / p.mass();
    let ch = p.energy() / p.mass();
    let base = &CMatrix::identity(3) + &k2.scale_real(ch - T::one());
    Ok((&base + &k.scale_real(sh), &base - &k.scale_real(sh)))
}

/// Wigner `d¹(θ)` in the basis `+1, 0, -1`.
pub fn wigner_small_d<T: Real>(polar: T) -> CMatrix<T> {
    let (s, c) = polar.sin_cos();
    let r = T::FRAC_1_SQRT_2() * s;
    let half = T::lit(0.5);
    let (a, b) = ((T::one() + c) * half, (T::one() - c) * half);
    let rows = [[a, -r, b], [r, c, -r], [b, r, a]];
    CMatrix::from_fn(3, 3, |i, j| crate::scalar::re(rows[i][j]))
}

/// Rest 3-spinor `D(φ, θ, 0) e_h`, an eigenvector of `J·n̂` with
/// eigenvalue `h`, or `e_h` itself in the `σ_z`-type basis.
pub fn spin1_rest_spinor<T: Real>(polar: T, azimuth: T, h: Spin1Helicity, basis: RestBasis) -> CVector<T> {
    let k = h.index();
    if basis == RestBasis::SigmaZ {
        return CVector::basis(3, k);
    }
    let d = wigner_small_d(polar);
    let col = d.column(k);
    CVector::new((0..3).map(|i| col[i] * phase(-azimuth * T::lit(1.0 - i as f64))).collect())
}

/// Left and right 3-spinors at one momentum, indexed by [`Spin1Helicity::index`].
#[derive(Debug, Clone)]
pub struct Spin1Basis<T: Real> {
    pub momentum: FourMomentum<T>,
    pub phi_l: [CVector<T>; 3],
    pub phi_r: [CVector<T>; 3],
}

impl<T: Real> Spin1Basis<T> {
    /// `u = (φ_R, φ_L)`.
    pub fn chiral_u(&self, h: Spin1Helicity) -> CVector<T> {
        CVector::concat(&self.phi_r[h.index()], &self.phi_l[h.index()])
    }
}

/// `φ_{L,R}^h = Λ_{L,R} N e^{iθ_h} χ_h`. Phases `θ₁`, `0`, `θ₂` go to
/// `h = +1, 0, -1`.
pub fn build_spin1_basis<T: Real>(p: &FourMomentum<T>, conv: &PhaseConvention<T>) -> Result<Spin1Basis<T>> {
    conv.validate()?;
    let (boost_r, boost_l) = spin1_boost_ops(p)?;
    let n = conv.normalization(p.mass());
    let seed = |h: Spin1Helicity| {
        let angle = match h {
            Spin1Helicity::Up => conv.theta1,
            Spin1Helicity::Longitudinal => T::zero(),
            Spin1Helicity::Down => conv.theta2,
        };
        spin1_rest_spinor(p.polar(), p.azimuth(), h, conv.basis).scale(phase(angle).scale(n))
    };
    let per_h = |m: &CMatrix<T>| Spin1Helicity::ALL.map(|h| m.mul_vec(&seed(h)));
    Ok(Spin1Basis { momentum: *p, phi_l: per_h(&boost_l), phi_r: per_h(&boost_r) })
}
