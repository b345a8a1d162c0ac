use num_complex::Complex;
use serde::Serialize;

use crate::error::Result;
use crate::halfspin::gamma::{big_theta, gamma0, gamma5, sigma_dot};
use crate::halfspin::momentum::direction_angles;
use crate::halfspin::{build_spinor_basis, Conjugacy, FourMomentum, Helicity, PhaseConvention};
use crate::linalg::{AntilinearOp, ApproxCompare, CMatrix, CVector};
use crate::scalar::{i_unit, phase, Real, C};

/// `S^c = e^{iθ_c} [[0, iΘ], [-iΘ, 0]] 𝒦`.
pub fn charge_conjugation_op<T: Real>(conv: &PhaseConvention<T>) -> AntilinearOp<T> {
    let it = big_theta::<T>().scale(i_unit());
    let m = CMatrix::block_offdiag(&it, &-&it).scale(phase(conv.theta_c));
    AntilinearOp::antilinear(m).expect("4x4 is square")
}

/// Sign `s ∈ {+1, -1}` with `S ψ ≈ s ψ`, and the residual `|Sψ - sψ|∞`
/// for the better of the two signs.
pub fn conjugacy_of<T: Real>(op: &AntilinearOp<T>, psi: &CVector<T>) -> Result<(Conjugacy, T)> {
    let image = op.apply(psi)?;
    let plus = image.max_abs_diff(psi)?;
    let minus = image.max_abs_diff(&-psi)?;
    Ok(if plus <= minus { (Conjugacy::SelfConjugate, plus) } else { (Conjugacy::AntiSelfConjugate, minus) })
}

/// Residual of `S ψ = s ψ` for a prescribed sign.
pub fn conjugacy_residual<T: Real>(op: &AntilinearOp<T>, psi: &CVector<T>, c: Conjugacy) -> Result<T> {
    op.apply(psi)?.max_abs_diff(&psi.scale_real(c.sign()))
}

/// Block helicity `h = diag(σ·n̂/2, σ·n̂/2)`, chiral helicity `η = -Γ⁵h` and
/// the matrix part `γ⁰` of parity (the momentum part is `p ↦ -p`).
#[derive(Debug, Clone)]
pub struct DiscreteOps<T: Real> {
    pub helicity: CMatrix<T>,
    pub chiral_helicity: CMatrix<T>,
    pub parity: CMatrix<T>,
}

pub fn discrete_ops<T: Real>(n: [T; 3]) -> Result<DiscreteOps<T>> {
    direction_angles(n)?;
    let half = sigma_dot(n).scale_real(T::lit(0.5));
    let helicity = CMatrix::block_diag(&half, &half);
    let chiral_helicity = -&(&gamma5::<T>() * &helicity);
    Ok(DiscreteOps { helicity, chiral_helicity, parity: gamma0() })
}

/// Which family a γ⁵ gauge rotation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaugeKind {
    /// `λ ↦ (cos α - iγ⁵ sin α) λ`
    Lambda,
    /// `ρ ↦ (cos α + iγ⁵ sin α) ρ`
    Rho,
}

pub fn gauge_matrix<T: Real>(alpha: T, kind: GaugeKind) -> CMatrix<T> {
    let sign = match kind {
        GaugeKind::Lambda => -T::one(),
        GaugeKind::Rho => T::one(),
    };
    let (s, c) = alpha.sin_cos();
    &CMatrix::identity(4).scale_real(c) + &gamma5::<T>().scale(Complex::new(T::zero(), sign * s))
}

pub fn gauge_transform<T: Real>(alpha: T, spinor: &CVector<T>, kind: GaugeKind) -> Result<CVector<T>> {
    gauge_matrix(alpha, kind).try_mul_vec(spinor)
}

/// `Ξ = diag(e^{iφ}, e^{-iφ})`.
pub fn xi_matrix<T: Real>(azimuth: T) -> CMatrix<T> {
    CMatrix::diag(&[phase(azimuth), phase(-azimuth)])
}

/// The four Ξ-built bispinor maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum XiMap {
    /// `diag(Ξ, Ξ)`
    Prime,
    /// `diag(iΞ, -iΞ)`
    Double,
    /// `offdiag(iΞ, iΞ)`
    Triple,
    /// `offdiag(Ξ, -Ξ)`
    Fourth,
}

impl XiMap {
    pub const ALL: [XiMap; 4] = [XiMap::Prime, XiMap::Double, XiMap::Triple, XiMap::Fourth];

    pub fn name(self) -> &'static str {
        match self {
            XiMap::Prime => "prime",
            XiMap::Double => "double",
            XiMap::Triple => "triple",
            XiMap::Fourth => "fourth",
        }
    }

    /// Azimuth-independent factor `Q` with `matrix(φ) = Q · diag(Ξ, Ξ)`.
    pub fn unit<T: Real>(self) -> CMatrix<T> {
        let one = CMatrix::<T>::identity(2);
        let i1 = one.scale(i_unit());
        match self {
            XiMap::Prime => CMatrix::identity(4),
            XiMap::Double => CMatrix::block_diag(&i1, &-&i1),
            XiMap::Triple => CMatrix::block_offdiag(&i1, &i1),
            XiMap::Fourth => CMatrix::block_offdiag(&one, &-&one),
        }
    }

    pub fn matrix<T: Real>(self, azimuth: T) -> CMatrix<T> {
        let xi = xi_matrix(azimuth);
        &self.unit::<T>() * &CMatrix::block_diag(&xi, &xi)
    }

    /// The conjugated spinor each map is identified with, built from the
    /// `λ^S`, `λ^A` pair of one helicity.
    pub fn alias<T: Real>(self, lambda_s: &CVector<T>, lambda_a: &CVector<T>) -> CVector<T> {
        let g0 = gamma0::<T>();
        match self {
            XiMap::Prime => lambda_a.conj(),
            XiMap::Double => lambda_s.conj().scale(-i_unit::<T>()),
            XiMap::Triple => g0.mul_vec(&lambda_a.conj()).scale(i_unit()),
            XiMap::Fourth => g0.mul_vec(&lambda_s.conj()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct XiImage<T: Real> {
    pub map: XiMap,
    pub image: CVector<T>,
    /// `|image - alias|∞`
    pub alias_residual: T,
    pub conjugacy: Conjugacy,
    pub conjugacy_residual: T,
}

/// Applies the four Ξ-maps to `λ^S_h(p)` and checks the conjugate aliases
/// and `S^c` eigen-status of each image.
pub fn xi_transform_quadruple<T: Real>(
    p: &FourMomentum<T>,
    conv: &PhaseConvention<T>,
    h: Helicity,
) -> Result<Vec<XiImage<T>>> {
    let basis = build_spinor_basis(p, conv)?;
    let sc = charge_conjugation_op(conv);
    let ls = &basis.lambda_s[h.index()];
    let la = &basis.lambda_a[h.index()];
    XiMap::ALL
        .iter()
        .map(|&map| {
            let image = map.matrix(p.azimuth()).mul_vec(ls);
            let alias_residual = image.max_abs_diff(&map.alias(ls, la))?;
            let (conjugacy, conjugacy_residual) = conjugacy_of(&sc, &image)?;
            Ok(XiImage { map, image, alias_residual, conjugacy, conjugacy_residual })
        })
        .collect()
}

/// Residual of `Ξ Λ Ξ⁻¹ = Λ*` for both chiral boosts.
pub fn xi_boost_conjugation<T: Real>(p: &FourMomentum<T>) -> Result<T> {
    let (r, l) = crate::halfspin::boost_ops(p)?;
    let xi = xi_matrix(p.azimuth());
    let xi_inv = xi_matrix(-p.azimuth());
    let dr = (&(&xi * &r) * &xi_inv).max_abs_diff(&r.conj())?;
    let dl = (&(&xi * &l) * &xi_inv).max_abs_diff(&l.conj())?;
    Ok(dr.max(dl))
}

/// Finite group generated by the Ξ-map units, with its multiplication
/// table.
#[derive(Debug, Clone)]
pub struct XiGroup<T: Real> {
    pub elements: Vec<CMatrix<T>>,
    /// `table[a][b]` is the index of `elements[a] · elements[b]`.
    pub table: Vec<Vec<usize>>,
    /// `Q_k² = c_k · 1` for each map, in [`XiMap::ALL`] order.
    pub unit_squares: [C<T>; 4],
    pub has_central_minus_one: bool,
    pub associative: bool,
    /// Indices of `Q_double`, `Q_triple` and `Q_double · Q_triple`, which
    /// play the roles of the quaternion units `i, j, k`.
    pub quaternion_units: [usize; 3],
}

impl<T: Real> XiGroup<T> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, m: &CMatrix<T>, tol: T) -> Option<usize> {
        self.elements.iter().position(|e| e.max_abs_diff(m).map(|d| d <= tol).unwrap_or(false))
    }
}

/// Closes `{Q_k}` under multiplication. `max_order` bounds the search.
pub fn xi_group<T: Real>(tol: T, max_order: usize) -> XiGroup<T> {
    let gens: Vec<CMatrix<T>> = XiMap::ALL.iter().map(|m| m.unit()).collect();
    let mut elements: Vec<CMatrix<T>> = vec![CMatrix::identity(4)];
    let find = |els: &[CMatrix<T>], m: &CMatrix<T>| {
        els.iter().position(|e| e.max_abs_diff(m).map(|d| d <= tol).unwrap_or(false))
    };
    let mut frontier = 0;
    while frontier < elements.len() && elements.len() <= max_order {
        let x = elements[frontier].clone();
        for g in &gens {
            let y = &x * g;
            if find(&elements, &y).is_none() {
                elements.push(y);
            }
        }
        frontier += 1;
    }
    let n = elements.len();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| find(&elements, &(&elements[a] * &elements[b])).unwrap_or(usize::MAX)).collect())
        .collect();
    let closed = table.iter().flatten().all(|&k| k != usize::MAX);
    let associative =
        closed && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| table[table[a][b]][c] == table[a][table[b][c]])));
    let minus_one = CMatrix::<T>::identity(4).scale_real(-T::one());
    let central = find(&elements, &minus_one).map(|k| (0..n).all(|a| table[k][a] == table[a][k])).unwrap_or(false);
    let unit_squares = [0, 1, 2, 3].map(|k| {
        let sq = &gens[k] * &gens[k];
        sq[(0, 0)]
    });
    let q_i = find(&elements, &gens[1]).unwrap_or(usize::MAX);
    let q_j = find(&elements, &gens[2]).unwrap_or(usize::MAX);
    let q_k = find(&elements, &(&gens[1] * &gens[2])).unwrap_or(usize::MAX);
    XiGroup {
        elements,
        table,
        unit_squares,
        has_central_minus_one: central && closed,
        associative,
        quaternion_units: [q_i, q_j, q_k],
    }
}
