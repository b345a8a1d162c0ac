use serde::Serialize;

use crate::error::{Error, Result};
use crate::halfspin::FourMomentum;
use crate::linalg::{ApproxCompare, CMatrix, CVector};
use crate::scalar::{c, i_unit, Real};
use crate::spin1::matrices::{j_matrices, wigner_theta};

/// Symmetric `γ_{μν}` family plus `γ₅`.
#[derive(Debug, Clone)]
pub struct GammaFamily<T: Real> {
    /// `g[μ][ν]`, symmetric in the indices.
    pub g: Vec<Vec<CMatrix<T>>>,
    pub gamma5: CMatrix<T>,
}

impl<T: Real> GammaFamily<T> {
    /// `Σ γ_{μν} p^μ p^ν` with contravariant `p`.
    pub fn contract(&self, p: [T; 4]) -> CMatrix<T> {
        let mut acc = CMatrix::zeros(6, 6);
        for mu in 0..4 {
            for nu in 0..4 {
                acc = &acc + &self.g[mu][nu].scale_real(p[mu] * p[nu]);
            }
        }
        acc
    }

    /// Conjugates every member, `M ↦ S M S†`.
    pub fn conjugated_by(&self, s: &CMatrix<T>) -> Self {
        let sd = s.adjoint();
        let f = |m: &CMatrix<T>| &(s * m) * &sd;
        GammaFamily { g: self.g.iter().map(|row| row.iter().map(f).collect()).collect(), gamma5: f(&self.gamma5) }
    }

    /// The ten independent `(μ, ν)` pairs with `μ ≤ ν`.
    pub fn pairs() -> Vec<(usize, usize)> {
        (0..4).flat_map(|mu| (mu..4).map(move |nu| (mu, nu))).collect()
    }
}

/// `J_{ij} = J_i J_j + J_j J_i - δ_ij` (0-based spatial indices).
pub fn j_ij<T: Real>(i: usize, j: usize) -> CMatrix<T> {
    let jm = j_matrices::<T>();
    let anti = &(&jm[i] * &jm[j]) + &(&jm[j] * &jm[i]);
    if i == j {
        &anti - &CMatrix::identity(3)
    } else {
        anti
    }
}

/// Chiral-representation family, right-handed block on top:
/// `γ₀₀ = offdiag(1, 1)`, `γ₀ᵢ = offdiag(J_i, -J_i)`, `γᵢⱼ = offdiag(J_ij, J_ij)`,
/// `γ₅ = diag(1, -1)`.
pub fn bmw_chiral_gammas<T: Real>() -> GammaFamily<T> {
    let jm = j_matrices::<T>();
    let one = CMatrix::<T>::identity(3);
    let g = (0..4)
        .map(|mu| {
            (0..4)
                .map(|nu| match (mu, nu) {
                    (0, 0) => CMatrix::block_offdiag(&one, &one),
                    (0, i) | (i, 0) => CMatrix::block_offdiag(&jm[i - 1], &-&jm[i - 1]),
                    (i, j) => {
                        let e = j_ij::<T>(i - 1, j - 1);
                        CMatrix::block_offdiag(&e, &e)
                    }
                })
                .collect()
        })
        .collect();
    GammaFamily { g, gamma5: CMatrix::block_diag(&one, &-&one) }
}

/// `|γ_{μν} p^μ p^ν u - m² u|∞` for `u = (φ_R, φ_L)`.
pub fn on_shell_residual<T: Real>(family: &GammaFamily<T>, p: &FourMomentum<T>, u: &CVector<T>) -> Result<T> {
    let m2 = p.mass() * p.mass();
    family.contract(p.contravariant()).try_mul_vec(u)?.max_abs_diff(&u.scale_real(m2))
}

/// `W = (1/√2) [[1, 1], [1, -1]]`, chiral to canonical. Real, symmetric, `W² = 1`.
pub fn canonical_transform<T: Real>() -> CMatrix<T> {
    let one = CMatrix::<T>::identity(3);
    CMatrix::block2(&one, &one, &one, &-&one).scale_real(T::FRAC_1_SQRT_2())
}

/// Canonical-representation family `W γ W`.
pub fn bmw_canonical_gammas<T: Real>() -> GammaFamily<T> {
    bmw_chiral_gammas().conjugated_by(&canonical_transform())
}

/// `U` and `U†` built block by block from `(1 ∓ i) ± (1 ± i)Θ` over `2√2`.
pub fn majorana_unitary<T: Real>() -> (CMatrix<T>, CMatrix<T>) {
    let th = wigner_theta::<T>();
    let one = CMatrix::<T>::identity(3);
    let blk = |a: (f64, f64), b: (f64, f64)| &one.scale(c(a.0, a.1)) + &th.scale(c(b.0, b.1));
    let s = T::one() / (T::lit(2.0) * T::SQRT_2());
    let u = CMatrix::block2(
        &blk((1.0, -1.0), (1.0, 1.0)),
        &blk((-1.0, 1.0), (1.0, 1.0)),
        &blk((1.0, 1.0), (1.0, -1.0)),
        &blk((-1.0, -1.0), (1.0, -1.0)),
    )
    .scale_real(s);
    let ud = CMatrix::block2(
        &blk((1.0, 1.0), (1.0, -1.0)),
        &blk((1.0, -1.0), (1.0, 1.0)),
        &blk((-1.0, -1.0), (1.0, -1.0)),
        &blk((-1.0, 1.0), (1.0, 1.0)),
    )
    .scale_real(s);
    (u, ud)
}

/// `T = U W`: chiral representation straight to the Majorana one.
pub fn chiral_to_majorana<T: Real>() -> CMatrix<T> {
    &majorana_unitary::<T>().0 * &canonical_transform()
}

/// `U M U†` for a canonical-representation `M`.
pub fn to_majorana_rep<T: Real>(m: &CMatrix<T>) -> Result<CMatrix<T>> {
    if m.shape() != (6, 6) {
        return Err(Error::DimensionMismatch {
            op: "to_majorana_rep",
            expected: "6x6".into(),
            found: format!("{}x{}", m.rows(), m.cols()),
        });
    }
    let (u, ud) = majorana_unitary::<T>();
    Ok(&(&u * m) * &ud)
}

/// Majorana-representation matrices in their closed forms:
/// `γ₀₀ = offdiag(Θ, Θ)`, `γ₀₁ = offdiag(-J₁Θ, -J₁Θ)`, `γ₀₂ = diag(iJ₂Θ, -iJ₂Θ)`,
/// `γ₀₃ = offdiag(-J₃Θ, -J₃Θ)`,
/// `γᵢⱼ = ½ [[i(J*-J)Θ, (J*+J)Θ], [(J*+J)Θ, -i(J*-J)Θ]]` with `J = J_ij`,
/// `γ₅ = offdiag(i, -i)`.
pub fn displayed_majorana_gammas<T: Real>() -> GammaFamily<T> {
    let th = wigner_theta::<T>();
    let jm = j_matrices::<T>();
    let one = CMatrix::<T>::identity(3);
    let i = i_unit::<T>();
    let g = (0..4)
        .map(|mu| {
            (0..4)
                .map(|nu| match (mu, nu) {
                    (0, 0) => CMatrix::block_offdiag(&th, &th),
                    (0, 2) | (2, 0) => {
                        let b = (&jm[1] * &th).scale(i);
                        CMatrix::block_diag(&b, &-&b)
                    }
                    (0, k) | (k, 0) => {
                        let b = -&(&jm[k - 1] * &th);
                        CMatrix::block_offdiag(&b, &b)
                    }
                    (a, b) => {
                        let jj = j_ij::<T>(a - 1, b - 1);
                        let diff = &(&(&jj.conj() - &jj) * &th).scale(i);
                        let sum = &(&jj.conj() + &jj) * &th;
                        CMatrix::block2(diff, &sum, &sum, &-diff).scale_real(T::lit(0.5))
                    }
                })
                .collect()
        })
        .collect();
    GammaFamily { g, gamma5: CMatrix::block_offdiag(&one.scale(i), &one.scale(-i)) }
}

#[derive(Debug, Clone, Serialize)]
pub struct PairResidual {
    pub mu: usize,
    pub nu: usize,
    /// Largest imaginary part of the transformed matrix.
    pub imaginary: f64,
    /// Distance from the closed form.
    pub displayed: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct MajoranaRepReport {
    /// `|U U† - 1|∞`
    pub unitarity: f64,
    /// `|U† - conj-transpose(U)|∞`
    pub adjoint_consistency: f64,
    pub det_modulus: f64,
    pub pairs: Vec<PairResidual>,
    /// Largest real part of `U γ₅ U†`, which is purely imaginary.
    pub gamma5_real_part: f64,
    pub gamma5_displayed: f64,
    /// Largest entry of `Σ_{(μν)} |U γ^chiral U† - displayed|`: the
    /// outcome of applying `U` to the chiral matrices without the
    /// canonical step.
    pub chiral_direct_mismatch: f64,
    /// Symmetry `|γ_{μν} - γ_{νμ}|∞` of the transformed family.
    pub symmetry: f64,
}

impl MajoranaRepReport {
    pub fn max_imaginary(&self) -> f64 {
        self.pairs.iter().map(|p| p.imaginary).fold(0.0, f64::max)
    }

    pub fn max_displayed(&self) -> f64 {
        self.pairs.iter().map(|p| p.displayed).fold(self.gamma5_displayed, f64::max)
    }
}

/// Transforms the canonical family with `U` and compares against the
/// closed forms.
pub fn majorana_rep_report() -> Result<MajoranaRepReport> {
    let (u, ud) = majorana_unitary::<f64>();
    let unitarity = (&u * &ud).max_abs_diff(&CMatrix::identity(6))?;
    let adjoint_consistency = ud.max_abs_diff(&u.adjoint())?;
    let det_modulus = u.det()?.norm();
    let canon = bmw_canonical_gammas::<f64>();
    let shown = displayed_majorana_gammas::<f64>();
    let mr = GammaFamily {
        g: canon
            .g
            .iter()
            .map(|r| r.iter().map(to_majorana_rep).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?,
        gamma5: to_majorana_rep(&canon.gamma5)?,
    };
    let pairs = GammaFamily::<f64>::pairs()
        .into_iter()
        .map(|(mu, nu)| {
            Ok(PairResidual {
                mu,
                nu,
                imaginary: mr.g[mu][nu].max_imag(),
                displayed: mr.g[mu][nu].max_abs_diff(&shown.g[mu][nu])?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let direct = bmw_chiral_gammas::<f64>().conjugated_by(&u);
    let mut chiral_direct_mismatch = direct.gamma5.max_abs_diff(&shown.gamma5)?;
    let mut symmetry = 0.0f64;
    for (mu, nu) in GammaFamily::<f64>::pairs() {
        chiral_direct_mismatch = chiral_direct_mismatch.max(direct.g[mu][nu].max_abs_diff(&shown.g[mu][nu])?);
        symmetry = symmetry.max(mr.g[mu][nu].max_abs_diff(&mr.g[nu][mu])?);
    }
    Ok(MajoranaRepReport {
        unitarity,
        adjoint_consistency,
        det_modulus,
        pairs,
        gamma5_real_part: mr.gamma5.max_real(),
        gamma5_displayed: mr.gamma5.max_abs_diff(&shown.gamma5)?,
        chiral_direct_mismatch,
        symmetry,
    })
}
