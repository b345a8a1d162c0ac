//! Eigenvectors of antilinear involutions via the real embedding.
//!
//! An antilinear `S` with real eigenvalue `±1` becomes a linear map on
//! `R^{2n}`; its `±1` eigenvectors are the nullspaces of `R ∓ 1`.

use crate::linalg::{AntilinearOp, CMatrix, CVector};
use crate::scalar::Real;

/// Real-orthonormal basis of `{ψ : S ψ = eigenvalue · ψ}`.
///
/// `eigenvalue` is real; for antilinear `S` only real eigenvalues are
/// phase-meaningful since `S(αψ) = α* Sψ`.
pub fn real_eigenspace<T: Real>(op: &AntilinearOp<T>, eigenvalue: T, tol: T) -> Vec<CVector<T>> {
    let r = op.realify();
    let n2 = r.rows();
    let shifted = &r - &CMatrix::identity(n2).scale_real(eigenvalue);
    let raw: Vec<Vec<T>> = shifted.nullspace(tol).into_iter().map(|v| v.iter().map(|z| z.re).collect()).collect();
    orthonormalize_real(raw, tol).into_iter().map(|x| CVector::from_realified(&x)).collect()
}

/// Modified Gram-Schmidt with the Euclidean inner product; drops vectors
/// whose remainder falls below `tol`.
pub fn orthonormalize_real<T: Real>(vectors: Vec<Vec<T>>, tol: T) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = Vec::new();
    for mut v in vectors {
        for q in &out {
            let d = dot(q, &v);
            for (x, y) in v.iter_mut().zip(q) {
                *x = *x - d * *y;
            }
        }
        let n = dot(&v, &v).sqrt();
        if n > tol {
            out.push(v.into_iter().map(|x| x / n).collect());
        }
    }
    out
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + *x * *y)
}

/// Unitary `V` whose rows are `e_k†` for a complex-orthonormal basis `e_k`
/// of the `+1` fixed space of an antiunitary involution `S`. Then
/// `S ψ = ψ` iff `V ψ` is real, and `S ψ = -ψ` iff `V ψ` is imaginary.
///
/// Returns `None` when the fixed space does not have real dimension `n`.
pub fn majorana_frame<T: Real>(op: &AntilinearOp<T>, tol: T) -> Option<CMatrix<T>> {
    let n = op.dim();
    let basis = real_eigenspace(op, T::one(), tol);
    if basis.len() != n {
        return None;
    }
    Some(CMatrix::from_fn(n, n, |i, j| basis[i][j].conj()))
}

/// Classification of a vector's entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RealityClass {
    Zero,
    PureReal,
    PureImaginary,
    Mixed,
}

impl RealityClass {
    pub fn of<T: Real>(v: &CVector<T>, tol: T) -> (Self, T) {
        let re = v.max_real();
        let im = v.max_imag();
        match (re <= tol, im <= tol) {
            (true, true) => (Self::Zero, re.max(im)),
            (false, true) => (Self::PureReal, im),
            (true, false) => (Self::PureImaginary, re),
            (false, false) => (Self::Mixed, re.min(im)),
        }
    }
}
