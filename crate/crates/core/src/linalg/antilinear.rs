use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector};
use crate::scalar::Real;

/// Operator `ψ ↦ M ψ` or, when `conjugates_argument` is set, `ψ ↦ M ψ*`.
#[derive(Debug, Clone, PartialEq)]
pub struct AntilinearOp<T: Real> {
    matrix: CMatrix<T>,
    conjugates_argument: bool,
}

impl<T: Real> AntilinearOp<T> {
    pub fn new(matrix: CMatrix<T>, conjugates_argument: bool) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        Ok(Self { matrix, conjugates_argument })
    }

    pub fn linear(matrix: CMatrix<T>) -> Result<Self> {
        Self::new(matrix, false)
    }

    pub fn antilinear(matrix: CMatrix<T>) -> Result<Self> {
        Self::new(matrix, true)
    }

    /// Pure complex conjugation on `n` components.
    pub fn conjugation(n: usize) -> Self {
        Self { matrix: CMatrix::identity(n), conjugates_argument: true }
    }

    pub fn identity(n: usize) -> Self {
        Self { matrix: CMatrix::identity(n), conjugates_argument: false }
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn conjugates_argument(&self) -> bool {
        self.conjugates_argument
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &CVector<T>) -> Result<CVector<T>> {
        if self.conjugates_argument {
            self.matrix.try_mul_vec(&v.conj())
        } else {
            self.matrix.try_mul_vec(v)
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let rhs = if self.conjugates_argument { other.matrix.conj() } else { other.matrix.clone() };
        Ok(Self {
            matrix: self.matrix.try_mul(&rhs)?,
            conjugates_argument: self.conjugates_argument ^ other.conjugates_argument,
        })
    }

    pub fn square(&self) -> Self {
        self.compose(self).expect("square operator composes with itself")
    }

    /// Left multiplication by a linear matrix: `L ∘ self`.
    pub fn premultiply(&self, l: &CMatrix<T>) -> Result<Self> {
        Ok(Self { matrix: l.try_mul(&self.matrix)?, conjugates_argument: self.conjugates_argument })
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self { matrix: self.matrix.scale(s), conjugates_argument: self.conjugates_argument }
    }

    /// Real `2n × 2n` matrix acting on `(Re ψ, Im ψ)`.
    ///
    /// With `M = A + iB`: linear ops give `[[A, -B], [B, A]]`, antilinear ops
    /// give `[[A, B], [B, -A]]`.
    pub fn realify(&self) -> CMatrix<T> {
        let a = self.matrix.map(|z| Complex::new(z.re, T::zero()));
        let b = self.matrix.map(|z| Complex::new(z.im, T::zero()));
        if self.conjugates_argument {
            CMatrix::block2(&a, &b, &b, &-&a)
        } else {
            CMatrix::block2(&a, &-&b, &b, &a)
        }
    }
}
