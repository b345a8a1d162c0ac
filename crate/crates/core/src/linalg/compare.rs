use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector};
use crate::scalar::Real;

/// Outcome of a tolerance comparison. The residual is always reported.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison<T> {
    pub within: bool,
    pub residual: T,
}

impl<T: Real> Comparison<T> {
    pub fn from_residual(residual: T, tol: T) -> Self {
        Self { within: residual <= tol, residual }
    }
}

/// Max entrywise absolute difference between equally shaped objects.
pub trait ApproxCompare<T: Real> {
    fn max_abs_diff(&self, other: &Self) -> Result<T>;

    fn approx_eq(&self, other: &Self, tol: T) -> Result<Comparison<T>> {
        if tol < T::zero() || tol.is_nan() {
            return Err(Error::InvalidConfig(format!("negative tolerance {tol}")));
        }
        Ok(Comparison::from_residual(self.max_abs_diff(other)?, tol))
    }
}

impl<T: Real> ApproxCompare<T> for CMatrix<T> {
    fn max_abs_diff(&self, other: &Self) -> Result<T> {
        Ok(self.try_sub(other)?.max_abs())
    }
}

impl<T: Real> ApproxCompare<T> for CVector<T> {
    fn max_abs_diff(&self, other: &Self) -> Result<T> {
        Ok(self.try_sub(other)?.max_abs())
    }
}

/// Best scalar `c` minimizing `|w - c v|` and the residual norm relative to
/// `|v|`. A zero `v` yields `(0, 0)`.
pub fn proportionality<T: Real>(v: &CVector<T>, w: &CVector<T>) -> (crate::scalar::C<T>, T) {
    let vv = v.dot(v).re;
    if vv == T::zero() {
        return (num_complex::Complex::new(T::zero(), T::zero()), T::zero());
    }
    let c = v.dot(w) / vv;
    let r = (w - &v.scale(c)).norm() / vv.sqrt();
    (c, r)
}
