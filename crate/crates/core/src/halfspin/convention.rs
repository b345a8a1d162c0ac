use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Which 2-spinors seed the rest frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RestBasis {
    /// Eigenspinors of `σ·n̂`: `χ₊ = (c e^{-iφ/2}, s e^{iφ/2})`,
    /// `χ₋ = (-s e^{-iφ/2}, c e^{iφ/2})` with `c, s = cos, sin(θ/2)`.
    #[default]
    Helicity,
    /// Same `χ₊`, but `χ₋ = (s e^{-iφ/2}, -c e^{iφ/2})`.
    HelicityReflectedDown,
    /// `(1, 0)` and `(0, 1)` regardless of direction.
    SigmaZ,
}

impl RestBasis {
    pub fn is_helicity(self) -> bool {
        matches!(self, Self::Helicity | Self::HelicityReflectedDown)
    }
}

/// Phases and normalization every construction is parameterized by.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseConvention<T> {
    /// Phase of the spin-up rest spinor.
    pub theta1: T,
    /// Phase of the spin-down rest spinor.
    pub theta2: T,
    /// Overall phase of the charge-conjugation operator.
    pub theta_c: T,
    /// Rest-spinor normalization; `None` means `√m`.
    pub norm: Option<T>,
    pub basis: RestBasis,
}

impl<T: Real> Default for PhaseConvention<T> {
    fn default() -> Self {
        Self { theta1: T::zero(), theta2: T::zero(), theta_c: T::zero(), norm: None, basis: RestBasis::Helicity }
    }
}

impl<T: Real> PhaseConvention<T> {
    pub fn with_phases(theta1: T, theta2: T) -> Self {
        Self { theta1, theta2, ..Self::default() }
    }

    pub fn with_basis(mut self, basis: RestBasis) -> Self {
        self.basis = basis;
        self
    }

    pub fn normalization(&self, mass: T) -> T {
        self.norm.unwrap_or_else(|| mass.sqrt())
    }

    pub fn validate(&self) -> Result<()> {
        if [self.theta1, self.theta2, self.theta_c].iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidConvention("non-finite phase".into()));
        }
        match self.norm {
            Some(n) if !(n > T::zero() && n.is_finite()) => {
                Err(Error::InvalidConvention(format!("normalization {n} must be positive")))
            }
            _ => Ok(()),
        }
    }
}
