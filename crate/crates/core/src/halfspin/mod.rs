//! Spin-1/2 momentum-space objects: Weyl and Dirac spinors, the type-II
//! `λ`/`ρ` bispinors and the discrete operators acting on them.

pub mod convention;
pub mod fgm;
pub mod gamma;
pub mod identities;
pub mod momentum;
pub mod spinors;
pub mod symmetry;


use serde::{Deserialize, Serialize};

use crate::scalar::Real;

pub use convention::{PhaseConvention, RestBasis};
pub use identities::{Frequency, FrequencyAssignment};
pub use momentum::FourMomentum;
pub use spinors::{boost_ops, build_spinor_basis, helicity_eigenspinor, rest_spinor, SpinorBasis};
pub use symmetry::{charge_conjugation_op, conjugacy_of, discrete_ops, gauge_transform, GaugeKind, XiMap};

/// Spin projection `±1/2` along the momentum direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Helicity {
    Up,
    Down,
}

impl Helicity {
    pub const ALL: [Helicity; 2] = [Helicity::Up, Helicity::Down];

    /// Array slot: `0` for up, `1` for down.
    pub fn index(self) -> usize {
        match self {
            Helicity::Up => 0,
            Helicity::Down => 1,
        }
    }

    /// `+1` or `-1`.
    pub fn sign<T: Real>(self) -> T {
        match self {
            Helicity::Up => T::one(),
            Helicity::Down => -T::one(),
        }
    }

    /// `±1/2`.
    pub fn value<T: Real>(self) -> T {
        self.sign::<T>() * T::lit(0.5)
    }

    pub fn flipped(self) -> Self {
        match self {
            Helicity::Up => Helicity::Down,
            Helicity::Down => Helicity::Up,
        }
    }

    pub fn arrow(self) -> &'static str {
        match self {
            Helicity::Up => "up",
            Helicity::Down => "down",
        }
    }
}

/// Eigenvalue of the charge-conjugation operator: `+1` (self) or `-1` (anti-self).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conjugacy {
    SelfConjugate,
    AntiSelfConjugate,
}

impl Conjugacy {
    pub fn sign<T: Real>(self) -> T {
        match self {
            Conjugacy::SelfConjugate => T::one(),
            Conjugacy::AntiSelfConjugate => -T::one(),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Conjugacy::SelfConjugate => Conjugacy::AntiSelfConjugate,
            Conjugacy::AntiSelfConjugate => Conjugacy::SelfConjugate,
        }
    }
}
