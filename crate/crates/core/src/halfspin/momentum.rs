use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// On-shell four-momentum in spherical coordinates.
///
/// A zero 3-momentum has no direction; it is pinned to `ẑ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourMomentum<T> {
    mass: T,
    magnitude: T,
    polar: T,
    azimuth: T,
}

impl<T: Real> FourMomentum<T> {
    pub fn new(mass: T, magnitude: T, polar: T, azimuth: T) -> Result<Self> {
        for (name, x) in [("mass", mass), ("magnitude", magnitude), ("polar", polar), ("azimuth", azimuth)] {
            if !x.is_finite() {
                return Err(Error::InvalidMomentum(format!("{name} is not finite")));
            }
        }
        if mass < T::zero() {
            return Err(Error::InvalidMomentum(format!("negative mass {mass}")));
        }
        if magnitude < T::zero() {
            return Err(Error::InvalidMomentum(format!("negative magnitude {magnitude}")));
        }
        if polar < T::zero() || polar > T::PI() {
            return Err(Error::InvalidMomentum(format!("polar angle {polar} outside [0, π]")));
        }
        if magnitude == T::zero() {
            return Ok(Self { mass, magnitude, polar: T::zero(), azimuth: T::zero() });
        }
        Ok(Self { mass, magnitude, polar, azimuth: wrap_angle(azimuth) })
    }

    pub fn at_rest(mass: T) -> Result<Self> {
        Self::new(mass, T::zero(), T::zero(), T::zero())
    }

    pub fn from_cartesian(mass: T, p: [T; 3]) -> Result<Self> {
        let magnitude = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        if magnitude == T::zero() {
            return Self::at_rest(mass);
        }
        let polar = (p[2] / magnitude).max(-T::one()).min(T::one()).acos();
        Self::new(mass, magnitude, polar, p[1].atan2(p[0]))
    }

    pub fn mass(&self) -> T {
        self.mass
    }

    pub fn magnitude(&self) -> T {
        self.magnitude
    }

    pub fn polar(&self) -> T {
        self.polar
    }

    pub fn azimuth(&self) -> T {
        self.azimuth
    }

    pub fn energy(&self) -> T {
        (self.magnitude * self.magnitude + self.mass * self.mass).sqrt()
    }

    pub fn is_rest(&self) -> bool {
        self.magnitude == T::zero()
    }

    pub fn direction(&self) -> [T; 3] {
        let (st, ct) = self.polar.sin_cos();
        let (sp, cp) = self.azimuth.sin_cos();
        [st * cp, st * sp, ct]
    }

    pub fn spatial(&self) -> [T; 3] {
        self.direction().map(|x| x * self.magnitude)
    }

    /// `(E, p)` with upper index.
    pub fn contravariant(&self) -> [T; 4] {
        let p = self.spatial();
        [self.energy(), p[0], p[1], p[2]]
    }

    /// `p ↦ -p`; a rest momentum is left unchanged.
    pub fn space_inverted(&self) -> Self {
        if self.is_rest() {
            return *self;
        }
        Self {
            mass: self.mass,
            magnitude: self.magnitude,
            polar: T::PI() - self.polar,
            azimuth: wrap_angle(self.azimuth + T::PI()),
        }
    }

    pub fn with_mass(&self, mass: T) -> Result<Self> {
        Self::new(mass, self.magnitude, self.polar, self.azimuth)
    }

    /// Minkowski square `E² - |p|²`.
    pub fn invariant_mass_sq(&self) -> T {
        let e = self.energy();
        e * e - self.magnitude * self.magnitude
    }

    pub(crate) fn require_massive(&self, op: &'static str) -> Result<()> {
        if self.mass > T::zero() {
            Ok(())
        } else {
            Err(Error::ZeroMass(op))
        }
    }
}

fn wrap_angle<T: Real>(a: T) -> T {
    let two_pi = T::PI() + T::PI();
    let r = a % two_pi;
    if r < T::zero() {
        r + two_pi
    } else {
        r
    }
}

/// Checks `|n| = 1` and returns polar/azimuth angles.
pub fn direction_angles<T: Real>(n: [T; 3]) -> Result<(T, T)> {
    let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
    if (norm - T::one()).abs() > T::default_tolerance() * T::lit(100.0) {
        return Err(Error::NonUnitDirection(norm.to_f64_lossy()));
    }
    let polar = (n[2] / norm).max(-T::one()).min(T::one()).acos();
    let azimuth = if n[0] == T::zero() && n[1] == T::zero() { T::zero() } else { wrap_angle(n[1].atan2(n[0])) };
    Ok((polar, azimuth))
}
