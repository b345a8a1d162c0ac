use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::halfspin::Helicity;

/// Particle (`+`, created by `a†`) or antiparticle (`-`, created by `b†`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Particle,
    Antiparticle,
}

impl Branch {
    pub fn symbol(self) -> char {
        match self {
            Branch::Particle => '+',
            Branch::Antiparticle => '-',
        }
    }
}

/// `|p, h⟩^±` with `p` an integer tag; `-p` is the reflected momentum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ModeLabel {
    pub momentum: i32,
    pub helicity: Helicity,
    pub branch: Branch,
}

impl ModeLabel {
    pub fn new(momentum: i32, helicity: Helicity, branch: Branch) -> Self {
        Self { momentum, helicity, branch }
    }
}

impl fmt::Display for ModeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{}>{}", self.momentum, self.helicity.arrow(), self.branch.symbol())
    }
}

/// Finite momentum tag set closed under negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentumSet(Vec<i32>);

impl MomentumSet {
    pub fn new(mut tags: Vec<i32>) -> Result<Self> {
        tags.sort_unstable();
        tags.dedup();
        if let Some(&t) = tags.iter().find(|t| tags.binary_search(&-**t).is_err()) {
            return Err(Error::NotNegationClosed(t));
        }
        Ok(Self(tags))
    }

    /// `{-1, +1}`, optionally with the rest label `0`.
    pub fn standard(with_zero: bool) -> Self {
        Self::new(if with_zero { vec![-1, 0, 1] } else { vec![-1, 1] }).expect("symmetric by construction")
    }

    pub fn tags(&self) -> &[i32] {
        &self.0
    }

    /// All labels, ordered.
    pub fn labels(&self) -> Vec<ModeLabel> {
        let mut out = Vec::new();
        for &p in &self.0 {
            for h in Helicity::ALL {
                for b in [Branch::Particle, Branch::Antiparticle] {
                    out.push(ModeLabel::new(p, h, b));
                }
            }
        }
        out
    }
}

/// Finite linear combination of basis states; zero amplitudes are dropped.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FockVector(BTreeMap<ModeLabel, Complex64>);

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(label: ModeLabel) -> Self {
        Self::from_terms([(label, Complex64::new(1.0, 0.0))])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ModeLabel, Complex64)>) -> Self {
        let mut v = Self::default();
        for (l, c) in terms {
            v.add_term(l, c);
        }
        v
    }

    pub fn add_term(&mut self, label: ModeLabel, c: Complex64) {
        let e = self.0.entry(label).or_insert(Complex64::new(0.0, 0.0));
        *e += c;
        if *e == Complex64::new(0.0, 0.0) {
            self.0.remove(&label);
        }
    }

    pub fn amplitude(&self, label: &ModeLabel) -> Complex64 {
        self.0.get(label).copied().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ModeLabel, &Complex64)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_terms(self.0.iter().map(|(l, a)| (*l, a * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(*l, *c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn norm(&self) -> f64 {
        self.0.values().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Amplitudes in the order of `labels`.
    pub fn to_coords(&self, labels: &[ModeLabel]) -> crate::linalg::CVector<f64> {
        labels.iter().map(|l| self.amplitude(l)).collect()
    }

    pub fn from_coords(labels: &[ModeLabel], v: &crate::linalg::CVector<f64>) -> Self {
        Self::from_terms(labels.iter().zip(v.iter()).map(|(l, c)| (*l, *c)))
    }
}

/// `a` or `b` type mode operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    A,
    B,
}

/// `a_h`, `a†_h`, `b_h` or `b†_h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OperatorSymbol {
    pub kind: OperatorKind,
    pub dagger: bool,
    pub helicity: Helicity,
}

impl OperatorSymbol {
    pub fn new(kind: OperatorKind, dagger: bool, helicity: Helicity) -> Self {
        Self { kind, dagger, helicity }
    }

    pub fn adjoint(self) -> Self {
        Self { dagger: !self.dagger, ..self }
    }

    /// Branch of the state `self|0⟩` for a creation operator.
    pub fn created_branch(self) -> Option<Branch> {
        match (self.dagger, self.kind) {
            (true, OperatorKind::A) => Some(Branch::Particle),
            (true, OperatorKind::B) => Some(Branch::Antiparticle),
            (false, _) => None,
        }
    }
}

impl fmt::Display for OperatorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            OperatorKind::A => "a",
            OperatorKind::B => "b",
        };
        write!(f, "{k}{}_{}", if self.dagger { "†" } else { "" }, self.helicity.arrow())
    }
}
