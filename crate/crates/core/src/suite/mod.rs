//! Batch verification: configuration, check records and the four check
//! suites, all over `f64`.

mod fieldops;
mod fock;
mod halfspin;
mod spin1;
mod table;

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::halfspin::{FourMomentum, PhaseConvention};

pub use table::{tabulate, TableKind};

/// Default tolerance for identities that hold exactly up to rounding.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Halfspin,
    Spin1,
    Fock,
    Fieldops,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Halfspin, Suite::Spin1, Suite::Fock, Suite::Fieldops];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Halfspin => "halfspin",
            Suite::Spin1 => "spin1",
            Suite::Fock => "fock",
            Suite::Fieldops => "fieldops",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    #[default]
    JsonLines,
    Text,
}

/// Momentum magnitudes crossed with `(polar, azimuth)` directions. The rest
/// frame is always added.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub magnitudes: Vec<f64>,
    pub directions: Vec<(f64, f64)>,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            magnitudes: vec![0.3, 1.0, 2.5],
            directions: vec![(0.0, 0.0), (FRAC_PI_2, 0.0), (FRAC_PI_2, FRAC_PI_2), (1.1, 2.3), (2.5, 5.0), (0.4, 0.9)],
        }
    }
}

impl GridSpec {
    pub fn len(&self) -> usize {
        self.magnitudes.len() * self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rest frame first, then magnitudes outer, directions inner.
    pub fn momenta(&self, mass: f64) -> Result<Vec<FourMomentum<f64>>> {
        let mut out = vec![FourMomentum::at_rest(mass)?];
        for &k in &self.magnitudes {
            for &(t, f) in &self.directions {
                out.push(FourMomentum::new(mass, k, t, f)?);
            }
        }
        Ok(out)
    }
}

/// `MAGS` or `MAGS@DIRS`, with `MAGS = k1,k2,...` and
/// `DIRS = polar:azimuth,...` in radians. Without `@` the default
/// directions are kept.
impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::InvalidConfig(format!("grid {s:?}: {what}"));
        let num = |x: &str| x.trim().parse::<f64>().map_err(|_| bad(&format!("cannot parse {x:?}")));
        let (mags, dirs) = match s.split_once('@') {
            Some((m, d)) => (m, Some(d)),
            None => (s, None),
        };
        let magnitudes = mags.split(',').map(num).collect::<Result<Vec<_>>>()?;
        let directions = match dirs {
            None => GridSpec::default().directions,
            Some(d) => d
                .split(',')
                .map(|pair| {
                    let (t, f) = pair.split_once(':').ok_or_else(|| bad("direction needs polar:azimuth"))?;
                    Ok((num(t)?, num(f)?))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        Ok(GridSpec { magnitudes, directions })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub masses: Vec<f64>,
    pub grid: GridSpec,
    pub tolerance: f64,
    pub convention: PhaseConvention<f64>,
    pub suites: BTreeSet<Suite>,
    pub format: OutputFormat,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            masses: vec![1.0],
            grid: GridSpec::default(),
            tolerance: DEFAULT_TOLERANCE,
            convention: PhaseConvention::default(),
            suites: Suite::ALL.into_iter().collect(),
            format: OutputFormat::default(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return bad(format!("tolerance {} must be positive", self.tolerance));
        }
        if self.masses.is_empty() {
            return bad("mass list is empty".into());
        }
        if let Some(m) = self.masses.iter().find(|m| !(**m > 0.0 && m.is_finite())) {
            return bad(format!("mass {m} must be positive"));
        }
        if self.grid.is_empty() {
            return bad("momentum grid is empty".into());
        }
        if let Some(k) = self.grid.magnitudes.iter().find(|k| !(**k > 0.0 && k.is_finite())) {
            return bad(format!("grid magnitude {k} must be positive"));
        }
        if self.grid.directions.iter().any(|(t, f)| !(t.is_finite() && f.is_finite())) {
            return bad("grid direction is not finite".into());
        }
        if self.suites.is_empty() {
            return bad("no suite selected".into());
        }
        self.convention.validate()
    }

    /// Every grid momentum for every mass.
    pub fn momenta(&self) -> Result<Vec<FourMomentum<f64>>> {
        let mut out = Vec::new();
        for &m in &self.masses {
            out.extend(self.grid.momenta(m)?);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Reported,
}

/// Whether the residual must stay below the tolerance or above it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub residual: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub measured: BTreeMap<String, Value>,
}

impl CheckResult {
    /// Pass iff `residual <= tolerance`. A NaN residual fails.
    pub fn upper(id: &str, anchor: &str, residual: f64, tolerance: f64) -> Self {
        let ok = residual <= tolerance;
        Self::build(id, anchor, ok, residual, tolerance, Bound::Upper)
    }

    /// Pass iff `residual > tolerance`.
    pub fn lower(id: &str, anchor: &str, residual: f64, tolerance: f64) -> Self {
        let ok = residual > tolerance;
        Self::build(id, anchor, ok, residual, tolerance, Bound::Lower)
    }

    pub fn reported(id: &str, anchor: &str) -> Self {
        let mut r = Self::build(id, anchor, true, 0.0, 0.0, Bound::Upper);
        r.status = Status::Reported;
        r
    }

    fn build(id: &str, anchor: &str, ok: bool, residual: f64, tolerance: f64, bound: Bound) -> Self {
        Self {
            id: id.into(),
            anchor: anchor.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            // drop the sign of a negative zero
            residual: residual + 0.0,
            tolerance,
            bound,
            measured: BTreeMap::new(),
        }
    }

    /// Demotes a pass to a fail when `ok` is false.
    pub fn require(mut self, ok: bool) -> Self {
        if !ok {
            self.status = Status::Fail;
        }
        self
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        self.measured.insert(key.into(), v);
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// One line of the plain-text summary.
    pub fn text_line(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Reported => "INFO",
        };
        let cmp = match self.bound {
            Bound::Upper => "<=",
            Bound::Lower => ">",
        };
        if self.status == Status::Reported {
            format!("{status} {:<40} {}", self.id, self.anchor)
        } else {
            format!("{status} {:<40} {:.3e} {cmp} {:.1e}  {}", self.id, self.residual, self.tolerance, self.anchor)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(CheckResult::passed)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.results.iter().map(|r| serde_json::to_string(r).expect("check records serialize") + "\n").collect()
    }

    pub fn to_text(&self) -> String {
        let mut out: String = self.results.iter().map(|r| r.text_line() + "\n").collect();
        let failed = self.failures().count();
        out.push_str(&format!("{} checks, {} failed\n", self.results.len(), failed));
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::JsonLines => self.to_json_lines(),
            OutputFormat::Text => self.to_text(),
        }
    }
}

/// Runs the selected suites and returns their results sorted by id.
pub fn run(config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let momenta = config.momenta()?;
    let ctx = Context { config, momenta: &momenta };
    let mut results = Vec::new();
    for suite in &config.suites {
        let part = match suite {
            Suite::Halfspin => halfspin::checks(&ctx)?,
            Suite::Spin1 => spin1::checks(&ctx)?,
            Suite::Fock => fock::checks(&ctx)?,
            Suite::Fieldops => fieldops::checks(&ctx)?,
        };
        results.extend(part);
    }
    results.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Report { results })
}

/// Check ids each suite emits, in sorted order.
pub fn check_ids(suite: Suite) -> Vec<&'static str> {
    let mut ids = match suite {
        Suite::Halfspin => halfspin::IDS.to_vec(),
        Suite::Spin1 => spin1::IDS.to_vec(),
        Suite::Fock => fock::IDS.to_vec(),
        Suite::Fieldops => fieldops::IDS.to_vec(),
    };
    ids.sort_unstable();
    ids
}

struct Context<'a> {
    config: &'a SuiteConfig,
    momenta: &'a [FourMomentum<f64>],
}

impl Context<'_> {
    fn tol(&self) -> f64 {
        self.config.tolerance
    }

    fn conv(&self) -> PhaseConvention<f64> {
        self.config.convention
    }
}

/// Residual relative to `max(1, scale)`, so identities between spinors
/// of size `√E` are judged on the same footing as unit-size ones.
fn rel(residual: f64, scale: f64) -> f64 {
    residual / scale.max(1.0)
}

#[cfg(test)]
mod tests;
