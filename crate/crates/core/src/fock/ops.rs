use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::fock::state::{Branch, FockVector, ModeLabel, MomentumSet, OperatorKind, OperatorSymbol};
use crate::halfspin::Helicity;
use crate::linalg::{CMatrix, CVector};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryKind {
    /// `U^s`
    SpaceInversion,
    /// `U^c`
    ChargeConjugation,
    /// `Ũ^c`
    ChargeConjugationTilde,
}

impl SymmetryKind {
    pub const ALL: [SymmetryKind; 3] =
        [SymmetryKind::SpaceInversion, SymmetryKind::ChargeConjugation, SymmetryKind::ChargeConjugationTilde];

    pub fn name(self) -> &'static str {
        match self {
            SymmetryKind::SpaceInversion => "Us",
            SymmetryKind::ChargeConjugation => "Uc",
            SymmetryKind::ChargeConjugationTilde => "Uc_tilde",
        }
    }
}

/// Unitary acting on basis states by a label bijection times a phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryOp {
    pub kind: SymmetryKind,
}

impl SymmetryOp {
    /// `|p,↑⟩^± ↦ +i|-p,↓⟩^±`, `|p,↓⟩^± ↦ -i|-p,↑⟩^±`.
    pub fn space_inversion() -> Self {
        Self { kind: SymmetryKind::SpaceInversion }
    }

    /// `|p,h⟩^+ ↦ +|p,h⟩^-`, `|p,h⟩^- ↦ -|p,h⟩^+`.
    pub fn charge_conjugation_v1() -> Self {
        Self { kind: SymmetryKind::ChargeConjugation }
    }

    /// `|p,↑⟩^+ ↦ -|p,↓⟩^-`, `|p,↓⟩^+ ↦ -|p,↑⟩^-`, `|p,↑⟩^- ↦ +|p,↓⟩^+`,
    /// `|p,↓⟩^- ↦ +|p,↑⟩^+`.
    pub fn charge_conjugation_v2() -> Self {
        Self { kind: SymmetryKind::ChargeConjugationTilde }
    }

    pub fn of(kind: SymmetryKind) -> Self {
        Self { kind }
    }

    pub fn action(&self, l: ModeLabel) -> (ModeLabel, Complex64) {
        use Branch::*;
        use Helicity::*;
        match self.kind {
            SymmetryKind::SpaceInversion => {
                let c = if l.helicity == Up { I } else { -I };
                (ModeLabel::new(-l.momentum, l.helicity.flipped(), l.branch), c)
            }
            SymmetryKind::ChargeConjugation => match l.branch {
                Particle => (ModeLabel { branch: Antiparticle, ..l }, ONE),
                Antiparticle => (ModeLabel { branch: Particle, ..l }, -ONE),
            },
            SymmetryKind::ChargeConjugationTilde => {
                let flipped = l.helicity.flipped();
                match l.branch {
                    Particle => (ModeLabel::new(l.momentum, flipped, Antiparticle), -ONE),
                    Antiparticle => (ModeLabel::new(l.momentum, flipped, Particle), ONE),
                }
            }
        }
    }

    pub fn apply(&self, v: &FockVector) -> FockVector {
        FockVector::from_terms(v.terms().map(|(l, c)| {
            let (img, ph) = self.action(*l);
            (img, c * ph)
        }))
    }

    /// Matrix on the span of `labels`; column `j` is the image of `labels[j]`.
    pub fn matrix(&self, labels: &[ModeLabel]) -> CMatrix<f64> {
        let n = labels.len();
        let mut m = CMatrix::zeros(n, n);
        for (j, l) in labels.iter().enumerate() {
            let (img, ph) = self.action(*l);
            if let Some(i) = labels.iter().position(|x| *x == img) {
                m[(i, j)] = ph;
            }
        }
        m
    }

    /// `c` with `U² |l⟩ = c |l⟩` when the square is diagonal on `l`.
    pub fn square_phase(&self, l: ModeLabel) -> Option<Complex64> {
        let (l1, c1) = self.action(l);
        let (l2, c2) = self.action(l1);
        (l2 == l).then_some(c1 * c2)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CommutatorRow {
    pub label: ModeLabel,
    /// `|(AB - BA)|l⟩|`
    pub commutator: f64,
    /// `|(AB + BA)|l⟩|`
    pub anticommutator: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CommutatorReport {
    pub rows: Vec<CommutatorRow>,
}

impl CommutatorReport {
    pub fn max_commutator(&self) -> f64 {
        self.rows.iter().map(|r| r.commutator).fold(0.0, f64::max)
    }

    pub fn max_anticommutator(&self) -> f64 {
        self.rows.iter().map(|r| r.anticommutator).fold(0.0, f64::max)
    }
}

pub fn commutator_report(a: &SymmetryOp, b: &SymmetryOp, set: &MomentumSet) -> CommutatorReport {
    let rows = set
        .labels()
        .into_iter()
        .map(|l| {
            let v = FockVector::basis(l);
            let ab = a.apply(&b.apply(&v));
            let ba = b.apply(&a.apply(&v));
            CommutatorRow { label: l, commutator: ab.sub(&ba).norm(), anticommutator: ab.add(&ba).norm() }
        })
        .collect();
    CommutatorReport { rows }
}

/// Dimension of the simultaneous eigenspace of two operators for one pair
/// of eigenvalues, on the span of `labels`.
#[derive(Debug, Clone, Serialize)]
pub struct JointEigenspace {
    pub first: SymmetryKind,
    pub second: SymmetryKind,
    pub first_eigenvalue: (f64, f64),
    pub second_eigenvalue: (f64, f64),
    /// Momentum tags spanning the search space.
    pub momenta: Vec<i32>,
    pub dimension: usize,
    /// Rank of the stacked system `[A - α; B - β]`.
    pub stacked_rank: usize,
}

fn joint_eigenspace(
    a: SymmetryKind,
    b: SymmetryKind,
    ea: Complex64,
    eb: Complex64,
    labels: &[ModeLabel],
    momenta: Vec<i32>,
    tol: f64,
) -> Result<(JointEigenspace, Vec<CVector<f64>>)> {
    let n = labels.len();
    let id = CMatrix::<f64>::identity(n);
    let ma = &SymmetryOp::of(a).matrix(labels) - &id.scale(ea);
    let mb = &SymmetryOp::of(b).matrix(labels) - &id.scale(eb);
    let stacked = CMatrix::block(&[&[&ma], &[&mb]])?;
    let null = stacked.nullspace(tol);
    Ok((
        JointEigenspace {
            first: a,
            second: b,
            first_eigenvalue: (ea.re, ea.im),
            second_eigenvalue: (eb.re, eb.im),
            momenta,
            dimension: null.len(),
            stacked_rank: stacked.rank(tol),
        },
        null,
    ))
}

#[derive(Debug, Clone)]
pub struct EigencombinationReport {
    /// `max |U^s(|p,↑⟩ ± i|p,↓⟩) ∓ (|-p,↑⟩ ± i|-p,↓⟩)|` over tags and branches.
    pub parity_covariance_residual: f64,
    /// At the rest label: fitted eigenvalue of `|0,↑⟩ + s i|0,↓⟩`, for `s = +1, -1`.
    pub parity_rest_eigenvalues: Vec<(i32, Complex64, f64)>,
    /// `max |U^c(|p,h⟩^+ ± i|p,h⟩^-) ± i(...)|`.
    pub charge_residual: f64,
    /// Simultaneous eigenspaces of `U^s` with `U^c` and with `Ũ^c`.
    pub joint: Vec<JointEigenspace>,
    /// One simultaneous `U^s`/`U^c` eigenvector, when any exists.
    pub simultaneous_example: Option<FockVector>,
}

impl EigencombinationReport {
    pub fn joint_dimension(&self, second: SymmetryKind) -> usize {
        self.joint.iter().filter(|j| j.second == second).map(|j| j.dimension).sum()
    }
}

/// Parity and charge combinations, and the exhaustive simultaneous
/// eigenvector search on the rest label and on each `{p, -p}` pair.
pub fn eigencombination_suite(set: &MomentumSet, tol: f64) -> Result<EigencombinationReport> {
    let us = SymmetryOp::space_inversion();
    let uc = SymmetryOp::charge_conjugation_v1();
    use Helicity::*;

    let mut parity_covariance_residual = 0.0f64;
    let mut parity_rest_eigenvalues = Vec::new();
    let mut charge_residual = 0.0f64;
    for &p in set.tags() {
        for s in [1.0, -1.0] {
            let si = I * s;
            for br in [Branch::Particle, Branch::Antiparticle] {
                let combo = |q: i32| {
                    FockVector::from_terms([(ModeLabel::new(q, Up, br), ONE), (ModeLabel::new(q, Down, br), si)])
                };
                let image = us.apply(&combo(p));
                parity_covariance_residual =
                    parity_covariance_residual.max(image.sub(&combo(-p).scale(ONE * s)).norm());
                if p == 0 && br == Branch::Particle {
                    let labels = set.labels();
                    let x = combo(0).to_coords(&labels);
                    let (c, r) = crate::linalg::proportionality(&x, &image.to_coords(&labels));
                    parity_rest_eigenvalues.push((s as i32, c, r));
                }
            }
            for h in Helicity::ALL {
                let combo = FockVector::from_terms([
                    (ModeLabel::new(p, h, Branch::Particle), ONE),
                    (ModeLabel::new(p, h, Branch::Antiparticle), si),
                ]);
                let image = uc.apply(&combo);
                charge_residual = charge_residual.max(image.sub(&combo.scale(-si)).norm());
            }
        }
    }

    let mut joint = Vec::new();
    let mut simultaneous_example = None;
    let blocks: Vec<Vec<i32>> =
        set.tags().iter().filter(|&&p| p >= 0).map(|&p| if p == 0 { vec![0] } else { vec![-p, p] }).collect();
    for momenta in blocks {
        let labels: Vec<ModeLabel> = set.labels().into_iter().filter(|l| momenta.contains(&l.momentum)).collect();
        for second in [SymmetryKind::ChargeConjugation, SymmetryKind::ChargeConjugationTilde] {
            for ea in [ONE, -ONE] {
                for eb in [I, -I] {
                    let (j, null) =
                        joint_eigenspace(SymmetryKind::SpaceInversion, second, ea, eb, &labels, momenta.clone(), tol)?;
                    if second == SymmetryKind::ChargeConjugation && simultaneous_example.is_none() {
                        simultaneous_example = null.first().map(|v| FockVector::from_coords(&labels, v));
                    }
                    joint.push(j);
                }
            }
        }
    }
    Ok(EigencombinationReport {
        parity_covariance_residual,
        parity_rest_eigenvalues,
        charge_residual,
        joint,
        simultaneous_example,
    })
}

/// `U X(p) U⁻¹ = c Y(±p)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct OperatorRule {
    pub op: SymmetryKind,
    pub input: OperatorSymbol,
    pub output: OperatorSymbol,
    pub coefficient: (f64, f64),
    pub reflects_momentum: bool,
}

/// Conjugation rules for the mode operators. The space-inversion image of
/// `b†_↓` is the creation operator `b†_↑(-p)`.
pub fn operator_rules(kind: SymmetryKind) -> Vec<OperatorRule> {
    use Helicity::*;
    use OperatorKind::*;
    let sym = |k, d, h| OperatorSymbol::new(k, d, h);
    let rule = |input, output, c: (f64, f64), reflects| OperatorRule {
        op: kind,
        input,
        output,
        coefficient: c,
        reflects_momentum: reflects,
    };
    match kind {
        SymmetryKind::SpaceInversion => vec![
            rule(sym(A, false, Up), sym(A, false, Down), (0.0, -1.0), true),
            rule(sym(A, false, Down), sym(A, false, Up), (0.0, 1.0), true),
            rule(sym(B, true, Up), sym(B, true, Down), (0.0, 1.0), true),
            rule(sym(B, true, Down), sym(B, true, Up), (0.0, -1.0), true),
        ],
        SymmetryKind::ChargeConjugation => vec![
            rule(sym(A, false, Up), sym(B, false, Up), (1.0, 0.0), false),
            rule(sym(A, false, Down), sym(B, false, Down), (1.0, 0.0), false),
            rule(sym(B, true, Up), sym(A, true, Up), (-1.0, 0.0), false),
            rule(sym(B, true, Down), sym(A, true, Down), (-1.0, 0.0), false),
        ],
        SymmetryKind::ChargeConjugationTilde => vec![
            rule(sym(A, false, Up), sym(B, false, Down), (-1.0, 0.0), false),
            rule(sym(A, false, Down), sym(B, false, Up), (-1.0, 0.0), false),
            rule(sym(B, true, Up), sym(A, true, Down), (1.0, 0.0), false),
            rule(sym(B, true, Down), sym(A, true, Up), (1.0, 0.0), false),
        ],
    }
}

/// State actions implied by the operator rules with an invariant vacuum:
/// `U X†|0⟩ = (U X† U⁻¹)|0⟩`, taking the adjoint of annihilation rules.
/// Returns `(input, image)` pairs over every label of `set`.
pub fn state_rules_from_operators(kind: SymmetryKind, set: &MomentumSet) -> Vec<(ModeLabel, FockVector)> {
    let mut out = Vec::new();
    for r in operator_rules(kind) {
        let (input, output, coeff) = if r.input.dagger {
            (r.input, r.output, Complex64::new(r.coefficient.0, r.coefficient.1))
        } else {
            (r.input.adjoint(), r.output.adjoint(), Complex64::new(r.coefficient.0, -r.coefficient.1))
        };
        let (Some(b_in), Some(b_out)) = (input.created_branch(), output.created_branch()) else {
            continue;
        };
        for &p in set.tags() {
            let q = if r.reflects_momentum { -p } else { p };
            out.push((
                ModeLabel::new(p, input.helicity, b_in),
                FockVector::basis(ModeLabel::new(q, output.helicity, b_out)).scale(coeff),
            ));
        }
    }
    out.sort_by_key(|(l, _)| *l);
    out
}
