use num_complex::Complex64;

use crate::error::Result;
use crate::fock::{
    commutator_report, eigencombination_suite, state_rules_from_operators, FockVector, MomentumSet, SymmetryKind,
    SymmetryOp,
};

use super::{CheckResult, Context};

pub(super) const IDS: &[&str] = &[
    "fock.anticommutator_uc_tilde_us",
    "fock.charge_eigenvalues",
    "fock.commutator_uc_us",
    "fock.no_simultaneous_eigenvector",
    "fock.parity_combinations",
    "fock.squares",
    "fock.state_rules",
];

pub(super) fn checks(ctx: &Context) -> Result<Vec<CheckResult>> {
    let tol = ctx.tol();
    let set = MomentumSet::standard(true);
    let relabeled = MomentumSet::new(vec![-7, -3, 0, 3, 7])?;
    let us = SymmetryOp::space_inversion();
    let uc = SymmetryOp::charge_conjugation_v1();
    let uct = SymmetryOp::charge_conjugation_v2();
    let mut out = Vec::new();

    let c = commutator_report(&uc, &us, &set);
    out.push(
        CheckResult::upper("fock.commutator_uc_us", "[U^c, U^s] = 0", c.max_commutator(), 0.0)
            .with("states", c.rows.len())
            .with("max_anticommutator", c.max_anticommutator()),
    );
    let a = commutator_report(&uct, &us, &set);
    out.push(
        CheckResult::upper("fock.anticommutator_uc_tilde_us", "{Ũ^c, U^s} = 0", a.max_anticommutator(), 0.0)
            .with("states", a.rows.len())
            .with("max_commutator", a.max_commutator()),
    );

    let mut squares = Vec::new();
    let mut sq_res = 0.0f64;
    for (kind, expect) in [
        (SymmetryKind::SpaceInversion, 1.0),
        (SymmetryKind::ChargeConjugation, -1.0),
        (SymmetryKind::ChargeConjugationTilde, -1.0),
    ] {
        let op = SymmetryOp::of(kind);
        for s in [&set, &relabeled] {
            for l in s.labels() {
                let got = op.square_phase(l).unwrap_or(Complex64::new(f64::NAN, 0.0));
                sq_res = sq_res.max((got - expect).norm());
            }
        }
        squares.push((kind.name(), expect));
    }
    out.push(
        CheckResult::upper("fock.squares", "(U^s)² = +1, (U^c)² = (Ũ^c)² = -1", sq_res, tol)
            .with("expected", squares)
            .with("momentum_sets", [set.tags().to_vec(), relabeled.tags().to_vec()]),
    );

    let e = eigencombination_suite(&set, tol)?;
    let rest: Vec<(i32, f64, f64, f64)> =
        e.parity_rest_eigenvalues.iter().map(|(s, c, r)| (*s, c.re, c.im, *r)).collect();
    let rest_res = e.parity_rest_eigenvalues.iter().map(|(_, _, r)| *r).fold(0.0, f64::max);
    out.push(
        CheckResult::upper(
            "fock.parity_combinations",
            "U^s(|p,↑⟩ ± i|p,↓⟩) = ±(|-p,↑⟩ ± i|-p,↓⟩)",
            e.parity_covariance_residual.max(rest_res),
            tol,
        )
        .with("rest_eigenvalues", rest),
    );
    out.push(CheckResult::upper(
        "fock.charge_eigenvalues",
        "U^c(|p,h⟩⁺ ± i|p,h⟩⁻) = ∓i(|p,h⟩⁺ ± i|p,h⟩⁻)",
        e.charge_residual,
        tol,
    ));
    let dim = e.joint_dimension(SymmetryKind::ChargeConjugation);
    let dim_tilde = e.joint_dimension(SymmetryKind::ChargeConjugationTilde);
    let example: Option<Vec<(String, f64, f64)>> =
        e.simultaneous_example.as_ref().map(|v| v.terms().map(|(l, c)| (l.to_string(), c.re, c.im)).collect());
    out.push(
        CheckResult::upper(
            "fock.no_simultaneous_eigenvector",
            "no state is a simultaneous U^s and U^c eigenvector",
            dim as f64,
            0.0,
        )
        .with("joint_dimension_uc", dim)
        .with("joint_dimension_uc_tilde", dim_tilde)
        .with("example", example)
        .with("blocks", &e.joint),
    );

    let mut rule_res = 0.0f64;
    let mut rules = 0usize;
    for kind in SymmetryKind::ALL {
        let op = SymmetryOp::of(kind);
        for (l, image) in state_rules_from_operators(kind, &set) {
            rule_res = rule_res.max(op.apply(&FockVector::basis(l)).sub(&image).norm());
            rules += 1;
        }
    }
    out.push(
        CheckResult::upper("fock.state_rules", "operator rules imply the state rules", rule_res, 0.0)
            .require(rules == 3 * set.labels().len())
            .with("derived_rules", rules),
    );
    Ok(out)
}
