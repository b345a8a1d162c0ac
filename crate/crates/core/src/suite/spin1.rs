use crate::error::Result;
use crate::linalg::{ApproxCompare, CMatrix};
use crate::spin1::bmw::{bmw_canonical_gammas, on_shell_residual, to_majorana_rep};
use crate::spin1::matrices::wigner_theta;
use crate::spin1::{
    bmw_chiral_gammas, build_spin1_basis, component_identities, lambda_reality_check, majorana_rep_report, mr_spinors,
    spin1_selfconjugacy_analysis, Spin1Helicity,
};

use super::{rel, CheckResult, Context};

pub(super) const IDS: &[&str] = &[
    "spin1.antilinear_squares",
    "spin1.chiral_conjugation_eigenvectors",
    "spin1.component_identities",
    "spin1.gamma5_relation",
    "spin1.majorana_displayed",
    "spin1.majorana_gamma00",
    "spin1.majorana_real",
    "spin1.majorana_unitary",
    "spin1.no_selfconjugate_spinors",
    "spin1.on_shell",
    "spin1.reality_classes",
];

/// Tolerance for identities that are exact in the arithmetic used.
const EXACT: f64 = 1e-15;

pub(super) fn checks(ctx: &Context) -> Result<Vec<CheckResult>> {
    let conv = ctx.conv();
    let tol = ctx.tol();
    let mut out = Vec::new();

    let rep = majorana_rep_report()?;
    out.push(
        CheckResult::upper("spin1.majorana_unitary", "U U† = 1", rep.unitarity, EXACT)
            .with("adjoint_consistency", rep.adjoint_consistency)
            .with("det_modulus", rep.det_modulus),
    );
    out.push(
        CheckResult::upper("spin1.majorana_real", "U γ_{μν} U† are real matrices", rep.max_imaginary(), tol)
            .with("gamma5_real_part", rep.gamma5_real_part)
            .with("symmetry", rep.symmetry),
    );
    out.push(
        CheckResult::upper(
            "spin1.majorana_displayed",
            "γ₅ = offdiag(i, -i) and the closed-form γ_{μν}",
            rep.max_displayed(),
            tol,
        )
        .with("gamma5_displayed", rep.gamma5_displayed)
        .with("without_canonical_step", rep.chiral_direct_mismatch),
    );
    let th = wigner_theta::<f64>();
    let g00 = to_majorana_rep(&bmw_canonical_gammas::<f64>().g[0][0])?;
    out.push(CheckResult::upper(
        "spin1.majorana_gamma00",
        "γ₀₀ = offdiag(Θ, Θ)",
        g00.max_abs_diff(&CMatrix::block_offdiag(&th, &th))?,
        tol,
    ));

    let fam = bmw_chiral_gammas::<f64>();
    let mut on_shell = 0.0f64;
    let mut g5 = 0.0f64;
    let mut comp = 0.0f64;
    let mut v_long_min = f64::INFINITY;
    let mut bad_points = Vec::new();
    for p in ctx.momenta {
        let b = build_spin1_basis(p, &conv)?;
        let e2 = p.energy() * p.energy();
        for h in Spin1Helicity::ALL {
            let u = b.chiral_u(h);
            on_shell = on_shell.max(rel(on_shell_residual(&fam, p, &u)?, u.max_abs() * e2));
            let s = mr_spinors(p, &conv, h)?;
            g5 = g5.max(rel(s.gamma5_residual, s.u.max_abs()));
        }
        let c = component_identities(p, &conv)?;
        let scale = b.phi_l[0].max_abs();
        let r = rel(c.max_residual(), scale);
        comp = comp.max(r);
        v_long_min = v_long_min.min(c.v_longitudinal_norm);
        if r > tol {
            bad_points.push((p.magnitude(), p.polar(), p.azimuth(), r));
        }
    }
    out.push(CheckResult::upper("spin1.on_shell", "chiral γ_{μν} p^μ p^ν u = m² u", on_shell, tol));
    out.push(CheckResult::upper("spin1.gamma5_relation", "v = γ₅ u in the Majorana representation", g5, EXACT));
    out.push(
        CheckResult::upper("spin1.component_identities", "𝒰⁺_↑ = 𝒰⁺_↓, 𝒱⁺_↑ = -𝒱⁺_↓, 𝒰⁺_→ = 0, 𝒱⁺_→ ≠ 0", comp, tol)
            .require(v_long_min > tol)
            .with("min_v_longitudinal_norm", v_long_min)
            .with("failing_points", bad_points),
    );

    let a = spin1_selfconjugacy_analysis::<f64>(tol)?;
    out.push(
        CheckResult::upper(
            "spin1.antilinear_squares",
            "(S^c_{1/2})² = +1, (S^c_1)² = -1, (Γ⁵S^c_1)² = +1",
            a.half_square_residual.max(a.spin1_square_residual).max(a.chiral_square_residual),
            tol,
        )
        .with("half", a.half_square_residual)
        .with("spin1", a.spin1_square_residual)
        .with("chiral", a.chiral_square_residual),
    );
    let dims = a.spin1_eigen_dims;
    out.push(
        CheckResult::upper(
            "spin1.no_selfconjugate_spinors",
            "S^c_1 has no eigenvectors",
            (dims.0 + dims.1) as f64,
            0.0,
        )
        .with("eigen_dims", dims),
    );
    out.push(
        CheckResult::upper("spin1.chiral_conjugation_eigenvectors", "Γ⁵S^c_1 ξ = ±ξ", a.eigen_residual, tol)
            .require(a.plus.len() == 6 && a.minus.len() == 6)
            .with("plus", a.plus.len())
            .with("minus", a.minus.len()),
    );

    let mut mismatches = Vec::new();
    let mut minority = 0.0f64;
    for p in ctx.momenta {
        for e in lambda_reality_check(p, &conv, tol.sqrt())? {
            minority = minority.max(rel(e.minority, e.scale));
            if e.class != e.expected_class() {
                mismatches.push((e.spin, e.name.clone(), p.magnitude(), p.polar(), p.azimuth()));
            }
        }
    }
    out.push(
        CheckResult::upper(
            "spin1.reality_classes",
            "self-conjugate spinors are real, anti-self imaginary",
            minority,
            tol,
        )
        .require(mismatches.is_empty())
        .with("mismatches", mismatches),
    );
    Ok(out)
}
