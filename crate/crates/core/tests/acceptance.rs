//! Acceptance criteria over the default configuration. Prints one
//! PASS/FAIL line per criterion and exits nonzero when any fails.

use std::process::ExitCode;

use selfconj::suite::{run, Bound, CheckResult, Report, Status, SuiteConfig};

type Criterion = (&'static str, fn(&Report) -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn check<'a>(r: &'a Report, id: &str) -> &'a CheckResult {
    r.get(id).unwrap_or_else(|| panic!("check {id} missing from the default report"))
}

/// Every listed check passes, upper bounds at no looser than `max_tol`.
fn all_pass(r: &Report, ids: &[&str], max_tol: f64) -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for id in ids {
        let c = check(r, id);
        let lower = c.bound == Bound::Lower;
        let pass = c.status == Status::Pass && (lower || c.tolerance <= max_tol);
        ok &= pass;
        let cmp = if lower { ">" } else { "<=" };
        parts.push(format!("{id} {:.1e} {cmp} {:.0e}{}", c.residual, c.tolerance, if pass { "" } else { " FAILED" }));
    }
    Verdict { ok, detail: parts.join("; ") }
}

fn and(mut v: Verdict, ok: bool, note: &str) -> Verdict {
    v.ok &= ok;
    v.detail.push_str(&format!("; {note}: {}", if ok { "yes" } else { "NO" }));
    v
}

fn measured_u64(c: &CheckResult, key: &str) -> u64 {
    c.measured.get(key).and_then(|v| v.as_u64()).unwrap_or(0)
}

fn ac1(r: &Report) -> Verdict {
    let c = check(r, "halfspin.charge_conjugation_eigen");
    let points = measured_u64(c, "momenta");
    let v = all_pass(r, &["halfspin.charge_conjugation_eigen"], 1e-12);
    let v = and(v, points >= 18, &format!("{points} momenta >= 18"));
    and(v, measured_u64(c, "spinors") == 8 * points, "all 8 spinors at each momentum")
}

fn ac2(r: &Report) -> Verdict {
    all_pass(
        r,
        &["halfspin.lambda_not_helicity_eigen", "halfspin.lambda_not_parity_eigen", "halfspin.dirac_helicity_eigen"],
        1e-12,
    )
}

fn ac3(r: &Report) -> Verdict {
    all_pass(r, &["halfspin.dynamical_equations", "halfspin.dynamical_sign_selftest"], 1e-12)
}

fn ac4(r: &Report) -> Verdict {
    let c = check(r, "halfspin.connection_matrix");
    let phases = c.measured.get("row_phases").and_then(|v| v.as_array()).map_or(0, Vec::len);
    and(all_pass(r, &["halfspin.connection_matrix"], 1e-12), phases == 4, "phase diagonal emitted")
}

fn ac5(r: &Report) -> Verdict {
    let c = check(r, "halfspin.biorthonormal_cross");
    let pairs: Vec<(f64, f64)> =
        c.measured.get("phase_pairs").and_then(|v| serde_json::from_value(v.clone()).ok()).unwrap_or_default();
    let has_zero = pairs.iter().any(|(a, b)| (a + b).cos().abs() < 1e-12);
    let v = all_pass(r, &["halfspin.biorthonormal_cross", "halfspin.biorthonormal_diagonal"], 1e-12);
    let v = and(v, pairs.len() == 8, &format!("{} phase pairs", pairs.len()));
    and(v, has_zero, "includes cos(θ₁+θ₂) = 0")
}

fn ac6(r: &Report) -> Verdict {
    let c = check(r, "halfspin.massless_vanishing");
    let last_mass = c
        .measured
        .get("rows")
        .and_then(|v| v.as_array())
        .and_then(|rows| rows.last())
        .and_then(|row| row[0].as_f64())
        .unwrap_or(1.0);
    let v = all_pass(r, &["halfspin.massless_vanishing"], 1e-4);
    and(v, (last_mass - 1e-8).abs() < 1e-20, "scan reaches m/|p| = 1e-8")
}

fn ac7(r: &Report) -> Verdict {
    let v = all_pass(
        r,
        &[
            "halfspin.gauge_invariance",
            "halfspin.xi_conjugacy",
            "halfspin.xi_aliases",
            "halfspin.xi_group",
            "fieldops.phase_orbit",
        ],
        1e-12,
    );
    let exact = ["halfspin.gauge_invariance", "halfspin.xi_conjugacy"].iter().all(|id| check(r, id).residual == 0.0);
    let g = check(r, "halfspin.xi_group");
    let order8 = measured_u64(g, "order") == 8;
    let v = and(v, exact, "eigenstatus preserved exactly");
    and(v, order8, "group order 8 with central -1")
}

fn ac8(r: &Report) -> Verdict {
    let v = all_pass(r, &["spin1.majorana_unitary"], 1e-15);
    let w = all_pass(r, &["spin1.majorana_real", "spin1.majorana_displayed", "spin1.majorana_gamma00"], 1e-12);
    let g5 = check(r, "spin1.majorana_displayed").measured.get("gamma5_displayed").and_then(|v| v.as_f64());
    let v = Verdict { ok: v.ok && w.ok, detail: format!("{}; {}", v.detail, w.detail) };
    and(v, g5 == Some(0.0), "γ₅ matches offdiag(i, -i) exactly")
}

fn ac9(r: &Report) -> Verdict {
    let v = all_pass(r, &["spin1.gamma5_relation"], 1e-15);
    let w = all_pass(r, &["spin1.component_identities"], 1e-12);
    Verdict { ok: v.ok && w.ok, detail: format!("{}; {}", v.detail, w.detail) }
}

fn ac10(r: &Report) -> Verdict {
    all_pass(
        r,
        &["spin1.antilinear_squares", "spin1.no_selfconjugate_spinors", "spin1.chiral_conjugation_eigenvectors"],
        1e-12,
    )
}

fn ac11(r: &Report) -> Verdict {
    all_pass(
        r,
        &[
            "fock.commutator_uc_us",
            "fock.anticommutator_uc_tilde_us",
            "fock.charge_eigenvalues",
            "fock.no_simultaneous_eigenvector",
            "fock.state_rules",
        ],
        1e-12,
    )
}

fn ac12(r: &Report) -> Verdict {
    all_pass(r, &["fieldops.split_displayed", "fieldops.split_eigen", "fieldops.dirac_images"], 1e-12)
}

fn ac13(first: &Report) -> Verdict {
    let again = run(&SuiteConfig::default()).expect("default config runs");
    let (a, b) = (first.to_json_lines(), again.to_json_lines());
    Verdict { ok: a.as_bytes() == b.as_bytes(), detail: format!("{} bytes per run", a.len()) }
}

fn main() -> ExitCode {
    let report = run(&SuiteConfig::default()).expect("default config runs");
    let criteria: [Criterion; 13] = [
        ("charge-conjugation eigenstructure", ac1),
        ("non-eigenspinor claims", ac2),
        ("dynamical equations", ac3),
        ("connection matrix", ac4),
        ("bi-orthonormality", ac5),
        ("massless limit", ac6),
        ("gauge, Ξ and SU(2) structure", ac7),
        ("spin-1 Majorana representation", ac8),
        ("spin-1 Majorana spinor identities", ac9),
        ("antilinear dichotomy", ac10),
        ("Fock algebra", ac11),
        ("field-operator relations", ac12),
        ("determinism", ac13),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let v = f(&report);
        if !v.ok {
            failed += 1;
        }
        println!("AC{:<2} {} {name}: {}", k + 1, if v.ok { "PASS" } else { "FAIL" }, v.detail);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
