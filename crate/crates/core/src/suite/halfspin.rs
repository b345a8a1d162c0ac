use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::error::Result;
use crate::halfspin::fgm::fgm_residuals;
use crate::halfspin::gamma::bar_product;
use crate::halfspin::identities::*;
use crate::halfspin::symmetry::{conjugacy_residual, xi_boost_conjugation, xi_group, xi_transform_quadruple};
use crate::halfspin::{
    build_spinor_basis, charge_conjugation_op, gauge_transform, GaugeKind, Helicity, PhaseConvention, RestBasis,
};

use super::{rel, CheckResult, Context};

pub(super) const IDS: &[&str] = &[
    "halfspin.biorthonormal_cross",
    "halfspin.biorthonormal_diagonal",
    "halfspin.charge_conjugation_eigen",
    "halfspin.chiral_helicity_values",
    "halfspin.connection_matrix",
    "halfspin.dirac_helicity_eigen",
    "halfspin.dynamical_equations",
    "halfspin.dynamical_sign_selftest",
    "halfspin.fgm_free_reduction",
    "halfspin.gauge_invariance",
    "halfspin.lambda_not_helicity_eigen",
    "halfspin.lambda_not_parity_eigen",
    "halfspin.massless_vanishing",
    "halfspin.xi_aliases",
    "halfspin.xi_boost_conjugation",
    "halfspin.xi_conjugacy",
    "halfspin.xi_group",
];

/// Phase pairs for the cross-product law; the second sums to `π/2`.
pub(super) const PHASE_PAIRS: [(f64, f64); 8] =
    [(0.0, 0.0), (FRAC_PI_4, FRAC_PI_4), (0.3, 1.2), (1.0, 2.0), (-0.7, 0.4), (PI, 0.5), (2.0, -1.1), (FRAC_PI_2, PI)];

pub(super) fn checks(ctx: &Context) -> Result<Vec<CheckResult>> {
    let conv = ctx.conv();
    let tol = ctx.tol();
    let mut out = Vec::new();

    // conjugacy, helicity, dynamics, connection over the grid
    let sc = charge_conjugation_op(&conv);
    let mut cc = 0.0f64;
    let mut spinors = 0usize;
    let mut min_h = f64::INFINITY;
    let mut min_parity = f64::INFINITY;
    let mut dirac_h = 0.0f64;
    let mut dyn_res = 0.0f64;
    let mut selftest = 0.0f64;
    let mut conn = 0.0f64;
    let mut conn_raw = 0.0f64;
    let mut phase_drift = 0.0f64;
    let mut phases_first = None;
    let mut gauge = 0.0f64;
    let mut xi_alias = 0.0f64;
    let mut xi_conj = 0.0f64;
    let mut xi_signs = Vec::new();
    let mut xi_boost = 0.0f64;
    let mut fgm = 0.0f64;
    for (idx, p) in ctx.momenta.iter().enumerate() {
        let b = build_spinor_basis(p, &conv)?;
        let scale = b.u[0].max_abs();
        for (name, c, psi) in b.type_two() {
            cc = cc.max(rel(conjugacy_residual(&sc, psi, c)?, scale));
            spinors += 1;
            let kind = if name.starts_with("lambda") { GaugeKind::Lambda } else { GaugeKind::Rho };
            for alpha in [0.3, 1.0, 2.2] {
                let g = gauge_transform(alpha, psi, kind)?;
                gauge = gauge.max(rel(conjugacy_residual(&sc, &g, c)?, scale));
            }
        }
        for psi in b.dirac_stack() {
            dirac_h = dirac_h.max(helicity_fit(p, psi)?.1);
        }
        if !p.is_rest() {
            for l in b.lambda_stack() {
                min_h = min_h.min(helicity_fit(p, l)?.1);
            }
            for h in Helicity::ALL {
                min_parity = min_parity.min(parity_fit(p, &conv, h)?.1);
            }
        }
        let r = dynamical_residuals(p, &conv, FrequencyAssignment::default())?;
        dyn_res = dyn_res.max(rel(r.iter().flatten().fold(0.0, |a, &x| a.max(x)), scale));
        let flipped = dynamical_residuals_signed(p, &conv, FrequencyAssignment::default(), [-1.0, -1.0, -1.0, 1.0])?;
        for h in Helicity::ALL {
            let expect = 2.0 * p.mass() * b.rho_s[h.index()].norm();
            selftest = selftest.max(rel((flipped[h.index()][2] - expect).abs(), expect));
        }
        let c = connection_matrix_check(p, &conv)?;
        conn = conn.max(rel(c.aligned_residual, scale));
        conn_raw = conn_raw.max(rel(c.raw_residual, scale));
        match &phases_first {
            None => phases_first = Some(c.phases),
            Some(first) => {
                for (now, then) in c.phases.iter().zip(first) {
                    phase_drift = phase_drift.max((now - then).norm());
                }
            }
        }
        for h in Helicity::ALL {
            for img in xi_transform_quadruple(p, &conv, h)? {
                xi_alias = xi_alias.max(rel(img.alias_residual, scale));
                xi_conj = xi_conj.max(rel(img.conjugacy_residual, scale));
                if idx == 0 && h == Helicity::Up {
                    xi_signs.push((img.map.name(), img.conjugacy));
                }
            }
        }
        xi_boost = xi_boost.max(xi_boost_conjugation(p)?);
        let f0 = [[0.0; 4]; 4];
        for h in Helicity::ALL {
            let k = h.index();
            let (r1, r2) = fgm_residuals(&b.phi_r[k], &b.phi_l[k], p.contravariant(), p.mass(), &f0, 0.0)?;
            fgm = fgm.max(rel(r1.max(r2), scale * p.energy() * p.energy()));
        }
    }
    let points = ctx.momenta.len();
    out.push(
        CheckResult::upper(
            "halfspin.charge_conjugation_eigen",
            "S^c λ^{S,A} = ±λ^{S,A}, S^c ρ^{S,A} = ±ρ^{S,A}",
            cc,
            tol,
        )
        .with("momenta", points)
        .with("spinors", spinors),
    );
    out.push(
        CheckResult::lower("halfspin.lambda_not_helicity_eigen", "λ are not helicity eigenspinors", min_h, 0.1)
            .with("min_relative_residual", min_h),
    );
    out.push(
        CheckResult::lower("halfspin.lambda_not_parity_eigen", "λ are not parity eigenspinors", min_parity, 0.1)
            .with("min_relative_residual", min_parity),
    );
    out.push(CheckResult::upper("halfspin.dirac_helicity_eigen", "u, v are helicity eigenspinors", dirac_h, tol));
    out.push(
        CheckResult::upper(
            "halfspin.dynamical_equations",
            "first-order equations coupling λ^{S,A} and ρ^{A,S}",
            dyn_res,
            tol,
        )
        .with("frequency", "lambda_s,rho_a positive; lambda_a,rho_s negative")
        .with("mass_term_signs", MASS_TERM_SIGNS),
    );
    out.push(CheckResult::upper(
        "halfspin.dynamical_sign_selftest",
        "flipped mass sign in the λ^A equation gives 2m|ρ^S|",
        selftest,
        tol,
    ));
    let phases: Vec<(f64, f64)> = phases_first.unwrap_or_default().iter().map(|c| (c.re, c.im)).collect();
    out.push(
        CheckResult::upper(
            "halfspin.connection_matrix",
            "λ = M (u, v) with M the 4x4 connection matrix",
            conn.max(phase_drift),
            tol,
        )
        .with("aligned_residual", conn)
        .with("phase_drift", phase_drift)
        .with("raw_residual", conn_raw)
        .with("row_phases", phases),
    );
    out.push(
        CheckResult::upper("halfspin.gauge_invariance", "γ⁵ gauge rotations preserve S^c eigenstatus", gauge, tol)
            .with("angles", [0.3, 1.0, 2.2]),
    );
    out.push(CheckResult::upper("halfspin.xi_aliases", "Ξ-images equal the conjugate aliases", xi_alias, tol));
    out.push(
        CheckResult::upper("halfspin.xi_conjugacy", "Ξ-images are S^c eigenspinors", xi_conj, tol)
            .with("signs", xi_signs),
    );
    out.push(CheckResult::upper("halfspin.xi_boost_conjugation", "Ξ Λ Ξ⁻¹ = Λ*", xi_boost, tol));
    out.push(CheckResult::upper(
        "halfspin.fgm_free_reduction",
        "second-order equation at zero field reduces to p² = m²",
        fgm,
        tol,
    ));

    let group = xi_group::<f64>(tol, 64);
    let closed = group.order() == 8 && group.associative && group.has_central_minus_one;
    let squares: Vec<(f64, f64)> = group.unit_squares.iter().map(|c| (c.re, c.im)).collect();
    out.push(
        CheckResult::upper(
            "halfspin.xi_group",
            "Ξ-map units close into an order-8 quaternion-like group",
            if closed { 0.0 } else { 1.0 },
            0.0,
        )
        .with("order", group.order())
        .with("associative", group.associative)
        .with("central_minus_one", group.has_central_minus_one)
        .with("unit_squares", squares)
        .with("table", &group.table),
    );

    out.push(chiral_helicity_values(ctx)?);
    out.extend(biorthonormality(ctx)?);
    out.push(massless(ctx)?);
    Ok(out)
}

/// The eigenvalue normalization of `η` is left open, so the fitted values
/// on `λ` at the rest frame are only recorded.
fn chiral_helicity_values(ctx: &Context) -> Result<CheckResult> {
    let conv = ctx.conv();
    let p = ctx.momenta.iter().find(|p| p.is_rest()).unwrap_or(&ctx.momenta[0]);
    let b = build_spinor_basis(p, &conv)?;
    let mut values = Vec::new();
    for (name, l) in ["lambda_s_up", "lambda_s_down", "lambda_a_up", "lambda_a_down"].iter().zip(b.lambda_stack()) {
        let (c, r) = chiral_helicity_fit(p, l)?;
        values.push((*name, c.re, c.im, r));
    }
    Ok(CheckResult::reported("halfspin.chiral_helicity_values", "chiral helicity η = -γ⁵h on λ").with("fits", values))
}

fn biorthonormality(ctx: &Context) -> Result<Vec<CheckResult>> {
    let tol = ctx.tol();
    let mut cross = 0.0f64;
    let mut diag = 0.0f64;
    let mut default_basis = Vec::new();
    for &(t1, t2) in &PHASE_PAIRS {
        let conv =
            PhaseConvention { theta1: t1, theta2: t2, ..ctx.conv() }.with_basis(RestBasis::HelicityReflectedDown);
        let plain = conv.with_basis(RestBasis::Helicity);
        for p in ctx.momenta {
            let n2 = conv.normalization(p.mass()).powi(2);
            let g = biorthonormality_gram(p, &conv)?;
            let expect = biorthonormal_cross_product(&conv, p.mass());
            cross = cross.max(rel((g[(0, 1)] - expect).norm(), n2));
            for k in 0..4 {
                diag = diag.max(rel(g[(k, k)].norm(), n2));
            }
            let g2 = biorthonormality_gram(p, &plain)?;
            for k in 0..4 {
                diag = diag.max(rel(g2[(k, k)].norm(), n2));
            }
        }
        let p = &ctx.momenta[0];
        let b = build_spinor_basis(p, &plain)?;
        let v = bar_product(&b.lambda_s[0], &b.lambda_s[1]);
        default_basis.push((t1, t2, v.re, v.im));
    }
    Ok(vec![
        CheckResult::upper("halfspin.biorthonormal_cross", "λ̄^S_↑ λ^S_↓ = 2iN² cos(θ₁+θ₂)", cross, tol)
            .with("phase_pairs", PHASE_PAIRS)
            .with("rest_basis", RestBasis::HelicityReflectedDown)
            .with("helicity_basis_values", default_basis),
        CheckResult::upper("halfspin.biorthonormal_diagonal", "λ̄_h λ_h = 0", diag, tol),
    ])
}

fn massless(ctx: &Context) -> Result<CheckResult> {
    let conv = ctx.conv().with_basis(RestBasis::Helicity);
    let masses: Vec<f64> = (0..=8).map(|k| 10f64.powi(-k)).collect();
    let scan = massless_scan(1.0, 1.1, 2.3, &masses, &conv)?;
    let last = scan.rows.last().map(|r| r.ratio_s.max(r.ratio_a)).unwrap_or(f64::NAN);
    let ratios: Vec<(f64, f64, f64)> = scan.rows.iter().map(|r| (r.mass, r.ratio_s, r.ratio_a)).collect();
    Ok(CheckResult::upper("halfspin.massless_vanishing", "|λ_↑| / |λ_↓| → 0 as m/|p| → 0", last, 1e-4)
        .require(scan.monotone)
        .with("monotone", scan.monotone)
        .with("rows", ratios))
}
