use crate::error::Result;
use crate::fieldops::{dirac_from_majorana, su2_phase_orbit, ziino_barut_check, QuaternionPhase};

use super::{rel, CheckResult, Context};

pub(super) const IDS: &[&str] = &[
    "fieldops.dirac_image_rank",
    "fieldops.dirac_images",
    "fieldops.phase_orbit",
    "fieldops.split_displayed",
    "fieldops.split_eigen",
];

/// Unit quaternions probed by the phase-orbit check.
fn quaternions() -> Vec<QuaternionPhase<f64>> {
    let (c, s) = (0.6f64, 0.8f64);
    let n = 3f64.sqrt().recip();
    vec![
        QuaternionPhase::identity(),
        QuaternionPhase::new(0.0, [1.0, 0.0, 0.0]),
        QuaternionPhase::new(0.0, [0.0, 1.0, 0.0]),
        QuaternionPhase::new(0.0, [0.0, 0.0, 1.0]),
        QuaternionPhase::new(c, [s * n, s * n, s * n]),
        QuaternionPhase::new(-0.5, [0.5, -0.5, 0.5]),
    ]
}

pub(super) fn checks(ctx: &Context) -> Result<Vec<CheckResult>> {
    let conv = ctx.conv();
    let tol = ctx.tol();
    let mut displayed = 0.0f64;
    let mut eigen = 0.0f64;
    let mut images = 0.0f64;
    let mut partner = 0.0f64;
    let mut ranks = Vec::new();
    let mut orbit = 0.0f64;
    let mut group = (0usize, true, true);
    for p in ctx.momenta {
        let scale = crate::halfspin::build_spinor_basis(p, &conv)?.u[0].max_abs();
        let s = ziino_barut_check(p, &conv)?;
        displayed = displayed.max(rel(s.displayed.max(s.reconstruction), scale));
        eigen = eigen.max(rel(s.even_eigen.max(s.odd_eigen), scale));
        let d = dirac_from_majorana(p, &conv, tol)?;
        images = images.max(rel(d.eigenspace_residual, scale * p.energy()));
        partner = partner.max(rel(d.partner_residual, scale * p.energy()));
        ranks.push((d.positive_rank, d.negative_rank));
        for q in quaternions() {
            let r = su2_phase_orbit(&q, p, &conv, tol)?;
            orbit = orbit.max(r.unitarity).max(r.quaternion_relations).max(r.k_is_minus_fourth);
            orbit = orbit.max(rel(r.double_map_square.max(r.conjugacy_residual), scale));
            group = (r.group_order, group.1 && r.group_associative, group.2 && r.group_has_central_minus_one);
        }
    }
    let rank_gap = ranks.iter().map(|&(a, b)| (2 - a.min(2)).max(2 - b.min(2))).max().unwrap_or(0);
    ranks.sort_unstable();
    ranks.dedup();
    Ok(vec![
        CheckResult::upper(
            "fieldops.split_displayed",
            "ν = ν_even + ν_odd with the closed-form coefficients",
            displayed,
            tol,
        ),
        CheckResult::upper("fieldops.split_eigen", "𝒞ν_even† = ν_even, 𝒞ν_odd† = -ν_odd", eigen, tol),
        CheckResult::upper("fieldops.dirac_images", "p̸ (1 ± p̸/m) ψ = ±m (1 ± p̸/m) ψ", images, tol)
            .with("partner_residual", partner)
            .with("positive_image", "lambda_s + rho_a")
            .with("negative_image", "lambda_a - rho_s"),
        CheckResult::upper(
            "fieldops.dirac_image_rank",
            "images span the 2-dimensional eigenspaces",
            rank_gap as f64,
            0.0,
        )
        .with("ranks", ranks),
        CheckResult::upper("fieldops.phase_orbit", "SU(2) phase orbits preserve S^c eigenstatus", orbit, tol)
            .require(group.0 == 8 && group.1 && group.2)
            .with("group_order", group.0)
            .with("quaternions", quaternions()),
    ])
}
