use proptest::prelude::*;
use std::f64::consts::PI;

use super::*;
use crate::fock::{OperatorKind, OperatorSymbol};
use crate::halfspin::{FourMomentum, Frequency, Helicity, PhaseConvention};
use crate::linalg::{ApproxCompare, CVector};

fn conv() -> PhaseConvention<f64> {
    PhaseConvention::default()
}

fn a(dagger: bool, h: Helicity) -> OperatorSymbol {
    OperatorSymbol::new(OperatorKind::A, dagger, h)
}

#[test]
fn majorana_mode_at_rest() {
    let nu = majorana_mode(&FourMomentum::at_rest(1.0).unwrap(), &conv()).unwrap();
    assert_eq!(nu.len(), 4);
    let c = nu.coefficient(a(false, Helicity::Up), Frequency::Positive).unwrap();
    assert!(
        c.approx_eq(&CVector::from_pairs(&[(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (0.0, 0.0)]), 1e-15).unwrap().within
    );
}

#[test]
fn conjugate_expansion_is_involution() {
    let p = FourMomentum::new(1.0, 1.4, 1.1, 2.3).unwrap();
    let nu = majorana_mode(&p, &conv()).unwrap();
    let c1 = charge_conjugate_expansion(&nu, &conv()).unwrap();
    let c2 = charge_conjugate_expansion(&c1, &conv()).unwrap();
    assert!(c2.max_abs_diff(&nu) <= 1e-12);
    let b = crate::halfspin::build_spinor_basis(&p, &conv()).unwrap();
    let img = c1.coefficient(a(false, Helicity::Up), Frequency::Positive).unwrap();
    assert!(img.approx_eq(&-&b.lambda_a[0], 1e-12).unwrap().within);
    assert!(charge_conjugate_expansion(&ModeExpansion::<f64>::zero(), &conv()).unwrap().is_empty());
}

#[test]
fn duplicate_terms_rejected() {
    let t = Term { spinor: CVector::<f64>::zeros(4), symbol: a(false, Helicity::Up), frequency: Frequency::Positive };
    assert!(ModeExpansion::new(vec![t.clone(), t.clone()]).is_err());
    let bad = Term { spinor: CVector::<f64>::zeros(3), ..t };
    assert!(ModeExpansion::new(vec![bad]).is_err());
}

#[test]
fn split_matches_closed_forms_at_rest() {
    let split = ziino_barut_split(&FourMomentum::at_rest(1.0).unwrap(), &conv()).unwrap();
    let even = split.even.coefficient(a(false, Helicity::Up), Frequency::Positive).unwrap();
    let odd = split.odd.coefficient(a(false, Helicity::Up), Frequency::Positive).unwrap();
    assert!(
        even.approx_eq(&CVector::from_pairs(&[(0.0, 0.0), (0.0, 1.0), (0.0, 0.0), (0.0, 0.0)]), 1e-15).unwrap().within
    );
    assert!(odd.approx_eq(&CVector::from_real(&[0.0, 0.0, 1.0, 0.0]), 1e-15).unwrap().within);
}

#[test]
fn split_checks_on_boosted_momentum() {
    let p = FourMomentum::new(1.0, 2.5, 2.5, 5.0).unwrap();
    let chk = ziino_barut_check(&p, &conv()).unwrap();
    assert!(chk.max_residual() <= 1e-12, "{chk:?}");
}

#[test]
fn dirac_images() {
    let p = FourMomentum::new(1.0, 1.0, 0.4, 0.9).unwrap();
    let d = dirac_from_majorana(&p, &conv(), 1e-10).unwrap();
    assert!(d.partner_residual <= 1e-12 && d.eigenspace_residual <= 1e-12);
    // both helicities project onto multiples of u↑ + i u↓ (and v↑ + i v↓)
    assert_eq!((d.positive_rank, d.negative_rank), (1, 1));

    let heavy = FourMomentum::new(1e6, 1.0, 0.4, 0.9).unwrap();
    let d = dirac_from_majorana(&heavy, &conv(), 1e-10).unwrap();
    let b = crate::halfspin::build_spinor_basis(&heavy, &conv()).unwrap();
    let g0l = crate::halfspin::gamma::gamma0::<f64>().mul_vec(&b.lambda_s[0]);
    let limit = &b.lambda_s[0] + &g0l;
    let rel = d.positive_images[0].max_abs_diff(&limit).unwrap() / b.lambda_s[0].max_abs();
    assert!(rel < 1e-5);
}

#[test]
fn quaternion_orbit() {
    let p = FourMomentum::new(1.0, 1.0, 1.1, 2.3).unwrap();
    let id = su2_phase_orbit(&QuaternionPhase::identity(), &p, &conv(), 1e-12).unwrap();
    assert_eq!(id.unitarity, 0.0);
    assert!(
        quaternion_matrix(&QuaternionPhase::<f64>::identity())
            .approx_eq(&crate::linalg::CMatrix::identity(4), 0.0)
            .unwrap()
            .within
    );
    assert_eq!(id.quaternion_relations, 0.0);
    assert_eq!(id.k_is_minus_fourth, 0.0);
    assert!(id.double_map_square <= 1e-15);
    assert_eq!(id.group_order, 8);
    let bad = QuaternionPhase::new(1.0, [1.0, 0.0, 0.0]);
    assert!(matches!(su2_phase_orbit(&bad, &p, &conv(), 1e-12), Err(crate::Error::NonUnitQuaternion(_))));
    assert!((bad.norm() - 2f64.sqrt()).abs() < 1e-15);
}

proptest! {
    #[test]
    fn orbit_preserves_conjugacy(
        theta in 0.0f64..PI, phi in 0.0f64..(2.0 * PI), psi in 0.0f64..(2.0 * PI),
        k in 0.0f64..3.0, pt in 0.0f64..PI, pf in 0.0f64..(2.0 * PI),
    ) {
        let n = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
        let q = QuaternionPhase::new(psi.cos(), n.map(|x| x * psi.sin()));
        let p = FourMomentum::new(1.0, k, pt, pf).unwrap();
        let r = su2_phase_orbit(&q, &p, &conv(), 1e-12).unwrap();
        prop_assert!(r.unitarity <= 1e-14);
        prop_assert!(r.conjugacy_residual <= 1e-12 * p.energy().max(1.0));
    }

    #[test]
    fn split_random(k in 0.0f64..3.0, pt in 0.0f64..PI, pf in 0.0f64..(2.0 * PI), t1 in -3.0f64..3.0) {
        let c = PhaseConvention::with_phases(t1, 0.3);
        let p = FourMomentum::new(1.0, k, pt, pf).unwrap();
        prop_assert!(ziino_barut_check(&p, &c).unwrap().max_residual() <= 1e-12 * p.energy().max(1.0));
    }
}
