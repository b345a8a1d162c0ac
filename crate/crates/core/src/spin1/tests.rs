use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex;
use proptest::prelude::*;

use super::bmw::{j_ij, on_shell_residual};
use super::conjugacy::*;
use super::matrices::*;
use super::*;
use crate::halfspin::{FourMomentum, PhaseConvention, RestBasis};
use crate::linalg::{levi_civita, ApproxCompare, CMatrix, CVector, RealityClass};

type M = CMatrix<f64>;
const TOL: f64 = 1e-12;

fn conv() -> PhaseConvention<f64> {
    PhaseConvention::default()
}

fn same(a: &M, b: &M, tol: f64) -> bool {
    a.approx_eq(b, tol).unwrap().within
}

#[test]
fn angular_momentum_algebra() {
    let j = j_matrices::<f64>();
    let i = Complex::new(0.0, 1.0);
    for a in 0..3 {
        for b in 0..3 {
            let comm = &(&j[a] * &j[b]) - &(&j[b] * &j[a]);
            let expect = (0..3).fold(M::zeros(3, 3), |acc, c| &acc + &j[c].scale(i * levi_civita(a, b, c) as f64));
            assert!(same(&comm, &expect, 1e-15));
        }
    }
    let casimir = j.iter().fold(M::zeros(3, 3), |acc, x| &acc + &(x * x));
    assert!(same(&casimir, &M::identity(3).scale_real(2.0), 1e-15));
}

#[test]
fn wigner_theta_properties() {
    let th = wigner_theta::<f64>();
    assert_eq!(th.mul_vec(&CVector::from_real(&[0.0, 1.0, 0.0])), CVector::from_real(&[0.0, -1.0, 0.0]));
    assert!(same(&(&th * &th), &M::identity(3), 0.0));
    assert_eq!(th.transpose(), th);
    let inv = th.inverse().unwrap();
    for jm in j_matrices::<f64>() {
        assert!(same(&(&(&th * &jm) * &inv), &-&jm.conj(), 1e-15));
    }
}

#[test]
fn majorana_unitary_is_unitary() {
    let (u, ud) = majorana_unitary::<f64>();
    assert!(same(&(&u * &ud), &M::identity(6), 1e-15));
    assert!(same(&ud, &u.adjoint(), 0.0));
    assert!((u.det().unwrap().norm() - 1.0).abs() < 1e-14);
    assert!(same(&(&u * &ud).sub_block(0, 0, 3, 3), &M::identity(3), 1e-15));
}

#[test]
fn spin1_rest_spinors_are_helicity_eigenstates() {
    for (t, f) in [(0.0f64, 0.0f64), (FRAC_PI_2, 0.0), (1.1, 2.3), (2.5, 5.0)] {
        let n = [t.sin() * f.cos(), t.sin() * f.sin(), t.cos()];
        let k = j_matrices::<f64>().iter().zip(n).fold(M::zeros(3, 3), |acc, (j, x)| &acc + &j.scale_real(x));
        for h in Spin1Helicity::ALL {
            let chi = spin1_rest_spinor(t, f, h, RestBasis::Helicity);
            assert!((chi.norm() - 1.0).abs() < 1e-14);
            assert!(k.mul_vec(&chi).approx_eq(&chi.scale_real(h.value() as f64), 1e-14).unwrap().within);
        }
    }
}

#[test]
fn chiral_family_is_on_shell() {
    let fam = bmw_chiral_gammas::<f64>();
    let rest = FourMomentum::at_rest(1.0).unwrap();
    let b = build_spin1_basis(&rest, &conv()).unwrap();
    assert!(on_shell_residual(&fam, &rest, &b.chiral_u(Spin1Helicity::Up)).unwrap() <= TOL);
    for (mu, nu) in GammaFamily::<f64>::pairs() {
        assert_eq!(fam.g[mu][nu], fam.g[nu][mu]);
    }
    for p in [FourMomentum::new(1.0, 1.0, 0.0, 0.0).unwrap(), FourMomentum::new(1.3, 2.1, 1.1, 2.3).unwrap()] {
        let b = build_spin1_basis(&p, &conv()).unwrap();
        for h in Spin1Helicity::ALL {
            assert!(on_shell_residual(&fam, &p, &b.chiral_u(h)).unwrap() <= 1e-10);
        }
    }
}

#[test]
fn canonical_family_maps_to_real_matrices() {
    let rep = majorana_rep_report().unwrap();
    assert!(rep.unitarity <= 1e-15);
    assert!(rep.max_imaginary() <= TOL);
    assert!(rep.max_displayed() <= TOL);
    assert!(rep.gamma5_real_part <= TOL);
    assert!(rep.symmetry == 0.0);
    assert!(rep.chiral_direct_mismatch > 0.5);
}

#[test]
fn to_majorana_rep_examples() {
    let one = M::identity(3);
    let th = wigner_theta::<f64>();
    let i = Complex::new(0.0, 1.0);
    assert!(same(&to_majorana_rep(&M::identity(6)).unwrap(), &M::identity(6), 1e-15));
    // canonical γ₅ and γ₀₀ are the W-images of the chiral ones
    let g5_canon = CMatrix::block_offdiag(&one, &one);
    let g00_canon = CMatrix::block_diag(&one, &-&one);
    let g5_mr = CMatrix::block_offdiag(&one.scale(i), &one.scale(-i));
    assert!(same(&to_majorana_rep(&g5_canon).unwrap(), &g5_mr, TOL));
    assert!(same(&to_majorana_rep(&g00_canon).unwrap(), &CMatrix::block_offdiag(&th, &th), TOL));
    assert!(to_majorana_rep(&M::identity(4)).is_err());
}

#[test]
fn displayed_gij_uses_anticommutator_minus_delta() {
    let t = chiral_to_majorana::<f64>();
    let fam = bmw_chiral_gammas::<f64>().conjugated_by(&t);
    let shown = displayed_majorana_gammas::<f64>();
    for a in 1..4 {
        for b in 1..4 {
            assert!(same(&fam.g[a][b], &shown.g[a][b], TOL));
        }
    }
    assert!(same(
        &j_ij::<f64>(0, 0),
        &(&(&j_matrices::<f64>()[0] * &j_matrices::<f64>()[0]).scale_real(2.0) - &M::identity(3)),
        0.0
    ));
}

#[test]
fn gamma5_relation_for_mr_spinors() {
    for p in [FourMomentum::new(1.0, 1.0, 0.0, 0.0).unwrap(), FourMomentum::new(1.0, 2.5, 1.1, 2.3).unwrap()] {
        for h in Spin1Helicity::ALL {
            let s = mr_spinors(&p, &conv(), h).unwrap();
            assert!(s.gamma5_residual <= 1e-15);
        }
    }
}

#[test]
fn component_identities_in_xz_plane() {
    for (k, t, f) in [(1.0, 0.0, 0.0), (0.3, FRAC_PI_2, 0.0), (2.5, 1.1, PI)] {
        let p = FourMomentum::new(1.0, k, t, f).unwrap();
        let c = component_identities(&p, &conv()).unwrap();
        assert!(c.max_residual() <= TOL, "{c:?}");
        assert!(c.v_longitudinal_norm > 0.1);
    }
}

#[test]
fn component_identities_fail_off_plane() {
    let p = FourMomentum::new(1.0, 1.0, FRAC_PI_2, FRAC_PI_2).unwrap();
    let c = component_identities(&p, &conv()).unwrap();
    assert!(c.max_residual() > 0.1);
}

#[test]
fn antilinear_square_dichotomy() {
    let a = spin1_selfconjugacy_analysis::<f64>(TOL).unwrap();
    assert_eq!(a.half_square_residual, 0.0);
    assert_eq!(a.spin1_square_residual, 0.0);
    assert_eq!(a.chiral_square_residual, 0.0);
    assert_eq!(a.spin1_eigen_dims, (0, 0));
    assert_eq!((a.plus.len(), a.minus.len()), (6, 6));
    assert!(a.eigen_residual <= TOL);
}

#[test]
fn reality_classes_match_conjugacy() {
    for p in [FourMomentum::at_rest(1.0).unwrap(), FourMomentum::new(1.0, 2.5, 1.1, 2.3).unwrap()] {
        for e in lambda_reality_check(&p, &conv(), 1e-10).unwrap() {
            assert_eq!(e.class, e.expected_class(), "{e:?}");
            assert!(e.minority <= 1e-10);
        }
    }
    assert_eq!(RealityClass::of(&CVector::<f64>::zeros(6), TOL).0, RealityClass::Zero);
}

fn momentum() -> impl Strategy<Value = FourMomentum<f64>> {
    (0.2f64..3.0, 0.0f64..3.0, 0.0f64..PI, 0.0f64..(2.0 * PI))
        .prop_map(|(m, k, t, f)| FourMomentum::new(m, k, t, f).unwrap())
}

proptest! {
    #[test]
    fn on_shell_for_random_momenta(p in momentum()) {
        let fam = bmw_chiral_gammas::<f64>();
        let b = build_spin1_basis(&p, &conv()).unwrap();
        for h in Spin1Helicity::ALL {
            let u = b.chiral_u(h);
            let scale = u.max_abs() * p.energy() * p.energy();
            prop_assert!(on_shell_residual(&fam, &p, &u).unwrap() <= 1e-12 * scale.max(1.0));
        }
    }

    #[test]
    fn gamma5_relation_random(p in momentum()) {
        for h in Spin1Helicity::ALL {
            prop_assert!(mr_spinors(&p, &conv(), h).unwrap().gamma5_residual <= 1e-15 * p.energy().max(1.0));
        }
    }
}
