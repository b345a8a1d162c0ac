use num_complex::Complex64;

use super::*;
use crate::halfspin::Helicity::{Down, Up};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn ket(p: i32, h: crate::halfspin::Helicity, b: Branch) -> FockVector {
    FockVector::basis(ModeLabel::new(p, h, b))
}

#[test]
fn space_inversion_table() {
    let us = SymmetryOp::space_inversion();
    assert_eq!(us.apply(&ket(1, Up, Branch::Particle)), ket(-1, Down, Branch::Particle).scale(I));
    assert_eq!(us.apply(&ket(1, Down, Branch::Antiparticle)), ket(-1, Up, Branch::Antiparticle).scale(-I));
    let twice = us.apply(&us.apply(&ket(1, Up, Branch::Particle)));
    assert_eq!(twice, ket(1, Up, Branch::Particle));
}

#[test]
fn charge_conjugation_tables() {
    let uc = SymmetryOp::charge_conjugation_v1();
    assert_eq!(uc.apply(&ket(1, Up, Branch::Particle)), ket(1, Up, Branch::Antiparticle));
    assert_eq!(uc.apply(&ket(1, Down, Branch::Antiparticle)), ket(1, Down, Branch::Particle).scale(-ONE));
    let ut = SymmetryOp::charge_conjugation_v2();
    assert_eq!(ut.apply(&ket(1, Up, Branch::Particle)), ket(1, Down, Branch::Antiparticle).scale(-ONE));
    assert_eq!(ut.apply(&ket(1, Up, Branch::Antiparticle)), ket(1, Down, Branch::Particle));
    for l in MomentumSet::standard(true).labels() {
        assert_eq!(uc.square_phase(l), Some(-ONE));
        assert_eq!(ut.square_phase(l), Some(-ONE));
        assert_eq!(SymmetryOp::space_inversion().square_phase(l), Some(ONE));
    }
}

#[test]
fn commutation_and_anticommutation() {
    let set = MomentumSet::standard(true);
    let us = SymmetryOp::space_inversion();
    let rep = commutator_report(&SymmetryOp::charge_conjugation_v1(), &us, &set);
    assert_eq!(rep.max_commutator(), 0.0);
    let rep = commutator_report(&SymmetryOp::charge_conjugation_v2(), &us, &set);
    assert_eq!(rep.max_anticommutator(), 0.0);
    assert_eq!(commutator_report(&us, &us, &set).max_commutator(), 0.0);

    let uc = SymmetryOp::charge_conjugation_v1();
    let ut = SymmetryOp::charge_conjugation_v2();
    let start = ket(1, Up, Branch::Particle);
    assert_eq!(uc.apply(&us.apply(&start)), ket(-1, Down, Branch::Antiparticle).scale(I));
    assert_eq!(ut.apply(&us.apply(&start)), ket(-1, Up, Branch::Antiparticle).scale(-I));
    assert_eq!(us.apply(&ut.apply(&start)), ket(-1, Up, Branch::Antiparticle).scale(I));
}

#[test]
fn combinations_and_joint_search() {
    let rep = eigencombination_suite(&MomentumSet::standard(true), 1e-12).unwrap();
    assert_eq!(rep.parity_covariance_residual, 0.0);
    assert_eq!(rep.charge_residual, 0.0);
    let plus = rep.parity_rest_eigenvalues.iter().find(|e| e.0 == 1).unwrap();
    assert!((plus.1 - ONE).norm() < 1e-15 && plus.2 < 1e-15);
    let minus = rep.parity_rest_eigenvalues.iter().find(|e| e.0 == -1).unwrap();
    assert!((minus.1 + ONE).norm() < 1e-15);
    assert_eq!(rep.joint_dimension(SymmetryKind::ChargeConjugationTilde), 0);
    assert!(rep.joint_dimension(SymmetryKind::ChargeConjugation) > 0);
    let v = rep.simultaneous_example.unwrap();
    let us = SymmetryOp::space_inversion();
    let uc = SymmetryOp::charge_conjugation_v1();
    let labels = MomentumSet::standard(true).labels();
    let x = v.to_coords(&labels);
    assert!(crate::linalg::proportionality(&x, &us.apply(&v).to_coords(&labels)).1 < 1e-12);
    assert!(crate::linalg::proportionality(&x, &uc.apply(&v).to_coords(&labels)).1 < 1e-12);
}

#[test]
fn operator_rules_reproduce_state_rules() {
    let set = MomentumSet::standard(true);
    for kind in SymmetryKind::ALL {
        let derived = state_rules_from_operators(kind, &set);
        assert_eq!(derived.len(), set.labels().len());
        let op = SymmetryOp::of(kind);
        for (l, img) in derived {
            assert_eq!(op.apply(&FockVector::basis(l)), img, "{kind:?} {l}");
        }
    }
}

#[test]
fn momentum_set_validation_and_norms() {
    assert!(matches!(MomentumSet::new(vec![1, 2, -1]), Err(crate::Error::NotNegationClosed(2))));
    let set = MomentumSet::new(vec![3, -3, 5, -5]).unwrap();
    let v =
        FockVector::from_terms(set.labels().into_iter().enumerate().map(|(k, l)| (l, Complex64::new(k as f64, 1.0))));
    for kind in SymmetryKind::ALL {
        assert!((SymmetryOp::of(kind).apply(&v).norm() - v.norm()).abs() < 1e-12);
        for l in set.labels() {
            assert_eq!(
                SymmetryOp::of(kind).square_phase(l).map(|c| c.re),
                Some(if kind == SymmetryKind::SpaceInversion { 1.0 } else { -1.0 })
            );
        }
    }
    let mut z = FockVector::basis(set.labels()[0]);
    z.add_term(set.labels()[0], -ONE);
    assert!(z.is_zero());
}
