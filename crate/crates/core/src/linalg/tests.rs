use num_complex::Complex;
use proptest::prelude::*;

use super::*;
use crate::linalg::realify::{majorana_frame, real_eigenspace};

type M = CMatrix<f64>;
type V = CVector<f64>;

#[test]
fn conjugation_flips_imaginary_part() {
    let op = AntilinearOp::conjugation(2);
    let out = op.apply(&V::from_pairs(&[(0.0, 1.0), (0.0, 0.0)])).unwrap();
    assert_eq!(out, V::from_pairs(&[(0.0, -1.0), (0.0, 0.0)]));
}

#[test]
fn zero_operator_annihilates() {
    for flag in [false, true] {
        let op = AntilinearOp::new(M::zeros(3, 3), flag).unwrap();
        let out = op.apply(&V::from_pairs(&[(1.0, 2.0), (-3.0, 0.5), (0.0, 7.0)])).unwrap();
        assert_eq!(out.max_abs(), 0.0);
    }
}

#[test]
fn apply_rejects_wrong_dimension() {
    let op = AntilinearOp::<f64>::identity(4);
    assert!(matches!(op.apply(&V::zeros(3)), Err(crate::Error::DimensionMismatch { .. })));
    assert!(op.compose(&AntilinearOp::identity(2)).is_err());
    assert!(AntilinearOp::new(M::zeros(2, 3), true).is_err());
}

#[test]
fn double_conjugation_is_identity() {
    let k = AntilinearOp::<f64>::conjugation(3);
    let kk = k.compose(&k).unwrap();
    assert!(!kk.conjugates_argument());
    assert_eq!(kk.matrix(), &M::identity(3));
}

#[test]
fn approx_eq_reports_residual() {
    let a = M::from_pairs(&[[(1.0, 2.0), (0.5, 0.0)], [(0.0, -1.0), (3.0, 3.0)]]);
    let cmp = a.approx_eq(&a, 0.0).unwrap();
    assert!(cmp.within);
    assert_eq!(cmp.residual, 0.0);

    let mut e = M::zeros(2, 2);
    e[(1, 0)] = Complex::new(1.0, 0.0);
    let b = &a + &e.scale_real(1e-9);
    let cmp = a.approx_eq(&b, 1e-12).unwrap();
    assert!(!cmp.within);
    assert!((cmp.residual - 1e-9).abs() < 1e-15);

    assert!(a.approx_eq(&M::zeros(3, 3), 1.0).is_err());
    assert!(a.approx_eq(&a, -1.0).is_err());
}

#[test]
fn determinant_and_inverse() {
    let a = M::from_pairs(&[[(2.0, 0.0), (0.0, 1.0)], [(1.0, 0.0), (3.0, -1.0)]]);
    let det = a.det().unwrap();
    // 2(3 - i) - i = 6 - 3i
    assert!((det - Complex::new(6.0, -3.0)).norm() < 1e-14);
    let inv = a.inverse().unwrap();
    assert!((&a * &inv).approx_eq(&M::identity(2), 1e-14).unwrap().within);
    assert_eq!(M::zeros(2, 2).inverse(), Err(crate::Error::Singular));
}

#[test]
fn nullspace_of_rank_deficient_matrix() {
    let a = M::from_real(&[[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [1.0, 0.0, 1.0]]);
    assert_eq!(a.rank(1e-12), 2);
    let ns = a.nullspace(1e-12);
    assert_eq!(ns.len(), 1);
    assert!((&a * &ns[0]).max_abs() < 1e-14);
}

#[test]
fn block_rejects_mismatched_shapes() {
    let a = M::identity(2);
    let b = M::identity(3);
    assert!(M::block(&[&[&a, &b]]).is_err());
    let ok = M::block(&[&[&a, &M::zeros(2, 3)], &[&M::zeros(3, 2), &b]]).unwrap();
    assert_eq!(ok, M::identity(5));
}

#[test]
fn realified_involution_splits_evenly() {
    // Plain conjugation: fixed space = real vectors, anti-fixed = imaginary.
    let k = AntilinearOp::<f64>::conjugation(3);
    let plus = real_eigenspace(&k, 1.0, 1e-12);
    let minus = real_eigenspace(&k, -1.0, 1e-12);
    assert_eq!((plus.len(), minus.len()), (3, 3));
    assert!(plus.iter().all(|v| v.max_imag() == 0.0));
    assert!(minus.iter().all(|v| v.max_real() == 0.0));
    let frame = majorana_frame(&k, 1e-12).unwrap();
    assert!((&frame * &frame.adjoint()).approx_eq(&M::identity(3), 1e-14).unwrap().within);
}

#[test]
fn operator_square_minus_one_has_no_fixed_vectors() {
    // ψ ↦ iσ₂ ψ* squares to -1.
    let j = AntilinearOp::antilinear(M::from_real(&[[0.0, 1.0], [-1.0, 0.0]])).unwrap();
    assert_eq!(j.square().matrix(), &M::identity(2).scale_real(-1.0));
    assert!(real_eigenspace(&j, 1.0, 1e-12).is_empty());
    assert!(real_eigenspace(&j, -1.0, 1e-12).is_empty());
}

#[test]
fn generic_over_single_precision() {
    let s = pauli::<f32>();
    let sq = &s[1] * &s[1];
    assert!(sq.approx_eq(&CMatrix::identity(2), 1e-6).unwrap().within);
}

#[test]
fn pauli_algebra() {
    let s = pauli::<f64>();
    let i = Complex::new(0.0, 1.0);
    for a in 0..3 {
        for b in 0..3 {
            let ab = &s[a] * &s[b];
            let mut expect = if a == b { M::identity(2) } else { M::zeros(2, 2) };
            for c in 0..3 {
                let e = levi_civita(a, b, c) as f64;
                if e != 0.0 {
                    expect = &expect + &s[c].scale(i * e);
                }
            }
            assert!(ab.approx_eq(&expect, 0.0).unwrap().within);
        }
    }
}

fn gaussian_int() -> impl Strategy<Value = Complex<f64>> {
    (-3i32..=3, -3i32..=3).prop_map(|(a, b)| Complex::new(a as f64, b as f64))
}

fn small_matrix(n: usize) -> impl Strategy<Value = M> {
    proptest::collection::vec(gaussian_int(), n * n).prop_map(move |d| M::new(n, n, d).unwrap())
}

fn float_vec(n: usize) -> impl Strategy<Value = V> {
    proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), n)
        .prop_map(|d| d.into_iter().map(|(a, b)| Complex::new(a, b)).collect())
}

proptest! {
    #[test]
    fn compose_is_associative_exactly(
        a in small_matrix(3), b in small_matrix(3), c in small_matrix(3),
        fa: bool, fb: bool, fc: bool,
    ) {
        let a = AntilinearOp::new(a, fa).unwrap();
        let b = AntilinearOp::new(b, fb).unwrap();
        let c = AntilinearOp::new(c, fc).unwrap();
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn antilinear_apply_conjugates_scalars(
        m in small_matrix(4), v in float_vec(4), re in -2.0f64..2.0, im in -2.0f64..2.0,
    ) {
        let op = AntilinearOp::antilinear(m).unwrap();
        let alpha = Complex::new(re, im);
        let lhs = op.apply(&v.scale(alpha)).unwrap();
        let rhs = op.apply(&v).unwrap().scale(alpha.conj());
        prop_assert!(lhs.approx_eq(&rhs, 1e-11).unwrap().within);
    }

    #[test]
    fn antilinear_square_is_m_mstar(m in small_matrix(3), v in float_vec(3)) {
        let op = AntilinearOp::antilinear(m.clone()).unwrap();
        let twice = op.apply(&op.apply(&v).unwrap()).unwrap();
        let direct = (&m * &m.conj()).mul_vec(&v);
        prop_assert!(twice.approx_eq(&direct, 1e-11).unwrap().within);
        prop_assert!(!op.square().conjugates_argument());
    }

    #[test]
    fn kron_mixed_product(
        a in small_matrix(2), b in small_matrix(3), v in float_vec(2), w in float_vec(3),
    ) {
        let k = a.kron(&b);
        prop_assert_eq!(k.shape(), (6, 6));
        let lhs = k.mul_vec(&v.kron(&w));
        let rhs = a.mul_vec(&v).kron(&b.mul_vec(&w));
        prop_assert!(lhs.approx_eq(&rhs, 1e-10).unwrap().within);
    }

    #[test]
    fn realification_matches_apply(m in small_matrix(3), flag: bool, v in float_vec(3)) {
        let op = AntilinearOp::new(m, flag).unwrap();
        let direct = op.apply(&v).unwrap();
        let r = op.realify();
        let x: V = v.realify().into_iter().map(|t| Complex::new(t, 0.0)).collect();
        let y = r.mul_vec(&x);
        let back = V::from_realified(&y.iter().map(|z| z.re).collect::<Vec<_>>());
        prop_assert!(back.approx_eq(&direct, 1e-11).unwrap().within);
    }
}
