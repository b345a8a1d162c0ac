//! Self/anti-self charge-conjugate spinors for spin 1/2 and spin 1.
//!
//! The library builds the type-II `λ`/`ρ` bispinors, the discrete-symmetry
//! operators acting on them, the spin-1 Majorana-representation objects and
//! a single-particle Fock sector, then evaluates every identity relating
//! them as a numerical residual. The [`suite`] module bundles those
//! residuals into reproducible reports.
//!
//! All math is generic over [`Real`] (`f32`/`f64`); the aliases below pin
//! the double-precision types the checks run in.

// tensor code reads better with explicit μ, ν indices
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod fieldops;
pub mod fock;
pub mod halfspin;
pub mod linalg;
pub mod scalar;
pub mod spin1;
pub mod suite;

pub use error::{Error, Result};
pub use scalar::Real;

/// Double-precision complex scalar.
pub type Complex64 = num_complex::Complex<f64>;
/// Double-precision dense matrix.
pub type Matrix = linalg::CMatrix<f64>;
/// Double-precision column vector.
pub type Vector = linalg::CVector<f64>;
/// Double-precision (anti)linear operator.
pub type Operator = linalg::AntilinearOp<f64>;
