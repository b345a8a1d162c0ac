//! Spin-1 `(1,0)⊕(0,1)` objects: boosts, the covariant `γ_{μν}` family,
//! the Majorana representation and the self-conjugacy dichotomy.

pub mod bmw;
pub mod conjugacy;
pub mod matrices;
pub mod mr;

#[cfg(test)]
mod tests;

pub use bmw::{
    bmw_canonical_gammas, bmw_chiral_gammas, canonical_transform, chiral_to_majorana, displayed_majorana_gammas,
    majorana_rep_report, majorana_unitary, to_majorana_rep, GammaFamily, MajoranaRepReport,
};
pub use conjugacy::{lambda_reality_check, spin1_selfconjugacy_analysis, RealityEntry, SelfConjugacyAnalysis};
pub use matrices::{build_spin1_basis, j_matrices, spin1_boost_ops, wigner_theta, Spin1Basis, Spin1Helicity};
pub use mr::{component_identities, mr_spinors, ComponentIdentities, MrSpinors};
