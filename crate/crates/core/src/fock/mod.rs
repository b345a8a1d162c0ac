//! Single-particle Fock sector with space inversion and two charge
//! conjugations.

mod ops;
mod state;

#[cfg(test)]
mod tests;

pub use ops::{
    commutator_report, eigencombination_suite, operator_rules, state_rules_from_operators, CommutatorReport,
    EigencombinationReport, JointEigenspace, OperatorRule, SymmetryKind, SymmetryOp,
};
pub use state::{Branch, FockVector, ModeLabel, MomentumSet, OperatorKind, OperatorSymbol};
