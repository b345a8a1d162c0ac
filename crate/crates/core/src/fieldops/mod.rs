//! Single-mode operator algebra for the Majorana-like field: its charge
//! conjugate, the even/odd split, the Dirac projection and the
//! quaternionic phase orbit.

mod expansion;
mod phases;

#[cfg(test)]
mod tests;

pub use expansion::{
    charge_conjugate_expansion, dirac_from_majorana, majorana_mode, ziino_barut_check, ziino_barut_split,
    DiracFromMajorana, ModeExpansion, SplitCheck, Term, ZiinoBarutSplit,
};
pub use phases::{quaternion_matrix, su2_phase_orbit, PhaseOrbitReport, QuaternionPhase};
