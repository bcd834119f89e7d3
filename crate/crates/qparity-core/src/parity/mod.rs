//! Parity analysis: quadratic support families, mod-2 congruence checks,
//! progression scanning, residue computation, and the theorem registry.

mod congruence;
mod family;
mod residues;
mod theorems;

pub use congruence::{
    parity_matches_families, scan_zero_progressions, verify_congruence, CongruenceClaim,
    DEFAULT_MIN_SUPPORT,
};
pub use family::{JDomain, QuadraticFamily, ResidueFilter};
pub use residues::quad_residues_mod;
pub use theorems::{
    find_theorem, theorem_ids, theorem_registry, verify_theorem, verify_theorem_entry,
    TheoremCheck, TheoremEntry, TheoremError,
};
