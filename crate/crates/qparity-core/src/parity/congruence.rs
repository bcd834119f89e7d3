//! Congruence claims mod 2, support matching, and progression scanning.

use std::collections::BTreeSet;
use std::fmt;

use crate::report::VerificationReport;
use crate::series::ParitySeries;

use super::family::QuadraticFamily;

/// The claim `c(m*n + r) ≡ 0 (mod 2)` for all `n >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceClaim {
    modulus: usize,
    residue: usize,
}

impl CongruenceClaim {
    pub fn new(modulus: usize, residue: usize) -> CongruenceClaim {
        assert!(modulus >= 2, "congruence modulus must be >= 2");
        assert!(residue < modulus, "residue must lie below the modulus");
        CongruenceClaim { modulus, residue }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn residue(&self) -> usize {
        self.residue
    }
}

impl fmt::Display for CongruenceClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}n+{}", self.modulus, self.residue)
    }
}

/// Check one congruence claim against a parity series: every index
/// `m*k + r <= order` must carry bit 0. The counterexample, if any, is the
/// smallest offending exponent of the original series.
pub fn verify_congruence(parity: &ParitySeries, claim: &CongruenceClaim) -> VerificationReport {
    let order = parity.order();
    let mut first_failure = None;
    let mut idx = claim.residue;
    while idx <= order {
        if parity.bit(idx).expect("index within order") {
            first_failure = Some(idx);
            break;
        }
        idx += claim.modulus;
    }
    VerificationReport::new(claim.to_string(), order, first_failure)
}

/// Check that the odd coefficients of `parity` are exactly the union of the
/// given family supports. The counterexample is the smallest exponent in the
/// symmetric difference, in either direction.
pub fn parity_matches_families(
    parity: &ParitySeries,
    families: &[QuadraticFamily],
) -> VerificationReport {
    let order = parity.order();
    let mut expected = BTreeSet::new();
    for family in families {
        expected.extend(family.members(order));
    }
    let actual: BTreeSet<usize> = parity.support().into_iter().collect();
    let first_failure = expected
        .symmetric_difference(&actual)
        .next()
        .copied();
    let label = if families.is_empty() {
        "empty-family-union".to_string()
    } else {
        families
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(" | ")
    };
    VerificationReport::new(format!("support={label}"), order, first_failure)
}

/// Default support floor for the scanner: a progression must contain at
/// least this many checked indices before it may be reported, which keeps
/// vacuous "congruences" out at large moduli relative to the order.
pub const DEFAULT_MIN_SUPPORT: usize = 20;

/// All residues `r (mod m)` whose progression `m*k + r` is entirely even up
/// to the series order, provided the progression contains at least
/// `min_support` checked indices. Every reported residue re-verifies under
/// [`verify_congruence`] by construction.
pub fn scan_zero_progressions(
    parity: &ParitySeries,
    modulus: usize,
    min_support: usize,
) -> Vec<usize> {
    assert!(modulus >= 2, "scan modulus must be >= 2");
    assert!(min_support >= 1, "min_support must be >= 1");
    let order = parity.order();
    let mut found = Vec::new();
    for residue in 0..modulus {
        let mut checked = 0usize;
        let mut all_even = true;
        let mut idx = residue;
        while idx <= order {
            checked += 1;
            if parity.bit(idx).expect("index within order") {
                all_even = false;
                break;
            }
            idx += modulus;
        }
        if all_even && checked >= min_support {
            found.push(residue);
        }
    }
    found
}
