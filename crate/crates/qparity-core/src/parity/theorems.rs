//! The theorem registry: named bundles of parity checks over `c1..c12`.
//!
//! Each entry verifies, at a caller-chosen order, either that the odd
//! coefficients of a partition function match a quadratic family exactly
//! (possibly per arithmetic sub-progression) or that claimed progressions
//! are entirely even. A pass is always "verified up to N", never a proof.

use std::fmt;
use std::time::Instant;

use crate::partitions::{definition, gf_parity, ParityCharacterization, PartitionId};
use crate::report::VerificationReport;
use crate::series::ParitySeries;

use super::congruence::{parity_matches_families, verify_congruence, CongruenceClaim};

/// One registered theorem or corollary.
#[derive(Debug, Clone)]
pub struct TheoremEntry {
    pub id: &'static str,
    pub partition: PartitionId,
    pub checks: Vec<TheoremCheck>,
    /// Human-readable summary of the claim.
    pub statement: &'static str,
}

#[derive(Debug, Clone)]
pub enum TheoremCheck {
    Characterization(ParityCharacterization),
    Congruence(CongruenceClaim),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoremError {
    UnknownTheorem { given: String },
}

impl fmt::Display for TheoremError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremError::UnknownTheorem { given } => write!(f, "unknown theorem '{given}'"),
        }
    }
}

impl std::error::Error for TheoremError {}

fn characterization_entry(
    id: &'static str,
    partition: PartitionId,
    statement: &'static str,
) -> TheoremEntry {
    let def = definition(partition);
    TheoremEntry {
        id,
        partition,
        checks: def
            .characterizations
            .into_iter()
            .map(TheoremCheck::Characterization)
            .collect(),
        statement,
    }
}

fn congruence_entry(
    id: &'static str,
    partition: PartitionId,
    statement: &'static str,
) -> TheoremEntry {
    let def = definition(partition);
    TheoremEntry {
        id,
        partition,
        checks: def
            .congruences
            .into_iter()
            .map(TheoremCheck::Congruence)
            .collect(),
        statement,
    }
}

/// The constant registry, in suite order.
pub fn theorem_registry() -> Vec<TheoremEntry> {
    vec![
        characterization_entry(
            "T-c1",
            PartitionId::C1,
            "c1(n) is odd exactly at the triangular numbers n = j(j+1)/2",
        ),
        congruence_entry("T-c2", PartitionId::C2, "c2(5n+2) is even for all n"),
        characterization_entry(
            "T-c3-mod5",
            PartitionId::C3,
            "the odd values of c3 on each progression 5n+1..5n+4 sit on one quadratic family",
        ),
        congruence_entry(
            "T-c3-mod11",
            PartitionId::C3,
            "c3(11n+5), c3(11n+7), c3(11n+9) are even for all n",
        ),
        characterization_entry(
            "T-c4",
            PartitionId::C4,
            "c4(n) is odd exactly at n = (7j^2+3j)/2",
        ),
        characterization_entry(
            "T-c5",
            PartitionId::C5,
            "c5(n) is odd exactly at n = (7j^2+j)/2",
        ),
        characterization_entry(
            "T-c6",
            PartitionId::C6,
            "c6(n) is odd exactly at n = (7j^2+5j)/2",
        ),
        characterization_entry(
            "T-c7",
            PartitionId::C7,
            "c7(n) is odd exactly at n = 3j^2+2j",
        ),
        congruence_entry(
            "T-c8",
            PartitionId::C8,
            "c8(49n+r) is even for r in {6,20,27,34,41,48}",
        ),
        characterization_entry(
            "T-c9",
            PartitionId::C9,
            "c9(n) is odd exactly at n = (5j^2+j)/2",
        ),
        characterization_entry(
            "T-c10",
            PartitionId::C10,
            "c10(n) is odd exactly at n = 2j^2+j",
        ),
        congruence_entry(
            "T-c11-mod11",
            PartitionId::C11,
            "c11(11n+5), c11(11n+7), c11(11n+9) are even for all n",
        ),
        characterization_entry(
            "T-c12",
            PartitionId::C12,
            "c12(n) is odd exactly at n = 6j^2+4j",
        ),
        congruence_entry(
            "C-c12-odd",
            PartitionId::C12,
            "c12(2n+1) is even for all n",
        ),
    ]
}

pub fn theorem_ids() -> Vec<&'static str> {
    theorem_registry().iter().map(|t| t.id).collect()
}

pub fn find_theorem(id: &str) -> Result<TheoremEntry, TheoremError> {
    theorem_registry()
        .into_iter()
        .find(|t| t.id == id)
        .ok_or_else(|| TheoremError::UnknownTheorem {
            given: id.to_string(),
        })
}

/// The arithmetic sub-progression `m*k + r` of a parity series, reindexed by
/// `k`. Requires `r <= order`, so index 0 of the result is a checked index.
fn extract_progression(parity: &ParitySeries, modulus: usize, residue: usize) -> ParitySeries {
    let order = parity.order();
    assert!(residue <= order, "progression has no checked index");
    let sub_order = (order - residue) / modulus;
    let mut terms = Vec::new();
    for k in 0..=sub_order {
        let idx = modulus * k + residue;
        if idx <= order && parity.bit(idx).expect("within order") {
            terms.push((k, 1));
        }
    }
    crate::series::Series::make(sub_order, &terms)
        .expect("sub-progression indices are in range")
        .to_parity()
}

fn run_check(
    parity: &ParitySeries,
    partition: PartitionId,
    check: &TheoremCheck,
) -> VerificationReport {
    match check {
        TheoremCheck::Congruence(claim) => {
            let r = verify_congruence(parity, claim);
            VerificationReport::new(
                format!("{partition}({claim})"),
                r.order,
                r.first_failure,
            )
        }
        TheoremCheck::Characterization(ch) => match ch.progression {
            None => parity_matches_families(parity, &ch.families),
            Some((m, r)) => {
                if r > parity.order() {
                    // no index of the progression fits below the order:
                    // nothing was checked, nothing can have failed
                    return VerificationReport::new(
                        format!("{partition}({m}n+{r}): unchecked at this order"),
                        parity.order(),
                        None,
                    );
                }
                let sub = extract_progression(parity, m, r);
                let report = parity_matches_families(&sub, &ch.families);
                // counterexamples go back to the original coordinates
                VerificationReport::new(
                    format!("{partition}({m}n+{r}): {}", report.id),
                    parity.order(),
                    report.first_failure.map(|k| m * k + r),
                )
            }
        },
    }
}

/// Run every constituent check of a theorem at the given order and fold the
/// outcomes into one report (smallest counterexample wins).
pub fn verify_theorem_entry(entry: &TheoremEntry, order: usize) -> VerificationReport {
    let started = Instant::now();
    let parity = gf_parity(entry.partition, order);
    let parts: Vec<VerificationReport> = entry
        .checks
        .iter()
        .map(|check| run_check(&parity, entry.partition, check))
        .collect();
    VerificationReport::combine(entry.id, order, parts).with_elapsed(started.elapsed())
}

pub fn verify_theorem(id: &str, order: usize) -> Result<VerificationReport, TheoremError> {
    let entry = find_theorem(id)?;
    Ok(verify_theorem_entry(&entry, order))
}
