//! Backtracking enumeration of the restricted partitions behind `c1..c12`.
//!
//! Each reading reduces to a per-part multiplicity window: at index `j`,
//! every part value `p` may appear `min..=max` times (with `max` possibly
//! unbounded). The enumerator walks part values from `n` down to 1, choosing
//! multiplicities inside the window, pruning against the remaining weight and
//! the forced weight still owed to smaller parts. It never consults the
//! series pipeline, which is what makes the count comparison an oracle.

use serde::{Deserialize, Serialize};

use super::{PartitionError, PartitionId};

/// Default cap on oracle enumeration; restricted counts stay well below 10^6
/// per function up to here.
pub const DEFAULT_ORACLE_BOUND: usize = 60;

/// One `(j, partition)` pair; parts are stored descending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionInstance {
    pub j: u32,
    pub parts: Vec<u32>,
}

/// A full enumeration result, JSON-stable as
/// `{"id":"c2","n":7,"pairs":[{"j":1,"parts":[6,1]},...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratedPairs {
    pub id: PartitionId,
    pub n: usize,
    pub pairs: Vec<PartitionInstance>,
}

/// Allowed multiplicity window for one part value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct MultWindow {
    min: i64,
    max: Option<i64>,
}

impl MultWindow {
    const ZERO: MultWindow = MultWindow {
        min: 0,
        max: Some(0),
    };
    const AT_MOST_ONE: MultWindow = MultWindow {
        min: 0,
        max: Some(1),
    };
    const FREE: MultWindow = MultWindow { min: 0, max: None };

    fn exactly(k: i64) -> MultWindow {
        MultWindow {
            min: k,
            max: Some(k),
        }
    }

    fn between(lo: i64, hi: i64) -> MultWindow {
        MultWindow {
            min: lo,
            max: Some(hi),
        }
    }

    fn at_least(lo: i64) -> MultWindow {
        MultWindow { min: lo, max: None }
    }

    fn admits(&self, m: i64) -> bool {
        m >= self.min && self.max.is_none_or(|hi| m <= hi)
    }
}

/// The GF-faithful multiplicity window of part `p` at index `j`.
///
/// Branches transcribe the per-part readings one clause at a time; some
/// arms repeat a window on purpose and bounds are written in the `2j - 1`
/// style of the statements they mirror.
#[allow(clippy::if_same_then_else, clippy::int_plus_one)]
fn mult_window(id: PartitionId, j: i64, p: i64) -> MultWindow {
    debug_assert!(p >= 1);
    let even = p % 2 == 0;
    match id {
        PartitionId::C1 => {
            if p <= 2 * j - 1 {
                MultWindow::at_least(2)
            } else if p == 2 * j && j >= 1 {
                MultWindow::FREE
            } else {
                MultWindow::AT_MOST_ONE
            }
        }
        PartitionId::C2 => {
            if even {
                if p >= 2 * j + 2 {
                    MultWindow::AT_MOST_ONE
                } else {
                    MultWindow::ZERO
                }
            } else if p <= 2 * j - 1 {
                MultWindow::exactly(1)
            } else {
                MultWindow::FREE
            }
        }
        PartitionId::C3 => {
            if p == 1 {
                MultWindow::between(j * j, j * j + 1)
            } else if !even {
                MultWindow::AT_MOST_ONE
            } else if p <= 2 * j {
                MultWindow::AT_MOST_ONE
            } else if p >= 4 * j + 4 && p % 4 == 0 {
                MultWindow::AT_MOST_ONE
            } else {
                MultWindow::ZERO
            }
        }
        PartitionId::C4 => {
            if even {
                if p <= 2 * j {
                    MultWindow::exactly(2)
                } else if p >= 4 * j + 2 {
                    MultWindow::AT_MOST_ONE
                } else {
                    MultWindow::ZERO
                }
            } else if p <= 2 * j - 1 {
                MultWindow::AT_MOST_ONE
            } else {
                MultWindow::ZERO
            }
        }
        PartitionId::C5 => {
            if even {
                if p >= 4 * j + 2 {
                    MultWindow::AT_MOST_ONE
                } else {
                    MultWindow::ZERO
                }
            } else if p <= 2 * j - 1 {
                MultWindow::between(2, 3)
            } else {
                MultWindow::ZERO
            }
        }
        PartitionId::C6 => {
            if even {
                if p <= 2 * j {
                    MultWindow::exactly(2)
                } else if p >= 4 * j + 2 {
                    MultWindow::AT_MOST_ONE
                } else {
                    MultWindow::ZERO
                }
            } else if p <= 2 * j - 1 {
                MultWindow::AT_MOST_ONE
            } else if p == 2 * j + 1 {
                MultWindow::FREE
            } else {
                MultWindow::ZERO
            }
        }
        PartitionId::C7 => {
            if even {
                if p <= 2 * j {
                    if p % 4 == 0 {
                        MultWindow::exactly(2)
                    } else {
                        MultWindow::between(2, 3)
                    }
                } else if p % 4 == 2 {
                    MultWindow::AT_MOST_ONE
                } else if p >= 4 * j + 4 {
                    MultWindow::AT_MOST_ONE
                } else {
                    MultWindow::ZERO
                }
            } else if p == 2 * j + 1 {
                MultWindow::FREE
            } else {
                MultWindow::ZERO
            }
        }
        PartitionId::C8 => {
            if even {
                if p <= j || p >= 2 * j + 2 {
                    MultWindow::AT_MOST_ONE
                } else {
                    MultWindow::ZERO
                }
            } else if p <= 2 * j - 1 {
                if p <= j {
                    MultWindow::between(1, 2)
                } else {
                    MultWindow::exactly(1)
                }
            } else {
                MultWindow::ZERO
            }
        }
        PartitionId::C9 => {
            if j == 0 {
                if p == 1 {
                    MultWindow::ZERO
                } else {
                    MultWindow::AT_MOST_ONE
                }
            } else if p == 1 {
                MultWindow::exactly(j * j)
            } else if p <= j {
                MultWindow::ZERO
            } else {
                MultWindow::AT_MOST_ONE
            }
        }
        PartitionId::C10 => {
            if p <= j {
                if even {
                    MultWindow::exactly(2)
                } else {
                    MultWindow::between(2, 3)
                }
            } else if !even {
                MultWindow::AT_MOST_ONE
            } else if p >= 2 * j + 2 {
                MultWindow::AT_MOST_ONE
            } else {
                MultWindow::ZERO
            }
        }
        PartitionId::C11 => {
            if even {
                if p >= 2 * j + 2 {
                    MultWindow::AT_MOST_ONE
                } else {
                    MultWindow::ZERO
                }
            } else if p <= 2 * j - 1 {
                MultWindow::at_least(1)
            } else {
                MultWindow::FREE
            }
        }
        PartitionId::C12 => {
            if p < j {
                if even {
                    MultWindow::exactly(2)
                } else {
                    MultWindow::between(2, 3)
                }
            } else if p == j {
                if even {
                    MultWindow::exactly(3)
                } else {
                    MultWindow::between(3, 4)
                }
            } else if !even {
                MultWindow::AT_MOST_ONE
            } else if p >= 2 * j + 4 {
                MultWindow::AT_MOST_ONE
            } else {
                MultWindow::ZERO
            }
        }
    }
}

/// Smallest index for the function's sum (`c9` additionally skips `j = 1`).
fn first_index(id: PartitionId) -> i64 {
    match id {
        PartitionId::C2 | PartitionId::C3 | PartitionId::C11 => 1,
        _ => 0,
    }
}

fn index_allowed(id: PartitionId, j: i64) -> bool {
    if j < first_index(id) {
        return false;
    }
    !(id == PartitionId::C9 && j == 1)
}

/// Total weight forced by the multiplicity minima at index `j`. Forced parts
/// never exceed `2j + 1`.
fn forced_weight(id: PartitionId, j: i64) -> i64 {
    (1..=2 * j + 1)
        .map(|p| mult_window(id, j, p).min * p)
        .sum()
}

/// Indices whose forced weight fits inside `n`, ascending. The forced weight
/// is nondecreasing in `j` for every reading, so the scan stops at the first
/// allowed index that no longer fits.
fn admissible_indices(id: PartitionId, n: usize) -> Vec<i64> {
    let mut out = Vec::new();
    let mut j = first_index(id);
    loop {
        if index_allowed(id, j) {
            if forced_weight(id, j) > n as i64 {
                break;
            }
            out.push(j);
        }
        j += 1;
    }
    out
}

/// Visit every admissible partition at `(id, j)` of weight `n`, parts
/// descending, multiplicities explored largest-first (which yields the pair
/// list in lexicographically descending part order).
fn enumerate_at_index(id: PartitionId, j: i64, n: usize, visit: &mut dyn FnMut(&[u32])) {
    let n = n as i64;
    // forced_below[p] = weight still owed to parts 1..=p
    let span = n.max(2 * j + 1) as usize;
    let mut forced_below = vec![0i64; span + 1];
    for p in 1..=span as i64 {
        forced_below[p as usize] = forced_below[(p - 1) as usize] + mult_window(id, j, p).min * p;
    }
    if forced_below[span] > n {
        return;
    }
    let mut stack: Vec<u32> = Vec::new();
    descend(id, j, n, n, &forced_below, &mut stack, visit);

    fn descend(
        id: PartitionId,
        j: i64,
        p: i64,
        w: i64,
        forced_below: &[i64],
        stack: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if p == 0 {
            if w == 0 {
                visit(stack);
            }
            return;
        }
        let window = mult_window(id, j, p);
        if window.min * p > w {
            return; // a forced part no longer fits
        }
        let owed_below = forced_below[(p - 1) as usize];
        let mut hi = (w - owed_below) / p;
        if let Some(max) = window.max {
            hi = hi.min(max);
        }
        let mut m = hi;
        while m >= window.min {
            for _ in 0..m {
                stack.push(p as u32);
            }
            descend(id, j, p - 1, w - m * p, forced_below, stack, visit);
            for _ in 0..m {
                stack.pop();
            }
            m -= 1;
        }
    }
}

/// True iff `parts` decomposes under the reading of `id` at index `j`.
/// Parts may be given in any order; the check is a pure multiplicity test.
pub fn restriction_predicate(id: PartitionId, j: i64, parts: &[u32]) -> bool {
    if !index_allowed(id, j) {
        return false;
    }
    let top = parts.iter().copied().max().unwrap_or(0) as i64;
    let span = top.max(2 * j + 1);
    let mut mult = vec![0i64; span as usize + 1];
    for &p in parts {
        if p == 0 {
            return false;
        }
        mult[p as usize] += 1;
    }
    (1..=span).all(|p| mult_window(id, j, p).admits(mult[p as usize]))
}

fn checked_bound(n: usize, bound: usize) -> Result<(), PartitionError> {
    if n > bound {
        return Err(PartitionError::BeyondOracleBound { n, bound });
    }
    Ok(())
}

/// Number of `(j, partition)` pairs of weight `n`, by direct enumeration.
/// Refuses `n` beyond `bound` to keep runtimes predictable.
pub fn bruteforce_count(id: PartitionId, n: usize, bound: usize) -> Result<u64, PartitionError> {
    checked_bound(n, bound)?;
    let mut count = 0u64;
    for j in admissible_indices(id, n) {
        enumerate_at_index(id, j, n, &mut |_| count += 1);
    }
    Ok(count)
}

/// All `(j, partition)` pairs of weight `n`, `j` ascending and parts in
/// lexicographically descending order within each index.
pub fn bruteforce_list(
    id: PartitionId,
    n: usize,
    bound: usize,
) -> Result<Vec<PartitionInstance>, PartitionError> {
    checked_bound(n, bound)?;
    let mut pairs = Vec::new();
    for j in admissible_indices(id, n) {
        enumerate_at_index(id, j, n, &mut |parts| {
            pairs.push(PartitionInstance {
                j: j as u32,
                parts: parts.to_vec(),
            });
        });
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::super::gf_series;
    use super::*;
    use std::collections::BTreeSet;

    fn list(id: PartitionId, n: usize) -> Vec<PartitionInstance> {
        bruteforce_list(id, n, DEFAULT_ORACLE_BOUND).unwrap()
    }

    #[test]
    fn c2_pairs_of_seven() {
        let pairs = list(PartitionId::C2, 7);
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0].j, 1);
        assert_eq!(pairs[0].parts, vec![6, 1]);
        assert_eq!(pairs[1].j, 1);
        assert_eq!(pairs[1].parts, vec![3, 3, 1]);
    }

    #[test]
    fn c9_pairs_of_eleven_match_listing() {
        let pairs = list(PartitionId::C9, 11);
        assert_eq!(pairs.len(), 9);
        let got: BTreeSet<Vec<u32>> = pairs.iter().map(|p| p.parts.clone()).collect();
        let expected: BTreeSet<Vec<u32>> = [
            vec![11],
            vec![9, 2],
            vec![8, 3],
            vec![7, 4],
            vec![7, 1, 1, 1, 1],
            vec![6, 5],
            vec![6, 3, 2],
            vec![5, 4, 2],
            vec![4, 3, 1, 1, 1, 1],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
        // the two staircase pairs sit at j = 2, the rest at j = 0
        assert_eq!(pairs.iter().filter(|p| p.j == 2).count(), 2);
        assert_eq!(pairs.iter().filter(|p| p.j == 0).count(), 7);
    }

    #[test]
    fn c9_rejects_wrong_multiplicity_of_one() {
        // (6, 1^5) fails at j=2: five 1s instead of exactly four
        assert!(!restriction_predicate(PartitionId::C9, 2, &[6, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn c2_double_counts_across_indices() {
        // (3,1) is admissible at j=1 and j=2, so the pair count at n=4 is 2
        assert!(restriction_predicate(PartitionId::C2, 1, &[3, 1]));
        assert!(restriction_predicate(PartitionId::C2, 2, &[3, 1]));
        assert_eq!(bruteforce_count(PartitionId::C2, 4, 60).unwrap(), 2);
        let coeff = gf_series(PartitionId::C2, 4);
        assert_eq!(*coeff.coefficient(4).unwrap(), num_bigint::BigInt::from(2));
    }

    #[test]
    fn c1_accepts_empty_partition_at_index_zero() {
        assert!(restriction_predicate(PartitionId::C1, 0, &[]));
        let pairs = list(PartitionId::C1, 0);
        assert_eq!(pairs.len(), 1);
        assert!(pairs[0].parts.is_empty());
    }

    #[test]
    fn inadmissible_indices_are_rejected() {
        assert!(!restriction_predicate(PartitionId::C2, 0, &[]));
        assert!(!restriction_predicate(PartitionId::C9, 1, &[1]));
        assert!(!restriction_predicate(PartitionId::C1, -1, &[]));
    }

    #[test]
    fn oracle_bound_is_enforced() {
        let err = bruteforce_count(PartitionId::C1, 61, 60).unwrap_err();
        assert_eq!(err, PartitionError::BeyondOracleBound { n: 61, bound: 60 });
        assert!(bruteforce_count(PartitionId::C1, 60, 61).is_ok());
    }

    #[test]
    fn lists_are_deterministic_and_duplicate_free() {
        for id in [PartitionId::C2, PartitionId::C8, PartitionId::C11] {
            let a = list(id, 18);
            let b = list(id, 18);
            assert_eq!(a, b);
            let set: BTreeSet<(u32, Vec<u32>)> =
                a.iter().map(|p| (p.j, p.parts.clone())).collect();
            assert_eq!(set.len(), a.len(), "{id}: duplicate (j, parts) pair");
        }
    }

    #[test]
    fn listed_pairs_satisfy_the_predicate_and_weight() {
        for id in PartitionId::ALL {
            for n in [0usize, 1, 7, 13, 24] {
                for pair in list(id, n) {
                    let w: u32 = pair.parts.iter().sum();
                    assert_eq!(w as usize, n);
                    assert!(
                        restriction_predicate(id, pair.j as i64, &pair.parts),
                        "{id} n={n} j={} parts={:?}",
                        pair.j,
                        pair.parts
                    );
                }
            }
        }
    }

    #[test]
    fn counts_match_gf_coefficients_to_thirty() {
        for id in PartitionId::ALL {
            let series = gf_series(id, 30);
            for n in 0..=30usize {
                let pairs = bruteforce_count(id, n, 60).unwrap();
                let coeff = series.coefficient(n).unwrap();
                assert_eq!(
                    &num_bigint::BigInt::from(pairs),
                    coeff,
                    "{id} disagrees at n={n}"
                );
            }
        }
    }

    #[test]
    fn pair_list_serialization_shape() {
        let pairs = EnumeratedPairs {
            id: PartitionId::C2,
            n: 7,
            pairs: list(PartitionId::C2, 7),
        };
        let json = serde_json::to_string(&pairs).unwrap();
        assert_eq!(
            json,
            r#"{"id":"c2","n":7,"pairs":[{"j":1,"parts":[6,1]},{"j":1,"parts":[3,3,1]}]}"#
        );
    }
}
