//! Quadratic support families: the sets `{ n : delta*n = alpha*j^2 + beta*j + gamma }`.

use std::collections::BTreeSet;
use std::fmt;

/// Range of the family index `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JDomain {
    AllIntegers,
    NonNegative,
    Positive,
}

impl JDomain {
    pub fn contains(&self, j: i64) -> bool {
        match self {
            JDomain::AllIntegers => true,
            JDomain::NonNegative => j >= 0,
            JDomain::Positive => j >= 1,
        }
    }
}

/// A side condition `j ≡ r (mod m)` for `r` in a fixed residue set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueFilter {
    modulus: i64,
    residues: Vec<i64>,
}

impl ResidueFilter {
    pub fn new(modulus: i64, residues: &[i64]) -> ResidueFilter {
        assert!(modulus >= 1, "filter modulus must be >= 1");
        let mut rs: Vec<i64> = residues.iter().map(|r| r.rem_euclid(modulus)).collect();
        rs.sort_unstable();
        rs.dedup();
        ResidueFilter {
            modulus,
            residues: rs,
        }
    }

    pub fn accepts(&self, j: i64) -> bool {
        self.residues.binary_search(&j.rem_euclid(self.modulus)).is_ok()
    }
}

/// The support set `{ n >= 0 : delta*n = alpha*j^2 + beta*j + gamma for some
/// admissible j }`. Divisibility by `delta` is exact; values that do not
/// divide are skipped, never rounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticFamily {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub delta: i64,
    pub domain: JDomain,
    pub filter: Option<ResidueFilter>,
}

impl QuadraticFamily {
    /// A family over all integers `j` with no side condition.
    pub fn new(alpha: i64, beta: i64, gamma: i64, delta: i64, domain: JDomain) -> QuadraticFamily {
        assert!(alpha >= 1, "alpha must be positive for a finite support");
        assert!(delta >= 1, "delta must be a positive denominator");
        QuadraticFamily {
            alpha,
            beta,
            gamma,
            delta,
            domain,
            filter: None,
        }
    }

    pub fn with_filter(mut self, modulus: i64, residues: &[i64]) -> QuadraticFamily {
        self.filter = Some(ResidueFilter::new(modulus, residues));
        self
    }

    fn value(&self, j: i64) -> i64 {
        self.alpha * j * j + self.beta * j + self.gamma
    }

    /// All members in `[0, order]`, ascending. Both tails of `j` are scanned
    /// until the quadratic exceeds `delta * order`.
    pub fn members(&self, order: usize) -> BTreeSet<usize> {
        let bound = self.delta * order as i64;
        // alpha*j^2 + beta*j + gamma <= bound once |j| is past the larger root
        let disc = self.beta * self.beta + 4 * self.alpha * (bound - self.gamma);
        let j_limit = if disc < 0 {
            1
        } else {
            (self.beta.abs() + (disc as u64).isqrt() as i64) / (2 * self.alpha) + 2
        };
        let mut out = BTreeSet::new();
        for j in -j_limit..=j_limit {
            if !self.domain.contains(j) {
                continue;
            }
            if let Some(filter) = &self.filter {
                if !filter.accepts(j) {
                    continue;
                }
            }
            let v = self.value(j);
            if v < 0 || v % self.delta != 0 {
                continue;
            }
            let n = v / self.delta;
            if n <= order as i64 {
                out.insert(n as usize);
            }
        }
        out
    }
}

impl fmt::Display for QuadraticFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}j^2", self.alpha)?;
        if self.beta != 0 {
            write!(f, "{:+}j", self.beta)?;
        }
        if self.gamma != 0 {
            write!(f, "{:+}", self.gamma)?;
        }
        write!(f, ")")?;
        if self.delta != 1 {
            write!(f, "/{}", self.delta)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members_vec(f: &QuadraticFamily, order: usize) -> Vec<usize> {
        f.members(order).into_iter().collect()
    }

    #[test]
    fn seven_j_squared_plus_three_j_halves() {
        let f = QuadraticFamily::new(7, 3, 0, 2, JDomain::AllIntegers);
        assert_eq!(members_vec(&f, 20), vec![0, 2, 5, 11, 17]);
    }

    #[test]
    fn triangular_numbers() {
        let f = QuadraticFamily::new(1, 1, 0, 2, JDomain::NonNegative);
        assert_eq!(members_vec(&f, 10), vec![0, 1, 3, 6, 10]);
    }

    #[test]
    fn filtered_family_with_exact_divisibility() {
        // (j(j+1) - 2)/10 over j >= 1, j = 1,3 (mod 5): j = 1,3,6,8 land in
        // [0,10] (j=6 divides exactly: 40/10 = 4)
        let f = QuadraticFamily::new(1, 1, -2, 10, JDomain::Positive).with_filter(5, &[1, 3]);
        assert_eq!(members_vec(&f, 10), vec![0, 1, 4, 7]);
    }

    #[test]
    fn display_form() {
        let f = QuadraticFamily::new(7, 3, 0, 2, JDomain::AllIntegers);
        assert_eq!(f.to_string(), "(7j^2+3j)/2");
        let g = QuadraticFamily::new(2, 1, 0, 1, JDomain::AllIntegers);
        assert_eq!(g.to_string(), "(2j^2+1j)");
    }

    #[test]
    fn members_agree_with_naive_scan() {
        let fams = [
            QuadraticFamily::new(1, 1, -2, 10, JDomain::Positive).with_filter(5, &[1, 3]),
            QuadraticFamily::new(75, 125, 50, 5, JDomain::AllIntegers),
            QuadraticFamily::new(3, 1, -4, 5, JDomain::AllIntegers).with_filter(5, &[1, 2]),
            QuadraticFamily::new(6, 4, 0, 1, JDomain::AllIntegers),
        ];
        for f in &fams {
            for order in [0usize, 1, 17, 400] {
                let naive: BTreeSet<usize> = {
                    let span = 2 * (f.delta * order as i64 + f.beta.abs() + f.gamma.abs()) + 4;
                    (-span..=span)
                        .filter(|&j| f.domain.contains(j))
                        .filter(|&j| f.filter.as_ref().is_none_or(|r| r.accepts(j)))
                        .filter_map(|j| {
                            let v = f.alpha * j * j + f.beta * j + f.gamma;
                            (v >= 0 && v % f.delta == 0 && v / f.delta <= order as i64)
                                .then(|| (v / f.delta) as usize)
                        })
                        .collect()
                };
                assert_eq!(f.members(order), naive);
            }
        }
    }
}
