//! The twelve initial-repetition partition functions `c1..c12`.
//!
//! Each function is defined twice, deliberately:
//!
//! - a generating-function spec (prefactor plus sum-term families), expanded
//!   through the series builders — the authoritative pipeline;
//! - a per-part multiplicity table driving an independent backtracking
//!   enumerator (see [`enumerate`]) — the combinatorial oracle.
//!
//! The counting unit is the pair `(j, partition)` where `j` is the summation
//! index of the generating function: a partition admissible at several `j`
//! contributes once per index, which is exactly what the series coefficients
//! count. Claimed parity characterizations and mod-2 congruences are wired
//! into each definition for the theorem suite.

mod enumerate;

pub use enumerate::{
    bruteforce_count, bruteforce_list, restriction_predicate, EnumeratedPairs, PartitionInstance,
    DEFAULT_ORACLE_BOUND,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::builders::{
    build_slater_sum, Affine, Expr, FactorCount, FactorSpec, GFTermSpec, Position, ProductSpec,
    Quadratic,
};
use crate::parity::{CongruenceClaim, JDomain, QuadraticFamily};
use crate::series::{ParitySeries, Series, Sign};

/// Identifier of one of the twelve partition functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PartitionId {
    #[serde(rename = "c1")]
    C1,
    #[serde(rename = "c2")]
    C2,
    #[serde(rename = "c3")]
    C3,
    #[serde(rename = "c4")]
    C4,
    #[serde(rename = "c5")]
    C5,
    #[serde(rename = "c6")]
    C6,
    #[serde(rename = "c7")]
    C7,
    #[serde(rename = "c8")]
    C8,
    #[serde(rename = "c9")]
    C9,
    #[serde(rename = "c10")]
    C10,
    #[serde(rename = "c11")]
    C11,
    #[serde(rename = "c12")]
    C12,
}

impl PartitionId {
    pub const ALL: [PartitionId; 12] = [
        PartitionId::C1,
        PartitionId::C2,
        PartitionId::C3,
        PartitionId::C4,
        PartitionId::C5,
        PartitionId::C6,
        PartitionId::C7,
        PartitionId::C8,
        PartitionId::C9,
        PartitionId::C10,
        PartitionId::C11,
        PartitionId::C12,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PartitionId::C1 => "c1",
            PartitionId::C2 => "c2",
            PartitionId::C3 => "c3",
            PartitionId::C4 => "c4",
            PartitionId::C5 => "c5",
            PartitionId::C6 => "c6",
            PartitionId::C7 => "c7",
            PartitionId::C8 => "c8",
            PartitionId::C9 => "c9",
            PartitionId::C10 => "c10",
            PartitionId::C11 => "c11",
            PartitionId::C12 => "c12",
        }
    }
}

impl fmt::Display for PartitionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for PartitionId {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PartitionId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| PartitionError::UnknownId { given: s.to_string() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    UnknownId { given: String },
    BeyondOracleBound { n: usize, bound: usize },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::UnknownId { given } => {
                write!(f, "unknown partition function '{given}' (known: c1..c12)")
            }
            PartitionError::BeyondOracleBound { n, bound } => {
                write!(f, "n={n} exceeds the enumeration bound {bound}")
            }
        }
    }
}

impl std::error::Error for PartitionError {}

/// A parity-support statement: the odd coefficients of the series (or of one
/// arithmetic sub-progression of it) are exactly a union of quadratic families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCharacterization {
    /// `Some((m, r))` restricts the statement to coefficients `c(m*n + r)`,
    /// reindexed by `n`; `None` speaks about the whole series.
    pub progression: Option<(usize, usize)>,
    pub families: Vec<QuadraticFamily>,
}

/// Full record for one partition function.
#[derive(Debug, Clone)]
pub struct PartitionDef {
    pub id: PartitionId,
    /// Prose summary of the counted class at index j (the GF-faithful reading).
    pub restriction: &'static str,
    pub prefactor: ProductSpec,
    pub terms: Vec<GFTermSpec>,
    pub characterizations: Vec<ParityCharacterization>,
    pub congruences: Vec<CongruenceClaim>,
}

const INF: FactorCount = FactorCount::Infinite;

fn upto(slope: i64, intercept: i64) -> FactorCount {
    FactorCount::Bounded(Affine::new(slope, intercept))
}

fn num(sign: Sign, first: Affine, step: i64, count: FactorCount) -> FactorSpec {
    FactorSpec::new(sign, first, step, count, Position::Numerator)
}

fn den(sign: Sign, first: Affine, step: i64, count: FactorCount) -> FactorSpec {
    FactorSpec::new(sign, first, step, count, Position::Denominator)
}

fn aff(slope: i64, intercept: i64) -> Affine {
    Affine::new(slope, intercept)
}

fn k(value: i64) -> Affine {
    Affine::constant(value)
}

fn quad(a: i64, b: i64, c: i64) -> Quadratic {
    Quadratic::new(a, b, c)
}

fn whole(families: Vec<QuadraticFamily>) -> ParityCharacterization {
    ParityCharacterization {
        progression: None,
        families,
    }
}

fn branch(modulus: usize, residue: usize, family: QuadraticFamily) -> ParityCharacterization {
    ParityCharacterization {
        progression: Some((modulus, residue)),
        families: vec![family],
    }
}

/// The generating-function spec of one function: `(prefactor, term families)`.
pub fn gf_spec(id: PartitionId) -> (ProductSpec, Vec<GFTermSpec>) {
    use Sign::{Minus, Plus};
    let terms = match id {
        // sum q^(4n^2-2n) / (q;q)_{2n} * (-q^{2n+1};q)_inf
        PartitionId::C1 => vec![GFTermSpec::new(
            0,
            quad(4, -2, 0),
            vec![
                den(Minus, k(1), 1, upto(2, 0)),
                num(Plus, aff(2, 1), 1, INF),
            ],
        )],
        // sum_{n>=1} q^(n^2) (-q^{2n+2};q^2)_inf / (q^{2n+1};q^2)_inf
        PartitionId::C2 => vec![GFTermSpec::new(
            1,
            quad(1, 0, 0),
            vec![
                den(Minus, aff(2, 1), 2, INF),
                num(Plus, aff(2, 2), 2, INF),
            ],
        )],
        // sum_{n>=1} q^(n^2) (1+q) (-q^3;q^2)_inf (-q^2;q^2)_n (-q^{4n+4};q^4)_inf
        PartitionId::C3 => vec![GFTermSpec::new(
            1,
            quad(1, 0, 0),
            vec![
                num(Plus, k(1), 1, upto(0, 1)),
                num(Plus, k(3), 2, INF),
                num(Plus, k(2), 2, upto(1, 0)),
                num(Plus, aff(4, 4), 4, INF),
            ],
        )],
        // sum q^(2n(n+1)) (-q;q^2)_n (-q^{4n+2};q^2)_inf
        PartitionId::C4 => vec![GFTermSpec::new(
            0,
            quad(2, 2, 0),
            vec![
                num(Plus, k(1), 2, upto(1, 0)),
                num(Plus, aff(4, 2), 2, INF),
            ],
        )],
        // sum q^(2n^2) (-q;q^2)_n (-q^{4n+2};q^2)_inf
        PartitionId::C5 => vec![GFTermSpec::new(
            0,
            quad(2, 0, 0),
            vec![
                num(Plus, k(1), 2, upto(1, 0)),
                num(Plus, aff(4, 2), 2, INF),
            ],
        )],
        // sum q^(2n(n+1)) (-q;q^2)_n / (1-q^{2n+1}) * (-q^{4n+2};q^2)_inf
        PartitionId::C6 => vec![GFTermSpec::new(
            0,
            quad(2, 2, 0),
            vec![
                num(Plus, k(1), 2, upto(1, 0)),
                den(Minus, aff(2, 1), 1, upto(0, 1)),
                num(Plus, aff(4, 2), 2, INF),
            ],
        )],
        // sum q^(2n(n+1)) (-q^2;q^4)_inf / (1-q^{2n+1}) * (-q^{4n+4};q^4)_inf
        PartitionId::C7 => vec![GFTermSpec::new(
            0,
            quad(2, 2, 0),
            vec![
                num(Plus, k(2), 4, INF),
                den(Minus, aff(2, 1), 1, upto(0, 1)),
                num(Plus, aff(4, 4), 4, INF),
            ],
        )],
        // sum q^(n^2) (-q;q)_n (-q^{2n+2};q^2)_inf
        PartitionId::C8 => vec![GFTermSpec::new(
            0,
            quad(1, 0, 0),
            vec![
                num(Plus, k(1), 1, upto(1, 0)),
                num(Plus, aff(2, 2), 2, INF),
            ],
        )],
        // (-q^2;q)_inf + sum_{n>=2} q^(n^2) (-q^{n+1};q)_inf
        PartitionId::C9 => vec![
            GFTermSpec::new(0, quad(0, 0, 0), vec![num(Plus, k(2), 1, INF)]).with_end(0),
            GFTermSpec::new(2, quad(1, 0, 0), vec![num(Plus, aff(1, 1), 1, INF)]),
        ],
        // sum q^(n(n+1)) (-q;q^2)_inf (-q^{2n+2};q^2)_inf
        PartitionId::C10 => vec![GFTermSpec::new(
            0,
            quad(1, 1, 0),
            vec![
                num(Plus, k(1), 2, INF),
                num(Plus, aff(2, 2), 2, INF),
            ],
        )],
        // sum_{n>=1} q^(n^2) (-q^{2n+2};q^2)_inf / (q;q^2)_inf
        PartitionId::C11 => vec![GFTermSpec::new(
            1,
            quad(1, 0, 0),
            vec![
                den(Minus, k(1), 2, INF),
                num(Plus, aff(2, 2), 2, INF),
            ],
        )],
        // sum q^(n(n+2)) (-q;q^2)_inf (-q^{2n+4};q^2)_inf
        PartitionId::C12 => vec![GFTermSpec::new(
            0,
            quad(1, 2, 0),
            vec![
                num(Plus, k(1), 2, INF),
                num(Plus, aff(2, 4), 2, INF),
            ],
        )],
    };
    (ProductSpec::empty(), terms)
}

/// The constant registry of all twelve definitions.
pub fn definitions() -> Vec<PartitionDef> {
    PartitionId::ALL.into_iter().map(definition).collect()
}

/// One definition, with characterizations and congruence claims wired in.
pub fn definition(id: PartitionId) -> PartitionDef {
    use JDomain::{AllIntegers, NonNegative, Positive};
    let (prefactor, terms) = gf_spec(id);
    let (restriction, characterizations, congruences): (
        &'static str,
        Vec<ParityCharacterization>,
        Vec<CongruenceClaim>,
    ) = match id {
        PartitionId::C1 => (
            "parts 1..2j-1 appear at least twice, part 2j is unrestricted, parts above 2j are distinct (j=0: all distinct)",
            vec![whole(vec![QuadraticFamily::new(1, 1, 0, 2, NonNegative)])],
            vec![],
        ),
        PartitionId::C2 => (
            "odd parts 1..2j-1 appear exactly once, odd parts >= 2j+1 are unrestricted, even parts are distinct and >= 2j+2 (j >= 1)",
            vec![],
            vec![CongruenceClaim::new(5, 2)],
        ),
        PartitionId::C3 => (
            "1 appears j^2 or j^2+1 times, odd parts >= 3 are distinct, even parts <= 2j are distinct, other even parts are distinct multiples of 4 of size >= 4j+4 (j >= 1)",
            vec![
                branch(5, 1, QuadraticFamily::new(1, 1, -2, 10, Positive).with_filter(5, &[1, 3])),
                branch(5, 2, QuadraticFamily::new(75, 125, 50, 5, AllIntegers)),
                branch(5, 3, QuadraticFamily::new(25, 25, 0, 10, NonNegative)),
                branch(5, 4, QuadraticFamily::new(3, 1, -4, 5, AllIntegers).with_filter(5, &[1, 2])),
            ],
            vec![
                CongruenceClaim::new(11, 5),
                CongruenceClaim::new(11, 7),
                CongruenceClaim::new(11, 9),
            ],
        ),
        PartitionId::C4 => (
            "even parts 2..2j appear exactly twice, odd parts < 2j are distinct, even parts above 2j are distinct and >= 4j+2, nothing else",
            vec![whole(vec![QuadraticFamily::new(7, 3, 0, 2, AllIntegers)])],
            vec![],
        ),
        PartitionId::C5 => (
            "odd parts 1..2j-1 appear twice or thrice, even parts are distinct and >= 4j+2, nothing else",
            vec![whole(vec![QuadraticFamily::new(7, 1, 0, 2, AllIntegers)])],
            vec![],
        ),
        PartitionId::C6 => (
            "even parts 2..2j appear exactly twice, odd parts < 2j are distinct, part 2j+1 is unrestricted, even parts above 2j are distinct and >= 4j+2",
            vec![whole(vec![QuadraticFamily::new(7, 5, 0, 2, AllIntegers)])],
            vec![],
        ),
        PartitionId::C7 => (
            "even parts 2..2j appear twice (multiples of 4) or twice/thrice (2 mod 4), other 2 mod 4 parts are distinct, part 2j+1 is unrestricted, multiples of 4 above 2j are distinct and >= 4j+4",
            vec![whole(vec![QuadraticFamily::new(3, 2, 0, 1, AllIntegers)])],
            vec![],
        ),
        PartitionId::C8 => (
            "odd parts 1..2j-1 appear once, with one optional extra copy of each part in 1..j, even parts above j are distinct and >= 2j+2, even parts <= j are distinct",
            vec![],
            vec![
                CongruenceClaim::new(49, 6),
                CongruenceClaim::new(49, 20),
                CongruenceClaim::new(49, 27),
                CongruenceClaim::new(49, 34),
                CongruenceClaim::new(49, 41),
                CongruenceClaim::new(49, 48),
            ],
        ),
        PartitionId::C9 => (
            "j=0: distinct parts >= 2; j>=2: 1 appears exactly j^2 times and parts above 1 are distinct and >= j+1",
            vec![whole(vec![QuadraticFamily::new(5, 1, 0, 2, AllIntegers)])],
            vec![],
        ),
        PartitionId::C10 => (
            "parts 1..j appear twice, plus one optional extra copy of any odd part (third copy below j, first copy above), even parts above j are distinct and >= 2j+2",
            vec![whole(vec![QuadraticFamily::new(2, 1, 0, 1, AllIntegers)])],
            vec![],
        ),
        PartitionId::C11 => (
            "odd parts 1..2j-1 appear at least once, other odd parts unrestricted, even parts are distinct and >= 2j+2 (j >= 1)",
            vec![],
            vec![
                CongruenceClaim::new(11, 5),
                CongruenceClaim::new(11, 7),
                CongruenceClaim::new(11, 9),
            ],
        ),
        PartitionId::C12 => (
            "parts 1..j-1 appear twice and j thrice, plus one optional extra copy of any odd part, even parts above j are distinct and >= 2j+4",
            vec![whole(vec![QuadraticFamily::new(6, 4, 0, 1, AllIntegers)])],
            vec![CongruenceClaim::new(2, 1)],
        ),
    };
    PartitionDef {
        id,
        restriction,
        prefactor,
        terms,
        characterizations,
        congruences,
    }
}

/// The generating function as a builder expression (for the identity catalog).
pub fn gf_expr(id: PartitionId) -> Expr {
    let (prefactor, terms) = gf_spec(id);
    Expr::Sum { prefactor, terms }
}

/// Exact coefficients of the generating function up to `order`.
pub fn gf_series(id: PartitionId, order: usize) -> Series {
    let (prefactor, terms) = gf_spec(id);
    build_slater_sum(&prefactor, &terms, order).expect("partition GF specs are valid")
}

/// Mod-2 coefficients of the generating function up to `order`, computed on
/// the bit-packed fast path.
pub fn gf_parity(id: PartitionId, order: usize) -> ParitySeries {
    let (prefactor, terms) = gf_spec(id);
    build_slater_sum(&prefactor, &terms, order).expect("partition GF specs are valid")
}
