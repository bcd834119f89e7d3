//! The identity catalog: every product/sum identity the verification suite
//! rests on, as pairs of builder expressions with a stable id.
//!
//! Entries come in two modes. `Exact` entries assert coefficientwise equality
//! of the two sides over the integers; `Mod2` entries assert equality after
//! reduction, which is how the congruence chains use them. Ids follow the
//! scheme `jtp.p<P>r<r>`, `slater.eq<k>`, and `step.<function>.<name>`.

use std::fmt;
use std::time::Instant;

use super::{
    theta_product_spec, Affine, Expr, FactorCount, FactorSpec, GFTermSpec, Position, ProductSpec,
    Quadratic, SignRule, ThetaMode, ThetaSpec,
};
use crate::partitions::{gf_expr, PartitionId};
use crate::report::VerificationReport;
use crate::series::{ParitySeries, Series, Sign};

/// Comparison mode of a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Mod2,
}

/// One verifiable identity.
#[derive(Debug, Clone)]
pub struct IdentityEntry {
    pub id: &'static str,
    /// Alternative stable names accepted by lookup.
    pub aliases: &'static [&'static str],
    pub mode: Mode,
    pub lhs: Expr,
    pub rhs: Expr,
    /// Short provenance note for listings.
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    UnknownIdentity { given: String },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownIdentity { given } => {
                write!(f, "unknown identity '{given}'")
            }
        }
    }
}

impl std::error::Error for CatalogError {}

const INF: FactorCount = FactorCount::Infinite;

fn upto(slope: i64, intercept: i64) -> FactorCount {
    FactorCount::Bounded(Affine::new(slope, intercept))
}

fn num(sign: Sign, first: i64, step: i64, count: FactorCount) -> FactorSpec {
    FactorSpec::new(sign, Affine::constant(first), step, count, Position::Numerator)
}

fn den(sign: Sign, first: i64, step: i64, count: FactorCount) -> FactorSpec {
    FactorSpec::new(sign, Affine::constant(first), step, count, Position::Denominator)
}

fn num_aff(sign: Sign, first: Affine, step: i64, count: FactorCount) -> FactorSpec {
    FactorSpec::new(sign, first, step, count, Position::Numerator)
}

fn den_aff(sign: Sign, first: Affine, step: i64, count: FactorCount) -> FactorSpec {
    FactorSpec::new(sign, first, step, count, Position::Denominator)
}

fn product(factors: Vec<FactorSpec>) -> Expr {
    Expr::Product(ProductSpec::new(factors).expect("catalog products are index-free"))
}

fn slater(prefactor: Vec<FactorSpec>, terms: Vec<GFTermSpec>) -> Expr {
    Expr::Sum {
        prefactor: ProductSpec::new(prefactor).expect("catalog prefactors are index-free"),
        terms,
    }
}

fn term(n_start: i64, lead: Quadratic, factors: Vec<FactorSpec>) -> GFTermSpec {
    GFTermSpec::new(n_start, lead, factors)
}

fn plain_theta(p: i64, r: i64) -> Expr {
    Expr::Theta(ThetaSpec::plain(p, r).expect("catalog theta parameters are valid"))
}

fn triple_product(p: i64, r: i64, mode: ThetaMode) -> Expr {
    Expr::Product(theta_product_spec(p, r, mode).expect("catalog theta parameters are valid"))
}

/// `(q;q)_inf^3`, the cube of the Euler product.
fn euler_cube() -> Expr {
    product(vec![
        num(Sign::Minus, 1, 1, INF),
        num(Sign::Minus, 1, 1, INF),
        num(Sign::Minus, 1, 1, INF),
    ])
}

fn jtp_entry(p: i64, r: i64, id: &'static str, note: &'static str) -> IdentityEntry {
    IdentityEntry {
        id,
        aliases: &[],
        mode: Mode::Exact,
        lhs: plain_theta(p, r),
        rhs: triple_product(p, r, ThetaMode::Plain),
        note,
    }
}

/// The full catalog, in verification order.
pub fn identity_catalog() -> Vec<IdentityEntry> {
    use Sign::{Minus, Plus};
    let q = Quadratic::new;

    let mut entries = vec![
        jtp_entry(3, 1, "jtp.p3r1", "pentagonal-exponent theta vs triple product"),
        jtp_entry(4, 1, "jtp.p4r1", "exponents 2n^2+n"),
        jtp_entry(5, 2, "jtp.p5r2", "exponents (5n^2+n)/2"),
        jtp_entry(6, 1, "jtp.p6r1", "exponents 3n^2+2n"),
        jtp_entry(6, 2, "jtp.p6r2", "exponents 3n^2+n"),
        jtp_entry(7, 1, "jtp.p7r1", "exponents (7n^2+5n)/2"),
        jtp_entry(7, 2, "jtp.p7r2", "exponents (7n^2+3n)/2"),
        jtp_entry(7, 3, "jtp.p7r3", "exponents (7n^2+n)/2"),
        jtp_entry(8, 3, "jtp.p8r3", "exponents 4n^2+n"),
        jtp_entry(12, 2, "jtp.p12r2", "exponents 6n^2+4n"),
        // sum (-1)^n q^(n^2) = (q;q)_inf / (-q;q)_inf
        IdentityEntry {
            id: "gauss",
            aliases: &["eq3"],
            mode: Mode::Exact,
            lhs: Expr::Theta(ThetaSpec::alternating(2, 1).expect("valid")),
            rhs: product(vec![num(Minus, 1, 1, INF), den(Plus, 1, 1, INF)]),
            note: "alternating square-exponent theta as a product quotient",
        },
        // sum q^(4n^2-2n) / ((q^4;q^4)_n (q^2;q^4)_n) = prod 1/(1-q^(4n+2)):
        // the z = q^2, base q^4 specialization of the geometric q-sum
        IdentityEntry {
            id: "cauchy",
            aliases: &["cauchy.z-q2-base-q4", "eq2", "eq4"],
            mode: Mode::Exact,
            lhs: slater(
                vec![],
                vec![term(
                    0,
                    q(4, -2, 0),
                    vec![
                        den_aff(Minus, Affine::constant(4), 4, upto(1, 0)),
                        den_aff(Minus, Affine::constant(2), 4, upto(1, 0)),
                    ],
                )],
            ),
            rhs: product(vec![den(Minus, 2, 4, INF)]),
            note: "one identity answering to several catalog labels",
        },
        // sum_{n>=0} (-1)^n (2n+1) q^(n(n+1)/2) = (q;q)_inf^3
        IdentityEntry {
            id: "cube",
            aliases: &["eq5"],
            mode: Mode::Exact,
            lhs: Expr::Theta(ThetaSpec::CubeWeighted),
            rhs: euler_cube(),
            note: "odd-weight triangular theta equals the Euler product cubed",
        },
        IdentityEntry {
            id: "slater.eq7",
            aliases: &["eq7"],
            mode: Mode::Exact,
            lhs: slater(
                vec![num(Minus, 1, 1, INF)],
                vec![term(0, q(1, 1, 0), vec![den(Minus, 2, 2, upto(1, 0))])],
            ),
            rhs: product(vec![
                num(Minus, 4, 4, INF),
                num(Minus, 3, 4, INF),
                num(Minus, 1, 4, INF),
            ]),
            note: "mod-4 triple product",
        },
        IdentityEntry {
            id: "slater.eq18",
            aliases: &["eq18"],
            mode: Mode::Exact,
            lhs: slater(
                vec![num(Minus, 1, 1, INF)],
                vec![term(0, q(1, 0, 0), vec![den(Minus, 1, 1, upto(1, 0))])],
            ),
            rhs: product(vec![
                num(Minus, 5, 5, INF),
                num(Minus, 3, 5, INF),
                num(Minus, 2, 5, INF),
            ]),
            note: "first Rogers-Ramanujan sum times the Euler product",
        },
        IdentityEntry {
            id: "slater.eq23",
            aliases: &["eq23"],
            mode: Mode::Exact,
            lhs: slater(
                vec![num(Minus, 2, 2, INF), den(Minus, 1, 2, INF)],
                vec![term(0, q(1, 0, 0), vec![den(Minus, 2, 2, upto(1, 0))])
                    .with_sign(SignRule::AlternatingInN)],
            ),
            rhs: product(vec![
                num(Minus, 6, 6, INF),
                num(Minus, 4, 6, INF),
                num(Minus, 2, 6, INF),
            ]),
            note: "alternating sum, mod-6 triple product on even residues",
        },
        IdentityEntry {
            id: "slater.eq27",
            aliases: &["eq27"],
            mode: Mode::Exact,
            lhs: slater(
                vec![num(Minus, 2, 2, INF)],
                vec![term(
                    0,
                    q(2, 2, 0),
                    vec![
                        num_aff(Plus, Affine::constant(1), 2, upto(1, 0)),
                        den_aff(Minus, Affine::constant(1), 2, upto(1, 1)),
                        den_aff(Minus, Affine::constant(4), 4, upto(1, 0)),
                    ],
                )],
            ),
            rhs: product(vec![
                num(Minus, 6, 6, INF),
                num(Plus, 5, 6, INF),
                num(Plus, 1, 6, INF),
            ]),
            note: "mod-6 triple product with plus signs off the lattice",
        },
        IdentityEntry {
            id: "slater.eq29",
            aliases: &["eq29"],
            mode: Mode::Exact,
            lhs: slater(
                vec![num(Minus, 2, 2, INF), den(Plus, 1, 2, INF)],
                vec![term(
                    0,
                    q(1, 0, 0),
                    vec![
                        num_aff(Plus, Affine::constant(1), 2, upto(1, 0)),
                        den_aff(Minus, Affine::constant(1), 1, upto(2, 0)),
                    ],
                )],
            ),
            rhs: product(vec![
                num(Minus, 6, 6, INF),
                num(Plus, 4, 6, INF),
                num(Plus, 2, 6, INF),
            ]),
            note: "mod-6 triple product with plus signs on even residues",
        },
        IdentityEntry {
            id: "slater.eq31",
            aliases: &["eq31"],
            mode: Mode::Exact,
            lhs: slater(
                vec![num(Minus, 2, 2, INF)],
                vec![term(
                    0,
                    q(2, 2, 0),
                    vec![
                        den_aff(Minus, Affine::constant(2), 2, upto(1, 0)),
                        den_aff(Plus, Affine::constant(1), 1, upto(2, 1)),
                    ],
                )],
            ),
            rhs: product(vec![
                num(Minus, 7, 7, INF),
                num(Minus, 6, 7, INF),
                num(Minus, 1, 7, INF),
            ]),
            note: "mod-7 triple product, residues 1 and 6",
        },
        IdentityEntry {
            id: "slater.eq32",
            aliases: &["eq32"],
            mode: Mode::Exact,
            lhs: slater(
                vec![num(Minus, 2, 2, INF)],
                vec![term(
                    0,
                    q(2, 2, 0),
                    vec![
                        den_aff(Minus, Affine::constant(2), 2, upto(1, 0)),
                        den_aff(Plus, Affine::constant(1), 1, upto(2, 0)),
                    ],
                )],
            ),
            rhs: product(vec![
                num(Minus, 7, 7, INF),
                num(Minus, 5, 7, INF),
                num(Minus, 2, 7, INF),
            ]),
            note: "mod-7 triple product, residues 2 and 5",
        },
        IdentityEntry {
            id: "slater.eq33",
            aliases: &["eq33"],
            mode: Mode::Exact,
            lhs: slater(
                vec![num(Minus, 2, 2, INF)],
                vec![term(
                    0,
                    q(2, 0, 0),
                    vec![
                        den_aff(Minus, Affine::constant(2), 2, upto(1, 0)),
                        den_aff(Plus, Affine::constant(1), 1, upto(2, 0)),
                    ],
                )],
            ),
            rhs: product(vec![
                num(Minus, 7, 7, INF),
                num(Minus, 4, 7, INF),
                num(Minus, 3, 7, INF),
            ]),
            note: "mod-7 triple product, residues 3 and 4",
        },
        // prefactor (q^2;q^2)_inf / (-q;q^2)_inf: the denominator runs over
        // all odd exponents; starting it at 1+q^3 breaks equality at q^1
        IdentityEntry {
            id: "slater.eq36",
            aliases: &["eq36"],
            mode: Mode::Exact,
            lhs: slater(
                vec![num(Minus, 2, 2, INF), den(Plus, 1, 2, INF)],
                vec![term(
                    0,
                    q(1, 0, 0),
                    vec![
                        num_aff(Plus, Affine::constant(1), 2, upto(1, 0)),
                        den_aff(Minus, Affine::constant(2), 2, upto(1, 0)),
                    ],
                )],
            ),
            rhs: product(vec![
                num(Minus, 8, 8, INF),
                num(Minus, 5, 8, INF),
                num(Minus, 3, 8, INF),
            ]),
            note: "mod-8 triple product, residues 3 and 5",
        },
        IdentityEntry {
            id: "slater.eq50",
            aliases: &["eq50"],
            mode: Mode::Exact,
            lhs: slater(
                vec![num(Minus, 1, 1, INF)],
                vec![term(
                    0,
                    q(1, 2, 0),
                    vec![
                        num_aff(Plus, Affine::constant(1), 2, upto(1, 0)),
                        den_aff(Minus, Affine::constant(1), 1, upto(2, 1)),
                    ],
                )],
            ),
            rhs: product(vec![
                num(Minus, 12, 12, INF),
                num(Minus, 10, 12, INF),
                num(Minus, 2, 12, INF),
            ]),
            note: "mod-12 triple product, residues 2 and 10",
        },
        // (q^4;q^4)_inf / (q;q)_inf = (q;q)_inf^3 mod 2
        IdentityEntry {
            id: "step.c1.quotient-cube",
            aliases: &[],
            mode: Mode::Mod2,
            lhs: product(vec![num(Minus, 4, 4, INF), den(Minus, 1, 1, INF)]),
            rhs: euler_cube(),
            note: "fourth-power collapse of the Euler product mod 2",
        },
        // (q;q)_inf^3 has triangular-number support mod 2
        IdentityEntry {
            id: "step.c1.cube-triangular",
            aliases: &[],
            mode: Mode::Mod2,
            lhs: euler_cube(),
            rhs: Expr::Theta(ThetaSpec::CubeWeighted),
            note: "cube identity read mod 2",
        },
        // gf(c2) = theta(8,3) + triangular theta mod 2
        IdentityEntry {
            id: "step.c2.theta-split",
            aliases: &[],
            mode: Mode::Mod2,
            lhs: gf_expr(PartitionId::C2),
            rhs: Expr::add(plain_theta(8, 3), Expr::Theta(ThetaSpec::CubeWeighted)),
            note: "c2 chain endpoint: exponents 4n^2+n and n(n+1)/2",
        },
        // gf(c3) = theta(6,2) + triangular theta mod 2
        IdentityEntry {
            id: "step.c3.theta-split",
            aliases: &[],
            mode: Mode::Mod2,
            lhs: gf_expr(PartitionId::C3),
            rhs: Expr::add(plain_theta(6, 2), Expr::Theta(ThetaSpec::CubeWeighted)),
            note: "c3 chain endpoint: exponents n(3n+1) and n(n+1)/2",
        },
        // gf(c8) = theta(3,1) * theta(5,2) mod 2
        IdentityEntry {
            id: "step.c8.pentagonal-split",
            aliases: &[],
            mode: Mode::Mod2,
            lhs: gf_expr(PartitionId::C8),
            rhs: Expr::mul(plain_theta(3, 1), plain_theta(5, 2)),
            note: "c8 chain endpoint: pentagonal times (5n^2+n)/2 exponents",
        },
    ];
    entries.shrink_to_fit();
    entries
}

/// Look up an entry by id or alias.
pub fn find_identity(id: &str) -> Result<IdentityEntry, CatalogError> {
    identity_catalog()
        .into_iter()
        .find(|e| e.id == id || e.aliases.contains(&id))
        .ok_or_else(|| CatalogError::UnknownIdentity {
            given: id.to_string(),
        })
}

/// All catalog ids, in verification order.
pub fn identity_ids() -> Vec<&'static str> {
    identity_catalog().iter().map(|e| e.id).collect()
}

/// Build both sides of an entry at `order` and compare them coefficientwise
/// (after mod-2 reduction for `Mod2` entries). The report carries the
/// smallest mismatching exponent on failure.
pub fn verify_identity(id: &str, order: usize) -> Result<VerificationReport, CatalogError> {
    let entry = find_identity(id)?;
    let started = Instant::now();
    let first_failure = verify_entry(&entry, order);
    Ok(VerificationReport::new(entry.id, order, first_failure).with_elapsed(started.elapsed()))
}

/// Compare the two sides of an entry; `None` means they agree up to `order`.
pub fn verify_entry(entry: &IdentityEntry, order: usize) -> Option<usize> {
    match entry.mode {
        Mode::Exact => {
            let lhs: Series = entry.lhs.eval(order).expect("catalog entries expand cleanly");
            let rhs: Series = entry.rhs.eval(order).expect("catalog entries expand cleanly");
            lhs.first_difference(&rhs).expect("orders match")
        }
        Mode::Mod2 => {
            let lhs: ParitySeries = entry.lhs.eval(order).expect("catalog entries expand cleanly");
            let rhs: ParitySeries = entry.rhs.eval(order).expect("catalog entries expand cleanly");
            lhs.first_difference(&rhs).expect("orders match")
        }
    }
}
