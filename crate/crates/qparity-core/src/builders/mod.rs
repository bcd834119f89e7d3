//! Declarative construction of Pochhammer products, theta series, and
//! Rogers-Ramanujan-type q-sums.
//!
//! Everything here is driven by small spec structs:
//!
//! - [`FactorSpec`]: one stream of binomials `(1 + sign*q^(first + k*step))`,
//!   in the numerator or denominator, with finite or infinite count; the
//!   `first` exponent and the count may be affine in an outer summation index.
//! - [`ProductSpec`]: a product of index-free factor streams.
//! - [`ThetaSpec`]: a two-parameter family of theta sums
//!   `sum_{n in Z} q^((P*n^2 + (P-2r)*n)/2)`, optionally with alternating
//!   signs, plus the cube-weighted sum `sum_{n>=0} (-1)^n (2n+1) q^(n(n+1)/2)`.
//! - [`GFTermSpec`]: one summand family `sign(n) * q^(e(n)) * factors(n)` with
//!   a quadratic lead exponent, as appears on the sum side of the identities.
//!
//! Builders expand any spec exactly at a caller-chosen truncation order, into
//! either coefficient ring (see [`SeriesRing`]).

pub mod catalog;
mod expr;

pub use expr::Expr;

use std::fmt;

use crate::series::{SeriesRing, Sign};

/// An affine form `slope * n + intercept` in the outer summation index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    pub slope: i64,
    pub intercept: i64,
}

impl Affine {
    pub const fn new(slope: i64, intercept: i64) -> Affine {
        Affine { slope, intercept }
    }

    pub const fn constant(value: i64) -> Affine {
        Affine::new(0, value)
    }

    pub fn eval(&self, n: i64) -> i64 {
        self.slope * n + self.intercept
    }

    pub fn is_constant(&self) -> bool {
        self.slope == 0
    }
}

/// A quadratic form `a*n^2 + b*n + c`, the lead exponent of a sum term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadratic {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Quadratic {
    pub const fn new(a: i64, b: i64, c: i64) -> Quadratic {
        Quadratic { a, b, c }
    }

    pub fn eval(&self, n: i64) -> i64 {
        self.a * n * n + self.b * n + self.c
    }

    /// True once the form is nondecreasing at `n` and stays so for larger `n`.
    fn increasing_at(&self, n: i64) -> bool {
        // e(n+1) - e(n) = a*(2n+1) + b
        self.a * (2 * n + 1) + self.b >= 0
    }
}

/// How many binomials a factor stream contributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorCount {
    /// All binomials with exponent up to the truncation order.
    Infinite,
    /// Exactly `slope * n + intercept` binomials (evaluated at the outer index).
    Bounded(Affine),
}

/// Whether a factor stream multiplies or divides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Numerator,
    Denominator,
}

/// One q-Pochhammer-style stream of binomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSpec {
    pub sign: Sign,
    pub first: Affine,
    pub step: i64,
    pub count: FactorCount,
    pub position: Position,
}

impl FactorSpec {
    pub const fn new(
        sign: Sign,
        first: Affine,
        step: i64,
        count: FactorCount,
        position: Position,
    ) -> FactorSpec {
        FactorSpec {
            sign,
            first,
            step,
            count,
            position,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.first.is_constant()
            && match self.count {
                FactorCount::Infinite => true,
                FactorCount::Bounded(a) => a.is_constant(),
            }
    }

    /// Fold this stream, evaluated at outer index `n`, into `acc`.
    fn apply<R: SeriesRing>(&self, n: i64, acc: &mut R) -> Result<(), BuildError> {
        if self.step < 1 {
            return Err(BuildError::InvalidStep { step: self.step });
        }
        let order = acc.order() as i64;
        let first = self.first.eval(n);
        let count = match self.count {
            FactorCount::Infinite => None,
            FactorCount::Bounded(a) => {
                let c = a.eval(n);
                if c < 0 {
                    return Err(BuildError::NegativeFactorCount { count: c });
                }
                Some(c)
            }
        };
        if count == Some(0) {
            return Ok(()); // empty Pochhammer symbol
        }
        if first < 1 {
            return Err(BuildError::ExponentBelowOne { exponent: first });
        }
        let mut k = 0;
        loop {
            if let Some(c) = count {
                if k >= c {
                    break;
                }
            }
            let e = first + k * self.step;
            if e > order {
                break; // remaining binomials are invisible at this order
            }
            match self.position {
                Position::Numerator => acc.mul_binomial_assign(self.sign, e as usize),
                Position::Denominator => acc.div_binomial_assign(self.sign, e as usize),
            }
            k += 1;
        }
        Ok(())
    }
}

/// A product of factor streams with no outer index: the right-hand sides and
/// prefactors of the identity catalog.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProductSpec {
    factors: Vec<FactorSpec>,
}

impl ProductSpec {
    /// The empty product, i.e. the series 1.
    pub fn empty() -> ProductSpec {
        ProductSpec::default()
    }

    pub fn new(factors: Vec<FactorSpec>) -> Result<ProductSpec, BuildError> {
        if let Some(f) = factors.iter().find(|f| !f.is_constant()) {
            return Err(BuildError::IndexDependentProduct { first: f.first });
        }
        Ok(ProductSpec { factors })
    }

    pub fn factors(&self) -> &[FactorSpec] {
        &self.factors
    }
}

/// Theta-series shapes used by the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaSpec {
    /// `sum_{n in Z} q^((P n^2 + (P - 2r) n)/2)`, all coefficients +1.
    Plain { p: i64, r: i64 },
    /// Same exponents with sign `(-1)^n`.
    Alternating { p: i64, r: i64 },
    /// `sum_{n >= 0} (-1)^n (2n+1) q^(n(n+1)/2)`.
    CubeWeighted,
}

impl ThetaSpec {
    pub fn plain(p: i64, r: i64) -> Result<ThetaSpec, BuildError> {
        check_theta_params(p, r)?;
        Ok(ThetaSpec::Plain { p, r })
    }

    pub fn alternating(p: i64, r: i64) -> Result<ThetaSpec, BuildError> {
        check_theta_params(p, r)?;
        Ok(ThetaSpec::Alternating { p, r })
    }

    /// The exponent `(P n^2 + (P - 2r) n) / 2 = P n(n+1)/2 - r n`, integral
    /// for every integer `n`.
    fn exponent(p: i64, r: i64, n: i64) -> i64 {
        p * n * (n + 1) / 2 - r * n
    }
}

fn check_theta_params(p: i64, r: i64) -> Result<(), BuildError> {
    if p < 1 || r < 1 || r >= p {
        return Err(BuildError::ThetaResidueOutOfRange { p, r });
    }
    Ok(())
}

/// Sign pattern of a sum term family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignRule {
    Plus,
    /// `(-1)^n` in the summation index.
    AlternatingInN,
}

impl SignRule {
    fn weight(&self, n: i64) -> i64 {
        match self {
            SignRule::Plus => 1,
            SignRule::AlternatingInN => {
                if n % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// One family of summands `sign(n) q^(e(n)) * prod factors(n)` over
/// `n_start <= n <= n_end` (unbounded above when `n_end` is `None`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GFTermSpec {
    pub n_start: i64,
    pub n_end: Option<i64>,
    pub lead: Quadratic,
    pub sign_rule: SignRule,
    pub factors: Vec<FactorSpec>,
}

impl GFTermSpec {
    pub fn new(n_start: i64, lead: Quadratic, factors: Vec<FactorSpec>) -> GFTermSpec {
        GFTermSpec {
            n_start,
            n_end: None,
            lead,
            sign_rule: SignRule::Plus,
            factors,
        }
    }

    pub fn with_sign(mut self, sign_rule: SignRule) -> GFTermSpec {
        self.sign_rule = sign_rule;
        self
    }

    pub fn with_end(mut self, n_end: i64) -> GFTermSpec {
        self.n_end = Some(n_end);
        self
    }
}

/// Errors raised while expanding a spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    /// A factor evaluated to an exponent below 1.
    ExponentBelowOne { exponent: i64 },
    /// A factor stream has a nonpositive step.
    InvalidStep { step: i64 },
    /// A bounded factor count evaluated negative.
    NegativeFactorCount { count: i64 },
    /// A product spec contains an index-dependent factor.
    IndexDependentProduct { first: Affine },
    /// Theta residue outside `0 < r < P`.
    ThetaResidueOutOfRange { p: i64, r: i64 },
    /// An unbounded sum whose lead exponent never exceeds the order.
    NonTerminatingSum { lead: Quadratic },
    /// A lead exponent evaluated negative.
    NegativeLeadExponent { n: i64, exponent: i64 },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::ExponentBelowOne { exponent } => {
                write!(f, "factor exponent {exponent} is below 1")
            }
            BuildError::InvalidStep { step } => write!(f, "factor step {step} must be >= 1"),
            BuildError::NegativeFactorCount { count } => {
                write!(f, "factor count {count} is negative")
            }
            BuildError::IndexDependentProduct { first } => write!(
                f,
                "product factor depends on an outer index ({}*n + {})",
                first.slope, first.intercept
            ),
            BuildError::ThetaResidueOutOfRange { p, r } => {
                write!(f, "theta residue r={r} out of range for P={p}")
            }
            BuildError::NonTerminatingSum { lead } => write!(
                f,
                "sum with lead exponent {}n^2 + {}n + {} never terminates",
                lead.a, lead.b, lead.c
            ),
            BuildError::NegativeLeadExponent { n, exponent } => {
                write!(f, "lead exponent {exponent} at n={n} is negative")
            }
        }
    }
}

impl std::error::Error for BuildError {}

/// Expand an index-free product exactly at the given order.
pub fn build_product<R: SeriesRing>(spec: &ProductSpec, order: usize) -> Result<R, BuildError> {
    let mut acc = R::one(order);
    for factor in spec.factors() {
        factor.apply(0, &mut acc)?;
    }
    Ok(acc)
}

/// Expand a theta sum by direct summation over all indices whose exponent
/// stays within the order.
pub fn build_theta<R: SeriesRing>(spec: &ThetaSpec, order: usize) -> R {
    let mut acc = R::zero(order);
    match *spec {
        ThetaSpec::Plain { p, r } | ThetaSpec::Alternating { p, r } => {
            let alternating = matches!(spec, ThetaSpec::Alternating { .. });
            // positive and negative tails separately; each exponent is
            // eventually increasing in |n|
            for tail in [1i64, -1] {
                let mut n = if tail == 1 { 0 } else { -1 };
                loop {
                    let e = ThetaSpec::exponent(p, r, n);
                    if e > order as i64 {
                        break;
                    }
                    debug_assert!(e >= 0, "theta exponent must be nonnegative");
                    let w = if alternating && n.rem_euclid(2) == 1 {
                        -1
                    } else {
                        1
                    };
                    acc.add_term(e as usize, w);
                    n += tail;
                }
            }
        }
        ThetaSpec::CubeWeighted => {
            let mut n = 0i64;
            loop {
                let e = n * (n + 1) / 2;
                if e > order as i64 {
                    break;
                }
                let w = (2 * n + 1) * if n % 2 == 0 { 1 } else { -1 };
                acc.add_term(e as usize, w);
                n += 1;
            }
        }
    }
    acc
}

/// Sign pattern for the two off-lattice streams of a triple product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaMode {
    Plain,
    Alternating,
}

/// The Jacobi triple product expansion of the `(P, r)` theta:
/// `prod_{n>=1} (1 - q^(Pn)) (1 ± q^(Pn-r)) (1 ± q^(Pn-(P-r)))`,
/// `+` for plain and `-` for alternating.
pub fn theta_product_spec(p: i64, r: i64, mode: ThetaMode) -> Result<ProductSpec, BuildError> {
    check_theta_params(p, r)?;
    let side = match mode {
        ThetaMode::Plain => Sign::Plus,
        ThetaMode::Alternating => Sign::Minus,
    };
    ProductSpec::new(vec![
        FactorSpec::new(
            Sign::Minus,
            Affine::constant(p),
            p,
            FactorCount::Infinite,
            Position::Numerator,
        ),
        FactorSpec::new(
            side,
            Affine::constant(p - r),
            p,
            FactorCount::Infinite,
            Position::Numerator,
        ),
        FactorSpec::new(
            side,
            Affine::constant(r),
            p,
            FactorCount::Infinite,
            Position::Numerator,
        ),
    ])
}

/// Build the triple-product side of the `(P, r)` theta identity.
pub fn theta_product<R: SeriesRing>(
    p: i64,
    r: i64,
    mode: ThetaMode,
    order: usize,
) -> Result<R, BuildError> {
    build_product(&theta_product_spec(p, r, mode)?, order)
}

/// Expand `prefactor * sum of term families` at the given order. Every
/// summand is built at full order and accumulated; a term family ends when
/// its lead exponent exceeds the order while increasing, or at `n_end`.
pub fn build_slater_sum<R: SeriesRing>(
    prefactor: &ProductSpec,
    terms: &[GFTermSpec],
    order: usize,
) -> Result<R, BuildError> {
    let mut acc = R::zero(order);
    for term in terms {
        if term.n_end.is_none() && term.lead.a == 0 && term.lead.b <= 0 {
            return Err(BuildError::NonTerminatingSum { lead: term.lead });
        }
        let mut n = term.n_start;
        loop {
            if let Some(end) = term.n_end {
                if n > end {
                    break;
                }
            }
            let e = term.lead.eval(n);
            if e < 0 {
                return Err(BuildError::NegativeLeadExponent { n, exponent: e });
            }
            if e > order as i64 {
                if term.lead.increasing_at(n) {
                    break; // every later index overshoots too
                }
                n += 1;
                continue;
            }
            let mut summand = R::zero(order);
            summand.add_term(e as usize, term.sign_rule.weight(n));
            for factor in &term.factors {
                factor.apply(n, &mut summand)?;
            }
            acc.accumulate(&summand);
            n += 1;
        }
    }
    for factor in prefactor.factors() {
        factor.apply(0, &mut acc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Series;
    use num_bigint::BigInt;

    fn coeffs_i64(s: &Series) -> Vec<i64> {
        s.coefficients()
            .iter()
            .map(|c| i64::try_from(c).expect("fits i64"))
            .collect()
    }

    fn inf(sign: Sign, first: i64, step: i64, position: Position) -> FactorSpec {
        FactorSpec::new(
            sign,
            Affine::constant(first),
            step,
            FactorCount::Infinite,
            position,
        )
    }

    /// Naive polynomial oracle: expand a list of (sign, exponent) binomials
    /// by schoolbook multiplication over i64, independent of Series.
    fn naive_binomial_product(binomials: &[(i64, usize)], order: usize) -> Vec<i64> {
        let mut poly = vec![0i64; order + 1];
        poly[0] = 1;
        for &(sign, e) in binomials {
            let mut next = poly.clone();
            for (i, &c) in poly.iter().enumerate() {
                if c != 0 && i + e <= order {
                    next[i + e] += sign * c;
                }
            }
            poly = next;
        }
        poly
    }

    #[test]
    fn distinct_partitions_product() {
        let spec = ProductSpec::new(vec![inf(Sign::Plus, 1, 1, Position::Numerator)]).unwrap();
        let s: Series = build_product(&spec, 7).unwrap();
        assert_eq!(coeffs_i64(&s), vec![1, 1, 1, 2, 2, 3, 4, 5]);
    }

    #[test]
    fn euler_product_matches_naive_expansion() {
        let spec = ProductSpec::new(vec![inf(Sign::Minus, 1, 1, Position::Numerator)]).unwrap();
        let s: Series = build_product(&spec, 7).unwrap();
        let oracle: Vec<(i64, usize)> = (1..=7).map(|e| (-1i64, e)).collect();
        assert_eq!(coeffs_i64(&s), naive_binomial_product(&oracle, 7));
        assert_eq!(coeffs_i64(&s), vec![1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn empty_product_is_one() {
        let s: Series = build_product(&ProductSpec::empty(), 5).unwrap();
        assert_eq!(s, Series::one(5));
    }

    #[test]
    fn product_rejects_index_dependent_factor() {
        let err = ProductSpec::new(vec![FactorSpec::new(
            Sign::Plus,
            Affine::new(2, 1),
            1,
            FactorCount::Infinite,
            Position::Numerator,
        )])
        .unwrap_err();
        assert!(matches!(err, BuildError::IndexDependentProduct { .. }));
    }

    #[test]
    fn product_rejects_exponent_below_one() {
        let spec = ProductSpec::new(vec![inf(Sign::Minus, 0, 1, Position::Numerator)]).unwrap();
        let err = build_product::<Series>(&spec, 5).unwrap_err();
        assert!(matches!(err, BuildError::ExponentBelowOne { exponent: 0 }));
    }

    #[test]
    fn plain_theta_support() {
        // P=8, r=3: exponents 4n^2 + n at n = 0, -1, 1, -2, 2
        let spec = ThetaSpec::plain(8, 3).unwrap();
        let s: Series = build_theta(&spec, 20);
        let support: Vec<usize> = (0..=20)
            .filter(|&i| !num_traits::Zero::is_zero(s.coefficient(i).unwrap()))
            .collect();
        assert_eq!(support, vec![0, 3, 5, 14, 18]);
    }

    #[test]
    fn alternating_theta_is_gauss_series() {
        let spec = ThetaSpec::alternating(2, 1).unwrap();
        let s: Series = build_theta(&spec, 10);
        let mut expected = vec![0i64; 11];
        expected[0] = 1;
        expected[1] = -2;
        expected[4] = 2;
        expected[9] = -2;
        assert_eq!(coeffs_i64(&s), expected);
    }

    #[test]
    fn cube_weighted_theta() {
        let s: Series = build_theta(&ThetaSpec::CubeWeighted, 10);
        let mut expected = vec![0i64; 11];
        expected[0] = 1;
        expected[1] = -3;
        expected[3] = 5;
        expected[6] = -7;
        expected[10] = 9;
        assert_eq!(coeffs_i64(&s), expected);
    }

    #[test]
    fn theta_rejects_residue_out_of_range() {
        assert!(ThetaSpec::plain(8, 0).is_err());
        assert!(ThetaSpec::plain(8, 8).is_err());
        assert!(theta_product_spec(5, 5, ThetaMode::Plain).is_err());
    }

    #[test]
    fn jacobi_triple_product_at_small_order() {
        // both routes to the (8,3) theta, plus the pentagonal (3,1) case
        for (p, r) in [(8, 3), (3, 1)] {
            let sum: Series = build_theta(&ThetaSpec::plain(p, r).unwrap(), 60);
            let prod: Series = theta_product(p, r, ThetaMode::Plain, 60).unwrap();
            assert_eq!(sum, prod, "plain JTP (P={p}, r={r})");
            let sum: Series = build_theta(&ThetaSpec::alternating(p, r).unwrap(), 60);
            let prod: Series = theta_product(p, r, ThetaMode::Alternating, 60).unwrap();
            assert_eq!(sum, prod, "alternating JTP (P={p}, r={r})");
        }
    }

    #[test]
    fn gauss_identity_small_order() {
        let lhs: Series = build_theta(&ThetaSpec::alternating(2, 1).unwrap(), 40);
        let spec = ProductSpec::new(vec![
            inf(Sign::Minus, 1, 1, Position::Numerator),
            inf(Sign::Plus, 1, 1, Position::Denominator),
        ])
        .unwrap();
        let rhs: Series = build_product(&spec, 40).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unreachable_terms_leave_the_zero_series() {
        // a term family whose lead exponent starts beyond the order
        // contributes nothing, and a sum of nothing is zero
        let term = GFTermSpec::new(0, Quadratic::new(1, 0, 100), vec![]);
        let prefactor =
            ProductSpec::new(vec![inf(Sign::Plus, 1, 1, Position::Numerator)]).unwrap();
        let sum: Series = build_slater_sum(&prefactor, &[term], 7).unwrap();
        assert_eq!(sum, Series::zero(7));
    }

    #[test]
    fn sum_rejects_nonterminating_lead() {
        let term = GFTermSpec::new(0, Quadratic::new(0, 0, 0), vec![]);
        let err = build_slater_sum::<Series>(&ProductSpec::empty(), &[term], 10).unwrap_err();
        assert!(matches!(err, BuildError::NonTerminatingSum { .. }));
    }

    #[test]
    fn bounded_singleton_term() {
        // a single bounded term with constant lead exponent is allowed
        let term = GFTermSpec::new(0, Quadratic::new(0, 0, 2), vec![]).with_end(0);
        let s: Series = build_slater_sum(&ProductSpec::empty(), &[term], 10).unwrap();
        assert_eq!(s, Series::monomial(10, 2, 1).unwrap());
    }

    #[test]
    fn bounded_family_stops_once_the_lead_overshoots() {
        // an absurd n_end must not be walked index by index
        let term = GFTermSpec::new(0, Quadratic::new(1, 0, 0), vec![]).with_end(i64::MAX - 1);
        let s: Series = build_slater_sum(&ProductSpec::empty(), &[term], 16).unwrap();
        // squares up to 16: 0, 1, 4, 9, 16
        let expected = Series::make(16, &[(0, 1), (1, 1), (4, 1), (9, 1), (16, 1)]).unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn rogers_ramanujan_sum_side() {
        // sum q^(n^2) / (q;q)_n counts partitions with gaps >= 2;
        // at order 9: 1,1,1,1,2,2,3,3,4,5
        let term = GFTermSpec::new(
            0,
            Quadratic::new(1, 0, 0),
            vec![FactorSpec::new(
                Sign::Minus,
                Affine::constant(1),
                1,
                FactorCount::Bounded(Affine::new(1, 0)),
                Position::Denominator,
            )],
        );
        let s: Series = build_slater_sum(&ProductSpec::empty(), &[term], 9).unwrap();
        assert_eq!(coeffs_i64(&s), vec![1, 1, 1, 1, 2, 2, 3, 3, 4, 5]);
        assert_eq!(*s.coefficient(9).unwrap(), BigInt::from(5));
    }

    #[test]
    fn builders_are_deterministic() {
        let spec = ThetaSpec::plain(7, 2).unwrap();
        let a: Series = build_theta(&spec, 300);
        let b: Series = build_theta(&spec, 300);
        assert_eq!(a, b);
    }
}
