//! Exact truncated q-series engine and restricted-partition laboratory.
//!
//! The crate verifies, coefficient by coefficient up to a chosen truncation
//! order, a catalog of q-series identities (Jacobi-triple-product
//! specializations, Rogers-Ramanujan-type sum/product identities) and the
//! parity structure of twelve restricted partition functions: exact
//! characterizations of their odd values by quadratic progressions, and
//! Ramanujan-like congruences mod 2. It can also scan any of the functions
//! for new zero progressions modulo an arbitrary base.
//!
//! Layout:
//!
//! - [`series`]: exact `BigInt` series and the bit-packed mod-2 variant.
//! - [`builders`]: declarative Pochhammer/theta/sum specs, their expansion,
//!   and the identity catalog ([`builders::catalog`]).
//! - [`partitions`]: the twelve functions `c1..c12` — generating functions,
//!   independent backtracking enumerators, and their claimed parity facts.
//! - [`parity`]: quadratic families, congruence verification and scanning,
//!   quadratic residue sets, and the theorem registry.
//!
//! ```
//! use qparity_core::parity::{verify_congruence, CongruenceClaim};
//! use qparity_core::partitions::{bruteforce_count, gf_parity, gf_series, PartitionId};
//!
//! // c2(7) = 2, by series expansion and by direct enumeration
//! let series = gf_series(PartitionId::C2, 60);
//! assert_eq!(*series.coefficient(7).unwrap(), 2.into());
//! assert_eq!(bruteforce_count(PartitionId::C2, 7, 60).unwrap(), 2);
//!
//! // and c2(5n + 2) is even for every checked n
//! let parity = gf_parity(PartitionId::C2, 2000);
//! assert!(verify_congruence(&parity, &CongruenceClaim::new(5, 2)).passed());
//! ```

pub mod builders;
pub mod parity;
pub mod partitions;
pub mod report;
pub mod series;

pub use report::{Status, VerificationReport};
pub use series::{ParitySeries, Series, SeriesError, SeriesRing, Sign};
