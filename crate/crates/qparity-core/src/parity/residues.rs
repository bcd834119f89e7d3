//! Residue classes attained by integer quadratics.

use std::collections::BTreeSet;

use super::family::JDomain;

/// The set `{ (alpha*j^2 + beta*j) mod m }` over all admissible `j`.
///
/// An integer quadratic is periodic mod `m` with period dividing `m`, and
/// each of the three domains contains arbitrarily large `j`, hence a full
/// period; one scan of `j = 0..m-1` is exact for every domain. Half-integer
/// exponent families such as `n(n+1)/2` are handled by passing the doubled
/// form (substituting an even index), which covers all residue classes
/// whenever `m` is odd.
pub fn quad_residues_mod(alpha: i64, beta: i64, modulus: i64, _domain: JDomain) -> BTreeSet<i64> {
    assert!(modulus >= 2, "modulus must be >= 2");
    let mut out = BTreeSet::new();
    for j in 0..modulus {
        out.insert((alpha * j * j + beta * j).rem_euclid(modulus));
    }
    out
}
