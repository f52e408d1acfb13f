//! Reference values that `reproduce` recomputes.

use coxgrowth::IntPolynomial;

/// Lehmer's polynomial.
pub const LEHMER: &[i64] = &[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1];
/// `t^10 - t^7 - t^5 - t^3 + 1`.
pub const SALEM_83: &[i64] = &[1, 0, 0, -1, 0, -1, 0, -1, 0, 0, 1];
/// `t^3 - t - 1`.
pub const SMALLEST_PISOT: &[i64] = &[-1, -1, 0, 1];
/// `t^10 - t^9 - t^6 + t^5 - t^4 - t + 1`.
pub const TETRAHEDRAL_353: &[i64] = &[1, -1, 0, 0, -1, 1, -1, 0, 0, -1, 1];
/// `t^4 - t^3 - t^2 - t + 1`.
pub const LAMBERT: &[i64] = &[1, -1, -1, -1, 1];

/// Exponents plus one of `H4`: the numerator is `[2,12,20,30]`.
pub const H4_BRACKETS: &[usize] = &[2, 12, 20, 30];

/// Non-zero coefficients `(degree, value)` of the denominator of the growth
/// series of `[5,3,3,3]`.
pub const SIMPLEX_5333_DENOMINATOR: &[(usize, i64)] = &[
    (0, 1), (1, -1), (7, -1), (8, 1), (9, -1), (10, 1), (11, -1), (14, 1), (15, -1), (16, 1),
    (17, -2), (18, 2), (19, -1), (20, 1), (21, -1), (22, 1), (23, -1), (24, 2), (25, -2),
    (26, 2), (27, -2), (28, 2), (29, -1), (30, 1), (31, -1), (32, 2), (33, -2), (34, 2),
    (35, -2), (36, 2), (37, -1), (38, 1), (39, -1), (40, 1), (41, -1), (42, 2), (43, -2),
    (44, 1), (45, -1), (46, 1), (49, -1), (50, 1), (51, -1), (52, 1), (53, -1), (59, -1),
    (60, 1),
];

pub fn sparse(terms: &[(usize, i64)]) -> IntPolynomial {
    let mut c = vec![0i64; terms.iter().map(|&(k, _)| k + 1).max().unwrap_or(0)];
    for &(k, v) in terms {
        c[k] = v;
    }
    IntPolynomial::from_i64(&c)
}

/// `cosh l = ½·sqrt((7 + √5)/2)` for the truncated `[5,3,3,3,3]` simplex.
pub fn prism_cosh() -> f64 {
    0.5 * ((7.0 + 5f64.sqrt()) / 2.0).sqrt()
}

/// Tolerance on the solved distance.
pub const PRISM_COSH_TOLERANCE: f64 = 1e-10;

/// Printed decimal values, keyed by fixture or symbol.
pub const RATES: &[(&str, &str)] = &[
    ("[7,3]", "1.17628"),
    ("[8,3]", "1.23039"),
    ("[inf,3]", "1.32471"),
    ("[3,5,3]", "1.35098"),
    ("[5,3,3,3]", "1.19988"),
    ("lambert", "1.72208"),
    ("makarov", "1.64759"),
    ("kaplinskaja", "2.08379"),
];

pub fn printed_rate(key: &str) -> &'static str {
    RATES.iter().find(|(k, _)| *k == key).map(|(_, v)| *v).expect("known key")
}
