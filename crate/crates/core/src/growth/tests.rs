use super::*;
use crate::diagram::DEFAULT_RANK_BOUND;
use crate::graph::{parse_coxeter_symbol, parse_graph_file, symbol_to_graph};
use proptest::prelude::*;

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn sym(s: &str) -> VinbergGraph {
    symbol_to_graph(&parse_coxeter_symbol(s).unwrap())
}

fn file(s: &str) -> VinbergGraph {
    parse_graph_file(s).unwrap()
}

fn terms(g: &VinbergGraph) -> String {
    let subsets = enumerate_elliptic_subsets(&g.coxeter_matrix(), DEFAULT_RANK_BOUND).unwrap();
    format_steinberg_terms(&steinberg_terms(&subsets))
}

fn makarov() -> VinbergGraph {
    file("rank 7\nedge 1 2 5\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 7 inf\n")
}

fn w2() -> VinbergGraph {
    sym("[inf,inf,3]")
}

fn w3() -> VinbergGraph {
    file("rank 4\nedge 1 2 inf\nedge 2 3 inf\nedge 2 4 3\n")
}

fn w4() -> VinbergGraph {
    sym("[4,inf,4]")
}

/// Denominator of the growth series of [5,3,3,3], as printed.
const LANNER_DENOMINATOR: &[(usize, i64)] = &[
    (0, 1), (1, -1), (7, -1), (8, 1), (9, -1), (10, 1), (11, -1), (14, 1), (15, -1), (16, 1),
    (17, -2), (18, 2), (19, -1), (20, 1), (21, -1), (22, 1), (23, -1), (24, 2), (25, -2),
    (26, 2), (27, -2), (28, 2), (29, -1), (30, 1), (31, -1), (32, 2), (33, -2), (34, 2),
    (35, -2), (36, 2), (37, -1), (38, 1), (39, -1), (40, 1), (41, -1), (42, 2), (43, -2),
    (44, 1), (45, -1), (46, 1), (49, -1), (50, 1), (51, -1), (52, 1), (53, -1), (59, -1),
    (60, 1),
];

fn lanner_denominator() -> IntPolynomial {
    let mut c = vec![0i64; 61];
    for &(k, v) in LANNER_DENOMINATOR {
        c[k] = v;
    }
    IntPolynomial::from_i64(&c)
}

#[test]
fn infinite_dihedral() {
    let g = sym("[inf]");
    let s = steinberg_sum(&g).unwrap();
    assert_eq!((s.numerator(), s.denominator()), (&p(&[-1, 1]), &p(&[1, 1])));
    let f = growth_series(&g).unwrap();
    assert_eq!((f.numerator(), f.denominator()), (&p(&[1, 1]), &p(&[1, -1])));
    let a = series_coefficients(f.function(), 4);
    assert_eq!(a, [1, 2, 2, 2, 2].map(BigInt::from));
}

#[test]
fn lambert_quadrilateral_help_function() {
    let g = sym("[inf,3,inf]");
    assert_eq!(terms(&g), "1 - 4/[2] + 3/[2,2] + 1/[2,3]");
    let h = steinberg_sum(&g).unwrap();
    assert_eq!(h.numerator(), &p(&[1, -1, -1, -1, 1]));
    assert_eq!(h.denominator(), &IntPolynomial::bracket_product(&[2, 2, 3]));
}

#[test]
fn comparison_groups_match_their_steinberg_sums() {
    assert_eq!(terms(&w2()), "1 - 4/[2] + 3/[2,2] + 1/[2,3] - 1/[2,2,3]");
    assert_eq!(terms(&w3()), "1 - 4/[2] + 3/[2,2] + 1/[2,3] - 1/[2,2,2]");
    assert_eq!(terms(&w4()), "1 - 4/[2] + 3/[2,2] + 2/[2,4] - 2/[2,2,4]");

    let h = steinberg_sum(&sym("[inf,3,inf]")).unwrap();
    let inv = |k: &[usize]| {
        RationalFunction::new(IntPolynomial::one(), IntPolynomial::bracket_product(k)).unwrap()
    };
    assert_eq!(steinberg_sum(&w2()).unwrap(), &h - &inv(&[2, 2, 3]));
    assert_eq!(steinberg_sum(&w3()).unwrap(), &h - &inv(&[2, 2, 2]));
}

#[test]
fn lambert_minus_w4_difference() {
    // 1/[2,3] - 2/[2,4] + 2/[2,2,4] = ([2][4] - 2[2][3] + 2[3]) / [2,2,3,4]
    let diff = &steinberg_sum(&sym("[inf,3,inf]")).unwrap() - &steinberg_sum(&w4()).unwrap();
    let expected = RationalFunction::new(
        p(&[1, 0, 0, 0, 1]),
        IntPolynomial::bracket_product(&[2, 2, 3, 4]),
    )
    .unwrap();
    assert_eq!(diff, expected);
    for wrong in [
        IntPolynomial::bracket_product(&[2, 3, 4]),
        &IntPolynomial::bracket_product(&[2, 3]) * &p(&[1, 0, 1]),
    ] {
        assert_ne!(diff, RationalFunction::new(p(&[1, 0, 0, 0, 1]), wrong).unwrap());
    }
}

#[test]
fn lanner_simplex_growth() {
    let g = sym("[5,3,3,3]");
    assert_eq!(
        terms(&g),
        "1 - 5/[2] + 6/[2,2] + 3/[2,3] + 1/[2,5] - 1/[2,2,2] - 4/[2,2,3] - 2/[2,2,5] \
         - 2/[2,3,4] - 1/[2,6,10] + 1/[2,2,3,4] + 1/[2,2,3,5] + 1/[2,2,6,10] + 1/[2,3,4,5] \
         + 1/[2,12,20,30]"
    );
    let f = growth_series(&g).unwrap();
    assert_eq!(f.numerator(), &IntPolynomial::bracket_product(&[2, 12, 20, 30]));
    assert_eq!(f.denominator(), &lanner_denominator());
    assert_eq!(reciprocity_type(f.function()), Reciprocity::Reciprocal);
    assert_eq!(f.census().counts_by_size(), vec![1, 5, 10, 10, 5]);
}

#[test]
fn finite_groups_give_solomon_polynomials() {
    let f = growth_series(&sym("[5,3]")).unwrap();
    assert!(f.is_polynomial());
    assert_eq!(f.numerator(), &IntPolynomial::bracket_product(&[2, 6, 10]));
    let a = series_coefficients(f.function(), 15);
    assert_eq!(a.iter().sum::<BigInt>(), BigInt::from(120));
    assert_eq!(
        euler_characteristic(f.function()),
        EulerCharacteristic::Value { value: "1/120".into() }
    );
}

#[test]
fn triangle_group_first_coefficients() {
    let f = growth_series(&sym("[7,3]")).unwrap();
    let a = series_coefficients(f.function(), 2);
    assert_eq!(a, [1, 3, 5].map(BigInt::from));
    let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
    assert_eq!(
        f.denominator().gcd(&lehmer).unwrap(),
        lehmer,
        "Lehmer's polynomial divides the denominator"
    );
}

#[test]
fn reciprocity_by_dimension_parity() {
    let tetra = growth_series(&sym("[3,5,3]")).unwrap();
    assert_eq!(reciprocity_type(tetra.function()), Reciprocity::AntiReciprocal);
    let prism = growth_series(&makarov()).unwrap();
    assert_eq!(reciprocity_type(prism.function()), Reciprocity::AntiReciprocal);
    let tri = growth_series(&sym("[7,3]")).unwrap();
    assert_eq!(reciprocity_type(tri.function()), Reciprocity::Reciprocal);
    let free = growth_series(&sym("[inf,3]")).unwrap();
    assert_eq!(reciprocity_type(free.function()), Reciprocity::Neither);
}

#[test]
fn euler_characteristics() {
    let prism = growth_series(&makarov()).unwrap();
    assert_eq!(prism.denominator().multiplicity_at_one(), 1);
    assert_eq!(
        euler_characteristic(prism.function()),
        EulerCharacteristic::Zero { pole_order: 1 }
    );

    let g = sym("[5,3,3,3]");
    let f = growth_series(&g).unwrap();
    let chi = euler_characteristic(f.function()).rational();
    assert!(chi > BigRational::zero());
    let subsets = enumerate_elliptic_subsets(&g.coxeter_matrix(), DEFAULT_RANK_BOUND).unwrap();
    assert_eq!(chi, euler_characteristic_from_subsets(&subsets));
    // Σ (-1)^{|T|}/|W_T| over the fifteen terms sums to 1/14400.
    assert_eq!(chi, BigRational::new(1.into(), 14400.into()));
}

#[test]
fn zero_sum_is_reported() {
    // Two subsets with the same Solomon polynomial and opposite signs cancel.
    let subsets = enumerate_elliptic_subsets(&sym("[3]").coxeter_matrix(), 25).unwrap();
    let mut twin = subsets[1].clone();
    twin.nodes.push(99);
    assert_eq!(
        steinberg_sum_of(&[subsets[1].clone(), twin]),
        Err(GrowthError::ZeroSteinbergSum)
    );
}

#[test]
fn normalisation_on_fixtures() {
    for g in [sym("[5,3,3,3]"), sym("[3,5,3]"), sym("[7,3]"), makarov(), sym("[(3^4,4)]"), w4()] {
        let f = growth_series(&g).unwrap();
        let (n, d) = (f.numerator(), f.denominator());
        assert_eq!(n.gcd(d).unwrap(), IntPolynomial::one());
        assert_eq!(n.constant_term(), BigInt::one());
        assert_eq!(d.constant_term(), BigInt::one());
        let a = series_coefficients(f.function(), 30);
        assert!(a.iter().skip(1).all(|x| x > &BigInt::zero()));
    }
}

/// Power-series quotient by schoolbook long division in the rationals.
fn long_division(f: &RationalFunction, k: usize) -> Vec<BigRational> {
    let q: Vec<BigRational> = (0..=k).map(|i| BigRational::from_integer(f.denominator().coeff(i))).collect();
    let mut rem: Vec<BigRational> =
        (0..=k).map(|i| BigRational::from_integer(f.numerator().coeff(i))).collect();
    let mut out = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let c = &rem[i] / &q[0];
        for j in i..=k {
            let sub = &c * &q[j - i];
            rem[j] -= sub;
        }
        out.push(c);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn recurrence_matches_long_division(ws in proptest::collection::vec(3u32..8, 1..4), k in 0usize..50) {
        let text = format!("[{}]", ws.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
        let f = growth_series(&sym(&text)).unwrap();
        let a = series_coefficients(f.function(), k);
        let b = long_division(f.function(), k);
        for (x, y) in a.iter().zip(&b) {
            prop_assert_eq!(&BigRational::from_integer(x.clone()), y);
        }
    }
}
