use super::*;
use crate::graph::{parse_coxeter_symbol, parse_graph_file, symbol_to_graph, VinbergGraph};
use crate::growth::growth_series;
use proptest::prelude::*;

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn eps() -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 12))
}

fn sym(s: &str) -> VinbergGraph {
    symbol_to_graph(&parse_coxeter_symbol(s).unwrap())
}

fn rate(g: &VinbergGraph) -> GrowthRate {
    growth_rate(growth_series(g).unwrap().function(), &eps()).unwrap()
}

fn lehmer() -> IntPolynomial {
    p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

#[test]
fn sturm_counts() {
    assert_eq!(sturm_count(&p(&[-2, 0, 1]), Some(&rat(1, 1)), Some(&rat(2, 1))), Ok(1));
    assert_eq!(sturm_count(&lehmer(), Some(&rat(0, 1)), None), Ok(2));
    assert_eq!(sturm_count(&lehmer(), None, None), Ok(2));
    assert!(matches!(
        sturm_count(&p(&[-1, 1]), Some(&rat(1, 1)), Some(&rat(2, 1))),
        Err(RootError::RootAtEndpoint(_))
    ));
    // Repeated roots are counted once.
    assert_eq!(sturm_count(&p(&[1, -2, 1]), Some(&rat(0, 1)), Some(&rat(2, 1))), Ok(1));
}

#[test]
fn isolation_examples() {
    let roots = isolate_real_roots(&p(&[-1, -1, 0, 1])).unwrap();
    assert_eq!(roots.len(), 1);
    assert!(roots[0].lo() >= &rat(-4, 1));
    assert_eq!(roots[0].to_decimal(5), "1.32472");
    assert_eq!(roots[0].clone().refined(&eps()).to_decimal(5), "1.32472");

    let double = isolate_real_roots(&p(&[1, -2, 1])).unwrap();
    assert_eq!(double.len(), 1);
    assert_eq!(double[0].defining_poly(), &p(&[-1, 1]));
    assert_eq!(double[0].to_decimal(3), "1.000");

    let q = isolate_real_roots(&p(&[1, -1, -1, -1, 1])).unwrap();
    assert_eq!(q.len(), 2);
    assert_eq!(q[1].to_decimal(5), "1.72208");
    assert!(q.iter().all(IsolatedRoot::verify));
}

#[test]
fn rational_roots_on_bisection_points() {
    // Roots at 0, ±1, ±2 all land on dyadic midpoints.
    let f = p(&[0, 4, 0, -5, 0, 1]);
    let roots = isolate_real_roots(&f).unwrap();
    assert_eq!(roots.len(), 5);
    let values: Vec<String> = roots.iter().map(|r| r.to_decimal(6)).collect();
    assert_eq!(values, ["-2.000000", "-1.000000", "0.000000", "1.000000", "2.000000"]);
    assert!(roots.iter().all(IsolatedRoot::verify));
}

#[test]
fn decimal_formatting() {
    assert_eq!(format_decimal(&rat(1, 3), 5), "0.33333");
    assert_eq!(format_decimal(&rat(-5, 2), 0), "-3");
    assert_eq!(format_decimal(&rat(123456789, 100000000), 5), "1.23457");
}

#[test]
fn cyclotomic_stripping() {
    let s = strip_cyclotomic(&p(&[-1, 0, 1]));
    assert_eq!(s.factors, vec![(1, 1), (2, 1)]);
    assert_eq!(s.remainder, IntPolynomial::one());

    let s = strip_cyclotomic(&(&lehmer() * &cyclotomic(12).pow(2)));
    assert_eq!(s.factors, vec![(12, 2)]);
    assert_eq!(s.remainder, lehmer());
    assert_eq!(s.indices(), vec![12, 12]);
}

#[test]
fn self_reciprocity() {
    let f = growth_series(&sym("[5,3,3,3]")).unwrap();
    assert_eq!(is_self_reciprocal(f.denominator()), SelfReciprocity::Palindromic);
    assert_eq!(is_self_reciprocal(&p(&[-1, -1, 0, 1])), SelfReciprocity::Neither);
    assert_eq!(is_self_reciprocal(&p(&[1, -1, -1, -1, 1])), SelfReciprocity::Palindromic);
    assert_eq!(is_self_reciprocal(&p(&[1, 0, -1])), SelfReciprocity::AntiPalindromic);
}

#[test]
fn triangle_group_rates() {
    let r = rate(&sym("[7,3]"));
    assert_eq!(r.tau.to_decimal(5), "1.17628");
    assert_eq!(r.defining_polynomial(), &lehmer());

    let r = rate(&sym("[8,3]"));
    assert_eq!(r.tau.to_decimal(5), "1.23039");
    assert_eq!(r.defining_polynomial(), &p(&[1, 0, 0, -1, 0, -1, 0, -1, 0, 0, 1]));

    let r = rate(&sym("[inf,3]"));
    assert_eq!(r.tau.to_decimal(5), "1.32472");
    assert_eq!(r.defining_polynomial(), &p(&[-1, -1, 0, 1]));
}

#[test]
fn higher_dimensional_rates() {
    let r = rate(&sym("[3,5,3]"));
    assert_eq!(r.tau.to_decimal(5), "1.35098");
    assert_eq!(r.defining_polynomial(), &p(&[1, -1, 0, 0, -1, 1, -1, 0, 0, -1, 1]));
    assert_eq!(r.cyclotomic, vec![(1, 1)]);

    let r = rate(&sym("[5,3,3,3]"));
    assert_eq!(r.tau.to_decimal(5), "1.19988");

    let prism = parse_graph_file(
        "rank 7\nedge 1 2 5\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 7 inf\n",
    )
    .unwrap();
    let r = rate(&prism);
    assert_eq!(r.tau.to_decimal(5), "1.64759");
    assert_eq!(r.cyclotomic, vec![(1, 1)]);
    assert_eq!(is_self_reciprocal(r.defining_polynomial()), SelfReciprocity::Palindromic);
}

#[test]
fn rate_times_radius_is_one() {
    for s in ["[7,3]", "[5,3,3,3]", "[inf,3,inf]", "[3,5,3]"] {
        let r = rate(&sym(s));
        let one = BigRational::one();
        assert!(r.tau.lo() * r.radius.lo() <= one && one <= r.tau.hi() * r.radius.hi(), "{s}");
        assert!(r.tau.width() <= eps());
        assert!(r.tau.verify() && r.radius.verify(), "{s}");
        assert!(r.tau.lo() > &one);
    }
}

#[test]
fn rate_errors() {
    let finite = growth_series(&sym("[5,3]")).unwrap();
    assert_eq!(growth_rate(finite.function(), &eps()), Err(RootError::FiniteGroup));
    let affine = growth_series(&sym("[4,4]")).unwrap();
    assert_eq!(growth_rate(affine.function(), &eps()), Err(RootError::NotExponential));
    let free = growth_series(&sym("[inf]")).unwrap();
    assert_eq!(growth_rate(free.function(), &eps()), Err(RootError::NotExponential));
}

#[test]
fn trace_polynomial_of_lehmer() {
    // L(t) = t^5 T(t + 1/t) with T = x^5 + x^4 - 5x^3 - 5x^2 + 4x + 3.
    let t = classify::trace_polynomial(&lehmer()).unwrap();
    assert_eq!(t, p(&[3, 4, -5, -5, 1, 1]));
    assert!(classify::trace_polynomial(&p(&[-1, -1, 0, 1])).is_none());
}

fn classify_poly(f: &IntPolynomial) -> NumberClass {
    let top = isolate_real_roots(f).unwrap().pop().unwrap();
    let class = classify_number(f, &top).unwrap();
    check_consistency(&class);
    class
}

fn check_consistency(c: &NumberClass) {
    if c.salem.holds {
        assert!(c.perron.holds);
        assert_eq!(c.reciprocity, SelfReciprocity::Palindromic);
        let unit = disk::count_in_unit_disk(&c.tested_polynomial);
        assert_eq!((unit.inside, unit.outside), (1, 1));
    }
    if c.pisot.holds {
        assert!(c.perron.holds);
    }
}

#[test]
fn salem_pisot_perron_examples() {
    let l = classify_poly(&lehmer());
    assert_eq!(l.flags(), ["salem", "perron"]);
    assert_eq!(l.salem.certification, Certification::Exact);

    let s8 = classify_poly(&p(&[1, 0, 0, -1, 0, -1, 0, -1, 0, 0, 1]));
    assert_eq!(s8.flags(), ["salem", "perron"]);
    assert_eq!(s8.salem.certification, Certification::Exact);

    let pisot = classify_poly(&p(&[-1, -1, 0, 1]));
    assert_eq!(pisot.flags(), ["pisot", "perron"]);

    let q = classify_poly(&p(&[1, -1, -1, -1, 1]));
    assert_eq!(q.flags(), ["salem", "perron"]);

    // The printed quartic t^4 - t^3 - t^2 - t - 1 is not palindromic; its
    // largest root is near 1.92756.
    let printed = isolate_real_roots(&p(&[-1, -1, -1, -1, 1])).unwrap().pop().unwrap();
    assert_eq!(printed.to_decimal(5), "1.92756");
}

#[test]
fn lanner_rate_is_perron_not_salem() {
    let f = growth_series(&sym("[5,3,3,3]")).unwrap();
    let d = f.denominator();
    assert_eq!(sturm_count(d, Some(&rat(1, 1)), None), Ok(2));
    let r = growth_rate(f.function(), &eps()).unwrap();
    let class = classify_number(&d.reversed(60), &r.tau).unwrap();
    check_consistency(&class);
    assert!(!class.salem.holds);
    assert!(!class.pisot.holds);
    assert_eq!(class.perron, Verdict { holds: true, certification: Certification::Exact });
    assert!(class.stripped_cyclotomic.is_empty());
    assert_eq!(class.tested_polynomial.degree(), Some(60));
}

#[test]
fn classification_preconditions() {
    let root = isolate_real_roots(&p(&[-2, 0, 1])).unwrap().pop().unwrap();
    assert!(classify_number(&lehmer(), &root).is_err());
    let below_one = isolate_real_roots(&lehmer()).unwrap().remove(0);
    assert!(classify_number(&lehmer(), &below_one).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn isolation_invariants(c in proptest::collection::vec(-9i64..=9, 2..8)) {
        let f = p(&c);
        prop_assume!(f.degree_or_zero() >= 1);
        let roots = isolate_real_roots(&f).unwrap();
        let sf = f.square_free_part();
        prop_assert_eq!(roots.len(), sturm_count(&sf, None, None).unwrap());
        for w in roots.windows(2) {
            prop_assert!(w[0].hi() <= w[1].lo());
        }
        for r in &roots {
            prop_assert!(r.verify());
            let narrow = r.clone().refined(&rat(1, 1 << 20));
            prop_assert!(narrow.verify());
            prop_assert!(narrow.lo() >= r.lo() && narrow.hi() <= r.hi());
        }
    }

    #[test]
    fn stripping_leaves_no_root_of_unity(ks in proptest::collection::vec(1usize..13, 0..4), c in proptest::collection::vec(-5i64..=5, 1..5)) {
        let base = p(&c);
        prop_assume!(!base.is_zero());
        let f = ks.iter().fold(base, |acc, &k| &acc * &cyclotomic(k));
        let s = strip_cyclotomic(&f);
        let n = s.remainder.degree_or_zero();
        for m in 1..=(2 * n * n).max(2) {
            let unity = &IntPolynomial::monomial(BigInt::one(), m) - &IntPolynomial::one();
            prop_assert_eq!(s.remainder.gcd(&unity).unwrap(), IntPolynomial::one());
        }
        let rebuilt = s.factors.iter().fold(s.remainder.clone(), |acc, &(d, e)| &acc * &cyclotomic(d).pow(e));
        prop_assert_eq!(rebuilt, f);
    }
}
