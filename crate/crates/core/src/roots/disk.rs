//! Exact count of complex roots inside, on, and outside a circle `|z| = r`.
//!
//! The Möbius map `z = r(1 + w)/(1 - w)` sends the open disk to the left
//! half-plane and the circle to the imaginary axis. Roots of the transformed
//! polynomial that are symmetric under `w ↦ -w` are split off by a gcd and
//! counted through the even/odd structure of that factor; the rest has no
//! imaginary-axis roots and is counted by a Cauchy index.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::sturm::SturmChain;
use super::RootError;
use crate::poly::IntPolynomial;

/// Root counts with multiplicity relative to a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiskCount {
    pub inside: usize,
    pub on: usize,
    pub outside: usize,
}

/// `b^n · (1 - w)^n · p(r(1 + w)/(1 - w))` for `r = a/b`.
fn mobius(p: &IntPolynomial, r: &BigRational) -> IntPolynomial {
    let n = p.degree_or_zero();
    let (a, b) = (r.numer(), r.denom());
    let plus = IntPolynomial::from_i64(&[1, 1]);
    let minus = IntPolynomial::from_i64(&[1, -1]);
    let plus_pows: Vec<IntPolynomial> = std::iter::successors(Some(IntPolynomial::one()), |x| Some(x * &plus))
        .take(n + 1)
        .collect();
    let minus_pows: Vec<IntPolynomial> = std::iter::successors(Some(IntPolynomial::one()), |x| Some(x * &minus))
        .take(n + 1)
        .collect();
    let mut out = IntPolynomial::zero();
    for k in 0..=n {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let scale = c * num_traits::pow(a.clone(), k) * num_traits::pow(b.clone(), n - k);
        out = &out + &(&plus_pows[k] * &minus_pows[n - k]).scale(&scale);
    }
    out
}

/// Real and imaginary parts of `h(iy)` as polynomials in `y`.
fn split_on_axis(h: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
    let d = h.degree_or_zero();
    let mut re = vec![BigInt::zero(); d + 1];
    let mut im = vec![BigInt::zero(); d + 1];
    for (k, c) in h.coeffs().iter().enumerate() {
        match k % 4 {
            0 => re[k] = c.clone(),
            1 => im[k] = c.clone(),
            2 => re[k] = -c,
            _ => im[k] = -c,
        }
    }
    (IntPolynomial::new(re), IntPolynomial::new(im))
}

/// `(left, right)` half-plane counts for `h` without imaginary-axis roots.
fn half_plane_counts(h: &IntPolynomial) -> (usize, usize) {
    let m = h.degree_or_zero();
    if m == 0 {
        return (0, 0);
    }
    let (re, im) = split_on_axis(h);
    let diff = if m % 2 == 0 {
        -SturmChain::from_pair(&re, &im).cauchy_index()
    } else {
        SturmChain::from_pair(&im, &re).cauchy_index()
    };
    let m = m as i64;
    debug_assert!((m + diff) % 2 == 0 && diff.abs() <= m);
    (((m + diff) / 2) as usize, ((m - diff) / 2) as usize)
}

/// Number of negative real roots of `g`, counted with multiplicity.
/// Requires `g(0) != 0`.
fn negative_roots_with_multiplicity(g: &IntPolynomial) -> usize {
    let zero = BigRational::zero();
    let mut total = 0;
    let mut d = g.primitive_part();
    while d.degree_or_zero() > 0 {
        total += SturmChain::new(&d).count(None, Some(&zero));
        d = d.gcd(&d.derivative()).expect("nonzero polynomial");
    }
    total
}

/// Count roots of `p` with `|z| < r`, `|z| = r`, and `|z| > r`.
pub fn count_in_disk(p: &IntPolynomial, r: &BigRational) -> Result<DiskCount, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if !r.is_positive() {
        return Err(RootError::Precondition("radius must be positive".into()));
    }
    let n = p.degree_or_zero();
    let q = mobius(p, r);
    // Roots at z = -r map to w = ∞ and lower the degree.
    let lost = n - q.degree_or_zero();
    if q.degree_or_zero() == 0 {
        return Ok(DiskCount {
            inside: 0,
            on: n,
            outside: 0,
        });
    }
    let g = q.gcd(&q.negate_variable()).expect("nonzero polynomial");
    let h = q.primitive_part().exact_div(&g).expect("gcd divides");
    let (left, right) = half_plane_counts(&h);

    // g(-w) = ±g(w), so g = w^e · G(w²) with G(0) != 0.
    let e = g.lowest_degree().unwrap_or(0);
    let rest: Vec<BigInt> = g.coeffs()[e..].iter().step_by(2).cloned().collect();
    debug_assert!(g.coeffs()[e..].iter().skip(1).step_by(2).all(Zero::is_zero));
    let big_g = IntPolynomial::new(rest);
    let axis = e + 2 * negative_roots_with_multiplicity(&big_g);
    let pairs = (g.degree_or_zero() - axis) / 2;

    let count = DiskCount {
        inside: left + pairs,
        on: lost + axis,
        outside: right + pairs,
    };
    debug_assert_eq!(count.inside + count.on + count.outside, n);
    Ok(count)
}

/// Convenience for the unit circle.
pub(crate) fn count_in_unit_disk(p: &IntPolynomial) -> DiskCount {
    count_in_disk(p, &BigRational::one()).expect("nonzero polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn count(poly: &IntPolynomial, r: BigRational) -> (usize, usize, usize) {
        let c = count_in_disk(poly, &r).unwrap();
        (c.inside, c.on, c.outside)
    }

    #[test]
    fn linear_and_quadratic() {
        assert_eq!(count(&p(&[-2, 1]), rat(1, 1)), (0, 0, 1));
        assert_eq!(count(&p(&[1, 2]), rat(1, 1)), (1, 0, 0));
        assert_eq!(count(&p(&[1, 1]), rat(1, 1)), (0, 1, 0));
        assert_eq!(count(&p(&[-1, 1]), rat(1, 1)), (0, 1, 0));
        // t² + 1 on, t² + 4 outside, 4t² + 1 inside.
        assert_eq!(count(&p(&[1, 0, 1]), rat(1, 1)), (0, 2, 0));
        assert_eq!(count(&p(&[4, 0, 1]), rat(1, 1)), (0, 0, 2));
        assert_eq!(count(&p(&[1, 0, 4]), rat(1, 1)), (2, 0, 0));
        assert_eq!(count(&p(&[4, 0, 1]), rat(2, 1)), (0, 2, 0));
    }

    #[test]
    fn pisot_cubic() {
        // t³ - t - 1: one real root 1.3247, two conjugates of modulus 0.8688.
        let c = p(&[-1, -1, 0, 1]);
        assert_eq!(count(&c, rat(1, 1)), (2, 0, 1));
        assert_eq!(count(&c, rat(13, 10)), (2, 0, 1));
        assert_eq!(count(&c, rat(133, 100)), (3, 0, 0));
        assert_eq!(count(&c, rat(86, 100)), (0, 0, 3));
        assert_eq!(count(&c, rat(87, 100)), (2, 0, 1));
    }

    #[test]
    fn lehmer_polynomial() {
        let l = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert_eq!(count(&l, rat(1, 1)), (1, 8, 1));
        assert_eq!(count(&l, rat(117, 100)), (9, 0, 1));
        assert_eq!(count(&l, rat(118, 100)), (10, 0, 0));
    }

    #[test]
    fn repeated_and_symmetric_roots() {
        // (t - 2)²(t + 2)(t² + 4)(t - 1/2)
        let f = &(&(&p(&[-2, 1]).pow(2) * &p(&[2, 1])) * &p(&[4, 0, 1])) * &p(&[-1, 2]);
        assert_eq!(count(&f, rat(2, 1)), (1, 5, 0));
        assert_eq!(count(&f, rat(1, 1)), (1, 0, 5));
        assert_eq!(count(&f, rat(3, 1)), (6, 0, 0));
        // t(t² - 4)
        assert_eq!(count(&p(&[0, -4, 0, 1]), rat(1, 1)), (1, 0, 2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(count_in_disk(&IntPolynomial::zero(), &rat(1, 1)).is_err());
        assert!(count_in_disk(&p(&[1, 1]), &rat(0, 1)).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        /// Product of linear and quadratic factors with known root moduli.
        #[test]
        fn counts_match_known_roots(
            reals in proptest::collection::vec((-6i64..=6, 1i64..=3), 0..4),
            pairs in proptest::collection::vec((-4i64..=4, 1i64..=5), 0..3),
            rn in 1i64..=12, rd in 1i64..=4,
        ) {
            let r = rat(rn, rd);
            let r2 = &r * &r;
            let mut f = IntPolynomial::one();
            let (mut inside, mut on, mut outside) = (0, 0, 0);
            let mut tally = |m2: BigRational, k: usize| {
                match m2.cmp(&r2) {
                    std::cmp::Ordering::Less => inside += k,
                    std::cmp::Ordering::Equal => on += k,
                    std::cmp::Ordering::Greater => outside += k,
                }
            };
            for &(a, b) in &reals {
                // Root a/b.
                f = &f * &p(&[-a, b]);
                tally(rat(a * a, b * b), 1);
            }
            for &(s, c) in &pairs {
                // t² - s t + c has complex roots of modulus² c when s² < 4c.
                if s * s < 4 * c {
                    f = &f * &p(&[c, -s, 1]);
                    tally(rat(c, 1), 2);
                }
            }
            if f.degree_or_zero() > 0 {
                prop_assert_eq!(count(&f, r), (inside, on, outside));
            }
        }
    }
}
