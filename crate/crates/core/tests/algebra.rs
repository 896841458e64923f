mod common;

use common::poly;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qpleth_core::{TPoly, TRational};

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 0..7)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficients `c_i / (i + 1)`, so leading coefficients are rarely units.
fn fractional(c: &[i64]) -> TPoly {
    TPoly::from_terms(c.iter().enumerate().map(|(i, &x)| (i as u32, q(x, i as i64 + 1))))
}

proptest! {
    #[test]
    fn ring_axioms(a in coeffs(), b in coeffs(), c in coeffs()) {
        let (a, b, c) = (poly(&a), poly(&b), poly(&c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn euclidean_division(a in coeffs(), b in coeffs()) {
        let (a, b) = (fractional(&a), fractional(&b));
        prop_assume!(!b.is_zero());
        let (quot, rem) = a.div_rem(&b);
        prop_assert_eq!(&(&quot * &b) + &rem, a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn gcd_finds_planted_factor(a in coeffs(), b in coeffs(), c in coeffs()) {
        let (a, b, c) = (poly(&a), fractional(&b), poly(&c));
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let g = TPoly::gcd(&(&a * &c), &(&b * &c));
        prop_assert!((&a * &c).div_rem(&g).1.is_zero());
        prop_assert!((&b * &c).div_rem(&g).1.is_zero());
        prop_assert!(g.div_rem(&c).1.is_zero());
        prop_assert!(g.leading_coeff().unwrap() == &BigRational::from_integer(1.into()));
    }

    #[test]
    fn quotient_round_trip(a in coeffs(), b in coeffs(), c in coeffs()) {
        let x = TRational::new(poly(&a), poly(&b));
        let y = TRational::from_poly(fractional(&c));
        prop_assume!(x.is_ok() && !y.is_zero());
        let x = x.unwrap();
        prop_assert_eq!((&x * &y).checked_div(&y).unwrap(), x.clone());
        prop_assert_eq!(x.normalized(), x.clone());
        prop_assert_eq!(x.normalized().normalized(), x.normalized());
    }

    #[test]
    fn evaluation_is_multiplicative(a in coeffs(), b in coeffs(), c in coeffs(), d in coeffs(), t0 in -5i64..=5) {
        let x = TRational::new(poly(&a), poly(&b));
        let y = TRational::new(poly(&c), poly(&d));
        prop_assume!(x.is_ok() && y.is_ok());
        let (x, y) = (x.unwrap(), y.unwrap());
        let t0 = q(t0, 2);
        if let (Ok(ex), Ok(ey)) = (x.eval(&t0), y.eval(&t0)) {
            prop_assert_eq!((&x * &y).eval(&t0).unwrap(), &ex * &ey);
            prop_assert_eq!((&x + &y).eval(&t0).unwrap(), &ex + &ey);
        }
    }

    #[test]
    fn denominators_are_monic(a in coeffs(), b in coeffs()) {
        if let Ok(x) = TRational::new(poly(&a), fractional(&b)) {
            prop_assert!(x.denom().leading_coeff().unwrap() == &BigRational::from_integer(1.into()));
        }
    }
}

#[test]
fn rendering() {
    assert_eq!(TRational::from_poly(poly(&[0, 1, -1, -1, 0, 1])).to_string(), "(t^5 - t^3 - t^2 + t)");
    let x = TRational::new(poly(&[2]), poly(&[1, 0, -1])).unwrap();
    assert_eq!(x.to_string(), "(-2)/(t^2 - 1)");
    assert_eq!(TRational::ratio(-3, 4).to_string(), "(-3/4)");
}

#[test]
fn straightening_coefficient_at_two() {
    let b = poly(&[0, 1, -1, -1, 0, 1]);
    assert_eq!(b.eval(&q(2, 1)), q(22, 1));
    assert_eq!(b.eval(&q(-1, 1)), q(-2, 1));
    assert_eq!(b.eval(&q(1, 1)), q(0, 1));
}

#[test]
fn pole_is_reported() {
    let x = TRational::new(poly(&[1]), poly(&[1, -1])).unwrap();
    assert!(x.eval(&q(1, 1)).is_err());
}
