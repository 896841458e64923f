use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::poly::TPoly;
use crate::error::{Error, Result};

/// An element of Q(t): a reduced quotient of two [`TPoly`]s.
///
/// Canonical form: `gcd(num, den) = 1`, `den` is monic (its highest-degree
/// coefficient is 1), and a zero value is stored as `0/1`. Two values are
/// equal exactly when their canonical forms are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TRational {
    num: TPoly,
    den: TPoly,
}

impl TRational {
    pub fn zero() -> Self {
        TRational { num: TPoly::zero(), den: TPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(TPoly::one())
    }

    pub fn from_poly(p: TPoly) -> Self {
        TRational { num: p, den: TPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(TPoly::from_int(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::from_poly(TPoly::constant(q))
    }

    /// `n / d` for integers; panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    /// `num / den`, reduced.
    pub fn new(num: TPoly, den: TPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    /// `2^e` for any integer exponent.
    pub fn pow2(e: i64) -> Self {
        let p = BigInt::one() << e.unsigned_abs();
        if e >= 0 {
            Self::from_bigint(p)
        } else {
            Self::from_rational(BigRational::new(BigInt::one(), p))
        }
    }

    fn reduce(num: TPoly, den: TPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.as_constant().unwrap();
            return TRational { num: num.scale(&c.recip()), den: TPoly::one() };
        }
        let g = TPoly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading_coeff().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        TRational { num, den }
    }

    /// Re-applies the canonical reduction. Values built through the public
    /// API are already canonical, so this is the identity on them.
    pub fn normalized(&self) -> Self {
        Self::reduce(self.num.clone(), self.den.clone())
    }

    pub fn numer(&self) -> &TPoly {
        &self.num
    }

    pub fn denom(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&TPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// The value as a rational constant, if it does not depend on `t`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &TRational) -> Result<TRational> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if rhs.is_polynomial() && rhs.num.is_constant() {
            let c = rhs.num.as_constant().unwrap();
            return Ok(TRational { num: self.num.scale(&c.recip()), den: self.den.clone() });
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn recip(&self) -> Result<TRational> {
        TRational::one().checked_div(self)
    }

    pub fn scale(&self, c: &BigRational) -> TRational {
        if c.is_zero() {
            return Self::zero();
        }
        TRational { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &TPoly) -> TRational {
        if self.is_polynomial() {
            return Self::from_poly(&self.num * p);
        }
        Self::reduce(&self.num * p, self.den.clone())
    }

    pub fn pow(&self, n: u32) -> TRational {
        TRational { num: self.num.pow(n), den: self.den.pow(n) }
    }

    /// Exact evaluation at `t = t0`.
    pub fn eval(&self, t0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(Error::Pole(t0.clone()));
        }
        Ok(self.num.eval(t0) / d)
    }

    /// Replaces `t` by `t^s` in numerator and denominator.
    pub fn substitute_power(&self, s: u32) -> TRational {
        if s == 0 {
            // Evaluation at t = 1 is the only meaning of t -> t^0.
            let d = self.den.substitute_power(0);
            return Self::reduce(self.num.substitute_power(0), d);
        }
        // t -> t^s preserves coprimality and monicity.
        TRational { num: self.num.substitute_power(s), den: self.den.substitute_power(s) }
    }
}

impl Default for TRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<TPoly> for TRational {
    fn from(p: TPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for TRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for TRational {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl<'a> Add<&'a TRational> for &'a TRational {
    type Output = TRational;
    fn add(self, rhs: &TRational) -> TRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.is_polynomial() {
                return TRational::from_poly(&self.num + &rhs.num);
            }
            return TRational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if rhs.is_polynomial() {
            // den is unchanged and stays coprime to the new numerator.
            return TRational { num: &self.num + &(&rhs.num * &self.den), den: self.den.clone() };
        }
        if self.is_polynomial() {
            return TRational { num: &(&self.num * &rhs.den) + &rhs.num, den: rhs.den.clone() };
        }
        let g = TPoly::gcd(&self.den, &rhs.den);
        let (l, r) = if g.is_one() {
            (rhs.den.clone(), self.den.clone())
        } else {
            (rhs.den.div_rem(&g).0, self.den.div_rem(&g).0)
        };
        let num = &(&self.num * &l) + &(&rhs.num * &r);
        TRational::reduce(num, &self.den * &l)
    }
}

impl<'a> Sub<&'a TRational> for &'a TRational {
    type Output = TRational;
    fn sub(self, rhs: &TRational) -> TRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a TRational> for &'a TRational {
    type Output = TRational;
    fn mul(self, rhs: &TRational) -> TRational {
        if self.is_zero() || rhs.is_zero() {
            return TRational::zero();
        }
        match (self.is_polynomial(), rhs.is_polynomial()) {
            (true, true) => TRational::from_poly(&self.num * &rhs.num),
            (true, false) if self.num.is_constant() => TRational {
                num: rhs.num.scale(&self.num.as_constant().unwrap()),
                den: rhs.den.clone(),
            },
            (false, true) if rhs.num.is_constant() => TRational {
                num: self.num.scale(&rhs.num.as_constant().unwrap()),
                den: self.den.clone(),
            },
            _ => TRational::reduce(&self.num * &rhs.num, &self.den * &rhs.den),
        }
    }
}

/// Panics on division by zero; use [`TRational::checked_div`] to get an error instead.
impl<'a> Div<&'a TRational> for &'a TRational {
    type Output = TRational;
    fn div(self, rhs: &TRational) -> TRational {
        self.checked_div(rhs).expect("zero denominator")
    }
}

impl Neg for &TRational {
    type Output = TRational;
    fn neg(self) -> TRational {
        TRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for TRational {
    type Output = TRational;
    fn neg(self) -> TRational {
        -&self
    }
}

impl AddAssign<&TRational> for TRational {
    fn add_assign(&mut self, rhs: &TRational) {
        *self = &*self + rhs;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<TRational> for TRational {
            type Output = TRational;
            fn $m(self, rhs: TRational) -> TRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TRational> for TRational {
            type Output = TRational;
            fn $m(self, rhs: &TRational) -> TRational {
                (&self).$m(rhs)
            }
        }
        impl $tr<TRational> for &TRational {
            type Output = TRational;
            fn $m(self, rhs: TRational) -> TRational {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for TRational {
    /// `(num)` for polynomials, `(num)/(den)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "({})", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for TRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for TRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> TPoly {
        TPoly::from_coeffs(c)
    }

    fn frac(n: &[i64], d: &[i64]) -> TRational {
        TRational::new(p(n), p(d)).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn telescoping_sum() {
        let a = frac(&[1], &[1, -1]);
        let b = frac(&[0, -1], &[1, -1]);
        assert_eq!(&a + &b, TRational::one());
    }

    #[test]
    fn factorization_cancels() {
        let a = TRational::from_poly(p(&[1, 0, -1]));
        let b = frac(&[1], &[1, -1]);
        assert_eq!(&a * &b, TRational::from_poly(p(&[1, 1])));
    }

    #[test]
    fn exact_quotient_is_polynomial() {
        let a = TRational::from_poly(p(&[0, 1, -1, -1, 0, 1]));
        let b = TRational::from_poly(p(&[-1, 1]));
        let c = a.checked_div(&b).unwrap();
        assert_eq!(c, TRational::from_poly(p(&[0, -1, 0, 1, 1])));
        assert_eq!(&c * &b, a);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let err = TRational::one().checked_div(&TRational::zero()).unwrap_err();
        assert_eq!(err, Error::ZeroDenominator);
        assert_eq!(err.to_string(), "zero denominator");
        assert!(TRational::new(p(&[1]), TPoly::zero()).is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(frac(&[1], &[1, -1]).eval(&q(0)).unwrap(), q(1));
        assert_eq!(TRational::from_poly(p(&[0, 1, -1, -1, 0, 1])).eval(&q(2)).unwrap(), q(22));
        assert_eq!(frac(&[1, 0, -1], &[1, -1]).eval(&q(-1)).unwrap(), q(0));
        assert!(matches!(frac(&[1], &[1, -1]).eval(&q(1)), Err(Error::Pole(_))));
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(TRational::from_poly(p(&[1, -1])).substitute_power(2), TRational::from_poly(p(&[1, 0, -1])));
        assert_eq!(TRational::from_int(7).substitute_power(5), TRational::from_int(7));
        assert_eq!(frac(&[1], &[1, -1]).substitute_power(3), frac(&[1], &[1, 0, 0, -1]));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(TRational::from_poly(p(&[0, 1, -1, -1, 0, 1])).to_string(), "(t^5 - t^3 - t^2 + t)");
        assert_eq!(frac(&[2], &[1, 0, -1]).to_string(), "(-2)/(t^2 - 1)");
        assert_eq!(TRational::zero().to_string(), "(0)");
    }

    #[test]
    fn pow2_handles_negative_exponents() {
        assert_eq!(TRational::pow2(3), TRational::from_int(8));
        assert_eq!(TRational::pow2(-2), TRational::ratio(1, 4));
    }
}
