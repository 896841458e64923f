//! Exact scalars: rationals (re-exported from `num-rational`), polynomials in
//! `t` over Q, and the field Q(t) of rational functions in which every
//! coefficient of the library lives.

mod poly;
mod rational_fn;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::TPoly;
pub use rational_fn::TRational;

/// Shorthand for an integer-valued [`BigRational`].
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
