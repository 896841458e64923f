use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// A polynomial in `t` with exact rational coefficients.
///
/// Stored sparsely as `(exponent, coefficient)` pairs with strictly increasing
/// exponents and no zero coefficients; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    terms: Vec<(u32, BigRational)>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::monomial(1, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(exp: u32, c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            TPoly { terms: vec![(exp, c)] }
        }
    }

    /// Builds a polynomial from dense integer coefficients, lowest degree first.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(e, c)| (e as u32, BigRational::from_integer(BigInt::from(*c))))
            .collect();
        TPoly { terms }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// combining repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (u32, BigRational)>>(pairs: I) -> Self {
        let mut terms: Vec<(u32, BigRational)> = pairs.into_iter().collect();
        terms.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(u32, BigRational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        TPoly { terms: out }
    }

    /// `1 - t^n`.
    pub fn one_minus_t_pow(n: u32) -> Self {
        if n == 0 {
            return Self::zero();
        }
        TPoly {
            terms: vec![
                (0, BigRational::one()),
                (n, -BigRational::one()),
            ],
        }
    }

    pub fn terms(&self) -> &[(u32, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 0)
    }

    /// Constant value, if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn coeff(&self, exp: u32) -> BigRational {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: u32) -> Self {
        TPoly {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, t0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut power = BigRational::one();
        let mut at = 0u32;
        for (e, c) in &self.terms {
            power *= pow_rational(t0, e - at);
            at = *e;
            acc += c * &power;
        }
        acc
    }

    /// Replaces `t` by `t^s`.
    pub fn substitute_power(&self, s: u32) -> Self {
        if s == 0 {
            return Self::constant(self.terms.iter().map(|(_, c)| c.clone()).sum());
        }
        TPoly {
            terms: self.terms.iter().map(|(e, c)| (e * s, c.clone())).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &TPoly) -> (TPoly, TPoly) {
        let (dd, dlc) = match (divisor.degree(), divisor.leading_coeff()) {
            (Some(d), Some(c)) => (d, c.clone()),
            _ => panic!("polynomial division by zero"),
        };
        if divisor.is_constant() {
            return (self.scale(&dlc.recip()), TPoly::zero());
        }
        let (d_den, d_num) = divisor.integer_form();
        let lead = &d_num.last().unwrap().1;
        if !lead.abs().is_one() {
            return self.div_rem_rational(divisor, dd, &dlc);
        }
        // Integer long division: self = N / n_den, divisor = D / d_den.
        let (n_den, n_num) = self.integer_form();
        let top = match self.degree() {
            Some(d) if d >= dd => d as usize,
            _ => return (TPoly::zero(), self.clone()),
        };
        let mut n = vec![BigInt::zero(); top + 1];
        for (e, c) in n_num {
            n[e as usize] = c;
        }
        let mut q = vec![BigInt::zero(); top - dd as usize + 1];
        for i in (dd as usize..=top).rev() {
            if n[i].is_zero() {
                continue;
            }
            let c = &n[i] * lead;
            for (e, dc) in &d_num {
                n[i - dd as usize + *e as usize] -= &c * dc;
            }
            q[i - dd as usize] = c;
        }
        let build = |v: Vec<BigInt>, num: &BigInt| TPoly {
            terms: v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as u32, BigRational::new(c * num, n_den.clone())))
                .collect(),
        };
        (build(q, &d_den), build(n, &BigInt::one()))
    }

    fn div_rem_rational(&self, divisor: &TPoly, dd: u32, dlc: &BigRational) -> (TPoly, TPoly) {
        let top = match self.degree() {
            Some(d) if d >= dd => d as usize,
            _ => return (TPoly::zero(), self.clone()),
        };
        let mut n = vec![BigRational::zero(); top + 1];
        for (e, c) in &self.terms {
            n[*e as usize] = c.clone();
        }
        let mut q = vec![BigRational::zero(); top - dd as usize + 1];
        for i in (dd as usize..=top).rev() {
            if n[i].is_zero() {
                continue;
            }
            let c = &n[i] / dlc;
            for (e, dc) in &divisor.terms {
                n[i - dd as usize + *e as usize] -= &c * dc;
            }
            q[i - dd as usize] = c;
        }
        let build = |v: Vec<BigRational>| TPoly {
            terms: v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (e as u32, c)).collect(),
        };
        (build(q), build(n))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &TPoly, b: &TPoly) -> TPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let shift = a.terms[0].0.min(b.terms[0].0);
        let (x, y) = (primitive_dense(a), primitive_dense(b));
        if x.len() == 1 || y.len() == 1 {
            return TPoly::one().shift(shift);
        }
        let (mut x, mut y) = if x.len() >= y.len() { (x, y) } else { (y, x) };
        // Primitive remainder sequence over Z.
        while y.len() > 1 {
            let r = pseudo_rem(x, &y);
            x = y;
            y = if r.is_empty() { r } else { make_primitive(r) };
        }
        let g = if y.is_empty() { x } else { vec![BigInt::one()] };
        TPoly::from_terms(g.into_iter().enumerate().map(|(e, c)| (e as u32, BigRational::from_integer(c))))
            .monic()
            .shift(shift)
    }

    fn combine(&self, other: &TPoly, negate_other: bool) -> TPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some((ea, _)), Some((eb, _))) => ea.cmp(eb),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (e, c) = &b[j];
                    out.push((*e, if negate_other { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        TPoly { terms: out }
    }
}

impl TPoly {
    /// `(d, n)` with `self = n / d` and `n` integral.
    fn integer_form(&self) -> (BigInt, Vec<(u32, BigInt)>) {
        let den = self.terms.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let nums = self.terms.iter().map(|(e, c)| (*e, c.numer() * (&den / c.denom()))).collect();
        (den, nums)
    }
}

/// Dense primitive integer multiple of `p / t^v`, where `t^v` is the largest
/// power of `t` dividing `p`.
fn primitive_dense(p: &TPoly) -> Vec<BigInt> {
    let low = p.terms[0].0;
    let mut out = vec![BigInt::zero(); (p.degree().unwrap() - low + 1) as usize];
    for (e, c) in p.integer_form().1 {
        out[(e - low) as usize] = c;
    }
    make_primitive(out)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let content = if v.last().is_some_and(|c| c.is_negative()) { -content } else { content };
    if !content.is_one() && !content.is_zero() {
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

/// `lc(b)^k a mod b` for dense integer polynomials, trailing zeros removed.
fn pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().unwrap();
    while a.len() >= b.len() {
        let la = a.pop().unwrap();
        let off = a.len() + 1 - b.len();
        for c in a.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b[..b.len() - 1].iter().enumerate() {
            a[off + i] -= &la * bc;
        }
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
    }
    a
}

pub(crate) fn pow_rational(x: &BigRational, n: u32) -> BigRational {
    num_traits::pow::pow(x.clone(), n as usize)
}

impl<'a> Add<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        self.combine(rhs, false)
    }
}

impl<'a> Sub<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        self.combine(rhs, true)
    }
}

impl<'a> Mul<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // Convolve integer numerators over a common denominator.
        let (da, na) = self.integer_form();
        let (db, nb) = rhs.integer_form();
        let deg = (self.degree().unwrap() + rhs.degree().unwrap()) as usize;
        let mut dense = vec![BigInt::zero(); deg + 1];
        for (ea, ca) in &na {
            for (eb, cb) in &nb {
                dense[(ea + eb) as usize] += ca * cb;
            }
        }
        let den = da * db;
        TPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as u32, BigRational::new(c, den.clone())))
                .collect(),
        }
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        -&self
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        *self = &*self + rhs;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<TPoly> for TPoly {
            type Output = TPoly;
            fn $m(self, rhs: TPoly) -> TPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TPoly> for TPoly {
            type Output = TPoly;
            fn $m(self, rhs: &TPoly) -> TPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<TPoly> for &TPoly {
            type Output = TPoly;
            fn $m(self, rhs: TPoly) -> TPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TPoly {
    /// Highest degree first, e.g. `t^5 - t^3 - t^2 + t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{}", mag)?,
                (_, true) => {}
                (_, false) => write!(f, "{}*", mag)?,
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{}", e)?,
            }
        }
        Ok(())
    }
}

/// Serialized like a polynomial [`super::TRational`]: `"(t^2 - 1)"`.
impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&format_args!("({})", self))
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({})", self)
    }
}
