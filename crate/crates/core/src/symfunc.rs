//! The ring of symmetric functions over Q(t) in the power-sum basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::algebra::{TPoly, TRational};
use crate::error::{Error, Result};
use crate::partition::{z_of, z_t_of, Partition};

/// A finite linear combination of power-sum monomials `p_λ`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PSeriesElem {
    terms: BTreeMap<Partition, TRational>,
}

impl PSeriesElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), TRational::one())
    }

    /// `c·p_λ`.
    pub fn monomial(lambda: Partition, c: TRational) -> Self {
        let mut out = Self::zero();
        out.add_term(lambda, c);
        out
    }

    /// The power sum `p_n`; `p_0` is taken to be 1.
    pub fn p(n: u32) -> Self {
        Self::monomial(Partition::from_unsorted(vec![n]), TRational::one())
    }

    pub fn p_lambda(lambda: Partition) -> Self {
        Self::monomial(lambda, TRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, TRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (lambda, c) in terms {
            out.add_term(lambda, c);
        }
        out
    }

    /// Adds `c·p_λ`, dropping the entry if it cancels.
    pub fn add_term(&mut self, lambda: Partition, c: TRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &TRational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Partition, TRational> {
        self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> TRational {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|λ|` among the terms, `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::weight).max()
    }

    /// The degree if every term has the same weight.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Partition::weight);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The degree-`d` part.
    pub fn component(&self, d: u32) -> PSeriesElem {
        PSeriesElem {
            terms: self.terms.iter().filter(|(l, _)| l.weight() == d).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// Every `p_λ` has only odd parts, i.e. the element lies in Γ.
    pub fn is_in_gamma(&self) -> bool {
        self.terms.keys().all(Partition::all_parts_odd)
    }

    pub(crate) fn check_gamma(&self) -> Result<()> {
        match self.terms.keys().find(|l| !l.all_parts_odd()) {
            Some(l) => Err(Error::NotInGamma(l.parts().to_vec())),
            None => Ok(()),
        }
    }

    pub fn scale(&self, c: &TRational) -> PSeriesElem {
        if c.is_zero() {
            return Self::zero();
        }
        PSeriesElem { terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect() }
    }

    pub fn scale_rational(&self, c: &BigRational) -> PSeriesElem {
        if c.is_zero() {
            return Self::zero();
        }
        PSeriesElem { terms: self.terms.iter().map(|(l, x)| (l.clone(), x.scale(c))).collect() }
    }

    /// Applies `g` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, mut g: impl FnMut(&TRational) -> TRational) -> PSeriesElem {
        Self::from_terms(self.terms.iter().map(|(l, c)| (l.clone(), g(c))))
    }

    /// Evaluates every coefficient at `t = t0`.
    pub fn specialize(&self, t0: &BigRational) -> Result<PSeriesElem> {
        let mut out = Self::zero();
        for (l, c) in &self.terms {
            out.add_term(l.clone(), TRational::from_rational(c.eval(t0)?));
        }
        Ok(out)
    }

    /// `p_s ∘ f`: `p_m ↦ p_{sm}`, coefficients unchanged.
    pub fn pleth_ps(&self, s: u32) -> PSeriesElem {
        PSeriesElem { terms: self.terms.iter().map(|(l, c)| (l.scaled(s), c.clone())).collect() }
    }

    /// `p_s ⋄ f`: `p_m ↦ p_{sm}` and `c(t) ↦ c(t^s)`.
    pub fn tpleth_ps(&self, s: u32) -> PSeriesElem {
        PSeriesElem {
            terms: self.terms.iter().map(|(l, c)| (l.scaled(s), c.substitute_power(s))).collect(),
        }
    }
}

/// Product in the free commutative algebra on `p_1, p_2, …`.
pub fn ps_mul(f: &PSeriesElem, g: &PSeriesElem) -> PSeriesElem {
    let mut out = PSeriesElem::zero();
    for (a, x) in &f.terms {
        for (b, y) in &g.terms {
            out.add_term(a.merge(b), x * y);
        }
    }
    out
}

/// `⟨f, g⟩_t` with `⟨p_λ, p_μ⟩_t = δ_{λμ} z_λ(t)`.
pub fn inner_t(f: &PSeriesElem, g: &PSeriesElem) -> TRational {
    // z_λ(t) = z_λ / P_λ with P_λ = ∏ (1 - t^{λ_i}). Terms whose product
    // f_λ g_λ is a polynomial divisible by P_λ are summed as polynomials.
    let mut poly = TPoly::zero();
    let mut acc = TRational::zero();
    for (l, x) in &f.terms {
        let Some(y) = g.terms.get(l) else { continue };
        let c = x * y;
        if let Some(p) = c.as_poly() {
            let p_l = l.parts().iter().fold(TPoly::one(), |acc, &i| &acc * &TPoly::one_minus_t_pow(i));
            let (q, r) = p.div_rem(&p_l);
            if r.is_zero() {
                poly += &q.scale(&BigRational::from_integer(z_of(l)));
                continue;
            }
        }
        acc += &(&c * &z_t_of(l));
    }
    &acc + &TRational::from_poly(poly)
}

/// `⟨f, g⟩_{-1}` with `⟨p_λ, p_μ⟩_{-1} = δ_{λμ} z_λ / 2^{l(λ)}`, defined on Γ.
pub fn inner_spin(f: &PSeriesElem, g: &PSeriesElem) -> Result<TRational> {
    f.check_gamma()?;
    g.check_gamma()?;
    let mut acc = TRational::zero();
    for (l, x) in &f.terms {
        if let Some(y) = g.terms.get(l) {
            let w = BigRational::new(z_of(l), BigInt::one() << l.len());
            acc += &(x * y).scale(&w);
        }
    }
    Ok(acc)
}

/// `p_s ∘ f`.
pub fn pleth_ps(f: &PSeriesElem, s: u32) -> PSeriesElem {
    f.pleth_ps(s)
}

/// `p_s ⋄ f`.
pub fn tpleth_ps(f: &PSeriesElem, s: u32) -> PSeriesElem {
    f.tpleth_ps(s)
}

/// Evaluates every coefficient of `f` at `t = t0`.
pub fn specialize(f: &PSeriesElem, t0: &BigRational) -> Result<PSeriesElem> {
    f.specialize(t0)
}

/// Which adjoint of multiplication by `p_m` to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkewMode {
    /// `p*_m = m/(1 - t^m) ∂/∂p_m`.
    Hall,
    /// `p⁻_m = m/2 ∂/∂p_m`, for odd `m`.
    Spin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkewSpec {
    pub mode: SkewMode,
    pub m: u32,
}

impl SkewSpec {
    pub fn new(mode: SkewMode, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("skew index must be positive".into()));
        }
        if mode == SkewMode::Spin && m.is_multiple_of(2) {
            return Err(Error::NotInGamma(vec![m]));
        }
        Ok(SkewSpec { mode, m })
    }
}

/// `∂/∂p_m` in the power-sum basis.
pub fn partial(f: &PSeriesElem, m: u32) -> PSeriesElem {
    let mut out = PSeriesElem::zero();
    for (l, c) in &f.terms {
        let mult = l.multiplicity(m);
        if mult == 0 {
            continue;
        }
        let mut parts = l.parts().to_vec();
        let pos = parts.iter().position(|&p| p == m).unwrap();
        parts.remove(pos);
        out.add_term(Partition::from_unsorted(parts), c.scale(&BigRational::from_integer(mult.into())));
    }
    out
}

/// Applies `p*_m` or `p⁻_m`.
pub fn skew_apply(spec: SkewSpec, f: &PSeriesElem) -> PSeriesElem {
    let d = partial(f, spec.m);
    let factor = match spec.mode {
        SkewMode::Hall => TRational::new(TPoly::from_int(spec.m as i64), TPoly::one_minus_t_pow(spec.m))
            .expect("1 - t^m is nonzero"),
        SkewMode::Spin => TRational::ratio(spec.m as i64, 2),
    };
    d.scale(&factor)
}

/// Coefficient rule for `exp(Σ_j c ∂/∂p_{stride·j} z^{-j})`, with `j` ranging over
/// all positive integers or only odd ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DexpRule {
    pub stride: u32,
    pub odd_only: bool,
    pub coeff: BigRational,
}

impl DexpRule {
    pub fn new(stride: u32, odd_only: bool, coeff: BigRational) -> Result<Self> {
        if stride == 0 {
            return Err(Error::InvalidArgument("stride must be positive".into()));
        }
        Ok(DexpRule { stride, odd_only, coeff })
    }

    /// Annihilation half of `Q(z)`: `exp(-Σ_{m odd} ∂/∂p_m z^{-m})`.
    pub fn spin_annihilator() -> Self {
        DexpRule { stride: 1, odd_only: true, coeff: -BigRational::one() }
    }

    /// Annihilation half of `H(z)`: `exp(-Σ_m ∂/∂p_m z^{-m})`.
    pub fn hall_annihilator() -> Self {
        DexpRule { stride: 1, odd_only: false, coeff: -BigRational::one() }
    }

    /// Annihilation half of `H*(z)`: `exp(Σ_m ∂/∂p_m z^{-m})`.
    pub fn hall_adjoint() -> Self {
        DexpRule { stride: 1, odd_only: false, coeff: BigRational::one() }
    }

    /// Adjoint of multiplication by `p_s ∘ q_k`: `exp(Σ_{j odd} s ∂/∂p_{sj} z^{-j})`.
    pub fn spin_pleth_adjoint(s: u32) -> Self {
        DexpRule { stride: s, odd_only: true, coeff: BigRational::from_integer(s.into()) }
    }

    /// Adjoint of multiplication by `p_s ⋄ q_k(t)`: `exp(Σ_j s ∂/∂p_{sj} z^{-j})`.
    pub fn hall_pleth_adjoint(s: u32) -> Self {
        DexpRule { stride: s, odd_only: false, coeff: BigRational::from_integer(s.into()) }
    }

    fn weight_of(&self, part: u32) -> Option<u32> {
        if !part.is_multiple_of(self.stride) {
            return None;
        }
        let j = part / self.stride;
        (!self.odd_only || j % 2 == 1).then_some(j)
    }
}

/// Graded components `[D_0 f, D_1 f, …]` of `exp(Σ_j c ∂/∂p_{stride·j} z^{-j}) f`,
/// `D_i` collecting the coefficient of `z^{-i}`. The list stops at the last
/// nonzero component (it is `[]` for `f = 0`).
pub fn dexp_components(f: &PSeriesElem, rule: &DexpRule) -> Vec<PSeriesElem> {
    let mut out: Vec<PSeriesElem> = Vec::new();
    for (kappa, c) in &f.terms {
        // Eligible distinct parts with their multiplicity and z-weight.
        let mut eligible = Vec::new();
        let mut rest = Vec::new();
        for (part, mult) in kappa.multiplicities() {
            match rule.weight_of(part) {
                Some(j) => eligible.push((part, mult, j)),
                None => rest.extend(std::iter::repeat_n(part, mult as usize)),
            }
        }
        let mut choice = vec![0u32; eligible.len()];
        expand_choices(&eligible, 0, &mut choice, rule, c, &rest, &mut out);
    }
    while out.last().is_some_and(PSeriesElem::is_zero) {
        out.pop();
    }
    out
}

fn expand_choices(
    eligible: &[(u32, u32, u32)],
    pos: usize,
    choice: &mut Vec<u32>,
    rule: &DexpRule,
    c: &TRational,
    rest: &[u32],
    out: &mut Vec<PSeriesElem>,
) {
    if pos < eligible.len() {
        for e in 0..=eligible[pos].1 {
            choice[pos] = e;
            expand_choices(eligible, pos + 1, choice, rule, c, rest, out);
        }
        return;
    }
    let mut weight = 0u32;
    let mut removed = 0u32;
    let mut factor = BigInt::one();
    let mut parts = rest.to_vec();
    for (&(part, mult, j), &e) in eligible.iter().zip(choice.iter()) {
        weight += e * j;
        removed += e;
        factor *= binomial(mult, e);
        parts.extend(std::iter::repeat_n(part, (mult - e) as usize));
    }
    let scalar = BigRational::from_integer(factor) * pow_big(&rule.coeff, removed);
    if out.len() <= weight as usize {
        out.resize_with(weight as usize + 1, PSeriesElem::zero);
    }
    out[weight as usize].add_term(Partition::from_unsorted(parts), c.scale(&scalar));
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn pow_big(x: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

/// Least common multiple of `z_λ` over a list of partitions; handy for
/// clearing denominators in tests.
pub fn z_lcm<'a>(lambdas: impl IntoIterator<Item = &'a Partition>) -> BigInt {
    lambdas.into_iter().fold(BigInt::one(), |acc, l| acc.lcm(&z_of(l)))
}

impl Add<&PSeriesElem> for &PSeriesElem {
    type Output = PSeriesElem;
    fn add(self, rhs: &PSeriesElem) -> PSeriesElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&PSeriesElem> for &PSeriesElem {
    type Output = PSeriesElem;
    fn sub(self, rhs: &PSeriesElem) -> PSeriesElem {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), -c);
        }
        out
    }
}

impl Mul<&PSeriesElem> for &PSeriesElem {
    type Output = PSeriesElem;
    fn mul(self, rhs: &PSeriesElem) -> PSeriesElem {
        ps_mul(self, rhs)
    }
}

impl Neg for &PSeriesElem {
    type Output = PSeriesElem;
    fn neg(self) -> PSeriesElem {
        PSeriesElem { terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect() }
    }
}

impl AddAssign<&PSeriesElem> for PSeriesElem {
    fn add_assign(&mut self, rhs: &PSeriesElem) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c.clone());
        }
    }
}

impl fmt::Display for PSeriesElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*p{}", c, l)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PSeriesElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize)]
struct PTerm<'a> {
    partition: &'a Partition,
    coeff: &'a TRational,
}

impl Serialize for PSeriesElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (partition, coeff) in &self.terms {
            seq.serialize_element(&PTerm { partition, coeff })?;
        }
        seq.end()
    }
}
