//! Partitions, strict partitions, compositions and the statistics built on
//! them: `z_λ`, `z_λ(t)`, `b_λ(t)`, residue classes modulo `s`, horizontal
//! strips and their a-numbers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::algebra::{TPoly, TRational};
use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers. Zero parts are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates `parts`; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(to_i64(&parts), "parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// Sorts `parts` into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of (positive) parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `m_i(λ)`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.0.iter().filter(|&&p| p == i).count() as u32
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_parts_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    /// `μ ⊆ λ` (diagram containment).
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect())
    }

    /// The union of parts of `self` and `other`, sorted. This is the index of
    /// the product `p_λ p_μ`.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                parts.push(a[i]);
                i += 1;
            } else {
                parts.push(b[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&a[i..]);
        parts.extend_from_slice(&b[j..]);
        Partition(parts)
    }

    /// Every part multiplied by `s`.
    pub fn scaled(&self, s: u32) -> Partition {
        Partition(self.0.iter().map(|p| p * s).collect())
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.iter().map(|&p| p as i64).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// A strictly decreasing partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        Self::try_from(Partition::new(parts)?)
    }

    pub fn empty() -> Self {
        StrictPartition(Partition::empty())
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.weight()
    }

    pub fn contains(&self, mu: &StrictPartition) -> bool {
        self.0.contains(&mu.0)
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;
    fn try_from(p: Partition) -> Result<Self> {
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(Error::InvalidPartition(to_i64(p.parts()), "parts must be distinct"))
        }
    }
}

impl From<StrictPartition> for Partition {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for StrictPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// An arbitrary finite integer sequence. Negative entries appear as
/// intermediate states of straightening.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<i64>);

impl Composition {
    pub fn new(parts: Vec<i64>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Number of strictly positive entries, `l(ν)`.
    pub fn positive_len(&self) -> usize {
        self.0.iter().filter(|&&x| x > 0).count()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Smallest 0-based `i` with `μ_i < μ_{i+1}`.
    pub fn first_inversion(&self) -> Option<usize> {
        self.0.windows(2).position(|w| w[0] < w[1])
    }

    /// The partition this composition denotes, if it is weakly decreasing with
    /// no negative entries (trailing zeros are dropped).
    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_weakly_decreasing() || self.0.iter().any(|&x| x < 0) {
            return None;
        }
        Some(Partition(self.0.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect()))
    }

    /// Dominance order extended to compositions: every partial sum of `self`
    /// is at least the corresponding partial sum of `other`, and the totals agree.
    pub fn dominates(&self, other: &Composition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0i64, 0i64);
        for i in 0..n {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn to_i64(parts: &[u32]) -> Vec<i64> {
    parts.iter().map(|&p| p as i64).collect()
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `z_λ = ∏ i^{m_i} m_i!`.
pub fn z_of(lambda: &Partition) -> BigInt {
    lambda
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (i, m)| acc * BigInt::from(i).pow(m) * factorial(m))
}

/// `z_λ(t) = z_λ / ∏ (1 - t^i)^{m_i}`.
pub fn z_t_of(lambda: &Partition) -> TRational {
    let den = lambda
        .parts()
        .iter()
        .fold(TPoly::one(), |acc, &i| &acc * &TPoly::one_minus_t_pow(i));
    TRational::new(TPoly::constant(z_of(lambda).into()), den).expect("1 - t^i is nonzero")
}

/// `1 / z_λ(t) = ∏ (1 - t^i)^{m_i} / z_λ`, a polynomial.
pub fn z_t_inverse(lambda: &Partition) -> TPoly {
    let num = lambda
        .parts()
        .iter()
        .fold(TPoly::one(), |acc, &i| &acc * &TPoly::one_minus_t_pow(i));
    num.scale(&num_rational::BigRational::new(BigInt::one(), z_of(lambda)))
}

/// `[n]! = ∏_{j=1}^{n} (1 - t^j)/(1 - t)`.
pub fn t_factorial(n: u32) -> TPoly {
    (1..=n).fold(TPoly::one(), |acc, j| {
        let qint = TPoly::from_terms((0..j).map(|e| (e, crate::algebra::rat(1))));
        &acc * &qint
    })
}

/// `b_λ(t) = (1 - t)^{l(λ)} ∏ [m_i(λ)]!`.
pub fn b_t_of(lambda: &Partition) -> TPoly {
    let base = TPoly::one_minus_t_pow(1).pow(lambda.len() as u32);
    lambda
        .multiplicities()
        .into_iter()
        .fold(base, |acc, (_, m)| &acc * &t_factorial(m))
}

/// The parts of a partition split by residue modulo `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueDecomposition {
    pub s: u32,
    /// `classes[r]` lists the parts `≡ r (mod s)`, strictly decreasing for
    /// strict input.
    pub classes: Vec<Vec<u32>>,
}

impl ResidueDecomposition {
    /// `n_r(λ)`.
    pub fn count(&self, r: u32) -> usize {
        self.classes[r as usize].len()
    }

    /// The parts in residue order, then decreasing; sorting recovers `λ`.
    pub fn flatten(&self) -> Vec<u32> {
        self.classes.iter().flatten().copied().collect()
    }
}

/// Splits `parts` (which may contain a zero) into residue classes modulo `s`,
/// each in decreasing order.
pub(crate) fn residue_classes(parts: &[u32], s: u32) -> Vec<Vec<u32>> {
    let mut classes = vec![Vec::new(); s as usize];
    for &p in parts {
        classes[(p % s) as usize].push(p);
    }
    for c in &mut classes {
        c.sort_unstable_by(|a, b| b.cmp(a));
    }
    classes
}

/// `N_r(λ)_>` for every `r` in `0..s`.
pub fn residues(lambda: &Partition, s: u32) -> Result<ResidueDecomposition> {
    if s == 0 {
        return Err(Error::InvalidArgument("modulus s must be positive".into()));
    }
    Ok(ResidueDecomposition { s, classes: residue_classes(lambda.parts(), s) })
}

/// Interlacing test on raw decreasing lists: `big_i ≥ small_i ≥ big_{i+1}`
/// for every `i`, `len(small) ≤ len(big)`. Missing parts count as zero.
pub(crate) fn interlaces(big: &[u32], small: &[u32]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let get = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0);
    (0..big.len()).all(|i| get(big, i) >= get(small, i) && get(small, i) >= get(big, i + 1))
}

/// a-number of an interlacing pair given as raw lists: the number of columns
/// `c` holding a box of the strip while column `c + 1` holds none.
pub(crate) fn strip_a_number(big: &[u32], small: &[u32]) -> u32 {
    let get = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0);
    // Row i covers columns small_i + 1 ..= big_i; the intervals are disjoint.
    let mut intervals: Vec<(u32, u32)> = (0..big.len())
        .map(|i| (get(small, i) + 1, get(big, i)))
        .filter(|(lo, hi)| lo <= hi)
        .collect();
    intervals.sort_unstable();
    let mut count = 0;
    for (k, &(_, hi)) in intervals.iter().enumerate() {
        let continues = intervals.get(k + 1).is_some_and(|&(lo, _)| lo == hi + 1);
        if !continues {
            count += 1;
        }
    }
    count
}

/// `λ/μ` is a horizontal strip: `μ ⊆ λ` and `λ_i ≥ μ_i ≥ λ_{i+1}`.
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    interlaces(lambda.parts(), mu.parts())
}

/// Counts columns `i ≥ 1` where `λ/μ` has a box in column `i` but none in column `i + 1`.
pub fn a_number(lambda: &Partition, mu: &Partition) -> Result<u32> {
    if !is_horizontal_strip(lambda, mu) {
        return Err(Error::NotHorizontalStrip {
            lambda: lambda.parts().to_vec(),
            mu: mu.parts().to_vec(),
        });
    }
    Ok(strip_a_number(lambda.parts(), mu.parts()))
}

/// Which partitions [`enumerate`] produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionKind {
    All,
    Strict,
    Odd,
}

/// All partitions of `n` of the given kind, in reverse lexicographic order.
pub fn enumerate(kind: PartitionKind, n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(kind, n, n, &mut current, &mut out);
    out
}

fn fill(kind: PartitionKind, remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        if kind == PartitionKind::Odd && part % 2 == 0 {
            continue;
        }
        current.push(part);
        let next_max = if kind == PartitionKind::Strict { part - 1 } else { part };
        fill(kind, remaining - part, next_max, current, out);
        current.pop();
    }
}

/// Strict partitions of `n`, reverse lexicographic.
pub fn strict_partitions(n: u32) -> Vec<StrictPartition> {
    enumerate(PartitionKind::Strict, n).into_iter().map(StrictPartition).collect()
}

/// All length-`length` vectors of nonnegative integers summing to `k`, with the
/// first entry decreasing fastest: `(k,0,…), (k-1,1,…), …`.
pub fn weak_compositions(k: u32, length: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if length == 0 {
        if k == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    let mut current = vec![0i64; length];
    weak_fill(k as i64, 0, &mut current, &mut out);
    out
}

fn weak_fill(remaining: i64, pos: usize, current: &mut Vec<i64>, out: &mut Vec<Composition>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Composition(current.clone()));
        return;
    }
    for v in (0..=remaining).rev() {
        current[pos] = v;
        weak_fill(remaining - v, pos + 1, current, out);
    }
}
