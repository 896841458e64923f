//! Schur Q-functions through the vertex operator `Q(z)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::TRational;
use crate::error::{Error, Result};
use crate::expansion::QExpansion;
use crate::memo::Memo;
use crate::partition::{enumerate, strict_partitions, z_of, PartitionKind, StrictPartition};
use crate::symfunc::{dexp_components, inner_spin, DexpRule, PSeriesElem};

static Q_ONE_ROW: Memo<u32, PSeriesElem> = Memo::new();
static SCHUR_Q: Memo<StrictPartition, PSeriesElem> = Memo::new();

/// `q_m = Σ_{λ ⊢ m odd} 2^{l(λ)}/z_λ p_λ`, with `q_0 = 1`.
pub fn q_one_row(m: u32) -> PSeriesElem {
    Q_ONE_ROW.get_or_insert_with(&m, || {
        PSeriesElem::from_terms(enumerate(PartitionKind::Odd, m).into_iter().map(|l| {
            let c = BigRational::new(BigInt::one() << l.len(), z_of(&l));
            (l, TRational::from_rational(c))
        }))
    })
}

/// `q_m` for any integer `m`; zero when `m < 0`.
pub(crate) fn q_signed(m: i64) -> PSeriesElem {
    if m < 0 {
        PSeriesElem::zero()
    } else {
        q_one_row(m as u32)
    }
}

/// `Q_m f = Σ_{i ≥ 0} q_{m+i} · D_i f` for `f ∈ Γ`.
pub fn q_apply(m: i64, f: &PSeriesElem) -> Result<PSeriesElem> {
    f.check_gamma()?;
    let mut out = PSeriesElem::zero();
    for (i, d) in dexp_components(f, &DexpRule::spin_annihilator()).iter().enumerate() {
        let q = q_signed(m + i as i64);
        if !q.is_zero() && !d.is_zero() {
            out += &(&q * d);
        }
    }
    Ok(out)
}

/// `Q_λ = Q_{λ_1} ⋯ Q_{λ_l}.1`.
pub fn schur_q(lambda: &StrictPartition) -> PSeriesElem {
    SCHUR_Q.get_or_insert_with(lambda, || {
        let parts = lambda.parts();
        if parts.is_empty() {
            return PSeriesElem::one();
        }
        let tail = StrictPartition::new(parts[1..].to_vec()).expect("tail of a strict partition");
        q_apply(parts[0] as i64, &schur_q(&tail)).expect("Q-functions lie in Gamma")
    })
}

/// Coefficients of `f ∈ Γ` in the Q-basis: `⟨f, Q_λ⟩_{-1} / 2^{l(λ)}`.
pub fn expand_in_q_basis(f: &PSeriesElem) -> Result<QExpansion> {
    f.check_gamma()?;
    let mut degrees: Vec<u32> = f.terms().map(|(l, _)| l.weight()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = QExpansion::new();
    for d in degrees {
        let component = f.component(d);
        for lambda in strict_partitions(d) {
            let c = inner_spin(&component, &schur_q(&lambda))?;
            out.add_term(lambda.clone(), c.scale(&BigRational::new(BigInt::one(), BigInt::one() << lambda.len())));
        }
    }
    Ok(out)
}

/// `Σ c_λ Q_λ` back in the power-sum basis.
pub fn reassemble_q(e: &QExpansion) -> PSeriesElem {
    let mut out = PSeriesElem::zero();
    for (lambda, c) in e.terms() {
        out += &schur_q(lambda).scale(c);
    }
    out
}

/// A product `Q_{w_1} ⋯ Q_{w_r}` with arbitrary integer indices.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QWord(pub Vec<i64>);

impl fmt::Display for QWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::partition::Composition(self.0.clone()).fmt(f)
    }
}

impl fmt::Debug for QWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rewrites `Q_{w_1} ⋯ Q_{w_r}.1` as an integer combination of `Q_λ.1` with
/// `λ` strict, using `{Q_m, Q_n} = (-1)^n 2 δ_{m,-n}`, `Q_{-m}.1 = δ_{m,0}`
/// for `m ≥ 0`. Operators are applied right to left, each one moved into
/// place past the already-normalized strict tail.
pub fn normalize_q_word(word: &[i64]) -> QExpansion {
    let mut state: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    state.insert(Vec::new(), BigInt::one());
    for &m in word.iter().rev() {
        let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (lambda, c) in &state {
            for (nu, d) in apply_q(m, lambda) {
                *next.entry(nu).or_insert_with(BigInt::zero) += c * d;
            }
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }
    QExpansion::from_terms(state.into_iter().map(|(parts, c)| {
        (StrictPartition::new(parts).expect("normalized words are strict"), TRational::from_bigint(c))
    }))
}

/// `Q_m Q_λ.1` for strict `λ`, as a list of `(strict partition, coefficient)`.
fn apply_q(m: i64, lambda: &[u32]) -> Vec<(Vec<u32>, BigInt)> {
    let Some(&first) = lambda.first() else {
        return match m.cmp(&0) {
            std::cmp::Ordering::Greater => vec![(vec![m as u32], BigInt::one())],
            std::cmp::Ordering::Equal => vec![(Vec::new(), BigInt::one())],
            std::cmp::Ordering::Less => Vec::new(),
        };
    };
    let l1 = first as i64;
    if m > l1 {
        let mut nu = Vec::with_capacity(lambda.len() + 1);
        nu.push(m as u32);
        nu.extend_from_slice(lambda);
        return vec![(nu, BigInt::one())];
    }
    if m == l1 {
        return Vec::new();
    }
    // Q_m Q_{l1} = -Q_{l1} Q_m + (-1)^{l1} 2 δ_{m,-l1}; every part produced by
    // Q_m on the tail is below l1, so Q_{l1} simply prepends.
    let rest = &lambda[1..];
    let mut out: Vec<(Vec<u32>, BigInt)> = apply_q(m, rest)
        .into_iter()
        .map(|(nu, c)| {
            let mut with_first = Vec::with_capacity(nu.len() + 1);
            with_first.push(first);
            with_first.extend(nu);
            (with_first, -c)
        })
        .collect();
    if m == -l1 {
        let sign = if first % 2 == 0 { 2 } else { -2 };
        out.push((rest.to_vec(), BigInt::from(sign)));
    }
    out
}

/// Raising-operator form of a two-row Q-function:
/// `Q_(m,n) = q_m q_n + 2 Σ_{i=1}^{n} (-1)^i q_{m+i} q_{n-i}`.
pub fn two_row_raising(m: u32, n: u32) -> PSeriesElem {
    let mut out = &q_one_row(m) * &q_one_row(n);
    for i in 1..=n {
        let term = &q_one_row(m + i) * &q_one_row(n - i);
        let c = if i % 2 == 0 { 2 } else { -2 };
        out += &term.scale(&TRational::from_int(c));
    }
    out
}

pub(crate) fn check_odd_s(s: u32) -> Result<()> {
    if s == 0 || s.is_multiple_of(2) {
        Err(Error::EvenS(s))
    } else {
        Ok(())
    }
}
