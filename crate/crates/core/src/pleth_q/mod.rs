//! Plethystic Murnaghan-Nakayama rule for Schur Q-functions: the expansion
//! of `(p_s ∘ q_k)·Q_μ` (for odd `s`) by Pfaffians of `M̃(λ/μ)` and by
//! symmetric horizontal strips.

pub mod pfaffian;
pub mod strip;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::algebra::TRational;
use crate::error::{Error, Result};
use crate::expansion::QExpansion;
use crate::partition::{strict_partitions, weak_compositions, StrictPartition};
use crate::schur_q::{check_odd_s, normalize_q_word};
use crate::symfunc::{dexp_components, DexpRule, PSeriesElem};

pub use pfaffian::{determinant, inversions, pfaffian, pfaffian_matchings, pfaffian_row_expansion, AntisymMatrix};
pub use strip::{a_number_normalized, is_strip, sigma_of, sign_graphical, Permutation, StripCertificate};

/// `f_j`: 1 for `j = 0`, 2 for positive multiples of `s`, otherwise 0.
pub fn f_scalar(j: i64, s: u32) -> i64 {
    if j == 0 {
        1
    } else if j > 0 && j % s as i64 == 0 {
        2
    } else {
        0
    }
}

/// `f_(m,n) = f_m f_n + 2 Σ_{j=1}^{n} (-1)^j f_{m+j} f_{n-j}`.
pub fn f_pair(m: u32, n: u32, s: u32) -> i64 {
    let (m, n) = (m as i64, n as i64);
    let mut acc = f_scalar(m, s) * f_scalar(n, s);
    for j in 1..=n {
        let sign = if j % 2 == 0 { 2 } else { -2 };
        acc += sign * f_scalar(m + j, s) * f_scalar(n - j, s);
    }
    acc
}

/// Closed form of `f_(m,n)` for `m + n ≥ 1`, with `r = n mod s`:
/// `4(-1)^r` if `s | m + n` and `r > 0`; `2` if `s | m`, `n = 0`;
/// `-2` if `s | n`, `m = 0`; otherwise `0`.
pub fn f_pair_closed(m: u32, n: u32, s: u32) -> i64 {
    if n == 0 {
        return if m.is_multiple_of(s) { 2 } else { 0 };
    }
    if m == 0 {
        return if n.is_multiple_of(s) { -2 } else { 0 };
    }
    if !(m + n).is_multiple_of(s) {
        return 0;
    }
    match n % s {
        0 => 0,
        r if r % 2 == 0 => 4,
        _ => -4,
    }
}

/// `M̃(λ/μ)`: rows `1..a` carry the parts of (padded) `μ` in increasing
/// order, rows `a+1..a+b` the parts of `λ`; the `μ×μ` block is zero, the
/// `μ×λ` block holds `f_{λ_j - μ_{a-i+1}}` and the `λ×λ` block `f_(λ_i,λ_j)`.
pub fn build_m_tilde(lambda: &StrictPartition, mu: &StrictPartition, s: u32) -> Result<AntisymMatrix> {
    check_odd_s(s)?;
    if !lambda.contains(mu) {
        return Err(Error::NotContained { lambda: lambda.parts().to_vec(), mu: mu.parts().to_vec() });
    }
    let (mu_parts, _) = strip::padded_mu(lambda, mu);
    let (a, b) = (mu_parts.len(), lambda.len());
    let lam = lambda.parts();
    let mut m = AntisymMatrix::zeros(a + b);
    for i in 0..a {
        let mu_i = mu_parts[a - 1 - i] as i64;
        for (j, &l) in lam.iter().enumerate() {
            m.set(i, a + j, f_scalar(l as i64 - mu_i, s));
        }
    }
    for i in 0..b {
        for j in i + 1..b {
            m.set(a + i, a + j, f_pair(lam[i], lam[j], s));
        }
    }
    Ok(m)
}

/// `Pf(M̃(λ/μ))`: the coefficient of `Q_μ.1` in `T^{(s)-}_k Q_λ.1` with
/// `sk = |λ| - |μ|`.
pub fn coeff_pfaffian(lambda: &StrictPartition, mu: &StrictPartition, s: u32) -> Result<BigInt> {
    check_odd_s(s)?;
    strip::degree_k(lambda, mu, s)?;
    pfaffian(&build_m_tilde(lambda, mu, s)?)
}

/// `T^{(s)-}_k f`, the adjoint of multiplication by `p_s ∘ q_k` under the
/// spin inner product.
pub fn adjoint_t_apply(s: u32, k: u32, f: &PSeriesElem) -> Result<PSeriesElem> {
    check_odd_s(s)?;
    f.check_gamma()?;
    let rule = DexpRule::spin_pleth_adjoint(s);
    Ok(dexp_components(f, &rule).into_iter().nth(k as usize).unwrap_or_default())
}

/// `T^{(s)-}_k Q_λ.1 = Σ_{ν ⊨ k} 2^{l(ν)} Q_{λ - sν}.1`, the words on the right
/// normalized by the Clifford relations.
pub fn adjoint_t_expand(s: u32, k: u32, lambda: &StrictPartition) -> Result<QExpansion> {
    check_odd_s(s)?;
    let mut out = QExpansion::new();
    for nu in weak_compositions(k, lambda.len()) {
        let word: Vec<i64> = lambda.parts().iter().zip(nu.parts()).map(|(&l, &v)| l as i64 - s as i64 * v).collect();
        let weight = TRational::pow2(nu.positive_len() as i64);
        out.add_scaled(&normalize_q_word(&word), &weight);
    }
    Ok(out)
}

/// Strict `λ ⊇ μ` with `|λ| = |μ| + sk`.
fn candidates(s: u32, k: u32, mu: &StrictPartition) -> Vec<StrictPartition> {
    strict_partitions(mu.weight() + s * k).into_iter().filter(|l| l.contains(mu)).collect()
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidArgument("k must be a positive integer".into()))
    } else {
        Ok(())
    }
}

/// `(p_s ∘ q_k) Q_μ = Σ_λ sgn(σ) 2^{A(λ/μ)} 2^{l(μ) - l(λ)} Q_λ` over
/// symmetric horizontal `(s,k)`-strips `λ/μ`.
pub fn pleth_expand_comb(s: u32, k: u32, mu: &StrictPartition) -> Result<QExpansion> {
    check_odd_s(s)?;
    check_k(k)?;
    let terms: Vec<(StrictPartition, TRational)> = candidates(s, k, mu)
        .into_par_iter()
        .filter_map(|lambda| {
            let cert = strip::strip_certificate(&lambda, mu, s, k)?;
            let exp = cert.a_value as i64 + mu.len() as i64 - lambda.len() as i64;
            Some((lambda, TRational::pow2(exp).scale(&crate::algebra::rat(cert.sign as i64))))
        })
        .collect();
    Ok(QExpansion::from_terms(terms))
}

/// `(p_s ∘ q_k) Q_μ = Σ_λ 2^{l(μ) - l(λ)} Pf(M̃(λ/μ)) Q_λ`, evaluating
/// Pfaffians only where `λ/μ` is a symmetric horizontal strip (the
/// coefficient vanishes elsewhere).
pub fn pleth_expand_pf(s: u32, k: u32, mu: &StrictPartition) -> Result<QExpansion> {
    expand_pf(s, k, mu, true)
}

/// As [`pleth_expand_pf`] but evaluating the Pfaffian for every candidate.
pub fn pleth_expand_pf_exhaustive(s: u32, k: u32, mu: &StrictPartition) -> Result<QExpansion> {
    expand_pf(s, k, mu, false)
}

fn expand_pf(s: u32, k: u32, mu: &StrictPartition, prune: bool) -> Result<QExpansion> {
    check_odd_s(s)?;
    check_k(k)?;
    let terms: Result<Vec<(StrictPartition, TRational)>> = candidates(s, k, mu)
        .into_par_iter()
        .filter(|lambda| !prune || strip::strip_certificate(lambda, mu, s, k).is_some())
        .map(|lambda| {
            let pf = pfaffian(&build_m_tilde(&lambda, mu, s)?)?;
            let c = TRational::pow2(mu.len() as i64 - lambda.len() as i64).scale(&BigRational::from_integer(pf));
            Ok((lambda, c))
        })
        .collect();
    Ok(QExpansion::from_terms(terms?))
}
