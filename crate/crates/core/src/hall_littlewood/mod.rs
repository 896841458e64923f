//! Hall-Littlewood functions `Q_λ(t) = H_λ.1` through the vertex operators
//! `H(z)`, `H*(z)`, and the plethystic Murnaghan-Nakayama rule for
//! `(p_s ⋄ q_k(t))·H_μ.1`.

pub mod straighten;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{TPoly, TRational};
use crate::error::{Error, Result};
use crate::expansion::HExpansion;
use crate::memo::Memo;
use crate::partition::{b_t_of, enumerate, weak_compositions, z_t_inverse, Composition, Partition, PartitionKind};
use crate::symfunc::{dexp_components, inner_t, DexpRule, PSeriesElem};

pub use straighten::{
    apply_move, b_coeff, c_coeff, canonical_paths, straighten, straighten_by_paths, straighten_tree, PathNode,
    StraighteningPath,
};

static Q_T: Memo<u32, PSeriesElem> = Memo::new();
static HL: Memo<Partition, PSeriesElem> = Memo::new();

/// `q_m(t) = H_m.1 = Σ_{λ ⊢ m} p_λ / z_λ(t)`.
pub fn q_t(m: u32) -> PSeriesElem {
    Q_T.get_or_insert_with(&m, || {
        PSeriesElem::from_terms(
            enumerate(PartitionKind::All, m).into_iter().map(|l| {
                let c = TRational::from_poly(z_t_inverse(&l));
                (l, c)
            }),
        )
    })
}

fn q_t_signed(m: i64) -> PSeriesElem {
    if m < 0 {
        PSeriesElem::zero()
    } else {
        q_t(m as u32)
    }
}

/// `H*_{-m}.1 = Σ_{λ ⊢ m} (-1)^{l(λ)} p_λ / z_λ(t)`.
pub fn hstar_vacuum(m: u32) -> PSeriesElem {
    PSeriesElem::from_terms(enumerate(PartitionKind::All, m).into_iter().map(|l| {
        let sign = if l.len() % 2 == 0 { 1 } else { -1 };
        let c = TRational::from_poly(z_t_inverse(&l).scale(&crate::algebra::rat(sign)));
        (l, c)
    }))
}

/// `H_m f = Σ_{i ≥ 0} q_{m+i}(t) · D_i f`.
pub fn h_apply(m: i64, f: &PSeriesElem) -> PSeriesElem {
    let mut out = PSeriesElem::zero();
    for (i, d) in dexp_components(f, &DexpRule::hall_annihilator()).iter().enumerate() {
        let q = q_t_signed(m + i as i64);
        if !q.is_zero() && !d.is_zero() {
            out += &(&q * d);
        }
    }
    out
}

/// `H*_m f = Σ_{j ≥ 0} H*_{-j}.1 · D⁺_{j+m} f`, where `D⁺` are the graded
/// pieces of `exp(Σ ∂/∂p_n z^{-n})`.
pub fn hstar_apply(m: i64, f: &PSeriesElem) -> PSeriesElem {
    let d = dexp_components(f, &DexpRule::hall_adjoint());
    let mut out = PSeriesElem::zero();
    for (i, piece) in d.iter().enumerate() {
        let j = i as i64 - m;
        if j < 0 || piece.is_zero() {
            continue;
        }
        out += &(&hstar_vacuum(j as u32) * piece);
    }
    out
}

/// `Q_λ(t) = H_{λ_1} ⋯ H_{λ_l}.1`.
pub fn hl_function(lambda: &Partition) -> PSeriesElem {
    HL.get_or_insert_with(lambda, || {
        let parts = lambda.parts();
        if parts.is_empty() {
            return PSeriesElem::one();
        }
        let tail = Partition::new(parts[1..].to_vec()).expect("tail of a partition");
        h_apply(parts[0] as i64, &hl_function(&tail))
    })
}

/// `H_{μ_1} ⋯ H_{μ_l}.1` for an arbitrary composition, applied literally.
pub fn h_word(mu: &Composition) -> PSeriesElem {
    mu.parts().iter().rev().fold(PSeriesElem::one(), |f, &m| h_apply(m, &f))
}

/// Coefficients in the basis `H_λ.1`: `⟨f, H_λ.1⟩_t / b_λ(t)`, degree by degree.
pub fn expand_in_h(f: &PSeriesElem) -> HExpansion {
    let mut degrees: Vec<u32> = f.terms().map(|(l, _)| l.weight()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = HExpansion::new();
    for d in degrees {
        let component = f.component(d);
        let terms: Vec<(Partition, TRational)> = enumerate(PartitionKind::All, d)
            .into_par_iter()
            .map(|lambda| {
                let num = inner_t(&component, &hl_function(&lambda));
                let c = num.checked_div(&TRational::from_poly(b_t_of(&lambda))).expect("b_λ(t) is nonzero");
                (lambda, c)
            })
            .collect();
        for (lambda, c) in terms {
            out.add_term(lambda, c);
        }
    }
    out
}

/// `Σ c_λ H_λ.1` back in the power-sum basis.
pub fn reassemble_h(e: &HExpansion) -> PSeriesElem {
    let mut out = PSeriesElem::zero();
    for (lambda, c) in e.terms() {
        out += &hl_function(lambda).scale(c);
    }
    out
}

/// `L^{(s)}_m.1 = Σ_{λ ⊢ m} p_{sλ} / z_λ(t^s)`.
pub fn l_op_vacuum(s: u32, m: u32) -> PSeriesElem {
    PSeriesElem::from_terms(
        enumerate(PartitionKind::All, m)
            .into_iter()
            .map(|l| (l.scaled(s), TRational::from_poly(z_t_inverse(&l).substitute_power(s)))),
    )
}

/// `L^{(s)*}_k f`, the adjoint of multiplication by `p_s ⋄ q_k(t)` under `⟨,⟩_t`.
pub fn l_star_apply(s: u32, k: u32, f: &PSeriesElem) -> Result<PSeriesElem> {
    check_s(s)?;
    let rule = DexpRule::hall_pleth_adjoint(s);
    Ok(dexp_components(f, &rule).into_iter().nth(k as usize).unwrap_or_default())
}

fn check_s(s: u32) -> Result<()> {
    if s == 0 {
        Err(Error::InvalidArgument("s must be a positive integer".into()))
    } else {
        Ok(())
    }
}

fn add_map(acc: &mut BTreeMap<Partition, TPoly>, key: Partition, c: TPoly) {
    let entry = acc.entry(key).or_insert_with(TPoly::zero);
    *entry += &c;
}

/// `L^{(s)*}_k H_λ.1 = Σ_{ν ⊨ k} (1 - t^s)^{l(ν)} H_{λ - sν}.1`, straightened.
///
/// The sum is factored part by part: with `E(j, i)` the contribution of
/// `λ_i, λ_{i+1}, …` when `j` units of `ν` remain,
/// `E(j, i) = Σ_r c_r H_{λ_i - sr} E(j - r, i + 1)`, `c_0 = 1`, `c_r = 1 - t^s`.
pub fn l_star_expand(s: u32, k: u32, lambda: &Partition) -> Result<HExpansion> {
    check_s(s)?;
    let parts = lambda.parts();
    let l = parts.len();
    let one_minus = TPoly::one_minus_t_pow(s);
    // tails[j] = E(j, i) for the current i, as partition -> coefficient.
    let mut tails: Vec<BTreeMap<Partition, TPoly>> = vec![BTreeMap::new(); k as usize + 1];
    tails[0].insert(Partition::empty(), TPoly::one());
    for i in (0..l).rev() {
        let mut next: Vec<BTreeMap<Partition, TPoly>> = vec![BTreeMap::new(); k as usize + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            for r in 0..=j {
                let c = if r == 0 { TPoly::one() } else { one_minus.clone() };
                let head = parts[i] as i64 - (s as i64) * r as i64;
                for (kappa, b) in &tails[j - r] {
                    let mut word = Vec::with_capacity(kappa.len() + 1);
                    word.push(head);
                    word.extend(kappa.parts().iter().map(|&x| x as i64));
                    let cb = &c * b;
                    for (nu, d) in straighten::straighten_memo(&Composition(word)) {
                        add_map(slot, nu, &cb * &d);
                    }
                }
            }
            slot.retain(|_, c| !c.is_zero());
        }
        tails = next;
    }
    let result = std::mem::take(&mut tails[k as usize]);
    Ok(HExpansion::from_terms(result.into_iter().map(|(p, c)| (p, TRational::from_poly(c)))))
}

/// `L^{(s)*}_k H_λ.1` by straightening each `λ - sν` separately.
pub fn l_star_expand_naive(s: u32, k: u32, lambda: &Partition) -> Result<HExpansion> {
    check_s(s)?;
    let mut acc: BTreeMap<Partition, TPoly> = BTreeMap::new();
    let one_minus = TPoly::one_minus_t_pow(s);
    for nu in weak_compositions(k, lambda.len()) {
        let word: Vec<i64> = lambda.parts().iter().zip(nu.parts()).map(|(&x, &v)| x as i64 - s as i64 * v).collect();
        let c = one_minus.pow(nu.positive_len() as u32);
        for (kappa, b) in straighten(&Composition(word)) {
            add_map(&mut acc, kappa, &c * &b);
        }
    }
    Ok(HExpansion::from_terms(acc.into_iter().map(|(p, c)| (p, TRational::from_poly(c)))))
}

/// `(p_s ⋄ q_k(t)) H_μ.1 = Σ_λ c_λ(t) H_λ.1` with
/// `c_λ = b_μ(t)/b_λ(t) · Σ_{ν ⊨ k} (1 - t^s)^{l(ν)} B(μ, λ - sν)`,
/// over partitions `λ ⊇ μ` with `|λ| = |μ| + sk`.
pub fn pleth_expand_hl(s: u32, k: u32, mu: &Partition) -> Result<HExpansion> {
    check_s(s)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be a positive integer".into()));
    }
    let b_mu = TRational::from_poly(b_t_of(mu));
    let candidates: Vec<Partition> =
        enumerate(PartitionKind::All, mu.weight() + s * k).into_iter().filter(|l| l.contains(mu)).collect();
    let terms: Result<Vec<(Partition, TRational)>> = candidates
        .into_par_iter()
        .map(|lambda| {
            let lowered = l_star_expand(s, k, &lambda)?;
            let c = lowered.coeff(mu);
            let ratio = b_mu.checked_div(&TRational::from_poly(b_t_of(&lambda)))?;
            Ok((lambda, &c * &ratio))
        })
        .collect();
    Ok(HExpansion::from_terms(terms?))
}

/// `p_s ⋄ q_k(t)` in the basis `H_λ.1`.
pub fn pleth_ps_qkt(s: u32, k: u32) -> Result<HExpansion> {
    pleth_expand_hl(s, k, &Partition::empty())
}

/// `(-1)^k H_{(k,k)}.1 + (t + 1) Σ_{i=0}^{k-1} (-1)^i H_{(2k-i,i)}.1`.
pub fn p2_qk_closed_form(k: u32) -> HExpansion {
    let mut out = HExpansion::new();
    let sign = |i: u32| if i.is_multiple_of(2) { 1 } else { -1 };
    out.add_term(Partition::from_unsorted(vec![k, k]), TRational::from_int(sign(k)));
    let t_plus_one = TPoly::from_coeffs(&[1, 1]);
    for i in 0..k {
        let c = TRational::from_poly(t_plus_one.scale(&crate::algebra::rat(sign(i))));
        out.add_term(Partition::from_unsorted(vec![2 * k - i, i]), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> PSeriesElem {
        PSeriesElem::p_lambda(Partition::new(parts.to_vec()).unwrap())
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(c: &[i64]) -> TRational {
        TRational::from_poly(TPoly::from_coeffs(c))
    }

    fn h(terms: &[(&[u32], &[i64])]) -> HExpansion {
        HExpansion::from_terms(terms.iter().map(|(l, c)| (part(l), poly(c))))
    }

    #[test]
    fn one_row_functions() {
        assert_eq!(q_t(0), PSeriesElem::one());
        assert_eq!(q_t(1), p(&[1]).scale(&poly(&[1, -1])));
        let half = TRational::ratio(1, 2);
        let expected = &p(&[2]).scale(&(&poly(&[1, 0, -1]) * &half)) + &p(&[1, 1]).scale(&(&poly(&[1, -2, 1]) * &half));
        assert_eq!(q_t(2), expected);
    }

    #[test]
    fn dual_vacuum() {
        assert_eq!(hstar_vacuum(0), PSeriesElem::one());
        assert_eq!(hstar_vacuum(1), p(&[1]).scale(&poly(&[-1, 1])));
        let half = TRational::ratio(1, 2);
        let expected = &p(&[2]).scale(&(&poly(&[-1, 0, 1]) * &half)) + &p(&[1, 1]).scale(&(&poly(&[1, -2, 1]) * &half));
        assert_eq!(hstar_vacuum(2), expected);
        for m in 0..4 {
            assert_eq!(hstar_apply(-(m as i64), &PSeriesElem::one()), hstar_vacuum(m));
        }
        assert!(hstar_apply(1, &PSeriesElem::one()).is_zero());
    }

    #[test]
    fn vertex_operator_actions() {
        assert_eq!(h_apply(3, &PSeriesElem::one()), q_t(3));
        assert!(h_apply(-2, &PSeriesElem::one()).is_zero());
        let raising = &(&q_t(1) * &q_t(1)) + &q_t(2).scale(&poly(&[-1, 1]));
        assert_eq!(h_apply(1, &q_t(1)), raising);
        assert_eq!(hl_function(&part(&[1, 1])), raising);
        assert_eq!(hl_function(&part(&[2])), q_t(2));
    }

    #[test]
    fn orthogonality() {
        let f = hl_function(&part(&[2, 2]));
        assert_eq!(inner_t(&f, &f), TRational::from_poly(b_t_of(&part(&[2, 2]))));
        assert!(inner_t(&f, &hl_function(&part(&[3, 1]))).is_zero());
    }

    #[test]
    fn h_basis_expansion() {
        assert_eq!(expand_in_h(&hl_function(&part(&[2, 1]))), h(&[(&[2, 1], &[1])]));
        assert_eq!(expand_in_h(&p(&[2]).scale(&poly(&[1, 0, -1]))), h(&[(&[2], &[1, 1]), (&[1, 1], &[-1])]));
        assert_eq!(expand_in_h(&q_t(2)), h(&[(&[2], &[1])]));
    }

    #[test]
    fn l_operators() {
        assert_eq!(l_op_vacuum(2, 1), p(&[2]).scale(&poly(&[1, 0, -1])));
        assert_eq!(l_op_vacuum(5, 0), PSeriesElem::one());
        for m in 0..5 {
            assert_eq!(l_op_vacuum(3, m), q_t(m).tpleth_ps(3));
        }
    }

    #[test]
    fn lowering_examples() {
        assert_eq!(l_star_expand(2, 1, &part(&[2])).unwrap(), h(&[(&[], &[1, 0, -1])]));
        assert_eq!(l_star_expand(1, 1, &part(&[1, 1])).unwrap(), h(&[(&[1], &[1, 0, -1])]));
        assert!(l_star_expand(3, 1, &part(&[1, 1])).unwrap().is_empty());
        for (s, k, l) in [(1, 2, vec![3, 1]), (2, 2, vec![4, 2, 1]), (3, 1, vec![4, 2])] {
            let l = part(&l);
            assert_eq!(l_star_expand(s, k, &l).unwrap(), l_star_expand_naive(s, k, &l).unwrap());
        }
    }

    #[test]
    fn plethystic_rule_small_cases() {
        assert_eq!(pleth_expand_hl(2, 1, &Partition::empty()).unwrap(), h(&[(&[2], &[1, 1]), (&[1, 1], &[-1])]));
        assert_eq!(
            pleth_expand_hl(2, 2, &Partition::empty()).unwrap(),
            h(&[(&[4], &[1, 1]), (&[3, 1], &[-1, -1]), (&[2, 2], &[1])])
        );
        assert_eq!(pleth_ps_qkt(1, 3).unwrap(), h(&[(&[3], &[1])]));
        assert_eq!(p2_qk_closed_form(2), pleth_ps_qkt(2, 2).unwrap());
    }
}
