mod common;

use std::collections::BTreeMap;

use common::{build, build_t, p, raw_terms};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qpleth_core::algebra::rat;
use qpleth_core::partition::PartitionKind;
use qpleth_core::symfunc::{
    dexp_components, inner_spin, inner_t, partial, skew_apply, DexpRule, SkewMode, SkewSpec,
};
use qpleth_core::{PSeriesElem, TPoly, TRational};

/// `exp(c Σ_j ∂/∂p_{stride·j} z^{-j})` summed term by term, grouped by the power of `z^{-1}`.
fn dexp_by_series(f: &PSeriesElem, stride: u32, odd_only: bool, c: i64) -> Vec<PSeriesElem> {
    let max = f.max_degree().unwrap_or(0);
    let js: Vec<u32> = (1..=max / stride).filter(|j| !odd_only || j % 2 == 1).collect();
    let mut total: BTreeMap<u32, PSeriesElem> = BTreeMap::new();
    let mut current: BTreeMap<u32, PSeriesElem> = BTreeMap::from([(0, f.clone())]);
    let mut n = 0i64;
    while current.values().any(|g| !g.is_zero()) {
        for (i, g) in &current {
            *total.entry(*i).or_default() = &total.get(i).cloned().unwrap_or_default() + g;
        }
        n += 1;
        let mut next: BTreeMap<u32, PSeriesElem> = BTreeMap::new();
        for (i, g) in &current {
            for &j in &js {
                let h = partial(g, stride * j).scale(&TRational::ratio(c, n));
                let slot = next.entry(i + j).or_default();
                *slot = &*slot + &h;
            }
        }
        current = next;
    }
    let mut out: Vec<PSeriesElem> = Vec::new();
    for (i, g) in total {
        out.resize(i as usize + 1, PSeriesElem::zero());
        out[i as usize] = g;
    }
    while out.last().is_some_and(PSeriesElem::is_zero) {
        out.pop();
    }
    out
}

#[test]
fn inner_product_values() {
    // ⟨p_(2,1), p_(2,1)⟩_t = 2 / ((1 - t)(1 - t^2)).
    let f = PSeriesElem::p_lambda(p(&[2, 1]));
    let want = TRational::new(TPoly::from_int(2), &TPoly::one_minus_t_pow(1) * &TPoly::one_minus_t_pow(2)).unwrap();
    assert_eq!(inner_t(&f, &f), want);
    let g = PSeriesElem::p_lambda(p(&[3, 1, 1]));
    assert_eq!(inner_spin(&g, &g).unwrap(), TRational::ratio(6, 8));
    assert!(inner_spin(&f, &f).is_err());
}

#[test]
fn plethysm_of_power_sums() {
    let f = PSeriesElem::p_lambda(p(&[3, 1]));
    assert_eq!(f.pleth_ps(2), PSeriesElem::p_lambda(p(&[6, 2])));
    let g = PSeriesElem::monomial(p(&[1]), TRational::from_poly(TPoly::from_coeffs(&[1, 1])));
    let want = PSeriesElem::monomial(p(&[3]), TRational::from_poly(TPoly::from_coeffs(&[1, 0, 0, 1])));
    assert_eq!(g.tpleth_ps(3), want);
    assert_eq!(g.pleth_ps(3), PSeriesElem::monomial(p(&[3]), TRational::from_poly(TPoly::from_coeffs(&[1, 1]))));
}

#[test]
fn named_rules_match_their_series() {
    let f = build(
        PartitionKind::All,
        &[(6, 0, 1), (6, 3, -2), (5, 7, 3), (4, 1, 1), (6, 10, 2), (3, 2, -1)],
    );
    let cases = [
        (DexpRule::spin_annihilator(), 1, true, -1),
        (DexpRule::hall_annihilator(), 1, false, -1),
        (DexpRule::hall_adjoint(), 1, false, 1),
        (DexpRule::spin_pleth_adjoint(3), 3, true, 3),
        (DexpRule::hall_pleth_adjoint(2), 2, false, 2),
    ];
    for (rule, stride, odd, c) in cases {
        assert_eq!(dexp_components(&f, &rule), dexp_by_series(&f, stride, odd, c), "stride {stride}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dexp_matches_series(raw in raw_terms(7, 4), stride in 1u32..=3, odd in any::<bool>(), c in -3i64..=3) {
        let f = build(PartitionKind::All, &raw);
        let rule = DexpRule::new(stride, odd, BigRational::from_integer(BigInt::from(c))).unwrap();
        prop_assert_eq!(dexp_components(&f, &rule), dexp_by_series(&f, stride, odd, c));
    }

    #[test]
    fn hall_skew_is_adjoint(a in raw_terms(7, 4), b in raw_terms(8, 4), m in 1u32..=4) {
        let f = build_t(&a);
        let g = build_t(&b);
        let pm = PSeriesElem::p(m);
        let spec = SkewSpec::new(SkewMode::Hall, m).unwrap();
        prop_assert_eq!(inner_t(&(&pm * &f), &g), inner_t(&f, &skew_apply(spec, &g)));
    }

    #[test]
    fn spin_skew_is_adjoint(a in raw_terms(8, 4), b in raw_terms(9, 4), m in (0u32..=4).prop_map(|i| 2 * i + 1)) {
        let f = build(PartitionKind::Odd, &a);
        let g = build(PartitionKind::Odd, &b);
        let pm = PSeriesElem::p(m);
        let spec = SkewSpec::new(SkewMode::Spin, m).unwrap();
        prop_assert_eq!(inner_spin(&(&pm * &f), &g).unwrap(), inner_spin(&f, &skew_apply(spec, &g)).unwrap());
    }

    #[test]
    fn plethysm_is_multiplicative(a in raw_terms(5, 4), b in raw_terms(5, 4), s in 1u32..=4) {
        let f = build_t(&a);
        let g = build_t(&b);
        prop_assert_eq!((&f * &g).pleth_ps(s), &f.pleth_ps(s) * &g.pleth_ps(s));
        prop_assert_eq!((&f * &g).tpleth_ps(s), &f.tpleth_ps(s) * &g.tpleth_ps(s));
        prop_assert_eq!((&f + &g).tpleth_ps(s), &f.tpleth_ps(s) + &g.tpleth_ps(s));
        prop_assert_eq!(f.pleth_ps(s).pleth_ps(2), f.pleth_ps(2 * s));
    }

    #[test]
    fn inner_product_is_symmetric_and_bilinear(a in raw_terms(6, 5), b in raw_terms(6, 5), c in raw_terms(6, 5)) {
        let (f, g, h) = (build_t(&a), build_t(&b), build_t(&c));
        prop_assert_eq!(inner_t(&f, &g), inner_t(&g, &f));
        prop_assert_eq!(inner_t(&(&f + &g), &h), &inner_t(&f, &h) + &inner_t(&g, &h));
    }

    #[test]
    fn specialization_is_a_ring_map(a in raw_terms(5, 4), b in raw_terms(5, 4), t0 in -3i64..=3) {
        let (f, g) = (build_t(&a), build_t(&b));
        let t0 = rat(t0);
        prop_assert_eq!(
            (&f * &g).specialize(&t0).unwrap(),
            &f.specialize(&t0).unwrap() * &g.specialize(&t0).unwrap()
        );
    }
}
