mod common;

use common::{build_t, p, partition_of, poly, raw_terms};
use proptest::prelude::*;
use qpleth_core::algebra::rat;
use qpleth_core::hall_littlewood::{
    expand_in_h, h_apply, h_word, hl_function, hstar_apply, l_star_apply, l_star_expand, l_star_expand_naive, q_t,
    reassemble_h, straighten, straighten_by_paths,
};
use qpleth_core::partition::{b_t_of, enumerate, Composition, PartitionKind};
use qpleth_core::schur_q::schur_q;
use qpleth_core::symfunc::inner_t;
use qpleth_core::{PSeriesElem, TRational};

fn sub(a: &PSeriesElem, b: &PSeriesElem) -> PSeriesElem {
    a + &b.scale(&TRational::from_int(-1))
}

fn t_times(f: &PSeriesElem) -> PSeriesElem {
    f.scale(&TRational::from_poly(poly(&[0, 1])))
}

fn h(m: i64, f: &PSeriesElem) -> PSeriesElem {
    h_apply(m, f)
}

fn hs(m: i64, f: &PSeriesElem) -> PSeriesElem {
    hstar_apply(m, f)
}

#[test]
fn hall_littlewood_functions_are_orthogonal() {
    for n in 0..=6 {
        let keys = enumerate(PartitionKind::All, n);
        for a in &keys {
            for b in &keys {
                let got = inner_t(&hl_function(a), &hl_function(b));
                let want = if a == b { TRational::from_poly(b_t_of(a)) } else { TRational::zero() };
                assert_eq!(got, want, "<Q_{a}(t), Q_{b}(t)>");
            }
        }
    }
}

#[test]
fn strict_functions_at_minus_one() {
    for n in 0..=7 {
        for lambda in qpleth_core::partition::strict_partitions(n) {
            let at = hl_function(&p(lambda.parts())).specialize(&rat(-1)).unwrap();
            assert_eq!(at, schur_q(&lambda), "Q_{lambda}(-1)");
        }
    }
    assert_eq!(hl_function(&p(&[1, 1])).specialize(&rat(-1)).unwrap(), PSeriesElem::zero());
}

#[test]
fn vacuum_relations() {
    for n in 1..=5i64 {
        assert!(h(-n, &PSeriesElem::one()).is_zero());
        assert!(hs(n, &PSeriesElem::one()).is_zero());
    }
    assert_eq!(h(0, &PSeriesElem::one()), PSeriesElem::one());
    assert_eq!(hs(0, &PSeriesElem::one()), PSeriesElem::one());
}

#[test]
fn two_part_straightening() {
    // H_(1,2) = t H_(2,1).
    let b = straighten(&Composition(vec![1, 2]));
    assert_eq!(b.len(), 1);
    assert_eq!(b[&p(&[2, 1])], poly(&[0, 1]));
    // H_(0,1) = t H_(1).
    assert_eq!(straighten(&Composition(vec![0, 1]))[&p(&[1])], poly(&[0, 1]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn straightening_matches_operators(word in prop::collection::vec(-2i64..=5, 1..=3)) {
        prop_assume!(word.iter().sum::<i64>() <= 7);
        let mu = Composition(word);
        let b = straighten(&mu);
        let mut assembled = PSeriesElem::zero();
        for (lambda, c) in &b {
            assembled += &hl_function(lambda).scale(&TRational::from_poly(c.clone()));
        }
        prop_assert_eq!(assembled, h_word(&mu));
        prop_assert_eq!(straighten_by_paths(&mu), b.clone());
        if mu.parts().iter().all(|&x| x >= 0) {
            prop_assert!(b.keys().all(|l| l.as_composition().dominates(&mu)));
        }
    }

    #[test]
    fn expansion_round_trip(raw in raw_terms(5, 4)) {
        let f = build_t(&raw);
        prop_assert_eq!(reassemble_h(&expand_in_h(&f)), f);
    }

    #[test]
    fn factored_recursion_matches_naive(n in 0u32..=12, idx in any::<usize>(), s in 1u32..=3, k in 1u32..=4) {
        let lambda = partition_of(n, idx);
        prop_assert_eq!(l_star_expand(s, k, &lambda).unwrap(), l_star_expand_naive(s, k, &lambda).unwrap());
    }

    #[test]
    fn lowering_matches_adjoint_action(n in 1u32..=7, idx in any::<usize>(), s in 1u32..=3, k in 1u32..=3) {
        prop_assume!(s * k <= n);
        let lambda = partition_of(n, idx);
        let direct = l_star_apply(s, k, &hl_function(&lambda)).unwrap();
        prop_assert_eq!(reassemble_h(&l_star_expand(s, k, &lambda).unwrap()), direct);
    }

    #[test]
    fn lowering_is_adjoint(a in raw_terms(4, 3), b in raw_terms(8, 3), s in 1u32..=3, k in 1u32..=3) {
        let f = build_t(&a);
        let g = build_t(&b);
        let left = inner_t(&(&q_t(k).tpleth_ps(s) * &f), &g);
        let right = inner_t(&f, &l_star_apply(s, k, &g).unwrap());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn h_operators_commute(raw in raw_terms(4, 3), m in -3i64..=3, n in -3i64..=3) {
        let f = build_t(&raw);
        let lhs = sub(&h(m, &h(n, &f)), &t_times(&h(n, &h(m, &f))));
        let rhs = sub(&t_times(&h(m + 1, &h(n - 1, &f))), &h(n - 1, &h(m + 1, &f)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn h_star_operators_commute(raw in raw_terms(4, 3), m in -3i64..=3, n in -3i64..=3) {
        let f = build_t(&raw);
        let lhs = sub(&hs(m, &hs(n, &f)), &t_times(&hs(n, &hs(m, &f))));
        let rhs = sub(&t_times(&hs(m - 1, &hs(n + 1, &f))), &hs(n + 1, &hs(m - 1, &f)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_commutation(raw in raw_terms(4, 3), m in -3i64..=3, n in -3i64..=3) {
        let f = build_t(&raw);
        let lhs = sub(&h(m, &hs(n, &f)), &t_times(&hs(n, &h(m, &f))));
        let mut rhs = sub(&t_times(&h(m - 1, &hs(n - 1, &f))), &hs(n - 1, &h(m - 1, &f)));
        if m == n {
            rhs += &f.scale(&TRational::from_poly(poly(&[1, -2, 1])));
        }
        prop_assert_eq!(lhs, rhs);
    }
}
