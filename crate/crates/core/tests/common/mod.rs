#![allow(dead_code)]

use proptest::prelude::*;
use qpleth_core::partition::{enumerate, strict_partitions, PartitionKind};
use qpleth_core::{Partition, PSeriesElem, StrictPartition, TPoly, TRational};

/// A term as (degree, index into the partitions of that degree, coefficient).
pub type RawTerm = (u32, usize, i64);

pub fn raw_terms(max_degree: u32, max_terms: usize) -> impl Strategy<Value = Vec<RawTerm>> {
    prop::collection::vec((0..=max_degree, any::<usize>(), -4i64..=4), 0..=max_terms)
}

/// A random element with integer coefficients and `kind` keys.
pub fn build(kind: PartitionKind, raw: &[RawTerm]) -> PSeriesElem {
    let mut f = PSeriesElem::zero();
    for &(n, idx, c) in raw {
        let keys = enumerate(kind, n);
        if keys.is_empty() {
            continue;
        }
        f.add_term(keys[idx % keys.len()].clone(), TRational::from_int(c));
    }
    f
}

/// Like [`build`] but with coefficients `c + (c - 1) t`.
pub fn build_t(raw: &[RawTerm]) -> PSeriesElem {
    let mut f = PSeriesElem::zero();
    for &(n, idx, c) in raw {
        let keys = enumerate(PartitionKind::All, n);
        f.add_term(keys[idx % keys.len()].clone(), TRational::from_poly(TPoly::from_coeffs(&[c, c - 1])));
    }
    f
}

pub fn partition_of(n: u32, idx: usize) -> Partition {
    let keys = enumerate(PartitionKind::All, n);
    keys[idx % keys.len()].clone()
}

pub fn strict_of(n: u32, idx: usize) -> StrictPartition {
    let keys = strict_partitions(n);
    keys[idx % keys.len()].clone()
}

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn sp(parts: &[u32]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).unwrap()
}

pub fn poly(c: &[i64]) -> TPoly {
    TPoly::from_coeffs(c)
}
