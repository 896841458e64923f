//! Ground-truth expansions computed by orthogonality in the power-sum basis.
//! Nothing here calls the Pfaffian, strip or straightening code.

use crate::error::Result;
use crate::expansion::{HExpansion, QExpansion};
use crate::hall_littlewood::{expand_in_h, hl_function, q_t};
use crate::partition::{Partition, StrictPartition};
use crate::schur_q::{check_odd_s, expand_in_q_basis, q_one_row, schur_q};

/// `(p_s ∘ q_k)·Q_μ` expanded in the Q-basis.
pub fn oracle_q(s: u32, k: u32, mu: &StrictPartition) -> Result<QExpansion> {
    check_odd_s(s)?;
    let f = &q_one_row(k).pleth_ps(s) * &schur_q(mu);
    expand_in_q_basis(&f)
}

/// `(p_s ⋄ q_k(t))·H_μ.1` expanded in the basis `H_λ.1`.
pub fn oracle_hl(s: u32, k: u32, mu: &Partition) -> Result<HExpansion> {
    if s == 0 {
        return Err(crate::error::Error::InvalidArgument("s must be a positive integer".into()));
    }
    let f = &q_t(k).tpleth_ps(s) * &hl_function(mu);
    Ok(expand_in_h(&f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{TPoly, TRational};

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn q(terms: &[(&[u32], i64)]) -> QExpansion {
        QExpansion::from_terms(terms.iter().map(|(p, c)| (sp(p), TRational::from_int(*c))))
    }

    fn h(terms: &[(&[u32], &[i64])]) -> HExpansion {
        HExpansion::from_terms(
            terms
                .iter()
                .map(|(l, c)| (Partition::new(l.to_vec()).unwrap(), TRational::from_poly(TPoly::from_coeffs(c)))),
        )
    }

    #[test]
    fn spin_oracle() {
        assert_eq!(oracle_q(3, 1, &sp(&[])).unwrap(), q(&[(&[3], 1), (&[2, 1], -1)]));
        assert_eq!(oracle_q(1, 1, &sp(&[1])).unwrap(), q(&[(&[2], 2)]));
        assert_eq!(
            oracle_q(3, 2, &sp(&[])).unwrap(),
            q(&[(&[6], 1), (&[4, 2], 1), (&[5, 1], -1), (&[3, 2, 1], -1)])
        );
        assert!(oracle_q(2, 1, &sp(&[])).is_err());
    }

    #[test]
    fn hall_littlewood_oracle() {
        let empty = Partition::empty();
        assert_eq!(oracle_hl(2, 1, &empty).unwrap(), h(&[(&[2], &[1, 1]), (&[1, 1], &[-1])]));
        assert_eq!(oracle_hl(1, 1, &empty).unwrap(), h(&[(&[1], &[1])]));
        assert_eq!(
            oracle_hl(2, 2, &empty).unwrap(),
            h(&[(&[4], &[1, 1]), (&[3, 1], &[-1, -1]), (&[2, 2], &[1])])
        );
    }
}
