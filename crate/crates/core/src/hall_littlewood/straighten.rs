//! Straightening `H_μ` for a composition `μ` into the basis `H_λ`, `λ` a
//! partition, along canonical paths (each move made at the smallest adjacent
//! inversion).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{rat, TPoly};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partition::{Composition, Partition};

/// `C(S_{i,a})` for the adjacent pair `(low, high)`, `low < high`:
/// `t` if `a = 0`; `t^{a+1} - t^{a-1}` if `1 ≤ a < ⌊g/2⌋`; `t^{a+ε} - t^{a-1}`
/// if `a = ⌊g/2⌋ ≥ 1`, where `g = high - low` and `ε = g mod 2`.
pub fn c_coeff(low: i64, high: i64, a: i64) -> Result<TPoly> {
    let gap = high - low;
    if gap <= 0 || a < 0 || a > gap / 2 {
        return Err(Error::MoveOutOfRange { low, high, a });
    }
    let floor = gap / 2;
    let a = a as u32;
    Ok(if a == 0 {
        TPoly::t()
    } else if (a as i64) < floor {
        &TPoly::monomial(a + 1, rat(1)) - &TPoly::monomial(a - 1, rat(1))
    } else {
        let eps = (gap % 2) as u32;
        &TPoly::monomial(a + eps, rat(1)) - &TPoly::monomial(a - 1, rat(1))
    })
}

/// `S_{i,a}` with 0-based `i`: `(…, μ_i, μ_{i+1}, …) ↦ (…, μ_{i+1} - a, μ_i + a, …)`.
pub fn apply_move(mu: &Composition, i: usize, a: i64) -> Composition {
    let mut parts = mu.parts().to_vec();
    let (x, y) = (parts[i], parts[i + 1]);
    parts[i] = y - a;
    parts[i + 1] = x + a;
    Composition(parts)
}

/// Moves available at the first adjacent inversion: `(0-based i, a, C)`.
pub fn canonical_moves(mu: &Composition) -> Option<(usize, Vec<(i64, TPoly)>)> {
    let i = mu.first_inversion()?;
    let (low, high) = (mu.parts()[i], mu.parts()[i + 1]);
    let moves = (0..=(high - low) / 2).map(|a| (a, c_coeff(low, high, a).expect("a in range"))).collect();
    Some((i, moves))
}

/// The basis element a weakly decreasing composition denotes: trailing zeros
/// are dropped (`H_0.1 = 1`) and a negative part annihilates (`H_{-n}.1 = 0`).
pub fn terminal_value(mu: &Composition) -> Option<Partition> {
    mu.to_partition()
}

static STRAIGHTEN: Memo<Composition, Vec<(Partition, TPoly)>> = Memo::new();

/// `H_μ = Σ_λ B(λ, μ) H_λ`, memoized on intermediate states.
pub fn straighten(mu: &Composition) -> BTreeMap<Partition, TPoly> {
    straighten_memo(mu).into_iter().collect()
}

/// `B(λ, μ)`.
pub fn b_coeff(lambda: &Partition, mu: &Composition) -> TPoly {
    straighten_memo(mu).into_iter().find(|(l, _)| l == lambda).map(|(_, c)| c).unwrap_or_else(TPoly::zero)
}

pub(crate) fn straighten_memo(mu: &Composition) -> Vec<(Partition, TPoly)> {
    let mut parts = mu.parts().to_vec();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    // The last part never increases along a path, so a negative last part
    // leads only to annihilated terminals.
    if parts.last().is_some_and(|&x| x < 0) {
        return Vec::new();
    }
    let key = Composition(parts);
    STRAIGHTEN.get_or_insert_with(&key, || {
        let Some((i, moves)) = canonical_moves(&key) else {
            return terminal_value(&key).map(|l| vec![(l, TPoly::one())]).unwrap_or_default();
        };
        let mut acc: BTreeMap<Partition, TPoly> = BTreeMap::new();
        for (a, c) in moves {
            for (lambda, b) in straighten_memo(&apply_move(&key, i, a)) {
                let entry = acc.entry(lambda).or_insert_with(TPoly::zero);
                *entry += &(&c * &b);
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    })
}

/// One node of the canonical straightening tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathNode {
    pub state: Composition,
    /// The move that produced this node as `(1-based i, a)`, absent at the root.
    #[serde(rename = "move", skip_serializing_if = "Option::is_none")]
    pub step: Option<(usize, i64)>,
    /// `C` of that move (1 at the root).
    pub coeff: TPoly,
    pub children: Vec<PathNode>,
}

impl PathNode {
    /// All states in the tree, root first, depth-first.
    pub fn states(&self) -> Vec<Composition> {
        let mut out = vec![self.state.clone()];
        for c in &self.children {
            out.extend(c.states());
        }
        out
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(PathNode::node_count).sum::<usize>()
    }
}

/// The full tree of canonical straightening paths from `μ`, without merging
/// repeated states. Leaves are weakly decreasing compositions.
pub fn straighten_tree(mu: &Composition) -> PathNode {
    build_tree(mu.clone(), None, TPoly::one())
}

fn build_tree(state: Composition, step: Option<(usize, i64)>, coeff: TPoly) -> PathNode {
    let children = match canonical_moves(&state) {
        None => Vec::new(),
        Some((i, moves)) => moves
            .into_iter()
            .map(|(a, c)| build_tree(apply_move(&state, i, a), Some((i + 1, a)), c))
            .collect(),
    };
    PathNode { state, step, coeff, children }
}

/// A canonical path `μ^{(0)} → … → μ^{(r)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StraighteningPath {
    pub states: Vec<Composition>,
    /// `(1-based i_k, a_k)`.
    pub moves: Vec<(usize, i64)>,
    /// `C(S_{i_r,a_r}) ⋯ C(S_{i_1,a_1})`.
    pub coefficient: TPoly,
}

impl StraighteningPath {
    pub fn end(&self) -> &Composition {
        self.states.last().expect("paths are nonempty")
    }
}

/// Every canonical path from `μ`, in depth-first order.
pub fn canonical_paths(mu: &Composition) -> Vec<StraighteningPath> {
    let mut out = Vec::new();
    collect_paths(&straighten_tree(mu), Vec::new(), Vec::new(), TPoly::one(), &mut out);
    out
}

fn collect_paths(
    node: &PathNode,
    mut states: Vec<Composition>,
    mut moves: Vec<(usize, i64)>,
    coefficient: TPoly,
    out: &mut Vec<StraighteningPath>,
) {
    states.push(node.state.clone());
    if let Some(m) = node.step {
        moves.push(m);
    }
    let coefficient = &coefficient * &node.coeff;
    if node.children.is_empty() {
        out.push(StraighteningPath { states, moves, coefficient });
        return;
    }
    for child in &node.children {
        collect_paths(child, states.clone(), moves.clone(), coefficient.clone(), out);
    }
}

/// `B(λ, μ)` as the literal sum of canonical path coefficients, without
/// memoization or pruning.
pub fn straighten_by_paths(mu: &Composition) -> BTreeMap<Partition, TPoly> {
    let mut acc: BTreeMap<Partition, TPoly> = BTreeMap::new();
    for path in canonical_paths(mu) {
        if let Some(lambda) = terminal_value(path.end()) {
            *acc.entry(lambda).or_insert_with(TPoly::zero) += &path.coefficient;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[i64]) -> Composition {
        Composition(v.to_vec())
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn move_coefficients() {
        assert_eq!(c_coeff(2, 5, 0).unwrap(), TPoly::t());
        assert_eq!(c_coeff(2, 5, 1).unwrap(), TPoly::from_coeffs(&[-1, 0, 1]));
        assert_eq!(c_coeff(4, 6, 1).unwrap(), TPoly::from_coeffs(&[-1, 1]));
        assert_eq!(c_coeff(0, 6, 1).unwrap(), TPoly::from_coeffs(&[-1, 0, 1]));
        assert!(c_coeff(2, 5, 2).is_err());
        assert!(c_coeff(5, 2, 0).is_err());
    }

    #[test]
    fn worked_example() {
        let mu = comp(&[8, 7, 2, 5, 6]);
        let b = straighten(&mu);
        assert_eq!(b[&part(&[8, 7, 5, 4, 4])], TPoly::from_coeffs(&[0, 1, -1, -1, 0, 1]));
        assert_eq!(straighten_by_paths(&mu), b);
        let tree = straighten_tree(&mu);
        let first: Vec<(usize, i64)> = tree.children.iter().map(|c| c.step.unwrap()).collect();
        assert_eq!(first, vec![(3, 0), (3, 1)]);
        assert_eq!(tree.children[0].coeff, TPoly::t());
        assert_eq!(tree.children[1].coeff, TPoly::from_coeffs(&[-1, 0, 1]));
    }

    #[test]
    fn trivial_inputs() {
        let b = straighten(&comp(&[3, 1, 1]));
        assert_eq!(b.len(), 1);
        assert!(b[&part(&[3, 1, 1])].is_one());
        let b = straighten(&comp(&[0, 1]));
        assert_eq!(b[&part(&[1])], TPoly::t());
        assert!(straighten(&comp(&[2, -1])).is_empty());
        assert_eq!(straighten(&comp(&[-1, 1]))[&Partition::empty()], TPoly::from_coeffs(&[-1, 1]));
        assert_eq!(straighten(&comp(&[])).len(), 1);
    }

    #[test]
    fn memo_and_paths_agree_with_negative_parts() {
        for mu in [comp(&[-1, 3]), comp(&[1, -2, 4]), comp(&[0, 0, 3]), comp(&[-2, 1, 1, 2])] {
            assert_eq!(straighten(&mu), straighten_by_paths(&mu), "{mu}");
        }
    }
}
