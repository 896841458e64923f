//! Exact Pfaffians of small antisymmetric integer matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// A square antisymmetric integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntisymMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl AntisymMatrix {
    /// The `n×n` zero matrix.
    pub fn zeros(n: usize) -> Self {
        AntisymMatrix { n, entries: vec![0; n * n] }
    }

    /// Validates antisymmetry of a row-major square matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix must be square".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x != -rows[j][i] {
                    return Err(Error::NotAntisymmetric(i, j));
                }
            }
        }
        Ok(AntisymMatrix { n, entries: rows.iter().flatten().copied().collect() })
    }

    /// Sets `A[i][j] = v` and `A[j][i] = -v`.
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
        self.entries[j * self.n + i] = -v;
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    /// Entries above the diagonal drawn uniformly from `-bound..=bound`.
    pub fn random<R: Rng>(n: usize, bound: i64, rng: &mut R) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, rng.gen_range(-bound..=bound));
            }
        }
        m
    }

    /// The matrix with rows and columns `i` and `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> AntisymMatrix {
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != i && x != j).collect();
        let mut out = Self::zeros(keep.len());
        for (a, &x) in keep.iter().enumerate() {
            for (b, &y) in keep.iter().enumerate() {
                out.entries[a * keep.len() + b] = self.get(x, y);
            }
        }
        out
    }

    fn check_even(&self) -> Result<()> {
        if self.n % 2 == 1 {
            Err(Error::OddDimension(self.n))
        } else {
            Ok(())
        }
    }
}

/// `Pf(A)` by Laplace expansion along the first remaining row, memoized over
/// the subsets of surviving indices. The empty matrix has Pfaffian 1.
pub fn pfaffian(a: &AntisymMatrix) -> Result<BigInt> {
    a.check_even()?;
    if a.n > 64 {
        return Err(Error::InvalidArgument("Pfaffian dimension above 64".into()));
    }
    let full = if a.n == 64 { u64::MAX } else { (1u64 << a.n) - 1 };
    let mut memo = HashMap::new();
    Ok(pf_subset(a, full, &mut memo))
}

fn pf_subset(a: &AntisymMatrix, set: u64, memo: &mut HashMap<u64, BigInt>) -> BigInt {
    if set == 0 {
        return BigInt::one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << i);
    let mut acc = BigInt::zero();
    let mut position = 0usize;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let entry = a.get(i, j);
        if entry != 0 {
            let sub = pf_subset(a, rest & !(1u64 << j), memo);
            if !sub.is_zero() {
                let term = sub * entry;
                if position.is_multiple_of(2) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
        position += 1;
    }
    memo.insert(set, acc.clone());
    acc
}

/// `Pf(A)` as the signed sum over 2-shuffles (perfect matchings written
/// with increasing pair minima), `sgn(σ) ∏ a_{σ(2i-1)σ(2i)}`.
pub fn pfaffian_matchings(a: &AntisymMatrix) -> Result<BigInt> {
    a.check_even()?;
    let mut total = BigInt::zero();
    let mut word = Vec::with_capacity(a.n);
    let mut used = vec![false; a.n];
    matchings(a, &mut used, &mut word, &mut total);
    Ok(total)
}

fn matchings(a: &AntisymMatrix, used: &mut [bool], word: &mut Vec<usize>, total: &mut BigInt) {
    let Some(i) = used.iter().position(|u| !u) else {
        let mut product = BigInt::one();
        for pair in word.chunks(2) {
            product *= a.get(pair[0], pair[1]);
        }
        if inversions(word) % 2 == 1 {
            product = -product;
        }
        *total += product;
        return;
    };
    used[i] = true;
    for j in i + 1..a.n {
        if used[j] {
            continue;
        }
        used[j] = true;
        word.push(i);
        word.push(j);
        matchings(a, used, word, total);
        word.truncate(word.len() - 2);
        used[j] = false;
    }
    used[i] = false;
}

/// Number of pairs `i < j` with `w[i] > w[j]`.
pub fn inversions(w: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// Expansion along row `i` (1-based):
/// `Pf(A) = (-1)^{i-1} Σ_{j≠i} (-1)^j :a_ij: Pf(A_{îĵ})`, where `:a_ij:` is
/// `a_ij` for `i < j` and `a_ji` for `i > j`.
pub fn pfaffian_row_expansion(a: &AntisymMatrix, i: usize) -> Result<BigInt> {
    a.check_even()?;
    if i == 0 || i > a.n {
        return Err(Error::InvalidArgument(format!("row {i} out of range")));
    }
    let mut acc = BigInt::zero();
    for j in 1..=a.n {
        if j == i {
            continue;
        }
        let entry = if i < j { a.get(i - 1, j - 1) } else { a.get(j - 1, i - 1) };
        if entry == 0 {
            continue;
        }
        let term = pfaffian(&a.minor(i - 1, j - 1))? * entry;
        if (i - 1 + j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign.is_negative() {
        -det
    } else {
        det
    }
}
