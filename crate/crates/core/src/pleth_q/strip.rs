//! Symmetric horizontal `(s,k)`-strips, normalized a-numbers and the
//! reordering permutation that fixes the sign of a strip.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{interlaces, residue_classes, strip_a_number, StrictPartition};
use crate::pleth_q::pfaffian::inversions;
use crate::schur_q::check_odd_s;

/// A permutation of `{1..n}` stored as 0-based images: `images[i]` is the
/// 0-based value of `σ(i + 1) - 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.images)
    }

    pub fn sign(&self) -> i32 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Nontrivial cycles, 1-based, each starting from its smallest element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation such as `(1243)(69)`; entries are comma-separated when
    /// any of them has more than one digit, and the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        let sep = if self.images.len() < 10 { "" } else { "," };
        for c in cycles {
            let body: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Evidence that `λ/μ` is a symmetric horizontal `(s,k)`-strip.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StripCertificate {
    pub s: u32,
    pub k: u32,
    pub lambda: StrictPartition,
    pub mu: StrictPartition,
    /// A zero part was appended to `μ` because `l(λ) + l(μ)` is odd.
    pub padded: bool,
    #[serde(rename = "A")]
    pub a_value: u32,
    /// `λ̃_i = λ_{σ(i)}`.
    pub sigma: Permutation,
    pub sign: i32,
    /// The reordered `λ̃`.
    pub reordered: Vec<u32>,
}

/// `μ` with a zero appended when `l(λ) + l(μ)` is odd.
pub(crate) fn padded_mu(lambda: &StrictPartition, mu: &StrictPartition) -> (Vec<u32>, bool) {
    let mut parts = mu.parts().to_vec();
    let pad = (lambda.len() + mu.len()) % 2 == 1;
    if pad {
        parts.push(0);
    }
    (parts, pad)
}

pub(crate) fn degree_k(lambda: &StrictPartition, mu: &StrictPartition, s: u32) -> Result<u32> {
    let (wl, wm) = (lambda.weight(), mu.weight());
    if wl <= wm || (wl - wm) % s != 0 {
        return Err(Error::DegreeMismatch { lambda: lambda.parts().to_vec(), mu: mu.parts().to_vec(), s });
    }
    Ok((wl - wm) / s)
}

/// Tests `(λ, μ) ∈ SP_{s,k}` with `k = (|λ| - |μ|)/s`, which must be a positive
/// integer. Returns the certificate on success.
pub fn is_strip(lambda: &StrictPartition, mu: &StrictPartition, s: u32) -> Result<Option<StripCertificate>> {
    check_odd_s(s)?;
    let k = degree_k(lambda, mu, s)?;
    Ok(strip_certificate(lambda, mu, s, k))
}

/// Strip test without the degree check (`k` is recorded as given). `λ = μ`
/// passes with an empty strip; expansions never ask for that case.
pub(crate) fn strip_certificate(lambda: &StrictPartition, mu: &StrictPartition, s: u32, k: u32) -> Option<StripCertificate> {
    if !lambda.contains(mu) {
        return None;
    }
    let (mu_parts, padded) = padded_mu(lambda, mu);
    let nl = residue_classes(lambda.parts(), s);
    let nm = residue_classes(&mu_parts, s);
    if nl[0].len() != nm[0].len() {
        return None;
    }
    for r in 1..s as usize {
        let d = nl[r].len() as i64 - nm[r].len() as i64;
        let e = nl[s as usize - r].len() as i64 - nm[s as usize - r].len() as i64;
        if !(0..=1).contains(&d) || d != e {
            return None;
        }
    }
    if !(0..s as usize).all(|r| interlaces(&nl[r], &nm[r])) {
        return None;
    }
    let a_value = (0..s as usize).map(|r| strip_a_number(&nl[r], &nm[r])).sum();
    let reordered = reorder(&nl, &nm, &mu_parts, s);
    let sigma = Permutation::from_images(
        reordered
            .iter()
            .map(|x| lambda.parts().iter().position(|p| p == x).expect("reordering permutes λ"))
            .collect(),
    )
    .expect("reordering permutes λ");
    let sign = sigma.sign();
    Some(StripCertificate {
        s,
        k,
        lambda: lambda.clone(),
        mu: mu.clone(),
        padded,
        a_value,
        sigma,
        sign,
        reordered,
    })
}

/// `λ̃`: first the partners of the parts of (padded) `μ`, class by class,
/// then the leftover parts as pairs (odd residue `j`, residue `s - j`) with
/// `j` increasing.
fn reorder(nl: &[Vec<u32>], nm: &[Vec<u32>], mu_parts: &[u32], s: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(nl.iter().map(Vec::len).sum());
    for &m in mu_parts {
        let r = (m % s) as usize;
        let j = nm[r].iter().position(|&x| x == m).unwrap();
        out.push(nl[r][j]);
    }
    for j in (1..s as usize).step_by(2) {
        let partner = s as usize - j;
        if nl[j].len() > nm[j].len() {
            out.push(nl[j][nm[j].len()]);
            out.push(nl[partner][nm[partner].len()]);
        }
    }
    out
}

/// `A(λ/μ) = Σ_r a(N_r(λ)_> / N_r(μ)_>)`.
pub fn a_number_normalized(lambda: &StrictPartition, mu: &StrictPartition, s: u32) -> Result<u32> {
    let cert = is_strip(lambda, mu, s)?.ok_or_else(|| not_strip(lambda, mu, s))?;
    Ok(cert.a_value)
}

/// The reordering permutation and its sign.
pub fn sigma_of(lambda: &StrictPartition, mu: &StrictPartition, s: u32) -> Result<(Permutation, i32)> {
    let cert = is_strip(lambda, mu, s)?.ok_or_else(|| not_strip(lambda, mu, s))?;
    Ok((cert.sigma, cert.sign))
}

/// Sign from the matching diagram: `λ` on the top line, `μ` followed by
/// copies of the leftover parts on the bottom line, each `μ_{r,i}` joined to
/// `λ_{r,i}` and each leftover part to its copy. The parity of the number of
/// crossings between non-vertical segments gives the sign.
pub fn sign_graphical(lambda: &StrictPartition, mu: &StrictPartition, s: u32) -> Result<i32> {
    let cert = is_strip(lambda, mu, s)?.ok_or_else(|| not_strip(lambda, mu, s))?;
    let (mu_parts, _) = padded_mu(lambda, mu);
    let nl = residue_classes(lambda.parts(), s);
    let nm = residue_classes(&mu_parts, s);
    let top_index = |x: u32| lambda.parts().iter().position(|&p| p == x).unwrap();
    // (top position, bottom position) for every segment.
    let mut segments: Vec<(usize, usize)> = Vec::new();
    for (bottom, &m) in mu_parts.iter().enumerate() {
        let r = (m % s) as usize;
        let i = nm[r].iter().position(|&x| x == m).unwrap();
        segments.push((top_index(nl[r][i]), bottom));
    }
    // The leftover parts are copied in the order fixed by the reordering.
    for (bottom, &x) in cert.reordered.iter().enumerate().skip(mu_parts.len()) {
        segments.push((top_index(x), bottom));
    }
    let mut crossings = 0usize;
    for (a, &(t1, b1)) in segments.iter().enumerate() {
        for &(t2, b2) in &segments[a + 1..] {
            if t1 == b1 || t2 == b2 {
                continue;
            }
            if (t1 < t2) != (b1 < b2) {
                crossings += 1;
            }
        }
    }
    Ok(if crossings.is_multiple_of(2) { 1 } else { -1 })
}

fn not_strip(lambda: &StrictPartition, mu: &StrictPartition, s: u32) -> Error {
    Error::NotStrip { lambda: lambda.parts().to_vec(), mu: mu.parts().to_vec(), s }
}
