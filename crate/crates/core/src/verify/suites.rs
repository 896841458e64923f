//! Property sweeps, each comparing a rule against an independent computation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat, TPoly, TRational};
use crate::error::{Error, Result};
use crate::expansion::{HExpansion, QExpansion};
use crate::hall_littlewood::{
    canonical_paths, hl_function, h_word, pleth_expand_hl, pleth_ps_qkt, q_t, straighten, straighten_by_paths,
    straighten_tree,
};
use crate::partition::{
    a_number, enumerate, is_horizontal_strip, strict_partitions, weak_compositions, Composition, Partition,
    PartitionKind, StrictPartition,
};
use crate::pleth_q::{
    determinant, f_pair, is_strip, f_pair_closed, pfaffian, pfaffian_matchings, pfaffian_row_expansion, pleth_expand_comb,
    pleth_expand_pf, pleth_expand_pf_exhaustive, AntisymMatrix,
};
use crate::schur_q::{normalize_q_word, q_apply, q_one_row, reassemble_q, schur_q, two_row_raising};
use crate::symfunc::{inner_spin, PSeriesElem};
use crate::verify::config::{SweepConfig, SPIN_DEGREE_CAP};
use crate::verify::oracles::{oracle_hl, oracle_q};
use crate::verify::report::{run_cases, Failure, VerifyReport};

/// Seed for every random-matrix sweep.
pub const MATRIX_SEED: u64 = 0x0005_eed0_f7ea;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    SpinMn,
    HlMn,
    Pfaffian,
    FLemma,
    Clifford,
    Straighten,
    Pieri,
    Specialize,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::SpinMn,
        Suite::HlMn,
        Suite::Pfaffian,
        Suite::FLemma,
        Suite::Clifford,
        Suite::Straighten,
        Suite::Pieri,
        Suite::Specialize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SpinMn => "spin-mn",
            Suite::HlMn => "hl-mn",
            Suite::Pfaffian => "pfaffian",
            Suite::FLemma => "f-lemma",
            Suite::Clifford => "clifford",
            Suite::Straighten => "straighten",
            Suite::Pieri => "pieri",
            Suite::Specialize => "specialize",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Runs the named suite.
pub fn run_suite(name: &str, config: &SweepConfig) -> Result<VerifyReport> {
    let suite: Suite = name.parse()?;
    config.validate()?;
    let start = Instant::now();
    let (cases_total, failures) = match suite {
        Suite::SpinMn => spin_mn(config),
        Suite::HlMn => hl_mn(config),
        Suite::Pfaffian => pfaffian_suite(config),
        Suite::FLemma => f_lemma(config),
        Suite::Clifford => clifford(config),
        Suite::Straighten => straighten_suite(config),
        Suite::Pieri => pieri(config),
        Suite::Specialize => specialize_suite(config),
    };
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        cases_total,
        cases_failed: failures.len(),
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Strict `μ` and `k ≥ 1` with `|μ| + sk ≤ degree`.
pub fn spin_cases(s_values: &[u32], k_max: u32, degree: u32) -> Vec<(u32, u32, StrictPartition)> {
    let mut out = Vec::new();
    for &s in s_values.iter().filter(|s| *s % 2 == 1) {
        for k in (1..=k_max).take_while(|k| s * k <= degree) {
            for n in 0..=degree - s * k {
                out.extend(strict_partitions(n).into_iter().map(|mu| (s, k, mu)));
            }
        }
    }
    out
}

/// Partitions `μ` and `k ≥ 1` with `|μ| + sk ≤ degree`.
pub fn hl_cases(s_values: &[u32], k_max: u32, degree: u32) -> Vec<(u32, u32, Partition)> {
    let mut out = Vec::new();
    for &s in s_values {
        for k in (1..=k_max).take_while(|k| s * k <= degree) {
            for n in 0..=degree - s * k {
                out.extend(enumerate(PartitionKind::All, n).into_iter().map(|mu| (s, k, mu)));
            }
        }
    }
    out
}

fn case_label(s: u32, k: u32, mu: impl fmt::Display) -> String {
    format!("s={s} k={k} mu={mu}")
}

/// The three spin expansions agree with each other and with the oracle.
pub fn check_spin_case(s: u32, k: u32, mu: &StrictPartition) -> Option<Failure> {
    let label = case_label(s, k, mu);
    let oracle = match oracle_q(s, k, mu) {
        Ok(e) => e,
        Err(e) => return Some(Failure::new(label, "oracle", e)),
    };
    let rules: [(&str, Result<QExpansion>); 3] = [
        ("comb", pleth_expand_comb(s, k, mu)),
        ("pf", pleth_expand_pf(s, k, mu)),
        ("pf-exhaustive", pleth_expand_pf_exhaustive(s, k, mu)),
    ];
    for (name, got) in rules {
        match got {
            Ok(e) if e == oracle => {}
            Ok(e) => return Some(Failure::new(format!("{label} [{name}]"), &oracle, e)),
            Err(e) => return Some(Failure::new(format!("{label} [{name}]"), &oracle, e)),
        }
    }
    if mu.is_empty() {
        if let Some((lambda, c)) = oracle.terms().find(|(_, c)| c.as_constant().is_none_or(|c| c.abs() != rat(1))) {
            return Some(Failure::new(format!("{label} [multiplicity-free at {lambda}]"), "±1", c));
        }
    }
    None
}

fn spin_mn(cfg: &SweepConfig) -> (usize, Vec<Failure>) {
    let cases = spin_cases(&cfg.s_values, cfg.k_max, cfg.degree_max.min(SPIN_DEGREE_CAP));
    run_cases(&cases, cfg.parallel, |(s, k, mu)| check_spin_case(*s, *k, mu))
}

/// The Hall-Littlewood rule agrees with the oracle.
pub fn check_hl_case(s: u32, k: u32, mu: &Partition) -> Option<Failure> {
    let label = case_label(s, k, mu);
    match (pleth_expand_hl(s, k, mu), oracle_hl(s, k, mu)) {
        (Ok(a), Ok(b)) if a == b => None,
        (Ok(a), Ok(b)) => Some(Failure::new(label, b, a)),
        (Err(e), _) | (_, Err(e)) => Some(Failure::new(label, "expansion", e)),
    }
}

fn hl_mn(cfg: &SweepConfig) -> (usize, Vec<Failure>) {
    let cases = hl_cases(&cfg.s_values, cfg.k_max, cfg.symbolic_degree());
    run_cases(&cases, cfg.parallel, |(s, k, mu)| check_hl_case(*s, *k, mu))
}

/// `n×n` seeded random antisymmetric matrices for `n = 2, 4, …, 10`, in turn.
pub fn random_matrices(count: usize, seed: u64) -> Vec<AntisymMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|i| AntisymMatrix::random(2 * (i % 5 + 1), 5, &mut rng)).collect()
}

/// `Pf(A)^2 = det(A)`, and the memoized Pfaffian equals the 2-shuffle sum.
pub fn check_pf_square(m: &AntisymMatrix) -> Option<Failure> {
    let pf = pfaffian(m).ok()?;
    let det = determinant(&m.rows());
    if &pf * &pf != det {
        return Some(Failure::new(format!("{:?}", m.rows()), &det, &pf * &pf));
    }
    let brute = pfaffian_matchings(m).ok()?;
    (brute != pf).then(|| Failure::new(format!("{:?} [2-shuffles]", m.rows()), &brute, &pf))
}

/// Row expansion at every row equals the 2-shuffle definition.
pub fn check_row_expansions(m: &AntisymMatrix) -> Option<Failure> {
    let brute = pfaffian_matchings(m).ok()?;
    for i in 1..=m.dim() {
        let row = pfaffian_row_expansion(m, i).ok()?;
        if row != brute {
            return Some(Failure::new(format!("{:?} row {i}", m.rows()), &brute, row));
        }
    }
    None
}

/// Strict pairs `μ ⊆ λ` with `|λ| ≤ max_weight` and `|λ| - |μ|` a positive multiple of `s`.
pub fn strip_pairs(s_values: &[u32], max_weight: u32) -> Vec<(StrictPartition, StrictPartition, u32)> {
    let mut out = Vec::new();
    for &s in s_values {
        for n in 1..=max_weight {
            for lambda in strict_partitions(n) {
                for m in (1..=n / s).map(|k| n - s * k) {
                    for mu in strict_partitions(m).into_iter().filter(|mu| lambda.contains(mu)) {
                        out.push((lambda.clone(), mu, s));
                    }
                }
            }
        }
    }
    out
}

/// `Pf(M̃(λ/μ))` is nonzero exactly on strips, where it equals `sgn(σ) 2^A`.
pub fn check_strip_pfaffian(lambda: &StrictPartition, mu: &StrictPartition, s: u32) -> Option<Failure> {
    let label = format!("lambda={lambda} mu={mu} s={s}");
    let pf = match crate::pleth_q::coeff_pfaffian(lambda, mu, s) {
        Ok(v) => v,
        Err(e) => return Some(Failure::new(label, "Pfaffian", e)),
    };
    let want = match is_strip(lambda, mu, s) {
        Ok(Some(cert)) => BigInt::from(cert.sign) << cert.a_value,
        Ok(None) => BigInt::from(0),
        Err(e) => return Some(Failure::new(label, "strip test", e)),
    };
    (pf != want).then(|| Failure::new(label, want, pf))
}

fn pfaffian_suite(cfg: &SweepConfig) -> (usize, Vec<Failure>) {
    let squares = random_matrices(200, MATRIX_SEED);
    let (n1, mut f1) = run_cases(&squares, cfg.parallel, check_pf_square);
    let mut rng = ChaCha8Rng::seed_from_u64(MATRIX_SEED + 1);
    let rows: Vec<AntisymMatrix> = (0..40).map(|i| AntisymMatrix::random(if i < 20 { 6 } else { 8 }, 5, &mut rng)).collect();
    let (n2, f2) = run_cases(&rows, cfg.parallel, check_row_expansions);
    let pairs = strip_pairs(&[3, 5], cfg.degree_max.min(12));
    let (n3, f3) = run_cases(&pairs, cfg.parallel, |(l, m, s)| check_strip_pfaffian(l, m, *s));
    f1.extend(f2);
    f1.extend(f3);
    (n1 + n2 + n3, f1)
}

/// Recursive and closed forms of `f_(m,n)`, antisymmetry and the `r = 0` vanishing.
pub fn check_f_pair(m: u32, n: u32, s: u32) -> Option<Failure> {
    let label = format!("m={m} n={n} s={s}");
    let value = f_pair(m, n, s);
    if value != f_pair_closed(m, n, s) {
        return Some(Failure::new(label, f_pair_closed(m, n, s), value));
    }
    if value != -f_pair(n, m, s) {
        return Some(Failure::new(format!("{label} [antisymmetry]"), -f_pair(n, m, s), value));
    }
    if m > 0 && n > 0 && (m + n).is_multiple_of(s) && n.is_multiple_of(s) && value != 0 {
        return Some(Failure::new(format!("{label} [r=0]"), 0, value));
    }
    None
}

pub fn f_lemma_cases(s_values: &[u32]) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for &s in s_values {
        for m in 0..=30 {
            for n in 0..=30 {
                if m + n >= 1 {
                    out.push((m, n, s));
                }
            }
        }
    }
    out
}

fn f_lemma(cfg: &SweepConfig) -> (usize, Vec<Failure>) {
    let mut s_values = vec![3, 5, 7];
    s_values.extend(cfg.odd_s().filter(|s| *s > 1 && !matches!(s, 3 | 5 | 7)));
    let cases = f_lemma_cases(&s_values);
    run_cases(&cases, cfg.parallel, |&(m, n, s)| check_f_pair(m, n, s))
}

enum CliffordCase {
    Word(Vec<i64>),
    Orthogonal(StrictPartition, StrictPartition),
    TwoRow(u32, u32),
    Vacuum(i64),
}

fn check_clifford(case: &CliffordCase) -> Option<Failure> {
    match case {
        CliffordCase::Word(w) => {
            let direct = w.iter().rev().try_fold(PSeriesElem::one(), |f, &m| q_apply(m, &f)).ok()?;
            let normalized = reassemble_q(&normalize_q_word(w));
            (direct != normalized).then(|| Failure::new(format!("word {w:?}"), &direct, &normalized))
        }
        CliffordCase::Orthogonal(l, m) => {
            let got = inner_spin(&schur_q(l), &schur_q(m)).ok()?;
            let want = if l == m { TRational::pow2(l.len() as i64) } else { TRational::zero() };
            (got != want).then(|| Failure::new(format!("<Q{l}, Q{m}>"), &want, &got))
        }
        CliffordCase::TwoRow(m, n) => {
            let lambda = StrictPartition::new(vec![*m, *n]).ok()?;
            let want = two_row_raising(*m, *n);
            let got = schur_q(&lambda);
            (got != want).then(|| Failure::new(format!("Q({m},{n})"), &want, &got))
        }
        CliffordCase::Vacuum(m) => {
            let got = q_apply(-m, &PSeriesElem::one()).ok()?;
            (!got.is_zero()).then(|| Failure::new(format!("Q_-{m}.1"), 0, &got))
        }
    }
}

fn clifford(cfg: &SweepConfig) -> (usize, Vec<Failure>) {
    let mut cases = Vec::new();
    let letters: Vec<i64> = (-3..=3).collect();
    let mut words: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..3 {
        let longer: Vec<Vec<i64>> = words
            .iter()
            .filter(|w| w.len() == words.last().map_or(0, Vec::len))
            .flat_map(|w| letters.iter().map(move |&x| [w.as_slice(), &[x]].concat()))
            .collect();
        words.extend(longer);
    }
    cases.extend(words.into_iter().map(CliffordCase::Word));
    let degree = cfg.degree_max.min(10);
    for n in 0..=degree {
        let ps = strict_partitions(n);
        for l in &ps {
            for m in &ps {
                cases.push(CliffordCase::Orthogonal(l.clone(), m.clone()));
            }
        }
    }
    for m in 2..=12u32 {
        for n in 1..m.min(13 - m) {
            cases.push(CliffordCase::TwoRow(m, n));
        }
    }
    cases.extend((1..=6).map(CliffordCase::Vacuum));
    run_cases(&cases, cfg.parallel, check_clifford)
}

/// Tree nodes of the worked straightening example, excluding the root.
pub const FIXTURE_TREE: [[i64; 5]; 9] = [
    [8, 7, 5, 2, 6],
    [8, 7, 4, 3, 6],
    [8, 7, 5, 6, 2],
    [8, 7, 5, 5, 3],
    [8, 7, 5, 4, 4],
    [8, 7, 4, 6, 3],
    [8, 7, 4, 5, 4],
    [8, 7, 6, 5, 2],
    [8, 7, 6, 4, 3],
];

/// `B((8,7,5,4,4), (8,7,2,5,6)) = t^5 - t^3 - t^2 + t` and the tree's node set.
pub fn check_straighten_fixture() -> Option<Failure> {
    let mu = Composition(vec![8, 7, 2, 5, 6]);
    let lambda = Partition::new(vec![8, 7, 5, 4, 4]).unwrap();
    let want = TPoly::from_coeffs(&[0, 1, -1, -1, 0, 1]);
    let got = straighten(&mu).get(&lambda).cloned().unwrap_or_else(TPoly::zero);
    if got != want {
        return Some(Failure::new("B((8,7,5,4,4),(8,7,2,5,6))", &want, &got));
    }
    let nodes: BTreeSet<Composition> = straighten_tree(&mu).states().into_iter().skip(1).collect();
    let expected: BTreeSet<Composition> = FIXTURE_TREE.iter().map(|v| Composition(v.to_vec())).collect();
    (nodes != expected).then(|| Failure::new("tree of (8,7,2,5,6)", format!("{expected:?}"), format!("{nodes:?}")))
}

/// Straightening reproduces the literal operator product, agrees with the
/// path sum, and only reaches partitions dominating `μ`.
pub fn check_straighten_case(mu: &Composition) -> Option<Failure> {
    let b = straighten(mu);
    let mut assembled = PSeriesElem::zero();
    for (lambda, c) in &b {
        assembled += &hl_function(lambda).scale(&TRational::from_poly(c.clone()));
    }
    let direct = h_word(mu);
    if assembled != direct {
        return Some(Failure::new(format!("H_{mu}"), &direct, &assembled));
    }
    let by_paths = straighten_by_paths(mu);
    if by_paths != b {
        return Some(Failure::new(format!("paths of {mu}"), format!("{b:?}"), format!("{by_paths:?}")));
    }
    if mu.parts().iter().all(|&x| x >= 0) {
        if let Some(lambda) = b.keys().find(|l| !l.as_composition().dominates(mu)) {
            return Some(Failure::new(format!("dominance for {mu}"), "λ ≥ μ", lambda));
        }
    }
    None
}

/// Weak compositions of `n ≤ max_weight` with length `1..=max_len`, plus all
/// compositions of length `≤ 3` with entries in `-2..=3`.
pub fn straighten_cases(max_weight: u32, max_len: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    for n in 0..=max_weight {
        for len in 1..=max_len {
            out.extend(weak_compositions(n, len));
        }
    }
    for len in 1..=3u32 {
        let mut words: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..len {
            words = words.into_iter().flat_map(|w| (-2..=3).map(move |x| [w.as_slice(), &[x]].concat())).collect();
        }
        out.extend(words.into_iter().filter(|w| w.iter().any(|&x| x < 0)).map(Composition));
    }
    out
}

fn straighten_suite(cfg: &SweepConfig) -> (usize, Vec<Failure>) {
    let (_, mut failures) = (1, check_straighten_fixture().into_iter().collect::<Vec<_>>());
    let cases = straighten_cases(cfg.degree_max.min(8), 4);
    let (n, f) = run_cases(&cases, cfg.parallel, check_straighten_case);
    failures.extend(f);
    (n + 1, failures)
}

/// `s = 1`: coefficients are `2^{a(λ/μ) + l(μ) - l(λ)}` on horizontal strips, 0 elsewhere.
pub fn check_pieri_case(k: u32, mu: &StrictPartition) -> Option<Failure> {
    let got = match pleth_expand_comb(1, k, mu) {
        Ok(e) => e,
        Err(e) => return Some(Failure::new(case_label(1, k, mu), "expansion", e)),
    };
    let mut want = QExpansion::new();
    for lambda in strict_partitions(mu.weight() + k) {
        if lambda.contains(mu) && is_horizontal_strip(lambda.as_partition(), mu.as_partition()) {
            let a = a_number(lambda.as_partition(), mu.as_partition()).ok()? as i64;
            want.add_term(lambda.clone(), TRational::pow2(a + mu.len() as i64 - lambda.len() as i64));
        }
    }
    (got != want).then(|| Failure::new(case_label(1, k, mu), &want, &got))
}

fn pieri(cfg: &SweepConfig) -> (usize, Vec<Failure>) {
    let cases = spin_cases(&[1], cfg.k_max, cfg.degree_max.min(12));
    run_cases(&cases, cfg.parallel, |(_, k, mu)| check_pieri_case(*k, mu))
}

/// Strict-partition part of an H-expansion evaluated at `t = -1`; the other
/// basis elements vanish there.
pub fn spin_part(e: &HExpansion) -> Result<QExpansion> {
    let mut out = QExpansion::new();
    for (lambda, c) in e.terms() {
        if let Ok(strict) = StrictPartition::try_from(lambda.clone()) {
            out.add_term(strict, TRational::from_rational(c.eval(&rat(-1))?));
        }
    }
    Ok(out)
}

/// `p_2 ∘ h_k = Σ_j (-1)^j s_{(2k-j, j)}`, using `s_λ = Q_λ(t)|_{t=0}` and the
/// specialization of the Hall-Littlewood rule.
pub fn check_littlewood(k: u32) -> Option<Failure> {
    let zero = rat(0);
    let label = format!("p2 o h_{k}");
    let hl = pleth_ps_qkt(2, k).ok()?.specialize(&zero).ok()?;
    let mut want = HExpansion::new();
    for j in 0..=k {
        want.add_term(Partition::from_unsorted(vec![2 * k - j, j]), TRational::from_int(if j % 2 == 0 { 1 } else { -1 }));
    }
    if hl != want {
        return Some(Failure::new(format!("{label} [H at t=0]"), &want, &hl));
    }
    let lhs = q_t(k).specialize(&zero).ok()?.pleth_ps(2);
    let mut rhs = PSeriesElem::zero();
    for (lambda, c) in want.terms() {
        rhs += &hl_function(lambda).specialize(&zero).ok()?.scale(c);
    }
    (lhs != rhs).then(|| Failure::new(format!("{label} [p-basis]"), &rhs, &lhs))
}

/// At `t = 0` only canonical paths with every `a_i = 1` contribute, each `(-1)^r`;
/// at `t = -1`, on strict `λ`, only paths with every `a_i = 0` contribute.
pub fn check_path_specializations(mu: &Composition) -> Option<Failure> {
    let b = straighten(mu);
    let paths = canonical_paths(mu);
    for (t0, a_req) in [(0i64, 1i64), (-1, 0)] {
        let mut want: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for p in &paths {
            if p.moves.iter().all(|&(_, a)| a == a_req) {
                if let Some(lambda) = p.end().to_partition() {
                    let sign = if p.moves.len() % 2 == 0 { 1 } else { -1 };
                    *want.entry(lambda).or_default() += sign;
                }
            }
        }
        let keep = |l: &Partition| t0 == 0 || l.is_strict();
        want.retain(|l, c| keep(l) && *c != BigInt::from(0));
        let got: BTreeMap<Partition, BigInt> = b
            .iter()
            .filter(|(l, _)| keep(l))
            .map(|(l, c)| (l.clone(), c.eval(&rat(t0)).to_integer()))
            .filter(|(_, c)| *c != BigInt::from(0))
            .collect();
        if got != want {
            return Some(Failure::new(format!("B(-, {mu}) at t={t0}"), format!("{want:?}"), format!("{got:?}")));
        }
    }
    None
}

enum SpecCase {
    OneRow(u32),
    Bridge(u32, u32),
    Littlewood(u32),
    Paths(Composition),
}

fn check_spec(case: &SpecCase) -> Option<Failure> {
    match case {
        SpecCase::OneRow(m) => {
            let got = q_t(*m).specialize(&rat(-1)).ok()?;
            let want = q_one_row(*m);
            (got != want).then(|| Failure::new(format!("q_{m}(-1)"), &want, &got))
        }
        SpecCase::Bridge(s, k) => {
            let label = case_label(*s, *k, "()");
            let got = pleth_ps_qkt(*s, *k).and_then(|e| spin_part(&e));
            let want = pleth_expand_comb(*s, *k, &StrictPartition::empty());
            match (got, want) {
                (Ok(a), Ok(b)) if a == b => None,
                (Ok(a), Ok(b)) => Some(Failure::new(label, b, a)),
                (Err(e), _) | (_, Err(e)) => Some(Failure::new(label, "expansion", e)),
            }
        }
        SpecCase::Littlewood(k) => check_littlewood(*k),
        SpecCase::Paths(mu) => check_path_specializations(mu),
    }
}

fn specialize_suite(cfg: &SweepConfig) -> (usize, Vec<Failure>) {
    let degree = cfg.symbolic_degree();
    let mut cases: Vec<SpecCase> = (0..=8).map(SpecCase::OneRow).collect();
    for s in cfg.odd_s().filter(|&s| s <= 3) {
        for k in (1..=cfg.k_max).take_while(|k| s * k <= degree) {
            cases.push(SpecCase::Bridge(s, k));
        }
    }
    cases.extend((1..=(degree / 2).min(cfg.k_max)).map(SpecCase::Littlewood));
    for n in 1..=7 {
        for len in 1..=4 {
            cases.extend(
                weak_compositions(n, len)
                    .into_iter()
                    .filter(|c| c.parts().iter().all(|&x| x > 0))
                    .map(SpecCase::Paths),
            );
        }
    }
    run_cases(&cases, cfg.parallel, check_spec)
}
