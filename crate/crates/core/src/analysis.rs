//! Character tables, the neutral/charged comparison, `d_inf` decomposition
//! evidence, and the named verification suites.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::charged::{charge, charged_vacuum, enumerate_charged_basis, sector_bijection};
use crate::clifford::{anticommutator_check, inner_product, Family, FockVector, Mode, Monomial};
use crate::linalg::Echelon;
use crate::matrix::WeightLabel;
use crate::neutral::{enumerate_all, enumerate_basis, gradings, highest_weight_vector, tilde_v0};
use crate::reduction::{
    example_vector, reduce_to_highest_weight, replay_trace, seeded_vectors, spanning_check,
    verify_trace, DEFAULT_SEED, EXAMPLE_STEPS,
};
use crate::rep::{
    adjoint_quadop, apply_quadop, rep_element, rep_elementary, verify_bracket_identity,
    verify_singular_vector, weight_of_vector, AlgebraKind, RepName,
};
use crate::report::{Failure, VerificationReport};
use crate::wire::failure_to_json;
use crate::{Result, Q};

/// Failures listed individually in a suite report.
pub const MAX_FAILURE_DETAILS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    /// Sector `n` of the neutral space, graded by energy2.
    Neutral(i64),
    /// Charge `n` of the charged space, graded by level.
    Charged(i64),
}

/// Nonzero graded dimensions up to `cutoff`, by increasing level.
pub fn character_table(space: Space, cutoff: i64) -> Vec<(i64, usize)> {
    let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
    match space {
        Space::Neutral(n) => {
            for m in enumerate_basis(n, cutoff) {
                *dims.entry(gradings(&m).expect("neutral").energy2).or_default() += 1;
            }
        }
        Space::Charged(n) => {
            for m in enumerate_charged_basis(n, cutoff) {
                *dims.entry(m.level()).or_default() += 1;
            }
        }
    }
    dims.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub parameters: Value,
    pub checks: usize,
    pub failures: Vec<Failure>,
    pub duration_ms: u128,
}

impl SuiteReport {
    fn new(suite: &str, parameters: Value, report: VerificationReport, started: Instant) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            parameters,
            checks: report.checks,
            failures: report.failures,
            duration_ms: started.elapsed().as_millis(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "parameters": self.parameters,
            "pass": self.passed(),
            "checks": self.checks,
            "failures": self.failures.len(),
            "failure_details": self
                .failures
                .iter()
                .take(MAX_FAILURE_DETAILS)
                .map(failure_to_json)
                .collect::<Vec<_>>(),
            "duration_ms": self.duration_ms,
        })
    }
}

fn fail(report: &mut VerificationReport, label: impl Into<String>, input: Option<FockVector>, discrepancy: impl Into<String>) {
    report.failures.push(Failure {
        label: label.into(),
        input,
        discrepancy: discrepancy.into(),
    });
}

/// Checks the bijection onto the charged basis and that it transports the
/// `r_1` weight of every neutral monomial to the `rA` weight of its image.
pub fn compare_sectors(n: i64, cutoff: i64, window: i64) -> Result<SuiteReport> {
    let started = Instant::now();
    let mut report = VerificationReport::default();
    let basis = enumerate_basis(n, cutoff);
    let mut images = BTreeSet::new();
    let mut neutral_weights = BTreeMap::new();
    let mut charged_weights = BTreeMap::new();
    for m in &basis {
        let v = FockVector::basis(Family::Neutral, m.clone());
        let img = sector_bijection(m)?;
        report.checks += 1;
        if charge(&img) != n {
            fail(&mut report, format!("charge of image of {m}"), Some(v.clone()), format!("{}", charge(&img)));
        }
        report.checks += 1;
        if !images.insert(img.clone()) {
            fail(&mut report, format!("injectivity at {m}"), Some(v.clone()), "image already taken");
        }
        let w1 = weight_of_vector(RepName::ROne, AlgebraKind::A, &v, window)?;
        let w2 = weight_of_vector(RepName::RA, AlgebraKind::A, &img.to_vector(), window)?;
        report.checks += 1;
        if w1 != w2 {
            fail(
                &mut report,
                format!("weight transport at {m}"),
                Some(v.clone()),
                format!("{:?} vs {:?}", w1.diagonal, w2.diagonal),
            );
        }
        report.checks += 2;
        if let Some(prev) = neutral_weights.insert(w1.diagonal.clone(), m.clone()) {
            fail(&mut report, format!("neutral weight multiplicity at {m}"), Some(v.clone()), format!("shared with {prev}"));
        }
        if let Some(prev) = charged_weights.insert(w2.diagonal.clone(), img.clone()) {
            fail(&mut report, format!("charged weight multiplicity at {m}"), Some(v), format!("shared with {prev:?}"));
        }
    }
    Ok(SuiteReport::new(
        "sectors",
        json!({"sector": n, "cutoff": cutoff, "window": window, "basis_size": basis.len()}),
        report,
        started,
    ))
}

/// Dimension of the joint kernel of `ops` on the span of `basis`.
fn joint_kernel_dim(ops: &[crate::rep::QuadOp], basis: &[Monomial]) -> Result<usize> {
    let mut ech: Echelon<(usize, Monomial)> = Echelon::new();
    for m in basis {
        let v = FockVector::basis(Family::Neutral, m.clone());
        let mut row = BTreeMap::new();
        for (k, op) in ops.iter().enumerate() {
            for (t, c) in apply_quadop(op, &v)?.iter() {
                row.insert((k, t.clone()), c.clone());
            }
        }
        ech.insert(row);
    }
    Ok(basis.len() - ech.rank())
}

fn upper_ops(kind: AlgebraKind, window: i64) -> Result<Vec<crate::rep::QuadOp>> {
    let mut ops = Vec::new();
    for i in -window..=window {
        for k in 1..=window {
            let op = rep_element(RepName::ROne, &kind.generator(i, i + k))?;
            if !op.is_zero() {
                ops.push(op);
            }
        }
    }
    Ok(ops)
}

/// Evidence that sector 0 splits under `d_inf` into the modules generated by
/// `v_0` and `tilde v_0`, while `tilde v_0` is not `a_inf`-singular.
pub fn d_decomposition_evidence(cutoff: i64, window: i64) -> Result<SuiteReport> {
    let started = Instant::now();
    let mut report = VerificationReport::default();
    let t = tilde_v0();
    let v0 = highest_weight_vector(0);

    report.merge(verify_singular_vector(RepName::ROne, AlgebraKind::D, &t, window)?);
    report.merge(verify_singular_vector(RepName::ROne, AlgebraKind::D, &v0, window)?);

    let full = verify_singular_vector(RepName::ROne, AlgebraKind::A, &t, window)?;
    report.checks += 1;
    let witness = full.failures.first().map(|f| f.label.clone());
    if witness.is_none() {
        fail(&mut report, "tilde_v0 a_inf-singular", Some(t.clone()), "no upper generator acts nontrivially");
    }

    let wt = weight_of_vector(RepName::ROne, AlgebraKind::D, &t, window)?;
    report.checks += 1;
    if !wt.matches(WeightLabel::DdHatDet, AlgebraKind::D)? {
        fail(&mut report, "d-weight of tilde_v0", Some(t.clone()), format!("{:?}", wt.diagonal));
    }
    let at_one = wt.diagonal.get(&1).cloned().unwrap_or_else(Q::zero);
    report.checks += 1;
    if at_one != crate::q(2) || wt.central != crate::q(1) {
        fail(&mut report, "tilde_v0 at d_embed(1,1)", Some(t.clone()), format!("{at_one}, central {}", wt.central));
    }
    let w0 = weight_of_vector(RepName::ROne, AlgebraKind::D, &v0, window)?;
    report.checks += 1;
    if !w0.matches(WeightLabel::DdHat(0), AlgebraKind::D)? {
        fail(&mut report, "d-weight of v_0", Some(v0.clone()), format!("{:?}", w0.diagonal));
    }

    // Upper generators lower energy, so the truncated sector is invariant.
    let basis = enumerate_basis(0, cutoff);
    let d_kernel = joint_kernel_dim(&upper_ops(AlgebraKind::D, window)?, &basis)?;
    let a_kernel = joint_kernel_dim(&upper_ops(AlgebraKind::A, window)?, &basis)?;
    report.checks += 2;
    if d_kernel != 2 {
        fail(&mut report, "d_inf singular space of sector 0", None, format!("dimension {d_kernel}"));
    }
    if a_kernel != 1 {
        fail(&mut report, "a_inf singular space of sector 0", None, format!("dimension {a_kernel}"));
    }
    Ok(SuiteReport::new(
        "d-decomposition",
        json!({
            "cutoff": cutoff,
            "window": window,
            "a_inf_witness": witness,
            "d_singular_dim": d_kernel,
            "a_singular_dim": a_kernel,
        }),
        report,
        started,
    ))
}

/// Run-time parameters; `None` selects each suite's default.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    pub window: Option<i64>,
    pub cutoff: Option<i64>,
    pub sector: Option<i64>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub max_word: Option<usize>,
}

impl SuiteConfig {
    fn sectors(&self, bound: i64) -> Vec<i64> {
        match self.sector {
            Some(n) => vec![n],
            None => (-bound..=bound).collect(),
        }
    }
}

pub const SUITES: [&str; 11] = [
    "clifford",
    "bracket-r1",
    "bracket-rhalf",
    "bracket-ra",
    "hwv",
    "weights",
    "reduction",
    "spanning",
    "sectors",
    "d-decomposition",
    "adjoint",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite {:?}; expected one of {} or all", self.0, SUITES.join(", "))
    }
}

impl std::error::Error for UnknownSuite {}

#[derive(Clone, Debug, PartialEq)]
pub struct Aggregate {
    pub suites: Vec<SuiteReport>,
}

impl Aggregate {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pass": self.passed(),
            "suites": self.suites.iter().map(SuiteReport::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Expands `all`, rejects unknown names, keeps the requested order.
pub fn resolve_suites(names: &[String]) -> std::result::Result<Vec<&'static str>, UnknownSuite> {
    if names.is_empty() {
        return Ok(SUITES.to_vec());
    }
    let mut out = Vec::new();
    for name in names {
        if name == "all" {
            out.extend(SUITES);
        } else {
            match SUITES.iter().find(|s| **s == name.as_str()) {
                Some(s) => out.push(*s),
                None => return Err(UnknownSuite(name.clone())),
            }
        }
    }
    Ok(out)
}

pub fn run_suite(names: &[String], cfg: &SuiteConfig) -> std::result::Result<Aggregate, UnknownSuite> {
    let suites = resolve_suites(names)?;
    let suites = suites
        .par_iter()
        .map(|name| run_one(name, cfg))
        .collect();
    Ok(Aggregate { suites })
}

fn run_one(name: &str, cfg: &SuiteConfig) -> SuiteReport {
    let started = Instant::now();
    let outcome = match name {
        "clifford" => clifford_suite(cfg),
        "bracket-r1" => bracket_suite(RepName::ROne, cfg),
        "bracket-rhalf" => bracket_suite(RepName::RHalf, cfg),
        "bracket-ra" => bracket_suite(RepName::RA, cfg),
        "hwv" => hwv_suite(cfg),
        "weights" => weights_suite(cfg),
        "reduction" => reduction_suite(cfg),
        "spanning" => spanning_suite(cfg),
        "sectors" => sectors_suite(cfg),
        "d-decomposition" => {
            d_decomposition_evidence(cfg.cutoff.unwrap_or(12), cfg.window.unwrap_or(6)).map(|r| {
                let failures = VerificationReport {
                    checks: r.checks,
                    failures: r.failures,
                };
                (failures, r.parameters)
            })
        }
        "adjoint" => adjoint_suite(cfg),
        other => unreachable!("resolved suite {other}"),
    };
    let (report, parameters) = outcome.unwrap_or_else(|e| {
        let mut r = VerificationReport::default();
        fail(&mut r, "suite error", None, e.to_string());
        (r, json!({}))
    });
    SuiteReport::new(name, parameters, report, started)
}

type Outcome = Result<(VerificationReport, Value)>;

fn clifford_suite(cfg: &SuiteConfig) -> Outcome {
    let window = cfg.window.unwrap_or(9);
    let cutoff = cfg.cutoff.unwrap_or(12);
    let bound = 2 * window + 1;
    let probes: Vec<FockVector> = enumerate_all(cutoff)
        .into_iter()
        .map(|m| FockVector::basis(Family::Neutral, m))
        .collect();
    let modes: Vec<i64> = (-bound..=bound).filter(|d| d % 2 != 0).collect();
    let parts: Vec<Result<VerificationReport>> = modes
        .par_iter()
        .map(|&a| {
            let mut r = VerificationReport::default();
            for &b in &modes {
                r.merge(anticommutator_check(Mode::phi(a), Mode::phi(b), &probes)?);
            }
            Ok(r)
        })
        .collect();
    let mut report = VerificationReport::default();
    for p in parts {
        report.merge(p?);
    }
    Ok((
        report,
        json!({"window": window, "max_doubled_index": bound, "cutoff": cutoff, "probes": probes.len()}),
    ))
}

fn bracket_suite(rep: RepName, cfg: &SuiteConfig) -> Outcome {
    let window = cfg.window.unwrap_or(4);
    let report = verify_bracket_identity(rep, window)?;
    Ok((
        report,
        json!({"rep": rep.name(), "window": window, "central_charge": crate::wire::rational_to_string(&rep.central_charge())}),
    ))
}

fn hwv_suite(cfg: &SuiteConfig) -> Outcome {
    let window = cfg.window.unwrap_or(6);
    let sectors = cfg.sectors(4);
    let mut report = VerificationReport::default();
    for &n in &sectors {
        report.merge(verify_singular_vector(RepName::ROne, AlgebraKind::A, &highest_weight_vector(n), window)?);
        report.merge(verify_singular_vector(RepName::RA, AlgebraKind::A, &charged_vacuum(n), window)?);
    }
    Ok((report, json!({"window": window, "sectors": sectors})))
}

fn check_weight(
    report: &mut VerificationReport,
    rep: RepName,
    kind: AlgebraKind,
    v: &FockVector,
    label: WeightLabel,
    window: i64,
) -> Result<()> {
    report.checks += 1;
    match weight_of_vector(rep, kind, v, window) {
        Ok(w) => {
            if !w.matches(label, kind)? {
                fail(
                    report,
                    format!("{} weight vs {label:?}", rep.name()),
                    Some(v.clone()),
                    format!("diagonal {:?}, central {}", w.diagonal, w.central),
                );
            }
        }
        Err(e) => fail(report, format!("{} weight", rep.name()), Some(v.clone()), e.to_string()),
    }
    Ok(())
}

fn weights_suite(cfg: &SuiteConfig) -> Outcome {
    let window = cfg.window.unwrap_or(6);
    let sectors = cfg.sectors(4);
    let mut report = VerificationReport::default();
    for &n in &sectors {
        let label = WeightLabel::AHat(n);
        check_weight(&mut report, RepName::ROne, AlgebraKind::A, &highest_weight_vector(n), label, window)?;
        check_weight(&mut report, RepName::RA, AlgebraKind::A, &charged_vacuum(n), label, window)?;
    }
    let vac = FockVector::vacuum(Family::Neutral);
    let phi = FockVector::from_neutral_labels(&[0])?;
    check_weight(&mut report, RepName::RHalf, AlgebraKind::D, &vac, WeightLabel::DHat0, window)?;
    check_weight(&mut report, RepName::RHalf, AlgebraKind::D, &phi, WeightLabel::DHat1, window)?;
    Ok((report, json!({"window": window, "sectors": sectors})))
}

fn labels_support(v: &FockVector) -> BTreeSet<Vec<i64>> {
    v.support().map(Monomial::neutral_labels).collect()
}

/// Supports after each step of the worked example, labels decreasing.
pub fn example_supports() -> [Vec<Vec<i64>>; 5] {
    [
        vec![vec![7, 5, 4, 3, 2, 0], vec![8, 7, 5, 4], vec![7, 6, 4, 1], vec![9, 8, 7, 4]],
        vec![vec![5, 3, 2, 0], vec![8, 5], vec![6, 1], vec![9, 8]],
        vec![vec![6, 5, 2, 1], vec![9, 8, 5, 2]],
        vec![vec![6, 1], vec![9, 8]],
        vec![vec![8, 1]],
    ]
}

/// Replays the worked example step by step against its listed supports.
pub fn golden_replay() -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let v = example_vector();
    let mut cur = v.clone();
    for (k, (step, expected)) in EXAMPLE_STEPS.iter().zip(example_supports()).enumerate() {
        cur = replay_trace(&[*step], &cur)?;
        let want: BTreeSet<Vec<i64>> = expected.into_iter().collect();
        report.checks += 1;
        if labels_support(&cur) != want {
            fail(
                &mut report,
                format!("example step {} {:?}", k + 1, step),
                Some(cur.clone()),
                format!("expected supports {want:?}"),
            );
        }
    }
    let t = reduce_to_highest_weight(&v)?;
    report.checks += 1;
    if !verify_trace(&t, &v)? {
        fail(&mut report, "engine trace on example", Some(v), "replay mismatch");
    }
    Ok(report)
}

fn reduction_suite(cfg: &SuiteConfig) -> Outcome {
    let cutoff = cfg.cutoff.unwrap_or(12);
    let seed = cfg.seed.unwrap_or(DEFAULT_SEED);
    let samples = cfg.samples.unwrap_or(100);
    let sectors = cfg.sectors(3);
    let mut report = golden_replay()?;
    for &n in &sectors {
        let vectors = seeded_vectors(seed, n, cutoff, samples);
        let parts: Vec<Result<VerificationReport>> = vectors
            .par_iter()
            .map(|v| {
                let mut r = VerificationReport::default();
                let t = reduce_to_highest_weight(v)?;
                r.checks += 1;
                if t.sector != n || !verify_trace(&t, v)? {
                    fail(&mut r, format!("reduction in sector {n}"), Some(v.clone()), format!("trace {:?}", t.steps));
                }
                Ok(r)
            })
            .collect();
        for p in parts {
            report.merge(p?);
        }
    }
    Ok((
        report,
        json!({"cutoff": cutoff, "seed": seed, "samples": samples, "sectors": sectors}),
    ))
}

fn spanning_suite(cfg: &SuiteConfig) -> Outcome {
    let cutoff = cfg.cutoff.unwrap_or(8);
    let max_word = cfg.max_word.unwrap_or(2);
    let sectors = cfg.sectors(2);
    let mut report = VerificationReport::default();
    let mut ranks = Vec::new();
    for &n in &sectors {
        let s = spanning_check(n, cutoff, max_word)?;
        report.checks += 1;
        if !s.passed() {
            fail(&mut report, format!("span of sector {n}"), None, format!("rank {} of {}", s.rank, s.basis_size));
        }
        ranks.push(json!({"sector": n, "rank": s.rank, "basis_size": s.basis_size}));
    }
    Ok((report, json!({"cutoff": cutoff, "max_word": max_word, "ranks": ranks})))
}

fn sectors_suite(cfg: &SuiteConfig) -> Outcome {
    let cutoff = cfg.cutoff.unwrap_or(12);
    let window = cfg.window.unwrap_or(6);
    let sectors = cfg.sectors(3);
    let mut report = VerificationReport::default();
    let mut sizes = Vec::new();
    for &n in &sectors {
        let r = compare_sectors(n, cutoff, window)?;
        sizes.push(r.parameters["basis_size"].clone());
        report.checks += r.checks;
        report.failures.extend(r.failures);
    }
    Ok((
        report,
        json!({"cutoff": cutoff, "window": window, "sectors": sectors, "basis_sizes": sizes}),
    ))
}

fn adjoint_suite(cfg: &SuiteConfig) -> Outcome {
    let window = cfg.window.unwrap_or(4);
    let cutoff = cfg.cutoff.unwrap_or(10);
    let probes: Vec<FockVector> = enumerate_all(cutoff)
        .into_iter()
        .map(|m| FockVector::basis(Family::Neutral, m))
        .collect();
    let labels: Vec<(i64, i64)> = (-window..=window)
        .flat_map(|m| (-window..=window).map(move |n| (m, n)))
        .collect();
    let parts: Vec<Result<VerificationReport>> = labels
        .par_iter()
        .map(|&(m, n)| {
            let mut r = VerificationReport::default();
            let op = rep_elementary(RepName::ROne, m, n);
            let adj = adjoint_quadop(&op);
            r.checks += 1;
            if adj != rep_elementary(RepName::ROne, n, m) {
                fail(&mut r, format!("adjoint of r1(E[{m},{n}])"), None, adj.to_string());
            }
            let images: Vec<FockVector> = probes.iter().map(|v| apply_quadop(&op, v)).collect::<Result<_>>()?;
            let adj_images: Vec<FockVector> = probes.iter().map(|w| apply_quadop(&adj, w)).collect::<Result<_>>()?;
            for (v, qv) in probes.iter().zip(&images) {
                for (w, aw) in probes.iter().zip(&adj_images) {
                    r.checks += 1;
                    let lhs = inner_product(qv, w)?;
                    let rhs = inner_product(v, aw)?;
                    if lhs != rhs {
                        fail(&mut r, format!("<Qv,w> for r1(E[{m},{n}]) and w = {w}"), Some(v.clone()), format!("{lhs} vs {rhs}"));
                    }
                }
            }
            Ok(r)
        })
        .collect();
    let mut report = VerificationReport::default();
    for p in parts {
        report.merge(p?);
    }
    Ok((report, json!({"window": window, "cutoff": cutoff, "probes": probes.len()})))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Graded dimensions from the product `prod_l (1 + x^{2l+1} y^{+-1})`,
    /// expanded label by label.
    fn neutral_oracle(n: i64, cutoff: i64) -> Vec<(i64, usize)> {
        let mut poly: BTreeMap<(i64, i64), usize> = BTreeMap::from([((0, 0), 1)]);
        let mut label = 0;
        while 2 * label < cutoff {
            let e = 2 * label + 1;
            let y = if label % 2 == 1 { 1 } else { -1 };
            let mut next = poly.clone();
            for (&(energy, dg), &c) in &poly {
                if energy + e <= cutoff {
                    *next.entry((energy + e, dg + y)).or_default() += c;
                }
            }
            poly = next;
            label += 1;
        }
        poly.into_iter()
            .filter(|&((_, dg), c)| dg == n && c > 0)
            .map(|((e, _), c)| (e, c))
            .collect()
    }

    /// Same for `prod_{k >= 1} (1 + z q^k)(1 + z^{-1} q^k)`.
    fn charged_oracle(n: i64, cutoff: i64) -> Vec<(i64, usize)> {
        let mut poly: BTreeMap<(i64, i64), usize> = BTreeMap::from([((0, 0), 1)]);
        for k in 1..=cutoff {
            for z in [1, -1] {
                let mut next = poly.clone();
                for (&(lvl, c), &cnt) in &poly {
                    if lvl + k <= cutoff {
                        *next.entry((lvl + k, c + z)).or_default() += cnt;
                    }
                }
                poly = next;
            }
        }
        poly.into_iter()
            .filter(|&((_, c), cnt)| c == n && cnt > 0)
            .map(|((l, _), cnt)| (l, cnt))
            .collect()
    }

    #[test]
    fn character_examples() {
        assert_eq!(character_table(Space::Neutral(0), 4), vec![(0, 1), (4, 1)]);
        assert_eq!(character_table(Space::Neutral(1), 3), vec![(3, 1)]);
        assert_eq!(character_table(Space::Charged(0), 2), vec![(0, 1), (2, 1)]);
    }

    #[test]
    fn characters_match_generating_functions() {
        for n in -4..=4 {
            assert_eq!(character_table(Space::Neutral(n), 40), neutral_oracle(n, 40), "neutral {n}");
            assert_eq!(character_table(Space::Charged(n), 14), charged_oracle(n, 14), "charged {n}");
        }
    }

    #[test]
    fn compare_examples() {
        assert!(compare_sectors(0, 8, 5).unwrap().passed());
        let r = compare_sectors(1, 3, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.parameters["basis_size"], 1);
        assert!(compare_sectors(-1, 1, 2).unwrap().passed());
    }

    #[test]
    fn compare_at_larger_cutoff() {
        // sectors +-3 only have states from energy2 15 on
        for n in [-3, 3] {
            let r = compare_sectors(n, 30, 8).unwrap();
            assert!(r.parameters["basis_size"].as_u64().unwrap() > 1);
            assert!(r.passed(), "{:?}", r.failures.first());
        }
    }

    #[test]
    fn small_window_weights_collide() {
        // {5} and {7} look alike on indices -2..=2
        let r = compare_sectors(1, 15, 2).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn d_decomposition_example() {
        let r = d_decomposition_evidence(12, 6).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.parameters["d_singular_dim"], 2);
        assert_eq!(r.parameters["a_singular_dim"], 1);
        assert!(r.parameters["a_inf_witness"].is_string());
    }

    #[test]
    fn suite_names() {
        assert_eq!(resolve_suites(&[]).unwrap().len(), SUITES.len());
        assert_eq!(resolve_suites(&["all".into()]).unwrap().len(), SUITES.len());
        assert_eq!(resolve_suites(&["bogus".into()]), Err(UnknownSuite("bogus".into())));
        assert!(run_suite(&["bogus".into()], &SuiteConfig::default()).is_err());
    }

    #[test]
    fn clifford_suite_small_window() {
        let cfg = SuiteConfig {
            window: Some(3),
            cutoff: Some(8),
            ..SuiteConfig::default()
        };
        let agg = run_suite(&["clifford".into()], &cfg).unwrap();
        assert_eq!(agg.exit_code(), 0);
        assert!(agg.suites[0].checks > 0);
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = SuiteConfig {
            samples: Some(5),
            ..SuiteConfig::default()
        };
        let names: Vec<String> = ["reduction", "hwv", "spanning"].map(String::from).to_vec();
        let strip = |v: Value| {
            let mut v = v;
            for s in v["suites"].as_array_mut().unwrap() {
                s["duration_ms"] = json!(0);
            }
            serde_json::to_string(&v).unwrap()
        };
        let a = strip(run_suite(&names, &cfg).unwrap().to_json());
        let b = strip(run_suite(&names, &cfg).unwrap().to_json());
        assert_eq!(a, b);
    }

    #[test]
    fn golden_replay_passes() {
        assert!(golden_replay().unwrap().passed());
    }
}
