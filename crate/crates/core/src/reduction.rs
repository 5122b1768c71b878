//! Reduction of sector vectors to the highest weight vector `v_n` under `r_1`.
//!
//! `r_1(E_{p,q}) = :phi_{-2p+1/2} phi_{2q-1/2}:` acts on a label set in one
//! of four ways, depending on the signs of `p` and `q`; see
//! [`classify_generator`].

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clifford::{Family, FockVector, Monomial};
use crate::linalg::Echelon;
use crate::neutral::{enumerate_basis, highest_weight_labels, highest_weight_vector, label_gradings, sector_of};
use crate::rep::{apply_quadop, rep_elementary, RepName};
use crate::{FockError, Result, Q};

/// Seed used by the acceptance runs for random sector vectors.
pub const DEFAULT_SEED: u64 = 20_240_611;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    AddPair { odd: i64, even: i64 },
    RemovePair { odd: i64, even: i64 },
    ReplaceOdd { from: i64, to: i64 },
    ReplaceEven { from: i64, to: i64 },
}

impl ActionKind {
    /// The `(p, q)` of the generator `E_{p,q}` with this action.
    pub fn label(self) -> (i64, i64) {
        match self {
            ActionKind::AddPair { odd, even } => ((odd + 1) / 2, -even / 2),
            ActionKind::RemovePair { odd, even } => (-even / 2, (odd + 1) / 2),
            ActionKind::ReplaceOdd { from, to } => ((to + 1) / 2, (from + 1) / 2),
            ActionKind::ReplaceEven { from, to } => (-from / 2, -to / 2),
        }
    }

    /// Predicted image of a label set, ignoring sign; `None` when the
    /// generator kills the monomial.
    pub fn predict(self, labels: &BTreeSet<i64>) -> Option<BTreeSet<i64>> {
        let mut out = labels.clone();
        match self {
            ActionKind::AddPair { odd, even } => (out.insert(odd) && out.insert(even)).then_some(out),
            ActionKind::RemovePair { odd, even } => {
                (out.remove(&odd) && out.remove(&even)).then_some(out)
            }
            ActionKind::ReplaceOdd { from, to } | ActionKind::ReplaceEven { from, to } => {
                if !out.remove(&from) {
                    None
                } else {
                    out.insert(to).then_some(out)
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorAction {
    pub kind: ActionKind,
    pub label: (i64, i64),
}

pub fn classify_generator(p: i64, q: i64) -> GeneratorAction {
    let kind = match (p >= 1, q >= 1) {
        (true, false) => ActionKind::AddPair {
            odd: 2 * p - 1,
            even: -2 * q,
        },
        (false, true) => ActionKind::RemovePair {
            even: -2 * p,
            odd: 2 * q - 1,
        },
        (true, true) => ActionKind::ReplaceOdd {
            from: 2 * q - 1,
            to: 2 * p - 1,
        },
        (false, false) => ActionKind::ReplaceEven {
            from: -2 * p,
            to: -2 * q,
        },
    };
    GeneratorAction { kind, label: (p, q) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub sector: i64,
    pub steps: Vec<(i64, i64)>,
    pub final_scalar: Q,
}

/// Applies `r_1(E_{p,q})` for each step, first step first.
pub fn replay_trace(steps: &[(i64, i64)], v: &FockVector) -> Result<FockVector> {
    let mut cur = v.clone();
    for &(p, q) in steps {
        cur = apply_quadop(&rep_elementary(RepName::ROne, p, q), &cur)?;
    }
    Ok(cur)
}

/// Checks that replaying `trace` on `v` gives `final_scalar * v_n`.
pub fn verify_trace(trace: &ReductionTrace, v: &FockVector) -> Result<bool> {
    if trace.final_scalar.is_zero() {
        return Ok(false);
    }
    let end = replay_trace(&trace.steps, v)?;
    Ok(end == highest_weight_vector(trace.sector).scaled(&trace.final_scalar))
}

struct Reducer {
    sector: i64,
    current: FockVector,
    steps: Vec<(i64, i64)>,
}

fn labels_of(m: &Monomial) -> Vec<i64> {
    m.neutral_labels()
}

fn step(v: &FockVector, action: ActionKind) -> FockVector {
    let (p, q) = action.label();
    apply_quadop(&rep_elementary(RepName::ROne, p, q), v).expect("neutral vector")
}

impl Reducer {
    fn apply(&mut self, action: ActionKind) {
        self.current = step(&self.current, action);
        self.steps.push(action.label());
    }

    fn all_labels(&self) -> BTreeSet<i64> {
        self.current.support().flat_map(labels_of).collect()
    }

    /// Smallest odd and even labels above every label in use.
    fn fresh(&self) -> (i64, i64) {
        let top = self.all_labels().last().copied().unwrap_or(-1);
        let odd = if top % 2 == 0 { top + 1 } else { top + 2 };
        let even = if top % 2 == 0 { top + 2 } else { top + 1 };
        (odd.max(1), even.max(0))
    }

    fn lengths_differ(&self) -> bool {
        let lens: BTreeSet<usize> = self.current.support().map(Monomial::len).collect();
        lens.len() > 1
    }

    /// Add then remove `(o, e)`: keeps exactly the terms containing neither.
    fn try_projection(&self, odd: i64, even: i64) -> Option<FockVector> {
        let added = step(&self.current, ActionKind::AddPair { odd, even });
        let back = step(&added, ActionKind::RemovePair { odd, even });
        (!back.is_zero() && back.len() < self.current.len()).then_some(back)
    }

    fn commit_projection(&mut self, odd: i64, even: i64) {
        self.apply(ActionKind::AddPair { odd, even });
        self.apply(ActionKind::RemovePair { odd, even });
    }

    fn projection_search(&self, odds: &[i64], evens: &[i64], anchor: &BTreeSet<i64>) -> Option<(i64, i64)> {
        for &o in odds {
            for &e in evens {
                if !anchor.contains(&o) && !anchor.contains(&e) {
                    continue;
                }
                if self.try_projection(o, e).is_some() {
                    return Some((o, e));
                }
            }
        }
        None
    }

    fn exhaustive_projection(&self) -> Option<(i64, i64)> {
        let (fo, fe) = self.fresh();
        let all = self.all_labels();
        let mut odds: Vec<i64> = all.iter().copied().filter(|l| l % 2 == 1).chain([fo]).collect();
        let mut evens: Vec<i64> = all.iter().copied().filter(|l| l % 2 == 0).chain([fe]).collect();
        odds.sort_unstable_by(|a, b| b.cmp(a));
        evens.sort_unstable_by(|a, b| b.cmp(a));
        self.projection_search(&odds, &evens, &all)
    }

    fn phase_one(&mut self) {
        while self.current.len() > 1 && self.lengths_differ() {
            let max_len = self.current.support().map(Monomial::len).max().unwrap_or(0);
            let victim = self
                .current
                .support()
                .filter(|m| m.len() == max_len)
                .map(labels_of)
                .max()
                .expect("nonempty support");
            let (fo, fe) = self.fresh();
            let odds: Vec<i64> = victim.iter().copied().filter(|l| l % 2 == 1).chain([fo]).collect();
            let evens: Vec<i64> = victim.iter().copied().filter(|l| l % 2 == 0).chain([fe]).collect();
            let anchor: BTreeSet<i64> = victim.iter().copied().collect();
            let pick = self
                .projection_search(&odds, &evens, &anchor)
                .or_else(|| self.exhaustive_projection())
                .expect("a label of the victim is missing from some other term");
            self.commit_projection(pick.0, pick.1);
        }
    }

    fn phase_two(&mut self) {
        while self.current.len() > 1 {
            let all = self.all_labels();
            let (fo, fe) = self.fresh();
            let mut best = None;
            'search: for &from in all.iter().rev() {
                let fresh = if from % 2 == 1 { fo } else { fe };
                let mut targets: Vec<i64> = all
                    .iter()
                    .copied()
                    .filter(|l| l % 2 == from % 2)
                    .chain([fresh])
                    .collect();
                targets.sort_unstable_by(|a, b| b.cmp(a));
                for to in targets {
                    let action = if from % 2 == 1 {
                        ActionKind::ReplaceOdd { from, to }
                    } else {
                        ActionKind::ReplaceEven { from, to }
                    };
                    let img = step(&self.current, action);
                    if !img.is_zero() && img.len() < self.current.len() {
                        best = Some(action);
                        break 'search;
                    }
                }
            }
            match best {
                Some(action) => self.apply(action),
                None => {
                    let (o, e) = self
                        .exhaustive_projection()
                        .expect("distinct terms of equal length differ in some label");
                    self.commit_projection(o, e);
                }
            }
        }
    }

    fn phase_three(&mut self) {
        let target = highest_weight_labels(self.sector);
        loop {
            let labels = labels_of(self.current.support().next().expect("single term"));
            if labels.len() > target.len() {
                let odd = *labels.iter().find(|l| *l % 2 == 1).expect("excess length has an odd label");
                let even = *labels.iter().find(|l| *l % 2 == 0).expect("excess length has an even label");
                self.apply(ActionKind::RemovePair { odd, even });
                continue;
            }
            let Some(&from) = labels.iter().find(|l| !target.contains(l)) else {
                break;
            };
            let to = *target
                .iter()
                .find(|t| !labels.contains(t))
                .expect("same length and parity as the target");
            let action = if from % 2 == 1 {
                ActionKind::ReplaceOdd { from, to }
            } else {
                ActionKind::ReplaceEven { from, to }
            };
            self.apply(action);
        }
    }
}

/// Finds a word in `r_1` generators taking `v` to a nonzero multiple of `v_n`.
pub fn reduce_to_highest_weight(v: &FockVector) -> Result<ReductionTrace> {
    if v.family() != Family::Neutral {
        return Err(FockError::SpeciesMismatch {
            expected: Family::Neutral,
            found: v.family(),
        });
    }
    let sector = sector_of(v)?
        .ok_or_else(|| FockError::InvalidInput("cannot reduce the zero vector".into()))?;
    let mut r = Reducer {
        sector,
        current: v.clone(),
        steps: Vec::new(),
    };
    r.phase_one();
    r.phase_two();
    r.phase_three();
    let target = highest_weight_vector(sector);
    let final_scalar = r.current.coeff(target.support().next().expect("monomial"));
    debug_assert_eq!(r.current, target.scaled(&final_scalar));
    Ok(ReductionTrace {
        sector,
        steps: r.steps,
        final_scalar,
    })
}

/// Lexicographic progress measure: distinct terms, excess length of the
/// longest term, and labels away from `v_n` (single-term vectors only).
pub fn progress_measure(v: &FockVector, sector: i64) -> (usize, usize, usize) {
    let excess = v
        .support()
        .map(|m| m.len().saturating_sub(sector.unsigned_abs() as usize))
        .max()
        .unwrap_or(0);
    let distance = if v.len() == 1 {
        let target = highest_weight_labels(sector);
        labels_of(v.support().next().expect("single term"))
            .iter()
            .filter(|l| !target.contains(l))
            .count()
    } else {
        0
    };
    (v.len(), excess, distance)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningReport {
    pub sector: i64,
    pub energy2_max: i64,
    pub max_word: usize,
    pub rank: usize,
    pub basis_size: usize,
    pub words_applied: usize,
}

impl SpanningReport {
    pub fn passed(&self) -> bool {
        self.rank == self.basis_size
    }
}

/// Rank of the span of `w v_n` over words `w` of length at most `max_word`
/// in lower triangular generators, truncated at `energy2_max`.
pub fn spanning_check(n: i64, energy2_max: i64, max_word: usize) -> Result<SpanningReport> {
    if max_word == 0 {
        return Err(FockError::InvalidInput("max_word must be at least 1".into()));
    }
    let basis_size = enumerate_basis(n, energy2_max).len();
    // No label above `top` fits under the cutoff.
    let top = (energy2_max - 1).div_euclid(2);
    let w = top.max(0) / 2 + 1;
    let lowers: Vec<(i64, i64)> = (-w..=w)
        .flat_map(|p| (-w..=w).map(move |q| (p, q)))
        .filter(|(p, q)| p > q)
        .collect();
    let in_range = |v: &FockVector| {
        v.support()
            .all(|m| label_gradings(&labels_of(m)).energy2 <= energy2_max)
    };
    let start = highest_weight_vector(n);
    let mut ech: Echelon<Monomial> = Echelon::new();
    let mut words_applied = 0;
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut frontier = Vec::new();
    if in_range(&start) {
        ech.insert(start.terms().clone());
        seen.extend(start.support().cloned());
        frontier.push(start);
    }
    for _ in 0..max_word {
        let mut next = Vec::new();
        for v in &frontier {
            for &(p, q) in &lowers {
                let img = apply_quadop(&rep_elementary(RepName::ROne, p, q), v)?;
                words_applied += 1;
                // lower generators raise energy, so anything past the cutoff stays there
                if img.is_zero() || !in_range(&img) {
                    continue;
                }
                ech.insert(img.terms().clone());
                // monomial inputs have monomial images; one representative per monomial suffices
                if img.len() == 1 && !seen.insert(img.support().next().expect("term").clone()) {
                    continue;
                }
                next.push(img);
            }
        }
        frontier = next;
    }
    Ok(SpanningReport {
        sector: n,
        energy2_max,
        max_word,
        rank: ech.rank(),
        basis_size,
        words_applied,
    })
}

/// Energy cutoff used for random vectors in sector `n`: `energy2_max`, raised
/// to `energy2(v_n) + energy2_max` when the sector has no states below it.
pub fn random_vector_cutoff(n: i64, energy2_max: i64) -> i64 {
    if enumerate_basis(n, energy2_max).is_empty() {
        label_gradings(&highest_weight_labels(n)).energy2 + energy2_max
    } else {
        energy2_max
    }
}

/// Random nonzero vector in sector `n`: up to `max_terms` distinct basis
/// monomials with coefficients drawn from `{-2, ..., 2}`.
pub fn random_sector_vector<R: Rng>(rng: &mut R, n: i64, energy2_max: i64, max_terms: usize) -> FockVector {
    let basis = enumerate_basis(n, random_vector_cutoff(n, energy2_max));
    assert!(!basis.is_empty(), "sector {n} has no states");
    let k_max = max_terms.clamp(1, basis.len());
    loop {
        let k = rng.random_range(1..=k_max);
        let mut terms = BTreeMap::new();
        for idx in sample(rng, basis.len(), k) {
            terms.insert(basis[idx].clone(), Q::from_integer(rng.random_range(-2i64..=2).into()));
        }
        let v = FockVector::from_terms(Family::Neutral, terms).expect("neutral monomials");
        if !v.is_zero() {
            return v;
        }
    }
}

/// `count` random vectors for sector `n` from a generator seeded by `seed` and `n`.
pub fn seeded_vectors(seed: u64, n: i64, energy2_max: i64, count: usize) -> Vec<FockVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    (0..count)
        .map(|_| random_sector_vector(&mut rng, n, energy2_max, 6))
        .collect()
}

/// The worked six-term vector from the reduction example.
pub fn example_vector() -> FockVector {
    let sets: [&[i64]; 6] = [&[7, 4, 3, 2], &[5, 3, 2, 0], &[8, 5], &[6, 1], &[5, 4], &[9, 8]];
    let mut v = FockVector::zero(Family::Neutral);
    for s in sets {
        v.add_term(Monomial::from_neutral_labels(s).expect("distinct"), Q::one());
    }
    v
}

pub const EXAMPLE_STEPS: [(i64, i64); 5] = [(4, -2), (-2, 4), (3, -1), (-1, 3), (1, 5)];
