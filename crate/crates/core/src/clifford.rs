//! Clifford algebras with a declared pairing acting on their Fock modules.
//!
//! Two instances are provided: the neutral algebra with modes `phi_j`,
//! `j in Z + 1/2`, and `{phi_j, phi_k} = delta_{j,-k}`; and the charged
//! algebra with modes `psi^+_n`, `psi^-_n`, `n in Z`, and
//! `{psi^+_m, psi^-_n} = delta_{m+n,-1}`. In both cases every mode pairs
//! with exactly one other mode, which is what makes single-monomial
//! actions possible.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::report::{Failure, VerificationReport};
use crate::{FockError, Result, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Neutral,
    Charged,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Species {
    Neutral,
    Plus,
    Minus,
}

impl Species {
    pub fn family(self) -> Family {
        match self {
            Species::Neutral => Family::Neutral,
            Species::Plus | Species::Minus => Family::Charged,
        }
    }
}

/// A single odd generator.
///
/// Neutral modes store the doubled half-integer index, which is always odd.
/// Charged modes store their integer index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mode {
    species: Species,
    index: i64,
}

impl Mode {
    /// `phi_{doubled/2}`; fails when `doubled` is even.
    pub fn try_neutral(doubled: i64) -> Result<Mode> {
        if doubled.rem_euclid(2) != 1 {
            return Err(FockError::InvalidInput(format!(
                "neutral mode index must be an odd doubled integer, got {doubled}"
            )));
        }
        Ok(Mode {
            species: Species::Neutral,
            index: doubled,
        })
    }

    /// `phi_{doubled/2}`.
    ///
    /// Panics if `doubled` is even; use [`Mode::try_neutral`] for untrusted input.
    pub fn phi(doubled: i64) -> Mode {
        Mode::try_neutral(doubled).expect("neutral modes have odd doubled index")
    }

    pub fn psi_plus(n: i64) -> Mode {
        Mode {
            species: Species::Plus,
            index: n,
        }
    }

    pub fn psi_minus(n: i64) -> Mode {
        Mode {
            species: Species::Minus,
            index: n,
        }
    }

    /// The neutral creation operator `phi_{-n-1/2}` carrying label `n`.
    pub fn from_neutral_label(label: i64) -> Mode {
        Mode::phi(-2 * label - 1)
    }

    pub fn species(self) -> Species {
        self.species
    }

    /// Doubled index for neutral modes, plain index for charged ones.
    pub fn index(self) -> i64 {
        self.index
    }

    pub fn family(self) -> Family {
        self.species.family()
    }

    pub fn is_creation(self) -> bool {
        match self.species {
            Species::Neutral => self.index < 0,
            Species::Plus | Species::Minus => self.index <= -1,
        }
    }

    pub fn is_annihilation(self) -> bool {
        !self.is_creation()
    }

    /// The unique mode this one has a nonzero anticommutator with.
    pub fn partner(self) -> Mode {
        match self.species {
            Species::Neutral => Mode::phi(-self.index),
            Species::Plus => Mode::psi_minus(-self.index - 1),
            Species::Minus => Mode::psi_plus(-self.index - 1),
        }
    }

    /// Label `n` such that this mode is `phi_{-n-1/2}`. Creation modes have `n >= 0`.
    pub fn neutral_label(self) -> Option<i64> {
        match self.species {
            Species::Neutral => Some((-self.index - 1) / 2),
            _ => None,
        }
    }

    /// Sort key realizing the canonical factor order of basis monomials.
    ///
    /// Neutral: decreasing label (increasing doubled index). Charged: plus
    /// factors before minus factors, each by decreasing mode.
    fn canonical_key(self) -> (u8, i64) {
        match self.species {
            Species::Neutral => (0, self.index),
            Species::Plus => (1, -self.index),
            Species::Minus => (2, -self.index),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.species {
            Species::Neutral => {
                if self.index < 0 {
                    write!(f, "φ(-{}/2)", -self.index)
                } else {
                    write!(f, "φ({}/2)", self.index)
                }
            }
            Species::Plus => write!(f, "ψ+({})", self.index),
            Species::Minus => write!(f, "ψ-({})", self.index),
        }
    }
}

/// Value of the anticommutator `{a, b}`.
pub fn pair(a: Mode, b: Mode) -> Q {
    if a.partner() == b {
        Q::one()
    } else {
        Q::zero()
    }
}

/// `phi_a phi_b - :phi_a phi_b:`. Nonzero only when `a` annihilates and pairs with `b`.
pub fn contraction(a: Mode, b: Mode) -> Q {
    if a.is_annihilation() {
        pair(a, b)
    } else {
        Q::zero()
    }
}

pub fn adjoint_mode(a: Mode) -> Mode {
    a.partner()
}

/// Canonically ordered product of distinct creation modes applied to `|0>`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    modes: Vec<Mode>,
}

impl Monomial {
    pub fn vacuum() -> Monomial {
        Monomial { modes: Vec::new() }
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_vacuum(&self) -> bool {
        self.modes.is_empty()
    }

    /// `None` for the vacuum, which belongs to every family.
    pub fn family(&self) -> Option<Family> {
        self.modes.first().map(|m| m.family())
    }

    pub fn contains(&self, mode: Mode) -> bool {
        self.modes.contains(&mode)
    }

    /// Builds the neutral monomial with the given creation labels (any order).
    pub fn from_neutral_labels(labels: &[i64]) -> Result<Monomial> {
        if let Some(bad) = labels.iter().find(|&&l| l < 0) {
            return Err(FockError::InvalidInput(format!(
                "neutral creation labels are non-negative, got {bad}"
            )));
        }
        let modes: Vec<Mode> = labels.iter().map(|&l| Mode::from_neutral_label(l)).collect();
        match canonicalize_monomial(&modes)? {
            Some((m, _)) => Ok(m),
            None => Err(FockError::InvalidInput(format!(
                "repeated label in {labels:?}"
            ))),
        }
    }

    /// Creation labels in canonical (decreasing) order; empty for charged monomials.
    pub fn neutral_labels(&self) -> Vec<i64> {
        self.modes.iter().filter_map(|m| m.neutral_label()).collect()
    }

    /// Clifford action of one mode on this basis vector.
    pub fn apply(&self, a: Mode) -> Option<(Monomial, i8)> {
        if a.is_creation() {
            if self.contains(a) {
                return None;
            }
            let key = a.canonical_key();
            let pos = self.modes.partition_point(|m| m.canonical_key() < key);
            let mut modes = self.modes.clone();
            modes.insert(pos, a);
            Some((Monomial { modes }, parity_sign(pos)))
        } else {
            let target = a.partner();
            let pos = self.modes.iter().position(|&m| m == target)?;
            let mut modes = self.modes.clone();
            modes.remove(pos);
            Some((Monomial { modes }, parity_sign(pos)))
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.modes {
            write!(f, "{m}")?;
        }
        write!(f, "|0>")
    }
}

fn parity_sign(transpositions: usize) -> i8 {
    if transpositions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Reorders a product of creation modes into canonical order.
///
/// Returns the monomial with the sign of the sorting permutation, or `None`
/// when a factor repeats (the product vanishes).
pub fn canonicalize_monomial(factors: &[Mode]) -> Result<Option<(Monomial, i8)>> {
    if let Some(bad) = factors.iter().find(|m| !m.is_creation()) {
        return Err(FockError::InvalidInput(format!(
            "{bad} is not a creation mode"
        )));
    }
    if let Some(first) = factors.first() {
        if let Some(other) = factors.iter().find(|m| m.family() != first.family()) {
            return Err(FockError::SpeciesMismatch {
                expected: first.family(),
                found: other.family(),
            });
        }
    }
    let mut inversions = 0usize;
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i + 1..] {
            if a == b {
                return Ok(None);
            }
            if a.canonical_key() > b.canonical_key() {
                inversions += 1;
            }
        }
    }
    let mut modes = factors.to_vec();
    modes.sort_by_key(|m| m.canonical_key());
    Ok(Some((Monomial { modes }, parity_sign(inversions))))
}

/// Finite linear combination of basis monomials with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    family: Family,
    terms: BTreeMap<Monomial, Q>,
}

impl FockVector {
    pub fn zero(family: Family) -> FockVector {
        FockVector {
            family,
            terms: BTreeMap::new(),
        }
    }

    pub fn vacuum(family: Family) -> FockVector {
        FockVector::basis(family, Monomial::vacuum())
    }

    /// Panics if the monomial belongs to the other family.
    pub fn basis(family: Family, m: Monomial) -> FockVector {
        assert!(
            m.family().is_none_or(|f| f == family),
            "monomial {m} does not belong to the {family:?} family"
        );
        let mut v = FockVector::zero(family);
        v.terms.insert(m, Q::one());
        v
    }

    /// Neutral basis vector from creation labels.
    pub fn from_neutral_labels(labels: &[i64]) -> Result<FockVector> {
        Ok(FockVector::basis(
            Family::Neutral,
            Monomial::from_neutral_labels(labels)?,
        ))
    }

    pub fn from_terms<I>(family: Family, terms: I) -> Result<FockVector>
    where
        I: IntoIterator<Item = (Monomial, Q)>,
    {
        let mut v = FockVector::zero(family);
        for (m, c) in terms {
            if let Some(found) = m.family() {
                if found != family {
                    return Err(FockError::SpeciesMismatch {
                        expected: family,
                        found,
                    });
                }
            }
            v.add_term(m, c);
        }
        Ok(v)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scaled(&self, c: &Q) -> FockVector {
        if c.is_zero() {
            return FockVector::zero(self.family);
        }
        FockVector {
            family: self.family,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &FockVector, c: &Q) -> Result<()> {
        self.check_family(other.family)?;
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
        Ok(())
    }

    pub fn plus(&self, other: &FockVector) -> Result<FockVector> {
        let mut out = self.clone();
        out.add_scaled(other, &Q::one())?;
        Ok(out)
    }

    pub fn minus(&self, other: &FockVector) -> Result<FockVector> {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one())?;
        Ok(out)
    }

    pub(crate) fn check_family(&self, found: Family) -> Result<()> {
        if self.family == found {
            Ok(())
        } else {
            Err(FockError::SpeciesMismatch {
                expected: self.family,
                found,
            })
        }
    }

    /// Monomials carrying a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "({})·{}", c.abs(), m)?;
        }
        Ok(())
    }
}

pub fn apply_mode(a: Mode, v: &FockVector) -> Result<FockVector> {
    v.check_family(a.family())?;
    let mut out = FockVector::zero(v.family);
    for (m, c) in &v.terms {
        if let Some((img, sign)) = m.apply(a) {
            let c = if sign < 0 { -c.clone() } else { c.clone() };
            out.add_term(img, c);
        }
    }
    Ok(out)
}

/// Applies `:phi_a phi_b:` to `v`.
pub fn apply_normal_ordered_pair(a: Mode, b: Mode, v: &FockVector) -> Result<FockVector> {
    if a.family() != b.family() {
        return Err(FockError::SpeciesMismatch {
            expected: a.family(),
            found: b.family(),
        });
    }
    v.check_family(a.family())?;
    if contraction(a, b).is_zero() {
        apply_mode(a, &apply_mode(b, v)?)
    } else {
        Ok(apply_mode(b, &apply_mode(a, v)?)?.scaled(&-Q::one()))
    }
}

/// Checks `(phi_a phi_b + phi_b phi_a) v = {a, b} v` on every probe.
pub fn anticommutator_check(a: Mode, b: Mode, probes: &[FockVector]) -> Result<VerificationReport> {
    if a.family() != b.family() {
        return Err(FockError::SpeciesMismatch {
            expected: a.family(),
            found: b.family(),
        });
    }
    let expected_scalar = pair(a, b);
    let mut report = VerificationReport::default();
    for v in probes {
        let ab = apply_mode(a, &apply_mode(b, v)?)?;
        let ba = apply_mode(b, &apply_mode(a, v)?)?;
        let lhs = ab.plus(&ba)?;
        let rhs = v.scaled(&expected_scalar);
        report.checks += 1;
        let diff = lhs.minus(&rhs)?;
        if !diff.is_zero() {
            report.failures.push(Failure {
                label: format!("{{{a}, {b}}}"),
                input: Some(v.clone()),
                discrepancy: diff.to_string(),
            });
        }
    }
    Ok(report)
}

/// Bilinear form making the canonical monomial basis orthonormal.
pub fn inner_product(v: &FockVector, w: &FockVector) -> Result<Q> {
    v.check_family(w.family)?;
    let (small, large) = if v.len() <= w.len() { (v, w) } else { (w, v) };
    let mut acc = Q::zero();
    for (m, c) in &small.terms {
        if let Some(d) = large.terms.get(m) {
            acc += c * d;
        }
    }
    Ok(acc)
}
