//! The neutral fermion Fock space: gradings, distinguished vectors, and
//! truncated basis enumeration.
//!
//! A basis monomial `phi_{-n_k-1/2} ... phi_{-n_1-1/2}|0>` is identified with
//! its label set `{n_k > ... > n_1 >= 0}`.

use serde::Serialize;

use crate::clifford::{Family, FockVector, Monomial};
use crate::{FockError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GradingReport {
    pub dg: i64,
    pub length: usize,
    /// Twice the sum of `n_i + 1/2`.
    pub energy2: i64,
    pub parity: Parity,
}

pub fn gradings(m: &Monomial) -> Result<GradingReport> {
    if m.family() == Some(Family::Charged) {
        return Err(FockError::InvalidInput(
            "gradings are defined on neutral monomials".into(),
        ));
    }
    Ok(label_gradings(&m.neutral_labels()))
}

pub(crate) fn label_gradings(labels: &[i64]) -> GradingReport {
    let odd = labels.iter().filter(|l| *l % 2 == 1).count() as i64;
    let even = labels.len() as i64 - odd;
    GradingReport {
        dg: odd - even,
        length: labels.len(),
        energy2: energy2(labels),
        parity: if labels.len().is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        },
    }
}

pub(crate) fn energy2(labels: &[i64]) -> i64 {
    labels.iter().map(|l| 2 * l + 1).sum()
}

/// dg value shared by every term of `v`, if any.
pub fn sector_of(v: &FockVector) -> Result<Option<i64>> {
    if v.family() != Family::Neutral {
        return Err(FockError::SpeciesMismatch {
            expected: Family::Neutral,
            found: v.family(),
        });
    }
    let mut sector = None;
    for m in v.support() {
        let dg = label_gradings(&m.neutral_labels()).dg;
        match sector {
            None => sector = Some(dg),
            Some(s) if s != dg => {
                return Err(FockError::NotHomogeneous {
                    first: s,
                    second: dg,
                })
            }
            _ => {}
        }
    }
    Ok(sector)
}

/// Labels of `v_n`: the odd labels `1, 3, ..., 2n-1` for `n > 0`, the even
/// labels `0, 2, ..., 2|n|-2` for `n < 0`.
pub fn highest_weight_labels(n: i64) -> Vec<i64> {
    let mut labels: Vec<i64> = if n >= 0 {
        (1..=n).map(|l| 2 * l - 1).collect()
    } else {
        (0..-n).map(|l| 2 * l).collect()
    };
    labels.reverse();
    labels
}

pub fn highest_weight_vector(n: i64) -> FockVector {
    FockVector::from_neutral_labels(&highest_weight_labels(n)).expect("labels are distinct")
}

/// `phi_{-3/2} phi_{-1/2}|0>`, the second `d_inf` highest weight vector of charge 0.
pub fn tilde_v0() -> FockVector {
    FockVector::from_neutral_labels(&[1, 0]).expect("labels are distinct")
}

/// All monomials in sector `n` with `energy2 <= energy2_max`, ordered by
/// energy2 and then lexicographically on the decreasing label list.
pub fn enumerate_basis(n: i64, energy2_max: i64) -> Vec<Monomial> {
    enumerate_label_sets(energy2_max)
        .into_iter()
        .filter(|labels| label_gradings(labels).dg == n)
        .map(|labels| Monomial::from_neutral_labels(&labels).expect("distinct labels"))
        .collect()
}

/// Every neutral monomial with `energy2 <= energy2_max`, across all sectors.
pub fn enumerate_all(energy2_max: i64) -> Vec<Monomial> {
    enumerate_label_sets(energy2_max)
        .into_iter()
        .map(|labels| Monomial::from_neutral_labels(&labels).expect("distinct labels"))
        .collect()
}

fn enumerate_label_sets(energy2_max: i64) -> Vec<Vec<i64>> {
    fn extend(next: i64, budget: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        out.push(current.iter().rev().copied().collect());
        let mut label = next;
        while 2 * label < budget {
            current.push(label);
            extend(label + 1, budget - (2 * label + 1), current, out);
            current.pop();
            label += 1;
        }
    }
    let mut out = Vec::new();
    if energy2_max < 0 {
        return out;
    }
    extend(0, energy2_max, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| energy2(a).cmp(&energy2(b)).then_with(|| a.cmp(b)));
    out
}
