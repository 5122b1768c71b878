//! One pair of charged fermions `psi^+`, `psi^-` and its Fock space.

use serde::Serialize;

use crate::clifford::{canonicalize_monomial, Family, FockVector, Mode, Monomial, Species};
use crate::{FockError, Result};

/// `psi^+_{-m-1}` for each `m` in `plus` followed by `psi^-_{-k-1}` for each
/// `k` in `minus`, both lists strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ChargedMonomial {
    pub plus: Vec<i64>,
    pub minus: Vec<i64>,
}

impl ChargedMonomial {
    pub fn new(mut plus: Vec<i64>, mut minus: Vec<i64>) -> Result<ChargedMonomial> {
        plus.sort_unstable();
        minus.sort_unstable();
        for list in [&plus, &minus] {
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(FockError::InvalidInput(format!("repeated factor in {list:?}")));
            }
            if list.iter().any(|&x| x < 0) {
                return Err(FockError::InvalidInput(format!(
                    "charged creation labels are non-negative, got {list:?}"
                )));
            }
        }
        Ok(ChargedMonomial { plus, minus })
    }

    pub fn vacuum() -> ChargedMonomial {
        ChargedMonomial {
            plus: Vec::new(),
            minus: Vec::new(),
        }
    }

    pub fn level(&self) -> i64 {
        self.plus.iter().chain(&self.minus).map(|x| x + 1).sum()
    }

    pub fn to_monomial(&self) -> Monomial {
        let modes: Vec<Mode> = self
            .plus
            .iter()
            .map(|&m| Mode::psi_plus(-m - 1))
            .chain(self.minus.iter().map(|&k| Mode::psi_minus(-k - 1)))
            .collect();
        let (m, sign) = canonicalize_monomial(&modes)
            .expect("charged creation modes")
            .expect("distinct factors");
        debug_assert_eq!(sign, 1);
        m
    }

    pub fn to_vector(&self) -> FockVector {
        FockVector::basis(Family::Charged, self.to_monomial())
    }

    pub fn from_monomial(m: &Monomial) -> Result<ChargedMonomial> {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for mode in m.modes() {
            match mode.species() {
                Species::Plus => plus.push(-mode.index() - 1),
                Species::Minus => minus.push(-mode.index() - 1),
                Species::Neutral => {
                    return Err(FockError::SpeciesMismatch {
                        expected: Family::Charged,
                        found: Family::Neutral,
                    })
                }
            }
        }
        ChargedMonomial::new(plus, minus)
    }
}

pub fn charge(m: &ChargedMonomial) -> i64 {
    m.plus.len() as i64 - m.minus.len() as i64
}

/// Lowest-level vector of charge `n`.
pub fn charged_vacuum(n: i64) -> FockVector {
    let labels: Vec<i64> = (0..n.abs()).collect();
    let m = if n >= 0 {
        ChargedMonomial::new(labels, Vec::new())
    } else {
        ChargedMonomial::new(Vec::new(), labels)
    };
    m.expect("distinct labels").to_vector()
}

/// Odd neutral label `2p-1` goes to `psi^+_{-p}`, even label `2q` to `psi^-_{-q-1}`.
pub fn sector_bijection(m: &Monomial) -> Result<ChargedMonomial> {
    if m.family() == Some(Family::Charged) {
        return Err(FockError::InvalidInput(
            "sector_bijection expects a neutral monomial".into(),
        ));
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for label in m.neutral_labels() {
        if label % 2 == 1 {
            plus.push((label + 1) / 2 - 1);
        } else {
            minus.push(label / 2);
        }
    }
    ChargedMonomial::new(plus, minus)
}

/// All charged monomials of the given charge with level at most `level_max`,
/// ordered by level, then plus list, then minus list.
pub fn enumerate_charged_basis(charge_value: i64, level_max: i64) -> Vec<ChargedMonomial> {
    fn subsets(budget: i64) -> Vec<Vec<i64>> {
        fn go(next: i64, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            out.push(cur.clone());
            let mut x = next;
            while x < budget {
                cur.push(x);
                go(x + 1, budget - (x + 1), cur, out);
                cur.pop();
                x += 1;
            }
        }
        let mut out = Vec::new();
        if budget >= 0 {
            go(0, budget, &mut Vec::new(), &mut out);
        }
        out
    }
    let level = |s: &[i64]| s.iter().map(|x| x + 1).sum::<i64>();
    let all = subsets(level_max);
    let mut out = Vec::new();
    for p in &all {
        for m in &all {
            if p.len() as i64 - m.len() as i64 == charge_value && level(p) + level(m) <= level_max {
                out.push(ChargedMonomial {
                    plus: p.clone(),
                    minus: m.clone(),
                });
            }
        }
    }
    out.sort_by(|a, b| {
        a.level()
            .cmp(&b.level())
            .then_with(|| a.plus.cmp(&b.plus))
            .then_with(|| a.minus.cmp(&b.minus))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::neutral::{enumerate_basis, gradings};

    fn cm(plus: &[i64], minus: &[i64]) -> ChargedMonomial {
        ChargedMonomial::new(plus.to_vec(), minus.to_vec()).unwrap()
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&ChargedMonomial::vacuum()), 0);
        assert_eq!(charge(&cm(&[0], &[])), 1);
        assert_eq!(charge(&cm(&[0], &[0])), 0);
    }

    #[test]
    fn charged_vacuum_layout() {
        assert_eq!(charged_vacuum(0), FockVector::vacuum(Family::Charged));
        let v2 = charged_vacuum(2);
        let m = v2.support().next().unwrap();
        assert_eq!(m.modes(), &[Mode::psi_plus(-1), Mode::psi_plus(-2)]);
        let vm1 = charged_vacuum(-1);
        assert_eq!(
            vm1.support().next().unwrap().modes(),
            &[Mode::psi_minus(-1)]
        );
    }

    #[test]
    fn bijection_examples() {
        let m = Monomial::from_neutral_labels(&[1]).unwrap();
        assert_eq!(sector_bijection(&m).unwrap(), cm(&[0], &[]));
        let m = Monomial::from_neutral_labels(&[0]).unwrap();
        assert_eq!(sector_bijection(&m).unwrap(), cm(&[], &[0]));
        assert_eq!(
            sector_bijection(&Monomial::vacuum()).unwrap(),
            ChargedMonomial::vacuum()
        );
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_charged_basis(0, 0), vec![ChargedMonomial::vacuum()]);
        assert_eq!(enumerate_charged_basis(1, 1), vec![cm(&[0], &[])]);
        assert_eq!(
            enumerate_charged_basis(0, 2),
            vec![ChargedMonomial::vacuum(), cm(&[0], &[0])]
        );
    }

    #[test]
    fn bijection_is_injective_and_charge_preserving() {
        for n in -4..=4 {
            let basis = enumerate_basis(n, 24);
            let mut images: Vec<ChargedMonomial> =
                basis.iter().map(|m| sector_bijection(m).unwrap()).collect();
            for (m, img) in basis.iter().zip(&images) {
                assert_eq!(charge(img), gradings(m).unwrap().dg);
            }
            let before = images.len();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), before);
        }
    }

    #[test]
    fn monomial_round_trip() {
        let c = cm(&[0, 3], &[1, 2]);
        assert_eq!(ChargedMonomial::from_monomial(&c.to_monomial()).unwrap(), c);
    }
}
