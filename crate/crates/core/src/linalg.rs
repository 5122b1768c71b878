//! Exact rank computations over sparse rational vectors.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::Q;

/// Incremental row echelon form. Each stored row has its pivot as its
/// smallest key, normalized to 1.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    pivots: BTreeMap<K, BTreeMap<K, Q>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored rows; returns true if it was
    /// independent (and is now stored).
    pub fn insert(&mut self, mut row: BTreeMap<K, Q>) -> bool {
        row.retain(|_, x| !x.is_zero());
        loop {
            let Some((k, lead)) = row.iter().next().map(|(k, x)| (k.clone(), x.clone())) else {
                return false;
            };
            match self.pivots.get(&k) {
                Some(pivot) => {
                    for (key, x) in pivot {
                        let slot = row.entry(key.clone()).or_insert_with(Q::zero);
                        *slot -= &lead * x;
                        if slot.is_zero() {
                            row.remove(key);
                        }
                    }
                }
                None => {
                    if !lead.is_one() {
                        let inv = lead.recip();
                        for x in row.values_mut() {
                            *x *= &inv;
                        }
                    }
                    self.pivots.insert(k, row);
                    return true;
                }
            }
        }
    }
}

pub fn rank<K, I>(rows: I) -> usize
where
    K: Ord + Clone,
    I: IntoIterator<Item = BTreeMap<K, Q>>,
{
    let mut ech = Echelon::new();
    for row in rows {
        ech.insert(row);
    }
    ech.rank()
}
