//! Finitely supported elements of `a_inf` and `d_inf`.
//!
//! An element is a `Z x Z` matrix with finitely many nonzero entries plus a
//! multiple of the central element `c`. The bracket carries the cocycle
//! `C(A, B) = Trace([J, A] B)` with `J = sum_{i <= 0} E_ii`; the same cocycle
//! is used for `d_inf`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::{q, q_frac, FockError, Result, Q};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    entries: BTreeMap<(i64, i64), Q>,
    central: Q,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement::default()
    }

    /// The elementary matrix `E_ij`.
    pub fn elementary(i: i64, j: i64) -> AlgebraElement {
        let mut a = AlgebraElement::zero();
        a.add_entry(i, j, Q::one());
        a
    }

    pub fn central_element() -> AlgebraElement {
        AlgebraElement::central_multiple(Q::one())
    }

    pub fn central_multiple(c: Q) -> AlgebraElement {
        AlgebraElement {
            entries: BTreeMap::new(),
            central: c,
        }
    }

    pub fn from_parts<I>(entries: I, central: Q) -> AlgebraElement
    where
        I: IntoIterator<Item = ((i64, i64), Q)>,
    {
        let mut a = AlgebraElement::central_multiple(central);
        for ((i, j), x) in entries {
            a.add_entry(i, j, x);
        }
        a
    }

    pub fn entries(&self) -> &BTreeMap<(i64, i64), Q> {
        &self.entries
    }

    pub fn entry(&self, i: i64, j: i64) -> Q {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn central(&self) -> &Q {
        &self.central
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty() && self.central.is_zero()
    }

    pub fn add_entry(&mut self, i: i64, j: i64, x: Q) {
        if x.is_zero() {
            return;
        }
        let slot = self.entries.entry((i, j)).or_insert_with(Q::zero);
        *slot += x;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add_scaled(other, &Q::one())
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add_scaled(other, &-Q::one())
    }

    pub fn add_scaled(&self, other: &AlgebraElement, s: &Q) -> AlgebraElement {
        let mut out = self.clone();
        for (&(i, j), x) in &other.entries {
            out.add_entry(i, j, x * s);
        }
        out.central += &other.central * s;
        out
    }

    pub fn scaled(&self, s: &Q) -> AlgebraElement {
        AlgebraElement::zero().add_scaled(self, s)
    }

    /// The compact anti-involution `E_ij -> E_ji` (rational scalars, so no conjugation).
    pub fn omega(&self) -> AlgebraElement {
        AlgebraElement::from_parts(
            self.entries.iter().map(|(&(i, j), x)| ((j, i), x.clone())),
            self.central.clone(),
        )
    }

    /// Whether the matrix part satisfies `a_ij = -a_{1-j,1-i}`.
    pub fn is_d_type(&self) -> bool {
        self.entries
            .iter()
            .all(|(&(i, j), x)| self.entry(1 - j, 1 - i) == -x)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(i, j)| i == j)
    }

    fn matrix_product(&self, other: &AlgebraElement) -> BTreeMap<(i64, i64), Q> {
        let mut by_row: BTreeMap<i64, Vec<(i64, &Q)>> = BTreeMap::new();
        for (&(k, l), y) in &other.entries {
            by_row.entry(k).or_default().push((l, y));
        }
        let mut out: BTreeMap<(i64, i64), Q> = BTreeMap::new();
        for (&(i, k), x) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for (l, y) in row {
                    *out.entry((i, *l)).or_insert_with(Q::zero) += x * *y;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&(i, j), x) in &self.entries {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({x})E[{i},{j}]")?;
            first = false;
        }
        if !self.central.is_zero() || first {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})c", self.central)?;
        }
        Ok(())
    }
}

fn j_diag(i: i64) -> i64 {
    if i <= 0 {
        1
    } else {
        0
    }
}

/// `Trace([J, A] B)`, summed over the support of `A`.
pub fn cocycle(a: &AlgebraElement, b: &AlgebraElement) -> Q {
    let mut acc = Q::zero();
    for (&(i, j), x) in &a.entries {
        let weight = j_diag(i) - j_diag(j);
        if weight == 0 {
            continue;
        }
        if let Some(y) = b.entries.get(&(j, i)) {
            acc += x * y * q(weight);
        }
    }
    acc
}

/// Matrix commutator with the cocycle in the central slot.
pub fn bracket(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let ab = a.matrix_product(b);
    let ba = b.matrix_product(a);
    let mut out = AlgebraElement::central_multiple(cocycle(a, b));
    for ((i, j), x) in ab {
        out.add_entry(i, j, x);
    }
    for ((i, j), x) in ba {
        out.add_entry(i, j, -x);
    }
    out
}

/// The `d_inf` generator `E_{m,n} - E_{1-n,1-m}`.
pub fn d_embed(m: i64, n: i64) -> AlgebraElement {
    let mut a = AlgebraElement::elementary(m, n);
    a.add_entry(1 - n, 1 - m, -Q::one());
    a
}

/// `E_ii - E_{i+1,i+1} + delta_{i,0} c`.
pub fn coroot(i: i64) -> AlgebraElement {
    let mut a = AlgebraElement::elementary(i, i);
    a.add_entry(i + 1, i + 1, -Q::one());
    if i == 0 {
        a.central = Q::one();
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangularPart {
    Upper,
    Diagonal,
    Lower,
}

pub fn triangular_part(i: i64, j: i64) -> TriangularPart {
    match j.cmp(&i) {
        std::cmp::Ordering::Greater => TriangularPart::Upper,
        std::cmp::Ordering::Equal => TriangularPart::Diagonal,
        std::cmp::Ordering::Less => TriangularPart::Lower,
    }
}

/// Named weights of `a_inf` and `d_inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightLabel {
    /// Fundamental `a_inf` weight of charge `n`, central value 1.
    AHat(i64),
    /// `d_inf` weights at central charge 1/2.
    DHat0,
    DHat1,
    /// Restriction of `AHat(n)` to `d_inf`.
    DdHat(i64),
    DdHatDet,
}

impl WeightLabel {
    pub fn is_d_type(self) -> bool {
        !matches!(self, WeightLabel::AHat(_))
    }

    pub fn central_value(self) -> Q {
        match self {
            WeightLabel::DHat0 | WeightLabel::DHat1 => q_frac(1, 2),
            _ => Q::one(),
        }
    }

    /// Value on `E_ii`. For d-type labels this is one consistent lift; only
    /// its values on `E_ii - E_{1-i,1-i}` are meaningful.
    fn diagonal_value(self, i: i64) -> i64 {
        match self {
            WeightLabel::AHat(n) | WeightLabel::DdHat(n) => {
                if n >= 0 && 0 < i && i <= n {
                    1
                } else if n < 0 && n < i && i <= 0 {
                    -1
                } else {
                    0
                }
            }
            WeightLabel::DHat0 => 0,
            WeightLabel::DHat1 => i64::from(i == 1),
            WeightLabel::DdHatDet => match i {
                1 => 1,
                0 => -1,
                _ => 0,
            },
        }
    }
}

/// Evaluates a weight on a diagonal-plus-central element.
///
/// d-type labels only accept elements of the `d_inf` Cartan, such as
/// `d_embed(i, i)` or `c`.
pub fn weight_value(w: WeightLabel, x: &AlgebraElement) -> Result<Q> {
    if !x.is_diagonal() {
        return Err(FockError::InvalidInput(format!(
            "weights are evaluated on diagonal or central elements, got {x}"
        )));
    }
    if w.is_d_type() && !x.is_d_type() {
        return Err(FockError::InvalidInput(format!(
            "{w:?} is a d_inf weight; {x} is not in d_inf"
        )));
    }
    let mut acc = x.central() * w.central_value();
    for (&(i, _), a) in x.entries() {
        acc += a * q(w.diagonal_value(i));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: i64, j: i64) -> AlgebraElement {
        AlgebraElement::elementary(i, j)
    }

    #[test]
    fn cocycle_examples() {
        assert_eq!(cocycle(&e(0, 1), &e(1, 0)), q(1));
        assert_eq!(cocycle(&e(1, 0), &e(0, 1)), q(-1));
        assert_eq!(cocycle(&e(2, 3), &e(5, 7)), q(0));
        assert_eq!(cocycle(&e(-3, 4), &e(4, -3)), q(1));
        assert_eq!(cocycle(&e(-3, -1), &e(-1, -3)), q(0));
    }

    /// Straight from the trace formula, with `J` truncated to a window that
    /// contains every index involved.
    fn cocycle_dense(a: &AlgebraElement, b: &AlgebraElement, lo: i64, hi: i64) -> Q {
        let n = (hi - lo + 1) as usize;
        let idx = |i: i64| (i - lo) as usize;
        let mut ma = vec![vec![Q::zero(); n]; n];
        let mut mb = vec![vec![Q::zero(); n]; n];
        for (&(i, j), x) in a.entries() {
            ma[idx(i)][idx(j)] = x.clone();
        }
        for (&(i, j), x) in b.entries() {
            mb[idx(i)][idx(j)] = x.clone();
        }
        let jd: Vec<Q> = (lo..=hi).map(|i| q(j_diag(i))).collect();
        let mut tr = Q::zero();
        for r in 0..n {
            for k in 0..n {
                let c = (&jd[r] - &jd[k]) * &ma[r][k];
                tr += c * &mb[k][r];
            }
        }
        tr
    }

    #[test]
    fn cocycle_matches_dense_trace() {
        for i in -3..=3 {
            for j in -3..=3 {
                for k in -3..=3 {
                    for l in -3..=3 {
                        assert_eq!(
                            cocycle(&e(i, j), &e(k, l)),
                            cocycle_dense(&e(i, j), &e(k, l), -3, 3)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn bracket_examples() {
        let b = bracket(&e(0, 1), &e(1, 0));
        let expected = e(0, 0).sub(&e(1, 1)).add(&AlgebraElement::central_element());
        assert_eq!(b, expected);
        assert!(bracket(&e(1, 2), &e(3, 4)).is_zero());
        let a = AlgebraElement::from_parts(
            [((0, 1), q(2)), ((-1, 3), q_frac(1, 3)), ((2, 2), q(-1))],
            q(5),
        );
        assert!(bracket(&a, &a).is_zero());
    }

    #[test]
    fn central_inputs_do_not_contribute() {
        let c = AlgebraElement::central_element();
        assert!(bracket(&c, &e(0, 1)).is_zero());
        let a = e(0, 1).add(&c);
        assert_eq!(bracket(&a, &e(1, 0)), bracket(&e(0, 1), &e(1, 0)));
    }

    #[test]
    fn d_embed_examples() {
        assert_eq!(d_embed(1, 1), e(1, 1).sub(&e(0, 0)));
        assert!(d_embed(1, 0).is_zero());
        for m in -4..=4 {
            for n in -4..=4 {
                assert!(d_embed(m, n).is_d_type(), "d_embed({m},{n})");
            }
        }
    }

    #[test]
    fn coroot_examples() {
        assert_eq!(
            coroot(0),
            e(0, 0).sub(&e(1, 1)).add(&AlgebraElement::central_element())
        );
        assert_eq!(coroot(2), e(2, 2).sub(&e(3, 3)));
        assert!(bracket(&coroot(0), &coroot(0)).is_zero());
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight_value(WeightLabel::AHat(2), &e(1, 1)).unwrap(), q(1));
        assert_eq!(weight_value(WeightLabel::AHat(-2), &e(0, 0)).unwrap(), q(-1));
        let c = AlgebraElement::central_element();
        for n in -5..=5 {
            assert_eq!(weight_value(WeightLabel::AHat(n), &c).unwrap(), q(1));
        }
        assert_eq!(
            weight_value(WeightLabel::DdHatDet, &d_embed(1, 1)).unwrap(),
            q(2)
        );
        for i in 2..=6 {
            assert_eq!(
                weight_value(WeightLabel::DdHatDet, &d_embed(i, i)).unwrap(),
                q(0)
            );
        }
        assert_eq!(weight_value(WeightLabel::DHat1, &d_embed(1, 1)).unwrap(), q(1));
        assert_eq!(weight_value(WeightLabel::DHat0, &c).unwrap(), q_frac(1, 2));
        assert_eq!(weight_value(WeightLabel::DdHatDet, &c).unwrap(), q(1));
    }

    #[test]
    fn weight_rejects_non_diagonal() {
        assert!(weight_value(WeightLabel::AHat(1), &e(0, 1)).is_err());
        assert!(weight_value(WeightLabel::DdHatDet, &e(1, 1)).is_err());
    }

    #[test]
    fn ahat_coroot_values() {
        // ^a h_i(Lambda_n) = delta_{i,n}
        for n in -4..=4 {
            for i in -6..=6 {
                let h = weight_value(WeightLabel::AHat(n), &coroot(i)).unwrap();
                assert_eq!(h, q(i64::from(i == n)), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn triangular_examples() {
        assert_eq!(triangular_part(0, 1), TriangularPart::Upper);
        assert_eq!(triangular_part(1, 1), TriangularPart::Diagonal);
        assert_eq!(triangular_part(3, -2), TriangularPart::Lower);
    }

    fn jacobi(x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement) -> AlgebraElement {
        bracket(&bracket(x, y), z)
            .add(&bracket(&bracket(y, z), x))
            .add(&bracket(&bracket(z, x), y))
    }

    #[test]
    fn jacobi_on_elementary_window() {
        let w = 2;
        let gens: Vec<_> = (-w..=w)
            .flat_map(|i| (-w..=w).map(move |j| e(i, j)))
            .collect();
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    assert!(jacobi(x, y, z).is_zero(), "{x} {y} {z}");
                }
            }
        }
    }

    #[test]
    fn omega_negates_cocycle() {
        for i in -4..=4 {
            for j in -4..=4 {
                for k in -4..=4 {
                    for l in -4..=4 {
                        let a = e(i, j);
                        let b = e(k, l);
                        assert_eq!(cocycle(&a.omega(), &b.omega()), -cocycle(&a, &b));
                    }
                }
            }
        }
    }

    #[test]
    fn d_type_closed_under_bracket() {
        for i in -3..=3 {
            for j in -3..=3 {
                for k in -3..=3 {
                    for l in -3..=3 {
                        let b = bracket(&d_embed(i, j), &d_embed(k, l));
                        assert!(b.is_d_type());
                    }
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn element() -> impl Strategy<Value = AlgebraElement> {
            prop::collection::vec(((-4i64..=4, -4i64..=4), -3i64..=3), 0..5).prop_map(|v| {
                AlgebraElement::from_parts(v.into_iter().map(|(ij, x)| (ij, q(x))), Q::zero())
            })
        }

        proptest! {
            #[test]
            fn jacobi_holds(x in element(), y in element(), z in element()) {
                prop_assert!(jacobi(&x, &y, &z).is_zero());
            }

            #[test]
            fn bracket_antisymmetric(x in element(), y in element()) {
                prop_assert_eq!(bracket(&x, &y), bracket(&y, &x).scaled(&q(-1)));
            }
        }
    }
}
