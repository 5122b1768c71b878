//! Quadratic representations of `a_inf` and `d_inf` on the Fock spaces.
//!
//! * `RHalf`: `d_inf` on the neutral space, `E_{m,n} - E_{1-n,1-m} -> :phi_{-m+1/2} phi_{n-1/2}:`, `c -> 1/2`.
//! * `ROne`: `a_inf` on the neutral space, `E_{m,n} -> :phi_{-2m+1/2} phi_{2n-1/2}:`, `c -> 1`.
//! * `RA`: `a_inf` on the charged space, `E_{m,n} -> :psi^+_{-m} psi^-_{n-1}:`, `c -> 1`.
//!
//! Images are [`QuadOp`]s: finite sums of normal-ordered quadratics plus a
//! scalar. Commutators of quadratics stay quadratic-plus-scalar, which is
//! what [`quad_bracket`] computes symbolically.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::clifford::{
    adjoint_mode, apply_normal_ordered_pair, contraction, pair, Family, FockVector, Mode,
};
use crate::matrix::{bracket, d_embed, weight_value, AlgebraElement, WeightLabel};
use crate::report::{Failure, VerificationReport};
use crate::{q_frac, FockError, Result, Q};

/// `sum coeff * :phi_a phi_b:` over keys with `a < b`, plus `scalar * Id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadOp {
    family: Family,
    quadratic: BTreeMap<(Mode, Mode), Q>,
    scalar: Q,
}

impl QuadOp {
    pub fn zero(family: Family) -> QuadOp {
        QuadOp {
            family,
            quadratic: BTreeMap::new(),
            scalar: Q::zero(),
        }
    }

    pub fn scalar_op(family: Family, s: Q) -> QuadOp {
        QuadOp {
            scalar: s,
            ..QuadOp::zero(family)
        }
    }

    /// `:phi_a phi_b:`.
    pub fn normal_ordered(a: Mode, b: Mode) -> QuadOp {
        let mut op = QuadOp::zero(a.family());
        op.add_normal_ordered(a, b, Q::one());
        op
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn quadratic(&self) -> &BTreeMap<(Mode, Mode), Q> {
        &self.quadratic
    }

    pub fn scalar(&self) -> &Q {
        &self.scalar
    }

    pub fn is_zero(&self) -> bool {
        self.quadratic.is_empty() && self.scalar.is_zero()
    }

    /// Adds `c * :phi_a phi_b:`, using `:phi_a phi_b: = -:phi_b phi_a:`.
    pub fn add_normal_ordered(&mut self, a: Mode, b: Mode, c: Q) {
        debug_assert_eq!(a.family(), self.family);
        debug_assert_eq!(b.family(), self.family);
        // No mode pairs with itself, so :phi_a phi_a: = phi_a^2 = 0.
        if a == b || c.is_zero() {
            return;
        }
        let (key, c) = if a < b { ((a, b), c) } else { ((b, a), -c) };
        let slot = self.quadratic.entry(key).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.quadratic.remove(&key);
        }
    }

    /// Adds `c * phi_a phi_b` (plain product), re-normal-ordered.
    pub fn add_product(&mut self, a: Mode, b: Mode, c: Q) {
        self.scalar += &c * contraction(a, b);
        self.add_normal_ordered(a, b, c);
    }

    pub fn add_scaled(&mut self, other: &QuadOp, s: &Q) -> Result<()> {
        self.check_family(other.family)?;
        for (&(a, b), x) in &other.quadratic {
            self.add_normal_ordered(a, b, x * s);
        }
        self.scalar += &other.scalar * s;
        Ok(())
    }

    pub fn minus(&self, other: &QuadOp) -> Result<QuadOp> {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one())?;
        Ok(out)
    }

    pub fn scaled(&self, s: &Q) -> QuadOp {
        let mut out = QuadOp::zero(self.family);
        out.add_scaled(self, s).expect("same family");
        out
    }

    fn check_family(&self, found: Family) -> Result<()> {
        if self.family == found {
            Ok(())
        } else {
            Err(FockError::SpeciesMismatch {
                expected: self.family,
                found,
            })
        }
    }
}

impl fmt::Display for QuadOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&(a, b), x) in &self.quadratic {
            write!(f, "({x}):{a}{b}: + ")?;
        }
        write!(f, "({})Id", self.scalar)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepName {
    RHalf,
    ROne,
    RA,
}

impl RepName {
    pub fn central_charge(self) -> Q {
        match self {
            RepName::RHalf => q_frac(1, 2),
            RepName::ROne | RepName::RA => Q::one(),
        }
    }

    pub fn family(self) -> Family {
        match self {
            RepName::RHalf | RepName::ROne => Family::Neutral,
            RepName::RA => Family::Charged,
        }
    }

    /// Algebra checked by default: `d_inf` for `RHalf`, `a_inf` otherwise.
    pub fn default_algebra(self) -> AlgebraKind {
        match self {
            RepName::RHalf => AlgebraKind::D,
            RepName::ROne | RepName::RA => AlgebraKind::A,
        }
    }

    pub fn accepts(self, kind: AlgebraKind) -> bool {
        !(self == RepName::RHalf && kind == AlgebraKind::A)
    }

    pub fn name(self) -> &'static str {
        match self {
            RepName::RHalf => "rhalf",
            RepName::ROne => "r1",
            RepName::RA => "ra",
        }
    }
}

impl std::str::FromStr for RepName {
    type Err = FockError;

    fn from_str(s: &str) -> Result<RepName> {
        match s {
            "rhalf" | "r_half" | "rHalf" => Ok(RepName::RHalf),
            "r1" | "rOne" | "rone" => Ok(RepName::ROne),
            "ra" | "rA" => Ok(RepName::RA),
            other => Err(FockError::InvalidInput(format!("unknown representation {other:?}"))),
        }
    }
}

/// Which generators index a sweep: `E_ij` for `a_inf`, `E_ij - E_{1-j,1-i}` for `d_inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    A,
    D,
}

impl AlgebraKind {
    pub fn generator(self, i: i64, j: i64) -> AlgebraElement {
        match self {
            AlgebraKind::A => AlgebraElement::elementary(i, j),
            AlgebraKind::D => d_embed(i, j),
        }
    }
}

pub fn rep_elementary(rep: RepName, m: i64, n: i64) -> QuadOp {
    match rep {
        RepName::ROne => QuadOp::normal_ordered(Mode::phi(-4 * m + 1), Mode::phi(4 * n - 1)),
        RepName::RHalf => QuadOp::normal_ordered(Mode::phi(-2 * m + 1), Mode::phi(2 * n - 1)),
        RepName::RA => QuadOp::normal_ordered(Mode::psi_plus(-m), Mode::psi_minus(n - 1)),
    }
}

/// Linear extension of [`rep_elementary`], with `c` acting by the central charge.
pub fn rep_element(rep: RepName, a: &AlgebraElement) -> Result<QuadOp> {
    let mut op = QuadOp::scalar_op(rep.family(), a.central() * rep.central_charge());
    let weight = match rep {
        RepName::RHalf => {
            if !a.is_d_type() {
                return Err(FockError::InvalidInput(format!(
                    "r_half acts on d_inf only; {a} violates a_ij = -a_(1-j,1-i)"
                )));
            }
            // Each generator E_mn - E_{1-n,1-m} contributes two entries.
            q_frac(1, 2)
        }
        RepName::ROne | RepName::RA => Q::one(),
    };
    for (&(i, j), x) in a.entries() {
        op.add_scaled(&rep_elementary(rep, i, j), &(x * &weight))?;
    }
    Ok(op)
}

pub fn apply_quadop(op: &QuadOp, v: &FockVector) -> Result<FockVector> {
    op.check_family(v.family())?;
    let mut out = v.scaled(&op.scalar);
    for (&(a, b), x) in &op.quadratic {
        out.add_scaled(&apply_normal_ordered_pair(a, b, v)?, x)?;
    }
    Ok(out)
}

/// Symbolic commutator `[Q1, Q2]`.
///
/// Uses `[ab, cd] = {b,c} ad - {b,d} ac + {a,c} db - {a,d} cb` for odd
/// generators, then re-normal-orders each product; the normal-ordering
/// constants are central and drop out of the commutator.
pub fn quad_bracket(q1: &QuadOp, q2: &QuadOp) -> Result<QuadOp> {
    q1.check_family(q2.family)?;
    let mut out = QuadOp::zero(q1.family);
    for (&(a, b), x) in &q1.quadratic {
        for (&(c, d), y) in &q2.quadratic {
            let xy = x * y;
            let bc = pair(b, c);
            if !bc.is_zero() {
                out.add_product(a, d, &xy * bc);
            }
            let bd = pair(b, d);
            if !bd.is_zero() {
                out.add_product(a, c, -(&xy * bd));
            }
            let ac = pair(a, c);
            if !ac.is_zero() {
                out.add_product(d, b, &xy * ac);
            }
            let ad = pair(a, d);
            if !ad.is_zero() {
                out.add_product(c, b, -(&xy * ad));
            }
        }
    }
    Ok(out)
}

/// The `omega`-adjoint: reverse each quadratic and conjugate its modes.
pub fn adjoint_quadop(op: &QuadOp) -> QuadOp {
    let mut out = QuadOp::scalar_op(op.family, op.scalar.clone());
    for (&(a, b), x) in &op.quadratic {
        // omega(:ab:) = omega(ab) - contraction(a,b) = b* a* - contraction(a,b)
        out.add_product(adjoint_mode(b), adjoint_mode(a), x.clone());
        out.scalar -= x * contraction(a, b);
    }
    out
}

fn label_window(window: i64) -> Vec<(i64, i64)> {
    (-window..=window)
        .flat_map(|i| (-window..=window).map(move |j| (i, j)))
        .collect()
}

/// `quad_bracket(rep X, rep Y) == rep [X, Y]` over all generator pairs with
/// labels in `[-window, window]`, using the representation's default algebra.
pub fn verify_bracket_identity(rep: RepName, window: i64) -> Result<VerificationReport> {
    verify_bracket_identity_on(rep, rep.default_algebra(), window)
}

pub fn verify_bracket_identity_on(
    rep: RepName,
    kind: AlgebraKind,
    window: i64,
) -> Result<VerificationReport> {
    if window < 1 {
        return Err(FockError::InvalidInput("window must be at least 1".into()));
    }
    if !rep.accepts(kind) {
        return Err(FockError::InvalidInput(format!(
            "{} does not represent {kind:?}",
            rep.name()
        )));
    }
    let labels = label_window(window);
    let gens: Vec<(AlgebraElement, QuadOp)> = labels
        .iter()
        .map(|&(i, j)| {
            let x = kind.generator(i, j);
            let img = rep_element(rep, &x)?;
            Ok((x, img))
        })
        .collect::<Result<_>>()?;
    let parts: Vec<Result<VerificationReport>> = (0..gens.len())
        .into_par_iter()
        .map(|s| {
            let mut report = VerificationReport::default();
            let (x, qx) = &gens[s];
            for (t, (y, qy)) in gens.iter().enumerate() {
                let lhs = quad_bracket(qx, qy)?;
                let rhs = rep_element(rep, &bracket(x, y))?;
                report.checks += 1;
                let diff = lhs.minus(&rhs)?;
                if !diff.is_zero() {
                    report.failures.push(Failure {
                        label: format!("[{:?}, {:?}]", labels[s], labels[t]),
                        input: None,
                        discrepancy: diff.to_string(),
                    });
                }
            }
            Ok(report)
        })
        .collect();
    let mut report = VerificationReport::default();
    for part in parts {
        report.merge(part?);
    }
    Ok(report)
}

/// Checks that every strictly upper triangular generator `(i, i+k)`,
/// `|i| <= window`, `1 <= k <= window`, annihilates `v`.
pub fn verify_singular_vector(
    rep: RepName,
    kind: AlgebraKind,
    v: &FockVector,
    window: i64,
) -> Result<VerificationReport> {
    if v.is_zero() {
        return Err(FockError::InvalidInput(
            "singular vector check needs a nonzero vector".into(),
        ));
    }
    if !rep.accepts(kind) {
        return Err(FockError::InvalidInput(format!(
            "{} does not represent {kind:?}",
            rep.name()
        )));
    }
    let mut report = VerificationReport::default();
    for i in -window..=window {
        for k in 1..=window {
            let op = rep_element(rep, &kind.generator(i, i + k))?;
            let img = apply_quadop(&op, v)?;
            report.checks += 1;
            if !img.is_zero() {
                report.failures.push(Failure {
                    label: format!("{}({kind:?}[{i},{}])", rep.name(), i + k),
                    input: Some(v.clone()),
                    discrepancy: img.to_string(),
                });
            }
        }
    }
    Ok(report)
}

/// Diagonal eigenvalues of a weight vector, plus the central value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    pub diagonal: BTreeMap<i64, Q>,
    pub central: Q,
}

impl Weight {
    /// Whether this weight agrees with `label` on every index it records.
    pub fn matches(&self, label: WeightLabel, kind: AlgebraKind) -> Result<bool> {
        for (&i, x) in &self.diagonal {
            if &weight_value(label, &kind.generator(i, i))? != x {
                return Ok(false);
            }
        }
        Ok(self.central == label.central_value())
    }
}

/// Scalar `s` with `op v = s v`, if `v` is an eigenvector.
pub fn eigenvalue(op: &QuadOp, v: &FockVector) -> Result<Option<Q>> {
    let img = apply_quadop(op, v)?;
    let Some((m, c)) = v.iter().next() else {
        return Ok(None);
    };
    let s = img.coeff(m) / c;
    Ok((img == v.scaled(&s)).then_some(s))
}

pub fn weight_of_vector(
    rep: RepName,
    kind: AlgebraKind,
    v: &FockVector,
    window: i64,
) -> Result<Weight> {
    if !rep.accepts(kind) {
        return Err(FockError::InvalidInput(format!(
            "{} does not represent {kind:?}",
            rep.name()
        )));
    }
    let mut diagonal = BTreeMap::new();
    for i in -window..=window {
        let op = rep_element(rep, &kind.generator(i, i))?;
        match eigenvalue(&op, v)? {
            Some(s) => {
                diagonal.insert(i, s);
            }
            None => return Err(FockError::NotAWeightVector { index: i }),
        }
    }
    let c = rep_element(rep, &AlgebraElement::central_element())?;
    let central = eigenvalue(&c, v)?.ok_or(FockError::NotAWeightVector { index: 0 })?;
    Ok(Weight { diagonal, central })
}
