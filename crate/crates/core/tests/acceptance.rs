//! Acceptance criteria, one PASS/FAIL line each. All comparisons are exact
//! rational equality; only the wall-clock limits are tolerances.
//!
//! Run with `cargo test -p focklab --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use focklab::analysis::{compare_sectors, d_decomposition_evidence, example_supports};
use focklab::clifford::{anticommutator_check, inner_product};
use focklab::matrix::{bracket, cocycle, d_embed};
use focklab::neutral::{enumerate_all, enumerate_basis, highest_weight_vector};
use focklab::reduction::{
    example_vector, random_vector_cutoff, reduce_to_highest_weight, replay_trace, seeded_vectors,
    spanning_check, verify_trace, DEFAULT_SEED, EXAMPLE_STEPS,
};
use focklab::rep::{
    adjoint_quadop, apply_quadop, quad_bracket, rep_element, rep_elementary, verify_singular_vector,
    weight_of_vector,
};
use focklab::{AlgebraElement, AlgebraKind, Family, FockVector, Mode, Q, RepName, WeightLabel};

const CLIFFORD_LIMIT: Duration = Duration::from_secs(10);
const BRACKET_LIMIT: Duration = Duration::from_secs(60);
const REDUCTION_LIMIT: Duration = Duration::from_secs(120);

struct Outcome {
    pass: bool,
    detail: String,
}

fn record(results: &mut Vec<(usize, &'static str, bool)>, id: usize, name: &'static str, o: Outcome) {
    println!("{} [{id:>2}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    results.push((id, name, o.pass));
}

fn neutral_probes(energy2: i64) -> Vec<FockVector> {
    enumerate_all(energy2)
        .into_iter()
        .map(|m| FockVector::basis(Family::Neutral, m))
        .collect()
}

fn frac(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn criterion_clifford() -> Outcome {
    let started = Instant::now();
    let probes = neutral_probes(12);
    let mut checks = 0;
    let mut failures = 0;
    for a in (-19..=19).step_by(2) {
        for b in (-19..=19).step_by(2) {
            let r = anticommutator_check(Mode::phi(a), Mode::phi(b), &probes).unwrap();
            checks += r.checks;
            failures += r.failures.len();
        }
    }
    let t = started.elapsed();
    Outcome {
        pass: failures == 0 && t < CLIFFORD_LIMIT,
        detail: format!("{checks} checks, {failures} failures, {} probes, {t:?} (limit {CLIFFORD_LIMIT:?})", probes.len()),
    }
}

fn criterion_bracket() -> Outcome {
    let started = Instant::now();
    let w = 4;
    let labels: Vec<(i64, i64)> = (-w..=w).flat_map(|i| (-w..=w).map(move |j| (i, j))).collect();
    let mut parts = Vec::new();
    for (rep, kind, charge) in [
        (RepName::ROne, AlgebraKind::A, frac(1, 1)),
        (RepName::RHalf, AlgebraKind::D, frac(1, 2)),
        (RepName::RA, AlgebraKind::A, frac(1, 1)),
    ] {
        let mut pairs = 0;
        let mut failures = 0;
        for &(i, j) in &labels {
            let x = kind.generator(i, j);
            let qx = rep_element(rep, &x).unwrap();
            for &(k, l) in &labels {
                let y = kind.generator(k, l);
                let qy = rep_element(rep, &y).unwrap();
                pairs += 1;
                let lhs = quad_bracket(&qx, &qy).unwrap();
                let b = bracket(&x, &y);
                let rhs = rep_element(rep, &b).unwrap();
                // the central scalar must be exactly charge * C(X, Y)
                let scalar_ok = lhs.scalar() == &(&charge * cocycle(&x, &y));
                if lhs != rhs || !scalar_ok {
                    failures += 1;
                }
            }
        }
        parts.push(format!("{}: {pairs} pairs/{failures} failures", rep.name()));
        if failures != 0 {
            return Outcome {
                pass: false,
                detail: parts.join(", "),
            };
        }
    }
    let t = started.elapsed();
    Outcome {
        pass: t < BRACKET_LIMIT,
        detail: format!("{}, {t:?} (limit {BRACKET_LIMIT:?})", parts.join(", ")),
    }
}

fn criterion_singular() -> Outcome {
    let mut checks = 0;
    let mut failures = 0;
    for n in -4..=4 {
        let r = verify_singular_vector(RepName::ROne, AlgebraKind::A, &highest_weight_vector(n), 6).unwrap();
        checks += r.checks;
        failures += r.failures.len();
    }
    Outcome {
        pass: failures == 0 && checks == 9 * 13 * 6,
        detail: format!("{checks} generator applications, {failures} failures"),
    }
}

fn criterion_weights() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in -4..=4 {
        let w = weight_of_vector(RepName::ROne, AlgebraKind::A, &highest_weight_vector(n), 6).unwrap();
        for (&i, x) in &w.diagonal {
            checked += 1;
            let expected = focklab::matrix::weight_value(WeightLabel::AHat(n), &AlgebraElement::elementary(i, i)).unwrap();
            if *x != expected {
                bad.push(format!("v_{n} at {i}"));
            }
        }
        checked += 1;
        if w.central != frac(1, 1) {
            bad.push(format!("v_{n} central"));
        }
    }
    for (v, label) in [
        (FockVector::vacuum(Family::Neutral), WeightLabel::DHat0),
        (FockVector::from_neutral_labels(&[0]).unwrap(), WeightLabel::DHat1),
    ] {
        let w = weight_of_vector(RepName::RHalf, AlgebraKind::D, &v, 6).unwrap();
        for (&i, x) in &w.diagonal {
            checked += 1;
            if *x != focklab::matrix::weight_value(label, &d_embed(i, i)).unwrap() {
                bad.push(format!("{label:?} at {i}"));
            }
        }
        checked += 1;
        if w.central != frac(1, 2) {
            bad.push(format!("{label:?} central"));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("{checked} values compared, mismatches {bad:?}"),
    }
}

fn criterion_golden() -> Outcome {
    let mut cur = example_vector();
    let mut bad = Vec::new();
    for (k, (step, expected)) in EXAMPLE_STEPS.iter().zip(example_supports()).enumerate() {
        cur = replay_trace(&[*step], &cur).unwrap();
        let got: BTreeSet<Vec<i64>> = cur.support().map(|m| m.neutral_labels()).collect();
        let want: BTreeSet<Vec<i64>> = expected.into_iter().collect();
        if got != want {
            bad.push(format!("step {}: {got:?}", k + 1));
        }
    }
    let end = cur.support().map(|m| m.neutral_labels()).collect::<Vec<_>>();
    let ends_at_81 = end == vec![vec![8, 1]] && cur.len() == 1;
    Outcome {
        pass: bad.is_empty() && ends_at_81,
        detail: format!("5 steps replayed, final {cur}, mismatches {bad:?}"),
    }
}

fn criterion_reduction() -> Outcome {
    let started = Instant::now();
    let mut total = 0;
    let mut failures = 0;
    let mut cutoffs = Vec::new();
    for n in -3..=3 {
        cutoffs.push(format!("{n}:{}", random_vector_cutoff(n, 12)));
        for v in seeded_vectors(DEFAULT_SEED, n, 12, 100) {
            total += 1;
            let t = reduce_to_highest_weight(&v).unwrap();
            let ok = t.sector == n && t.final_scalar != frac(0, 1) && verify_trace(&t, &v).unwrap();
            if !ok {
                failures += 1;
            }
        }
    }
    let t = started.elapsed();
    Outcome {
        pass: failures == 0 && total == 700 && t < REDUCTION_LIMIT,
        detail: format!(
            "{total} vectors, {failures} failures, seed {DEFAULT_SEED}, energy2 cutoffs {}, {t:?} (limit {REDUCTION_LIMIT:?})",
            cutoffs.join(" ")
        ),
    }
}

fn criterion_spanning() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for n in -2..=2 {
        let r = spanning_check(n, 8, 2).unwrap();
        pass &= r.passed() && r.basis_size == enumerate_basis(n, 8).len();
        parts.push(format!("n={n}: {}/{}", r.rank, r.basis_size));
    }
    Outcome {
        pass,
        detail: parts.join(", "),
    }
}

fn criterion_sectors() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for n in -3..=3 {
        let r = compare_sectors(n, 12, 6).unwrap();
        pass &= r.passed();
        parts.push(format!("n={n}: {} states", r.parameters["basis_size"]));
    }
    // at cutoff 12 sectors +-3 are empty; cover them at a cutoff where they are not
    for n in [-3, 3] {
        let r = compare_sectors(n, 30, 8).unwrap();
        pass &= r.passed();
        parts.push(format!("n={n} at cutoff 30/window 8: {} states", r.parameters["basis_size"]));
    }
    Outcome {
        pass,
        detail: parts.join(", "),
    }
}

fn criterion_d_decomposition() -> Outcome {
    let r = d_decomposition_evidence(12, 6).unwrap();
    let weight = weight_of_vector(RepName::ROne, AlgebraKind::D, &focklab::neutral::tilde_v0(), 6).unwrap();
    let two = weight.diagonal.get(&1) == Some(&frac(2, 1)) && weight.central == frac(1, 1);
    Outcome {
        pass: r.passed() && two && r.parameters["a_inf_witness"].is_string(),
        detail: format!(
            "{} checks, {} failures, weight at d_embed(1,1) = {}, a_inf witness {}, singular dims d/a = {}/{}",
            r.checks,
            r.failures.len(),
            weight.diagonal.get(&1).map(ToString::to_string).unwrap_or_default(),
            r.parameters["a_inf_witness"],
            r.parameters["d_singular_dim"],
            r.parameters["a_singular_dim"],
        ),
    }
}

fn criterion_adjoint() -> Outcome {
    let probes = neutral_probes(10);
    let mut op_failures = 0;
    let mut pair_checks = 0;
    let mut pair_failures = 0;
    for m in -4..=4 {
        for n in -4..=4 {
            let op = rep_elementary(RepName::ROne, m, n);
            let adj = adjoint_quadop(&op);
            if adj != rep_elementary(RepName::ROne, n, m) {
                op_failures += 1;
            }
            for v in &probes {
                let qv = apply_quadop(&op, v).unwrap();
                for w in &probes {
                    pair_checks += 1;
                    let lhs = inner_product(&qv, w).unwrap();
                    let rhs = inner_product(v, &apply_quadop(&adj, w).unwrap()).unwrap();
                    if lhs != rhs {
                        pair_failures += 1;
                    }
                }
            }
        }
    }
    Outcome {
        pass: op_failures == 0 && pair_failures == 0,
        detail: format!("81 operators ({op_failures} failures), {pair_checks} inner products ({pair_failures} failures)"),
    }
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    record(&mut results, 1, "clifford anticommutators", criterion_clifford());
    record(&mut results, 2, "representation brackets", criterion_bracket());
    record(&mut results, 3, "singular vectors", criterion_singular());
    record(&mut results, 4, "highest weights", criterion_weights());
    record(&mut results, 5, "worked reduction example", criterion_golden());
    record(&mut results, 6, "reduction soundness", criterion_reduction());
    record(&mut results, 7, "spanning", criterion_spanning());
    record(&mut results, 8, "sector comparison", criterion_sectors());
    record(&mut results, 9, "d_inf decomposition", criterion_d_decomposition());
    record(&mut results, 10, "adjoint identity", criterion_adjoint());
    let failed: Vec<_> = results.iter().filter(|r| !r.2).map(|r| r.0).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
