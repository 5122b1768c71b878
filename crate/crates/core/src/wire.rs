//! JSON encodings of vectors, algebra elements, traces and reports.
//!
//! Rationals are written as `"p/q"` strings; `"p"` is accepted on input.
//! A vector is `{"species": "neutral"|"charged", "terms": [{"coeff", "modes"}]}`
//! where a neutral mode is its doubled index and a charged mode is
//! `{"s": "+"|"-", "n": index}`. `modes` lists the creation operators in
//! the order they are written to the left of the vacuum.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::clifford::{canonicalize_monomial, Family, FockVector, Mode, Species};
use crate::matrix::AlgebraElement;
use crate::reduction::ReductionTrace;
use crate::rep::Weight;
use crate::report::{Failure, VerificationReport};
use crate::{FockError, Result, Q};

fn bad(msg: impl Into<String>) -> FockError {
    FockError::Json(msg.into())
}

pub fn rational_to_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| bad(format!("not a rational: {s:?}")))
    };
    match s.split_once('/') {
        None => Ok(Q::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(bad(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(parse_int(n)?, d))
        }
    }
}

fn rational_value(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Q::from_integer(i.into()))
            .ok_or_else(|| bad(format!("non-integer number {n}; write rationals as \"p/q\""))),
        other => Err(bad(format!("expected a rational, got {other}"))),
    }
}

fn int_value(v: &Value, what: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| bad(format!("{what}: expected an integer, got {v}")))
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what}: expected an array")))
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Neutral => "neutral",
        Family::Charged => "charged",
    }
}

fn mode_to_json(m: &Mode) -> Value {
    match m.species() {
        Species::Neutral => json!(m.index()),
        Species::Plus => json!({"s": "+", "n": m.index()}),
        Species::Minus => json!({"s": "-", "n": m.index()}),
    }
}

fn mode_from_json(v: &Value, family: Family) -> Result<Mode> {
    match family {
        Family::Neutral => Mode::try_neutral(int_value(v, "neutral mode")?),
        Family::Charged => {
            let n = int_value(field(v, "n")?, "charged mode index")?;
            match field(v, "s")?.as_str() {
                Some("+") => Ok(Mode::psi_plus(n)),
                Some("-") => Ok(Mode::psi_minus(n)),
                _ => Err(bad("charged mode species must be \"+\" or \"-\"")),
            }
        }
    }
}

pub fn vector_to_json(v: &FockVector) -> Value {
    let terms: Vec<Value> = v
        .iter()
        .map(|(m, c)| {
            json!({
                "coeff": rational_to_string(c),
                "modes": m.modes().iter().map(mode_to_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({"species": family_name(v.family()), "terms": terms})
}

pub fn vector_from_json(v: &Value) -> Result<FockVector> {
    let family = match field(v, "species")?.as_str() {
        Some("neutral") => Family::Neutral,
        Some("charged") => Family::Charged,
        _ => return Err(bad("species must be \"neutral\" or \"charged\"")),
    };
    let mut out = FockVector::zero(family);
    for term in array(field(v, "terms")?, "terms")? {
        let c = rational_value(field(term, "coeff")?)?;
        let modes = array(field(term, "modes")?, "modes")?
            .iter()
            .map(|m| mode_from_json(m, family))
            .collect::<Result<Vec<_>>>()?;
        match canonicalize_monomial(&modes)? {
            None => return Err(FockError::InvalidInput("repeated mode in a term".into())),
            Some((m, sign)) => out.add_term(m, c * Q::from_integer(sign.into())),
        }
    }
    Ok(out)
}

pub fn algebra_to_json(a: &AlgebraElement) -> Value {
    let entries: Vec<Value> = a
        .entries()
        .iter()
        .map(|(&(i, j), x)| json!([i, j, rational_to_string(x)]))
        .collect();
    json!({"entries": entries, "central": rational_to_string(a.central())})
}

pub fn algebra_from_json(v: &Value) -> Result<AlgebraElement> {
    let mut entries = Vec::new();
    for e in array(field(v, "entries")?, "entries")? {
        let e = array(e, "entry")?;
        if e.len() != 3 {
            return Err(bad("entry must be [i, j, coefficient]"));
        }
        entries.push((
            (int_value(&e[0], "row")?, int_value(&e[1], "column")?),
            rational_value(&e[2])?,
        ));
    }
    let central = match v.get("central") {
        Some(c) => rational_value(c)?,
        None => Q::zero(),
    };
    Ok(AlgebraElement::from_parts(entries, central))
}

pub fn trace_to_json(t: &ReductionTrace) -> Value {
    json!({
        "sector": t.sector,
        "steps": t.steps.iter().map(|&(p, q)| json!([p, q])).collect::<Vec<_>>(),
        "final_scalar": rational_to_string(&t.final_scalar),
    })
}

pub fn trace_from_json(v: &Value) -> Result<ReductionTrace> {
    let sector = int_value(field(v, "sector")?, "sector")?;
    let steps = array(field(v, "steps")?, "steps")?
        .iter()
        .map(|s| {
            let s = array(s, "step")?;
            if s.len() != 2 {
                return Err(bad("step must be [p, q]"));
            }
            Ok((int_value(&s[0], "p")?, int_value(&s[1], "q")?))
        })
        .collect::<Result<Vec<_>>>()?;
    let final_scalar = rational_value(field(v, "final_scalar")?)?;
    Ok(ReductionTrace {
        sector,
        steps,
        final_scalar,
    })
}

pub fn weight_to_json(w: &Weight) -> Value {
    let diagonal: Map<String, Value> = w
        .diagonal
        .iter()
        .map(|(i, x)| (i.to_string(), json!(rational_to_string(x))))
        .collect();
    json!({"diagonal": diagonal, "central": rational_to_string(&w.central)})
}

pub fn weight_from_json(v: &Value) -> Result<Weight> {
    let obj = field(v, "diagonal")?
        .as_object()
        .ok_or_else(|| bad("diagonal must be an object"))?;
    let mut diagonal = BTreeMap::new();
    for (k, x) in obj {
        let i = k.parse::<i64>().map_err(|_| bad(format!("bad index {k:?}")))?;
        diagonal.insert(i, rational_value(x)?);
    }
    Ok(Weight {
        diagonal,
        central: rational_value(field(v, "central")?)?,
    })
}

pub fn failure_to_json(f: &Failure) -> Value {
    json!({
        "label": f.label,
        "input": f.input.as_ref().map(vector_to_json),
        "discrepancy": f.discrepancy,
    })
}

/// Report as JSON, listing at most `max_failures` failures.
pub fn report_to_json(r: &VerificationReport, max_failures: usize) -> Value {
    json!({
        "pass": r.passed(),
        "checks": r.checks,
        "failures": r.failures.len(),
        "failure_details": r.failures.iter().take(max_failures).map(failure_to_json).collect::<Vec<_>>(),
    })
}
