//! JSON interchange for chains and bound reports.
//!
//! A chain is `{"dim": n, "terms": [{"coeff": c, "simplex": [..]}, ..]}` with
//! terms in canonical order. Big integers and rationals are written as
//! decimal strings.

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::bounds::{BoundReport, TableRow};
use crate::error::{Error, Result};
use crate::group_alg::{EntryCodec, EntryEncode};
use crate::moore::{BarSimplex, Chain};

pub const SCHEMA: &str = "barhom/1";

pub fn simplex_to_json<A: EntryEncode>(alg: &A, s: &BarSimplex<A::Elem>) -> Value {
    Value::Array(s.entries().iter().map(|x| alg.encode(x)).collect())
}

pub fn chain_to_json<A: EntryEncode>(alg: &A, c: &Chain<BarSimplex<A::Elem>>) -> Value {
    let terms: Vec<Value> = c
        .iter()
        .map(|(s, k)| json!({ "coeff": k, "simplex": simplex_to_json(alg, s) }))
        .collect();
    json!({ "dim": c.dim(), "terms": terms })
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field '{key}'")))
}

/// Decodes a chain, summing repeated simplices and rejecting terms whose
/// dimension differs from `dim`.
pub fn chain_from_json<A: EntryCodec>(alg: &A, v: &Value) -> Result<Chain<BarSimplex<A::Elem>>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("chain must be an object".into()))?;
    let dim = field(obj, "dim")?
        .as_u64()
        .ok_or_else(|| Error::Parse("'dim' must be a non-negative integer".into()))?
        as usize;
    let terms = field(obj, "terms")?
        .as_array()
        .ok_or_else(|| Error::Parse("'terms' must be an array".into()))?;
    let mut out = Chain::zero(dim);
    for t in terms {
        let t = t
            .as_object()
            .ok_or_else(|| Error::Parse("term must be an object".into()))?;
        let coeff = field(t, "coeff")?
            .as_i64()
            .ok_or_else(|| Error::Parse("'coeff' must be an integer".into()))?;
        let entries = field(t, "simplex")?
            .as_array()
            .ok_or_else(|| Error::Parse("'simplex' must be an array".into()))?;
        if entries.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: entries.len(),
            });
        }
        let s = BarSimplex(
            entries
                .iter()
                .map(|e| alg.decode(e))
                .collect::<Result<_>>()?,
        );
        let next = out
            .coeff(&s)
            .checked_add(coeff)
            .ok_or_else(|| Error::Parse("coefficient overflow".into()))?;
        out.add_term(s.clone(), next - out.coeff(&s));
    }
    Ok(out)
}

pub fn rational_to_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn report_to_json(r: &BoundReport) -> Value {
    let inputs: Map<String, Value> = r
        .inputs
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(rational_to_string(v))))
        .collect();
    json!({
        "name": r.name,
        "formula": r.formula,
        "inputs": inputs,
        "value": rational_to_string(&r.value),
        "provenance": r.provenance,
        "reference": r.reference,
    })
}

pub fn row_to_json(r: &TableRow) -> Value {
    json!({
        "m": r.m,
        "gamma": r.gamma.to_string(),
        "q": r.q.to_string(),
        "c": r.c.to_string(),
        "d": r.d.to_string(),
        "delta_bdh": r.delta_bdh.as_ref().map(|v| v.to_string()),
    })
}

/// Wraps a payload with the schema tag and a command name.
pub fn envelope(command: &str, payload: Value) -> Value {
    let mut obj = Map::new();
    obj.insert("schema".into(), Value::String(SCHEMA.into()));
    obj.insert("command".into(), Value::String(command.into()));
    if let Value::Object(rest) = payload {
        obj.extend(rest);
    } else {
        obj.insert("result".into(), payload);
    }
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{rho_bound, BoundKind, BoundParams};
    use crate::group_alg::{ConcreteGroup, FreeGroup, GroupElem};

    #[test]
    fn round_trip_cyclic() {
        let z = ConcreteGroup::cyclic(3);
        let c = Chain::from_terms(
            2,
            [
                (
                    2,
                    BarSimplex(vec![GroupElem::Cyclic(1), GroupElem::Cyclic(2)]),
                ),
                (
                    -1,
                    BarSimplex(vec![GroupElem::Cyclic(0), GroupElem::Cyclic(1)]),
                ),
            ],
        );
        let v = chain_to_json(&z, &c);
        assert_eq!(chain_from_json(&z, &v).unwrap(), c);
        assert_eq!(v["terms"][0]["simplex"], json!([0, 1]));
    }

    #[test]
    fn duplicates_are_summed() {
        let f = FreeGroup::new(2);
        let v = json!({"dim": 1, "terms": [
            {"coeff": 2, "simplex": [[1]]},
            {"coeff": -2, "simplex": [[1]]},
            {"coeff": 1, "simplex": [[2, -1]]}
        ]});
        let c = chain_from_json(&f, &v).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        let z = ConcreteGroup::cyclic(3);
        assert!(chain_from_json(&z, &json!([])).is_err());
        assert!(chain_from_json(&z, &json!({"dim": 1})).is_err());
        assert!(matches!(
            chain_from_json(
                &z,
                &json!({"dim": 1, "terms": [{"coeff": 1, "simplex": [1, 2]}]})
            ),
            Err(Error::DimensionMismatch {
                expected: 1,
                found: 2
            })
        ));
        assert!(chain_from_json(
            &z,
            &json!({"dim": 1, "terms": [{"coeff": 1, "simplex": [7]}]})
        )
        .is_err());
        let overflow = json!({"dim": 0, "terms": [
            {"coeff": i64::MAX, "simplex": []}, {"coeff": 1, "simplex": []}
        ]});
        assert!(chain_from_json(&z, &overflow).is_err());
    }

    #[test]
    fn report_fields() {
        let r = rho_bound(BoundKind::General, &BoundParams::default()).unwrap();
        let v = report_to_json(&r);
        assert_eq!(v["value"], "189540");
        assert_eq!(v["provenance"], "computed");
        assert_eq!(envelope("bounds", json!({"x": 1}))["schema"], SCHEMA);
    }
}
