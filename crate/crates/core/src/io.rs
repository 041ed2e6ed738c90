//! File formats: the subspace JSON schema, the orbit-atlas JSON and CSV
//! emitters, and the isometry-witness JSON. All output is deterministic:
//! fixed key order, fixed column order, scalars always printed as `a/b`.

use crate::error::{Error, Result};
use crate::invariants::OrbitParams;
use crate::matrix::ExactMatrix;
use crate::orbits::{IsometryElement, OrbitInfo};
use crate::scalar::{ExactScalar, FieldTag};
use crate::space::{CaseTag, FormSpace, GroupParams, Subspace};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use std::str::FromStr;

fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|e| Error::Parse(format!("bad numerator `{num}`: {e}")))?;
    let d = BigInt::from_str(den).map_err(|e| Error::Parse(format!("bad denominator `{den}`: {e}")))?;
    if d == BigInt::from(0) {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(BigRational::new(n, d))
}

pub fn scalar_to_json(s: &ExactScalar) -> Value {
    if s.field().is_gaussian() {
        json!({ "re": rational_string(s.re()), "im": rational_string(s.im()) })
    } else {
        Value::String(rational_string(s.re()))
    }
}

pub fn scalar_from_json(v: &Value, field: FieldTag) -> Result<ExactScalar> {
    match v {
        Value::String(s) => Ok(ExactScalar::rational(parse_rational(s)?, field)),
        Value::Object(map) => {
            if !field.is_gaussian() {
                return Err(Error::Parse("complex scalar in a rational-field file".into()));
            }
            let re = map
                .get("re")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("scalar object needs a string `re`".into()))?;
            let im = map
                .get("im")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("scalar object needs a string `im`".into()))?;
            Ok(ExactScalar::new(parse_rational(re)?, parse_rational(im)?, field))
        }
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Parse("non-integer numeric scalar".into()))?;
            Ok(ExactScalar::from_int(i, field))
        }
        _ => Err(Error::Parse("scalar must be a string, object or integer".into())),
    }
}

pub fn matrix_to_json(m: &ExactMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| Value::Array((0..m.cols()).map(|c| scalar_to_json(m.at(r, c))).collect()))
        .collect();
    Value::Array(rows)
}

pub fn matrix_from_json(v: &Value, cols: usize, field: FieldTag) -> Result<ExactMatrix> {
    let rows = v.as_array().ok_or_else(|| Error::Parse("matrix must be an array".into()))?;
    let mut data = Vec::new();
    for row in rows {
        let entries = row.as_array().ok_or_else(|| Error::Parse("row must be an array".into()))?;
        if entries.len() != cols {
            return Err(Error::Parse(format!(
                "row has {} entries, expected {cols}",
                entries.len()
            )));
        }
        data.push(entries.iter().map(|e| scalar_from_json(e, field)).collect::<Result<Vec<_>>>()?);
    }
    Ok(ExactMatrix::from_rows(field, cols, data))
}

fn params_to_json(params: &GroupParams) -> Value {
    match params {
        GroupParams::Signature { p, q, p1, q1 } => json!({ "p": p, "q": q, "p1": p1, "q1": q1 }),
        GroupParams::Split { n, m } => json!({ "n": n, "m": m }),
    }
}

pub fn params_from_json(v: &Value, case: CaseTag) -> Result<GroupParams> {
    let map = v.as_object().ok_or_else(|| Error::Parse("params must be an object".into()))?;
    let get = |k: &str| -> Result<usize> {
        map.get(k)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| Error::Parse(format!("params missing field `{k}`")))
    };
    let params = if case.is_signed() {
        GroupParams::Signature { p: get("p")?, q: get("q")?, p1: get("p1")?, q1: get("q1")? }
    } else {
        GroupParams::Split { n: get("n")?, m: get("m")? }
    };
    params.validate(case)?;
    Ok(params)
}

/// Serialize a subspace: `{ "case": …, "params": …, "basis": [[scalar,…],…] }`.
pub fn subspace_to_json(s: &Subspace) -> Value {
    let mut map = Map::new();
    map.insert("case".into(), Value::String(s.space().case.name().into()));
    map.insert("params".into(), params_to_json(&s.space().params));
    map.insert("basis".into(), matrix_to_json(s.basis()));
    Value::Object(map)
}

pub fn subspace_from_json(v: &Value) -> Result<Subspace> {
    let map = v.as_object().ok_or_else(|| Error::Parse("subspace must be an object".into()))?;
    let case_str = map
        .get("case")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing `case`".into()))?;
    let case = CaseTag::parse(case_str)?;
    let params =
        params_from_json(map.get("params").ok_or_else(|| Error::Parse("missing `params`".into()))?, case)?;
    let space = FormSpace::standard(case, params)?;
    let basis = matrix_from_json(
        map.get("basis").ok_or_else(|| Error::Parse("missing `basis`".into()))?,
        space.dim_v(),
        space.field(),
    )?;
    Subspace::new(space, basis)
}

/// One classify/enumerate record with the fixed field order.
pub fn orbit_info_to_json(info: &OrbitInfo) -> Value {
    let mut map = Map::new();
    map.insert("case".into(), Value::String(info.case.name().into()));
    map.insert("params".into(), params_to_json(&info.params));
    map.insert(
        "tuple".into(),
        Value::Array(info.tuple.entries().into_iter().map(|e| json!(e)).collect()),
    );
    map.insert("dim_h".into(), json!(info.dim_h));
    map.insert("dim_stab".into(), json!(info.dim_stab));
    map.insert("dim_orbit".into(), json!(info.dim_orbit));
    map.insert("is_open".into(), json!(info.is_open));
    map.insert("component_count".into(), json!(info.component_count));
    Value::Object(map)
}

pub fn atlas_to_json(infos: &[OrbitInfo]) -> Value {
    Value::Array(infos.iter().map(orbit_info_to_json).collect())
}

/// CSV atlas with the fixed column order. Inner separators are semicolons so
/// no quoting is ever needed.
pub fn atlas_to_csv(infos: &[OrbitInfo]) -> String {
    let mut out = String::from("case,params,tuple,dim_h,dim_stab,dim_orbit,is_open,component_count\n");
    for info in infos {
        let tuple = info
            .tuple
            .entries()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(";");
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            info.case.name(),
            info.params,
            tuple,
            info.dim_h,
            info.dim_stab,
            info.dim_orbit,
            info.is_open,
            info.component_count
        ));
    }
    out
}

/// Witness output: the two blocks plus their shared space description.
pub fn witness_to_json(space: &FormSpace, h: &IsometryElement) -> Value {
    let mut map = Map::new();
    map.insert("case".into(), Value::String(space.case.name().into()));
    map.insert("params".into(), params_to_json(&space.params));
    map.insert("h1".into(), matrix_to_json(&h.h1));
    map.insert("h2".into(), matrix_to_json(&h.h2));
    Value::Object(map)
}

/// Tuple rendering used by reports: `(a,b,c,…)`.
pub fn tuple_string(t: &OrbitParams) -> String {
    t.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::canonical_rep;

    #[test]
    fn subspace_roundtrip_rational() {
        let c = CaseTag::RealOrthogonal;
        let p = GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 };
        let s = canonical_rep(c, p, &OrbitParams::signed(c, 0, 0, 1, 0, 0)).unwrap();
        let v = subspace_to_json(&s);
        let back = subspace_from_json(&v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn subspace_roundtrip_gaussian() {
        let c = CaseTag::ComplexOrthogonal;
        let p = GroupParams::Split { n: 6, m: 3 };
        let s = canonical_rep(c, p, &OrbitParams::split(c, 1, 0, 0, 1)).unwrap();
        let v = subspace_to_json(&s);
        let text = serde_json::to_string(&v).unwrap();
        let back = subspace_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn scalar_accepts_plain_integers() {
        let v: Value = serde_json::json!("3");
        let s = scalar_from_json(&v, FieldTag::Q).unwrap();
        assert_eq!(s, ExactScalar::from_int(3, FieldTag::Q));
        let v: Value = serde_json::json!(-2);
        let s = scalar_from_json(&v, FieldTag::Q).unwrap();
        assert_eq!(s, ExactScalar::from_int(-2, FieldTag::Q));
    }

    #[test]
    fn csv_has_fixed_header_and_rows() {
        let infos =
            crate::orbits::enumerate_orbits(CaseTag::RealOrthogonal, GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 }, 1)
                .unwrap();
        let csv = atlas_to_csv(&infos);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "case,params,tuple,dim_h,dim_stab,dim_orbit,is_open,component_count"
        );
        assert_eq!(lines.count(), 5);
    }
}
