//! Bit-exact JSON serialization of expressions.
//!
//! Schema: {"basis":"h|p|s|ht|st","terms":[{"partition":[...],"coeff":"<int or a/b>"}]},
//! terms sorted by (size, reverse-lex of the partition), matching the
//! canonical term order.

use num::{BigInt, BigRational, One};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::expr::{BasisTag, Coeff, SymExpr};

pub fn coeff_to_string(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn coeff_from_str(text: &str) -> Result<Coeff> {
    let parse_int = |s: &str| -> Result<BigInt> {
        s.parse::<BigInt>().map_err(|_| Error::Parse {
            position: 0,
            message: format!("invalid integer {:?}", s),
        })
    };
    match text.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(text)?)),
        Some((num, den)) => Ok(BigRational::new(parse_int(num)?, parse_int(den)?)),
    }
}

pub fn to_json(f: &SymExpr) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(p, c)| {
            json!({
                "partition": p.parts(),
                "coeff": coeff_to_string(c),
            })
        })
        .collect();
    json!({ "basis": f.basis().as_str(), "terms": terms })
}

pub fn to_json_string(f: &SymExpr) -> String {
    to_json(f).to_string()
}

pub fn from_json_str(text: &str) -> Result<SymExpr> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        position: 0,
        message: format!("invalid json: {}", e),
    })?;
    from_json(&value)
}

pub fn from_json(value: &Value) -> Result<SymExpr> {
    let basis_str = value
        .get("basis")
        .and_then(Value::as_str)
        .ok_or_else(|| parse_err("missing basis"))?;
    let basis = BasisTag::parse(basis_str)
        .ok_or_else(|| parse_err(&format!("unknown basis {:?}", basis_str)))?;
    let terms = value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("missing terms"))?;
    let mut out = SymExpr::zero(basis);
    for term in terms {
        let parts = term
            .get("partition")
            .and_then(Value::as_array)
            .ok_or_else(|| parse_err("missing partition"))?
            .iter()
            .map(|v| {
                v.as_u64()
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(|| parse_err("invalid partition entry"))
            })
            .collect::<Result<Vec<u32>>>()?;
        let partition = Partition::from_parts(parts).map_err(|e| parse_err(&e.to_string()))?;
        let coeff_text = term
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or_else(|| parse_err("missing coeff"))?;
        out.add_term(partition, coeff_from_str(coeff_text)?);
    }
    Ok(out)
}

fn parse_err(message: &str) -> Error {
    Error::Parse {
        position: 0,
        message: message.to_string(),
    }
}
