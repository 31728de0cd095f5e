//! JSON conventions shared by every exported type: rationals are strings `"p/q"`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactmath::Monomial;
use crate::{ExactPoly, Rational};

/// Version tag carried by every top-level document.
pub const SCHEMA: &str = "nca/1";

/// Always `p/q`, also for integers, with the sign on `p`.
pub fn rational_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `p/q` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::MalformedTableau(format!("bad rational {s:?}"));
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn monomial_json(m: &Monomial) -> Value {
    let exps: BTreeMap<String, u32> = m.exponents().iter().map(|&(v, e)| (v.to_string(), e)).collect();
    json!(exps)
}

/// `{"terms":[{"coeff":"p/q","exps":{"1":2}}]}`, terms in decreasing graded-lex order.
pub fn poly_json(p: &ExactPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({"coeff": rational_string(c), "exps": monomial_json(m)}))
        .collect();
    json!({ "terms": terms })
}

pub fn poly_from_json(v: &Value) -> Result<ExactPoly> {
    let bad = |why: &str| Error::MalformedTableau(format!("bad polynomial JSON: {why}"));
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
    let mut out = ExactPoly::zero();
    for t in terms {
        let c = parse_rational(t.get("coeff").and_then(Value::as_str).ok_or_else(|| bad("coeff"))?)?;
        let exps = t.get("exps").and_then(Value::as_object).ok_or_else(|| bad("exps"))?;
        let mut pairs = Vec::new();
        for (k, e) in exps {
            let var: u32 = k.parse().map_err(|_| bad("variable index"))?;
            let e = e.as_u64().ok_or_else(|| bad("exponent"))? as u32;
            pairs.push((var, e));
        }
        out.add_term(Monomial::from_pairs(pairs), c);
    }
    Ok(out)
}

/// Integer-valued rationals print as integers in human output.
pub fn rational_short(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        rational_string(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let q = Rational::new(BigInt::from(-6), BigInt::from(4));
        assert_eq!(rational_string(&q), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), q);
        assert_eq!(rational_string(&parse_rational("5").unwrap()), "5/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn poly_roundtrip() {
        let p: ExactPoly = crate::exactmath::difference_product(&[(1, 2), (1, 3)]).unwrap();
        let v = poly_json(&p);
        assert_eq!(poly_from_json(&v).unwrap(), p);
        assert_eq!(v["terms"][0]["coeff"], "1/1");
    }
}
