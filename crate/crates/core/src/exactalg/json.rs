//! JSON encoding of time polynomials.
//!
//! A polynomial is an array of `{"coeff": "p/q", "nu": d, "t": {"1": e1, "3": e3, ...}}`
//! objects in canonical term order; time indices are listed ascending and the
//! zero polynomial is the empty array.

use serde_json::{json, Map, Value};

use super::scalar::Scalar;
use super::times::{TimeMonomial, TimesPoly};
use crate::error::{Error, Result};

pub fn times_poly_to_json<C: Scalar>(p: &TimesPoly<C>) -> Value {
    let terms = p
        .sorted_terms()
        .into_iter()
        .map(|(m, c)| {
            let mut t = Map::new();
            for (index, e) in m.pairs() {
                t.insert(index.to_string(), json!(e));
            }
            json!({"coeff": c.to_fraction_string(), "nu": m.nu_power(), "t": Value::Object(t)})
        })
        .collect();
    Value::Array(terms)
}

pub fn times_poly_from_json<C: Scalar>(v: &Value) -> Result<TimesPoly<C>> {
    let bad = |what: &str| Error::Parse(format!("time polynomial: {what}"));
    let arr = v.as_array().ok_or_else(|| bad("expected an array"))?;
    let mut p = TimesPoly::zero();
    for term in arr {
        let coeff = term
            .get("coeff")
            .and_then(Value::as_str)
            .and_then(C::parse_fraction)
            .ok_or_else(|| bad("missing or malformed coeff"))?;
        let nu = term.get("nu").and_then(Value::as_u64).unwrap_or(0) as u32;
        let mut pairs = Vec::new();
        if let Some(t) = term.get("t") {
            let t = t.as_object().ok_or_else(|| bad("t must be an object"))?;
            for (k, e) in t {
                let index: u32 = k.parse().map_err(|_| bad("time index"))?;
                let e = e.as_u64().ok_or_else(|| bad("exponent"))? as u32;
                pairs.push((index, e));
            }
        }
        p.add_term(TimeMonomial::from_pairs(&pairs, nu)?, coeff);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::Rational;

    #[test]
    fn round_trip_and_ordering() {
        let t1 = TimesPoly::<Rational>::time(1).unwrap();
        let t11 = TimesPoly::<Rational>::time(11).unwrap();
        let p = t1
            .mul(&t11)
            .add(&TimesPoly::nu().mul(&t1).scale(&Rational::from_frac(-1, 4)))
            .add(&t1.scale(&Rational::from_frac(1, 16)));
        let v = times_poly_to_json(&p);
        let text = v.to_string();
        assert_eq!(
            text,
            r#"[{"coeff":"1/16","nu":0,"t":{"1":1}},{"coeff":"-1/4","nu":1,"t":{"1":1}},{"coeff":"1/1","nu":0,"t":{"1":1,"11":1}}]"#
        );
        assert_eq!(times_poly_from_json::<Rational>(&v).unwrap(), p);
        assert_eq!(
            times_poly_to_json(&TimesPoly::<Rational>::zero()).to_string(),
            "[]"
        );
        assert!(times_poly_from_json::<Rational>(&json!([{"coeff": "1/0"}])).is_err());
        assert!(times_poly_from_json::<Rational>(&json!([{"coeff": "1", "t": {"2": 1}}])).is_err());
    }
}
