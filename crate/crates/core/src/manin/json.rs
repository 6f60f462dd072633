use serde::{Deserialize, Serialize};

use super::{Constraint, DoubleAlgebra, ManinTriple, DOUBLE_BASIS};
use crate::error::Result;
use crate::exact::{RatFunc, Scalar};
use crate::liealg::{from_json_str, schema, AlgebraJson};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintJson {
    pub poly: RatFunc,
    pub rel: String,
}

/// `{"g": <algebra>, "g_dual": <algebra>, "constraints": [{"poly":"b","rel":">0"}]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleJson {
    pub g: AlgebraJson,
    pub g_dual: AlgebraJson,
    #[serde(default)]
    pub constraints: Vec<ConstraintJson>,
}

impl TripleJson {
    pub fn from_triple<S: Scalar>(t: &ManinTriple<S>) -> Self {
        TripleJson {
            g: AlgebraJson::from_structure(t.f()),
            g_dual: AlgebraJson::from_structure(t.f_dual()),
            constraints: t
                .constraints()
                .iter()
                .map(|c| ConstraintJson {
                    poly: c.poly.clone(),
                    rel: c.rel.symbol().to_string(),
                })
                .collect(),
        }
    }

    /// Converts and validates; `pointer` locates this object in its document.
    pub fn to_triple(&self, pointer: &str) -> Result<ManinTriple<RatFunc>> {
        let f = self.g.to_structure(&format!("{pointer}/g"))?;
        let fd = self.g_dual.to_structure(&format!("{pointer}/g_dual"))?;
        if f.dim() != 3 || fd.dim() != 3 {
            return Err(schema(
                format!("{pointer}/g/basis_dim"),
                "Manin triples here are built from 3-dimensional algebras",
            ));
        }
        let constraints = self
            .constraints
            .iter()
            .enumerate()
            .map(|(n, c)| {
                let rel = c
                    .rel
                    .parse()
                    .map_err(|e: crate::Error| schema(format!("{pointer}/constraints/{n}/rel"), e.to_string()))?;
                Ok(Constraint::new(c.poly.clone(), rel))
            })
            .collect::<Result<Vec<_>>>()?;
        ManinTriple::new(f, fd, constraints)
    }
}

pub fn triple_from_json(text: &str) -> Result<ManinTriple<RatFunc>> {
    from_json_str::<TripleJson>(text)?.to_triple("")
}

pub fn triple_to_json<S: Scalar>(t: &ManinTriple<S>) -> String {
    serde_json::to_string_pretty(&TripleJson::from_triple(t)).expect("serializable")
}

#[derive(Clone, Debug, Serialize)]
pub struct DoubleBracketJson {
    pub left: &'static str,
    pub right: &'static str,
    pub result: Vec<(String, RatFunc)>,
}

/// All nonzero brackets of the double, with basis labels.
pub fn double_to_json<S: Scalar>(d: &DoubleAlgebra<S>) -> serde_json::Value {
    let mut out = Vec::new();
    for p in 0..6 {
        for q in p + 1..6 {
            let result: Vec<(String, RatFunc)> = (0..6)
                .filter(|&r| !d.g.get(p, q, r).is_zero())
                .map(|r| (DOUBLE_BASIS[r].to_string(), d.g.get(p, q, r).to_ratfunc()))
                .collect();
            if !result.is_empty() {
                out.push(DoubleBracketJson {
                    left: DOUBLE_BASIS[p],
                    right: DOUBLE_BASIS[q],
                    result,
                });
            }
        }
    }
    serde_json::json!({ "basis": DOUBLE_BASIS, "brackets": out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn triple_round_trip() {
        let text = r#"{"g":{"basis_dim":3,"brackets":[{"i":1,"j":2,"k":3,"c":"1"},{"i":2,"j":3,"k":1,"c":"1"},{"i":1,"j":3,"k":2,"c":"-1"}]},
            "g_dual":{"basis_dim":3,"brackets":[{"i":1,"j":2,"k":2,"c":"-b"},{"i":1,"j":3,"k":3,"c":"-b"}]},
            "constraints":[{"poly":"b","rel":">0"}]}"#;
        let t = triple_from_json(text).unwrap();
        assert_eq!(t.constraints()[0].to_string(), "b > 0");
        let back = triple_from_json(&triple_to_json(&t)).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.constraints(), t.constraints());
    }

    #[test]
    fn invalid_triple_reports_identity() {
        let text = r#"{"g":{"basis_dim":3,"brackets":[{"i":1,"j":2,"k":3,"c":"1"},{"i":2,"j":3,"k":1,"c":"1"},{"i":1,"j":3,"k":2,"c":"-1"}]},
            "g_dual":{"basis_dim":3,"brackets":[{"i":2,"j":3,"k":1,"c":"1"}]}}"#;
        assert!(matches!(
            triple_from_json(text),
            Err(Error::JacobiViolation {
                identity: crate::Identity::Mixed,
                ..
            })
        ));
        let bad_rel = r#"{"g":{"basis_dim":3,"brackets":[]},"g_dual":{"basis_dim":3,"brackets":[]},"constraints":[{"poly":"b","rel":"<0"}]}"#;
        match triple_from_json(bad_rel) {
            Err(Error::Schema { pointer, .. }) => assert_eq!(pointer, "/constraints/0/rel"),
            other => panic!("{other:?}"),
        }
    }
}
