use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::StructureConstants;
use crate::error::{Error, Result};
use crate::exact::{RatFunc, Scalar};

/// `{"basis_dim":3,"brackets":[{"i":1,"j":2,"k":3,"c":"1"}]}` with 1-based
/// indices, `i < j`, and only nonzero coefficients listed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub basis_dim: usize,
    pub brackets: Vec<BracketJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: RatFunc,
}

impl AlgebraJson {
    pub fn from_structure<S: Scalar>(f: &StructureConstants<S>) -> Self {
        AlgebraJson {
            basis_dim: f.dim(),
            brackets: f
                .brackets()
                .into_iter()
                .map(|(i, j, k, c)| BracketJson {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    c: c.to_ratfunc(),
                })
                .collect(),
        }
    }

    /// Validates indices; `pointer` is the location of this object in the
    /// enclosing document, used in error messages.
    pub fn to_structure(&self, pointer: &str) -> Result<StructureConstants<RatFunc>> {
        let d = self.basis_dim;
        if d == 0 {
            return Err(schema(format!("{pointer}/basis_dim"), "must be positive"));
        }
        let mut seen = std::collections::BTreeSet::new();
        for (n, b) in self.brackets.iter().enumerate() {
            let at = format!("{pointer}/brackets/{n}");
            for (name, v) in [("i", b.i), ("j", b.j), ("k", b.k)] {
                if v == 0 || v > d {
                    return Err(schema(format!("{at}/{name}"), format!("index {v} outside 1..={d}")));
                }
            }
            if b.i >= b.j {
                return Err(schema(format!("{at}/j"), "brackets must be listed with i < j"));
            }
            if !seen.insert((b.i, b.j, b.k)) {
                return Err(schema(at, "duplicate bracket entry"));
            }
        }
        Ok(StructureConstants::from_brackets(
            d,
            self.brackets.iter().map(|b| (b.i - 1, b.j - 1, b.k - 1, b.c.clone())),
        ))
    }
}

pub(crate) fn schema(pointer: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Schema {
        pointer: pointer.into(),
        reason: reason.into(),
    }
}

/// Deserializes JSON, reporting failures with a JSON pointer to the
/// offending value.
pub(crate) fn from_json_str<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let mut pointer = String::new();
        for seg in e.path().iter() {
            use serde_path_to_error::Segment;
            match seg {
                Segment::Seq { index } => pointer.push_str(&format!("/{index}")),
                Segment::Map { key } => pointer.push_str(&format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
                Segment::Enum { variant } => pointer.push_str(&format!("/{variant}")),
                Segment::Unknown => pointer.push_str("/?"),
            }
        }
        schema(pointer, e.inner().to_string())
    })
}

pub fn algebra_from_json(text: &str) -> Result<StructureConstants<RatFunc>> {
    from_json_str::<AlgebraJson>(text)?.to_structure("")
}

pub fn algebra_to_json<S: Scalar>(f: &StructureConstants<S>) -> String {
    serde_json::to_string_pretty(&AlgebraJson::from_structure(f)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::BianchiClass;

    #[test]
    fn round_trip() {
        let f = BianchiClass::VIa.symbolic_form();
        let text = algebra_to_json(&f);
        assert_eq!(algebra_from_json(&text).unwrap(), f);
        let sl2 = r#"{"basis_dim":3,"brackets":[
            {"i":1,"j":2,"k":3,"c":"-1"},{"i":2,"j":3,"k":1,"c":"1"},{"i":1,"j":3,"k":2,"c":"-1"}]}"#;
        assert_eq!(
            algebra_from_json(sl2).unwrap(),
            BianchiClass::VIII.standard_form().unwrap().to_ratfunc()
        );
    }

    #[test]
    fn pointers() {
        let err = |t: &str| match algebra_from_json(t) {
            Err(Error::Schema { pointer, .. }) => pointer,
            other => panic!("expected schema error, got {other:?}"),
        };
        assert_eq!(
            err(r#"{"basis_dim":3,"brackets":[{"i":1,"j":2,"k":3,"c":"1/0"}]}"#),
            "/brackets/0/c"
        );
        assert_eq!(
            err(r#"{"basis_dim":3,"brackets":[{"i":2,"j":1,"k":3,"c":"1"}]}"#),
            "/brackets/0/j"
        );
        assert_eq!(
            err(r#"{"basis_dim":3,"brackets":[{"i":1,"j":2,"k":4,"c":"1"}]}"#),
            "/brackets/0/k"
        );
        assert_eq!(err(r#"{"basis_dim":3}"#), "");
        assert_eq!(err(r#"{"basis_dim":3,"brackets":[],"x":1}"#), "/x");
    }
}
