use std::path::Path;

use serde::{Deserialize, Serialize};

use super::entries::{CatalogEntry, TypeClaim};
use crate::error::{Error, Result};
use crate::exact::RatFunc;
use crate::liealg::{from_json_str, schema, BianchiClass};
use crate::manin::TripleJson;

pub const CATALOG_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TypeClaimJson {
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<RatFunc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryJson {
    pub id: String,
    pub g_type: TypeClaimJson,
    pub g_dual_type: TypeClaimJson,
    pub triple: TripleJson,
    #[serde(default)]
    pub dual_of: Option<String>,
    #[serde(default)]
    pub self_dual: bool,
}

/// `{"version": 1, "entries": [...]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogJson {
    pub version: u32,
    pub entries: Vec<EntryJson>,
}

fn claim_to_json(c: &TypeClaim) -> TypeClaimJson {
    TypeClaimJson {
        class: c.class.name().to_string(),
        param: c.param.clone(),
    }
}

fn claim_from_json(c: &TypeClaimJson, pointer: &str) -> Result<TypeClaim> {
    let class: BianchiClass = c
        .class
        .parse()
        .map_err(|e: crate::Error| schema(format!("{pointer}/class"), e.to_string()))?;
    Ok(TypeClaim {
        class,
        param: c.param.clone(),
    })
}

pub fn catalog_to_json(list: &[CatalogEntry]) -> String {
    let doc = CatalogJson {
        version: CATALOG_VERSION,
        entries: list
            .iter()
            .map(|e| EntryJson {
                id: e.id.clone(),
                g_type: claim_to_json(&e.g_type),
                g_dual_type: claim_to_json(&e.g_dual_type),
                triple: TripleJson::from_triple(&e.triple),
                dual_of: e.dual_of.clone(),
                self_dual: e.self_dual,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

/// Parses and validates a catalog document; every triple must satisfy all
/// identities symbolically.
pub fn catalog_from_json(text: &str) -> Result<Vec<CatalogEntry>> {
    let doc: CatalogJson = from_json_str(text)?;
    if doc.version != CATALOG_VERSION {
        return Err(schema("/version", format!("unsupported version {}", doc.version)));
    }
    doc.entries
        .iter()
        .enumerate()
        .map(|(n, e)| {
            let p = format!("/entries/{n}");
            Ok(CatalogEntry {
                id: e.id.clone(),
                g_type: claim_from_json(&e.g_type, &format!("{p}/g_type"))?,
                g_dual_type: claim_from_json(&e.g_dual_type, &format!("{p}/g_dual_type"))?,
                triple: e.triple.to_triple(&format!("{p}/triple")).map_err(|err| match err {
                    Error::Schema { .. } => err,
                    other => Error::InvalidEntry {
                        id: e.id.clone(),
                        source: Box::new(other),
                    },
                })?,
                dual_of: e.dual_of.clone(),
                self_dual: e.self_dual,
            })
        })
        .collect()
}

pub fn export_json(path: impl AsRef<Path>, list: &[CatalogEntry]) -> Result<()> {
    std::fs::write(path, catalog_to_json(list))?;
    Ok(())
}

pub fn import_json(path: impl AsRef<Path>) -> Result<Vec<CatalogEntry>> {
    catalog_from_json(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::entries::entries;
    use crate::catalog::verify::{default_samples, verify_entry};

    #[test]
    fn round_trip() {
        let list = entries();
        let back = catalog_from_json(&catalog_to_json(&list)).unwrap();
        assert_eq!(back, list);
    }

    #[test]
    fn malformed_scalar_points_at_field() {
        let text = r#"{"version":1,"entries":[{"id":"x","g_type":{"class":"IX"},"g_dual_type":{"class":"I"},
            "triple":{"g":{"basis_dim":3,"brackets":[{"i":1,"j":2,"k":3,"c":"1/0"}]},"g_dual":{"basis_dim":3,"brackets":[]}}}]}"#;
        match catalog_from_json(text) {
            Err(Error::Schema { pointer, .. }) => assert_eq!(pointer, "/entries/0/triple/g/brackets/0/c"),
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    #[test]
    fn hand_written_entry_verifies() {
        let text = r#"{"version":1,"entries":[{"id":"IX.a","g_type":{"class":"IX"},"g_dual_type":{"class":"I"},
            "triple":{"g":{"basis_dim":3,"brackets":[
                {"i":1,"j":2,"k":3,"c":"1"},{"i":2,"j":3,"k":1,"c":"1"},{"i":1,"j":3,"k":2,"c":"-1"}]},
              "g_dual":{"basis_dim":3,"brackets":[]}}}]}"#;
        let list = catalog_from_json(text).unwrap();
        let e = &list[0];
        assert!(verify_entry(e, &default_samples(e)).passed());
        let bad_class = text.replace(r#""class":"I"}"#, r#""class":"XI"}"#);
        assert!(matches!(catalog_from_json(&bad_class), Err(Error::Schema { .. })));
    }
}
