//! Real Lie algebras given by structure constants: Jacobi residuals, Bianchi
//! forms, an exact Bianchi-type classifier and changes of basis.

mod bianchi;
mod classify;
mod json;
mod matrix;
mod structure;

pub use bianchi::{from_bianchi, na_decompose, BianchiClass, BianchiParams, BianchiType, NADecomposition};
pub use classify::{ad_on_ideal, chi_invariant, classify_bianchi, congruence_signature};
pub use json::{algebra_from_json, algebra_to_json, AlgebraJson, BracketJson};
pub(crate) use json::{from_json_str, schema};
pub use matrix::{change_basis, Matrix3};
pub use structure::{check_jacobi, jacobi_residual, IndexedFamily, StructureConstants};

use crate::exact::Scalar;

/// Renders `Σ c_k name_k` as `-b*X2 + X3`-style text, omitting zero terms;
/// `sep` goes between a coefficient and its basis name.
pub fn format_combination<S: Scalar>(terms: impl IntoIterator<Item = (S, String)>, sep: &str) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let term = if text == "1" {
            name
        } else if text == "-1" {
            format!("-{name}")
        } else if c.to_ratfunc().as_polynomial().is_some_and(|p| p.num_terms() > 1) {
            format!("({text}){sep}{name}")
        } else {
            format!("{text}{sep}{name}")
        };
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}
