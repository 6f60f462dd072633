//! Manin triples: validation of all Jacobi-type identities, the Drinfeld
//! double with its invariant pairing, the bialgebra cobracket, basis
//! transformations, duality and equivalence witnesses.

mod bialgebra;
mod double;
mod json;
mod triple;
mod witness;

pub use bialgebra::{co_jacobi_index, cocycle_index, Cobracket};
pub use double::{canonical_pairing, DoubleAlgebra, DOUBLE_BASIS};
pub use json::{double_to_json, triple_from_json, triple_to_json, ConstraintJson, TripleJson};
pub(crate) use triple::format_assignment;
pub use triple::{dual_jacobi_residual, mixed_jacobi_residual, Constraint, ManinTriple, Relation};
pub use witness::{search_witness, search_witness_with, verify_witness};
