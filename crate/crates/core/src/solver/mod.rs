//! All dual algebras compatible with a given 3-dimensional Lie algebra.
//!
//! The mixed identities are linear in the dual structure constants, so
//! their solutions form a linear family ([`solve_dual_family`]). The dual
//! Jacobi identity then cuts out a quadratic subset of it
//! ([`dual_jacobi_ideal`]).

mod elimination;
mod family;
mod ideal;
mod printed;
mod reference;

pub use elimination::{
    bareiss_rref, component_name, dual_components, dual_from_components, mixed_jacobi_system, LinearSystem, Rref,
    COLUMNS,
};
pub use family::{component_substitution, solve_dual_family, DualFamily};
pub use ideal::{dual_jacobi_ideal, ideal_equivalent, IdealComparison, QuadraticIdeal, SamplingConfig, PARAM_A};
pub use printed::{
    check_printed_solutions, dual_from_rows, rows_are_valid, PrintedCheck, PrintedSolution, PRINTED_SOLUTIONS,
};
pub use reference::{compare_with_reference, reference_for, ReferenceMatch, ReferenceRelations, REFERENCE};
