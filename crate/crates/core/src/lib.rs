//! Exact computations with 3-dimensional real Lie bialgebras, equivalently
//! 6-dimensional Manin triples.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: rationals, multivariate polynomials and rational functions;
//! * [`liealg`]: structure constants, the Jacobi identity, Bianchi forms and
//!   an exact Bianchi-type classifier;
//! * [`manin`]: Manin triples, Drinfeld-double brackets, cobrackets and
//!   equivalence witnesses;
//! * [`solver`]: solving the mixed Jacobi identities for all dual algebras
//!   of a given Bianchi algebra;
//! * [`catalog`]: the complete list of 78 classes with a verification
//!   harness and JSON import/export.
//!
//! ```
//! use manin::liealg::{classify_bianchi, BianchiClass};
//!
//! let sl2 = BianchiClass::VIII.standard_form().unwrap();
//! assert_eq!(classify_bianchi(&sl2).unwrap().class, BianchiClass::VIII);
//! ```

pub mod catalog;
mod error;
pub mod exact;
pub mod liealg;
pub mod manin;
pub mod solver;

pub use error::{Error, Identity, Result};

#[cfg(doctest)]
mod book;
