//! The guide's code samples, compiled and run as doctests.

#[doc = include_str!("../../../book/src/overview.md")]
mod overview {}
#[doc = include_str!("../../../book/src/algebras.md")]
mod algebras {}
#[doc = include_str!("../../../book/src/triples.md")]
mod triples {}
#[doc = include_str!("../../../book/src/solver.md")]
mod solver {}
#[doc = include_str!("../../../book/src/catalog.md")]
mod catalog {}
#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
