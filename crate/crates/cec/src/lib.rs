//! Exact computer algebra for chiral equivariant cohomology.
//!
//! The crate constructs the semi-infinite Weil complex of a Lie algebra and
//! the polynomial chiral de Rham complex of a linear representation as
//! free-field vertex superalgebras over exact rationals, computes basic and
//! equivariant cohomology per (degree, weight) piece, and evaluates the
//! positive-weight localization formulas as operations on bivariate
//! character series.
//!
//! Start from [`lie::LieAlgebra`] and [`weil::WeilComplex`]; the `examples/`
//! directory has one runnable example per capability.

pub mod error;
pub mod linalg;
pub mod lie;
pub mod fock;
pub mod field;

pub use error::{Error, Result};
