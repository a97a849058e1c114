//! Exact computational tools for the two-parameter partial Brauer algebras:
//! diagram calculus, the decorated basis, idempotent truncations onto Brauer
//! algebras, cell and Specht modules with Gram forms, branching and dimension
//! formulas, the defining presentation, and the tensor-space representation.
//!
//! All arithmetic is exact: coefficients live in Z[d, dp, dp^-1] and
//! specializations are evaluated over the rationals.

pub mod algebra;
pub mod cell;
pub mod degenerate;
pub mod diagram;
pub mod error;
pub mod linalg;
pub mod morita;
pub mod scalar;
pub mod schur_weyl;
pub mod symmetric;
pub mod young;

pub use diagram::{Block, ComposeResult, Diagram, Stats};
pub use error::Error;
pub use scalar::{parse_rational, Rational, Scalar};
