//! Exact computational algebra for Rokhlin-dimension bounds of compact group
//! actions: integer normal forms, finitely generated abelian groups,
//! representation rings and their augmentation filtrations, K-theory of
//! joins of finite sets, module models of equivariant K-theory, and
//! certified dimension-bound reports.

pub mod error;
pub mod groups;
pub mod join;
pub mod linalg;
pub mod modules;
pub mod ring;
pub mod rokhlin;
pub mod scalar;
pub mod serde_dec;

pub use error::{Error, Result};
pub use groups::{FgAbelianGroup, Presentation};
pub use num_bigint::BigInt;
pub use scalar::IntScalar;

/// Arbitrary-precision integer used by every layer above the kernels.
pub type Int = BigInt;
pub type IntMatrix = linalg::Matrix<BigInt>;
pub type SnfDecomposition = linalg::Snf<BigInt>;
pub type HnfResult = linalg::Hnf<BigInt>;
pub type IntLattice = linalg::RowLattice<BigInt>;
