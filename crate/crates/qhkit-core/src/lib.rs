//! Exact algebra toolkit: finite-dimensional algebras over ℚ or 𝔽_p,
//! ideal lattices over posets, endomorphism algebras with quiver and
//! relation extraction, quasi-hereditary structure checks, and Ringel-type
//! duality transfers.

pub mod algebra;
pub mod endo;
pub mod expr;
pub mod field;
pub mod ideals;
pub mod linalg;
pub mod poset;
pub mod rewrite;

pub use algebra::{FiniteAlgebra, FreePresentation, NcPoly};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Subspace};
