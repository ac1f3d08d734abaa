//! Exact computations on finite-dimensional evolution algebras over the
//! rationals and prime fields.

pub mod algebra;
pub mod classify;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod frattini;
pub mod linalg;
pub mod radicals;
pub mod report;
pub mod scalar;
pub mod supersolvable;
pub mod tk;
pub mod verify;

pub use algebra::{EvolutionAlgebra, PowerKind, QuotientPresentation};
pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace, Vector};
pub use scalar::{parse_scalar, FieldSpec, Scalar};
