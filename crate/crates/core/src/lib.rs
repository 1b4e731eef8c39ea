//! Exact computations with the adjoint representation of Hopf algebras.

pub mod dietzmann;
pub mod error;
pub mod finmod;
pub mod groups;
pub mod hopf;
pub mod linalg;
pub mod pbw;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Field, FieldDescriptor, Scalar};
