//! Exact string-topology algebra over the rationals.
//!
//! Graded Frobenius data with exhaustive axiom checks, and constructions for
//! finite quotients, reflection-sphere orbifolds, compact Lie groups and the
//! orbifold age grading.

pub mod bv;
pub mod checks;
pub mod error;
pub mod frobenius;
pub mod grading;
pub mod group;
pub mod lie;
pub mod linalg;
pub mod scalar;
pub mod serial;
pub mod sphere;
pub mod tqft;
pub mod twist;

pub use checks::CheckReport;
pub use error::{Error, Result};
pub use frobenius::FrobeniusData;
pub use linalg::{GradedBasis, GradedElement, LinearMap, TensorElement};
pub use scalar::Scalar;
