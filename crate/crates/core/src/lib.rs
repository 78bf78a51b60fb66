//! Exact computations around the Alexandrov–Fenchel inequality for rational
//! polytopes: mixed volumes and mixed area measures, criticality of reference
//! collections, the space of extremal functions with its decomposition into
//! linear and degenerate parts, and the linear-extension application to posets.
//!
//! Everything is exact. Scalars are [`Rational`]s, and the few quantities that
//! carry a square root (intrinsic volumes inside skew subspaces) are
//! [`ScaledRational`]s of the form `q·√g`.
//!
//! Unit normals never appear. Facet normals are primitive integer vectors and
//! every statement about a function on the sphere is evaluated at those
//! representatives ("normal-scaled coordinates"): a value `f(n)` stands for
//! `|n|·f(n/|n|)`.

pub mod criticality;
pub mod error;
pub mod extremals;
pub mod mixedvol;
pub mod polytope;
pub mod ratgeo;
pub mod stanley;

pub use error::{Error, Result};
pub use ratgeo::{QMatrix, QVector, Rational, ScaledRational, Subspace};
