//! Extremals of the Alexandrov-Fenchel inequality for polytopes.
//!
//! Values of support functions are taken at primitive integer facet normals
//! (`ζ_i = f(n_i) = |n_i|·f(u_i)`); all systems are rescaled so their entries are
//! rational. The Euclidean ball never appears as data.

mod background;
mod localaf;
mod space;
mod system;

pub use background::{
    build_background, build_background_with, support_of_sb, EdgeData, FacetGraph, GraphVertex, DEFAULT_RETRY_BOUND,
};
pub use localaf::{local_af_extension, LocalAfExtension};
pub use space::{
    extremal_space, extremal_space_with_seed, extremality_test, extremality_test_in, Component, Decomposition,
    ExtremalSpace, ExtremalityOutcome,
};
pub use system::{alexandrov_system, realization};

#[cfg(test)]
mod tests;
