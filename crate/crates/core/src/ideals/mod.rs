//! Generalized binomial edge ideals `𝔍_G`: the ideal of all 2-minors
//! `[k,l|i,j]` of the generic `m × n` matrix with `{i,j}` an edge of `G`.

mod decompose;
mod formulas;
mod generators;
mod paths;
mod primes;
mod basis;

pub use decompose::{decompose_ideals, column_initial_ideal_check, IdealDecomposition};
pub use formulas::{
    depth_formula, regularity_formula, Clause, ComponentContribution, FormulaKind, FormulaResult,
    Quantity,
};
pub use generators::{column_variables, edge_ideal_for_edges, gbei_generators, minor, Minor2x2};
pub use paths::{admissible_paths, antitone_maps, AdmissiblePath, AntitoneMap};
pub use primes::{dimension_from_primes, is_unmixed, minimal_primes, MinimalPrime};
pub use basis::{initial_ideal, explicit_basis, explicit_basis_elements};

use thiserror::Error;

use crate::graph::GraphError;
use crate::poly::PolyError;

/// Exhaustive path search is meant for graphs up to this size.
pub const PATH_SEARCH_MAX_VERTICES: usize = 10;
/// Cut-point enumeration for prime decompositions is meant for graphs up to this size.
pub const PRIME_SEARCH_MAX_VERTICES: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("at most {limit} vertices are supported here, got {n}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("formula requires a generalized block graph")]
    NotGeneralizedBlock,
    #[error("explicit Gröbner basis failed validation: {0}")]
    BasisValidation(String),
}
