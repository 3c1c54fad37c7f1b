//! Stanley–Reisner complexes of squarefree monomial ideals, reduced
//! simplicial homology over the rationals, and bigraded Betti numbers of
//! `S/I` via Hochster's formula.

mod betti;
mod complex;
mod rank;

pub use betti::{
    depth_of_quotient, hilbert_numerator_from_betti, hilbert_numerator_from_faces,
    hilbert_series_consistent, hochster_betti, regularity_of_quotient, BettiTable,
};
pub use complex::{height, SimplicialComplex};
pub use rank::{bareiss_rank, rank};

use thiserror::Error;

/// Homology of an induced subcomplex is computed for at most this many vertices.
pub const HOMOLOGY_MAX_VERTICES: usize = 16;
/// Hochster's formula visits every subset of the variables.
pub const HOCHSTER_MAX_VARIABLES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("generator {index} is not squarefree")]
    NotSquarefree { index: usize },
    #[error("the unit ideal has no Stanley-Reisner complex")]
    UnitIdeal,
    #[error("generator {index} lives in {found} variables, expected {expected}")]
    VariableCount {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("at most {limit} vertices are supported here, got {n}")]
    TooManyVertices { n: usize, limit: usize },
}
