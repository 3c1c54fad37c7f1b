//! Exact polynomial arithmetic over the rationals on the `m × n` variable grid.
//!
//! The only term order is lex with row-major variable precedence
//! `x[1,1] > x[1,2] > … > x[m,n]`; an auxiliary variable prepended at index 0
//! gives the elimination order used for intersections.

mod groebner;
mod ideal;
mod monomial;
mod polynomial;

pub use groebner::{
    buchberger, is_groebner_basis, is_reduced, leading_monomials, normal_form, reduce_basis,
    s_polynomial,
};
pub use ideal::{IdealPresentation, INTERSECTION_COMFORT_VARS};
pub use monomial::{
    minimal_generators, monomial_ideal_equal, Monomial, VarGrid, VariableNames, WithAuxiliary,
};
pub use polynomial::{Coefficient, Polynomial};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("at least two rows are required, got {0}")]
    TooFewRows(usize),
    #[error("at least one column is required")]
    NoColumns,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
}
