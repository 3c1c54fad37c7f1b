//! Generalized binomial edge ideals of graphs.
//!
//! * [`graph`]: simple graphs, chordality, clique complexes, cut sets.
//! * [`poly`]: exact rational polynomials and Buchberger's algorithm.
//! * [`ideals`]: generators, admissible paths, the explicit Gröbner basis,
//!   minimal primes and the closed-form depth and regularity formulas.
//! * [`homology`]: Stanley–Reisner complexes and Hochster's formula, used as
//!   an independent check of depth and regularity.

pub mod graph;
pub mod homology;
pub mod ideals;
pub mod poly;
