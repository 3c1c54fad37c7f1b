use std::borrow::Cow;

use num_traits::One;

use super::groebner::{buchberger, leading_monomials, normal_form};
use super::monomial::Monomial;
use super::polynomial::{Coefficient, Polynomial};

/// Intersections by elimination get expensive past this many ring variables.
pub const INTERSECTION_COMFORT_VARS: usize = 8;

/// An ideal given by generators, optionally carrying its reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    nvars: usize,
    generators: Vec<Polynomial>,
    reduced_gb: Option<Vec<Polynomial>>,
}

impl IdealPresentation {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Self {
        IdealPresentation {
            nvars,
            generators,
            reduced_gb: None,
        }
    }

    /// Builds the presentation and computes its reduced Gröbner basis up front.
    pub fn with_groebner_basis(nvars: usize, generators: Vec<Polynomial>) -> Self {
        let gb = buchberger(&generators);
        IdealPresentation {
            nvars,
            generators,
            reduced_gb: Some(gb),
        }
    }

    /// Wraps a basis already known to be the reduced Gröbner basis.
    pub(crate) fn from_reduced_basis(nvars: usize, basis: Vec<Polynomial>) -> Self {
        IdealPresentation {
            nvars,
            generators: basis.clone(),
            reduced_gb: Some(basis),
        }
    }

    /// The ideal generated by monomials.
    pub fn monomial(nvars: usize, gens: &[Monomial]) -> Self {
        IdealPresentation::new(
            nvars,
            gens.iter().cloned().map(Polynomial::from_monomial).collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn cached_groebner_basis(&self) -> Option<&[Polynomial]> {
        self.reduced_gb.as_deref()
    }

    /// The reduced Gröbner basis, computed on demand when not cached.
    pub fn reduced_groebner_basis(&self) -> Cow<'_, [Polynomial]> {
        match &self.reduced_gb {
            Some(gb) => Cow::Borrowed(gb.as_slice()),
            None => Cow::Owned(buchberger(&self.generators)),
        }
    }

    /// Leading monomials of the reduced Gröbner basis: the minimal generators
    /// of the initial ideal.
    pub fn initial_ideal(&self) -> Vec<Monomial> {
        leading_monomials(&self.reduced_groebner_basis())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, &self.reduced_groebner_basis()).is_zero()
    }

    pub fn contains_ideal(&self, other: &IdealPresentation) -> bool {
        let gb = self.reduced_groebner_basis();
        other
            .generators
            .iter()
            .all(|g| normal_form(g, &gb).is_zero())
    }

    /// Equality as ideals: the reduced Gröbner bases coincide.
    pub fn ideal_eq(&self, other: &IdealPresentation) -> bool {
        self.nvars == other.nvars
            && self.reduced_groebner_basis()[..] == other.reduced_groebner_basis()[..]
    }

    /// The sum of two ideals.
    pub fn sum(&self, other: &IdealPresentation) -> IdealPresentation {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        IdealPresentation::new(self.nvars, gens)
    }

    /// `I ∩ J`, by eliminating `t` from `t·I + (1 - t)·J` under lex with `t`
    /// ranked above every other variable.
    pub fn intersect(&self, other: &IdealPresentation) -> IdealPresentation {
        let ext = self.nvars + 1;
        let t = Polynomial::from_monomial(Monomial::variable(ext, 0));
        let one_minus_t = Polynomial::one(ext).sub(&t);
        let mut gens: Vec<Polynomial> = Vec::new();
        for f in &self.generators {
            gens.push(f.with_leading_var(1));
        }
        for g in &other.generators {
            gens.push(one_minus_t.mul(&g.with_leading_var(0)));
        }
        let gb = buchberger(&gens);
        // the elements free of t form the reduced basis of the elimination ideal
        let eliminated: Vec<Polynomial> = gb
            .iter()
            .filter(|g| !g.involves_leading_var())
            .map(|g| g.without_leading_var())
            .collect();
        IdealPresentation::from_reduced_basis(self.nvars, eliminated)
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        let gb = self.reduced_groebner_basis();
        gb.len() == 1 && gb[0].leading_monomial().is_some_and(|m| m.is_one())
            && gb[0].leading_coefficient().is_some_and(|c| *c == Coefficient::one())
    }
}
