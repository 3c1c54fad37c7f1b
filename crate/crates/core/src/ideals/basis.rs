//! The explicit Gröbner basis of `𝔍_G` indexed by admissible paths and
//! antitone row maps, and the initial ideal it yields.

use num_traits::One;

use crate::graph::Graph;
use crate::poly::{
    is_groebner_basis, is_reduced, minimal_generators, normal_form, Coefficient, IdealPresentation,
    Monomial,
    Polynomial, VarGrid,
};

use super::generators::minor;
use super::paths::{admissible_paths, antitone_maps, AdmissiblePath, AntitoneMap};
use super::{gbei_generators, IdealError};

/// `u_π^κ = ∏_{k=1}^{r-1} x[κ(k), i_k]`, the coefficient monomial of the
/// basis element attached to `(π, κ)`.
pub fn path_monomial(grid: &VarGrid, path: &AdmissiblePath, kappa: &AntitoneMap) -> Monomial {
    let interior = path.interior();
    Monomial::product(
        grid.var_count(),
        interior
            .iter()
            .enumerate()
            .map(|(k, &v)| grid.index(kappa.at(k + 1), v)),
    )
}

/// `u_π^κ · [κ(r), κ(0) | i_0, i_r]` for every admissible path and antitone
/// map, sorted by descending leading monomial with duplicates removed.
pub fn explicit_basis_elements(graph: &Graph, m: usize) -> Result<Vec<Polynomial>, IdealError> {
    let grid = VarGrid::new(m, graph.vertex_count())?;
    let mut out = Vec::new();
    for path in admissible_paths(graph)? {
        let r = path.length();
        for kappa in antitone_maps(&path, m) {
            let u = path_monomial(&grid, &path, &kappa);
            let binomial = minor(&grid, (kappa.at(r), kappa.at(0)), (path.start(), path.end())).value;
            out.push(binomial.mul_term(&u, &Coefficient::one()));
        }
    }
    out.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()).then_with(|| b.terms().cmp(a.terms())));
    out.dedup();
    Ok(out)
}

/// The explicit basis, checked before it is returned: it must be reduced,
/// satisfy Buchberger's criterion, and generate every minor of `𝔍_G`.
pub fn explicit_basis(graph: &Graph, m: usize) -> Result<IdealPresentation, IdealError> {
    let basis = explicit_basis_elements(graph, m)?;
    let nvars = m * graph.vertex_count();
    if !is_reduced(&basis) {
        return Err(IdealError::BasisValidation("basis is not reduced".into()));
    }
    if !is_groebner_basis(&basis) {
        return Err(IdealError::BasisValidation(
            "an S-polynomial does not reduce to zero".into(),
        ));
    }
    let gens = gbei_generators(graph, m)?;
    if let Some(g) = gens
        .generators()
        .iter()
        .find(|g| !normal_form(g, &basis).is_zero())
    {
        let grid = VarGrid::new(m, graph.vertex_count())?;
        return Err(IdealError::BasisValidation(format!(
            "generator {} is not in the ideal of the basis",
            g.render(&grid)
        )));
    }
    Ok(IdealPresentation::from_reduced_basis(nvars, basis))
}

/// Minimal generators `u_π^κ · x[κ(r), i_0] · x[κ(0), i_r]` of the initial
/// ideal of `𝔍_G`, read off the validated explicit basis.
pub fn initial_ideal(graph: &Graph, m: usize) -> Result<Vec<Monomial>, IdealError> {
    let basis = explicit_basis(graph, m)?;
    Ok(minimal_generators(&basis.initial_ideal()))
}
