//! Column-variable identities and the splitting `𝔍_G = J_1 ∩ J_2` along a leaf.

use crate::graph::{GbDecomposition, Graph, VertexSet};
use crate::poly::{minimal_generators, monomial_ideal_equal, IdealPresentation, Polynomial, VarGrid};

use super::generators::{column_variables, edge_ideal_for_edges};
use super::basis::initial_ideal;
use super::{gbei_generators, IdealError};

fn column_polys(grid: &VarGrid, cols: VertexSet) -> Vec<Polynomial> {
    column_variables(grid, cols.iter())
        .into_iter()
        .map(Polynomial::from_monomial)
        .collect()
}

/// Compares `ini(𝔍_G + (x[1,j], …, x[m,j] : j ∈ A))` computed by Buchberger
/// with `ini(𝔍_G) + (x[1,j], …, x[m,j] : j ∈ A)`.
pub fn column_initial_ideal_check(graph: &Graph, m: usize, cols: VertexSet) -> Result<bool, IdealError> {
    let grid = VarGrid::new(m, graph.vertex_count())?;
    if let Some(v) = cols.iter().find(|&v| v > graph.vertex_count()) {
        return Err(crate::graph::GraphError::VertexOutOfRange {
            vertex: v,
            n: graph.vertex_count(),
        }
        .into());
    }
    let mut gens = gbei_generators(graph, m)?.generators().to_vec();
    gens.extend(column_polys(&grid, cols));
    let left = IdealPresentation::new(grid.var_count(), gens).initial_ideal();

    let mut right = initial_ideal(graph, m)?;
    right.extend(column_variables(&grid, cols.iter()));
    Ok(monomial_ideal_equal(&left, &minimal_generators(&right)))
}

/// `J_1 = 𝔍_{G'}`, `J_2 = (columns of A) + 𝔍_{G''}` and
/// `J_1 + J_2 = (columns of A) + 𝔍_{G'_{[n]∖A}}`, all in the ring of `G`.
#[derive(Clone, Debug)]
pub struct IdealDecomposition {
    pub decomposition: GbDecomposition,
    pub j1: IdealPresentation,
    pub j2: IdealPresentation,
    pub sum: IdealPresentation,
}

impl IdealDecomposition {
    /// Whether `J_1 ∩ J_2` equals `target`.
    pub fn intersection_equals(&self, target: &IdealPresentation) -> bool {
        self.j1.intersect(&self.j2).ideal_eq(target)
    }

    /// Whether `ini(J_1 + J_2) = ini(J_1) + ini(J_2)`.
    pub fn initial_ideal_of_sum_splits(&self) -> bool {
        let mut parts = self.j1.initial_ideal();
        parts.extend(self.j2.initial_ideal());
        monomial_ideal_equal(&self.sum.initial_ideal(), &minimal_generators(&parts))
    }

    /// Whether the presented sum is the ideal `J_1 + J_2`.
    pub fn sum_is_consistent(&self) -> bool {
        self.j1.sum(&self.j2).ideal_eq(&self.sum)
    }
}

pub fn decompose_ideals(graph: &Graph, m: usize) -> Result<IdealDecomposition, IdealError> {
    let decomposition = graph.leaf_decomposition()?;
    let grid = VarGrid::new(m, graph.vertex_count())?;
    let minors = |edges: &[(usize, usize)]| -> Vec<Polynomial> {
        edge_ideal_for_edges(&grid, edges)
            .into_iter()
            .map(|mi| mi.value)
            .collect()
    };
    let nvars = grid.var_count();
    let j1 = IdealPresentation::new(nvars, minors(&decomposition.g_prime.edges()));
    let mut j2_gens = column_polys(&grid, decomposition.shared);
    j2_gens.extend(minors(&decomposition.g_double_prime.original_edges()));
    let mut sum_gens = column_polys(&grid, decomposition.shared);
    sum_gens.extend(minors(&decomposition.g_prime_restricted.original_edges()));
    Ok(IdealDecomposition {
        decomposition,
        j1,
        j2: IdealPresentation::new(nvars, j2_gens),
        sum: IdealPresentation::new(nvars, sum_gens),
    })
}
