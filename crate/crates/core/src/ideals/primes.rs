//! Minimal primes `P_T` of `𝔍_G`, one per cut-point-property set `T`.

use crate::graph::{Graph, VertexSet};
use crate::poly::{IdealPresentation, Monomial, Polynomial, VarGrid};

use super::generators::{column_variables, edge_ideal_for_edges};
use super::{IdealError, PRIME_SEARCH_MAX_VERTICES};

/// `P_T = (x[i,j] : j ∈ T) + Q_1 + … + Q_c`, where `Q_t` holds all 2-minors
/// on the vertex set of the `t`-th component of `G - T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPrime {
    pub cut_point_set: VertexSet,
    /// Vertex sets of the components of `G - T`.
    pub components: Vec<VertexSet>,
    pub killed_variables: Vec<Monomial>,
    pub component_minors: Vec<Vec<Polynomial>>,
    rows: usize,
    n: usize,
}

impl MinimalPrime {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Krull dimension of `S / P_T`: `n - |T| + c(T)(m - 1)`.
    pub fn dimension(&self) -> usize {
        self.n - self.cut_point_set.len() + self.components.len() * (self.rows - 1)
    }

    pub fn ideal(&self) -> IdealPresentation {
        let mut gens: Vec<Polynomial> = self
            .killed_variables
            .iter()
            .cloned()
            .map(Polynomial::from_monomial)
            .collect();
        for q in &self.component_minors {
            gens.extend(q.iter().cloned());
        }
        IdealPresentation::new(self.rows * self.n, gens)
    }
}

fn complete_edges(set: VertexSet) -> Vec<(usize, usize)> {
    let v = set.to_vec();
    let mut out = Vec::new();
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            out.push((v[a], v[b]));
        }
    }
    out
}

pub fn minimal_primes(graph: &Graph, m: usize) -> Result<Vec<MinimalPrime>, IdealError> {
    let n = graph.vertex_count();
    if n > PRIME_SEARCH_MAX_VERTICES {
        return Err(IdealError::TooManyVertices {
            n,
            limit: PRIME_SEARCH_MAX_VERTICES,
        });
    }
    let grid = VarGrid::new(m, n)?;
    let primes = graph
        .cut_point_sets()
        .into_iter()
        .map(|(t, _)| {
            let components = graph.components_within(graph.vertices().difference(t));
            let component_minors = components
                .iter()
                .map(|&c| {
                    edge_ideal_for_edges(&grid, &complete_edges(c))
                        .into_iter()
                        .map(|mi| mi.value)
                        .collect()
                })
                .collect();
            MinimalPrime {
                cut_point_set: t,
                components,
                killed_variables: column_variables(&grid, t.iter()),
                component_minors,
                rows: m,
                n,
            }
        })
        .collect();
    Ok(primes)
}

/// `dim S/𝔍_G` as the largest dimension of a minimal prime, together with
/// each prime's dimension.
pub fn dimension_from_primes(
    graph: &Graph,
    m: usize,
) -> Result<(usize, Vec<(VertexSet, usize)>), IdealError> {
    let per_prime: Vec<(VertexSet, usize)> = minimal_primes(graph, m)?
        .iter()
        .map(|p| (p.cut_point_set, p.dimension()))
        .collect();
    let dim = per_prime.iter().map(|&(_, d)| d).max().unwrap_or(0);
    Ok((dim, per_prime))
}

/// All minimal primes have the same dimension. For connected `G` this is
/// `(c(T) - 1)(m - 1) = |T|` for every cut-point-property set `T`.
pub fn is_unmixed(graph: &Graph, m: usize) -> Result<bool, IdealError> {
    let (_, per_prime) = dimension_from_primes(graph, m)?;
    Ok(per_prime.windows(2).all(|w| w[0].1 == w[1].1))
}
