use crate::graph::Graph;
use crate::poly::{IdealPresentation, Monomial, Polynomial, VarGrid};

use super::IdealError;

/// The minor `[k,l|i,j] = x[k,i]·x[l,j] - x[l,i]·x[k,j]` with `k < l`, `i < j`.
/// Under the lex order its leading term is `x[k,i]·x[l,j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor2x2 {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
    pub value: Polynomial,
}

pub fn minor(grid: &VarGrid, rows: (usize, usize), cols: (usize, usize)) -> Minor2x2 {
    let (k, l) = rows;
    let (i, j) = cols;
    debug_assert!(k < l && i < j);
    let value = Polynomial::binomial(
        grid.var(k, i).mul(&grid.var(l, j)),
        grid.var(l, i).mul(&grid.var(k, j)),
    );
    Minor2x2 { rows, cols, value }
}

fn row_pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=m).flat_map(move |k| (k + 1..=m).map(move |l| (k, l)))
}

/// All minors for the given edges (original labels), edges in the given
/// order and row pairs lexicographically within each edge.
pub fn edge_ideal_for_edges(grid: &VarGrid, edges: &[(usize, usize)]) -> Vec<Minor2x2> {
    let mut out = Vec::with_capacity(edges.len() * grid.rows() * (grid.rows() - 1) / 2);
    for &(i, j) in edges {
        let (i, j) = (i.min(j), i.max(j));
        for rows in row_pairs(grid.rows()) {
            out.push(minor(grid, rows, (i, j)));
        }
    }
    out
}

/// Generators of `𝔍_G`: one minor per edge and row pair, edges in
/// lexicographic order, then row pairs in lexicographic order.
pub fn gbei_generators(graph: &Graph, m: usize) -> Result<IdealPresentation, IdealError> {
    let grid = VarGrid::new(m, graph.vertex_count())?;
    let gens = edge_ideal_for_edges(&grid, &graph.edges())
        .into_iter()
        .map(|mi| mi.value)
        .collect();
    Ok(IdealPresentation::new(grid.var_count(), gens))
}

/// The variables `x[1,j], …, x[m,j]` for every column `j` in `cols`.
pub fn column_variables(grid: &VarGrid, cols: impl IntoIterator<Item = usize>) -> Vec<Monomial> {
    let mut out = Vec::new();
    for j in cols {
        for row in 1..=grid.rows() {
            out.push(grid.var(row, j));
        }
    }
    out
}
