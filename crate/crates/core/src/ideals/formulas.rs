//! Closed-form depth and regularity of `S/𝔍_G` for generalized block graphs.

use std::fmt;

use crate::graph::{Graph, VertexSet};

use super::IdealError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Depth,
    Regularity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormulaKind {
    Exact,
    UpperBound,
}

/// The statement a component's value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    /// `n + (m - 1) - Σ_{i=2}^{ω-1} (i - 1)·a_i`.
    DepthCutSets,
    /// `reg = n - 1` when `m ≥ n`.
    RegularityRowsAtLeastVertices,
    /// `reg = n - 1` for path graphs.
    RegularityPath,
    /// `reg ≤ n - 1`.
    RegularityBound,
}

impl Clause {
    pub const ALL: [Clause; 4] = [
        Clause::DepthCutSets,
        Clause::RegularityRowsAtLeastVertices,
        Clause::RegularityPath,
        Clause::RegularityBound,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Clause::DepthCutSets => "depth-cut-sets",
            Clause::RegularityRowsAtLeastVertices => "regularity-rows-at-least-vertices",
            Clause::RegularityPath => "regularity-path",
            Clause::RegularityBound => "regularity-bound",
        }
    }

    pub fn parse(s: &str) -> Option<Clause> {
        Clause::ALL.into_iter().find(|c| c.as_str() == s)
    }

    pub fn kind(self) -> FormulaKind {
        match self {
            Clause::RegularityBound => FormulaKind::UpperBound,
            _ => FormulaKind::Exact,
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentContribution {
    pub vertices: VertexSet,
    pub value: usize,
    pub clause: Clause,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaResult {
    pub quantity: Quantity,
    pub kind: FormulaKind,
    pub value: usize,
    /// One entry per connected component, ordered by smallest vertex.
    pub components: Vec<ComponentContribution>,
}

impl FormulaResult {
    fn from_components(quantity: Quantity, components: Vec<ComponentContribution>) -> Self {
        let kind = if components.iter().all(|c| c.clause.kind() == FormulaKind::Exact) {
            FormulaKind::Exact
        } else {
            FormulaKind::UpperBound
        };
        FormulaResult {
            quantity,
            kind,
            value: components.iter().map(|c| c.value).sum(),
            components,
        }
    }

    /// The distinct clauses used, in a fixed order.
    pub fn provenance(&self) -> Vec<Clause> {
        let mut out: Vec<Clause> = self.components.iter().map(|c| c.clause).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn is_exact(&self) -> bool {
        self.kind == FormulaKind::Exact
    }
}

fn components_of_gblock(graph: &Graph) -> Result<Vec<(VertexSet, Graph)>, IdealError> {
    graph
        .connected_components()
        .into_iter()
        .map(|c| {
            let sub = graph.induced_subgraph(c)?.graph;
            if sub.classify().generalized_block_graph {
                Ok((c, sub))
            } else {
                Err(IdealError::NotGeneralizedBlock)
            }
        })
        .collect()
}

fn check_rows(m: usize) -> Result<(), IdealError> {
    if m < 2 {
        return Err(crate::poly::PolyError::TooFewRows(m).into());
    }
    Ok(())
}

/// `depth S/𝔍_G`, summed over connected components.
pub fn depth_formula(graph: &Graph, m: usize) -> Result<FormulaResult, IdealError> {
    check_rows(m)?;
    let components = components_of_gblock(graph)?
        .into_iter()
        .map(|(vertices, g)| {
            let census = g.cut_set_census();
            let omega = g.clique_number();
            let correction: usize = (2..omega).map(|i| (i - 1) * census.a(i)).sum();
            ComponentContribution {
                vertices,
                value: g.vertex_count() + (m - 1) - correction,
                clause: Clause::DepthCutSets,
            }
        })
        .collect();
    Ok(FormulaResult::from_components(Quantity::Depth, components))
}

fn is_path_graph(g: &Graph) -> bool {
    g.is_connected()
        && g.edge_count() + 1 == g.vertex_count()
        && (1..=g.vertex_count()).all(|v| g.neighbors(v).len() <= 2)
}

/// `reg S/𝔍_G`: each component contributes `n_i - 1`, exactly when
/// `m ≥ n_i` or the component is a path, and as an upper bound otherwise.
pub fn regularity_formula(graph: &Graph, m: usize) -> Result<FormulaResult, IdealError> {
    check_rows(m)?;
    let components = components_of_gblock(graph)?
        .into_iter()
        .map(|(vertices, g)| {
            let n = g.vertex_count();
            let clause = if m >= n {
                Clause::RegularityRowsAtLeastVertices
            } else if is_path_graph(&g) {
                Clause::RegularityPath
            } else {
                Clause::RegularityBound
            };
            ComponentContribution {
                vertices,
                value: n - 1,
                clause,
            }
        })
        .collect();
    Ok(FormulaResult::from_components(Quantity::Regularity, components))
}
