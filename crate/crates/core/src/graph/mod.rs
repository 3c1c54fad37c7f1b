//! Finite simple graphs on the vertex set `1..=n`.
//!
//! Vertex sets are bitmasks ([`VertexSet`]), which keeps subset enumeration
//! for cut-set combinatorics cheap. Graphs are limited to 64 vertices.

mod chordal;
mod cuts;
mod enumerate;

pub use chordal::{Classification, CliqueComplex};
pub use cuts::{CutSetCensus, GbDecomposition, CENSUS_MAX_VERTICES};
pub use enumerate::{enumerate_connected_graphs, GraphFilter, MAX_ENUMERATION_VERTICES};

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph is not a generalized block graph")]
    NotGeneralizedBlock,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has a single maximal clique")]
    SingleClique,
    #[error("enumeration is limited to n <= {max}, got {n}")]
    EnumerationTooLarge { n: usize, max: usize },
}

/// A set of vertices, stored as a bitmask with bit `v - 1` for vertex `v`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All vertices `1..=n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << (v - 1))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 64 && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << (v - 1));
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << (v - 1)))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest vertex, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::empty();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vertices: [usize; N]) -> Self {
        vertices.into_iter().collect()
    }
}

/// Lexicographic comparison of the sorted vertex lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v)?;
        }
        f.write_str("}")
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Iterates all subsets of `set` (including the empty set and `set` itself).
pub fn subsets(set: VertexSet) -> impl Iterator<Item = VertexSet> {
    let full = set.bits();
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == full {
            None
        } else {
            Some((current.wrapping_sub(full)) & full)
        };
        Some(VertexSet(current))
    })
}

/// A simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::empty(); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for i in 1..=n {
            g.adj[i - 1] = VertexSet::full(n).without(i);
        }
        Ok(g)
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((n, 1));
        Graph::from_edges(n, &edges)
    }

    /// The star `K_{1,n-1}` centred at vertex 1.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (2..=n).map(|i| (1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Adds the edge `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u - 1].insert(v);
        self.adj[v - 1].insert(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in self.adj[i - 1].iter().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v - 1]))
    }

    /// Connected components of the graph restricted to `within`, each as a
    /// vertex set, ordered by smallest element.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.intersection(self.vertices());
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let comp = self.reach(start, within);
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Number of connected components of the graph restricted to `within`.
    pub fn component_count_within(&self, within: VertexSet) -> usize {
        let mut remaining = within.intersection(self.vertices());
        let mut count = 0;
        while let Some(start) = remaining.first() {
            remaining = remaining.difference(self.reach(start, within));
            count += 1;
        }
        count
    }

    fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in frontier.iter() {
                next = next.union(self.adj[v - 1]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn component_count(&self) -> usize {
        self.component_count_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `c(T)`: components of the graph with `removed` deleted.
    pub fn components_after_removing(&self, removed: VertexSet) -> usize {
        self.component_count_within(self.vertices().difference(removed))
    }

    /// The subgraph induced on `keep`, relabelled order-preservingly to `1..=|keep|`.
    /// An empty `keep` is rejected since graphs have at least one vertex.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<InducedSubgraph, GraphError> {
        if let Some(v) = keep.iter().find(|&v| v > self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let labels = keep.to_vec();
        let mut new_index = vec![0usize; self.n + 1];
        for (k, &v) in labels.iter().enumerate() {
            new_index[v] = k + 1;
        }
        let mut graph = Graph::new(labels.len())?;
        for (i, j) in self.edges() {
            if keep.contains(i) && keep.contains(j) {
                graph.add_edge(new_index[i], new_index[j])?;
            }
        }
        Ok(InducedSubgraph { graph, labels })
    }

    /// Adds all edges between the vertices of `set`.
    pub fn with_clique(&self, set: VertexSet) -> Graph {
        let mut g = self.clone();
        for v in set.iter() {
            g.adj[v - 1] = g.adj[v - 1].union(set.without(v));
        }
        g
    }

    /// Parses the edge-list text format: the first non-comment line holds the
    /// vertex count, each further line an edge `u v`. Lines starting with `#`
    /// and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let err = |message: String| GraphError::Parse { line, message };
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match graph.as_mut() {
                None => {
                    if tokens.len() != 1 {
                        return Err(err(format!("expected vertex count, found {:?}", content)));
                    }
                    let n: usize = tokens[0]
                        .parse()
                        .map_err(|_| err(format!("invalid vertex count {:?}", tokens[0])))?;
                    graph = Some(Graph::new(n).map_err(|e| err(e.to_string()))?);
                }
                Some(g) => {
                    if tokens.len() != 2 {
                        return Err(err(format!("expected edge \"u v\", found {:?}", content)));
                    }
                    let mut ends = [0usize; 2];
                    for (slot, tok) in ends.iter_mut().zip(&tokens) {
                        *slot = tok
                            .parse()
                            .map_err(|_| err(format!("invalid vertex {:?}", tok)))?;
                    }
                    g.add_edge(ends[0], ends[1]).map_err(|e| err(e.to_string()))?;
                }
            }
        }
        graph.ok_or(GraphError::Parse {
            line: text.lines().count().max(1),
            message: "missing vertex count".to_string(),
        })
    }

    /// Renders the graph in the edge-list format accepted by [`Graph::parse`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (i, j) in self.edges() {
            out.push_str(&format!("{} {}\n", i, j));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An induced subgraph together with the map from new labels to original ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[k]` is the original label of new vertex `k + 1`.
    pub labels: Vec<usize>,
}

impl InducedSubgraph {
    pub fn original(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    /// Edges in original labels.
    pub fn original_edges(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(i, j)| (self.original(i), self.original(j)))
            .collect()
    }

    pub fn original_components(&self) -> Vec<VertexSet> {
        self.graph
            .connected_components()
            .into_iter()
            .map(|c| c.iter().map(|v| self.original(v)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_path() {
        let g = Graph::parse("3\n1 2\n2 3").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn parse_single_vertex() {
        let g = Graph::parse("1").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn parse_collapses_duplicates() {
        let g = Graph::parse("3\n1 2\n2 1\n2 3").unwrap();
        assert_eq!(g, Graph::parse("3\n1 2\n2 3").unwrap());
    }

    #[test]
    fn parse_comments_and_blank_lines() {
        let g = Graph::parse("# a path\n\n3\n# edges\n1 2\n  2 3  \n").unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("3\n1 2\n1 4", 3),
            ("3\n1 1", 2),
            ("3\n1 2 3", 2),
            ("# c\nx", 2),
            ("3\n1 b", 2),
            ("0", 1),
        ];
        for (text, expected) in cases {
            match Graph::parse(text) {
                Err(GraphError::Parse { line, .. }) => assert_eq!(line, expected, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(Graph::parse("# only comments").is_err());
    }

    #[test]
    fn components() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.connected_components(), vec![VertexSet::from([1, 2, 3])]);

        let g = Graph::from_edges(4, &[(1, 2)]).unwrap();
        assert_eq!(
            g.connected_components(),
            vec![VertexSet::from([1, 2]), VertexSet::from([3]), VertexSet::from([4])]
        );

        let sub = p3.induced_subgraph(VertexSet::from([1, 3])).unwrap();
        assert_eq!(
            sub.original_components(),
            vec![VertexSet::from([1]), VertexSet::from([3])]
        );
        assert_eq!(p3.components_after_removing(VertexSet::from([2])), 2);
    }

    #[test]
    fn induced_subgraphs() {
        let k3 = Graph::complete(3).unwrap();
        let sub = k3.induced_subgraph(VertexSet::from([1, 2])).unwrap();
        assert_eq!(sub.graph.edges(), vec![(1, 2)]);

        let p3 = Graph::path(3).unwrap();
        let sub = p3.induced_subgraph(VertexSet::from([1, 3])).unwrap();
        assert_eq!(sub.graph.vertex_count(), 2);
        assert_eq!(sub.graph.edge_count(), 0);
        assert_eq!(sub.labels, vec![1, 3]);

        let g = Graph::from_edges(5, &[(1, 3), (2, 5), (4, 5)]).unwrap();
        let sub = g.induced_subgraph(g.vertices()).unwrap();
        assert_eq!(sub.graph, g);
        assert_eq!(sub.labels, vec![1, 2, 3, 4, 5]);

        assert!(matches!(
            p3.induced_subgraph(VertexSet::from([1, 7])),
            Err(GraphError::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn relabelled_edges_map_back() {
        let g = Graph::from_edges(5, &[(1, 2), (2, 4), (4, 5)]).unwrap();
        let sub = g.induced_subgraph(VertexSet::from([2, 4, 5])).unwrap();
        assert_eq!(sub.graph.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(sub.original_edges(), vec![(2, 4), (4, 5)]);
    }

    #[test]
    fn subset_iteration_is_complete() {
        let set = VertexSet::from([2, 5, 7]);
        let all: Vec<_> = subsets(set).collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|s| s.is_subset(set)));
        assert_eq!(subsets(VertexSet::empty()).count(), 1);
    }

    #[test]
    fn vertex_set_order_is_lexicographic() {
        let mut sets = vec![
            VertexSet::from([2]),
            VertexSet::from([1, 3]),
            VertexSet::from([1, 2, 3]),
            VertexSet::from([1, 2]),
        ];
        sets.sort();
        assert_eq!(
            sets,
            vec![
                VertexSet::from([1, 2]),
                VertexSet::from([1, 2, 3]),
                VertexSet::from([1, 3]),
                VertexSet::from([2]),
            ]
        );
    }
}
