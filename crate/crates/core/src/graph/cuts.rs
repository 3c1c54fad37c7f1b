//! Cut sets, cut-point-property sets, and the leaf decomposition used by the
//! depth/regularity induction.

use super::chordal::branches;
use super::{subsets, Graph, GraphError, InducedSubgraph, VertexSet};

/// Exhaustive searches below are meant for graphs up to this size.
pub const CENSUS_MAX_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSetCensus {
    /// Inclusion-minimal cut sets, ordered by cardinality and then lexicographically.
    pub minimal_cut_sets: Vec<VertexSet>,
    /// Sets with the cut point property, paired with `c(T)`, in lexicographic order.
    /// The empty set is always first.
    pub cut_point_sets: Vec<(VertexSet, usize)>,
    /// `counts[i]` is the number of minimal cut sets of cardinality `i`; entry 0 is unused.
    pub counts: Vec<usize>,
}

impl CutSetCensus {
    /// `a_i(G)`.
    pub fn a(&self, i: usize) -> usize {
        self.counts.get(i).copied().unwrap_or(0)
    }

    /// `𝒜_i(G)`.
    pub fn of_cardinality(&self, i: usize) -> impl Iterator<Item = VertexSet> + '_ {
        self.minimal_cut_sets.iter().copied().filter(move |s| s.len() == i)
    }

    pub fn component_count(&self, t: VertexSet) -> Option<usize> {
        self.cut_point_sets
            .iter()
            .find(|(s, _)| *s == t)
            .map(|&(_, c)| c)
    }
}

impl Graph {
    pub fn is_cut_set(&self, set: VertexSet) -> bool {
        !set.is_empty() && self.components_after_removing(set) > self.component_count()
    }

    /// Inclusion-minimal cut sets by increasing cardinality, skipping
    /// supersets of sets already found.
    pub fn minimal_cut_sets(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let base = self.component_count();
        let mut found: Vec<VertexSet> = Vec::new();
        for size in 1..=n {
            let mut layer = Vec::new();
            for_each_subset_of_size(n, size, |s| {
                if found.iter().any(|f| f.is_subset(s)) {
                    return;
                }
                if self.components_after_removing(s) > base {
                    layer.push(s);
                }
            });
            layer.sort();
            found.extend(layer);
        }
        found
    }

    /// `T` has the cut point property if `c(T \ {i}) < c(T)` for every `i ∈ T`.
    pub fn has_cut_point_property(&self, t: VertexSet) -> bool {
        let c = self.components_after_removing(t);
        t.iter()
            .all(|i| self.components_after_removing(t.without(i)) < c)
    }

    /// All cut-point-property sets with their component counts.
    pub fn cut_point_sets(&self) -> Vec<(VertexSet, usize)> {
        let mut out: Vec<(VertexSet, usize)> = subsets(self.vertices())
            .filter_map(|t| {
                let comps = self.components_within(self.vertices().difference(t));
                // c(T \ {i}) = c(T) - (components touching i) + 1
                let ok = t.iter().all(|i| {
                    comps
                        .iter()
                        .filter(|comp| !comp.is_disjoint(self.neighbors(i)))
                        .take(2)
                        .count()
                        == 2
                });
                ok.then_some((t, comps.len()))
            })
            .collect();
        out.sort();
        out
    }

    pub fn cut_set_census(&self) -> CutSetCensus {
        let minimal_cut_sets = self.minimal_cut_sets();
        let max = minimal_cut_sets.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut counts = vec![0usize; max.max(self.clique_number().saturating_sub(1)) + 1];
        for s in &minimal_cut_sets {
            counts[s.len()] += 1;
        }
        CutSetCensus {
            minimal_cut_sets,
            cut_point_sets: self.cut_point_sets(),
            counts,
        }
    }

    pub fn clique_number(&self) -> usize {
        self.maximal_cliques().iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// Splits off the last facet `F_r` of the leaf order together with its
    /// branches. Requires a connected generalized block graph with at least
    /// two maximal cliques.
    pub fn leaf_decomposition(&self) -> Result<GbDecomposition, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let class = self.classify();
        if !class.generalized_block_graph {
            return Err(GraphError::NotGeneralizedBlock);
        }
        let complex = self.clique_complex();
        let order = complex.leaf_order.as_ref().ok_or(GraphError::NotGeneralizedBlock)?;
        if order.len() < 2 {
            return Err(GraphError::SingleClique);
        }
        let facets = &complex.facets;
        let leaf_index = *order.last().expect("r >= 2");
        let leaf = facets[leaf_index];
        let branch_idx = branches(facets, order, leaf_index);
        let branch_sets: Vec<VertexSet> = branch_idx.iter().map(|&b| facets[b]).collect();
        let shared = branch_sets
            .first()
            .map(|b| b.intersection(leaf))
            .ok_or(GraphError::NotGeneralizedBlock)?;
        if shared.is_empty() {
            return Err(GraphError::NotGeneralizedBlock);
        }
        let mut group = branch_sets.clone();
        group.push(leaf);
        for (a, x) in group.iter().enumerate() {
            for y in &group[a + 1..] {
                if x.intersection(*y) != shared {
                    return Err(GraphError::NotGeneralizedBlock);
                }
            }
        }
        // the leaf meets no facet outside its branches
        let meets_other = facets
            .iter()
            .enumerate()
            .any(|(k, f)| k != leaf_index && !branch_idx.contains(&k) && !f.is_disjoint(leaf));
        if meets_other {
            return Err(GraphError::NotGeneralizedBlock);
        }

        let merged = group.iter().fold(VertexSet::empty(), |acc, f| acc.union(*f));
        let g_prime = self.with_clique(merged);
        let rest = self.vertices().difference(shared);
        let g_double_prime = self.induced_subgraph(rest)?;
        let g_prime_restricted = g_prime.induced_subgraph(rest)?;
        Ok(GbDecomposition {
            leaf,
            branches: branch_sets,
            shared,
            alpha: shared.len(),
            q: branch_idx.len(),
            g_prime,
            g_double_prime,
            g_prime_restricted,
        })
    }
}

/// The pieces of the leaf decomposition of a generalized block graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbDecomposition {
    /// The last facet `F_r` of the leaf order.
    pub leaf: VertexSet,
    pub branches: Vec<VertexSet>,
    /// `A`, the common pairwise intersection of the leaf and its branches.
    pub shared: VertexSet,
    pub alpha: usize,
    pub q: usize,
    /// `G'`: leaf and branches merged into one clique.
    pub g_prime: Graph,
    /// `G''`: the restriction of `G` to `[n] \ A`.
    pub g_double_prime: InducedSubgraph,
    /// `G'` restricted to `[n] \ A`.
    pub g_prime_restricted: InducedSubgraph,
}

fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(VertexSet)) {
    if k > n || n > 63 {
        return;
    }
    if k == 0 {
        f(VertexSet::empty());
        return;
    }
    // Gosper's hack
    let mut s: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while s < limit {
        f(VertexSet::from_bits(s));
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan() -> Graph {
        Graph::from_edges(
            5,
            &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (2, 5)],
        )
        .unwrap()
    }

    /// c(T) and the cut point property straight from the definitions.
    fn brute_force_cut_point_sets(g: &Graph) -> Vec<(VertexSet, usize)> {
        let mut out: Vec<_> = (0..1u64 << g.vertex_count())
            .map(VertexSet::from_bits)
            .filter(|&t| g.has_cut_point_property(t))
            .map(|t| (t, g.components_after_removing(t)))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn path_census() {
        let g = Graph::path(5).unwrap();
        let census = g.cut_set_census();
        assert_eq!(
            census.of_cardinality(1).collect::<Vec<_>>(),
            vec![VertexSet::from([2]), VertexSet::from([3]), VertexSet::from([4])]
        );
        assert_eq!(census.a(1), 3);
        assert!((2..6).all(|i| census.a(i) == 0));
        for t in [
            VertexSet::empty(),
            VertexSet::from([2]),
            VertexSet::from([3]),
            VertexSet::from([4]),
            VertexSet::from([2, 4]),
        ] {
            assert!(census.component_count(t).is_some(), "{t}");
        }
        assert_eq!(census.component_count(VertexSet::from([2, 4])), Some(3));
        assert_eq!(census.cut_point_sets, brute_force_cut_point_sets(&g));
        assert_eq!(census.cut_point_sets[0], (VertexSet::empty(), 1));
    }

    #[test]
    fn complete_graph_census() {
        let census = Graph::complete(5).unwrap().cut_set_census();
        assert!(census.minimal_cut_sets.is_empty());
        assert_eq!(census.cut_point_sets, vec![(VertexSet::empty(), 1)]);
    }

    #[test]
    fn fan_census() {
        let census = fan().cut_set_census();
        assert_eq!(census.a(1), 0);
        assert_eq!(census.a(2), 1);
        assert_eq!(census.of_cardinality(2).collect::<Vec<_>>(), vec![VertexSet::from([1, 2])]);
    }

    #[test]
    fn pruned_search_matches_definition() {
        let graphs = [
            Graph::path(6).unwrap(),
            fan(),
            Graph::cycle(5).unwrap(),
            Graph::from_edges(6, &[(1, 2), (3, 4), (4, 5), (5, 3), (5, 6)]).unwrap(),
            Graph::star(5).unwrap(),
        ];
        for g in graphs {
            assert_eq!(g.cut_point_sets(), brute_force_cut_point_sets(&g), "{g:?}");
        }
    }

    #[test]
    fn decomposition_of_path() {
        let d = Graph::path(3).unwrap().leaf_decomposition().unwrap();
        assert_eq!(d.leaf, VertexSet::from([2, 3]));
        assert_eq!(d.shared, VertexSet::from([2]));
        assert_eq!((d.alpha, d.q), (1, 1));
        assert_eq!(d.g_prime, Graph::complete(3).unwrap());
        assert_eq!(
            d.g_double_prime.original_components(),
            vec![VertexSet::from([1]), VertexSet::from([3])]
        );
        assert!(d.g_double_prime.original_edges().is_empty());
    }

    #[test]
    fn decomposition_of_fan() {
        let d = fan().leaf_decomposition().unwrap();
        assert_eq!(d.leaf, VertexSet::from([1, 2, 5]));
        assert_eq!(d.shared, VertexSet::from([1, 2]));
        assert_eq!((d.alpha, d.q), (2, 2));
        assert_eq!(d.g_prime, Graph::complete(5).unwrap());
        assert_eq!(
            d.g_double_prime.original_components(),
            vec![VertexSet::from([3]), VertexSet::from([4]), VertexSet::from([5])]
        );
    }

    #[test]
    fn decomposition_of_star() {
        let d = Graph::star(4).unwrap().leaf_decomposition().unwrap();
        assert_eq!(d.leaf, VertexSet::from([1, 4]));
        assert_eq!(d.shared, VertexSet::from([1]));
        assert_eq!(d.branches, vec![VertexSet::from([1, 2]), VertexSet::from([1, 3])]);
        assert_eq!(d.q, 2);
        assert_eq!(
            d.g_double_prime.original_components(),
            vec![VertexSet::from([2]), VertexSet::from([3]), VertexSet::from([4])]
        );
    }

    #[test]
    fn decomposition_rejections() {
        assert_eq!(
            Graph::complete(3).unwrap().leaf_decomposition(),
            Err(GraphError::SingleClique)
        );
        assert_eq!(
            Graph::cycle(4).unwrap().leaf_decomposition(),
            Err(GraphError::NotGeneralizedBlock)
        );
        assert_eq!(
            Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap().leaf_decomposition(),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn gosper_sizes() {
        let mut count = 0;
        for_each_subset_of_size(6, 3, |s| {
            assert_eq!(s.len(), 3);
            count += 1;
        });
        assert_eq!(count, 20);
    }
}
