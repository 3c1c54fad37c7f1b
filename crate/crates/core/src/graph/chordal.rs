//! Chordality, maximal cliques, leaf orders and graph classification.

use super::{Graph, VertexSet};

/// Maximal cliques of a graph, sorted lexicographically, with a leaf order
/// when the graph is chordal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueComplex {
    pub facets: Vec<VertexSet>,
    /// Indices into `facets`; every facet after the first is a leaf of the
    /// complex generated by itself and its predecessors.
    pub leaf_order: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub chordal: bool,
    pub block_graph: bool,
    pub generalized_block_graph: bool,
    pub clique_number: usize,
}

impl Graph {
    /// Lexicographic breadth-first search; returns vertices in visit order.
    /// Ties go to the smallest vertex label.
    pub fn lex_bfs(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        let mut visited = VertexSet::empty();
        let mut order = Vec::with_capacity(n);
        for step in 0..n {
            let v = (1..=n)
                .filter(|&v| !visited.contains(v))
                .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
                .expect("unvisited vertex");
            visited.insert(v);
            order.push(v);
            for w in self.neighbors(v).difference(visited).iter() {
                labels[w].push(n - step);
            }
        }
        order
    }

    /// A perfect elimination ordering if the graph is chordal: every vertex's
    /// neighbours appearing later in the ordering form a clique.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let mut order = self.lex_bfs();
        order.reverse();
        self.is_perfect_elimination_ordering(&order).then_some(order)
    }

    pub fn is_perfect_elimination_ordering(&self, order: &[usize]) -> bool {
        let mut later = self.vertices();
        for &v in order {
            later.remove(v);
            if !self.is_clique(self.neighbors(v).intersection(later)) {
                return false;
            }
        }
        true
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// All maximal cliques, sorted lexicographically.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut cliques = match self.perfect_elimination_ordering() {
            Some(order) => cliques_from_elimination(self, &order),
            None => {
                let mut out = Vec::new();
                bron_kerbosch(
                    self,
                    VertexSet::empty(),
                    self.vertices(),
                    VertexSet::empty(),
                    &mut out,
                );
                out
            }
        };
        cliques.sort();
        cliques
    }

    pub fn clique_complex(&self) -> CliqueComplex {
        let order = self.perfect_elimination_ordering();
        let mut facets = match &order {
            Some(order) => cliques_from_elimination(self, order),
            None => {
                let mut out = Vec::new();
                bron_kerbosch(
                    self,
                    VertexSet::empty(),
                    self.vertices(),
                    VertexSet::empty(),
                    &mut out,
                );
                out
            }
        };
        facets.sort();
        let leaf_order = order.and_then(|_| leaf_order(&facets));
        CliqueComplex { facets, leaf_order }
    }

    pub fn classify(&self) -> Classification {
        let complex = self.clique_complex();
        let chordal = complex.leaf_order.is_some();
        let clique_number = complex.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        if !chordal {
            return Classification {
                chordal,
                block_graph: false,
                generalized_block_graph: false,
                clique_number,
            };
        }
        let facets = &complex.facets;
        let block_graph = pairs(facets.len())
            .all(|(a, b)| facets[a].intersection(facets[b]).len() <= 1);
        let generalized_block_graph = block_graph || triples_condition(facets);
        Classification {
            chordal,
            block_graph,
            generalized_block_graph,
            clique_number,
        }
    }
}

fn pairs(r: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..r).flat_map(move |a| (a + 1..r).map(move |b| (a, b)))
}

/// Any three facets with a common vertex have equal pairwise intersections.
fn triples_condition(facets: &[VertexSet]) -> bool {
    let r = facets.len();
    for (a, b) in pairs(r) {
        let ab = facets[a].intersection(facets[b]);
        if ab.is_empty() {
            continue;
        }
        for c in b + 1..r {
            let abc = ab.intersection(facets[c]);
            if abc.is_empty() {
                continue;
            }
            let bc = facets[b].intersection(facets[c]);
            let ac = facets[a].intersection(facets[c]);
            if ab != bc || ab != ac {
                return false;
            }
        }
    }
    true
}

fn cliques_from_elimination(g: &Graph, order: &[usize]) -> Vec<VertexSet> {
    let mut later = g.vertices();
    let mut candidates = Vec::with_capacity(order.len());
    for &v in order {
        later.remove(v);
        candidates.push(g.neighbors(v).intersection(later).with(v));
    }
    let mut maximal: Vec<VertexSet> = Vec::new();
    for (k, &c) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(l, &d)| l != k && c.is_subset(d) && (c != d || l < k));
        if !dominated {
            maximal.push(c);
        }
    }
    maximal
}

fn bron_kerbosch(
    g: &Graph,
    current: VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(current);
        }
        return;
    }
    let pivot = candidates
        .union(excluded)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(candidates).len())
        .expect("nonempty");
    for v in candidates.difference(g.neighbors(pivot)).iter() {
        let nv = g.neighbors(v);
        bron_kerbosch(
            g,
            current.with(v),
            candidates.intersection(nv),
            excluded.intersection(nv),
            out,
        );
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// Branches of `facets[leaf]` within the complex generated by `among`
/// (indices into `facets`, `leaf` included): facets `F'` such that
/// `H ∩ F ⊆ F' ∩ F` for every other facet `H`.
pub(crate) fn branches(facets: &[VertexSet], among: &[usize], leaf: usize) -> Vec<usize> {
    let f = facets[leaf];
    let others: Vec<usize> = among.iter().copied().filter(|&h| h != leaf).collect();
    others
        .iter()
        .copied()
        .filter(|&b| {
            let fb = facets[b].intersection(f);
            others
                .iter()
                .all(|&h| facets[h].intersection(f).is_subset(fb))
        })
        .collect()
}

pub(crate) fn is_leaf(facets: &[VertexSet], among: &[usize], leaf: usize) -> bool {
    among.len() == 1 || !branches(facets, among, leaf).is_empty()
}

/// Leaf order built front to back, always taking the lexicographically
/// smallest facet that keeps the order completable.
fn leaf_order(facets: &[VertexSet]) -> Option<Vec<usize>> {
    fn extend(facets: &[VertexSet], order: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if order.len() == facets.len() {
            return true;
        }
        for k in 0..facets.len() {
            if used[k] {
                continue;
            }
            order.push(k);
            if is_leaf(facets, order, k) {
                used[k] = true;
                if extend(facets, order, used) {
                    return true;
                }
                used[k] = false;
            }
            order.pop();
        }
        false
    }
    if facets.is_empty() {
        return Some(Vec::new());
    }
    let mut order = Vec::with_capacity(facets.len());
    let mut used = vec![false; facets.len()];
    extend(facets, &mut order, &mut used).then_some(order)
}

impl CliqueComplex {
    /// Checks the leaf-order invariant.
    pub fn is_valid_leaf_order(&self, order: &[usize]) -> bool {
        let mut seen = vec![false; self.facets.len()];
        if order.len() != self.facets.len() {
            return false;
        }
        for &k in order {
            if k >= seen.len() || seen[k] {
                return false;
            }
            seen[k] = true;
        }
        (1..order.len()).all(|i| is_leaf(&self.facets, &order[..=i], order[i]))
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

    #[test]
    fn chordality() {
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        assert!(!Graph::cycle(5).unwrap().is_chordal());
        assert!(Graph::complete(4).unwrap().is_chordal());
        assert!(Graph::star(5).unwrap().is_chordal());
        let tree = Graph::from_edges(6, &[(1, 4), (4, 2), (4, 6), (6, 3), (3, 5)]).unwrap();
        assert!(tree.is_chordal());
        let peo = tree.perfect_elimination_ordering().unwrap();
        assert!(tree.is_perfect_elimination_ordering(&peo));
    }

    #[test]
    fn any_ordering_of_complete_graph_eliminates() {
        let k4 = Graph::complete(4).unwrap();
        assert!(k4.is_perfect_elimination_ordering(&[3, 1, 4, 2]));
    }

    #[test]
    fn clique_complexes() {
        let k3 = Graph::complete(3).unwrap().clique_complex();
        assert_eq!(k3.facets, vec![VertexSet::from([1, 2, 3])]);
        assert_eq!(k3.leaf_order, Some(vec![0]));

        let p3 = Graph::path(3).unwrap().clique_complex();
        assert_eq!(p3.facets, vec![VertexSet::from([1, 2]), VertexSet::from([2, 3])]);
        let order = p3.leaf_order.clone().unwrap();
        assert!(p3.is_valid_leaf_order(&order));

        let fan = fan().clique_complex();
        assert_eq!(
            fan.facets,
            vec![
                VertexSet::from([1, 2, 3]),
                VertexSet::from([1, 2, 4]),
                VertexSet::from([1, 2, 5])
            ]
        );
        for (a, b) in pairs(3) {
            assert_eq!(fan.facets[a].intersection(fan.facets[b]), VertexSet::from([1, 2]));
        }

        let c4 = Graph::cycle(4).unwrap().clique_complex();
        assert_eq!(c4.facets.len(), 4);
        assert!(c4.leaf_order.is_none());
    }

    #[test]
    fn leaf_order_avoids_dead_ends() {
        // facets {1,4},{2,3},{3,4}: taking {2,3} second would strand {3,4}
        let g = Graph::from_edges(4, &[(1, 4), (4, 3), (3, 2)]).unwrap();
        let cc = g.clique_complex();
        let order = cc.leaf_order.clone().unwrap();
        assert!(cc.is_valid_leaf_order(&order));
        assert_eq!(order, vec![0, 2, 1]);
    }

    #[test]
    fn classifications() {
        let tree = Graph::from_edges(5, &[(1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(
            tree.classify(),
            Classification {
                chordal: true,
                block_graph: true,
                generalized_block_graph: true,
                clique_number: 2
            }
        );
        assert_eq!(
            fan().classify(),
            Classification {
                chordal: true,
                block_graph: false,
                generalized_block_graph: true,
                clique_number: 3
            }
        );
        assert_eq!(
            Graph::cycle(4).unwrap().classify(),
            Classification {
                chordal: false,
                block_graph: false,
                generalized_block_graph: false,
                clique_number: 2
            }
        );
        // two triangles glued along an edge plus a third sharing one vertex of it
        let g = Graph::from_edges(
            5,
            &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (1, 5), (2, 5)],
        )
        .unwrap();
        let c = g.classify();
        assert!(c.chordal && !c.generalized_block_graph);
    }
}
