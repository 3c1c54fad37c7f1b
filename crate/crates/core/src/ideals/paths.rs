//! Admissible paths and the row assignments along them.

use crate::graph::{Graph, VertexSet};

use super::{IdealError, PATH_SEARCH_MAX_VERTICES};

/// A path `i = i_0, …, i_r = j` with `i < j` whose interior vertices all lie
/// outside `[i, j]` and which has no shortcut through a proper subset of its
/// interior.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissiblePath {
    vertices: Vec<usize>,
}

impl AdmissiblePath {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("nonempty path")
    }

    /// Number of edges `r`.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

/// Row values `κ(0), …, κ(r)` along a path, with `i_s < i_t ⇒ κ(s) ≥ κ(t)`
/// and `κ(0) > κ(r)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AntitoneMap {
    rows: Vec<usize>,
}

impl AntitoneMap {
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn at(&self, position: usize) -> usize {
        self.rows[position]
    }
}

/// Every admissible path of `graph`, ordered by endpoints and then vertex
/// sequence. Single edges are the paths with `r = 1`.
pub fn admissible_paths(graph: &Graph) -> Result<Vec<AdmissiblePath>, IdealError> {
    let n = graph.vertex_count();
    if n > PATH_SEARCH_MAX_VERTICES {
        return Err(IdealError::TooManyVertices {
            n,
            limit: PATH_SEARCH_MAX_VERTICES,
        });
    }
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let allowed: VertexSet = (1..=n).filter(|&v| v < i || v > j).collect();
            let mut path = vec![i];
            extend_induced(graph, j, allowed, &mut path, &mut out);
        }
    }
    out.sort();
    Ok(out)
}

/// Depth-first search over chordless paths from `path[0]` to `target`.
/// A chord would give a path through a proper subset of the interior, so
/// chordless is the same as the minimality condition.
fn extend_induced(
    graph: &Graph,
    target: usize,
    allowed: VertexSet,
    path: &mut Vec<usize>,
    out: &mut Vec<AdmissiblePath>,
) {
    let last = *path.last().expect("nonempty");
    if graph.has_edge(last, target) {
        let mut vertices = path.clone();
        vertices.push(target);
        out.push(AdmissiblePath { vertices });
        // any extension past a neighbour of the target has a chord
        return;
    }
    let on_path: VertexSet = path.iter().copied().collect();
    let earlier = on_path.without(last);
    for w in graph.neighbors(last).intersection(allowed).difference(on_path).iter() {
        if !graph.neighbors(w).is_disjoint(earlier) {
            continue;
        }
        path.push(w);
        extend_induced(graph, target, allowed, path, out);
        path.pop();
    }
}

/// All maps `κ: {0..r} → [m]` along `path` that are antitone in the vertex
/// labels with `κ(0) > κ(r)`, in lexicographic order of `(κ(0), …, κ(r))`.
pub fn antitone_maps(path: &AdmissiblePath, m: usize) -> Vec<AntitoneMap> {
    let len = path.vertices.len();
    // positions sorted by increasing label; κ is non-increasing along them
    let mut by_label: Vec<usize> = (0..len).collect();
    by_label.sort_by_key(|&p| path.vertices[p]);
    let mut out = Vec::new();
    let mut rows = vec![0usize; len];
    fn fill(
        k: usize,
        cap: usize,
        by_label: &[usize],
        rows: &mut Vec<usize>,
        out: &mut Vec<AntitoneMap>,
    ) {
        if k == by_label.len() {
            if rows[0] > rows[rows.len() - 1] {
                out.push(AntitoneMap { rows: rows.clone() });
            }
            return;
        }
        for value in 1..=cap {
            rows[by_label[k]] = value;
            fill(k + 1, value, by_label, rows, out);
        }
    }
    fill(0, m, &by_label, &mut rows, &mut out);
    out.sort();
    out
}
