use crate::poly::{minimal_generators, Monomial};

use super::rank::rank;
use super::{HomologyError, HOMOLOGY_MAX_VERTICES};

/// A simplicial complex on vertices `0..N`, stored by its minimal nonfaces
/// as bit masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    nonfaces: Vec<u64>,
}

impl SimplicialComplex {
    /// The Stanley–Reisner complex of the ideal generated by `gens` in
    /// `vertex_count` variables. Non-minimal generators are pruned.
    pub fn stanley_reisner(gens: &[Monomial], vertex_count: usize) -> Result<Self, HomologyError> {
        if vertex_count > 64 {
            return Err(HomologyError::TooManyVertices {
                n: vertex_count,
                limit: 64,
            });
        }
        for (index, g) in gens.iter().enumerate() {
            if g.nvars() != vertex_count {
                return Err(HomologyError::VariableCount {
                    index,
                    found: g.nvars(),
                    expected: vertex_count,
                });
            }
            if !g.is_squarefree() {
                return Err(HomologyError::NotSquarefree { index });
            }
            if g.is_one() {
                return Err(HomologyError::UnitIdeal);
            }
        }
        let nonfaces = minimal_generators(gens)
            .iter()
            .map(|g| g.support().fold(0u64, |acc, v| acc | 1 << v))
            .collect();
        Ok(SimplicialComplex {
            vertex_count,
            nonfaces,
        })
    }

    pub fn from_nonfaces(vertex_count: usize, nonfaces: Vec<u64>) -> Self {
        let mut minimal: Vec<u64> = nonfaces
            .iter()
            .copied()
            .filter(|&a| !nonfaces.iter().any(|&b| b != a && b & a == b))
            .collect();
        minimal.sort_unstable();
        minimal.dedup();
        SimplicialComplex {
            vertex_count,
            nonfaces: minimal,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn minimal_nonfaces(&self) -> &[u64] {
        &self.nonfaces
    }

    pub fn is_face(&self, set: u64) -> bool {
        self.nonfaces.iter().all(|&nf| nf & set != nf)
    }

    /// Faces of the subcomplex induced on `within`, grouped by size:
    /// `result[k]` lists the faces with `k` vertices in increasing mask order.
    pub fn faces_within(&self, within: u64) -> Vec<Vec<u64>> {
        let relevant: Vec<u64> = self
            .nonfaces
            .iter()
            .copied()
            .filter(|&nf| nf & within == nf)
            .collect();
        let verts: Vec<u32> = (0..64).filter(|&v| within >> v & 1 == 1).collect();
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); verts.len() + 1];
        fn grow(
            face: u64,
            size: usize,
            start: usize,
            verts: &[u32],
            relevant: &[u64],
            by_size: &mut Vec<Vec<u64>>,
        ) {
            by_size[size].push(face);
            for k in start..verts.len() {
                let bit = 1u64 << verts[k];
                let next = face | bit;
                if relevant.iter().all(|&nf| nf & bit == 0 || nf & next != nf) {
                    grow(next, size + 1, k + 1, verts, relevant, by_size);
                }
            }
        }
        grow(0, 0, 0, &verts, &relevant, &mut by_size);
        while by_size.len() > 1 && by_size.last().is_some_and(|f| f.is_empty()) {
            by_size.pop();
        }
        for layer in &mut by_size {
            layer.sort_unstable();
        }
        by_size
    }

    /// `f_{k-1}` for `k = 0..`: the number of faces with `k` vertices.
    pub fn f_vector(&self) -> Vec<u64> {
        self.faces_within(full_mask(self.vertex_count))
            .iter()
            .map(|l| l.len() as u64)
            .collect()
    }

    /// Some vertex of `within` lies in no minimal nonface inside `within`,
    /// so the induced subcomplex is a cone and has no reduced homology.
    pub fn is_cone_within(&self, within: u64) -> bool {
        let covered = self
            .nonfaces
            .iter()
            .filter(|&&nf| nf & within == nf)
            .fold(0u64, |acc, &nf| acc | nf);
        covered != within
    }

    /// Ranks of `H̃_d` of the subcomplex induced on `within` for
    /// `d = -1, 0, …, |within| - 1`; entry `k` holds dimension `k - 1`.
    pub fn reduced_homology_ranks(&self, within: u64) -> Result<Vec<usize>, HomologyError> {
        let size = within.count_ones() as usize;
        if size > HOMOLOGY_MAX_VERTICES {
            return Err(HomologyError::TooManyVertices {
                n: size,
                limit: HOMOLOGY_MAX_VERTICES,
            });
        }
        let mut out = vec![0usize; size + 1];
        if within != 0 && self.is_cone_within(within) {
            return Ok(out);
        }
        let faces = self.faces_within(within);
        // ranks[k] = rank of the boundary map from faces with k vertices to k - 1
        let mut ranks = vec![0usize; faces.len() + 1];
        for k in 1..faces.len() {
            ranks[k] = boundary_rank(&faces[k - 1], &faces[k]);
        }
        for k in 0..faces.len() {
            out[k] = faces[k].len() - ranks[k] - ranks[k + 1];
        }
        Ok(out)
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn boundary_rank(lower: &[u64], upper: &[u64]) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<(u32, i64)>> = upper
        .iter()
        .map(|&face| {
            let mut row: Vec<(u32, i64)> = Vec::new();
            let mut rest = face;
            let mut position = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                let col = lower
                    .binary_search(&(face & !bit))
                    .expect("boundary face of a face is a face");
                row.push((col as u32, if position % 2 == 0 { 1 } else { -1 }));
                position += 1;
                rest &= rest - 1;
            }
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect();
    rank(&rows, lower.len())
}

/// `ht I`: the smallest vertex cover of the hypergraph of generator supports.
pub fn height(complex: &SimplicialComplex) -> usize {
    let n = complex.vertex_count;
    let edges = complex.minimal_nonfaces();
    if edges.is_empty() {
        return 0;
    }
    let covers = |set: u64| edges.iter().all(|&e| e & set != 0);
    for k in 1..=n {
        let mut found = false;
        for_each_subset_of_size(n, k, |s| {
            if !found && covers(s) {
                found = true;
            }
        });
        if found {
            return k;
        }
    }
    n
}

fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(u64)) {
    if k == 0 {
        f(0);
        return;
    }
    if k > n {
        return;
    }
    let limit = full_mask(n);
    let mut s: u64 = (1u64 << k) - 1;
    loop {
        f(s);
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r & !limit != 0 {
            break;
        }
        s = (((r ^ s) >> 2) / c) | r;
        if s & !limit != 0 {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(vs: &[u32]) -> u64 {
        vs.iter().fold(0, |a, &v| a | 1 << v)
    }

    #[test]
    fn boundary_of_triangle() {
        let k = SimplicialComplex::from_nonfaces(3, vec![mask(&[0, 1, 2])]);
        assert_eq!(k.reduced_homology_ranks(mask(&[0, 1, 2])).unwrap(), vec![0, 0, 1, 0]);
    }

    #[test]
    fn simplex_is_acyclic() {
        let k = SimplicialComplex::from_nonfaces(4, vec![]);
        assert_eq!(k.reduced_homology_ranks(0b1111).unwrap(), vec![0; 5]);
        assert_eq!(k.reduced_homology_ranks(0).unwrap(), vec![1]);
    }

    #[test]
    fn two_points() {
        let k = SimplicialComplex::from_nonfaces(2, vec![0b11]);
        assert_eq!(k.reduced_homology_ranks(0b11).unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn octahedron_boundary_is_a_sphere() {
        let k = SimplicialComplex::from_nonfaces(6, vec![0b11, 0b1100, 0b110000]);
        assert_eq!(
            k.reduced_homology_ranks(0b111111).unwrap(),
            vec![0, 0, 0, 1, 0, 0, 0]
        );
        assert_eq!(k.f_vector(), vec![1, 6, 12, 8]);
    }

    #[test]
    fn empty_complex() {
        let k = SimplicialComplex::from_nonfaces(3, vec![1, 2, 4]);
        assert_eq!(k.f_vector(), vec![1]);
        assert_eq!(height(&k), 3);
    }

    #[test]
    fn cone_detection() {
        let k = SimplicialComplex::from_nonfaces(3, vec![0b011]);
        assert!(k.is_cone_within(0b111));
        assert!(!k.is_cone_within(0b011));
    }

    #[test]
    fn subset_sizes() {
        for n in 0..8 {
            for k in 0..=n {
                let mut count = 0u64;
                for_each_subset_of_size(n, k, |s| {
                    assert_eq!(s.count_ones() as usize, k);
                    assert!(s < 1 << n);
                    count += 1;
                });
                let binom = (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1));
                assert_eq!(count, binom, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn rejects_bad_generators() {
        let sq = Monomial::from_exponents(vec![2, 0]);
        assert_eq!(
            SimplicialComplex::stanley_reisner(&[sq], 2),
            Err(HomologyError::NotSquarefree { index: 0 })
        );
        assert_eq!(
            SimplicialComplex::stanley_reisner(&[Monomial::one(2)], 2),
            Err(HomologyError::UnitIdeal)
        );
        let limit = SimplicialComplex::from_nonfaces(17, vec![]);
        assert!(limit.reduced_homology_ranks((1 << 17) - 1).is_err());
    }
}
