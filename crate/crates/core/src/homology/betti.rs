use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::poly::Monomial;

use super::complex::SimplicialComplex;
use super::{HomologyError, HOCHSTER_MAX_VARIABLES};

/// Graded Betti numbers `β_{i,j}` of `S/I`; only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut table = BettiTable::default();
        for ((i, j), b) in entries {
            table.add(i, j, b);
        }
        table
    }

    fn add(&mut self, i: usize, j: usize, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by `(i, j)`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(k, _), _)| k == i)
            .map(|(_, &b)| b)
            .sum()
    }

    /// The usual triangular display: column `i`, row `j - i`, `.` for zero.
    pub fn render(&self) -> String {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let mut grid: Vec<(String, Vec<String>)> = Vec::new();
        grid.push((String::new(), (0..=pd).map(|i| i.to_string()).collect()));
        grid.push((
            "total:".to_string(),
            (0..=pd).map(|i| self.total(i).to_string()).collect(),
        ));
        for r in 0..=reg {
            grid.push((
                format!("{r}:"),
                (0..=pd)
                    .map(|i| match self.get(i, i + r) {
                        0 => ".".to_string(),
                        b => b.to_string(),
                    })
                    .collect(),
            ));
        }
        let label_width = grid.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..=pd)
            .map(|c| grid.iter().map(|(_, cells)| cells[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for (label, cells) in &grid {
            let mut line = format!("{label:>label_width$}");
            for (cell, w) in cells.iter().zip(&widths) {
                line.push(' ');
                line.push_str(&format!("{cell:>w$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ|_σ)` summed over all `σ` of size `j`.
/// Subsets are processed by increasing size, each size in parallel.
pub fn hochster_betti(gens: &[Monomial], nvars: usize) -> Result<BettiTable, HomologyError> {
    if nvars > HOCHSTER_MAX_VARIABLES {
        return Err(HomologyError::TooManyVertices {
            n: nvars,
            limit: HOCHSTER_MAX_VARIABLES,
        });
    }
    let complex = SimplicialComplex::stanley_reisner(gens, nvars)?;
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); nvars + 1];
    for s in 0..(1u64 << nvars) {
        by_size[s.count_ones() as usize].push(s);
    }
    let mut table = BettiTable::default();
    for (j, layer) in by_size.iter().enumerate() {
        let contributions: Vec<(usize, u64)> = layer
            .par_iter()
            .map(|&sigma| complex.reduced_homology_ranks(sigma))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .flat_map(|ranks| {
                // entry k is H̃_{k-1}, which contributes to i = j - k
                ranks
                    .into_iter()
                    .enumerate()
                    .filter(|&(k, r)| r > 0 && k <= j)
                    .map(move |(k, r)| (j - k, r as u64))
            })
            .collect();
        for (i, b) in contributions {
            table.add(i, j, b);
        }
    }
    Ok(table)
}

/// `depth S/I = N - projdim S/I`.
pub fn depth_of_quotient(gens: &[Monomial], nvars: usize) -> Result<usize, HomologyError> {
    Ok(nvars - hochster_betti(gens, nvars)?.projective_dimension())
}

pub fn regularity_of_quotient(gens: &[Monomial], nvars: usize) -> Result<usize, HomologyError> {
    Ok(hochster_betti(gens, nvars)?.regularity())
}

/// Coefficients of `Σ_{i,j} (-1)^i β_{i,j} t^j`, indexed by `j`, length `nvars + 1`.
pub fn hilbert_numerator_from_betti(table: &BettiTable, nvars: usize) -> Vec<i128> {
    let mut out = vec![0i128; nvars + 1];
    for (&(i, j), &b) in table.entries() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        out[j] += sign * b as i128;
    }
    out
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The Hilbert series numerator of `S/I` recomputed from scratch: count
/// standard monomials of each degree `d ≤ N` through their supports
/// (a face with `k ≥ 1` vertices carries `C(d-1, k-1)` of them) and
/// multiply by `(1 - t)^N`, truncated at degree `N`.
pub fn hilbert_numerator_from_faces(complex: &SimplicialComplex) -> Vec<i128> {
    let n = complex.vertex_count();
    let f = complex.f_vector();
    let hilbert: Vec<i128> = (0..=n as i128)
        .map(|d| {
            if d == 0 {
                return 1;
            }
            f.iter()
                .enumerate()
                .skip(1)
                .map(|(k, &count)| count as i128 * binomial(d - 1, k as i128 - 1))
                .sum()
        })
        .collect();
    (0..=n)
        .map(|j| {
            (0..=j)
                .map(|a| {
                    let sign = if a % 2 == 0 { 1 } else { -1 };
                    sign * binomial(n as i128, a as i128) * hilbert[j - a]
                })
                .sum()
        })
        .collect()
}

/// Whether the Betti numbers reproduce the Hilbert series numerator.
pub fn hilbert_series_consistent(table: &BettiTable, complex: &SimplicialComplex) -> bool {
    hilbert_numerator_from_betti(table, complex.vertex_count()) == hilbert_numerator_from_faces(complex)
}
