//! Exact rank of sparse integer matrices by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed, Zero};

type SparseRow<T> = Vec<(u32, T)>;

/// Rank over the rationals of the matrix whose rows are given as sorted
/// `(column, value)` lists. Runs in `i128` and falls back to big integers
/// if an intermediate value overflows.
pub fn rank(rows: &[Vec<(u32, i64)>], cols: usize) -> usize {
    let small: Vec<SparseRow<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, v as i128)).collect())
        .collect();
    if let Some(r) = sparse_rank(small, cols) {
        return r;
    }
    let big: Vec<SparseRow<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    sparse_rank(big, cols).expect("big integers do not overflow")
}

/// Row echelon form built one row at a time. Each incoming row is reduced
/// against the pivot row for its leading column by `p·row - a·pivot` and
/// then divided by its content, which keeps entries small.
fn sparse_rank<T>(rows: Vec<SparseRow<T>>, cols: usize) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let mut pivots: Vec<Option<SparseRow<T>>> = vec![None; cols];
    let mut rank = 0;
    let mut order: Vec<SparseRow<T>> = rows;
    order.sort_by_key(|r| r.len());
    for mut row in order {
        loop {
            let Some((lead, _)) = row.first() else { break };
            let lead = *lead as usize;
            match &pivots[lead] {
                None => {
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
                Some(pivot) => {
                    row = eliminate(&row, pivot)?;
                }
            }
        }
    }
    Some(rank)
}

fn eliminate<T>(row: &SparseRow<T>, pivot: &SparseRow<T>) -> Option<SparseRow<T>>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let p = pivot[0].1.clone();
    let a = row[0].1.clone();
    let g = p.gcd(&a);
    let (p, a) = (p.div_floor(&g), a.div_floor(&g));
    let mut out: SparseRow<T> = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, value) = if take_row {
            let v = row[i].1.checked_mul(&p)?;
            i += 1;
            (row[i - 1].0, v)
        } else if take_pivot {
            let v = T::zero().checked_sub(&pivot[j].1.checked_mul(&a)?)?;
            j += 1;
            (pivot[j - 1].0, v)
        } else {
            let v = row[i].1.checked_mul(&p)?.checked_sub(&pivot[j].1.checked_mul(&a)?)?;
            i += 1;
            j += 1;
            (row[i - 1].0, v)
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    let content = out
        .iter()
        .fold(T::zero(), |acc, (_, v)| acc.gcd(v));
    if !content.is_zero() && content != T::one() {
        for (_, v) in &mut out {
            *v = v.div_floor(&content);
        }
    }
    Some(out)
}

/// Rank of a dense integer matrix by Bareiss elimination over big integers.
pub fn bareiss_rank(matrix: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_row);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}
