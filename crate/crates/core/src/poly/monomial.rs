use std::cmp::Ordering;
use std::fmt;

use super::PolyError;

/// The `m × n` grid of variables `x[i,j]`, indexed row-major so that index
/// order is the variable precedence `x[1,1] > … > x[1,n] > x[2,1] > … > x[m,n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarGrid {
    m: usize,
    n: usize,
}

impl VarGrid {
    pub fn new(m: usize, n: usize) -> Result<Self, PolyError> {
        if m < 2 {
            return Err(PolyError::TooFewRows(m));
        }
        if n < 1 {
            return Err(PolyError::NoColumns);
        }
        Ok(VarGrid { m, n })
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn var_count(&self) -> usize {
        self.m * self.n
    }

    /// Index of `x[row, col]` (both 1-based).
    pub fn index(&self, row: usize, col: usize) -> usize {
        debug_assert!((1..=self.m).contains(&row) && (1..=self.n).contains(&col));
        (row - 1) * self.n + (col - 1)
    }

    /// `(row, col)` of a variable index.
    pub fn position(&self, index: usize) -> (usize, usize) {
        (index / self.n + 1, index % self.n + 1)
    }

    pub fn var(&self, row: usize, col: usize) -> Monomial {
        Monomial::variable(self.var_count(), self.index(row, col))
    }

    /// Indices of the variables `x[1,col], …, x[m,col]`.
    pub fn column(&self, col: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.m).map(move |row| self.index(row, col))
    }
}

/// Supplies display names for variable indices.
pub trait VariableNames {
    fn name(&self, index: usize) -> String;
}

impl VariableNames for VarGrid {
    fn name(&self, index: usize) -> String {
        let (i, j) = self.position(index);
        format!("x[{},{}]", i, j)
    }
}

/// A grid extended by an auxiliary variable `t` at index 0, ranked above
/// every grid variable (the elimination order used for intersections).
#[derive(Clone, Copy, Debug)]
pub struct WithAuxiliary<'a>(pub &'a VarGrid);

impl VariableNames for WithAuxiliary<'_> {
    fn name(&self, index: usize) -> String {
        if index == 0 {
            "t".to_string()
        } else {
            self.0.name(index - 1)
        }
    }
}

/// A monomial as a dense exponent vector. Comparison is lexicographic with
/// index 0 the most significant variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u16>) -> Self {
        Monomial(exponents)
    }

    /// Product of the given variables (with repetition).
    pub fn product(nvars: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut e = vec![0; nvars];
        for i in indices {
            e[i] += 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.0[index]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Prepends a variable with the given exponent at index 0.
    pub fn with_leading_var(&self, exponent: u16) -> Monomial {
        let mut e = Vec::with_capacity(self.0.len() + 1);
        e.push(exponent);
        e.extend_from_slice(&self.0);
        Monomial(e)
    }

    /// Drops the variable at index 0.
    pub fn without_leading_var(&self) -> Monomial {
        Monomial(self.0[1..].to_vec())
    }

    /// Lexicographic comparison under the fixed variable precedence.
    pub fn compare(&self, other: &Monomial) -> Ordering {
        self.cmp(other)
    }

    pub fn render(&self, names: &impl VariableNames) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names.name(i)),
                _ => parts.push(format!("{}^{}", names.name(i), e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({:?})", self.0)
    }
}

/// Minimal generators of the monomial ideal generated by `gens`, sorted
/// descending. Duplicates are collapsed.
pub fn minimal_generators(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| m.degree());
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// Whether two monomial ideals coincide, compared through their minimal generators.
pub fn monomial_ideal_equal(a: &[Monomial], b: &[Monomial]) -> bool {
    minimal_generators(a) == minimal_generators(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_precedence() {
        let g = VarGrid::new(2, 3).unwrap();
        assert_eq!(g.var(1, 1).compare(&g.var(1, 2)), Ordering::Greater);
        assert_eq!(g.var(1, 3).compare(&g.var(2, 1)), Ordering::Greater);
        let a = g.var(1, 2).mul(&g.var(2, 1));
        assert_eq!(a.compare(&a), Ordering::Equal);
        // x11*x22 vs x21*x12
        let lead = g.var(1, 1).mul(&g.var(2, 2));
        let other = g.var(2, 1).mul(&g.var(1, 2));
        assert_eq!(lead.compare(&other), Ordering::Greater);
        // lex, not degree-first
        let high = g.var(2, 3).mul(&g.var(2, 3)).mul(&g.var(2, 2));
        assert_eq!(g.var(1, 3).compare(&high), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let g = VarGrid::new(2, 2).unwrap();
        let x11 = g.var(1, 1);
        let x22 = g.var(2, 2);
        let p = x11.mul(&x22);
        assert!(x11.divides(&p));
        assert!(!p.divides(&x11));
        assert_eq!(p.div(&x11), Some(x22.clone()));
        assert_eq!(x11.div(&x22), None);
        assert_eq!(x11.lcm(&x22), p);
        assert!(x11.gcd_is_one(&x22));
        assert!(p.is_squarefree());
        assert!(!p.mul(&x11).is_squarefree());
    }

    #[test]
    fn rendering() {
        let g = VarGrid::new(2, 3).unwrap();
        let m = g.var(2, 1).mul(&g.var(1, 2)).mul(&g.var(1, 2));
        assert_eq!(m.render(&g), "x[1,2]^2*x[2,1]");
        assert_eq!(Monomial::one(6).render(&g), "1");
        let ext = g.var(1, 1).with_leading_var(1);
        assert_eq!(ext.render(&WithAuxiliary(&g)), "t*x[1,1]");
    }

    #[test]
    fn monomial_ideals() {
        let g = VarGrid::new(2, 2).unwrap();
        let x11 = g.var(1, 1);
        let x12 = g.var(1, 2);
        assert!(monomial_ideal_equal(&[x11.clone(), x11.mul(&x12)], &[x11.clone()]));
        let a = x11.mul(&g.var(2, 2));
        let b = g.var(2, 1).mul(&x12);
        assert!(!monomial_ideal_equal(&[a], &[b]));
    }

    #[test]
    fn grid_indexing() {
        let g = VarGrid::new(3, 4).unwrap();
        for idx in 0..12 {
            let (i, j) = g.position(idx);
            assert_eq!(g.index(i, j), idx);
        }
        assert_eq!(g.column(2).collect::<Vec<_>>(), vec![1, 5, 9]);
        assert!(VarGrid::new(1, 3).is_err());
    }
}
