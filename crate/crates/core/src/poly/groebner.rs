//! Multivariate division and Buchberger's algorithm under the lex order.
//!
//! Pairs are processed by the normal strategy (smallest lcm degree first) and
//! filtered with the coprime-leading-monomial and chain criteria.

use std::collections::{BTreeSet, HashSet};

use super::monomial::Monomial;
use super::polynomial::{Coefficient, Polynomial};

/// Fully reduced remainder of `f` on division by `basis`: no term of the
/// result is divisible by a leading monomial of `basis`. Zero basis elements
/// are ignored.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let divisors: Vec<(&Monomial, &Coefficient, &Polynomial)> = basis
        .iter()
        .filter_map(|g| {
            let (m, c) = g.leading_term().ok()?;
            Some((m, c, g))
        })
        .collect();
    let nvars = f.nvars();
    let mut p = f.clone();
    let mut remainder: Vec<(Monomial, Coefficient)> = Vec::new();
    while let Some((lm, lc)) = p.pop_leading() {
        match divisors.iter().find(|(m, _, _)| m.divides(&lm)) {
            Some((m, c, g)) => {
                let quotient = lm.div(m).expect("divides");
                let factor = lc / *c;
                // the leading terms cancel; subtract the tail of g only
                p = p.sub_scaled_tail(&quotient, &factor, g);
            }
            None => remainder.push((lm, lc)),
        }
    }
    // remainder terms were produced in descending order
    Polynomial::from_terms(nvars, remainder)
}

/// `S(f, g) = (L / lt(f)) f - (L / lt(g)) g` with `L = lcm(lm f, lm g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&l.div(mf).expect("lcm"), &cf.recip());
    let b = g.mul_term(&l.div(mg).expect("lcm"), &cg.recip());
    a.sub(&b)
}

/// The reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// descending leading monomial. The zero ideal yields an empty basis.
pub fn buchberger(gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let r = normal_form(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    if basis.is_empty() {
        return basis;
    }

    // pending pairs keyed by (lcm degree, lcm, j, i) so the smallest lcm comes first
    let mut queue: BTreeSet<(u32, Monomial, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pair = |queue: &mut BTreeSet<_>, pending: &mut HashSet<_>, basis: &[Polynomial], i: usize, j: usize| {
        let l = basis[i]
            .leading_monomial()
            .expect("nonzero")
            .lcm(basis[j].leading_monomial().expect("nonzero"));
        queue.insert((l.degree(), l, j, i));
        pending.insert((i, j));
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut queue, &mut pending, &basis, i, j);
        }
    }

    while let Some(entry) = queue.pop_first() {
        let (_, lcm, j, i) = entry;
        pending.remove(&(i, j));
        let mi = basis[i].leading_monomial().expect("nonzero");
        let mj = basis[j].leading_monomial().expect("nonzero");
        if mi.gcd_is_one(mj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().expect("nonzero").divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let h = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if h.is_zero() {
            continue;
        }
        basis.push(h.monic());
        let new = basis.len() - 1;
        for k in 0..new {
            push_pair(&mut queue, &mut pending, &basis, k, new);
        }
    }
    reduce_basis(basis)
}

/// Turns a Gröbner basis into the reduced one: drops elements whose leading
/// monomial is divisible by another's, interreduces, normalises to monic and
/// sorts by descending leading monomial.
pub fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().expect("nonzero");
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().expect("nonzero").divides(lm))
        {
            minimal.push(g);
        }
    }
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &minimal[k];
        let (lm, lc) = g.leading_term().expect("nonzero");
        // leading term survives: no other leading monomial divides it
        let tail = g.sub(&Polynomial::monomial(lm.clone(), lc.clone()));
        let r = Polynomial::monomial(lm.clone(), lc.clone()).add(&normal_form(&tail, &others));
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    reduced
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    let nonzero: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    for j in 0..nonzero.len() {
        for i in 0..j {
            let s = s_polynomial(nonzero[i], nonzero[j]);
            if !normal_form(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Monic, and no term of any element is divisible by another element's
/// leading monomial.
pub fn is_reduced(basis: &[Polynomial]) -> bool {
    for (k, g) in basis.iter().enumerate() {
        match g.leading_coefficient() {
            Some(c) if *c == Coefficient::from_integer(1.into()) => {}
            _ => return false,
        }
        for (l, h) in basis.iter().enumerate() {
            if k == l {
                continue;
            }
            let lm = h.leading_monomial().expect("nonzero");
            if g.terms().iter().any(|(m, _)| lm.divides(m)) {
                return false;
            }
        }
    }
    true
}

pub fn leading_monomials(basis: &[Polynomial]) -> Vec<Monomial> {
    basis
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarGrid;

    fn minor(g: &VarGrid, k: usize, l: usize, i: usize, j: usize) -> Polynomial {
        Polynomial::binomial(g.var(k, i).mul(&g.var(l, j)), g.var(l, i).mul(&g.var(k, j)))
    }

    #[test]
    fn normal_form_basics() {
        let g = VarGrid::new(2, 2).unwrap();
        let f = minor(&g, 1, 2, 1, 2);
        assert!(normal_form(&f, &[f.clone()]).is_zero());
        let h = Polynomial::from_monomial(g.var(2, 1));
        assert_eq!(normal_form(&h, &[f.clone()]), h);
        // remainder has no divisible term
        let big = f.mul(&Polynomial::from_monomial(g.var(1, 1))).add(&h);
        assert_eq!(normal_form(&big, &[f]), h);
    }

    #[test]
    fn single_minor_is_its_own_basis() {
        let g = VarGrid::new(2, 2).unwrap();
        let f = minor(&g, 1, 2, 1, 2);
        assert_eq!(buchberger(&[f.scale(&Coefficient::from_integer(3.into()))]), vec![f]);
    }

    #[test]
    fn s_polynomials_of_basis_reduce() {
        let g = VarGrid::new(2, 3).unwrap();
        let gb = buchberger(&[minor(&g, 1, 2, 1, 2), minor(&g, 1, 2, 1, 3)]);
        assert!(is_groebner_basis(&gb));
        assert!(is_reduced(&gb));
        for a in &gb {
            for b in &gb {
                if a != b {
                    assert!(normal_form(&s_polynomial(a, b), &gb).is_zero());
                }
            }
        }
    }

    #[test]
    fn path_two_one_three() {
        // edges {1,2},{1,3}: the basis gains x21 * p_23
        let g = VarGrid::new(2, 3).unwrap();
        let gb = buchberger(&[minor(&g, 1, 2, 1, 2), minor(&g, 1, 2, 1, 3)]);
        let extra = minor(&g, 1, 2, 2, 3).mul(&Polynomial::from_monomial(g.var(2, 1)));
        assert_eq!(gb.len(), 3);
        assert!(gb.contains(&minor(&g, 1, 2, 1, 2)));
        assert!(gb.contains(&minor(&g, 1, 2, 1, 3)));
        assert!(gb.contains(&extra));
    }

    #[test]
    fn idempotent() {
        let g = VarGrid::new(3, 3).unwrap();
        let gens = vec![minor(&g, 1, 2, 1, 2), minor(&g, 1, 3, 2, 3), minor(&g, 2, 3, 1, 3)];
        let gb = buchberger(&gens);
        assert_eq!(buchberger(&gb), gb);
    }

    #[test]
    fn zero_ideal() {
        assert!(buchberger(&[Polynomial::zero(4)]).is_empty());
    }
}
