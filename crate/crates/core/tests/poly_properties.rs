use std::cmp::Ordering;

use num_rational::BigRational;
use proptest::prelude::*;

use gbei_core::poly::{
    buchberger, is_groebner_basis, is_reduced, normal_form, Coefficient, IdealPresentation,
    Monomial, Polynomial, VarGrid,
};

const NVARS: usize = 4;

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u16..2, NVARS).prop_map(Monomial::from_exponents)
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((arb_monomial(), -2i64..=2), 1..3).prop_map(|terms| {
        Polynomial::from_terms(
            NVARS,
            terms
                .into_iter()
                .map(|(m, c)| (m, BigRational::from_integer(c.into()))),
        )
    })
}

fn arb_gens() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(arb_poly(), 1..3)
        .prop_map(|v| v.into_iter().filter(|p| !p.is_zero()).collect::<Vec<_>>())
        .prop_filter("nonzero generators", |v| !v.is_empty())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lex_order_is_multiplicative(a in arb_monomial(), b in arb_monomial(), c in arb_monomial()) {
        prop_assert_eq!(a.compare(&b), a.mul(&c).compare(&b.mul(&c)));
        prop_assert_eq!(a.compare(&b), b.compare(&a).reverse());
        prop_assert!(a.compare(&Monomial::one(NVARS)) != Ordering::Less);
    }

    #[test]
    fn buchberger_output_is_reduced_basis(gens in arb_gens()) {
        let gb = buchberger(&gens);
        prop_assert!(is_groebner_basis(&gb));
        prop_assert!(is_reduced(&gb));
        for g in &gens {
            prop_assert!(normal_form(g, &gb).is_zero());
        }
        let mut reversed = gens.clone();
        reversed.reverse();
        prop_assert_eq!(buchberger(&reversed), gb);
    }

    #[test]
    fn normal_form_difference_lies_in_ideal(gens in arb_gens(), f in arb_poly()) {
        let gb = buchberger(&gens);
        let r = normal_form(&f, &gb);
        prop_assert!(normal_form(&f.sub(&r), &gb).is_zero());
        for (m, _) in r.terms() {
            prop_assert!(gb.iter().all(|g| !g.leading_monomial().unwrap().divides(m)));
        }
    }

    #[test]
    fn intersection_is_contained_in_both(a in arb_gens(), b in arb_gens()) {
        let i = IdealPresentation::new(NVARS, a.clone());
        let j = IdealPresentation::new(NVARS, b.clone());
        let meet = i.intersect(&j);
        prop_assert!(i.contains_ideal(&meet));
        prop_assert!(j.contains_ideal(&meet));
        for f in &a {
            for g in &b {
                prop_assert!(meet.contains(&f.mul(g)));
            }
        }
    }
}

#[test]
fn lex_examples() {
    let grid = VarGrid::new(2, 3).unwrap();
    assert_eq!(grid.var(1, 1).compare(&grid.var(1, 2)), Ordering::Greater);
    assert_eq!(grid.var(1, 3).compare(&grid.var(2, 1)), Ordering::Greater);
    assert_eq!(grid.var(2, 2).compare(&grid.var(2, 2)), Ordering::Equal);
}

#[test]
fn leading_terms() {
    let grid = VarGrid::new(2, 2).unwrap();
    let minor = Polynomial::binomial(
        grid.var(1, 1).mul(&grid.var(2, 2)),
        grid.var(2, 1).mul(&grid.var(1, 2)),
    );
    assert_eq!(minor.leading_term().unwrap().0, &grid.var(1, 1).mul(&grid.var(2, 2)));
    let x11 = grid.var(1, 1);
    let collected = Polynomial::from_terms(
        4,
        [
            (x11.clone(), Coefficient::from_integer(3.into())),
            (x11.clone(), Coefficient::from_integer((-1).into())),
        ],
    );
    assert_eq!(
        collected.leading_term().unwrap(),
        (&x11, &Coefficient::from_integer(2.into()))
    );
    assert!(Polynomial::zero(4).leading_term().is_err());
    assert_eq!(buchberger(&[minor.clone()]), vec![minor]);
}
