use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, VariableNames};
use super::PolyError;

pub type Coefficient = BigRational;

/// A polynomial with exact rational coefficients. Terms are kept sorted by
/// strictly descending monomial and never carry a zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Coefficient)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::monomial(Monomial::one(nvars), Coefficient::one())
    }

    pub fn monomial(m: Monomial, c: Coefficient) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Polynomial::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(m, c)],
        }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Polynomial::monomial(m, Coefficient::one())
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Coefficient)>) -> Self {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Coefficient)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match out.last_mut() {
                Some((last, acc)) if *last == m => *acc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { nvars, terms: out }
    }

    /// `a - b` for two monomials, both with coefficient one.
    pub fn binomial(a: Monomial, b: Monomial) -> Self {
        let nvars = a.nvars();
        Polynomial::from_terms(nvars, [(a, Coefficient::one()), (b, -Coefficient::one())])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Coefficient)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The order-maximal term.
    pub fn leading_term(&self) -> Result<(&Monomial, &Coefficient), PolyError> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Coefficient> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            // multiplication by a monomial preserves the term order
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.nvars);
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(m, c));
        }
        acc
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, true)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Coefficient::one())
    }

    /// `self - c * m * other`.
    pub fn sub_scaled(&self, m: &Monomial, c: &Coefficient, other: &Polynomial) -> Polynomial {
        self.sub(&other.mul_term(m, c))
    }

    /// `self - c * m * (other - lt(other))`.
    pub(crate) fn sub_scaled_tail(&self, m: &Monomial, c: &Coefficient, other: &Polynomial) -> Polynomial {
        let tail = Polynomial {
            nvars: other.nvars,
            terms: other.terms[1..]
                .iter()
                .map(|(t, a)| (t.mul(m), a * c))
                .collect(),
        };
        self.sub(&tail)
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Monomial, Coefficient)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    fn combine(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().expect("peeked").clone()),
                (None, Some(_)) => {
                    let (m, c) = b.next().expect("peeked");
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                }
                (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                    Ordering::Greater => out.push(a.next().expect("peeked").clone()),
                    Ordering::Less => {
                        let (m, c) = b.next().expect("peeked");
                        out.push((m.clone(), if negate { -c } else { c.clone() }));
                    }
                    Ordering::Equal => {
                        let (m, ca) = a.next().expect("peeked");
                        let (_, cb) = b.next().expect("peeked");
                        let c = if negate { ca - cb } else { ca + cb };
                        if !c.is_zero() {
                            out.push((m.clone(), c));
                        }
                    }
                },
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    /// Whether variable 0 occurs in any term.
    pub fn involves_leading_var(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(0) > 0)
    }

    /// Multiplies every monomial by `t^exponent` for a new variable `t` at index 0.
    pub fn with_leading_var(&self, exponent: u16) -> Polynomial {
        Polynomial {
            nvars: self.nvars + 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_leading_var(exponent), c.clone()))
                .collect(),
        }
    }

    /// Drops variable 0; only meaningful when it does not occur.
    pub fn without_leading_var(&self) -> Polynomial {
        debug_assert!(!self.involves_leading_var());
        Polynomial {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.without_leading_var(), c.clone()))
                .collect(),
        }
    }

    /// Text form: terms in descending order, `*` products, `^` exponents,
    /// rational coefficients as `p/q`, e.g. `x[1,1]*x[2,2] - x[1,2]*x[2,1]`.
    pub fn render(&self, names: &impl VariableNames) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.render(names));
            } else {
                out.push_str(&format!("{}*{}", abs, m.render(names)));
            }
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        struct Anon;
        impl VariableNames for Anon {
            fn name(&self, index: usize) -> String {
                format!("v{}", index)
            }
        }
        write!(f, "Polynomial({})", self.render(&Anon))
    }
}
