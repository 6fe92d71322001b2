//! Sparse polynomials in `F_p[x, y, z, w]`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::PrimeField;
use super::monomial::{basis, Monomial, NVARS};

/// Terms are kept sorted in strictly descending grevlex order with nonzero
/// coefficients, so equality of polynomials is structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero(field: PrimeField) -> Self {
        Polynomial { field, terms: Vec::new() }
    }

    pub fn constant(field: PrimeField, c: i64) -> Self {
        Self::term(field, field.from_i64(c), Monomial::ONE)
    }

    pub fn term(field: PrimeField, c: u32, m: Monomial) -> Self {
        let c = c % field.prime();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial { field, terms }
    }

    pub fn var(field: PrimeField, i: usize) -> Self {
        Self::term(field, 1, Monomial::var(i))
    }

    /// Builds a polynomial from arbitrary (monomial, residue) pairs,
    /// combining duplicates.
    pub fn from_terms(field: PrimeField, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Self {
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, c % field.prime());
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { field, terms }
    }

    /// Reads a dense coefficient vector over the basis of `R_n`.
    pub fn from_dense(field: PrimeField, n: usize, coeffs: &[u32]) -> Self {
        let b = basis(n);
        debug_assert_eq!(coeffs.len(), b.len());
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (b.get(i), *c))
            .collect();
        Polynomial { field, terms }
    }

    /// Dense coefficient vector over the basis of `R_n`. The polynomial must be
    /// homogeneous of degree `n` (or zero).
    pub fn to_dense(&self, n: usize) -> Vec<u32> {
        let b = basis(n);
        let mut v = vec![0u32; b.len()];
        for (m, c) in &self.terms {
            assert_eq!(m.degree(), n, "to_dense: term {m} not of degree {n}");
            v[b.index_of(m)] = *c;
        }
        v
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1)
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn scale(&self, c: u32) -> Self {
        if c % self.field.prime() == 0 {
            return Self::zero(self.field);
        }
        let k = self.field;
        Polynomial { field: k, terms: self.terms.iter().map(|(m, a)| (*m, k.mul(*a, c))).collect() }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) => self.scale(self.field.inv(c)),
        }
    }

    pub fn mul_term(&self, c: u32, m: &Monomial) -> Self {
        let k = self.field;
        if c == 0 {
            return Self::zero(k);
        }
        // multiplication by a monomial preserves the order
        Polynomial { field: k, terms: self.terms.iter().map(|(t, a)| (t.mul(m), k.mul(*a, c))).collect() }
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < NVARS);
        let k = self.field;
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(var);
            if e == 0 {
                return None;
            }
            let mut exp = m.exponents();
            exp[var] -= 1;
            let c = k.mul(*c, k.from_i64(e as i64));
            (c != 0).then(|| (Monomial::new(exp), c))
        });
        // lowering one exponent can reorder terms, so re-sort
        Self::from_terms(k, terms)
    }

    /// Relabels variables: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize; NVARS]) -> Self {
        Self::from_terms(self.field, self.terms.iter().map(|(m, c)| (m.permute(perm), *c)))
    }

    /// Exact division by a monomial, if every term is divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let terms: Option<Vec<_>> = self.terms.iter().map(|(t, c)| m.quotient_of(t).map(|q| (q, *c))).collect();
        terms.map(|terms| Polynomial { field: self.field, terms })
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.field, other.field, "polynomials over different prime fields");
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        self.check_field(other);
        let k = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let conv = |c: u32| if negate_other { k.neg(c) } else { c };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, ca) = self.terms[i];
            let (b, cb) = other.terms[j];
            match a.cmp(&b) {
                std::cmp::Ordering::Greater => {
                    out.push((a, ca));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b, conv(cb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = k.add(ca, conv(cb));
                    if c != 0 {
                        out.push((a, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().map(|(m, c)| (*m, conv(*c))));
        Polynomial { field: k, terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        self.check_field(other);
        let k = self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(k);
        }
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(self.len() * other.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = acc.entry(a.mul(b)).or_insert(0);
                *e = k.add(*e, k.mul(*ca, *cb));
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { field: k, terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.field, 1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.product(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.field.prime() - 1)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// Canonical text: terms in descending grevlex order, coefficients printed as
/// their symmetric residues, `*` between factors.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let s = self.field.signed(*c);
            let (neg, a) = (s < 0, s.unsigned_abs());
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            match (a, m.degree()) {
                (_, 0) => write!(f, "{a}")?,
                (1, _) => write!(f, "{m}")?,
                _ => write!(f, "{a}*{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;
    use proptest::prelude::*;

    fn k() -> PrimeField {
        PrimeField::default()
    }

    fn p(s: &str) -> Polynomial {
        parse_poly(s, k()).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x + y") + &p("-x"), p("y"));
        assert_eq!(&p("x*z - y^2") * &p("1"), p("x*z - y^2"));
        // schoolbook expansion: (x+y)(x-y) = x^2 - xy + xy - y^2
        let expanded = Polynomial::from_terms(
            k(),
            [
                (Monomial::new([2, 0, 0, 0]), 1),
                (Monomial::new([1, 1, 0, 0]), k().from_i64(-1)),
                (Monomial::new([1, 1, 0, 0]), 1),
                (Monomial::new([0, 2, 0, 0]), k().from_i64(-1)),
            ],
        );
        assert_eq!(&p("x + y") * &p("x - y"), expanded);
        assert_eq!(expanded, p("x^2 - y^2"));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x^2").partial_derivative(0), p("2*x"));
        assert!(p("x*z - y^2").partial_derivative(3).is_zero());
        assert_eq!(p("x^4 + y^4 + z^4 + w^4").partial_derivative(0), p("4*x^3"));
    }

    #[test]
    fn display_is_canonical() {
        let f = p("3*x^2*y - w^3 + 1 + 0*z");
        assert_eq!(f.to_string(), "3*x^2*y - w^3 + 1");
        assert_eq!(p(&f.to_string()), f);
        assert_eq!(p("y^2 - x*z").to_string(), "y^2 - x*z");
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::array::uniform4(0u8..3), 0u32..32003), 0..6)
            .prop_map(|ts| Polynomial::from_terms(k(), ts.into_iter().map(|(e, c)| (Monomial::new(e), c))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn text_roundtrip(a in small_poly()) {
            prop_assert_eq!(parse_poly(&a.to_string(), k()).unwrap(), a);
        }
    }
}
