//! Monomials in `x, y, z, w` under graded reverse lexicographic order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

pub const NVARS: usize = 4;
pub const VAR_NAMES: [char; NVARS] = ['x', 'y', 'z', 'w'];

/// A monomial `x^a y^b z^c w^d`. Exponents are bounded by 255 per variable,
/// far above anything reachable in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exp: [u8; NVARS],
    deg: u16,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exp: [0; NVARS], deg: 0 };

    pub fn new(exp: [u8; NVARS]) -> Self {
        let deg = exp.iter().map(|&e| e as u16).sum();
        Monomial { exp, deg }
    }

    pub fn var(i: usize) -> Self {
        let mut exp = [0; NVARS];
        exp[i] = 1;
        Monomial { exp, deg: 1 }
    }

    #[inline]
    pub fn exponents(&self) -> [u8; NVARS] {
        self.exp
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u8 {
        self.exp[i]
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.deg as usize
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exp = self.exp;
        for (e, o) in exp.iter_mut().zip(other.exp) {
            *e = e.checked_add(o).expect("monomial exponent overflow");
        }
        Monomial { exp, deg: self.deg + other.deg }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exp.iter().zip(other.exp).all(|(a, b)| *a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exp = other.exp;
        for (e, s) in exp.iter_mut().zip(self.exp) {
            *e -= s;
        }
        Some(Monomial { exp, deg: other.deg - self.deg })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exp = self.exp;
        for (e, o) in exp.iter_mut().zip(other.exp) {
            *e = (*e).max(o);
        }
        Monomial::new(exp)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exp = self.exp;
        for (e, o) in exp.iter_mut().zip(other.exp) {
            *e = (*e).min(o);
        }
        Monomial::new(exp)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exp.iter().zip(other.exp).all(|(a, b)| *a == 0 || b == 0)
    }

    /// Grevlex comparison with `x > y > z > w`.
    #[inline]
    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..NVARS).rev() {
            match self.exp[i].cmp(&other.exp[i]) {
                Ordering::Equal => continue,
                // smaller power of the last differing variable wins
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    /// Monomial with variables relabelled by `perm`: variable `i` goes to `perm[i]`.
    pub fn permute(&self, perm: &[usize; NVARS]) -> Monomial {
        let mut exp = [0; NVARS];
        for i in 0..NVARS {
            exp[perm[i]] = self.exp[i];
        }
        Monomial { exp, deg: self.deg }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", VAR_NAMES[i])?;
            } else {
                write!(f, "{}^{}", VAR_NAMES[i], e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The monomials of one degree in descending grevlex order, with a reverse
/// index. Column `j` of every dense vector over `R_n` is `monomials[j]`.
#[derive(Debug)]
pub struct MonomialBasis {
    degree: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    fn build(n: usize) -> Self {
        let mut monomials = Vec::with_capacity(dim_r(n as i64));
        for a in 0..=n {
            for b in 0..=n - a {
                for c in 0..=n - a - b {
                    let d = n - a - b - c;
                    monomials.push(Monomial::new([a as u8, b as u8, c as u8, d as u8]));
                }
            }
        }
        monomials.sort_by(|a, b| b.cmp(a));
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        MonomialBasis { degree: n, monomials, index }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    #[inline]
    pub fn get(&self, i: usize) -> Monomial {
        self.monomials[i]
    }

    #[inline]
    pub fn index_of(&self, m: &Monomial) -> usize {
        self.index[m]
    }
}

/// Largest degree the shared basis cache will build.
pub const MAX_CACHED_DEGREE: usize = 64;

fn cache() -> &'static RwLock<Vec<Option<Arc<MonomialBasis>>>> {
    static CACHE: OnceLock<RwLock<Vec<Option<Arc<MonomialBasis>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![None; MAX_CACHED_DEGREE + 1]))
}

/// Shared, lazily built basis of `R_n`.
pub fn basis(n: usize) -> Arc<MonomialBasis> {
    assert!(n <= MAX_CACHED_DEGREE, "degree {n} beyond supported range");
    if let Some(b) = &cache().read().unwrap()[n] {
        return b.clone();
    }
    let built = Arc::new(MonomialBasis::build(n));
    let mut guard = cache().write().unwrap();
    guard[n].get_or_insert(built).clone()
}

/// All monomials of degree `n`, descending grevlex.
pub fn monomial_basis(n: i64) -> Result<Vec<Monomial>> {
    if n < 0 {
        return Err(Error::Argument(format!("negative degree {n}")));
    }
    if n as usize > MAX_CACHED_DEGREE {
        return Err(Error::Argument(format!("degree {n} beyond supported range")));
    }
    Ok(basis(n as usize).monomials().to_vec())
}

/// `dim R_n = binom(n+3, 3)`, zero for negative `n`.
pub fn dim_r(n: i64) -> usize {
    if n < 0 {
        return 0;
    }
    let n = n as usize;
    (n + 1) * (n + 2) * (n + 3) / 6
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn stars_and_bars(n: usize) -> usize {
        // count 4-tuples summing to n directly
        let mut c = 0;
        for a in 0..=n {
            for b in 0..=n {
                for d in 0..=n {
                    if a + b + d <= n {
                        c += 1;
                    }
                }
            }
        }
        c
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(0).unwrap(), vec![Monomial::ONE]);
        assert_eq!(monomial_basis(1).unwrap().len(), 4);
        assert_eq!(monomial_basis(4).unwrap().len(), stars_and_bars(4));
        assert_eq!(stars_and_bars(4), 35);
        assert!(monomial_basis(-1).is_err());
        for n in 0..10 {
            assert_eq!(dim_r(n as i64), stars_and_bars(n));
        }
    }

    #[test]
    fn degree_one_order() {
        let b = monomial_basis(1).unwrap();
        let names: Vec<String> = b.iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["x", "y", "z", "w"]);
        // grevlex: y^2 > x*z
        let y2 = Monomial::new([0, 2, 0, 0]);
        let xz = Monomial::new([1, 0, 1, 0]);
        assert!(y2 > xz);
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        prop::array::uniform4(0u8..6).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn grevlex_is_multiplicative(u in mono(), v in mono(), w in mono()) {
            if u < v {
                prop_assert!(u.mul(&w) < v.mul(&w));
            }
            prop_assert_eq!(u.cmp(&v) == Ordering::Equal, u == v);
        }
    }
}
