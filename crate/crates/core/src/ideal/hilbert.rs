//! Hilbert series of monomial ideals.
//!
//! `HS(R/M) = N(t) / (1-t)^4`; the numerator is computed by the pivot
//! recursion `N(M) = N(M + (p)) + t^deg(p) * N(M : p)`.

use crate::ring::{Monomial, NVARS};

/// Keeps only the minimal generators.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator coefficients `N_0, N_1, ...` of the Hilbert series of `R/(gens)`.
pub fn series_numerator(gens: &[Monomial]) -> Vec<i64> {
    let mut n = numerator_rec(minimalize(gens.to_vec()));
    while n.len() > 1 && n.last() == Some(&0) {
        n.pop();
    }
    n
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

fn one_minus_t_pow(d: usize) -> Vec<i64> {
    let mut v = vec![0i64; d + 1];
    v[0] = 1;
    v[d] -= 1;
    v
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_t_pow(g.degree())));
    }
    // pivot on the variable occurring in the most non-pure-power generators
    let mut counts = [0usize; NVARS];
    for g in &gens {
        let e = g.exponents();
        if e.iter().filter(|x| **x > 0).count() > 1 {
            for v in 0..NVARS {
                if e[v] > 0 {
                    counts[v] += 1;
                }
            }
        }
    }
    let var = (0..NVARS).max_by_key(|v| (counts[*v], NVARS - v)).unwrap();
    let e = gens
        .iter()
        .filter(|g| g.exponents().iter().filter(|x| **x > 0).count() > 1)
        .map(|g| g.exponent(var))
        .filter(|x| *x > 0)
        .min()
        .unwrap();
    let mut pe = [0u8; NVARS];
    pe[var] = e;
    let pivot = Monomial::new(pe);

    let mut plus = gens.clone();
    plus.push(pivot);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.gcd(&pivot).quotient_of(g).unwrap()).collect();
    let mut n = numerator_rec(minimalize(plus));
    let tail = numerator_rec(minimalize(colon));
    poly_add_shifted(&mut n, &tail, e as usize);
    n
}

/// Combinatorial `binom(x, 3)`, zero for `x < 3`.
fn binom3(x: i64) -> i64 {
    if x < 3 {
        0
    } else {
        x * (x - 1) * (x - 2) / 6
    }
}

/// `binom(x, 3)` as a polynomial in `x`, valid for every integer.
fn binom3_poly(x: i64) -> i64 {
    x * (x - 1) * (x - 2) / 6
}

/// Hilbert function of `R/M` at `n` from the series numerator.
pub fn hf_from_numerator(num: &[i64], n: i64) -> i64 {
    num.iter().enumerate().map(|(k, c)| c * binom3(n - k as i64 + 3)).sum()
}

/// Hilbert polynomial of `R/M` evaluated at `n`.
pub fn hp_from_numerator(num: &[i64], n: i64) -> i64 {
    num.iter().enumerate().map(|(k, c)| c * binom3_poly(n - k as i64 + 3)).sum()
}

/// Number of standard monomials of degree `n` (direct count; used as an
/// independent check of the series numerator).
pub fn count_standard(gens: &[Monomial], n: usize) -> usize {
    crate::ring::basis(n).monomials().iter().filter(|m| !gens.iter().any(|g| g.divides(m))).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_series() {
        // R itself
        assert_eq!(series_numerator(&[]), vec![1]);
        let x = Monomial::var(0);
        assert_eq!(series_numerator(&[x]), vec![1, -1]);
        // (x, y, z, w): 1
        let m: Vec<Monomial> = (0..4).map(Monomial::var).collect();
        let num = series_numerator(&m);
        assert_eq!(hf_from_numerator(&num, 0), 1);
        assert_eq!(hf_from_numerator(&num, 1), 0);
    }

    fn monos() -> impl Strategy<Value = Vec<Monomial>> {
        prop::collection::vec(prop::array::uniform4(0u8..4).prop_map(Monomial::new), 1..8)
    }

    proptest! {
        #[test]
        fn numerator_matches_direct_count(gens in monos()) {
            let gens: Vec<Monomial> = gens.into_iter().filter(|m| m.degree() > 0).collect();
            let num = series_numerator(&gens);
            for n in 0..12 {
                prop_assert_eq!(hf_from_numerator(&num, n as i64), count_standard(&gens, n) as i64);
            }
        }
    }
}
