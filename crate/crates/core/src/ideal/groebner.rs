//! Buchberger's algorithm for homogeneous ideals, processed degree by degree.
//!
//! Within one degree every reduction happens against a table of dense
//! reducer rows `q * g` (one per leading monomial of that degree), so the
//! reduction of all S-polynomials of a degree is a single triangular sweep,
//! and the surviving remainders are inter-reduced by row echelon form.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::ring::linalg::{first_nonzero, Echelon};
use crate::ring::{basis, Monomial, Polynomial, PrimeField};

/// Sparse row `q * g` with its leading column first.
#[derive(Debug)]
struct ReducerRow {
    cols: Vec<(usize, u32)>,
}

/// For each monomial of one degree, the reducer whose leading monomial it is.
#[derive(Debug)]
pub(crate) struct ReducerTable {
    rows: Vec<Option<ReducerRow>>,
}

impl ReducerTable {
    fn build(elems: &[Polynomial], leads: &[Monomial], n: usize) -> Self {
        let b = basis(n);
        let rows = b
            .monomials()
            .iter()
            .map(|m| {
                // prefer the divisor with fewest terms
                let (gi, q) = leads
                    .iter()
                    .enumerate()
                    .filter_map(|(i, lt)| lt.quotient_of(m).map(|q| (i, q)))
                    .min_by_key(|(i, _)| elems[*i].len())?;
                let cols = elems[gi].terms().iter().map(|(t, c)| (b.index_of(&t.mul(&q)), *c)).collect();
                Some(ReducerRow { cols })
            })
            .collect();
        ReducerTable { rows }
    }

    /// Reduces a dense vector to normal form (support on standard monomials).
    fn reduce(&self, k: PrimeField, v: &mut [u32]) {
        let p = k.prime() as u64;
        for i in 0..v.len() {
            let c = v[i];
            if c == 0 {
                continue;
            }
            if let Some(row) = &self.rows[i] {
                let nc = p - c as u64;
                for &(j, a) in &row.cols {
                    v[j] = ((v[j] as u64 + nc * a as u64) % p) as u32;
                }
                debug_assert_eq!(v[i], 0);
            }
        }
    }

    pub(crate) fn is_leading(&self, i: usize) -> bool {
        self.rows[i].is_some()
    }
}

/// A reduced Gröbner basis (monic, grevlex) with per-degree reducer caches.
#[derive(Debug)]
pub struct GroebnerBasis {
    field: PrimeField,
    elems: Vec<Polynomial>,
    leads: Vec<Monomial>,
    tables: Mutex<HashMap<usize, Arc<ReducerTable>>>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.elems == other.elems
    }
}

impl GroebnerBasis {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elems
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(|m| m.degree() == 0)
    }

    pub(crate) fn table(&self, n: usize) -> Arc<ReducerTable> {
        let mut guard = self.tables.lock().unwrap();
        guard.entry(n).or_insert_with(|| Arc::new(ReducerTable::build(&self.elems, &self.leads, n))).clone()
    }

    /// Normal form of a dense vector over `R_n`.
    pub fn reduce_dense(&self, n: usize, v: &mut [u32]) {
        self.table(n).reduce(self.field, v);
    }

    /// Normal form of a homogeneous polynomial.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let Some(n) = f.degree() else { return f.clone() };
        assert!(f.is_homogeneous(), "normal_form expects a homogeneous polynomial");
        let mut v = f.to_dense(n);
        self.reduce_dense(n, &mut v);
        Polynomial::from_dense(self.field, n, &v)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Whether monomial `m` lies in the leading term ideal.
    pub fn is_leading(&self, m: &Monomial) -> bool {
        self.leads.iter().any(|l| l.divides(m))
    }
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by homogeneous `gens`.
pub fn groebner(field: PrimeField, gens: &[Polynomial]) -> GroebnerBasis {
    let mut pending: BTreeMap<usize, Vec<&Polynomial>> = BTreeMap::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        assert!(g.is_homogeneous(), "groebner expects homogeneous generators, got {g}");
        pending.entry(g.degree().unwrap()).or_default().push(g);
    }
    let mut elems: Vec<Polynomial> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    loop {
        let next_pair = pairs.iter().map(|p| p.lcm.degree()).min();
        let next_gen = pending.keys().next().copied();
        let d = match (next_pair, next_gen) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if leads.iter().any(|m| m.degree() == 0) {
            break;
        }
        let b = basis(d);
        let table = ReducerTable::build(&elems, &leads, d);

        let mut batch: Vec<Vec<u32>> = Vec::new();
        let (now, later): (Vec<Pair>, Vec<Pair>) = pairs.into_iter().partition(|p| p.lcm.degree() == d);
        pairs = later;
        for p in now {
            let (gi, gj) = (&elems[p.i], &elems[p.j]);
            let qi = leads[p.i].quotient_of(&p.lcm).unwrap();
            let qj = leads[p.j].quotient_of(&p.lcm).unwrap();
            let mut v = vec![0u32; b.len()];
            for (t, c) in gi.terms() {
                let idx = b.index_of(&t.mul(&qi));
                v[idx] = field.add(v[idx], *c);
            }
            for (t, c) in gj.terms() {
                let idx = b.index_of(&t.mul(&qj));
                v[idx] = field.sub(v[idx], *c);
            }
            batch.push(v);
        }
        if let Some(gs) = pending.remove(&d) {
            batch.extend(gs.into_iter().map(|g| g.to_dense(d)));
        }

        let mut ech = Echelon::new(field, b.len());
        for mut v in batch {
            table.reduce(field, &mut v);
            if first_nonzero(&v).is_some() {
                ech.insert(v);
            }
        }
        for row in ech.into_sorted_rows() {
            let h = Polynomial::from_dense(field, d, &row);
            let lt = h.leading_monomial().unwrap();
            debug_assert_eq!(h.leading_coefficient(), Some(1));
            elems.push(h);
            leads.push(lt);
            pairs = gebauer_moeller(&leads, pairs, leads.len() - 1);
        }
    }

    // unit ideal collapses to {1}
    if leads.iter().any(|m| m.degree() == 0) {
        elems = vec![Polynomial::constant(field, 1)];
        leads = vec![Monomial::ONE];
    }
    GroebnerBasis { field, elems, leads, tables: Mutex::new(HashMap::new()) }
}

/// Pair update with the product and chain criteria.
fn gebauer_moeller(leads: &[Monomial], old: Vec<Pair>, h: usize) -> Vec<Pair> {
    let lh = leads[h];
    let mut c: Vec<Pair> = (0..h).map(|g| Pair { i: g, j: h, lcm: leads[g].lcm(&lh) }).collect();
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = c.pop() {
        let coprime = leads[p.i].is_coprime(&lh);
        let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            d.push(p);
        }
    }
    let e = d.into_iter().filter(|p| !leads[p.i].is_coprime(&lh));
    let mut kept: Vec<Pair> = old
        .into_iter()
        .filter(|p| {
            !(lh.divides(&p.lcm) && leads[p.i].lcm(&lh) != p.lcm && leads[p.j].lcm(&lh) != p.lcm)
        })
        .collect();
    kept.extend(e);
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn k() -> PrimeField {
        PrimeField::default()
    }

    fn gb(src: &[&str]) -> GroebnerBasis {
        let gens: Vec<_> = src.iter().map(|s| parse_poly(s, k()).unwrap()).collect();
        groebner(k(), &gens)
    }

    fn strs(g: &GroebnerBasis) -> Vec<String> {
        g.elements().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(strs(&gb(&["x", "y"])), ["x", "y"]);
        assert_eq!(strs(&gb(&["x", "x"])), ["x"]);
        assert_eq!(strs(&gb(&["2*x"])), ["x"]);
        assert!(gb(&[]).elements().is_empty());
        assert!(gb(&["x", "1"]).is_unit());
    }

    #[test]
    fn twisted_cubic_is_its_own_basis() {
        let g = gb(&["x*z - y^2", "x*w - y*z", "y*w - z^2"]);
        assert_eq!(g.elements().len(), 3);
        assert!(g.contains(&parse_poly("x*z^2 - y^2*z", k()).unwrap()));
        assert!(!g.contains(&parse_poly("x^2", k()).unwrap()));
    }

    #[test]
    fn reduced_basis_property() {
        let g = gb(&["x^2 + y*z", "x*y + z^2", "y^3 + w^3"]);
        for (i, a) in g.elements().iter().enumerate() {
            for (j, b) in g.elements().iter().enumerate() {
                if i != j {
                    let lt = b.leading_monomial().unwrap();
                    assert!(a.terms().iter().all(|(m, _)| !lt.divides(m)), "{b} reduces {a}");
                }
            }
        }
    }
}
