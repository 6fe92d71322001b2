//! Homogeneous ideals of `R`: Gröbner bases, graded pieces, Hilbert
//! functions, quotients and saturation, determinantal ideals.

mod groebner;
pub mod hilbert;
mod matrix;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

pub use groebner::{groebner, GroebnerBasis};
pub use matrix::{minors_ideal, PolyMatrix};

use crate::error::{Error, Result};
use crate::ring::linalg::{left_kernel, solve_left, Echelon};
use crate::ring::{basis, dim_r, GradedSubspace, Monomial, Polynomial, PrimeField, NVARS};

/// A homogeneous ideal given by generators, with a lazily computed reduced
/// Gröbner basis and a cache of graded pieces.
///
/// Caches fill behind interior locks; after [`IdealHandle::gb`] has been
/// called once, shared read-only use across threads does no further Gröbner work.
pub struct IdealHandle {
    field: PrimeField,
    generators: Vec<Polynomial>,
    gb: OnceLock<Arc<GroebnerBasis>>,
    numerator: OnceLock<Vec<i64>>,
    pieces: Mutex<HashMap<usize, Arc<GradedSubspace>>>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        let out = IdealHandle::from_parts(self.field, self.generators.clone());
        if let Some(gb) = self.gb.get() {
            let _ = out.gb.set(gb.clone());
        }
        out
    }
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdealHandle").field("generators", &self.generators).finish()
    }
}

/// Options for [`IdealHandle::quotient`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Quotient,
    SaturationWrtIrrelevant,
}

/// Number of consecutive degrees with no new generators after which the
/// degree-by-degree quotient is taken to be complete.
pub const STABILIZATION_WINDOW: usize = 3;

impl IdealHandle {
    fn from_parts(field: PrimeField, generators: Vec<Polynomial>) -> Self {
        IdealHandle {
            field,
            generators,
            gb: OnceLock::new(),
            numerator: OnceLock::new(),
            pieces: Mutex::new(HashMap::new()),
        }
    }

    /// Zero generators are dropped; every other generator must be homogeneous.
    pub fn new(field: PrimeField, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.field() != field {
                return Err(Error::Argument("generator over a different prime".into()));
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::Argument(format!("generator {g} is not homogeneous")));
            }
            gens.push(g);
        }
        Ok(Self::from_parts(field, gens))
    }

    pub fn zero(field: PrimeField) -> Self {
        Self::from_parts(field, Vec::new())
    }

    pub fn unit(field: PrimeField) -> Self {
        Self::from_parts(field, vec![Polynomial::constant(field, 1)])
    }

    /// The irrelevant ideal `(x, y, z, w)`.
    pub fn irrelevant(field: PrimeField) -> Self {
        Self::from_parts(field, (0..NVARS).map(|i| Polynomial::var(field, i)).collect())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn generator_degrees(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.degree().unwrap()).collect()
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| Arc::new(groebner(self.field, &self.generators)))
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        self.gb().contains(f)
    }

    pub fn contains_ideal(&self, other: &IdealHandle) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Equality of ideals, decided by comparing reduced Gröbner bases.
    pub fn equals(&self, other: &IdealHandle) -> bool {
        self.gb() == other.gb()
    }

    /// Degree-`n` piece of the ideal generated, in reduced echelon form: one
    /// row `m - NF(m)` per leading monomial `m` of degree `n`.
    pub fn graded_piece(&self, n: usize) -> Arc<GradedSubspace> {
        if let Some(p) = self.pieces.lock().unwrap().get(&n) {
            return p.clone();
        }
        let gb = self.gb();
        let b = basis(n);
        let table = gb.table(n);
        let mut e = Echelon::new(self.field, b.len());
        for i in 0..b.len() {
            if !table.is_leading(i) {
                continue;
            }
            let mut v = vec![0u32; b.len()];
            v[i] = 1;
            gb.reduce_dense(n, &mut v);
            // v is now the normal form of m shifted by -m; rebuild m - NF(m)
            let mut row: Vec<u32> = v.iter().map(|c| self.field.neg(*c)).collect();
            row[i] = 1;
            e.insert(row);
        }
        let piece = Arc::new(GradedSubspace::from_echelon(n, e));
        self.pieces.lock().unwrap().insert(n, piece.clone());
        piece
    }

    fn numerator(&self) -> &[i64] {
        self.numerator.get_or_init(|| hilbert::series_numerator(self.gb().leading_monomials()))
    }

    /// `dim (R/I)_n`.
    pub fn hilbert_function(&self, n: i64) -> usize {
        if n < 0 {
            return 0;
        }
        hilbert::hf_from_numerator(self.numerator(), n) as usize
    }

    /// Hilbert polynomial of `R/I` at `n`.
    pub fn hilbert_polynomial(&self, n: i64) -> i64 {
        hilbert::hp_from_numerator(self.numerator(), n)
    }

    /// Smallest `n0` such that the Hilbert function equals the Hilbert
    /// polynomial for every `n >= n0`.
    pub fn regularity_index(&self) -> i64 {
        let num = self.numerator();
        let mut n0 = (num.len() as i64 - 1 - 3).max(0);
        while n0 > 0 && self.hilbert_function(n0 - 1) as i64 == self.hilbert_polynomial(n0 - 1) {
            n0 -= 1;
        }
        n0
    }

    /// Degree and arithmetic genus read off a linear Hilbert polynomial
    /// `d*n + 1 - g`; `None` if the polynomial is not linear.
    pub fn curve_degree_genus(&self) -> Option<(i64, i64)> {
        let h0 = self.hilbert_polynomial(0);
        let h1 = self.hilbert_polynomial(1);
        let h2 = self.hilbert_polynomial(2);
        let h3 = self.hilbert_polynomial(3);
        let d = h1 - h0;
        (d > 0 && h2 - h1 == d && h3 - h2 == d).then_some((d, 1 - h0))
    }

    /// Artinian test: the quotient vanishes in high degree. Returns the top
    /// degree with nonzero Hilbert function when artinian.
    pub fn is_artinian(&self) -> (bool, Option<usize>) {
        let lead = self.gb().leading_monomials();
        let pure = (0..NVARS).all(|v| {
            lead.iter().any(|m| m.exponent(v) as usize == m.degree() && m.degree() > 0) || self.is_unit()
        });
        if !pure {
            return (false, None);
        }
        let num = self.numerator();
        let top = (0..num.len() as i64 + 4).rev().find(|n| self.hilbert_function(*n) > 0);
        (true, top.map(|n| n as usize))
    }

    /// Minimal generators, degree by degree: complements of `R_1 * I_{n-1}`
    /// inside `I_n`.
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        if self.is_unit() {
            return vec![Polynomial::constant(self.field, 1)];
        }
        let top = self.generator_degrees().into_iter().max().unwrap_or(0);
        let mut out = Vec::new();
        for n in 0..=top {
            let piece = self.graded_piece(n);
            if piece.dim() == 0 {
                continue;
            }
            let mut span = if n == 0 {
                Echelon::new(self.field, dim_r(0))
            } else {
                self.graded_piece(n - 1).times_linear_forms().echelon()
            };
            for row in piece.rows() {
                if span.insert(row.clone()) {
                    out.push(Polynomial::from_dense(self.field, n, row));
                }
            }
        }
        out
    }

    /// Whether `I` is generated by its elements of degree `<= m`. Exact: the
    /// ideal generated by the generators of degree `<= m` is compared with
    /// `I` by reduced Gröbner bases.
    pub fn generated_in_degrees_leq(&self, m: usize) -> bool {
        let low: Vec<Polynomial> = self.generators.iter().filter(|g| g.degree().unwrap() <= m).cloned().collect();
        IdealHandle::from_parts(self.field, low).equals(self)
    }

    pub fn sum(&self, other: &IdealHandle) -> IdealHandle {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        IdealHandle::from_parts(self.field, gens)
    }

    pub fn product(&self, other: &IdealHandle) -> IdealHandle {
        let gens = self.generators.iter().flat_map(|a| other.generators.iter().map(move |b| a * b)).collect();
        IdealHandle::from_parts(self.field, gens)
    }

    /// `(I : J)_n = { a in R_n : a * h in I for every generator h of J }`,
    /// computed by linear algebra on normal forms.
    pub fn quotient_piece(&self, other: &IdealHandle, n: usize) -> GradedSubspace {
        let gb = self.gb();
        let src = basis(n);
        // columns: standard monomials of each target degree
        let mut blocks: Vec<(usize, Vec<usize>)> = Vec::new();
        for h in &other.generators {
            let t = n + h.degree().unwrap();
            let table = gb.table(t);
            let std_cols = (0..dim_r(t as i64)).filter(|i| !table.is_leading(*i)).collect();
            blocks.push((t, std_cols));
        }
        let width: usize = blocks.iter().map(|(_, c)| c.len()).sum();
        let rows: Vec<Vec<u32>> = src
            .monomials()
            .iter()
            .map(|m| {
                let mut row = Vec::with_capacity(width);
                for (h, (t, cols)) in other.generators.iter().zip(&blocks) {
                    let mut v = h.mul_term(1, m).to_dense(*t);
                    gb.reduce_dense(*t, &mut v);
                    row.extend(cols.iter().map(|c| v[*c]));
                }
                row
            })
            .collect();
        if other.generators.is_empty() {
            return GradedSubspace::full(self.field, n);
        }
        let ker = left_kernel(self.field, width, &rows);
        GradedSubspace::from_vectors(self.field, n, ker)
    }

    /// Ideal quotient `I : J`.
    ///
    /// Pieces are computed degree by degree and their minimal generators
    /// collected; the loop stops once [`STABILIZATION_WINDOW`] consecutive
    /// degrees past the largest generator degree of `I` need no new
    /// generator. Quotient by the zero ideal is the unit ideal.
    pub fn quotient(&self, other: &IdealHandle) -> IdealHandle {
        if other.generators.is_empty() || self.contains_ideal(other) {
            return IdealHandle::unit(self.field);
        }
        let floor = self.generator_degrees().into_iter().max().unwrap_or(0);
        let mut gens: Vec<Polynomial> = Vec::new();
        let mut quiet = 0;
        let mut n = 0;
        loop {
            let piece = self.quotient_piece(other, n);
            let current = IdealHandle::from_parts(self.field, gens.clone());
            let have = if gens.is_empty() {
                GradedSubspace::zero(self.field, n)
            } else {
                (*current.graded_piece(n)).clone()
            };
            let mut span = have.echelon();
            let mut added = false;
            for row in piece.rows() {
                if span.insert(row.clone()) {
                    gens.push(Polynomial::from_dense(self.field, n, row));
                    added = true;
                }
            }
            if added {
                quiet = 0;
            } else if n > floor {
                quiet += 1;
            }
            if quiet >= STABILIZATION_WINDOW {
                break;
            }
            // a constant means the unit ideal
            if n == 0 && added {
                break;
            }
            n += 1;
        }
        IdealHandle::from_parts(self.field, gens)
    }

    /// `I : (x,y,z,w)^∞`, by iterated quotients until the reduced Gröbner
    /// basis stops changing.
    pub fn saturation(&self) -> IdealHandle {
        let m = IdealHandle::irrelevant(self.field);
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(&m);
            if next.equals(&cur) {
                return cur;
            }
            cur = next;
        }
    }

    pub fn apply(&self, other: &IdealHandle, op: IdealOp) -> IdealHandle {
        match op {
            IdealOp::Sum => self.sum(other),
            IdealOp::Product => self.product(other),
            IdealOp::Quotient => self.quotient(other),
            IdealOp::SaturationWrtIrrelevant => self.saturation(),
        }
    }

    /// Span of `{ m * g }` over generators `g` and monomials `m` with
    /// `deg(m*g) = n`. Pure linear algebra; does not touch the Gröbner basis.
    pub fn macaulay_piece(&self, n: usize) -> GradedSubspace {
        macaulay_span(self.field, &self.generators, n)
    }
}

/// Span of all monomial multiples of `gens` landing in degree `n`.
pub fn macaulay_span(field: PrimeField, gens: &[Polynomial], n: usize) -> GradedSubspace {
    let mut e = Echelon::new(field, dim_r(n as i64));
    for g in gens {
        let d = g.degree().unwrap();
        if d > n {
            continue;
        }
        for m in basis(n - d).monomials() {
            e.insert(g.mul_term(1, m).to_dense(n));
            if e.rank() == e.ncols() {
                return GradedSubspace::from_echelon(n, e);
            }
        }
    }
    GradedSubspace::from_echelon(n, e)
}

/// Rows `m * g` of the Macaulay matrix in degree `n`, tagged by generator.
fn macaulay_rows(gens: &[Polynomial], n: usize) -> (Vec<Vec<u32>>, Vec<(usize, Monomial)>) {
    let mut rows = Vec::new();
    let mut tags = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let d = g.degree().unwrap();
        if d > n {
            continue;
        }
        for m in basis(n - d).monomials() {
            rows.push(g.mul_term(1, m).to_dense(n));
            tags.push((i, *m));
        }
    }
    (rows, tags)
}

/// Division with cofactors: `f = Σ cofactors[i] * gens[i] + remainder`.
///
/// The remainder is the normal form of `f` with respect to the reduced
/// Gröbner basis of `(gens)`; cofactors are homogeneous of degree
/// `deg f - deg gens[i]` and are found by solving the Macaulay system for
/// `f - remainder`.
pub fn normal_form_with_cofactors(f: &Polynomial, gens: &[Polynomial]) -> Result<(Polynomial, Vec<Polynomial>)> {
    let field = f.field();
    let ideal = IdealHandle::new(field, gens.to_vec())?;
    let zero = || Polynomial::zero(field);
    let Some(n) = f.degree() else {
        return Ok((zero(), vec![zero(); gens.len()]));
    };
    if !f.is_homogeneous() {
        return Err(Error::Argument(format!("{f} is not homogeneous")));
    }
    let remainder = ideal.gb().normal_form(f);
    let target = &(f - &remainder);
    let mut cofactors = vec![zero(); gens.len()];
    if target.is_zero() {
        return Ok((remainder, cofactors));
    }
    // gens may contain zeros; index against the original list
    let (rows, tags) = macaulay_rows(gens.iter().filter(|g| !g.is_zero()).cloned().collect::<Vec<_>>().as_slice(), n);
    let live: Vec<usize> = (0..gens.len()).filter(|i| !gens[*i].is_zero()).collect();
    let coeffs = solve_left(field, dim_r(n as i64), &rows, &target.to_dense(n))
        .ok_or_else(|| Error::Invariant("member of the ideal without a Macaulay representation".into()))?;
    for ((gi, m), c) in tags.iter().zip(coeffs) {
        if c != 0 {
            let i = live[*gi];
            cofactors[i] = &cofactors[i] + &Polynomial::term(field, c, *m);
        }
    }
    Ok((remainder, cofactors))
}
