//! Subspaces of a single graded piece `R_n`.

use super::field::PrimeField;
use super::linalg::{Echelon, Vector};
use super::monomial::{basis, dim_r};
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// A subspace of `R_n` stored as a reduced row echelon basis over the
/// descending monomial basis of `R_n`.
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    field: PrimeField,
    degree: usize,
    rows: Vec<Vector>,
}

impl PartialEq for GradedSubspace {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.degree == other.degree && self.rows == other.rows
    }
}

impl Eq for GradedSubspace {}

impl GradedSubspace {
    pub fn zero(field: PrimeField, degree: usize) -> Self {
        GradedSubspace { field, degree, rows: Vec::new() }
    }

    pub fn full(field: PrimeField, degree: usize) -> Self {
        let n = dim_r(degree as i64);
        let rows = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        GradedSubspace { field, degree, rows }
    }

    pub fn from_echelon(degree: usize, e: Echelon) -> Self {
        assert_eq!(e.ncols(), dim_r(degree as i64));
        let field = e.field();
        GradedSubspace { field, degree, rows: e.into_sorted_rows() }
    }

    pub fn from_vectors(field: PrimeField, degree: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut e = Echelon::new(field, dim_r(degree as i64));
        for v in vectors {
            e.insert(v);
        }
        Self::from_echelon(degree, e)
    }

    /// Span of homogeneous polynomials of degree `n` (zero polynomials are allowed).
    pub fn from_polys<'a>(
        field: PrimeField,
        polys: impl IntoIterator<Item = &'a Polynomial>,
        n: usize,
    ) -> Result<Self> {
        let mut vecs = Vec::new();
        for f in polys {
            if f.is_zero() {
                continue;
            }
            if !f.is_homogeneous() || f.degree() != Some(n) {
                return Err(Error::Argument(format!("{f} is not homogeneous of degree {n}")));
            }
            vecs.push(f.to_dense(n));
        }
        Ok(Self::from_vectors(field, n, vecs))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        dim_r(self.degree as i64)
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.rows.iter().map(|r| Polynomial::from_dense(self.field, self.degree, r)).collect()
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.ambient_dim());
        for r in &self.rows {
            e.insert(r.clone());
        }
        e
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree || self.field != other.field {
            return Err(Error::Argument(format!(
                "subspaces of R_{} and R_{} are not comparable",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        self.echelon().contains(v)
    }

    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        f.is_homogeneous() && f.degree() == Some(self.degree) && self.contains_vector(&f.to_dense(self.degree))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut e = self.echelon();
        for r in &other.rows {
            e.insert(r.clone());
        }
        Ok(Self::from_echelon(self.degree, e))
    }

    /// Zassenhaus: reduce `[a | a]` and `[b | 0]`; rows with zero left half
    /// span the intersection.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.ambient_dim();
        let mut e = Echelon::new(self.field, 2 * n);
        for a in &self.rows {
            let mut v = a.clone();
            v.extend_from_slice(a);
            e.insert(v);
        }
        for b in &other.rows {
            let mut v = b.clone();
            v.resize(2 * n, 0);
            e.insert(v);
        }
        let meet = e
            .rows()
            .iter()
            .zip(e.pivots())
            .filter(|(_, p)| **p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect::<Vec<_>>();
        Ok(Self::from_vectors(self.field, self.degree, meet))
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        let e = self.echelon();
        Ok(other.rows.iter().all(|r| e.contains(r)))
    }

    /// Equality as subspaces. Both bases are reduced, so this is structural.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.rows == other.rows)
    }

    /// `{ v : <v, w> = 0 for all w in self }` under the coordinate pairing.
    pub fn orthogonal_complement(&self) -> Self {
        let n = self.ambient_dim();
        let k = self.field;
        // in RREF the free columns parametrise the complement
        let pivots: Vec<usize> = self.rows.iter().map(|r| r.iter().position(|x| *x != 0).unwrap()).collect();
        let mut is_pivot = vec![false; n];
        for p in &pivots {
            is_pivot[*p] = true;
        }
        let mut out = Vec::new();
        for free in (0..n).filter(|c| !is_pivot[*c]) {
            let mut v = vec![0u32; n];
            v[free] = 1;
            for (row, p) in self.rows.iter().zip(&pivots) {
                v[*p] = k.neg(row[free]);
            }
            out.push(v);
        }
        Self::from_vectors(k, self.degree, out)
    }

    /// The degree-`n+1` span `R_1 * self`.
    pub fn times_linear_forms(&self) -> Self {
        let src = basis(self.degree);
        let dst = basis(self.degree + 1);
        let mut e = Echelon::new(self.field, dst.len());
        for r in &self.rows {
            for var in 0..4 {
                let mut v = vec![0u32; dst.len()];
                for (i, c) in r.iter().enumerate() {
                    if *c != 0 {
                        let m = src.get(i).mul(&super::monomial::Monomial::var(var));
                        v[dst.index_of(&m)] = *c;
                    }
                }
                e.insert(v);
            }
        }
        Self::from_echelon(self.degree + 1, e)
    }
}
