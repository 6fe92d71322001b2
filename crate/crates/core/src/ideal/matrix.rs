use crate::error::{Error, Result};
use crate::ring::{Polynomial, PrimeField};

use super::IdealHandle;

/// A matrix of homogeneous polynomials with a grading certificate: entry
/// `(i, j)` is zero or homogeneous of degree `col_degrees[j] - row_degrees[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    field: PrimeField,
    entries: Vec<Vec<Polynomial>>,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
}

impl PolyMatrix {
    pub fn new(
        field: PrimeField,
        entries: Vec<Vec<Polynomial>>,
        row_degrees: Vec<i64>,
        col_degrees: Vec<i64>,
    ) -> Result<Self> {
        if entries.len() != row_degrees.len() || entries.iter().any(|r| r.len() != col_degrees.len()) {
            return Err(Error::Argument("matrix shape does not match degree sequences".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let want = col_degrees[j] - row_degrees[i];
                if !e.is_homogeneous() || e.degree().map(|d| d as i64) != Some(want) {
                    return Err(Error::Argument(format!("entry ({i},{j}) = {e} is not homogeneous of degree {want}")));
                }
            }
        }
        Ok(PolyMatrix { field, entries, row_degrees, col_degrees })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.entries.iter().map(|r| r[j].clone()).collect()
    }

    /// Appends a column of the given degree (entries certified on insert).
    pub fn with_column(&self, col: Vec<Polynomial>, degree: i64) -> Result<Self> {
        let mut entries = self.entries.clone();
        for (row, e) in entries.iter_mut().zip(col) {
            row.push(e);
        }
        let mut col_degrees = self.col_degrees.clone();
        col_degrees.push(degree);
        PolyMatrix::new(self.field, entries, self.row_degrees.clone(), col_degrees)
    }

    /// Scales column `j` by a field element.
    pub fn scale_column(&mut self, j: usize, c: u32) {
        for row in self.entries.iter_mut() {
            row[j] = row[j].scale(c);
        }
    }

    /// Determinant of the submatrix on the given rows and columns, by Laplace
    /// expansion along the first selected row.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return Polynomial::constant(self.field, 1);
        }
        let (r0, rest) = (rows[0], &rows[1..]);
        let mut acc = Polynomial::zero(self.field);
        for (pos, &c) in cols.iter().enumerate() {
            let e = &self.entries[r0][c];
            if e.is_zero() {
                continue;
            }
            let sub: Vec<usize> = cols.iter().copied().filter(|x| *x != c).collect();
            let term = e * &self.minor(rest, &sub);
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows() != self.cols() {
            return Err(Error::Argument("determinant of a non-square matrix".into()));
        }
        let idx: Vec<usize> = (0..self.rows()).collect();
        Ok(self.minor(&idx, &idx))
    }
}

/// Lexicographic `k`-subsets of `0..n`.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Ideal of all `r x r` minors, enumerated row subsets first, then column
/// subsets, both in lexicographic order.
pub fn minors_ideal(m: &PolyMatrix, r: usize) -> Result<IdealHandle> {
    if r == 0 {
        return Err(Error::Argument("minor size must be positive".into()));
    }
    if r > m.rows().min(m.cols()) {
        return Err(Error::Argument(format!("no {r}x{r} minors in a {}x{} matrix", m.rows(), m.cols())));
    }
    let mut gens = Vec::new();
    for rows in subsets(m.rows(), r) {
        for cols in subsets(m.cols(), r) {
            let d = m.minor(&rows, &cols);
            if !d.is_zero() {
                gens.push(d);
            }
        }
    }
    IdealHandle::new(m.field(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn k() -> PrimeField {
        PrimeField::default()
    }

    fn p(s: &str) -> Polynomial {
        parse_poly(s, k()).unwrap()
    }

    #[test]
    fn diagonal_minors() {
        let m = PolyMatrix::new(k(), vec![vec![p("x"), p("0")], vec![p("0"), p("y")]], vec![0, 1], vec![1, 2]).unwrap();
        let i = minors_ideal(&m, 2).unwrap();
        assert_eq!(i.generators(), &[p("x*y")]);
        assert!(minors_ideal(&m, 0).is_err());
        assert!(minors_ideal(&m, 3).is_err());
    }

    #[test]
    fn certificate_is_checked() {
        let bad = PolyMatrix::new(k(), vec![vec![p("x^2")]], vec![0], vec![1]);
        assert!(bad.is_err());
    }

    #[test]
    fn determinant_3x3() {
        let rows = [["x", "y", "0"], ["0", "z", "w"], ["y", "0", "x"]];
        let e: Vec<Vec<Polynomial>> = rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect();
        let m = PolyMatrix::new(k(), e, vec![0, 0, 0], vec![1, 1, 1]).unwrap();
        // x(zx - 0) - y(0 - wy) + 0 = x^2 z + y^2 w
        assert_eq!(m.determinant().unwrap(), p("x^2*z + y^2*w"));
    }
}
