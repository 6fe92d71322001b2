//! Dense exact linear algebra over `F_p`.

use super::field::PrimeField;

pub type Vector = Vec<u32>;

/// `target -= c * row`, starting at column `from` (entries before it are
/// assumed zero in `row`).
#[inline]
pub fn axpy_neg(k: PrimeField, target: &mut [u32], c: u32, row: &[u32], from: usize) {
    if c == 0 {
        return;
    }
    let p = k.prime() as u64;
    let nc = p - c as u64;
    for (t, r) in target[from..].iter_mut().zip(&row[from..]) {
        if *r != 0 {
            *t = ((*t as u64 + nc * *r as u64) % p) as u32;
        }
    }
}

#[inline]
pub fn scale_in_place(k: PrimeField, v: &mut [u32], c: u32) {
    for x in v.iter_mut() {
        if *x != 0 {
            *x = k.mul(*x, c);
        }
    }
}

pub fn first_nonzero(v: &[u32]) -> Option<usize> {
    v.iter().position(|x| *x != 0)
}

/// Reduced row echelon form, kept incrementally. Rows are stored with their
/// pivot normalised to 1 and every pivot column cleared in all other rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    /// column -> row index, `usize::MAX` if not a pivot
    pivot_row: Vec<usize>,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon { field, ncols, rows: Vec::new(), pivots: Vec::new(), pivot_row: vec![usize::MAX; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != usize::MAX
    }

    /// Reduces `v` against the stored rows (in place).
    pub fn reduce(&self, v: &mut [u32]) {
        debug_assert_eq!(v.len(), self.ncols);
        for col in 0..self.ncols {
            let c = v[col];
            if c == 0 {
                continue;
            }
            let r = self.pivot_row[col];
            if r != usize::MAX {
                axpy_neg(self.field, v, c, &self.rows[r], col);
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| *x == 0)
    }

    /// Adds `v` to the span. Returns true if the rank grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        self.reduce(&mut v);
        let Some(p) = first_nonzero(&v) else { return false };
        let inv = self.field.inv(v[p]);
        scale_in_place(self.field, &mut v, inv);
        // clear the new pivot column from existing rows
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                axpy_neg(self.field, row, c, &v, p);
            }
        }
        self.pivot_row[p] = self.rows.len();
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Rows sorted by pivot column.
    pub fn into_sorted_rows(self) -> Vec<Vector> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        let mut rows: Vec<Option<Vector>> = self.rows.into_iter().map(Some).collect();
        idx.into_iter().map(|i| rows[i].take().unwrap()).collect()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

/// Rank of a list of row vectors.
pub fn rank(field: PrimeField, ncols: usize, rows: impl IntoIterator<Item = Vector>) -> usize {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r);
        if e.rank() == ncols {
            break;
        }
    }
    e.rank()
}

/// Basis of `{ v : v * A = 0 }` where `A` has the given rows.
pub fn left_kernel(field: PrimeField, ncols: usize, rows: &[Vector]) -> Vec<Vector> {
    let m = rows.len();
    // augmented [A | I]; rows whose left part vanish give kernel vectors
    let mut e = Echelon::new(field, ncols + m);
    for (i, r) in rows.iter().enumerate() {
        let mut v = Vec::with_capacity(ncols + m);
        v.extend_from_slice(r);
        v.resize(ncols + m, 0);
        v[ncols + i] = 1;
        e.insert(v);
    }
    let mut ker = Echelon::new(field, m);
    for (row, piv) in e.rows().iter().zip(e.pivots()) {
        if *piv >= ncols {
            ker.insert(row[ncols..].to_vec());
        }
    }
    ker.into_sorted_rows()
}

/// Finds `c` with `c * A = target`, if one exists.
pub fn solve_left(field: PrimeField, ncols: usize, rows: &[Vector], target: &[u32]) -> Option<Vector> {
    let m = rows.len();
    let mut e = Echelon::new(field, ncols + m);
    for (i, r) in rows.iter().enumerate() {
        let mut v = r.clone();
        v.resize(ncols + m, 0);
        v[ncols + i] = 1;
        e.insert(v);
    }
    // reduce [target | 0]; the combination used lands in the right half negated
    let mut t = target.to_vec();
    t.resize(ncols + m, 0);
    e.reduce(&mut t);
    if t[..ncols].iter().any(|x| *x != 0) {
        return None;
    }
    Some(t[ncols..].iter().map(|x| field.neg(*x)).collect())
}
