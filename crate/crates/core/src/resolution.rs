//! Syzygies by graded linear algebra, Hilbert–Burch matrices of
//! codimension-two ACM ideals, and the augmented matrix `ψ` whose
//! determinant is the surface equation.

use crate::error::{Error, Result};
use crate::ideal::{normal_form_with_cofactors, IdealHandle, PolyMatrix};
use crate::ring::linalg::{left_kernel, Echelon};
use crate::ring::{basis, dim_r, Polynomial, PrimeField};

/// Consecutive syzygy-free degrees required before the search stops.
pub const SYZYGY_WINDOW: usize = 3;

/// A relation `Σ components[i] * gens[i] = 0`, homogeneous of `degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct Syzygy {
    pub degree: usize,
    pub components: Vec<Polynomial>,
}

/// Coordinates of `⊕ R_{n - a_i}`: one block per generator.
struct Layout {
    offsets: Vec<usize>,
    width: usize,
}

impl Layout {
    fn new(degrees: &[usize], n: usize) -> Self {
        let mut offsets = Vec::with_capacity(degrees.len());
        let mut width = 0;
        for &a in degrees {
            offsets.push(width);
            width += if a <= n { dim_r((n - a) as i64) } else { 0 };
        }
        Layout { offsets, width }
    }

    fn encode(&self, degrees: &[usize], n: usize, comps: &[Polynomial]) -> Vec<u32> {
        let mut v = vec![0u32; self.width];
        for (i, c) in comps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let b = basis(n - degrees[i]);
            for (m, a) in c.terms() {
                v[self.offsets[i] + b.index_of(m)] = *a;
            }
        }
        v
    }

    fn decode(&self, field: PrimeField, degrees: &[usize], n: usize, v: &[u32]) -> Vec<Polynomial> {
        degrees
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                if a > n {
                    return Polynomial::zero(field);
                }
                let len = dim_r((n - a) as i64);
                Polynomial::from_dense(field, n - a, &v[self.offsets[i]..self.offsets[i] + len])
            })
            .collect()
    }
}

/// Minimal generators of the first syzygy module of homogeneous `gens`.
///
/// Degree by degree, the kernel of `⊕ R_{n-a_i} -> R_n` is computed and the
/// part not generated by lower-degree syzygies is kept. The search starts
/// counting quiet degrees after `max a + second largest a` (the highest Koszul
/// relation) and stops after [`SYZYGY_WINDOW`] quiet degrees.
pub fn syzygies(gens: &[Polynomial]) -> Result<Vec<Syzygy>> {
    let Some(first) = gens.first() else { return Ok(Vec::new()) };
    let field = first.field();
    if gens.iter().any(|g| g.is_zero() || !g.is_homogeneous()) {
        return Err(Error::Argument("syzygies need nonzero homogeneous generators".into()));
    }
    let degrees: Vec<usize> = gens.iter().map(|g| g.degree().unwrap()).collect();
    let mut sorted = degrees.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let koszul_top = sorted[0] + sorted.get(1).copied().unwrap_or(0);
    let start = *sorted.last().unwrap() + 1;

    let mut found: Vec<Syzygy> = Vec::new();
    let mut quiet = 0;
    let mut n = start;
    loop {
        let layout = Layout::new(&degrees, n);
        // Macaulay rows: (generator i, monomial m) -> m * g_i in R_n
        let mut rows = Vec::with_capacity(layout.width);
        for (g, &a) in gens.iter().zip(&degrees) {
            if a > n {
                continue;
            }
            for m in basis(n - a).monomials() {
                rows.push(g.mul_term(1, m).to_dense(n));
            }
        }
        let kernel = left_kernel(field, dim_r(n as i64), &rows);

        let mut span = Echelon::new(field, layout.width);
        for s in &found {
            for m in basis(n - s.degree).monomials() {
                let shifted: Vec<Polynomial> = s.components.iter().map(|c| c.mul_term(1, m)).collect();
                span.insert(layout.encode(&degrees, n, &shifted));
            }
        }
        let mut added = false;
        for v in kernel {
            if span.insert(v.clone()) {
                found.push(Syzygy { degree: n, components: layout.decode(field, &degrees, n, &v) });
                added = true;
            }
        }
        if added {
            quiet = 0;
        } else if n > koszul_top {
            quiet += 1;
        }
        if quiet >= SYZYGY_WINDOW && n > koszul_top {
            break;
        }
        n += 1;
    }
    Ok(found)
}

/// The matrix `φ` of `0 -> ⊕R(-b_j) -> ⊕R(-a_i) -> I_C -> 0`, normalised so
/// that deleting row `i` leaves a minor equal to `(-1)^i h_i`.
#[derive(Clone, Debug)]
pub struct HilbertBurchData {
    pub phi: PolyMatrix,
    pub a_degrees: Vec<usize>,
    pub b_degrees: Vec<usize>,
    pub generators: Vec<Polynomial>,
}

impl HilbertBurchData {
    /// `r`, the number of columns of `φ`.
    pub fn rank(&self) -> usize {
        self.b_degrees.len()
    }

    /// Minor of `φ` with row `i` deleted.
    pub fn signed_minor(&self, i: usize) -> Polynomial {
        let rows: Vec<usize> = (0..self.phi.rows()).filter(|x| *x != i).collect();
        let cols: Vec<usize> = (0..self.phi.cols()).collect();
        self.phi.minor(&rows, &cols)
    }

    /// `dim I_n` predicted by the resolution.
    pub fn euler_characteristic(&self, n: i64) -> i64 {
        let f: i64 = self.a_degrees.iter().map(|a| dim_r(n - *a as i64) as i64).sum();
        let e: i64 = self.b_degrees.iter().map(|b| dim_r(n - *b as i64) as i64).sum();
        f - e
    }
}

/// Hilbert–Burch matrix of a saturated codimension-two ACM ideal.
///
/// ACM is validated, not assumed: the minimal generators must have exactly
/// `r` minimal syzygies, the maximal minors must reproduce the generators,
/// and the Euler characteristic of the resolution must match `dim I_n`.
pub fn hilbert_burch(ideal: &IdealHandle) -> Result<HilbertBurchData> {
    let field = ideal.field();
    let gens = ideal.minimal_generators();
    let a_degrees: Vec<usize> = gens.iter().map(|g| g.degree().unwrap_or(0)).collect();
    let syz = syzygies(&gens)?;
    let b_degrees: Vec<usize> = syz.iter().map(|s| s.degree).collect();
    let not_acm_err = Error::NotAcm {
        generators: gens.len(),
        generator_degrees: a_degrees.clone(),
        syzygy_degrees: b_degrees.clone(),
    };
    let not_acm = || not_acm_err.clone();
    if gens.len() < 2 || syz.len() + 1 != gens.len() {
        return Err(not_acm());
    }
    let entries: Vec<Vec<Polynomial>> =
        (0..gens.len()).map(|i| syz.iter().map(|s| s.components[i].clone()).collect()).collect();
    let phi = PolyMatrix::new(
        field,
        entries,
        a_degrees.iter().map(|a| *a as i64).collect(),
        b_degrees.iter().map(|b| *b as i64).collect(),
    )?;
    let mut hb = HilbertBurchData { phi, a_degrees, b_degrees, generators: gens.clone() };

    // minors agree with (-1)^i h_i up to one common unit
    let target = |i: usize| if i % 2 == 0 { gens[i].clone() } else { -&gens[i] };
    let m0 = hb.signed_minor(0);
    let Some(lc) = m0.leading_coefficient() else { return Err(not_acm()) };
    let unit = field.mul(lc, field.inv(target(0).leading_coefficient().unwrap()));
    for i in 0..gens.len() {
        if hb.signed_minor(i) != target(i).scale(unit) {
            return Err(not_acm());
        }
    }
    hb.phi.scale_column(0, field.inv(unit));

    let top = hb.b_degrees.iter().max().copied().unwrap_or(0) + 4;
    for n in 0..=top as i64 {
        let dim = dim_r(n) as i64 - ideal.hilbert_function(n) as i64;
        if dim != hb.euler_characteristic(n) {
            return Err(not_acm());
        }
    }
    Ok(hb)
}

/// `ψ = [φ | (-1)^r g]` where `f = Σ g_i h_i`; the sign makes `det ψ = f`.
#[derive(Clone, Debug)]
pub struct PsiData {
    pub psi: PolyMatrix,
    pub g_column: Vec<Polynomial>,
    pub s: usize,
}

pub fn build_psi(hb: &HilbertBurchData, f: &Polynomial) -> Result<PsiData> {
    let s = f
        .degree()
        .filter(|_| f.is_homogeneous())
        .ok_or_else(|| Error::Argument("surface equation must be a nonzero form".into()))?;
    let (rem, cofactors) = normal_form_with_cofactors(f, &hb.generators)?;
    if !rem.is_zero() {
        return Err(Error::NotMember { remainder: rem.to_string() });
    }
    let r = hb.rank();
    let column: Vec<Polynomial> = cofactors.iter().map(|g| if r % 2 == 0 { g.clone() } else { -g }).collect();
    let psi = hb.phi.with_column(column, s as i64)?;
    let det = psi.determinant()?;
    if &det != f {
        return Err(Error::Invariant(format!("det(psi) = {det} differs from f")));
    }
    Ok(PsiData { psi, g_column: cofactors, s })
}
