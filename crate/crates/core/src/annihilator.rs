//! The annihilator ideal `I_α(C)` of the primitive class of a curve on a
//! smooth surface, by minors of `ψ` (ACM curves) and by apolarity (any curve
//! whose ideal data pins the hyperplane `ker α`), with the reconstruction
//! and perfectness checks built on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{residual, CurveModel, SurfaceModel};
use crate::ideal::{minors_ideal, IdealHandle};
use crate::resolution::{build_psi, hilbert_burch};
use crate::ring::linalg::{left_kernel, Echelon};
use crate::ring::{basis, dim_r, GradedSubspace, Polynomial};

/// Which construction produced a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Path {
    Minors,
    Apolar,
}

/// `I_α` in degrees `0..=2s-4`, determined by the hyperplane `ker α` in the
/// socle degree.
#[derive(Clone, Debug)]
pub struct AnnihilatorClass {
    pub s: usize,
    pub socle_degree: usize,
    /// `None` iff the class is zero.
    pub kernel_hyperplane: Option<GradedSubspace>,
    pub pieces: Vec<GradedSubspace>,
    pub zero_class: bool,
    pub surface_fingerprint: String,
    pub path: Path,
    /// Linked curves whose ideals were added to pin the hyperplane.
    pub linked: Vec<String>,
}

impl AnnihilatorClass {
    /// The zero class on `surface`: `I_α = R`.
    pub fn zero(surface: &SurfaceModel, path: Path) -> Self {
        let e = 2 * surface.s - 4;
        let k = surface.f.field();
        AnnihilatorClass {
            s: surface.s,
            socle_degree: e,
            kernel_hyperplane: None,
            pieces: (0..=e).map(|n| GradedSubspace::full(k, n)).collect(),
            zero_class: true,
            surface_fingerprint: surface.fingerprint(),
            path,
            linked: Vec::new(),
        }
    }

    /// `dim I_{α,n}`; degrees past the socle are all of `R_n`.
    pub fn dim(&self, n: usize) -> usize {
        self.pieces.get(n).map_or(dim_r(n as i64), |p| p.dim())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.dim()).collect()
    }

    /// Hilbert function of `R / I_α` in degrees `0..=2s-4`.
    pub fn quotient_hf(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.codim()).collect()
    }

    /// `I_{α,n}`, with degrees past the socle filled in as `R_n`.
    pub fn piece(&self, n: usize) -> GradedSubspace {
        match self.pieces.get(n) {
            Some(p) => p.clone(),
            None => GradedSubspace::full(self.pieces[0].field(), n),
        }
    }

    /// The ideal generated by `I_{α,n}` for `n <= m`.
    pub fn ideal_leq(&self, m: usize) -> Result<IdealHandle> {
        let k = self.pieces[0].field();
        let gens: Vec<Polynomial> = (0..=m.min(self.socle_degree)).flat_map(|n| self.pieces[n].polys()).collect();
        IdealHandle::new(k, gens)
    }

    /// Gorenstein checks: symmetric quotient Hilbert function with a
    /// one-dimensional socle, and `I_C + J_S ⊆ I_α` in every degree.
    pub fn validate(&self, c: Option<&CurveModel>, surface: &SurfaceModel) -> Result<()> {
        if self.zero_class {
            return Ok(());
        }
        let hf = self.quotient_hf();
        let e = self.socle_degree;
        if hf[e] != 1 {
            return Err(Error::Invariant(format!("socle has dimension {} in degree {e}", hf[e])));
        }
        if (0..=e).any(|n| hf[n] != hf[e - n]) {
            return Err(Error::Invariant(format!("quotient Hilbert function {hf:?} is not symmetric")));
        }
        for n in 0..=e {
            let j = surface.jacobian.graded_piece(n);
            if !self.pieces[n].contains(&j)? {
                return Err(Error::Invariant(format!("J_S not contained in I_alpha in degree {n}")));
            }
            if let Some(c) = c {
                if !self.pieces[n].contains(&c.ideal.graded_piece(n))? {
                    return Err(Error::Invariant(format!("I_C not contained in I_alpha in degree {n}")));
                }
            }
        }
        Ok(())
    }
}

fn require_smooth(surface: &SurfaceModel) -> Result<()> {
    if surface.s < 2 {
        return Err(Error::Argument("surface degree must be at least 2".into()));
    }
    if !surface.is_smooth() {
        return Err(Error::Singular);
    }
    Ok(())
}

/// `I_α = I_r(ψ)`, the ideal of `r x r` minors of `ψ = [φ | ±g]`.
pub fn annihilator_acm(c: &CurveModel, surface: &SurfaceModel) -> Result<AnnihilatorClass> {
    require_smooth(surface)?;
    let hb = hilbert_burch(&c.ideal)?;
    let psi = build_psi(&hb, &surface.f)?;
    let ideal = minors_ideal(&psi.psi, hb.rank())?;
    let e = 2 * surface.s - 4;
    let pieces: Vec<GradedSubspace> = (0..=e).map(|n| (*ideal.graded_piece(n)).clone()).collect();
    if pieces[e].is_full() {
        return Ok(AnnihilatorClass::zero(surface, Path::Minors));
    }
    if pieces[e].codim() != 1 {
        return Err(Error::Invariant(format!("minors ideal has corank {} in degree {e}", pieces[e].codim())));
    }
    Ok(AnnihilatorClass {
        s: surface.s,
        socle_degree: e,
        kernel_hyperplane: Some(pieces[e].clone()),
        pieces,
        zero_class: false,
        surface_fingerprint: surface.fingerprint(),
        path: Path::Minors,
        linked: Vec::new(),
    })
}

/// `K = (I_C + J_S)_{2s-4}`.
pub fn socle_space(c: &CurveModel, surface: &SurfaceModel) -> Result<GradedSubspace> {
    let e = 2 * surface.s - 4;
    c.ideal.graded_piece(e).sum(&surface.jacobian.graded_piece(e))
}

/// Class from a hyperplane `K ⊂ R_e` by apolarity: `f ∈ I_{α,n}` iff
/// `f * m ∈ K` for every monomial `m` of degree `e - n`.
pub fn class_from_hyperplane(k_space: GradedSubspace, surface: &SurfaceModel) -> Result<AnnihilatorClass> {
    let e = k_space.degree();
    if e != 2 * surface.s - 4 {
        return Err(Error::Argument(format!("hyperplane lives in degree {e}, socle degree is {}", 2 * surface.s - 4)));
    }
    match k_space.codim() {
        0 => return Ok(AnnihilatorClass::zero(surface, Path::Apolar)),
        1 => {}
        corank => return Err(Error::IndeterminateClass { corank, degree: e }),
    }
    let k = k_space.field();
    let lambda = k_space.orthogonal_complement().rows()[0].clone();
    let top = basis(e);
    let mut pieces = Vec::with_capacity(e + 1);
    for n in 0..=e {
        let src = basis(n);
        let dual = basis(e - n);
        // catalecticant rows: a -> (λ(a b))_b
        let rows: Vec<Vec<u32>> = src
            .monomials()
            .iter()
            .map(|a| dual.monomials().iter().map(|b| lambda[top.index_of(&a.mul(b))]).collect())
            .collect();
        let ker = left_kernel(k, dual.len(), &rows);
        pieces.push(GradedSubspace::from_vectors(k, n, ker));
    }
    Ok(AnnihilatorClass {
        s: surface.s,
        socle_degree: e,
        kernel_hyperplane: Some(k_space),
        pieces,
        zero_class: false,
        surface_fingerprint: surface.fingerprint(),
        path: Path::Apolar,
        linked: Vec::new(),
    })
}

/// `I_α` by apolarity from `ker α ⊇ (I_C + J_S)_{2s-4}`.
///
/// When that space has corank at least two, the ideals of curves linked to
/// `C` on `S` (residuals in `S ∩ V(g)`, `s(C) <= deg g <= s`, which carry the
/// same class) are added one at a time until the corank drops to one; if it
/// never does, the class is reported as indeterminate.
pub fn annihilator_apolar(c: &CurveModel, surface: &SurfaceModel) -> Result<AnnihilatorClass> {
    require_smooth(surface)?;
    if !c.ideal.contains(&surface.f) {
        return Err(Error::NotMember { remainder: c.ideal.gb().normal_form(&surface.f).to_string() });
    }
    let e = 2 * surface.s - 4;
    let mut k_space = socle_space(c, surface)?;
    let mut linked = Vec::new();
    if k_space.codim() > 1 {
        let mut seen: Vec<CurveModel> = Vec::new();
        'search: for deg in c.s_c..=surface.s {
            for d in residuals_in_degree(c, surface, deg, &mut seen)? {
                k_space = k_space.sum(&d.ideal.graded_piece(e))?;
                linked.push(d.name.clone());
                if k_space.codim() <= 1 {
                    break 'search;
                }
            }
        }
    }
    let mut class = class_from_hyperplane(k_space, surface)?;
    class.linked = linked;
    Ok(class)
}

/// The minors construction for ACM curves, apolarity otherwise.
pub fn annihilator(c: &CurveModel, surface: &SurfaceModel) -> Result<AnnihilatorClass> {
    if c.acm {
        annihilator_acm(c, surface)
    } else {
        annihilator_apolar(c, surface)
    }
}

/// Equal classes have equal hyperplanes.
pub fn classes_equal(a: &AnnihilatorClass, b: &AnnihilatorClass) -> Result<bool> {
    if a.s != b.s || a.surface_fingerprint != b.surface_fingerprint {
        return Err(Error::Argument("classes live on different surfaces".into()));
    }
    match (&a.kernel_hyperplane, &b.kernel_hyperplane) {
        (None, None) => Ok(true),
        (Some(x), Some(y)) => x.equal(y),
        _ => Ok(false),
    }
}

/// Degree-by-degree comparison of `I_α` and `I_C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieceRow {
    pub n: usize,
    pub alpha: usize,
    pub curve: usize,
    pub generated: usize,
    pub saturated: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconstructionVerdict {
    pub m: usize,
    pub reconstructed: bool,
    /// Whether the ideal generated by `I_{α,≤m}` lies in `I_C`.
    pub contained: bool,
    pub rows: Vec<PieceRow>,
}

/// Whether `I_C` is the saturation of the ideal generated by `I_{α,≤m}`.
pub fn reconstruct_check(c: &CurveModel, a: &AnnihilatorClass, m: usize) -> Result<ReconstructionVerdict> {
    let generated = a.ideal_leq(m)?;
    let saturated = generated.saturation();
    let reconstructed = saturated.equals(&c.ideal);
    let contained = c.ideal.contains_ideal(&generated);
    let rows = (0..=a.socle_degree)
        .map(|n| PieceRow {
            n,
            alpha: a.dim(n),
            curve: c.ideal.graded_piece(n).dim(),
            generated: generated.graded_piece(n).dim(),
            saturated: saturated.graded_piece(n).dim(),
        })
        .collect();
    Ok(ReconstructionVerdict { m, reconstructed, contained, rows })
}

/// One degree of the perfectness ledger.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerRow {
    pub j: usize,
    /// `dim I_{D,j}` per accepted pool member.
    pub members: Vec<usize>,
    /// `dim Σ I_{D,j}`
    pub curves: usize,
    /// `dim J_{S,j}`
    pub jacobian: usize,
    /// `dim (Σ I_{D,j} + J_{S,j})`
    pub total: usize,
    /// `dim I_{α,j}`
    pub alpha: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectVerdict {
    pub m: usize,
    pub perfect: bool,
    pub accepted: Vec<String>,
    pub rejected: Vec<(String, String)>,
    pub ledger: Vec<LedgerRow>,
}

/// Compares `Σ_D I_{D,j} + J_{S,j}` with `I_{α,j}` for `j <= m`. The class
/// of each pool member is computed by [`annihilator`]; members whose class
/// differs from `a` (or cannot be determined) are rejected and reported.
pub fn perfect_check(
    a: &AnnihilatorClass,
    pool: &[CurveModel],
    surface: &SurfaceModel,
    m: usize,
) -> Result<PerfectVerdict> {
    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    for d in pool {
        match annihilator(d, surface).and_then(|b| classes_equal(a, &b)) {
            Ok(true) => accepted.push(d),
            Ok(false) => rejected.push((d.name.clone(), "class differs".to_string())),
            Err(e) => rejected.push((d.name.clone(), e.to_string())),
        }
    }
    if a.zero_class {
        return Ok(PerfectVerdict {
            m,
            perfect: true,
            accepted: accepted.iter().map(|d| d.name.clone()).collect(),
            rejected,
            ledger: Vec::new(),
        });
    }
    let k = surface.f.field();
    let mut ledger = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let mut curves = Echelon::new(k, dim_r(j as i64));
        let mut members = Vec::with_capacity(accepted.len());
        for d in &accepted {
            let piece = d.ideal.graded_piece(j);
            members.push(piece.dim());
            for r in piece.rows() {
                curves.insert(r.clone());
            }
        }
        let curves_dim = curves.rank();
        let jac = surface.jacobian.graded_piece(j);
        for r in jac.rows() {
            curves.insert(r.clone());
        }
        ledger.push(LedgerRow { j, members, curves: curves_dim, jacobian: jac.dim(), total: curves.rank(), alpha: a.dim(j) });
    }
    let perfect = ledger.iter().all(|r| r.total == r.alpha);
    Ok(PerfectVerdict { m, perfect, accepted: accepted.iter().map(|d| d.name.clone()).collect(), rejected, ledger })
}

/// Residuals of `C` in `S ∩ V(g)` for a basis `g` of `I_{C,deg}` modulo
/// `f R_{deg-s}`, skipping ideals already in `seen` (which is extended).
fn residuals_in_degree(
    c: &CurveModel,
    surface: &SurfaceModel,
    deg: usize,
    seen: &mut Vec<CurveModel>,
) -> Result<Vec<CurveModel>> {
    let k = c.field();
    let mut span = Echelon::new(k, dim_r(deg as i64));
    if deg >= surface.s {
        for m in basis(deg - surface.s).monomials() {
            span.insert(surface.f.mul_term(1, m).to_dense(deg));
        }
    }
    let mut out = Vec::new();
    for row in c.ideal.graded_piece(deg).rows() {
        if !span.insert(row.clone()) {
            continue;
        }
        let g = Polynomial::from_dense(k, deg, row);
        let mut d = match residual(c, surface, &g) {
            Ok(d) => d,
            // C is the whole intersection
            Err(Error::Argument(_)) => continue,
            Err(e) => return Err(e),
        };
        if !seen.iter().any(|p| p.ideal.equals(&d.ideal)) {
            d.name = format!("{}#{}", d.name, seen.len());
            seen.push(d.clone());
            out.push(d);
        }
    }
    Ok(out)
}

/// Residuals of `C` in `S ∩ V(g)` for a basis `g` of `I_{C,k}` modulo
/// `f R_{k-s}`, for `s(C) <= k <= max_link_degree`, deduplicated by ideal
/// equality.
pub fn liaison_pool(c: &CurveModel, surface: &SurfaceModel, max_link_degree: usize) -> Result<Vec<CurveModel>> {
    let mut seen = Vec::new();
    for deg in c.s_c..=max_link_degree {
        residuals_in_degree(c, surface, deg, &mut seen)?;
    }
    Ok(seen)
}
