use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{IdealHandle, STABILIZATION_WINDOW};
use crate::resolution::hilbert_burch;
use crate::ring::linalg::{left_kernel, Echelon};
use crate::ring::{basis, dim_r, parse_poly, Polynomial, PrimeField, NVARS};

/// Curves with known closed-form cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogName {
    TwistedCubic,
    RationalQuartic31,
    CompleteIntersection(usize, usize),
    Line,
    Conic,
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::TwistedCubic => write!(f, "twisted_cubic"),
            CatalogName::RationalQuartic31 => write!(f, "rational_quartic_31"),
            CatalogName::CompleteIntersection(a, b) => write!(f, "complete_intersection({a},{b})"),
            CatalogName::Line => write!(f, "line"),
            CatalogName::Conic => write!(f, "conic"),
        }
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    /// Accepts `twisted_cubic`, `rational_quartic_31`, `line`, `conic` and
    /// `complete_intersection(d1,d2)` (or `ci(d1,d2)`); dashes and
    /// underscores are interchangeable.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.trim().to_ascii_lowercase().replace('-', "_").split_whitespace().collect();
        match t.as_str() {
            "twisted_cubic" => return Ok(CatalogName::TwistedCubic),
            "rational_quartic_31" | "rational_quartic" => return Ok(CatalogName::RationalQuartic31),
            "line" => return Ok(CatalogName::Line),
            "conic" => return Ok(CatalogName::Conic),
            _ => {}
        }
        let args = t
            .strip_prefix("complete_intersection(")
            .or_else(|| t.strip_prefix("ci("))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Argument(format!("unknown catalog curve '{s}'")))?;
        let parts: Vec<&str> = args.split(',').collect();
        let parse = |x: &str| x.parse::<usize>().ok().filter(|d| *d >= 1);
        match parts.as_slice() {
            [a, b] => match (parse(a), parse(b)) {
                (Some(a), Some(b)) => Ok(CatalogName::CompleteIntersection(a, b)),
                _ => Err(Error::Argument(format!("bad degrees in '{s}'"))),
            },
            _ => Err(Error::Argument(format!("complete_intersection needs two degrees, got '{s}'"))),
        }
    }
}

/// Closed-form rules for `h^0(O_C(n))` and for the vanishing of
/// `h^0(N_{C/P^3}(n))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CohomologyRules {
    /// Smooth rational curve of degree `d`; normal bundle `O(2d-1)^2` on `P^1`
    /// except for the plane conic, where it is `O(2) + O(4)`.
    Rational { d: i64 },
    /// ACM curve: `h^0(O_C(n))` is the Hilbert function of `R/I_C`, and
    /// `h^0(N(n)) = 0` exactly for `n <= s(C) - e(C) - 5`.
    Acm { s_c: i64, e_c: i64 },
    /// Complete intersection of degrees `d1, d2`: `N = O_C(d1) + O_C(d2)`.
    CompleteIntersection { d1: i64, d2: i64 },
}

/// A curve with its saturated ideal and numerical invariants.
#[derive(Clone, Debug)]
pub struct CurveModel {
    pub name: String,
    pub ideal: IdealHandle,
    pub degree: i64,
    pub genus: i64,
    pub acm: bool,
    pub s_c: usize,
    pub e_c: Option<i64>,
    pub rules: Option<CohomologyRules>,
    /// Set on residual curves: `C + D ~ link_degree * H` on the surface.
    pub link: Option<Link>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Link {
    pub partner: String,
    pub link_degree: usize,
}

impl CurveModel {
    /// Builds a model from a saturated curve ideal; degree, genus, `s(C)` and
    /// the ACM flag are recomputed from the ideal.
    pub fn from_ideal(name: impl Into<String>, ideal: IdealHandle, rules: Option<CohomologyRules>) -> Result<Self> {
        let name = name.into();
        let (degree, genus) = ideal
            .curve_degree_genus()
            .ok_or_else(|| Error::Argument(format!("{name}: Hilbert polynomial is not that of a curve")))?;
        let s_c = minimal_surface_degree(&ideal);
        let acm = hilbert_burch(&ideal).is_ok();
        let mut c = CurveModel { name, ideal, degree, genus, acm, s_c, e_c: None, rules, link: None };
        if c.rules.is_some() {
            c.e_c = Some(c.speciality_index()?);
        }
        Ok(c)
    }

    pub fn field(&self) -> PrimeField {
        self.ideal.field()
    }

    fn rules(&self) -> Result<CohomologyRules> {
        self.rules.ok_or_else(|| Error::UnsupportedCurve(format!("{}: no cohomology rules", self.name)))
    }

    /// `h^0(O_C(n))`.
    pub fn h0_oc(&self, n: i64) -> Result<i64> {
        if n < 0 {
            return Ok(0);
        }
        Ok(match self.rules()? {
            CohomologyRules::Rational { d } => d * n + 1,
            CohomologyRules::Acm { .. } | CohomologyRules::CompleteIntersection { .. } => {
                self.ideal.hilbert_function(n) as i64
            }
        })
    }

    /// Whether `h^0(N_{C/P^3}(n)) = 0`.
    pub fn normal_vanishing(&self, n: i64) -> Result<bool> {
        Ok(match self.rules()? {
            CohomologyRules::Rational { d: 2 } => n <= -3,
            CohomologyRules::Rational { d } => 2 * d - 1 + d * n < 0,
            CohomologyRules::Acm { s_c, e_c } => n <= s_c - e_c - 5,
            CohomologyRules::CompleteIntersection { d1, d2 } => d1 + n < 0 && d2 + n < 0,
        })
    }

    /// `h^1(I_C(n)) = h^0(O_C(n)) - dim (R/I_C)_n`.
    pub fn h1_ideal_sheaf(&self, n: i64) -> Result<i64> {
        Ok(self.h0_oc(n)? - self.ideal.hilbert_function(n) as i64)
    }

    /// `e(C) = max { n : h^0(O_C(n)) > d n + 1 - g }`.
    pub fn speciality_index(&self) -> Result<i64> {
        // h^1(O_C(n)) vanishes for n > 2g - 2 and is positive for n very negative
        let hi = 2 * self.genus.max(0) + 2;
        let lo = -hi - 4;
        for n in (lo..=hi).rev() {
            if self.h0_oc(n)? - (self.degree * n + 1 - self.genus) > 0 {
                return Ok(n);
            }
        }
        Err(Error::Invariant(format!("{}: no special twist in [{lo}, {hi}]", self.name)))
    }
}

/// `s(C) = min { n : I_{C,n} != 0 }`.
pub fn minimal_surface_degree(ideal: &IdealHandle) -> usize {
    ideal.generator_degrees().into_iter().min().unwrap_or(0)
}

/// `(e(C), s(C))` from the catalog rules and the ideal.
pub fn speciality_and_minimal_degree(c: &CurveModel) -> Result<(i64, usize)> {
    Ok((c.speciality_index()?, minimal_surface_degree(&c.ideal)))
}

/// A binary form of degree `deg`, coefficient `k` on `u^k v^(deg-k)`.
#[derive(Clone, Debug)]
struct BinaryForm {
    deg: usize,
    coeffs: Vec<u32>,
}

impl BinaryForm {
    fn monomial(deg: usize, u_exp: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[u_exp] = 1;
        BinaryForm { deg, coeffs }
    }

    fn one() -> Self {
        BinaryForm { deg: 0, coeffs: vec![1] }
    }

    fn mul(&self, other: &Self, k: PrimeField) -> Self {
        let mut coeffs = vec![0u32; self.deg + other.deg + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = k.add(coeffs[i + j], k.mul(*a, *b));
            }
        }
        BinaryForm { deg: self.deg + other.deg, coeffs }
    }
}

/// Ideal of the image of `P^1 -> P^3` given by four binary forms of equal
/// degree, degree by degree as the kernel of the substitution map, stopping
/// after [`STABILIZATION_WINDOW`] degrees without new generators.
fn eliminate(k: PrimeField, param: &[BinaryForm; NVARS]) -> Result<IdealHandle> {
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut quiet = 0;
    let mut n = 1;
    while gens.is_empty() || quiet < STABILIZATION_WINDOW {
        let images: Vec<Vec<u32>> = basis(n)
            .monomials()
            .iter()
            .map(|m| {
                let mut acc = BinaryForm::one();
                for (v, form) in param.iter().enumerate() {
                    for _ in 0..m.exponent(v) {
                        acc = acc.mul(form, k);
                    }
                }
                acc.coeffs
            })
            .collect();
        let width = images[0].len();
        let kernel = left_kernel(k, width, &images);
        let have = IdealHandle::new(k, gens.clone())?;
        let mut span = if gens.is_empty() { Echelon::new(k, dim_r(n as i64)) } else { have.graded_piece(n).echelon() };
        let mut added = false;
        for v in kernel {
            if span.insert(v.clone()) {
                gens.push(Polynomial::from_dense(k, n, &v));
                added = true;
            }
        }
        quiet = if added { 0 } else { quiet + 1 };
        n += 1;
        if n > 12 {
            return Err(Error::Invariant("elimination did not stabilise".into()));
        }
    }
    IdealHandle::new(k, gens)
}

fn monomial_curve(k: PrimeField, deg: usize, u_exps: [usize; NVARS]) -> Result<IdealHandle> {
    eliminate(k, &u_exps.map(|e| BinaryForm::monomial(deg, e)))
}

/// Equations `Σ x_i^d1` and `x^d2 + 2y^d2 + 3z^d2 + 4w^d2`.
pub fn complete_intersection_equations(k: PrimeField, d1: usize, d2: usize) -> (Polynomial, Polynomial) {
    let power_sum = |d: usize, weights: [i64; NVARS]| {
        let mut acc = Polynomial::zero(k);
        for (v, c) in weights.iter().enumerate() {
            acc = &acc + &Polynomial::var(k, v).pow(d as u32).scale(k.from_i64(*c));
        }
        acc
    };
    (power_sum(d1, [1, 1, 1, 1]), power_sum(d2, [1, 2, 3, 4]))
}

/// Catalog curves. Rational curves are obtained by elimination from monomial
/// parametrisations:
///
/// | name | parametrisation |
/// |---|---|
/// | line | `(u, v, 0, 0)` |
/// | conic | `(u^2, uv, v^2, 0)` |
/// | twisted cubic | `(u^3, u^2 v, u v^2, v^3)` |
/// | rational quartic (3,1) | `(u^4, u^3 v, u v^3, v^4)` |
pub fn catalog(k: PrimeField, name: CatalogName) -> Result<CurveModel> {
    let (ideal, rules) = match name {
        CatalogName::Line => {
            let x = [BinaryForm::monomial(1, 1), BinaryForm::monomial(1, 0), zero_form(1), zero_form(1)];
            (eliminate(k, &x)?, CohomologyRules::Rational { d: 1 })
        }
        CatalogName::Conic => {
            let x = [BinaryForm::monomial(2, 2), BinaryForm::monomial(2, 1), BinaryForm::monomial(2, 0), zero_form(2)];
            (eliminate(k, &x)?, CohomologyRules::Rational { d: 2 })
        }
        CatalogName::TwistedCubic => (monomial_curve(k, 3, [3, 2, 1, 0])?, CohomologyRules::Rational { d: 3 }),
        CatalogName::RationalQuartic31 => (monomial_curve(k, 4, [4, 3, 1, 0])?, CohomologyRules::Rational { d: 4 }),
        CatalogName::CompleteIntersection(d1, d2) => {
            if d1 == 0 || d2 == 0 {
                return Err(Error::Argument("complete intersection degrees must be positive".into()));
            }
            let (a, b) = complete_intersection_equations(k, d1, d2);
            (IdealHandle::new(k, vec![a, b])?, CohomologyRules::CompleteIntersection { d1: d1 as i64, d2: d2 as i64 })
        }
    };
    let c = CurveModel::from_ideal(name.to_string(), ideal, Some(rules))?;
    Ok(c)
}

fn zero_form(deg: usize) -> BinaryForm {
    BinaryForm { deg, coeffs: vec![0; deg + 1] }
}

/// Parses a catalog ideal given by generator strings (test and fixture helper).
pub fn ideal_from_strs(k: PrimeField, gens: &[&str]) -> Result<IdealHandle> {
    let polys = gens.iter().map(|s| parse_poly(s, k)).collect::<Result<Vec<_>>>()?;
    IdealHandle::new(k, polys)
}
