use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CurveModel;
use crate::error::{Error, Result};
use crate::ideal::IdealHandle;
use crate::ring::{basis, Polynomial, NVARS};

/// Attempts made by [`random_surface_containing`] before giving up.
pub const RETRY_CAP: usize = 8;

/// Coefficients of random forms are integers in `[-COEFF_BOUND, COEFF_BOUND]`,
/// reduced mod `p`, so two primes see the same surface over `Q`.
pub const COEFF_BOUND: i64 = 10_000;

/// A surface `S = V(f)` with its Jacobian ideal.
#[derive(Clone, Debug)]
pub struct SurfaceModel {
    pub f: Polynomial,
    pub s: usize,
    pub jacobian: IdealHandle,
}

impl SurfaceModel {
    pub fn new(f: Polynomial) -> Result<Self> {
        let s = f
            .degree()
            .filter(|d| *d >= 1 && f.is_homogeneous())
            .ok_or_else(|| Error::Argument("surface equation must be a form of positive degree".into()))?;
        let partials = (0..NVARS).map(|v| f.partial_derivative(v)).collect();
        let jacobian = IdealHandle::new(f.field(), partials)?;
        Ok(SurfaceModel { f, s, jacobian })
    }

    /// Smooth iff the Jacobian ideal is irrelevant. Needs `p ∤ s`, which
    /// makes `f ∈ J_S` by Euler's relation.
    pub fn is_smooth(&self) -> bool {
        self.jacobian.is_artinian().0
    }

    /// Like [`SurfaceModel::new`], rejecting singular surfaces.
    pub fn smooth(f: Polynomial) -> Result<Self> {
        let s = Self::new(f)?;
        if s.s as u32 % s.f.field().prime() == 0 {
            return Err(Error::Argument(format!("prime {} divides the degree {}", s.f.field().prime(), s.s)));
        }
        if !s.is_smooth() {
            return Err(Error::Singular);
        }
        Ok(s)
    }

    /// Hex SHA-256 of the canonical text of `f`.
    pub fn fingerprint(&self) -> String {
        use sha2::{Digest, Sha256};
        let digest = Sha256::digest(self.f.to_string().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// A random form of degree `n` with integer coefficients drawn from `rng`.
pub fn random_form(k: crate::ring::PrimeField, n: usize, rng: &mut impl Rng) -> Polynomial {
    Polynomial::from_terms(
        k,
        basis(n).monomials().iter().map(|m| (*m, k.from_i64(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)))),
    )
}

/// `f = Σ u_i h_i` over the generators `h_i` of `I_C` with random forms
/// `u_i`, drawn from ChaCha8 seeded with `seed`; retried until the Jacobian
/// ideal is irrelevant, at most [`RETRY_CAP`] times.
pub fn random_surface_containing(c: &CurveModel, s: usize, seed: u64) -> Result<SurfaceModel> {
    if s < c.s_c {
        return Err(Error::Argument(format!("no surface of degree {s} contains {} (s(C) = {})", c.name, c.s_c)));
    }
    let k = c.field();
    if s as u32 % k.prime() == 0 {
        return Err(Error::Argument(format!("prime {} divides the degree {s}", k.prime())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_CAP {
        let mut f = Polynomial::zero(k);
        for h in c.ideal.generators() {
            let d = h.degree().unwrap();
            if d > s {
                continue;
            }
            f = &f + &(&random_form(k, s - d, &mut rng) * h);
        }
        if f.is_zero() {
            continue;
        }
        let surface = SurfaceModel::new(f)?;
        if surface.is_smooth() {
            return Ok(surface);
        }
    }
    Err(Error::SmoothnessNotAchieved { attempts: RETRY_CAP })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{catalog, CatalogName};
    use crate::ring::{parse_poly, PrimeField};

    fn k() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn fermat_is_smooth_cone_is_not() {
        let f = SurfaceModel::smooth(parse_poly("x^4 + y^4 + z^4 + w^4", k()).unwrap()).unwrap();
        assert_eq!(f.jacobian.graded_piece(3).dim(), 4);
        assert_eq!(f.jacobian.is_artinian(), (true, Some(8)));
        assert!(f.jacobian.contains(&f.f));
        let cone = parse_poly("x^2 + y^2 + z^2", k()).unwrap();
        assert!(matches!(SurfaceModel::smooth(cone), Err(Error::Singular)));
    }

    #[test]
    fn random_quartic_through_twisted_cubic() {
        let c = catalog(k(), CatalogName::TwistedCubic).unwrap();
        let s = random_surface_containing(&c, 4, 7).unwrap();
        assert!(c.ideal.contains(&s.f));
        assert!(s.is_smooth());
        assert_eq!(s.fingerprint(), random_surface_containing(&c, 4, 7).unwrap().fingerprint());
        assert_ne!(s.f, random_surface_containing(&c, 4, 8).unwrap().f);
        assert!(random_surface_containing(&c, 1, 7).is_err());
    }

    #[test]
    fn random_quartic_through_rational_quartic() {
        let c = catalog(k(), CatalogName::RationalQuartic31).unwrap();
        let s = random_surface_containing(&c, 4, 3).unwrap();
        let (art, socle) = s.jacobian.is_artinian();
        assert!(art && socle.unwrap() <= 8);
    }
}
