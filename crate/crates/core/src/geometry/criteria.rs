use serde::Serialize;

use super::{CurveModel, SurfaceModel};
use crate::error::{Error, Result};

/// The three sufficient conditions for reconstruction at level `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub p: usize,
    pub s: usize,
    /// `h^1(I_C(2s - 4 - p))`
    pub h1_ideal: i64,
    pub h1_vanishes: bool,
    pub normal_twist: i64,
    pub normal_vanishes: bool,
    pub generated_leq_p: bool,
    pub holds: bool,
}

/// Evaluates `h^1(I_C(2s-4-p)) = 0`, `h^0(N_C(p-s)) = 0` and "I_C is
/// generated in degrees `<= p`".
pub fn reconstruction_criterion(c: &CurveModel, surface: &SurfaceModel, p: usize) -> Result<CriterionReport> {
    let s = surface.s as i64;
    let twist = 2 * s - 4 - p as i64;
    let h1_ideal = c.h1_ideal_sheaf(twist)?;
    let normal_twist = p as i64 - s;
    let normal_vanishes = c.normal_vanishing(normal_twist)?;
    let generated_leq_p = c.ideal.generated_in_degrees_leq(p);
    let h1_vanishes = h1_ideal == 0;
    Ok(CriterionReport {
        p,
        s: surface.s,
        h1_ideal,
        h1_vanishes,
        normal_twist,
        normal_vanishes,
        generated_leq_p,
        holds: h1_vanishes && normal_vanishes && generated_leq_p,
    })
}

/// Whether `s >= 2 e(C) + 8 - s(C)`, the bound for ACM reconstruction at level
/// `e(C) + 3`.
pub fn acm_bound_holds(c: &CurveModel, s: usize) -> Result<bool> {
    let e = c.e_c.ok_or_else(|| Error::UnsupportedCurve(format!("{}: e(C) unknown", c.name)))?;
    Ok(c.acm && s as i64 >= 2 * e + 8 - c.s_c as i64)
}

/// Smallest `n >= 1` with `binom(n+3, 3) - n d - 1 >= 0`, and the surface
/// degree threshold `n0 + 3`.
pub fn n0_of_degree(d: i64) -> Result<(i64, i64)> {
    if d < 3 {
        return Err(Error::Argument(format!("n0 is defined for d >= 3, got {d}")));
    }
    let n0 = (1..).find(|n: &i64| (n + 3) * (n + 2) * (n + 1) / 6 - n * d - 1 >= 0).unwrap();
    Ok((n0, n0 + 3))
}
