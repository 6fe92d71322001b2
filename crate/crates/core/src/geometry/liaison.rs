use super::{CurveModel, Link, SurfaceModel};
use crate::error::{Error, Result};
use crate::ideal::IdealHandle;

/// The curve `D` residual to `C` in `S ∩ V(g)`, with ideal `(f, g) : I_C`.
///
/// Degree and genus are read from the Hilbert polynomial and checked against
/// the liaison formulas `d_D = k s - d_C` and
/// `g_D - g_C = (d_D - d_C)(s + k - 4) / 2` with `k = deg g`.
pub fn residual(c: &CurveModel, surface: &SurfaceModel, g: &crate::ring::Polynomial) -> Result<CurveModel> {
    let k = g
        .degree()
        .filter(|_| g.is_homogeneous())
        .ok_or_else(|| Error::Argument("linking form must be a nonzero form".into()))?;
    if !c.ideal.contains(g) {
        return Err(Error::NotMember { remainder: c.ideal.gb().normal_form(g).to_string() });
    }
    if !c.ideal.contains(&surface.f) {
        return Err(Error::NotMember { remainder: c.ideal.gb().normal_form(&surface.f).to_string() });
    }
    let s = surface.s as i64;
    let x = IdealHandle::new(c.field(), vec![surface.f.clone(), g.clone()])?;
    if x.curve_degree_genus().map(|(d, _)| d) != Some(s * k as i64) {
        return Err(Error::ImproperIntersection);
    }
    let ideal = x.quotient(&c.ideal);
    if ideal.is_unit() {
        return Err(Error::Argument(format!("{} is the whole complete intersection; the residual is empty", c.name)));
    }
    let name = format!("residual({}, {k})", c.name);
    let mut d = CurveModel::from_ideal(name, ideal, None)?;
    let kk = k as i64;
    if d.degree != kk * s - c.degree || 2 * (d.genus - c.genus) != (d.degree - c.degree) * (s + kk - 4) {
        return Err(Error::Invariant(format!(
            "residual has (d, g) = ({}, {}), liaison predicts degree {}",
            d.degree,
            d.genus,
            kk * s - c.degree
        )));
    }
    d.link = Some(Link { partner: c.name.clone(), link_degree: k });
    Ok(d)
}
