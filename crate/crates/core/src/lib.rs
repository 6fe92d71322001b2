//! Annihilator ideals of curve classes on smooth surfaces in `P^3`.
//!
//! Given a curve `C` on a smooth surface `S = V(f)` of degree `s`, the class of
//! `C` modulo the hyperplane class determines a homogeneous ideal `I_α(C)`
//! whose quotient is artinian Gorenstein with socle degree `2s - 4`. This
//! crate computes that ideal exactly over a prime field, by a determinantal
//! construction for ACM curves and by apolarity in general, and decides
//! whether `C` is recovered from its low-degree part and whether the class is
//! spanned by ideals of equal-class curves plus the Jacobian ideal.

pub mod annihilator;
pub mod error;
pub mod geometry;
pub mod ideal;
pub mod report;
pub mod resolution;
pub mod ring;

pub use error::{Error, Result};
