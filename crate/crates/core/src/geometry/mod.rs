//! Catalog curves and surfaces, liaison residuals, reconstruction criteria
//! and the intersection-lattice classification on a quartic surface.

mod catalog;
mod criteria;
pub mod lattice;
mod liaison;
mod surface;

pub use catalog::{
    catalog, complete_intersection_equations, ideal_from_strs, minimal_surface_degree, speciality_and_minimal_degree,
    CatalogName, CohomologyRules, CurveModel, Link,
};
pub use criteria::{acm_bound_holds, n0_of_degree, reconstruction_criterion, CriterionReport};
pub use lattice::{lattice_classification, lattice_scan, LatticeCandidate, LatticeSolution, Rejection};
pub use liaison::residual;
pub use surface::{random_form, random_surface_containing, SurfaceModel, COEFF_BOUND, RETRY_CAP};
