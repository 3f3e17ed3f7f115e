//! The named polynomials and the checkers that compare their routes.

mod basic;
mod checks;
mod complementary;
mod integrals;
mod report;
mod suite;

pub use basic::{
    chromatic_by_colorings, chromatic_poly, flow_poly, integral_flow_poly, integral_tension_poly, modular_flow_count,
    modular_tension_count, omega, omega_brute, proper_colorings, tension_poly, tutte, tutte_checked, whitney,
    OmegaRoute, TutteRoute,
};
pub use checks::{
    chromatic_check, fiber_check, modular_psi_check, omega_check, orientation_check, reciprocity_check, reiner_check,
    reiner_sums, specialization_check, tutte_check, tutte_value_triples, tutte_values_check, Quadrant,
};
pub use complementary::{
    kappa_rho, orientation_terms, phi_rho, psi_all, psi_family, tau_rho, KappaMode, OrientationTerm, PsiFamily, PsiKind,
};
pub use integrals::{
    exact_level_check, exact_level_count, exact_level_formula, pair_identities, uv_integral_lhs, DomainReading,
    FlowExponent, PairIdentityReport, ReadingOutcome,
};
pub use report::{CheckItem, CheckReport, PolynomialReport, Route};
pub use suite::{grid, run_suite, Suite, FIBER_EDGE_LIMIT, TRIPLE_EDGE_LIMIT};
