use super::checks::{
    chromatic_check, fiber_check, modular_psi_from, omega_check, orientation_check, reciprocity_from, reiner_check,
    specialization_from, tutte_check, tutte_values_check,
};
use super::complementary::psi_all;
use super::integrals::{exact_level_check, pair_identities};
use super::report::CheckReport;
use crate::error::Result;
use crate::graph::MultiGraph;
use crate::limits::Limits;

/// Groups of checks run by `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    /// Reciprocity laws, specializations, and the modular `ψ` expansion.
    Reciprocity,
    Reiner,
    /// Weighted pair identities and the exact-level count.
    PairIdentities,
    /// `ω` routes, Tutte routes and the chromatic relation.
    Arrangement,
    /// Orientation classes, Tutte value triples and modular fibers.
    Orientation,
}

pub fn grid(values: &[i64]) -> Vec<(i64, i64)> {
    values
        .iter()
        .flat_map(|&p| values.iter().map(move |&q| (p, q)))
        .collect()
}

/// Triples are counted on graphs with at most this many non-loop edges.
pub const TRIPLE_EDGE_LIMIT: usize = 5;
/// Fibers are enumerated on graphs with at most this many edges.
pub const FIBER_EDGE_LIMIT: usize = 4;

pub fn run_suite(g: &MultiGraph, suite: Suite, limits: &Limits) -> Result<Vec<CheckReport>> {
    let wants = |s: Suite| suite == Suite::All || suite == s;
    let mut out = Vec::new();
    if wants(Suite::Arrangement) {
        out.push(omega_check(g, &[1, 2, 3, 4], limits)?);
        out.push(tutte_check(g, limits)?);
        out.push(chromatic_check(g, limits)?);
    }
    if wants(Suite::Reciprocity) {
        let fam = psi_all(g, limits)?;
        out.push(reciprocity_from(g, &fam));
        out.push(specialization_from(g, &fam, &grid(&[2, 3, 4]), limits)?);
        out.push(modular_psi_from(g, &fam, &grid(&[2, 3]), &[-1, 0, 1, 2], limits)?);
    }
    if wants(Suite::Reiner) {
        out.push(reiner_check(g, &grid(&[2, 3, 4]), limits)?);
    }
    if wants(Suite::PairIdentities) {
        for (p, q) in grid(&[2, 3]) {
            out.push(pair_identities(g, p, q, limits)?.report);
            out.push(exact_level_check(g, p, q, limits)?);
        }
    }
    if wants(Suite::Orientation) {
        out.push(orientation_check(g, limits)?);
        if g.non_loop_edges().len() <= TRIPLE_EDGE_LIMIT {
            out.push(tutte_values_check(g, &grid(&[1, 2, 3]), limits)?);
        }
        if g.edge_count() <= FIBER_EDGE_LIMIT {
            for (p, q) in grid(&[2, 3]) {
                out.push(fiber_check(g, p, q, limits)?);
            }
        }
    }
    Ok(out)
}
