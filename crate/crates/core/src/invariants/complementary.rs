//! Per-orientation complementary counts `κ_ρ`, `κ̄_ρ` and the four weighted
//! sums `ψ_z`, `ψ̄_z`, `ψ`, `ψ̄`.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{interpolate_counts_rational, MultiPoly, ScaledPoly, Var};
use crate::error::Result;
use crate::graph::{EdgeSubset, MultiGraph, Orientation};
use crate::limits::Limits;
use crate::orientations::{all_orientations, classify_edges, cut_eulerian_classes, OrientationClass};
use crate::tensionflow::{count_integral_flows, count_integral_tensions, windows_for, SupportConstraints, WindowMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KappaMode {
    /// `0 < f < p` on `B_ρ`, `0 < g < q` on `C_ρ`.
    Open,
    /// `0 ≤ f ≤ p` on `B_ρ`, `0 ≤ g ≤ q` on `C_ρ`.
    Closed,
}

impl KappaMode {
    fn window(self) -> WindowMode {
        match self {
            KappaMode::Open => WindowMode::Open,
            KappaMode::Closed => WindowMode::Closed,
        }
    }
}

/// `τ_ρ(G,B_ρ;x)`, integer tensions of `(G,ρ)` vanishing on `C_ρ` and lying
/// in the mode's window on `B_ρ`. An Ehrhart-type count: its coefficients
/// are rational in general (`(x−1)(x−2)/2` for a transitive triangle).
pub fn tau_rho(g: &MultiGraph, rho: &Orientation, mode: KappaMode, limits: &Limits) -> Result<ScaledPoly> {
    let (b, _) = classify_edges(g, rho)?;
    let constraints = SupportConstraints::on(b);
    interpolate_counts_rational(Var::X, g.rank(), 1, |p| {
        let w = windows_for(g.edge_count(), p, mode.window(), &constraints)?;
        Ok(BigInt::from(count_integral_tensions(g, rho, &w, limits)?))
    })
}

/// `φ_ρ(G,C_ρ;y)`, integer flows of `(G,ρ)` vanishing on `B_ρ` and lying
/// in the mode's window on `C_ρ`.
pub fn phi_rho(g: &MultiGraph, rho: &Orientation, mode: KappaMode, limits: &Limits) -> Result<ScaledPoly> {
    let (_, c) = classify_edges(g, rho)?;
    let constraints = SupportConstraints::on(c);
    interpolate_counts_rational(Var::Y, g.nullity(), 1, |q| {
        let w = windows_for(g.edge_count(), q, mode.window(), &constraints)?;
        Ok(BigInt::from(count_integral_flows(g, rho, &w, limits)?))
    })
}

/// `κ_ρ = τ_ρ(x) φ_ρ(y)` (open) or `κ̄_ρ` (closed).
pub fn kappa_rho(g: &MultiGraph, rho: &Orientation, mode: KappaMode, limits: &Limits) -> Result<ScaledPoly> {
    Ok(&tau_rho(g, rho, mode, limits)? * &phi_rho(g, rho, mode, limits)?)
}

/// Everything the ψ sums need from one orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationTerm {
    pub orientation: Orientation,
    pub b: EdgeSubset,
    pub c: EdgeSubset,
    pub kappa: ScaledPoly,
    pub kappa_bar: ScaledPoly,
}

impl OrientationTerm {
    fn weight(&self) -> MultiPoly {
        MultiPoly::monomial(Var::Z, self.b.len() as u32) * MultiPoly::monomial(Var::W, self.c.len() as u32)
    }

    /// `ψ_ρ = z^{|B_ρ|} w^{|C_ρ|} κ_ρ`.
    pub fn psi(&self) -> ScaledPoly {
        &self.kappa * &self.weight()
    }

    /// `ψ̄_ρ = z^{|B_ρ|} w^{|C_ρ|} κ̄_ρ`.
    pub fn psi_bar(&self) -> ScaledPoly {
        &self.kappa_bar * &self.weight()
    }
}

/// Terms for every orientation, in orientation-code order. Orientations
/// are processed in parallel; the result order does not depend on the
/// pool size.
pub fn orientation_terms(g: &MultiGraph, limits: &Limits) -> Result<Vec<OrientationTerm>> {
    let all = all_orientations(g, limits)?;
    all.into_par_iter()
        .map(|o| {
            let (b, c) = classify_edges(g, &o)?;
            Ok(OrientationTerm {
                kappa: kappa_rho(g, &o, KappaMode::Open, limits)?,
                kappa_bar: kappa_rho(g, &o, KappaMode::Closed, limits)?,
                orientation: o,
                b,
                c,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PsiKind {
    PsiZ,
    BarPsiZ,
    Psi,
    BarPsi,
}

impl PsiKind {
    pub const ALL: [PsiKind; 4] = [PsiKind::PsiZ, PsiKind::BarPsiZ, PsiKind::Psi, PsiKind::BarPsi];

    pub fn name(self) -> &'static str {
        match self {
            PsiKind::PsiZ => "psi_z",
            PsiKind::BarPsiZ => "bar_psi_z",
            PsiKind::Psi => "psi",
            PsiKind::BarPsi => "bar_psi",
        }
    }
}

/// All four weighted complementary polynomials of one graph, with the data
/// they were assembled from.
#[derive(Debug, Clone)]
pub struct PsiFamily {
    pub terms: Vec<OrientationTerm>,
    pub classes: Vec<OrientationClass>,
    pub psi_z: ScaledPoly,
    pub bar_psi_z: ScaledPoly,
    pub psi: ScaledPoly,
    pub bar_psi: ScaledPoly,
}

impl PsiFamily {
    pub fn get(&self, kind: PsiKind) -> &ScaledPoly {
        match kind {
            PsiKind::PsiZ => &self.psi_z,
            PsiKind::BarPsiZ => &self.bar_psi_z,
            PsiKind::Psi => &self.psi,
            PsiKind::BarPsi => &self.bar_psi,
        }
    }

    /// Term of a class representative.
    pub fn representative_term(&self, g: &MultiGraph, cls: &OrientationClass) -> &OrientationTerm {
        &self.terms[cls.representative().code(g) as usize]
    }
}

/// Builds all four sums.
///
/// `ψ_z` and `ψ̄_z` run over all orientations; a loop is stored with a
/// single orientation but integer flows on it take both signs, so the
/// orientation sum is multiplied by `2^{#loops}`. `ψ` and `ψ̄` run over
/// one representative per cut-Eulerian class. Coefficients are rational
/// in general: `κ_ρ` is an Ehrhart-type count, and so are the integral
/// tension and flow polynomials that `ψ_z` specializes to.
pub fn psi_all(g: &MultiGraph, limits: &Limits) -> Result<PsiFamily> {
    let terms = orientation_terms(g, limits)?;
    let classes = cut_eulerian_classes(g, limits)?;
    let loops = BigInt::from(1u64) << g.loop_count();
    let psi_z = terms.iter().map(OrientationTerm::psi).sum::<ScaledPoly>().scale(&loops);
    let bar_psi_z = terms
        .iter()
        .map(OrientationTerm::psi_bar)
        .sum::<ScaledPoly>()
        .scale(&loops);
    let rep = |c: &OrientationClass| &terms[c.representative().code(g) as usize];
    let psi = classes.iter().map(|c| rep(c).psi()).sum::<ScaledPoly>();
    let bar_psi = classes.iter().map(|c| rep(c).psi_bar()).sum::<ScaledPoly>();
    Ok(PsiFamily {
        terms,
        classes,
        psi_z,
        bar_psi_z,
        psi,
        bar_psi,
    })
}

pub fn psi_family(g: &MultiGraph, kind: PsiKind, limits: &Limits) -> Result<ScaledPoly> {
    Ok(psi_all(g, limits)?.get(kind).clone())
}
