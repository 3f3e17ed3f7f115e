//! Subset expansions, the Tutte recursion, and the one-variable
//! polynomials obtained by interpolating counts.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{interpolate_counts, interpolate_counts_rational, MultiPoly, ScaledPoly, Var};
use crate::arrangements::{graphic_characteristic_polynomial, graphic_semilattice};
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, MultiGraph, Orientation};
use crate::limits::{saturating_pow, Limits};
use crate::tensionflow::{
    count_integral_flows, count_integral_tensions, enumerate_flows, enumerate_tensions, pair_census, windows_for,
    FiniteAbelianGroup, PairPredicate, SupportConstraints, WindowMode,
};

fn x_pow(e: usize) -> MultiPoly {
    MultiPoly::monomial(Var::X, e as u32)
}

fn y_pow(e: usize) -> MultiPoly {
    MultiPoly::monomial(Var::Y, e as u32)
}

/// Rank generating polynomial `R(G;x,y) = Σ_X x^{r(G)−r⟨X⟩} y^{n⟨X⟩}`.
pub fn whitney(g: &MultiGraph, limits: &Limits) -> Result<MultiPoly> {
    limits.check_edges("whitney expansion", g.edge_count())?;
    let r = g.rank();
    let mut acc = std::collections::BTreeMap::<(usize, usize), i64>::new();
    for x in EdgeSubset::all(g.edge_count()) {
        let (rx, nx) = g.rank_nullity(&x);
        *acc.entry((r - rx, nx)).or_default() += 1;
    }
    Ok(acc
        .into_iter()
        .map(|((a, b), c)| (x_pow(a) * y_pow(b)).scale(&BigInt::from(c)))
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TutteRoute {
    /// Deletion-contraction with the loop and bridge cases.
    Recursion,
    /// `R(G; x−1, y−1)`.
    Shift,
}

pub fn tutte(g: &MultiGraph, route: TutteRoute, limits: &Limits) -> Result<MultiPoly> {
    limits.check_edges("tutte", g.edge_count())?;
    match route {
        TutteRoute::Recursion => Ok(tutte_recursive(g)),
        TutteRoute::Shift => {
            let shift = |v: Var| MultiPoly::var(v) - MultiPoly::one();
            Ok(whitney(g, limits)?.substitute(&[(Var::X, shift(Var::X)), (Var::Y, shift(Var::Y))]))
        }
    }
}

fn tutte_recursive(g: &MultiGraph) -> MultiPoly {
    let m = g.edge_count();
    if m == 0 {
        return MultiPoly::one();
    }
    // Peeling the last edge keeps the remaining ids unchanged.
    let e = m - 1;
    let minus = g.delete(e).expect("edge in range").graph;
    if g.is_loop(e) {
        return MultiPoly::var(Var::Y) * tutte_recursive(&minus);
    }
    let slash = g.contract(e).expect("edge in range").graph;
    if g.is_bridge(e) {
        return MultiPoly::var(Var::X) * tutte_recursive(&slash);
    }
    tutte_recursive(&minus) + tutte_recursive(&slash)
}

/// Both Tutte routes, failing loudly if they differ.
pub fn tutte_checked(g: &MultiGraph, limits: &Limits) -> Result<MultiPoly> {
    let a = tutte(g, TutteRoute::Recursion, limits)?;
    let b = tutte(g, TutteRoute::Shift, limits)?;
    if a != b {
        return Err(Error::RouteDisagreement {
            what: "tutte".into(),
            detail: format!("recursion {a} vs shift {b} on {}", g.fingerprint()),
        });
    }
    Ok(a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaRoute {
    /// `Σ_X (−1)^{|X|} x^{r⟨E⟩−r⟨X⟩} y^{n⟨X^c⟩}`.
    Expansion,
    /// Characteristic polynomial of the graphic tension-flow arrangement.
    Arrangement,
}

/// Hyperbolic tension-flow polynomial `ω(G;x,y)`.
pub fn omega(g: &MultiGraph, route: OmegaRoute, limits: &Limits) -> Result<MultiPoly> {
    limits.check_edges("omega", g.edge_count())?;
    match route {
        OmegaRoute::Expansion => {
            let r = g.rank();
            let mut acc = std::collections::BTreeMap::<(usize, usize), i64>::new();
            for x in EdgeSubset::all(g.edge_count()) {
                let sign = if x.len() % 2 == 0 { 1 } else { -1 };
                let n_c = g.nullity_of(x.complement().mask());
                *acc.entry((r - g.rank_of(x.mask()), n_c)).or_default() += sign;
            }
            Ok(acc
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|((a, b), c)| (x_pow(a) * y_pow(b)).scale(&BigInt::from(c)))
                .sum())
        }
        OmegaRoute::Arrangement => Ok(graphic_characteristic_polynomial(&graphic_semilattice(g, limits)?)),
    }
}

/// Nowhere-zero pairs over `A × B`, counted by enumeration.
pub fn omega_brute(g: &MultiGraph, a: &FiniteAbelianGroup, b: &FiniteAbelianGroup, limits: &Limits) -> Result<BigInt> {
    Ok(pair_census(g, &Orientation::identity(g), a, b, limits)?.count(PairPredicate::NowhereZero))
}

/// Number of nowhere-zero tensions over `Z_q`.
pub fn modular_tension_count(g: &MultiGraph, q: u64, limits: &Limits) -> Result<BigInt> {
    let grp = FiniteAbelianGroup::cyclic(q)?;
    let o = Orientation::identity(g);
    let n = enumerate_tensions(g, &o, &grp, limits)?
        .into_iter()
        .filter(|f| f.kernel().is_empty())
        .count();
    Ok(BigInt::from(n))
}

/// Number of nowhere-zero flows over `Z_q`.
pub fn modular_flow_count(g: &MultiGraph, q: u64, limits: &Limits) -> Result<BigInt> {
    let grp = FiniteAbelianGroup::cyclic(q)?;
    let o = Orientation::identity(g);
    let n = enumerate_flows(g, &o, &grp, limits)?
        .into_iter()
        .filter(|h| h.kernel().is_empty())
        .count();
    Ok(BigInt::from(n))
}

/// Tension polynomial `τ(G,t)`.
pub fn tension_poly(g: &MultiGraph, limits: &Limits) -> Result<MultiPoly> {
    interpolate_counts(Var::T, g.rank(), 1, |q| modular_tension_count(g, q as u64, limits))
}

/// Flow polynomial `φ(G,t)`.
pub fn flow_poly(g: &MultiGraph, limits: &Limits) -> Result<MultiPoly> {
    interpolate_counts(Var::T, g.nullity(), 1, |q| modular_flow_count(g, q as u64, limits))
}

/// Chromatic polynomial through `χ(G,t) = t^{c(G)} τ(G,t)`.
pub fn chromatic_poly(g: &MultiGraph, limits: &Limits) -> Result<MultiPoly> {
    Ok(MultiPoly::monomial(Var::T, g.component_count() as u32) * tension_poly(g, limits)?)
}

/// Proper vertex colorings with `t` colors, by direct enumeration.
pub fn proper_colorings(g: &MultiGraph, t: u64, limits: &Limits) -> Result<BigInt> {
    let n = g.vertex_count();
    limits.check_states("coloring enumeration", saturating_pow(t as u128, n))?;
    if g.loop_count() > 0 || (t == 0 && n > 0) {
        return Ok(BigInt::zero());
    }
    let total = t.pow(n as u32);
    let mut colors = vec![0u64; n];
    let mut count = BigInt::zero();
    for code in 0..total {
        let mut c = code;
        for slot in colors.iter_mut() {
            *slot = c % t;
            c /= t;
        }
        if g.edges().iter().all(|&(a, b)| colors[a] != colors[b]) {
            count += BigInt::one();
        }
    }
    Ok(count)
}

/// Chromatic polynomial interpolated from coloring counts; an oracle
/// independent of the tension route.
pub fn chromatic_by_colorings(g: &MultiGraph, limits: &Limits) -> Result<MultiPoly> {
    interpolate_counts(Var::T, g.vertex_count(), 1, |t| proper_colorings(g, t as u64, limits))
}

fn strict_count(g: &MultiGraph, q: i64, tension: bool, limits: &Limits) -> Result<BigInt> {
    let o = Orientation::identity(g);
    let windows = windows_for(
        g.edge_count(),
        q,
        WindowMode::StrictSupport,
        &SupportConstraints::all(g.edge_count()),
    )?;
    let n = if tension {
        count_integral_tensions(g, &o, &windows, limits)?
    } else {
        count_integral_flows(g, &o, &windows, limits)?
    };
    Ok(BigInt::from(n))
}

/// Integral tension polynomial: integer tensions with `0 < |f(e)| < t`.
/// Integer-valued, but its coefficients need not be integers.
pub fn integral_tension_poly(g: &MultiGraph, limits: &Limits) -> Result<ScaledPoly> {
    interpolate_counts_rational(Var::T, g.rank(), 1, |q| strict_count(g, q, true, limits))
}

/// Integral flow polynomial: integer flows with `0 < |g(e)| < t`.
pub fn integral_flow_poly(g: &MultiGraph, limits: &Limits) -> Result<ScaledPoly> {
    interpolate_counts_rational(Var::T, g.nullity(), 1, |q| strict_count(g, q, false, limits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn whitney_examples() {
        assert_eq!(whitney(&fixtures::edge(), &lim()).unwrap().to_string(), "x + 1");
        assert_eq!(whitney(&fixtures::single_loop(), &lim()).unwrap().to_string(), "y + 1");
        assert_eq!(
            whitney(&fixtures::k3(), &lim()).unwrap().to_string(),
            "x^2 + 3*x + y + 3"
        );
    }

    #[test]
    fn tutte_examples() {
        assert_eq!(
            tutte(&fixtures::e2(), TutteRoute::Recursion, &lim()).unwrap(),
            MultiPoly::one()
        );
        assert_eq!(
            tutte(&fixtures::single_loop(), TutteRoute::Recursion, &lim())
                .unwrap()
                .to_string(),
            "y"
        );
        for (name, g) in fixtures::corpus() {
            tutte_checked(&g, &lim()).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn tutte_of_k4_is_classical() {
        let t = tutte(&fixtures::k4(), TutteRoute::Recursion, &lim()).unwrap();
        assert_eq!(t.eval_i64(&[(Var::X, 1), (Var::Y, 1)]).unwrap(), BigInt::from(16));
        assert_eq!(t.eval_i64(&[(Var::X, 2), (Var::Y, 1)]).unwrap(), BigInt::from(38));
    }

    #[test]
    fn omega_examples() {
        for route in [OmegaRoute::Expansion, OmegaRoute::Arrangement] {
            assert_eq!(omega(&fixtures::edge(), route, &lim()).unwrap().to_string(), "x - 1");
            assert_eq!(
                omega(&fixtures::single_loop(), route, &lim()).unwrap().to_string(),
                "y - 1"
            );
            assert_eq!(omega(&fixtures::e2(), route, &lim()).unwrap(), MultiPoly::one());
        }
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let z3 = FiniteAbelianGroup::cyclic(3).unwrap();
        assert_eq!(
            omega_brute(&fixtures::single_loop(), &z2, &z3, &lim()).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn one_variable_examples() {
        assert_eq!(tension_poly(&fixtures::edge(), &lim()).unwrap().to_string(), "t - 1");
        assert_eq!(
            flow_poly(&fixtures::single_loop(), &lim()).unwrap().to_string(),
            "t - 1"
        );
        assert_eq!(
            integral_tension_poly(&fixtures::edge(), &lim()).unwrap().to_string(),
            "2*t - 2"
        );
        assert_eq!(
            integral_flow_poly(&fixtures::single_loop(), &lim())
                .unwrap()
                .to_string(),
            "2*t - 2"
        );
        let chi = chromatic_poly(&fixtures::k3(), &lim()).unwrap();
        assert_eq!(chi.to_string(), "t^3 - 3*t^2 + 2*t");
        assert_eq!(chi, chromatic_by_colorings(&fixtures::k3(), &lim()).unwrap());
    }

    #[test]
    fn integral_tension_poly_can_be_fractional() {
        let p = integral_tension_poly(&fixtures::k4_minus_edge(), &lim()).unwrap();
        assert_eq!(p.to_string(), "(14*t^3 - 69*t^2 + 109*t - 54)/3");
    }

    #[test]
    fn bridge_kills_flows() {
        assert!(flow_poly(&fixtures::edge(), &lim()).unwrap().is_zero());
        assert!(tension_poly(&fixtures::single_loop(), &lim()).unwrap().is_zero());
    }
}
