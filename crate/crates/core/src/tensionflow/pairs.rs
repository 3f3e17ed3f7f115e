use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::enumerate::{enumerate_flows, enumerate_tensions};
use super::group::{integer_support, FiniteAbelianGroup, TensionFlowPair};
use super::integral::{for_each_integral_flow, for_each_integral_tension, EdgeWindow};
use super::ops::EdgeFunction;
use crate::algebra::{MultiPoly, Var};
use crate::error::Result;
use crate::graph::{EdgeSubset, MultiGraph, Orientation};
use crate::limits::{saturating_pow, Limits};

/// Support relations of a pair, each computed literally from its formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairFlags {
    /// `(f(e), g(e)) ≠ (0, 0)` on every edge.
    pub nowhere_zero: bool,
    /// `supp f ⊆ ker g`.
    pub supp_f_in_ker_g: bool,
    /// `supp g = ker f`.
    pub complementary: bool,
    /// `ker f ⊆ supp g`.
    pub ker_f_in_supp_g: bool,
    /// `supp g ⊆ ker f`.
    pub supp_g_in_ker_f: bool,
}

impl PairFlags {
    pub fn from_supports(supp_f: EdgeSubset, supp_g: EdgeSubset) -> Self {
        let ker_f = supp_f.complement();
        let ker_g = supp_g.complement();
        PairFlags {
            nowhere_zero: supp_f.union(&supp_g).len() == supp_f.width(),
            supp_f_in_ker_g: supp_f.is_subset(&ker_g),
            complementary: supp_g == ker_f,
            ker_f_in_supp_g: ker_f.is_subset(&supp_g),
            supp_g_in_ker_f: supp_g.is_subset(&ker_f),
        }
    }
}

pub fn classify_pair<T: EdgeFunction>(pair: &TensionFlowPair<T>) -> PairFlags {
    PairFlags::from_supports(pair.f.support(), pair.g.support())
}

/// Which pairs a census sum ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairPredicate {
    All,
    NowhereZero,
    SuppFInKerG,
    Complementary,
    KerFInSuppG,
    SuppGInKerF,
    /// `ker f = kernel_f` and `ker g = kernel_g`.
    Kernels {
        kernel_f: EdgeSubset,
        kernel_g: EdgeSubset,
    },
}

impl PairPredicate {
    pub fn holds(&self, supp_f: EdgeSubset, supp_g: EdgeSubset) -> bool {
        let flags = PairFlags::from_supports(supp_f, supp_g);
        match *self {
            PairPredicate::All => true,
            PairPredicate::NowhereZero => flags.nowhere_zero,
            PairPredicate::SuppFInKerG => flags.supp_f_in_ker_g,
            PairPredicate::Complementary => flags.complementary,
            PairPredicate::KerFInSuppG => flags.ker_f_in_supp_g,
            PairPredicate::SuppGInKerF => flags.supp_g_in_ker_f,
            PairPredicate::Kernels { kernel_f, kernel_g } => {
                supp_f.complement() == kernel_f && supp_g.complement() == kernel_g
            }
        }
    }
}

/// Support histograms of all tensions over `A` and all flows over `B`.
/// Every sum over pairs whose summand depends only on the two supports is
/// a finite convolution of these histograms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCensus {
    width: usize,
    tensions: BTreeMap<u64, BigInt>,
    flows: BTreeMap<u64, BigInt>,
}

impl PairCensus {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn tension_count(&self) -> BigInt {
        self.tensions.values().sum()
    }

    pub fn flow_count(&self) -> BigInt {
        self.flows.values().sum()
    }

    /// `(support, multiplicity)` of every tension support.
    pub fn tension_supports(&self) -> impl Iterator<Item = (EdgeSubset, &BigInt)> {
        self.tensions
            .iter()
            .map(|(&m, c)| (EdgeSubset::from_mask(self.width, m), c))
    }

    pub fn flow_supports(&self) -> impl Iterator<Item = (EdgeSubset, &BigInt)> {
        self.flows
            .iter()
            .map(|(&m, c)| (EdgeSubset::from_mask(self.width, m), c))
    }

    fn for_each(&self, pred: PairPredicate, mut f: impl FnMut(EdgeSubset, EdgeSubset, BigInt)) {
        for (sf, cf) in self.tension_supports() {
            for (sg, cg) in self.flow_supports() {
                if pred.holds(sf, sg) {
                    f(sf, sg, cf * cg);
                }
            }
        }
    }

    /// Number of pairs satisfying `pred`.
    pub fn count(&self, pred: PairPredicate) -> BigInt {
        let mut total = BigInt::zero();
        self.for_each(pred, |_, _, c| total += c);
        total
    }

    /// `Σ weight(supp f, supp g)` over pairs satisfying `pred`.
    pub fn sum_int(&self, pred: PairPredicate, weight: impl Fn(EdgeSubset, EdgeSubset) -> BigInt) -> BigInt {
        let mut total = BigInt::zero();
        self.for_each(pred, |sf, sg, c| total += c * weight(sf, sg));
        total
    }

    /// Polynomial-valued version of [`PairCensus::sum_int`].
    pub fn sum_poly(&self, pred: PairPredicate, weight: impl Fn(EdgeSubset, EdgeSubset) -> MultiPoly) -> MultiPoly {
        let mut total = MultiPoly::zero();
        self.for_each(pred, |sf, sg, c| total += &weight(sf, sg).scale(&c));
        total
    }

    /// `Σ z^{|supp f|} w^{|supp g|}` over pairs satisfying `pred`.
    pub fn support_poly(&self, pred: PairPredicate) -> MultiPoly {
        let mut by_sizes: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        self.for_each(pred, |sf, sg, c| {
            *by_sizes.entry((sf.len() as u32, sg.len() as u32)).or_default() += c;
        });
        by_sizes
            .into_iter()
            .map(|((a, b), c)| (MultiPoly::monomial(Var::Z, a) * MultiPoly::monomial(Var::W, b)).scale(&c))
            .sum()
    }

    /// `|{(f, g) : f|_X = 0, g|_Y = 0}|`, the size of `Ω_{X,Y}`.
    pub fn subgroup_size(&self, x: EdgeSubset, y: EdgeSubset) -> BigInt {
        let t: BigInt = self
            .tension_supports()
            .filter(|(s, _)| s.intersection(&x).is_empty())
            .map(|(_, c)| c.clone())
            .sum();
        let f: BigInt = self
            .flow_supports()
            .filter(|(s, _)| s.intersection(&y).is_empty())
            .map(|(_, c)| c.clone())
            .sum();
        t * f
    }
}

/// Enumerates every tension over `a` and every flow over `b` once.
pub fn pair_census(
    g: &MultiGraph,
    o: &Orientation,
    a: &FiniteAbelianGroup,
    b: &FiniteAbelianGroup,
    limits: &Limits,
) -> Result<PairCensus> {
    let pairs =
        saturating_pow(a.order() as u128, g.rank()).saturating_mul(saturating_pow(b.order() as u128, g.nullity()));
    limits.check_states("pair enumeration", pairs)?;
    let mut tensions = BTreeMap::new();
    for f in enumerate_tensions(g, o, a, limits)? {
        *tensions.entry(f.support().mask()).or_insert_with(BigInt::zero) += 1;
    }
    let mut flows = BTreeMap::new();
    for h in enumerate_flows(g, o, b, limits)? {
        *flows.entry(h.support().mask()).or_insert_with(BigInt::zero) += 1;
    }
    Ok(PairCensus {
        width: g.edge_count(),
        tensions,
        flows,
    })
}

/// Support histograms of the integer tensions with `|f| < p` and the
/// integer flows with `|g| < q`.
pub fn integral_pair_census(g: &MultiGraph, o: &Orientation, p: i64, q: i64, limits: &Limits) -> Result<PairCensus> {
    let window = |m: i64| vec![EdgeWindow::range(1 - m, m - 1); g.edge_count()];
    let mut tensions = BTreeMap::new();
    for_each_integral_tension(g, o, &window(p), limits, &mut |f| {
        *tensions.entry(integer_support(f).mask()).or_insert_with(BigInt::zero) += 1;
    })?;
    let mut flows = BTreeMap::new();
    for_each_integral_flow(g, o, &window(q), limits, &mut |h| {
        *flows.entry(integer_support(h).mask()).or_insert_with(BigInt::zero) += 1;
    })?;
    Ok(PairCensus {
        width: g.edge_count(),
        tensions,
        flows,
    })
}

/// Number of pairs over `A × B` satisfying `pred`.
pub fn count_pairs(
    g: &MultiGraph,
    o: &Orientation,
    a: &FiniteAbelianGroup,
    b: &FiniteAbelianGroup,
    pred: PairPredicate,
    limits: &Limits,
) -> Result<BigInt> {
    Ok(pair_census(g, o, a, b, limits)?.count(pred))
}

/// `Σ z^{|supp f|} w^{|supp g|}` over pairs satisfying `pred`.
pub fn count_pairs_weighted(
    g: &MultiGraph,
    o: &Orientation,
    a: &FiniteAbelianGroup,
    b: &FiniteAbelianGroup,
    pred: PairPredicate,
    limits: &Limits,
) -> Result<MultiPoly> {
    Ok(pair_census(g, o, a, b, limits)?.support_poly(pred))
}
