//! Weighted sums over tension-flow pairs against their subset expansions,
//! with `ν` the counting measure on `Ω = T(G; Z_p) × F(G; Z_q)`.
//!
//! `Ω_{Z,W}` is the subgroup of pairs with `f|_Z = 0` and `g|_W = 0`.
//! Its size is computed from the census, not from the dimension formula,
//! so the expansions are tested against genuine enumeration.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::basic::whitney;
use super::report::CheckReport;
use crate::algebra::{MultiPoly, Var};
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, MultiGraph, Orientation};
use crate::limits::{saturating_pow, Limits};
use crate::tensionflow::{pair_census, FiniteAbelianGroup, PairCensus, PairPredicate};

/// `|Ω_{Z,W}|` for every pair of masks, factored as tension part times
/// flow part.
struct Vanishing {
    width: usize,
    tensions: Vec<BigInt>,
    flows: Vec<BigInt>,
}

impl Vanishing {
    fn new(census: &PairCensus) -> Self {
        let width = census.width();
        let side = |supports: Vec<(EdgeSubset, BigInt)>| -> Vec<BigInt> {
            (0..1u64 << width)
                .map(|z| {
                    supports
                        .iter()
                        .filter(|(s, _)| s.mask() & z == 0)
                        .map(|(_, c)| c.clone())
                        .sum()
                })
                .collect()
        };
        Vanishing {
            width,
            tensions: side(census.tension_supports().map(|(s, c)| (s, c.clone())).collect()),
            flows: side(census.flow_supports().map(|(s, c)| (s, c.clone())).collect()),
        }
    }

    /// `ν(Ω_{Z,W})`.
    fn nu(&self, z: u64, w: u64) -> BigInt {
        &self.tensions[z as usize] * &self.flows[w as usize]
    }

    fn full(&self) -> u64 {
        if self.width == 64 {
            u64::MAX
        } else {
            (1u64 << self.width) - 1
        }
    }
}

fn popcount(m: u64) -> u32 {
    m.count_ones()
}

/// Submasks of `m`, including `0` and `m`.
fn submasks(m: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

fn var(v: Var) -> MultiPoly {
    MultiPoly::var(v)
}

fn one() -> MultiPoly {
    MultiPoly::one()
}

/// `Σ_key coeff · Π factor_i^{key_i}` with the coefficient sums collected
/// first, so each monomial shape is expanded once.
fn assemble<const K: usize>(acc: BTreeMap<[u32; K], BigInt>, factors: [MultiPoly; K]) -> MultiPoly {
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(key, c)| {
            let mut term = MultiPoly::constant(c);
            for (f, e) in factors.iter().zip(key) {
                term = &term * &f.pow(e);
            }
            term
        })
        .sum()
}

/// `Σ_{Y⊆X⊆E} a^{|Y|} b^{|X−Y|} c^{|E−X|} ν(Ω_{X,Y^c})`.
fn nested_expansion(v: &Vanishing, a: MultiPoly, b: MultiPoly, c: MultiPoly) -> MultiPoly {
    let full = v.full();
    let mut acc = BTreeMap::<[u32; 3], BigInt>::new();
    for x in submasks(full) {
        for y in submasks(x) {
            let key = [popcount(y), popcount(x & !y), popcount(full & !x)];
            *acc.entry(key).or_default() += v.nu(x, full & !y);
        }
    }
    assemble(acc, [a, b, c])
}

/// Textual readings of the domain of the first identity. The header and
/// the proof state different inclusions; a third candidate is the
/// inclusion common to the later identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainReading {
    /// `supp f ⊆ ker g`, as written under the integral sign.
    SuppFInKerG,
    /// `supp g ⊆ ker f`, as used in the proof.
    SuppGInKerF,
    /// `ker f ⊆ supp g`.
    KerFInSuppG,
}

impl DomainReading {
    pub const ALL: [DomainReading; 3] = [
        DomainReading::SuppFInKerG,
        DomainReading::SuppGInKerF,
        DomainReading::KerFInSuppG,
    ];

    pub fn predicate(self) -> PairPredicate {
        match self {
            DomainReading::SuppFInKerG => PairPredicate::SuppFInKerG,
            DomainReading::SuppGInKerF => PairPredicate::SuppGInKerF,
            DomainReading::KerFInSuppG => PairPredicate::KerFInSuppG,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReadingOutcome {
    pub reading: DomainReading,
    pub validates: bool,
}

/// Result of [`pair_identities`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairIdentityReport {
    pub report: CheckReport,
    pub readings: Vec<ReadingOutcome>,
    /// Validating readings grouped by the set of pairs they select on this
    /// graph. Readings in one group are the same domain.
    pub validating_domains: Vec<Vec<DomainReading>>,
}

/// Maps each reading to the set of support pairs it selects.
fn domain_signature(census: &PairCensus, reading: DomainReading) -> Vec<(u64, u64)> {
    let pred = reading.predicate();
    let mut out = Vec::new();
    for (sf, _) in census.tension_supports() {
        for (sg, _) in census.flow_supports() {
            if pred.holds(sf, sg) {
                out.push((sf.mask(), sg.mask()));
            }
        }
    }
    out
}

fn census_for(g: &MultiGraph, p: i64, q: i64, limits: &Limits) -> Result<PairCensus> {
    let group = |m: i64| FiniteAbelianGroup::cyclic(u64::try_from(m).map_err(|_| Error::InvalidModulus(m))?);
    pair_census(g, &Orientation::identity(g), &group(p)?, &group(q)?, limits)
}

/// Left side of the first identity under `reading`:
/// `Σ u^{|ker f|} v^{|supp g|}` over the reading's domain.
pub fn uv_integral_lhs(census: &PairCensus, reading: DomainReading) -> MultiPoly {
    census.sum_poly(reading.predicate(), |sf, sg| {
        MultiPoly::monomial(Var::U, sf.complement().len() as u32) * MultiPoly::monomial(Var::V, sg.len() as u32)
    })
}

/// Checks every weighted pair identity at `(p, q)` as a polynomial
/// identity in `u, v` (or `z, w`).
pub fn pair_identities(g: &MultiGraph, p: i64, q: i64, limits: &Limits) -> Result<PairIdentityReport> {
    let m = g.edge_count();
    limits.check_states("pair identity expansion", saturating_pow(4, m))?;
    let census = census_for(g, p, q, limits)?;
    let v = Vanishing::new(&census);
    let full = v.full();
    let mut rep = CheckReport::new(&format!("pair identities ({p},{q})"), g);
    let (u, vv, z, w) = (var(Var::U), var(Var::V), var(Var::Z), var(Var::W));
    let uv = &u * &vv;

    // First identity, with the domain read three ways.
    let rhs1 = nested_expansion(&v, uv.clone(), &(&u - &uv) - &one(), one());
    let mut readings = Vec::new();
    for reading in DomainReading::ALL {
        let lhs = uv_integral_lhs(&census, reading);
        readings.push(ReadingOutcome {
            reading,
            validates: lhs == rhs1,
        });
    }
    let mut groups: BTreeMap<Vec<(u64, u64)>, Vec<DomainReading>> = BTreeMap::new();
    for r in readings.iter().filter(|r| r.validates) {
        groups
            .entry(domain_signature(&census, r.reading))
            .or_default()
            .push(r.reading);
    }
    let validating_domains: Vec<Vec<DomainReading>> = groups.into_values().collect();
    let default_lhs = uv_integral_lhs(&census, DomainReading::SuppGInKerF);
    rep.equal("uv identity (supp g in ker f)", &default_lhs, &rhs1);
    rep.equal(
        "header and proof domains select the same pairs",
        &format!("{:?}", domain_signature(&census, DomainReading::SuppFInKerG)),
        &format!("{:?}", domain_signature(&census, DomainReading::SuppGInKerF)),
    );
    for r in &readings {
        rep.note(format!(
            "domain reading {:?}: {}",
            r.reading,
            if r.validates { "validates" } else { "fails" }
        ));
    }

    // Complementary pairs, weighted by u^{|ker f|}.
    let lhs_u = census.sum_poly(PairPredicate::Complementary, |sf, _| {
        MultiPoly::monomial(Var::U, sf.complement().len() as u32)
    });
    let rhs_u = nested_expansion(&v, u.clone(), &(-&u) - &one(), one());
    rep.equal("u identity (supp g = ker f)", &lhs_u, &rhs_u);
    let whit = whitney(g, limits)?;
    let at_minus_one = lhs_u.evaluate(&[(Var::U, BigInt::from(-1))])?;
    let sign = if g.rank() % 2 == 1 {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    rep.equal(
        "u = -1 gives (-1)^r R(-p,-q)",
        &(sign * at_minus_one),
        &whit.eval_i64(&[(Var::X, -p), (Var::Y, -q)])?,
    );

    // Complementary pairs weighted by z^{|supp f|} w^{|supp g|}.
    let lhs_zw = census.support_poly(PairPredicate::Complementary);
    let rhs_zw = nested_expansion(&v, w.clone(), &(-&z) - &w, z.clone());
    rep.equal("weighted complementary expansion", &lhs_zw, &rhs_zw);

    // ker f ⊆ supp g, weighted by u^{|ker f|} v^{|supp g|}.
    let lhs2 = uv_integral_lhs(&census, DomainReading::KerFInSuppG);
    let mut acc = BTreeMap::<[u32; 4], BigInt>::new();
    let mut acc3 = BigInt::zero();
    for zm in submasks(full) {
        for wm in submasks(full) {
            let key = [
                popcount(wm),
                popcount(zm & wm),
                popcount(full & !(zm | wm)),
                popcount(zm & !wm),
            ];
            let mut nu = v.nu(zm, full & !wm);
            if popcount(zm) % 2 == 1 {
                nu = -nu;
            }
            *acc.entry(key).or_default() += nu;
        }
        let nu = v.nu(zm, zm);
        acc3 += if popcount(zm) % 2 == 1 { -nu } else { nu };
    }
    let rhs2 = assemble(acc, [vv.clone(), &one() - &u, &one() - &vv, &(&uv - &vv) + &one()]);
    rep.equal("uv identity (ker f in supp g)", &lhs2, &rhs2);
    rep.equal(
        "unweighted count (ker f in supp g)",
        &census.count(PairPredicate::KerFInSuppG),
        &acc3,
    );

    // Corollaries on supp g ⊆ ker f.
    let elliptic_r = census.sum_int(PairPredicate::SuppGInKerF, |sf, sg| {
        num_traits::pow(BigInt::from(2), sf.complement().difference(&sg).len())
    });
    rep.equal(
        "weight 2^{|ker f - supp g|} gives R(p,q)",
        &elliptic_r,
        &whit.eval_i64(&[(Var::X, p), (Var::Y, q)])?,
    );
    let lhs_c = census.sum_poly(PairPredicate::SuppGInKerF, |sf, sg| {
        MultiPoly::monomial(Var::U, sg.len() as u32) * (&u + &one()).pow(sf.complement().difference(&sg).len() as u32)
    });
    let rhs_c: MultiPoly = submasks(full)
        .map(|x| MultiPoly::monomial(Var::U, popcount(x)).scale(&v.nu(x, full & !x)))
        .sum();
    rep.equal("u^{|supp g|} (u+1)^{|ker f - supp g|} expansion", &lhs_c, &rhs_c);

    Ok(PairIdentityReport {
        report: rep,
        readings,
        validating_domains,
    })
}

/// How the flow exponent of `|Ω_{Z,W}|` is read in the alternating sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlowExponent {
    /// `q^{n⟨W^c⟩}`, the dimension of the flows vanishing on `W`.
    Nullity,
    /// `q^{r⟨W^c⟩}`.
    Rank,
}

/// `Σ_{X⊆Z, Y⊆W} (−1)^{|Z−X|+|W−Y|} p^{r⟨E⟩−r⟨Z⟩} q^{e(W^c)}` with the flow
/// exponent `e` chosen by `exponent`.
pub fn exact_level_formula(
    g: &MultiGraph,
    p: i64,
    q: i64,
    x: &EdgeSubset,
    y: &EdgeSubset,
    exponent: FlowExponent,
) -> Result<BigInt> {
    let m = g.edge_count();
    if x.width() != m || y.width() != m {
        return Err(Error::InvalidArgument(format!("subsets must have width {m}")));
    }
    let full = g.all_edges().mask();
    let r = g.rank();
    let mut total = BigInt::zero();
    for zc in submasks(full & !x.mask()) {
        let zm = x.mask() | zc;
        let t = num_traits::pow(BigInt::from(p), r - g.rank_of(zm));
        for wc in submasks(full & !y.mask()) {
            let wm = y.mask() | wc;
            let e = match exponent {
                FlowExponent::Nullity => g.nullity_of(full & !wm),
                FlowExponent::Rank => g.rank_of(full & !wm),
            };
            let term = &t * num_traits::pow(BigInt::from(q), e);
            if (popcount(zc) + popcount(wc)) % 2 == 1 {
                total -= term;
            } else {
                total += term;
            }
        }
    }
    Ok(total)
}

/// Number of pairs over `Z_p × Z_q` with `ker f = X` and `ker g = Y`, by
/// filtering the enumeration; checked against the alternating sum with the
/// nullity exponent.
pub fn exact_level_count(
    g: &MultiGraph,
    p: i64,
    q: i64,
    x: &EdgeSubset,
    y: &EdgeSubset,
    limits: &Limits,
) -> Result<BigInt> {
    let census = census_for(g, p, q, limits)?;
    let direct = census.count(PairPredicate::Kernels {
        kernel_f: *x,
        kernel_g: *y,
    });
    let formula = exact_level_formula(g, p, q, x, y, FlowExponent::Nullity)?;
    if direct != formula {
        return Err(Error::RouteDisagreement {
            what: "exact level count".into(),
            detail: format!(
                "X={:?} Y={:?}: enumeration {direct}, alternating sum {formula}",
                x.iter().collect::<Vec<_>>(),
                y.iter().collect::<Vec<_>>()
            ),
        });
    }
    Ok(direct)
}

/// Both exponent readings of the exact-level formula against enumeration,
/// over every `(X, Y)`.
pub fn exact_level_check(g: &MultiGraph, p: i64, q: i64, limits: &Limits) -> Result<CheckReport> {
    limits.check_states("exact level sweep", saturating_pow(4, g.edge_count()))?;
    let census = census_for(g, p, q, limits)?;
    let mut rep = CheckReport::new(&format!("exact level ({p},{q})"), g);
    let mut first_bad = [None, None];
    for x in EdgeSubset::all(g.edge_count()) {
        for y in EdgeSubset::all(g.edge_count()) {
            let direct = census.count(PairPredicate::Kernels {
                kernel_f: x,
                kernel_g: y,
            });
            for (i, e) in [FlowExponent::Nullity, FlowExponent::Rank].into_iter().enumerate() {
                let f = exact_level_formula(g, p, q, &x, &y, e)?;
                if f != direct && first_bad[i].is_none() {
                    first_bad[i] = Some(format!(
                        "X={:?} Y={:?}: enumeration {direct}, formula {f}",
                        x.iter().collect::<Vec<_>>(),
                        y.iter().collect::<Vec<_>>()
                    ));
                }
            }
        }
    }
    let [nullity, rank] = first_bad;
    rep.check(
        "nullity exponent matches enumeration",
        nullity.is_none(),
        nullity.unwrap_or_default(),
    );
    rep.note(match rank {
        None => "rank exponent also matches on this graph".to_string(),
        Some(w) => format!("rank exponent fails: {w}"),
    });
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn submask_enumeration() {
        let mut s: Vec<u64> = submasks(0b101).collect();
        s.sort();
        assert_eq!(s, vec![0, 1, 4, 5]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn loop_unweighted_count() {
        // Only f = 0 exists, so ker f = E and g must be nowhere zero.
        let census = census_for(&fixtures::single_loop(), 2, 2, &lim()).unwrap();
        assert_eq!(census.count(PairPredicate::KerFInSuppG), BigInt::from(1));
    }

    #[test]
    fn edgeless_first_identity() {
        let r = pair_identities(&fixtures::e2(), 2, 3, &lim()).unwrap();
        assert!(r.report.passed(), "{}", r.report);
        let census = census_for(&fixtures::e2(), 2, 3, &lim()).unwrap();
        assert_eq!(uv_integral_lhs(&census, DomainReading::SuppGInKerF), MultiPoly::one());
    }

    #[test]
    fn exact_level_examples() {
        let e = fixtures::edge();
        let all = e.all_edges();
        let none = e.empty_subset();
        assert_eq!(
            exact_level_count(&e, 3, 2, &none, &all, &lim()).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            exact_level_count(&e, 3, 2, &all, &all, &lim()).unwrap(),
            BigInt::from(1)
        );
        let k3 = fixtures::k3();
        assert_eq!(
            exact_level_count(&k3, 2, 2, &k3.all_edges(), &k3.empty_subset(), &lim()).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn identities_on_small_fixtures() {
        for g in [
            fixtures::edge(),
            fixtures::single_loop(),
            fixtures::k3(),
            fixtures::digon(),
        ] {
            let r = pair_identities(&g, 2, 3, &lim()).unwrap();
            assert!(r.report.passed(), "{}", r.report);
            assert_eq!(
                r.validating_domains,
                vec![vec![DomainReading::SuppFInKerG, DomainReading::SuppGInKerF]]
            );
            let lv = exact_level_check(&g, 3, 2, &lim()).unwrap();
            assert!(lv.passed(), "{lv}");
        }
    }
}
