//! Verification suites. Each returns a [`CheckReport`]; an `Err` means a
//! computation could not run (size guard, malformed input), not that an
//! identity failed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::basic::{
    chromatic_by_colorings, chromatic_poly, flow_poly, integral_flow_poly, integral_tension_poly, omega, omega_brute,
    tension_poly, tutte, whitney, OmegaRoute, TutteRoute,
};
use super::complementary::{psi_all, PsiFamily};
use super::report::CheckReport;
use crate::algebra::{MultiPoly, ScaledPoly, Var};
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, MultiGraph, Orientation};
use crate::limits::Limits;
use crate::orientations::{
    all_orientations, class_size_check, classify_edges, cut_eulerian_classes, zero_one_pair_count,
};
use crate::tensionflow::{
    count_integral_flows, count_integral_tensions, for_each_integral_flow, for_each_integral_tension, integer_support,
    integral_pair_census, lattice_index, pair_census, EdgeWindow, FiniteAbelianGroup, PairPredicate,
};

fn sign(odd: bool) -> BigInt {
    if odd {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

fn pow_i(base: i64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

fn xy(p: i64, q: i64) -> [(Var, BigInt); 2] {
    [(Var::X, BigInt::from(p)), (Var::Y, BigInt::from(q))]
}

fn cyclic(m: i64) -> Result<FiniteAbelianGroup> {
    FiniteAbelianGroup::cyclic(u64::try_from(m).map_err(|_| Error::InvalidModulus(m))?)
}

/// `tutte(recursion) = whitney(x−1, y−1)`.
pub fn tutte_check(g: &MultiGraph, limits: &Limits) -> Result<CheckReport> {
    let mut rep = CheckReport::new("tutte", g);
    let rec = tutte(g, TutteRoute::Recursion, limits)?;
    let shift = tutte(g, TutteRoute::Shift, limits)?;
    rep.equal("recursion = shifted whitney", &rec, &shift);
    // And back: R(x, y) = T(x+1, y+1).
    let up = |v: Var| MultiPoly::var(v) + MultiPoly::one();
    let back = rec.substitute(&[(Var::X, up(Var::X)), (Var::Y, up(Var::Y))]);
    rep.equal("whitney = tutte(x+1, y+1)", &whitney(g, limits)?, &back);
    Ok(rep)
}

/// Expansion, arrangement and enumeration routes for `ω`. Order-4 groups
/// are tried as both `Z_4` and `Z_2 × Z_2`.
pub fn omega_check(g: &MultiGraph, orders: &[i64], limits: &Limits) -> Result<CheckReport> {
    let mut rep = CheckReport::new("omega", g);
    let expansion = omega(g, OmegaRoute::Expansion, limits)?;
    let arrangement = omega(g, OmegaRoute::Arrangement, limits)?;
    rep.equal("expansion = arrangement", &expansion, &arrangement);
    let groups = |m: i64| -> Result<Vec<FiniteAbelianGroup>> {
        let mut gs = vec![cyclic(m)?];
        if m == 4 {
            gs.push(FiniteAbelianGroup::new(vec![2, 2])?);
        }
        Ok(gs)
    };
    for &p in orders {
        for &q in orders {
            let expected = expansion.evaluate(&xy(p, q))?;
            for a in groups(p)? {
                for b in groups(q)? {
                    let got = omega_brute(g, &a, &b, limits)?;
                    rep.equal(
                        format!("omega({p},{q}) over {:?} x {:?}", a.orders(), b.orders()),
                        &got,
                        &expected,
                    );
                }
            }
        }
    }
    Ok(rep)
}

/// `χ = t^{c} τ`, with `χ` also interpolated from proper colorings.
pub fn chromatic_check(g: &MultiGraph, limits: &Limits) -> Result<CheckReport> {
    let mut rep = CheckReport::new("chromatic", g);
    let via_tension = chromatic_poly(g, limits)?;
    let via_colorings = chromatic_by_colorings(g, limits)?;
    rep.equal("t^c tau = coloring count", &via_tension, &via_colorings);
    Ok(rep)
}

/// Reciprocity laws for `ψ_z/ψ̄_z`, `ψ/ψ̄`, and the per-orientation lemma.
pub fn reciprocity_check(g: &MultiGraph, limits: &Limits) -> Result<CheckReport> {
    let fam = psi_all(g, limits)?;
    Ok(reciprocity_from(g, &fam))
}

pub(crate) fn reciprocity_from(g: &MultiGraph, fam: &PsiFamily) -> CheckReport {
    let mut rep = CheckReport::new("reciprocity", g);
    let n_sign = sign(g.nullity() % 2 == 1);
    let r_sign = sign(g.rank() % 2 == 1);
    let laws = |rep: &mut CheckReport, tag: &str, plain: &ScaledPoly, barred: &ScaledPoly| {
        let lhs = plain.map(|p| p.negate_vars(&[Var::X, Var::Y]));
        let mid = barred.map(|p| p.negate_vars(&[Var::Z])).scale(&n_sign);
        let right = barred.map(|p| p.negate_vars(&[Var::W])).scale(&r_sign);
        rep.equal(format!("{tag}: (-x,-y,z,w) = (-1)^n bar(x,y,-z,w)"), &lhs, &mid);
        rep.equal(format!("{tag}: (-x,-y,z,w) = (-1)^r bar(x,y,z,-w)"), &lhs, &right);
    };
    laws(&mut rep, "psi_z", &fam.psi_z, &fam.bar_psi_z);
    laws(&mut rep, "psi", &fam.psi, &fam.bar_psi);
    for t in &fam.terms {
        let tag = format!("orientation {:?}", t.orientation.flips());
        laws(&mut rep, &tag, &t.psi(), &t.psi_bar());
    }
    rep
}

/// Specializations of `ψ_z` and `ψ` at `(z, w) ∈ {(1,0), (0,1), (1,1), (0,0)}`.
/// The `(1,1)` values are compared with brute-force complementary counts at
/// every `(p, q)` of `grid`.
pub fn specialization_check(g: &MultiGraph, grid: &[(i64, i64)], limits: &Limits) -> Result<CheckReport> {
    let fam = psi_all(g, limits)?;
    specialization_from(g, &fam, grid, limits)
}

pub(crate) fn specialization_from(
    g: &MultiGraph,
    fam: &PsiFamily,
    grid: &[(i64, i64)],
    limits: &Limits,
) -> Result<CheckReport> {
    let mut rep = CheckReport::new("specialization", g);
    let at = |p: &ScaledPoly, z: i64, w: i64| p.partial_eval(&[(Var::Z, BigInt::from(z)), (Var::W, BigInt::from(w))]);
    let empty = ScaledPoly::from(MultiPoly::constant(i64::from(g.edge_count() == 0)));

    rep.equal(
        "psi_z(x,y,1,0) = integral tension poly",
        &at(&fam.psi_z, 1, 0),
        &integral_tension_poly(g, limits)?.rename(Var::T, Var::X),
    );
    rep.equal(
        "psi_z(x,y,0,1) = integral flow poly",
        &at(&fam.psi_z, 0, 1),
        &integral_flow_poly(g, limits)?.rename(Var::T, Var::Y),
    );
    rep.equal("psi_z(x,y,0,0)", &at(&fam.psi_z, 0, 0), &empty);
    rep.equal(
        "psi(x,y,1,0) = tension poly",
        &at(&fam.psi, 1, 0),
        &ScaledPoly::from(tension_poly(g, limits)?.rename(Var::T, Var::X)),
    );
    rep.equal(
        "psi(x,y,0,1) = flow poly",
        &at(&fam.psi, 0, 1),
        &ScaledPoly::from(flow_poly(g, limits)?.rename(Var::T, Var::Y)),
    );
    rep.equal("psi(x,y,0,0)", &at(&fam.psi, 0, 0), &empty);
    rep.equal("bar_psi(x,y,0,0)", &at(&fam.bar_psi, 0, 0), &empty);

    let kappa_z = at(&fam.psi_z, 1, 1);
    let kappa = at(&fam.psi, 1, 1);
    let eps = Orientation::identity(g);
    for &(p, q) in grid {
        let brute_z = integral_pair_census(g, &eps, p, q, limits)?.count(PairPredicate::Complementary);
        rep.equal(
            format!("kappa_z({p},{q})"),
            &kappa_z.evaluate(&xy(p, q))?,
            &BigRational::from(brute_z),
        );
        let brute = pair_census(g, &eps, &cyclic(p)?, &cyclic(q)?, limits)?.count(PairPredicate::Complementary);
        rep.equal(
            format!("kappa({p},{q})"),
            &kappa.evaluate(&xy(p, q))?,
            &BigRational::from(brute),
        );
    }
    Ok(rep)
}

/// The class-representative expansion of `ψ` against the direct weighted
/// sum `Σ r^{|supp f|} s^{|supp g|}` over complementary pairs in
/// `Z_p × Z_q`.
pub fn modular_psi_check(g: &MultiGraph, pqs: &[(i64, i64)], rs: &[i64], limits: &Limits) -> Result<CheckReport> {
    let fam = psi_all(g, limits)?;
    modular_psi_from(g, &fam, pqs, rs, limits)
}

pub(crate) fn modular_psi_from(
    g: &MultiGraph,
    fam: &PsiFamily,
    pqs: &[(i64, i64)],
    rs: &[i64],
    limits: &Limits,
) -> Result<CheckReport> {
    let mut rep = CheckReport::new("modular psi", g);
    let eps = Orientation::identity(g);
    for &(p, q) in pqs {
        let census = pair_census(g, &eps, &cyclic(p)?, &cyclic(q)?, limits)?;
        for &r in rs {
            for &s in rs {
                let direct = census.sum_int(PairPredicate::Complementary, |sf, sg| {
                    pow_i(r, sf.len()) * pow_i(s, sg.len())
                });
                let point = [
                    (Var::X, BigInt::from(p)),
                    (Var::Y, BigInt::from(q)),
                    (Var::Z, BigInt::from(r)),
                    (Var::W, BigInt::from(s)),
                ];
                rep.equal(
                    format!("psi({p},{q},{r},{s})"),
                    &fam.psi.evaluate(&point)?,
                    &BigRational::from(direct),
                );
            }
        }
    }
    Ok(rep)
}

/// Sign pattern of a Tutte evaluation `T(G; ±p, ±q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Quadrant {
    PlusPlus,
    MinusPlus,
    PlusMinus,
    MinusMinus,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [
        Quadrant::PlusPlus,
        Quadrant::MinusPlus,
        Quadrant::PlusMinus,
        Quadrant::MinusMinus,
    ];

    fn signs(self) -> (bool, bool) {
        match self {
            Quadrant::PlusPlus => (false, false),
            Quadrant::MinusPlus => (true, false),
            Quadrant::PlusMinus => (false, true),
            Quadrant::MinusMinus => (true, true),
        }
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.signs();
        let c = |neg: bool| if neg { '-' } else { '+' };
        write!(f, "{}{}", c(a), c(b))
    }
}

impl FromStr for Quadrant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quadrant::ALL
            .into_iter()
            .find(|q| q.to_string() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("quadrant must be one of ++, -+, +-, --; got {s:?}")))
    }
}

/// Signed count of triples `(ρ, f, g)` with `ρ` a class representative.
///
/// The `+` side of a variable uses the window `[0, m−1]` on every edge.
/// The `−` side restricts to `[1, m]` on `B_ρ` (tensions) or `C_ρ` (flows)
/// and to 0 elsewhere, with signs `(−1)^{r(G)−r⟨C_ρ⟩}`, `(−1)^{n⟨C_ρ⟩}` and
/// `(−1)^{r(G)+|C_ρ|}` for `−+`, `+−` and `−−`.
pub fn tutte_value_triples(g: &MultiGraph, p: i64, q: i64, quadrant: Quadrant, limits: &Limits) -> Result<BigInt> {
    for m in [p, q] {
        if m < 1 {
            return Err(Error::InvalidModulus(m));
        }
    }
    let classes = cut_eulerian_classes(g, limits)?;
    let (neg_f, neg_g) = quadrant.signs();
    let m = g.edge_count();
    let windows = |neg: bool, side: &EdgeSubset, k: i64| -> Vec<EdgeWindow> {
        (0..m)
            .map(|e| match (neg, side.contains(e)) {
                (false, _) => EdgeWindow::range(0, k - 1),
                (true, true) => EdgeWindow::range(1, k),
                (true, false) => EdgeWindow::ZERO,
            })
            .collect()
    };
    let mut total = BigInt::zero();
    for cls in &classes {
        let rho = cls.representative();
        let (b, c) = classify_edges(g, rho)?;
        let (rank_c, null_c) = g.rank_nullity(&c);
        let odd = match quadrant {
            Quadrant::PlusPlus => false,
            Quadrant::MinusPlus => (g.rank() - rank_c) % 2 == 1,
            Quadrant::PlusMinus => null_c % 2 == 1,
            Quadrant::MinusMinus => (g.rank() + c.len()) % 2 == 1,
        };
        let t = count_integral_tensions(g, rho, &windows(neg_f, &b, p), limits)?;
        let f = count_integral_flows(g, rho, &windows(neg_g, &c, q), limits)?;
        total += sign(odd) * BigInt::from(t) * BigInt::from(f);
    }
    Ok(total)
}

/// All four quadrants against the Tutte polynomial on `grid`, plus the
/// class count identity `#classes = T(1,1) = lattice index`.
pub fn tutte_values_check(g: &MultiGraph, grid: &[(i64, i64)], limits: &Limits) -> Result<CheckReport> {
    let mut rep = CheckReport::new("tutte values", g);
    let t = tutte(g, TutteRoute::Recursion, limits)?;
    for &(p, q) in grid {
        for quad in Quadrant::ALL {
            let (nf, ng) = quad.signs();
            let x = if nf { -p } else { p };
            let y = if ng { -q } else { q };
            let got = tutte_value_triples(g, p, q, quad, limits)?;
            rep.equal(
                format!("{quad} at ({p},{q}) = T({x},{y})"),
                &got,
                &t.evaluate(&xy(x, y))?,
            );
        }
    }
    let classes = BigInt::from(cut_eulerian_classes(g, limits)?.len());
    let t11 = t.evaluate(&xy(1, 1))?;
    rep.equal("#classes = T(1,1)", &classes, &t11);
    rep.equal(
        "T(1,1) = lattice index",
        &t11,
        &lattice_index(g, &Orientation::identity(g)),
    );
    Ok(rep)
}

/// `(elliptic, parabolic)`: the sum of `2^{|ker f − supp g|}` over pairs
/// with `supp g ⊆ ker f`, and `(−1)^{r(G)}` times the sum of
/// `(−1)^{|supp g|}` over complementary pairs, both over `Z_p × Z_q`.
pub fn reiner_sums(g: &MultiGraph, p: i64, q: i64, limits: &Limits) -> Result<(BigInt, BigInt)> {
    let census = pair_census(g, &Orientation::identity(g), &cyclic(p)?, &cyclic(q)?, limits)?;
    let elliptic = census.sum_int(PairPredicate::SuppGInKerF, |sf, sg| {
        pow_i(2, sf.complement().difference(&sg).len())
    });
    let parabolic =
        sign(g.rank() % 2 == 1) * census.sum_int(PairPredicate::Complementary, |_, sg| sign(sg.len() % 2 == 1));
    Ok((elliptic, parabolic))
}

pub fn reiner_check(g: &MultiGraph, grid: &[(i64, i64)], limits: &Limits) -> Result<CheckReport> {
    let mut rep = CheckReport::new("reiner", g);
    let r = whitney(g, limits)?;
    for &(p, q) in grid {
        let (ell, par) = reiner_sums(g, p, q, limits)?;
        rep.equal(format!("elliptic({p},{q}) = R(p,q)"), &ell, &r.evaluate(&xy(p, q))?);
        rep.equal(
            format!("parabolic({p},{q}) = R(-p,-q)"),
            &par,
            &r.evaluate(&xy(-p, -q))?,
        );
    }
    Ok(rep)
}

/// Move-closure classes against `B_ρ/C_ρ` structure and `{0,1}` pair counts.
pub fn orientation_check(g: &MultiGraph, limits: &Limits) -> Result<CheckReport> {
    let mut rep = CheckReport::new("orientation", g);
    for o in all_orientations(g, limits)? {
        let label = format!("B/C structure of {:?}", o.flips());
        match classify_edges(g, &o) {
            Ok((b, c)) => rep.check(label, b.union(&c) == g.all_edges() && b.intersection(&c).is_empty(), ""),
            Err(e) => rep.check(label, false, e.to_string()),
        }
    }
    let classes = cut_eulerian_classes(g, limits)?;
    for cls in &classes {
        let label = format!("class of {:?}", cls.representative().flips());
        rep.check(format!("{label}: sizes constant"), !cls.sizes_vary, "");
        match class_size_check(g, cls, limits) {
            Ok(n) => rep.check(format!("{label}: size = 0-1 pair count"), true, n.to_string()),
            Err(e) => rep.check(format!("{label}: size = 0-1 pair count"), false, e.to_string()),
        }
    }
    let t11 = tutte(g, TutteRoute::Recursion, limits)?.evaluate(&xy(1, 1))?;
    rep.equal("#classes = T(1,1)", &BigInt::from(classes.len()), &t11);
    Ok(rep)
}

/// Integer complementary pairs with `|f| < p`, `|g| < q`, grouped by their
/// image in `Z_p × Z_q`. Every fiber must lie over chambers of one class
/// `[ρ]` and have exactly `κ̄_ρ(1,1)` elements, and the images must be all
/// modular complementary pairs.
pub fn fiber_check(g: &MultiGraph, p: i64, q: i64, limits: &Limits) -> Result<CheckReport> {
    let mut rep = CheckReport::new(&format!("fiber ({p},{q})"), g);
    let eps = Orientation::identity(g);
    let m = g.edge_count();
    let collect = |k: i64, tension: bool| -> Result<Vec<Vec<i64>>> {
        let w = vec![EdgeWindow::range(1 - k, k - 1); m];
        let mut out = Vec::new();
        if tension {
            for_each_integral_tension(g, &eps, &w, limits, &mut |f| out.push(f.to_vec()))?;
        } else {
            for_each_integral_flow(g, &eps, &w, limits, &mut |h| out.push(h.to_vec()))?;
        }
        Ok(out)
    };
    let tensions = collect(p, true)?;
    let flows = collect(q, false)?;
    let classes = cut_eulerian_classes(g, limits)?;
    let mut class_of = BTreeMap::new();
    for (i, cls) in classes.iter().enumerate() {
        for o in &cls.members {
            class_of.insert(o.code(g), i);
        }
    }

    let mut fibers: BTreeMap<(Vec<i64>, Vec<i64>), Vec<usize>> = BTreeMap::new();
    for f in &tensions {
        let sf = integer_support(f);
        for h in &flows {
            if integer_support(h) != sf.complement() {
                continue;
            }
            let flips = (0..m).map(|e| !g.is_loop(e) && (f[e] < 0 || h[e] < 0)).collect();
            let chamber = Orientation::from_flips(g, flips)?;
            let key = (
                f.iter().map(|v| v.rem_euclid(p)).collect(),
                h.iter().map(|v| v.rem_euclid(q)).collect(),
            );
            fibers.entry(key).or_default().push(class_of[&chamber.code(g)]);
        }
    }

    let mut expected = BTreeMap::new();
    let mut bad = Vec::new();
    for ((fm, gm), cls) in &fibers {
        let first = cls[0];
        let size = match expected.get(&first) {
            Some(&s) => s,
            None => {
                let s = zero_one_pair_count(g, classes[first].representative(), limits)?;
                expected.insert(first, s);
                s
            }
        };
        if cls.iter().any(|&c| c != first) || cls.len() as u64 != size {
            bad.push(format!(
                "f={fm:?} g={gm:?}: {} preimages over classes {cls:?}, expected {size}",
                cls.len()
            ));
        }
    }
    rep.check(
        "fiber size = closed count at (1,1)",
        bad.is_empty(),
        bad.first()
            .cloned()
            .unwrap_or_else(|| format!("{} fibers", fibers.len())),
    );
    let modular = pair_census(g, &eps, &cyclic(p)?, &cyclic(q)?, limits)?.count(PairPredicate::Complementary);
    rep.equal(
        "every modular complementary pair is reached",
        &BigInt::from(fibers.len()),
        &modular,
    );
    Ok(rep)
}
