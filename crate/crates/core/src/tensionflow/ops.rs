use num_bigint::BigInt;
use num_traits::One;

use super::basis::bases;
use super::group::{integer_support, Coefficients, FiniteAbelianGroup, GroupElementFunction, TensionFlowPair};
use crate::algebra::IntMatrix;
use crate::error::{Error, Result};
use crate::graph::{coupling, EdgeSubset, MultiGraph, Orientation};

/// `(∂h)(v) = Σ_e ε(v,e) h(e)`. Loops contribute nothing.
pub fn boundary<C: Coefficients>(grp: &C, g: &MultiGraph, o: &Orientation, h: &[C::Elem]) -> Vec<C::Elem> {
    let mut out = vec![grp.zero(); g.vertex_count()];
    for (e, value) in h.iter().enumerate() {
        let (t, hd) = o.direction(g, e);
        if t != hd {
            out[t] = grp.add(&out[t], value);
            out[hd] = grp.add(&out[hd], &grp.neg(value));
        }
    }
    out
}

/// `(δp)(e) = p(tail) − p(head)`.
pub fn coboundary<C: Coefficients>(grp: &C, g: &MultiGraph, o: &Orientation, potential: &[C::Elem]) -> Vec<C::Elem> {
    (0..g.edge_count())
        .map(|e| {
            let (t, h) = o.direction(g, e);
            grp.add(&potential[t], &grp.neg(&potential[h]))
        })
        .collect()
}

/// Signed sum of `f` around every fundamental circuit vanishes.
pub fn is_tension<C: Coefficients>(grp: &C, g: &MultiGraph, o: &Orientation, f: &[C::Elem]) -> bool {
    f.len() == g.edge_count()
        && bases(g, o).circuits.iter().all(|(_, c)| {
            let sum = c
                .iter()
                .zip(f)
                .fold(grp.zero(), |acc, (&s, v)| grp.add(&acc, &grp.signed(s, v)));
            grp.is_zero(&sum)
        })
}

/// Conservation at every vertex.
pub fn is_flow<C: Coefficients>(grp: &C, g: &MultiGraph, o: &Orientation, h: &[C::Elem]) -> bool {
    h.len() == g.edge_count() && boundary(grp, g, o, h).iter().all(|x| grp.is_zero(x))
}

/// Edge functions that can be transported between orientations.
pub trait EdgeFunction: Clone {
    fn support(&self) -> EdgeSubset;
    fn negate_at(&mut self, e: usize);
}

impl EdgeFunction for GroupElementFunction {
    fn support(&self) -> EdgeSubset {
        GroupElementFunction::support(self)
    }
    fn negate_at(&mut self, e: usize) {
        self.values[e] = self.group.neg(&self.values[e]);
    }
}

impl EdgeFunction for Vec<i64> {
    fn support(&self) -> EdgeSubset {
        integer_support(self)
    }
    fn negate_at(&mut self, e: usize) {
        self[e] = -self[e];
    }
}

/// Multiplies both components by the coupling `[to, from]`, turning a pair
/// for `(G, from)` into the corresponding pair for `(G, to)`.
pub fn reorient<T: EdgeFunction>(
    pair: &TensionFlowPair<T>,
    from: &Orientation,
    to: &Orientation,
) -> TensionFlowPair<T> {
    let full = EdgeSubset::full(from.len());
    let sign = coupling(to, from, &full);
    let mut out = pair.clone();
    for (e, &s) in sign.iter().enumerate() {
        if s < 0 {
            out.f.negate_at(e);
            out.g.negate_at(e);
        }
    }
    out
}

/// Reduces an integer pair to `Z_p × Z_q` edgewise.
pub fn modular_reduce(
    pair: &TensionFlowPair<Vec<i64>>,
    p: i64,
    q: i64,
) -> Result<TensionFlowPair<GroupElementFunction>> {
    for m in [p, q] {
        if m < 1 {
            return Err(Error::InvalidModulus(m));
        }
    }
    let zp = FiniteAbelianGroup::cyclic(p as u64)?;
    let zq = FiniteAbelianGroup::cyclic(q as u64)?;
    Ok(TensionFlowPair {
        f: GroupElementFunction::new(&zp, pair.f.iter().map(|&x| vec![x]).collect()),
        g: GroupElementFunction::new(&zq, pair.g.iter().map(|&x| vec![x]).collect()),
    })
}

/// `|Z^E / (T_z ⊕ F_z)|`, where `T_z` is spanned by fundamental cut vectors
/// and `F_z` by fundamental circuit vectors.
pub fn lattice_index(g: &MultiGraph, o: &Orientation) -> BigInt {
    let b = bases(g, o);
    let m = g.edge_count();
    let mut mat = IntMatrix::zeros(m, m);
    for (col, (_, v)) in b.cuts.iter().chain(b.circuits.iter()).enumerate() {
        for (row, &x) in v.iter().enumerate() {
            mat.set(row, col, BigInt::from(x));
        }
    }
    mat.smith_normal_form().iter().fold(BigInt::one(), |acc, d| acc * d)
}
