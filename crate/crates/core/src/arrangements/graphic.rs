use std::collections::{BTreeMap, VecDeque};

use super::poset::IntersectionPoset;
use crate::algebra::{MultiPoly, RationalMatrix, Var};
use crate::error::Result;
use crate::graph::{EdgeSubset, MultiGraph};
use crate::limits::Limits;

/// The flat `Ω_X = T_X × F_X` of the tension-flow arrangement `{Ω_e}`,
/// where `T_X` holds the tensions vanishing on `X` and `F_X` the flows
/// vanishing on `X`. `edges` is the closure of `X`: every edge on which all
/// of `Ω_X` vanishes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphicFlat {
    pub edges: EdgeSubset,
    pub dim_t: usize,
    pub dim_f: usize,
}

struct Dims<'a> {
    incidence: RationalMatrix,
    g: &'a MultiGraph,
    full_rank: usize,
}

impl<'a> Dims<'a> {
    fn new(g: &'a MultiGraph) -> Self {
        let (n, m) = (g.vertex_count(), g.edge_count());
        let mut entries = vec![0i64; n * m];
        for (e, &(t, h)) in g.edges().iter().enumerate() {
            if t != h {
                entries[t * m + e] = 1;
                entries[h * m + e] = -1;
            }
        }
        let incidence = RationalMatrix::from_integers(n, m, &entries);
        let full_rank = incidence.rank();
        Dims {
            incidence,
            g,
            full_rank,
        }
    }

    fn rank_on(&self, x: &EdgeSubset) -> usize {
        self.incidence.select_columns(&x.iter().collect::<Vec<_>>()).rank()
    }

    /// `(dim T_X, dim F_X)` over the rationals.
    fn of(&self, x: &EdgeSubset) -> (usize, usize) {
        let xc = x.complement();
        (self.full_rank - self.rank_on(x), xc.len() - self.rank_on(&xc))
    }

    fn closure(&self, x: &EdgeSubset) -> EdgeSubset {
        let d = self.of(x);
        let mut out = *x;
        for e in 0..self.g.edge_count() {
            let mut y = *x;
            y.insert(e);
            if self.of(&y) == d {
                out.insert(e);
            }
        }
        out
    }
}

/// All flats `Ω_X`, deduplicated by closure. `Ω_F ⊆ Ω_G` iff `G ⊆ F`; the
/// top is the closure of `∅`.
pub fn graphic_semilattice(g: &MultiGraph, limits: &Limits) -> Result<IntersectionPoset<GraphicFlat>> {
    limits.check_edges("graphic semilattice", g.edge_count())?;
    let dims = Dims::new(g);
    let top = dims.closure(&g.empty_subset());
    let mut flats: BTreeMap<EdgeSubset, (usize, usize)> = BTreeMap::new();
    flats.insert(top, dims.of(&top));
    let mut queue = VecDeque::from([top]);
    while let Some(f) = queue.pop_front() {
        for e in f.complement().iter() {
            let mut y = f;
            y.insert(e);
            let c = dims.closure(&y);
            if let std::collections::btree_map::Entry::Vacant(slot) = flats.entry(c) {
                slot.insert(dims.of(&c));
                queue.push_back(c);
            }
        }
    }
    let elements: Vec<GraphicFlat> = flats
        .into_iter()
        .map(|(edges, (dim_t, dim_f))| GraphicFlat { edges, dim_t, dim_f })
        .collect();
    let top_index = elements.iter().position(|f| f.edges == top).expect("top present");
    Ok(IntersectionPoset::new(elements, top_index, |a, b| {
        b.edges.is_subset(&a.edges)
    }))
}

/// `Σ_F μ(Ω_F, Ω) x^{dim T_F} y^{dim F_F}`.
pub fn graphic_characteristic_polynomial(poset: &IntersectionPoset<GraphicFlat>) -> MultiPoly {
    poset
        .elements()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            (MultiPoly::monomial(Var::X, f.dim_t as u32) * MultiPoly::monomial(Var::Y, f.dim_f as u32))
                .scale(&poset.mobius(i).into())
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn chi(g: &MultiGraph) -> String {
        graphic_characteristic_polynomial(&graphic_semilattice(g, &Limits::default()).unwrap()).to_string()
    }

    #[test]
    fn examples() {
        let l = Limits::default();
        let edge = graphic_semilattice(&fixtures::edge(), &l).unwrap();
        assert_eq!(edge.len(), 2);
        let bottom = 1 - edge.top();
        assert_eq!(edge.mobius(bottom), -1);
        assert_eq!(chi(&fixtures::edge()), "x - 1");
        assert_eq!(chi(&fixtures::single_loop()), "y - 1");
        // Both edges of a digon cut out the zero flat.
        assert_eq!(graphic_semilattice(&fixtures::digon(), &l).unwrap().len(), 2);
        assert_eq!(chi(&fixtures::digon()), "x*y - 1");
        assert_eq!(chi(&fixtures::e2()), "1");
    }

    #[test]
    fn dims_match_rank_formulas() {
        for (name, g) in fixtures::corpus() {
            let dims = Dims::new(&g);
            for x in EdgeSubset::all(g.edge_count()) {
                let expected = (g.rank() - g.rank_of(x.mask()), g.nullity_of(x.complement().mask()));
                assert_eq!(dims.of(&x), expected, "{name} {x:?}");
            }
        }
    }

    #[test]
    fn closure_is_consistent_with_unions() {
        for (name, g) in fixtures::corpus() {
            if g.edge_count() > 6 {
                continue;
            }
            let dims = Dims::new(&g);
            let closures: Vec<EdgeSubset> = EdgeSubset::all(g.edge_count()).map(|x| dims.closure(&x)).collect();
            for a in 0..closures.len() {
                for b in 0..closures.len() {
                    if closures[a] == closures[b] {
                        assert_eq!(closures[a | b], closures[a], "{name}");
                    }
                }
            }
        }
    }
}
