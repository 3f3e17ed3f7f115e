//! The orientation space `O(G)`: enumeration, the partition of `E` into
//! bond edges `B_ρ` and circuit edges `C_ρ`, and cut-Eulerian equivalence
//! classes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    cyclic_edges, enumerate_directed_bonds, enumerate_directed_circuits, is_acyclic, is_totally_cyclic, Dsu,
    EdgeSubset, MultiGraph, Orientation,
};
use crate::limits::Limits;
use crate::tensionflow::{count_integral_flows, count_integral_tensions, EdgeWindow};

/// All `2^{#non-loop edges}` orientations, ordered by [`Orientation::code`].
pub fn all_orientations(g: &MultiGraph, limits: &Limits) -> Result<Vec<Orientation>> {
    let k = g.non_loop_edges().len();
    limits.check_edges("orientation enumeration", k)?;
    Ok((0..1u64 << k).map(|c| Orientation::from_code(g, c)).collect())
}

/// `(B_ρ, C_ρ)`: `C_ρ` is the set of edges on directed circuits and `B_ρ`
/// its complement. Fails if `⟨C_ρ⟩` is not totally cyclic or `⟨B_ρ⟩` is not
/// acyclic under `o`.
pub fn classify_edges(g: &MultiGraph, o: &Orientation) -> Result<(EdgeSubset, EdgeSubset)> {
    let c = cyclic_edges(g, o);
    let b = c.complement();
    for (part, want_cyclic) in [(c, true), (b, false)] {
        let (sub, ids) = g.restrict(&part);
        let so = o.restrict(&ids);
        let ok = if want_cyclic {
            is_totally_cyclic(&sub, &so)
        } else {
            is_acyclic(&sub, &so)
        };
        if !ok {
            return Err(Error::Verification(format!(
                "edge partition of {} under flips {:?}: {} part {:?} fails",
                g.fingerprint(),
                o.flips(),
                if want_cyclic { "circuit" } else { "bond" },
                part
            )));
        }
    }
    Ok((b, c))
}

/// One cut-Eulerian equivalence class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationClass {
    /// Members in increasing flip-vector order; the first is the
    /// representative.
    pub members: Vec<Orientation>,
    pub b_size: usize,
    pub c_size: usize,
    /// Whether some member has a different `(|B|, |C|)` than the
    /// representative.
    pub sizes_vary: bool,
}

impl OrientationClass {
    pub fn representative(&self) -> &Orientation {
        &self.members[0]
    }
}

/// JSON record emitted by `classify-orientations`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassRecord {
    pub representative: Vec<u8>,
    pub members: usize,
    pub b_size: usize,
    pub c_size: usize,
}

impl From<&OrientationClass> for ClassRecord {
    fn from(c: &OrientationClass) -> Self {
        ClassRecord {
            representative: c.representative().flips().iter().map(|&b| b as u8).collect(),
            members: c.members.len(),
            b_size: c.b_size,
            c_size: c.c_size,
        }
    }
}

/// Classes of the move graph on `O(G)` whose moves reverse one directed
/// circuit or one directed bond. Sorted by representative.
pub fn cut_eulerian_classes(g: &MultiGraph, limits: &Limits) -> Result<Vec<OrientationClass>> {
    let all = all_orientations(g, limits)?;
    let mut dsu = Dsu::new(all.len());
    for (code, o) in all.iter().enumerate() {
        let moves = enumerate_directed_circuits(g, o, limits)?
            .into_iter()
            .chain(enumerate_directed_bonds(g, o, limits)?);
        for set in moves {
            let next = o.reversed_on(g, &set).code(g) as usize;
            dsu.union(code, next);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<Orientation>> = Default::default();
    for (code, o) in all.into_iter().enumerate() {
        groups.entry(dsu.find(code)).or_default().push(o);
    }
    let mut classes = Vec::with_capacity(groups.len());
    for (_, mut members) in groups {
        members.sort();
        let sizes = |o: &Orientation| -> Result<(usize, usize)> {
            let (b, c) = classify_edges(g, o)?;
            Ok((b.len(), c.len()))
        };
        let (b_size, c_size) = sizes(&members[0])?;
        let mut sizes_vary = false;
        for o in &members[1..] {
            sizes_vary |= sizes(o)? != (b_size, c_size);
        }
        classes.push(OrientationClass {
            members,
            b_size,
            c_size,
            sizes_vary,
        });
    }
    classes.sort_by(|a, b| a.representative().cmp(b.representative()));
    Ok(classes)
}

/// Number of `{0,1}`-valued integer tensions vanishing on `C_ρ` times the
/// number of `{0,1}`-valued integer flows vanishing on `B_ρ`, for the
/// representative `ρ`. This is the closed count at dilation `(1, 1)`.
pub fn zero_one_pair_count(g: &MultiGraph, rho: &Orientation, limits: &Limits) -> Result<u64> {
    let (b, _) = classify_edges(g, rho)?;
    let on = |set: &EdgeSubset| -> Vec<EdgeWindow> {
        (0..g.edge_count())
            .map(|e| {
                if set.contains(e) {
                    EdgeWindow::range(0, 1)
                } else {
                    EdgeWindow::ZERO
                }
            })
            .collect()
    };
    let t = count_integral_tensions(g, rho, &on(&b), limits)?;
    let f = count_integral_flows(g, rho, &on(&b.complement()), limits)?;
    Ok(t * f)
}

/// `#[ρ]` predicted by the `{0,1}` pair count, checked against the class.
///
/// A loop admits two `{0,1}` flow values but one orientation, so the pair
/// count is `2^{#loops}` times the class size; the prediction divides it
/// out.
pub fn class_size_check(g: &MultiGraph, cls: &OrientationClass, limits: &Limits) -> Result<u64> {
    let pairs = zero_one_pair_count(g, cls.representative(), limits)?;
    let loops = 1u64 << g.loop_count();
    let predicted = pairs / loops;
    if pairs % loops != 0 || predicted != cls.members.len() as u64 {
        return Err(Error::Verification(format!(
            "class of {:?} in {}: {} members, {{0,1}} pair count {} with {} loops",
            cls.representative().flips(),
            g.fingerprint(),
            cls.members.len(),
            pairs,
            g.loop_count()
        )));
    }
    Ok(predicted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn orientation_counts() {
        let l = Limits::default();
        assert_eq!(all_orientations(&fixtures::single_loop(), &l).unwrap().len(), 1);
        assert_eq!(all_orientations(&fixtures::k3(), &l).unwrap().len(), 8);
        assert_eq!(all_orientations(&fixtures::edge(), &l).unwrap().len(), 2);
        let tight = Limits { max_edges: 2, ..l };
        assert!(all_orientations(&fixtures::k3(), &tight).is_err());
    }

    #[test]
    fn classify_examples() {
        let k3 = fixtures::k3();
        let (b, c) = classify_edges(&k3, &Orientation::identity(&k3)).unwrap();
        assert!(b.is_empty() && c.len() == 3);
        let acyclic = Orientation::from_flips(&k3, vec![false, false, true]).unwrap();
        let (b, c) = classify_edges(&k3, &acyclic).unwrap();
        assert!(b.len() == 3 && c.is_empty());
        let digon = fixtures::digon();
        let opposite = Orientation::from_flips(&digon, vec![false, true]).unwrap();
        assert_eq!(classify_edges(&digon, &opposite).unwrap().1, digon.all_edges());
    }

    #[test]
    fn class_examples() {
        let l = Limits::default();
        let k3 = cut_eulerian_classes(&fixtures::k3(), &l).unwrap();
        let mut sizes: Vec<usize> = k3.iter().map(|c| c.members.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3, 3]);
        let edge = cut_eulerian_classes(&fixtures::edge(), &l).unwrap();
        assert_eq!(edge.len(), 1);
        assert_eq!(edge[0].members.len(), 2);
        let lp = cut_eulerian_classes(&fixtures::single_loop(), &l).unwrap();
        assert_eq!((lp.len(), lp[0].members.len()), (1, 1));
        assert_eq!(cut_eulerian_classes(&fixtures::digon(), &l).unwrap().len(), 2);
    }

    #[test]
    fn class_size_examples() {
        let l = Limits::default();
        let g = fixtures::k3();
        let classes = cut_eulerian_classes(&g, &l).unwrap();
        let cyclic = classes.iter().find(|c| c.c_size == 3).unwrap();
        assert_eq!(class_size_check(&g, cyclic, &l).unwrap(), 2);
        let edge = fixtures::edge();
        let c = cut_eulerian_classes(&edge, &l).unwrap();
        assert_eq!(class_size_check(&edge, &c[0], &l).unwrap(), 2);
        let e2 = fixtures::e2();
        let c = cut_eulerian_classes(&e2, &l).unwrap();
        assert_eq!(class_size_check(&e2, &c[0], &l).unwrap(), 1);
        let lp = fixtures::single_loop();
        let c = cut_eulerian_classes(&lp, &l).unwrap();
        assert_eq!(zero_one_pair_count(&lp, c[0].representative(), &l).unwrap(), 2);
        assert_eq!(class_size_check(&lp, &c[0], &l).unwrap(), 1);
    }

    #[test]
    fn classes_partition_and_match_pair_counts() {
        let l = Limits::default();
        for (name, g) in fixtures::corpus() {
            let classes = cut_eulerian_classes(&g, &l).unwrap();
            let total: usize = classes.iter().map(|c| c.members.len()).sum();
            assert_eq!(total, 1 << g.non_loop_edges().len(), "{name}");
            for c in &classes {
                class_size_check(&g, c, &l).unwrap();
            }
        }
    }
}
