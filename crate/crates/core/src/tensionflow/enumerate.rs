use super::basis::bases;
use super::group::{Coefficients, FiniteAbelianGroup, GroupElementFunction};
use super::ops::coboundary;
use crate::error::Result;
use crate::graph::{MultiGraph, Orientation};
use crate::limits::{saturating_pow, Limits};

/// All tensions over `grp`, one per potential vanishing at the root of
/// every component. There are `|grp|^{r(G)}` of them.
pub fn enumerate_tensions(
    g: &MultiGraph,
    o: &Orientation,
    grp: &FiniteAbelianGroup,
    limits: &Limits,
) -> Result<Vec<GroupElementFunction>> {
    let forest = g.spanning_forest();
    let free: Vec<usize> = forest
        .order
        .iter()
        .copied()
        .filter(|v| !forest.roots.contains(v))
        .collect();
    let order = grp.order();
    limits.check_states("tension enumeration", saturating_pow(order as u128, free.len()))?;
    let total = order.pow(free.len() as u32);
    let mut out = Vec::with_capacity(total as usize);
    let mut potential = vec![grp.zero(); g.vertex_count()];
    for code in 0..total {
        let mut c = code;
        for &v in &free {
            potential[v] = grp.element(c % order);
            c /= order;
        }
        out.push(GroupElementFunction {
            group: grp.clone(),
            values: coboundary(grp, g, o, &potential),
        });
    }
    Ok(out)
}

/// All flows over `grp`: free values on co-forest edges, extended along
/// fundamental circuits. There are `|grp|^{n(G)}` of them.
pub fn enumerate_flows(
    g: &MultiGraph,
    o: &Orientation,
    grp: &FiniteAbelianGroup,
    limits: &Limits,
) -> Result<Vec<GroupElementFunction>> {
    let b = bases(g, o);
    let order = grp.order();
    limits.check_states("flow enumeration", saturating_pow(order as u128, b.circuits.len()))?;
    let total = order.pow(b.circuits.len() as u32);
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut c = code;
        let mut values = vec![grp.zero(); g.edge_count()];
        for (_, circuit) in &b.circuits {
            let x = grp.element(c % order);
            c /= order;
            for (e, &s) in circuit.iter().enumerate() {
                if s != 0 {
                    values[e] = grp.add(&values[e], &grp.signed(s, &x));
                }
            }
        }
        out.push(GroupElementFunction {
            group: grp.clone(),
            values,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tensionflow::ops::{is_flow, is_tension};
    use std::collections::HashSet;

    fn groups() -> Vec<FiniteAbelianGroup> {
        [vec![2], vec![3], vec![4], vec![2, 2]]
            .into_iter()
            .map(|o| FiniteAbelianGroup::new(o).unwrap())
            .collect()
    }

    #[test]
    fn counts_examples() {
        let limits = Limits::default();
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let z3 = FiniteAbelianGroup::cyclic(3).unwrap();
        let k3 = fixtures::k3();
        let o = Orientation::identity(&k3);
        assert_eq!(enumerate_tensions(&k3, &o, &z2, &limits).unwrap().len(), 4);
        assert_eq!(enumerate_flows(&k3, &o, &z2, &limits).unwrap().len(), 2);
        let lp = fixtures::single_loop();
        let o = Orientation::identity(&lp);
        assert_eq!(enumerate_tensions(&lp, &o, &z3, &limits).unwrap().len(), 1);
        assert_eq!(enumerate_flows(&lp, &o, &z3, &limits).unwrap().len(), 3);
        let e2 = fixtures::e2();
        let o = Orientation::identity(&e2);
        let t = enumerate_tensions(&e2, &o, &z3, &limits).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t[0].values.is_empty());
    }

    /// Exhaustive comparison against filtering all edge functions.
    #[test]
    fn enumeration_matches_characterization() {
        let limits = Limits::default();
        for (name, g) in fixtures::corpus() {
            if g.edge_count() > 6 {
                continue;
            }
            let o = Orientation::from_code(&g, 0b101);
            for grp in groups() {
                let tensions = enumerate_tensions(&g, &o, &grp, &limits).unwrap();
                let flows = enumerate_flows(&g, &o, &grp, &limits).unwrap();
                let order = grp.order() as usize;
                assert_eq!(tensions.len(), order.pow(g.rank() as u32), "{name}");
                assert_eq!(flows.len(), order.pow(g.nullity() as u32), "{name}");
                let t: HashSet<_> = tensions.iter().map(|f| f.values.clone()).collect();
                let fl: HashSet<_> = flows.iter().map(|f| f.values.clone()).collect();
                if order.pow(g.edge_count() as u32) > 5000 {
                    continue;
                }
                let mut brute_t = 0;
                let mut brute_f = 0;
                for code in 0..order.pow(g.edge_count() as u32) as u64 {
                    let mut c = code;
                    let h: Vec<Vec<i64>> = (0..g.edge_count())
                        .map(|_| {
                            let x = grp.element(c % order as u64);
                            c /= order as u64;
                            x
                        })
                        .collect();
                    if is_tension(&grp, &g, &o, &h) {
                        brute_t += 1;
                        assert!(t.contains(&h), "{name}: missing tension {h:?}");
                    }
                    if is_flow(&grp, &g, &o, &h) {
                        brute_f += 1;
                        assert!(fl.contains(&h), "{name}: missing flow {h:?}");
                    }
                }
                assert_eq!((brute_t, brute_f), (t.len(), fl.len()), "{name}");
            }
        }
    }

    #[test]
    fn tensions_are_orthogonal_to_flows() {
        let limits = Limits::default();
        for (name, g) in fixtures::corpus() {
            let o = Orientation::from_code(&g, 0b110);
            for m in 2..=4i64 {
                let grp = FiniteAbelianGroup::cyclic(m as u64).unwrap();
                let tensions = enumerate_tensions(&g, &o, &grp, &limits).unwrap();
                let flows = enumerate_flows(&g, &o, &grp, &limits).unwrap();
                for f in &tensions {
                    for h in &flows {
                        let dot: i64 = f.values.iter().zip(&h.values).map(|(a, b)| a[0] * b[0]).sum();
                        assert_eq!(dot.rem_euclid(m), 0, "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn guard_applies() {
        let limits = Limits {
            max_states: 4,
            ..Limits::default()
        };
        let k4 = fixtures::k4();
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        assert!(enumerate_tensions(&k4, &Orientation::identity(&k4), &z2, &limits).is_err());
    }
}
