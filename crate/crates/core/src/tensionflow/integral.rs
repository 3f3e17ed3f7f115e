//! Integer tensions and flows restricted to per-edge value windows.

use super::basis::bases;
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, MultiGraph, Orientation};
use crate::limits::Limits;

/// Allowed values `lo ..= hi`, excluding zero when `nonzero` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeWindow {
    pub lo: i64,
    pub hi: i64,
    pub nonzero: bool,
}

impl EdgeWindow {
    pub const ZERO: EdgeWindow = EdgeWindow {
        lo: 0,
        hi: 0,
        nonzero: false,
    };

    pub fn range(lo: i64, hi: i64) -> Self {
        EdgeWindow { lo, hi, nonzero: false }
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi && !(self.nonzero && v == 0)
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        (self.lo..=self.hi).filter(move |&v| self.contains(v))
    }

    fn width(&self) -> u128 {
        if self.hi < self.lo {
            0
        } else {
            (self.hi - self.lo + 1) as u128
        }
    }
}

/// Window shapes at dilation `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowMode {
    /// `0 < h(e) < q`.
    Open,
    /// `0 ≤ h(e) ≤ q`.
    Closed,
    /// `0 < |h(e)| < q`.
    StrictSupport,
}

/// Edges of `active` follow the mode's window. Every other edge, and in
/// particular every edge of `zero`, is held at 0. `zero` and `active` must
/// be disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportConstraints {
    pub active: EdgeSubset,
    pub zero: EdgeSubset,
}

impl SupportConstraints {
    pub fn all(edges: usize) -> Self {
        SupportConstraints {
            active: EdgeSubset::full(edges),
            zero: EdgeSubset::empty(edges),
        }
    }

    pub fn on(active: EdgeSubset) -> Self {
        SupportConstraints {
            zero: active.complement(),
            active,
        }
    }
}

pub fn windows_for(
    edges: usize,
    q: i64,
    mode: WindowMode,
    constraints: &SupportConstraints,
) -> Result<Vec<EdgeWindow>> {
    let clash = constraints.active.intersection(&constraints.zero);
    if !clash.is_empty() {
        return Err(Error::InconsistentConstraints(clash.iter().collect()));
    }
    if q < 1 {
        return Err(Error::InvalidModulus(q));
    }
    let active = match mode {
        WindowMode::Open => EdgeWindow::range(1, q - 1),
        WindowMode::Closed => EdgeWindow::range(0, q),
        WindowMode::StrictSupport => EdgeWindow {
            lo: 1 - q,
            hi: q - 1,
            nonzero: true,
        },
    };
    Ok((0..edges)
        .map(|e| {
            if constraints.active.contains(e) {
                active
            } else {
                EdgeWindow::ZERO
            }
        })
        .collect())
}

/// Calls `visit` on every integer tension of `(g, o)` whose values lie in
/// the given windows. Potentials are assigned vertex by vertex along a
/// spanning forest, and every edge is checked as soon as both ends carry a
/// potential.
pub fn for_each_integral_tension(
    g: &MultiGraph,
    o: &Orientation,
    windows: &[EdgeWindow],
    limits: &Limits,
    visit: &mut dyn FnMut(&[i64]),
) -> Result<()> {
    check_len(g, windows)?;
    let forest = g.spanning_forest();
    let states = forest
        .tree
        .iter()
        .fold(1u128, |acc, e| acc.saturating_mul(windows[e].width()));
    limits.check_states("integral tension enumeration", states)?;
    if (0..g.edge_count()).any(|e| g.is_loop(e) && !windows[e].contains(0)) {
        return Ok(());
    }
    let n = g.vertex_count();
    let mut position = vec![0; n];
    for (i, &v) in forest.order.iter().enumerate() {
        position[v] = i;
    }
    // Non-loop, non-parent edges to check once their later endpoint is set.
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in 0..g.edge_count() {
        let (a, b) = g.endpoints(e);
        if a == b || forest.tree.contains(e) {
            continue;
        }
        let later = if position[a] > position[b] { a } else { b };
        checks[later].push(e);
    }
    let mut search = TensionSearch {
        g,
        o,
        windows,
        order: &forest.order,
        parent_edge: &forest.parent_edge,
        checks: &checks,
        potential: vec![0; n],
        values: vec![0; g.edge_count()],
    };
    search.run(0, visit);
    Ok(())
}

struct TensionSearch<'a> {
    g: &'a MultiGraph,
    o: &'a Orientation,
    windows: &'a [EdgeWindow],
    order: &'a [usize],
    parent_edge: &'a [Option<usize>],
    checks: &'a [Vec<usize>],
    potential: Vec<i64>,
    values: Vec<i64>,
}

impl TensionSearch<'_> {
    fn edge_value(&self, e: usize) -> i64 {
        let (t, h) = self.o.direction(self.g, e);
        self.potential[t] - self.potential[h]
    }

    fn checks_pass(&mut self, v: usize) -> bool {
        for &e in &self.checks[v] {
            let val = self.edge_value(e);
            if !self.windows[e].contains(val) {
                return false;
            }
            self.values[e] = val;
        }
        true
    }

    fn run(&mut self, i: usize, visit: &mut dyn FnMut(&[i64])) {
        if i == self.order.len() {
            visit(&self.values);
            return;
        }
        let v = self.order[i];
        match self.parent_edge[v] {
            None => {
                self.potential[v] = 0;
                if self.checks_pass(v) {
                    self.run(i + 1, visit);
                }
            }
            Some(pe) => {
                let (t, _) = self.o.direction(self.g, pe);
                let w = self.windows[pe];
                for val in w.values() {
                    // f(pe) = p(tail) − p(head); solve for p(v).
                    self.potential[v] = if v == t {
                        let (_, h) = self.o.direction(self.g, pe);
                        self.potential[h] + val
                    } else {
                        self.potential[t] - val
                    };
                    self.values[pe] = val;
                    if self.checks_pass(v) {
                        self.run(i + 1, visit);
                    }
                }
            }
        }
    }
}

/// Calls `visit` on every integer flow of `(g, o)` whose values lie in the
/// given windows, by running over co-forest values and deriving the forest
/// values from fundamental circuits.
pub fn for_each_integral_flow(
    g: &MultiGraph,
    o: &Orientation,
    windows: &[EdgeWindow],
    limits: &Limits,
    visit: &mut dyn FnMut(&[i64]),
) -> Result<()> {
    check_len(g, windows)?;
    let b = bases(g, o);
    let states = b
        .circuits
        .iter()
        .fold(1u128, |acc, (e, _)| acc.saturating_mul(windows[*e].width()));
    limits.check_states("integral flow enumeration", states)?;
    let choices: Vec<Vec<i64>> = b.circuits.iter().map(|(e, _)| windows[*e].values().collect()).collect();
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(());
    }
    let tree: Vec<usize> = b.forest.tree.iter().collect();
    let mut digits = vec![0usize; choices.len()];
    let mut values = vec![0i64; g.edge_count()];
    loop {
        for v in values.iter_mut() {
            *v = 0;
        }
        for (k, (e, circuit)) in b.circuits.iter().enumerate() {
            let x = choices[k][digits[k]];
            values[*e] = x;
            for &t in &tree {
                values[t] += circuit[t] * x;
            }
        }
        if tree.iter().all(|&t| windows[t].contains(values[t])) {
            visit(&values);
        }
        // Odometer step.
        let mut k = 0;
        loop {
            if k == digits.len() {
                return Ok(());
            }
            digits[k] += 1;
            if digits[k] < choices[k].len() {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

fn check_len(g: &MultiGraph, windows: &[EdgeWindow]) -> Result<()> {
    if windows.len() != g.edge_count() {
        return Err(Error::InvalidArgument(format!(
            "{} windows for {} edges",
            windows.len(),
            g.edge_count()
        )));
    }
    Ok(())
}

pub fn count_integral_tensions(
    g: &MultiGraph,
    o: &Orientation,
    windows: &[EdgeWindow],
    limits: &Limits,
) -> Result<u64> {
    let mut n = 0u64;
    for_each_integral_tension(g, o, windows, limits, &mut |_| n += 1)?;
    Ok(n)
}

pub fn count_integral_flows(g: &MultiGraph, o: &Orientation, windows: &[EdgeWindow], limits: &Limits) -> Result<u64> {
    let mut n = 0u64;
    for_each_integral_flow(g, o, windows, limits, &mut |_| n += 1)?;
    Ok(n)
}

/// Integer tensions in the window described by `mode`, `q` and
/// `constraints`.
pub fn enumerate_integral_tensions(
    g: &MultiGraph,
    o: &Orientation,
    q: i64,
    mode: WindowMode,
    constraints: &SupportConstraints,
    limits: &Limits,
) -> Result<Vec<Vec<i64>>> {
    let windows = windows_for(g.edge_count(), q, mode, constraints)?;
    let mut out = Vec::new();
    for_each_integral_tension(g, o, &windows, limits, &mut |f| out.push(f.to_vec()))?;
    Ok(out)
}

/// Integer flows in the window described by `mode`, `q` and `constraints`.
pub fn enumerate_integral_flows(
    g: &MultiGraph,
    o: &Orientation,
    q: i64,
    mode: WindowMode,
    constraints: &SupportConstraints,
    limits: &Limits,
) -> Result<Vec<Vec<i64>>> {
    let windows = windows_for(g.edge_count(), q, mode, constraints)?;
    let mut out = Vec::new();
    for_each_integral_flow(g, o, &windows, limits, &mut |h| out.push(h.to_vec()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tensionflow::group::Integers;
    use crate::tensionflow::ops::{is_flow, is_tension};

    /// Every integer vector in the windows, filtered by a predicate.
    fn brute(windows: &[EdgeWindow], keep: impl Fn(&[i64]) -> bool) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for w in windows {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    w.values().map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().filter(|h| keep(h)).collect()
    }

    #[test]
    fn examples() {
        let limits = Limits::default();
        let edge = fixtures::edge();
        let o = Orientation::identity(&edge);
        let all = SupportConstraints::all(1);
        let mut f = enumerate_integral_tensions(&edge, &o, 3, WindowMode::StrictSupport, &all, &limits).unwrap();
        f.sort();
        assert_eq!(f, vec![vec![-2], vec![-1], vec![1], vec![2]]);

        // Acyclic K3: open window on every edge at q = 2 forces f = 1
        // everywhere, impossible around a triangle with a 0->1->2, 0->2
        // orientation (f02 = f01 + f12).
        let k3 = fixtures::k3();
        let o = Orientation::from_flips(&k3, vec![false, false, true]).unwrap();
        let all3 = SupportConstraints::all(3);
        let n = enumerate_integral_tensions(&k3, &o, 2, WindowMode::Open, &all3, &limits).unwrap();
        assert!(n.is_empty());
        let n = enumerate_integral_tensions(&k3, &o, 3, WindowMode::Open, &all3, &limits).unwrap();
        assert_eq!(n, vec![vec![1, 1, 2]]);

        for (_, g) in fixtures::corpus() {
            let o = Orientation::identity(&g);
            let c = SupportConstraints::all(g.edge_count());
            if g.edge_count() > 0 {
                assert!(enumerate_integral_tensions(&g, &o, 1, WindowMode::Open, &c, &limits)
                    .unwrap()
                    .is_empty());
                assert!(enumerate_integral_flows(&g, &o, 1, WindowMode::Open, &c, &limits)
                    .unwrap()
                    .is_empty());
            }
        }
    }

    #[test]
    fn overlapping_constraints_rejected() {
        let c = SupportConstraints {
            active: EdgeSubset::from_edges(3, [0, 1]),
            zero: EdgeSubset::from_edges(3, [1, 2]),
        };
        assert!(matches!(
            windows_for(3, 2, WindowMode::Open, &c),
            Err(Error::InconsistentConstraints(v)) if v == vec![1]
        ));
    }

    #[test]
    fn matches_brute_force() {
        let limits = Limits::default();
        let shapes = [
            vec![EdgeWindow::range(-2, 2); 6],
            vec![
                EdgeWindow {
                    lo: -2,
                    hi: 2,
                    nonzero: true
                };
                6
            ],
            vec![
                EdgeWindow::range(1, 2),
                EdgeWindow::ZERO,
                EdgeWindow::range(0, 3),
                EdgeWindow::range(-1, 1),
                EdgeWindow::range(0, 2),
                EdgeWindow::range(1, 1),
            ],
        ];
        for (name, g) in fixtures::corpus() {
            if g.edge_count() > 6 {
                continue;
            }
            for code in [0u64, 0b1011] {
                let o = Orientation::from_code(&g, code);
                for shape in &shapes {
                    let windows = &shape[..g.edge_count()];
                    let mut t = Vec::new();
                    for_each_integral_tension(&g, &o, windows, &limits, &mut |f| t.push(f.to_vec())).unwrap();
                    let mut fl = Vec::new();
                    for_each_integral_flow(&g, &o, windows, &limits, &mut |h| fl.push(h.to_vec())).unwrap();
                    t.sort();
                    fl.sort();
                    assert_eq!(t, brute(windows, |h| is_tension(&Integers, &g, &o, h)), "{name}");
                    assert_eq!(fl, brute(windows, |h| is_flow(&Integers, &g, &o, h)), "{name}");
                }
            }
        }
    }
}
