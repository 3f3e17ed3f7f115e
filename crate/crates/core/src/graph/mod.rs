//! Multigraphs with loops and parallel edges, orientations, and the
//! combinatorics of spanning subgraphs and directed circuits/bonds.

mod directed;
mod subset;

pub use directed::{
    coupling, cyclic_edges, enumerate_directed_bonds, enumerate_directed_circuits, is_acyclic, is_edge_cyclic,
    is_totally_cyclic,
};
pub use subset::EdgeSubset;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Graph with `vertex_count` vertices and an ordered edge list. Edge ids are
/// positions in the list; the stored `(tail, head)` pair is the default
/// orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

/// Result of deleting or contracting an edge. `edge_map[old]` is the id of
/// the surviving edge in the minor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub graph: MultiGraph,
    pub edge_map: Vec<Option<usize>>,
}

/// Spanning forest grown breadth-first from the lowest vertex of each
/// component.
#[derive(Debug, Clone)]
pub struct SpanningForest {
    pub tree: EdgeSubset,
    /// Vertices in discovery order; every component's root precedes its
    /// other vertices.
    pub order: Vec<usize>,
    pub parent_edge: Vec<Option<usize>>,
    pub component: Vec<usize>,
    pub roots: Vec<usize>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.len() > 64 {
            return Err(Error::TooManyEdges(edges.len()));
        }
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::InvalidVertex {
                        vertex: w,
                        count: vertex_count,
                    });
                }
            }
        }
        Ok(MultiGraph { vertex_count, edges })
    }

    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        MultiGraph {
            vertex_count: n,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e >= self.edges.len() {
            return Err(Error::InvalidEdge {
                edge: e,
                count: self.edges.len(),
            });
        }
        Ok(())
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn loops(&self) -> EdgeSubset {
        EdgeSubset::from_edges(self.edge_count(), (0..self.edge_count()).filter(|&e| self.is_loop(e)))
    }

    pub fn loop_count(&self) -> usize {
        self.loops().len()
    }

    /// Non-loop edge ids in increasing order.
    pub fn non_loop_edges(&self) -> Vec<usize> {
        (0..self.edge_count()).filter(|&e| !self.is_loop(e)).collect()
    }

    pub fn all_edges(&self) -> EdgeSubset {
        EdgeSubset::full(self.edge_count())
    }

    pub fn empty_subset(&self) -> EdgeSubset {
        EdgeSubset::empty(self.edge_count())
    }

    /// Number of components of the spanning subgraph `(V, mask)`.
    pub fn components_of(&self, mask: u64) -> usize {
        let mut dsu = Dsu::new(self.vertex_count);
        let mut comps = self.vertex_count;
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if mask >> e & 1 == 1 && dsu.union(u, v) {
                comps -= 1;
            }
        }
        comps
    }

    pub fn rank_of(&self, mask: u64) -> usize {
        self.vertex_count - self.components_of(mask)
    }

    pub fn nullity_of(&self, mask: u64) -> usize {
        mask.count_ones() as usize - self.rank_of(mask)
    }

    /// `(r⟨X⟩, n⟨X⟩)` for the spanning subgraph on `x`.
    pub fn rank_nullity(&self, x: &EdgeSubset) -> (usize, usize) {
        let r = self.rank_of(x.mask());
        (r, x.len() - r)
    }

    pub fn component_count(&self) -> usize {
        self.components_of(self.all_edges().mask())
    }

    /// `r(G)`, the size of a maximal forest.
    pub fn rank(&self) -> usize {
        self.rank_of(self.all_edges().mask())
    }

    /// `n(G)`, the number of independent circuits.
    pub fn nullity(&self) -> usize {
        self.edge_count() - self.rank()
    }

    /// True when `e` is a cut-edge (a bridge).
    pub fn is_bridge(&self, e: usize) -> bool {
        let all = self.all_edges().mask();
        !self.is_loop(e) && self.rank_of(all & !(1 << e)) < self.rank_of(all)
    }

    pub fn delete(&self, e: usize) -> Result<Minor> {
        self.check_edge(e)?;
        let mut edges = Vec::with_capacity(self.edge_count() - 1);
        let mut edge_map = vec![None; self.edge_count()];
        for (i, &uv) in self.edges.iter().enumerate() {
            if i != e {
                edge_map[i] = Some(edges.len());
                edges.push(uv);
            }
        }
        Ok(Minor {
            graph: MultiGraph {
                vertex_count: self.vertex_count,
                edges,
            },
            edge_map,
        })
    }

    /// Identifies the endpoints of `e` and removes it. The larger endpoint
    /// merges into the smaller one and higher vertex ids shift down by one.
    /// Contracting a loop deletes it.
    pub fn contract(&self, e: usize) -> Result<Minor> {
        self.check_edge(e)?;
        if self.is_loop(e) {
            return self.delete(e);
        }
        let (a, b) = self.edges[e];
        let (keep, gone) = if a < b { (a, b) } else { (b, a) };
        let relabel = |w: usize| {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let mut edges = Vec::with_capacity(self.edge_count() - 1);
        let mut edge_map = vec![None; self.edge_count()];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if i != e {
                edge_map[i] = Some(edges.len());
                edges.push((relabel(u), relabel(v)));
            }
        }
        Ok(Minor {
            graph: MultiGraph {
                vertex_count: self.vertex_count - 1,
                edges,
            },
            edge_map,
        })
    }

    /// Spanning subgraph on the edges of `keep`, with the old id of each
    /// surviving edge.
    pub fn restrict(&self, keep: &EdgeSubset) -> (MultiGraph, Vec<usize>) {
        let ids: Vec<usize> = keep.iter().collect();
        let edges = ids.iter().map(|&e| self.edges[e]).collect();
        (
            MultiGraph {
                vertex_count: self.vertex_count,
                edges,
            },
            ids,
        )
    }

    pub fn spanning_forest(&self) -> SpanningForest {
        let n = self.vertex_count;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if u != v {
                adj[u].push((v, e));
                adj[v].push((u, e));
            }
        }
        let mut seen = vec![false; n];
        let mut parent_edge = vec![None; n];
        let mut component = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut roots = Vec::new();
        let mut tree = self.empty_subset();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            let c = roots.len();
            roots.push(root);
            seen[root] = true;
            component[root] = c;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &(w, e) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        component[w] = c;
                        parent_edge[w] = Some(e);
                        tree.insert(e);
                        queue.push_back(w);
                    }
                }
            }
        }
        SpanningForest {
            tree,
            order,
            parent_edge,
            component,
            roots,
        }
    }

    /// Stable textual identity used in reports.
    pub fn fingerprint(&self) -> String {
        let edges: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("v{};{}", self.vertex_count, edges.join(","))
    }

    /// Serializes to the `v`/`e` line format accepted by [`FromStr`].
    pub fn to_text(&self) -> String {
        let mut s = format!("v {}\n", self.vertex_count);
        for (u, v) in &self.edges {
            s.push_str(&format!("e {u} {v}\n"));
        }
        s
    }
}

/// Parses the line format: `#` comments, a `v <count>` line, then one
/// `e <tail> <head>` line per edge with 0-based vertex ids.
impl FromStr for MultiGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut vertex_count: Option<usize> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| Error::Parse { line: line_no, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let number = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| parse_err(format!("`{s}` is not a non-negative integer")))
            };
            match (vertex_count, fields.as_slice()) {
                (None, ["v", n]) => vertex_count = Some(number(n)?),
                (None, _) => return Err(parse_err("expected `v <vertex_count>`".into())),
                (Some(_), ["v", ..]) => return Err(parse_err("duplicate `v` line".into())),
                (Some(n), ["e", a, b]) => {
                    let (a, b) = (number(a)?, number(b)?);
                    for w in [a, b] {
                        if w >= n {
                            return Err(parse_err(format!("vertex {w} out of range for {n} vertices")));
                        }
                    }
                    edges.push((a, b));
                }
                (Some(_), _) => return Err(parse_err(format!("malformed line `{line}`"))),
            }
        }
        let n = vertex_count.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `v <vertex_count>` line".into(),
        })?;
        MultiGraph::new(n, edges)
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Per-edge direction relative to the stored `(tail, head)` pairs.
/// Loops are never flipped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    flips: Vec<bool>,
}

impl Orientation {
    /// The stored direction on every edge.
    pub fn identity(g: &MultiGraph) -> Self {
        Orientation {
            flips: vec![false; g.edge_count()],
        }
    }

    pub fn from_flips(g: &MultiGraph, flips: Vec<bool>) -> Result<Self> {
        if flips.len() != g.edge_count() {
            return Err(Error::OrientationMismatch {
                expected: g.edge_count(),
                got: flips.len(),
            });
        }
        if let Some(e) = (0..flips.len()).find(|&e| flips[e] && g.is_loop(e)) {
            return Err(Error::LoopFlip(e));
        }
        Ok(Orientation { flips })
    }

    /// Orientation whose `i`-th non-loop edge is flipped iff bit `i` of
    /// `code` is set.
    pub fn from_code(g: &MultiGraph, code: u64) -> Self {
        let mut flips = vec![false; g.edge_count()];
        for (i, e) in g.non_loop_edges().into_iter().enumerate() {
            flips[e] = code >> i & 1 == 1;
        }
        Orientation { flips }
    }

    /// Inverse of [`Orientation::from_code`].
    pub fn code(&self, g: &MultiGraph) -> u64 {
        g.non_loop_edges()
            .into_iter()
            .enumerate()
            .filter(|&(_, e)| self.flips[e])
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    pub fn is_flipped(&self, e: usize) -> bool {
        self.flips[e]
    }

    /// `(tail, head)` of `e` under this orientation.
    pub fn direction(&self, g: &MultiGraph, e: usize) -> (usize, usize) {
        let (u, v) = g.endpoints(e);
        if self.flips[e] {
            (v, u)
        } else {
            (u, v)
        }
    }

    /// Copy with every non-loop edge of `set` reversed.
    pub fn reversed_on(&self, g: &MultiGraph, set: &EdgeSubset) -> Self {
        let mut flips = self.flips.clone();
        for e in set.iter() {
            if !g.is_loop(e) {
                flips[e] = !flips[e];
            }
        }
        Orientation { flips }
    }

    /// Copy with the non-loop edge `e` reversed.
    pub fn flipped(&self, g: &MultiGraph, e: usize) -> Result<Self> {
        g.check_edge(e)?;
        if g.is_loop(e) {
            return Err(Error::LoopFlip(e));
        }
        let mut flips = self.flips.clone();
        flips[e] = !flips[e];
        Ok(Orientation { flips })
    }

    pub fn restrict(&self, ids: &[usize]) -> Orientation {
        Orientation {
            flips: ids.iter().map(|&e| self.flips[e]).collect(),
        }
    }

    /// `ε(v, e)`: `+1` at the tail, `-1` at the head, `0` elsewhere and on
    /// loops (whose two incidences cancel).
    pub fn incidence(&self, g: &MultiGraph, v: usize, e: usize) -> i64 {
        let (t, h) = self.direction(g, e);
        if t == h {
            0
        } else if v == t {
            1
        } else if v == h {
            -1
        } else {
            0
        }
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two classes merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rank_nullity_examples() {
        let k3 = fixtures::k3();
        assert_eq!(k3.rank_nullity(&k3.all_edges()), (2, 1));
        assert_eq!(k3.rank_nullity(&k3.empty_subset()), (0, 0));
        let lp = fixtures::single_loop();
        assert_eq!(lp.rank_nullity(&lp.all_edges()), (0, 1));
    }

    #[test]
    fn rank_is_monotone_and_submodular() {
        for (_, g) in fixtures::corpus() {
            if g.edge_count() > 6 {
                continue;
            }
            let m = g.edge_count();
            for a in EdgeSubset::all(m) {
                let (r, n) = g.rank_nullity(&a);
                assert_eq!(r + n, a.len());
                for b in EdgeSubset::all(m) {
                    let (ra, rb) = (g.rank_of(a.mask()), g.rank_of(b.mask()));
                    let ru = g.rank_of(a.union(&b).mask());
                    let ri = g.rank_of(a.intersection(&b).mask());
                    assert!(ru + ri <= ra + rb, "submodularity on {}", g.fingerprint());
                    if a.is_subset(&b) {
                        assert!(ra <= rb);
                    }
                }
            }
        }
    }

    #[test]
    fn delete_and_contract_examples() {
        let p3 = fixtures::path3();
        let m = p3.contract(0).unwrap();
        assert_eq!(m.graph.vertex_count(), 2);
        assert_eq!(m.graph.edges(), &[(0, 1)]);

        let digon = fixtures::digon();
        let d = digon.delete(0).unwrap();
        assert_eq!(d.graph.edges(), &[(0, 1)]);
        assert_eq!(d.edge_map, vec![None, Some(0)]);
        let c = digon.contract(0).unwrap();
        assert_eq!(c.graph.vertex_count(), 1);
        assert!(c.graph.is_loop(0));

        let lp = fixtures::single_loop();
        assert_eq!(lp.contract(0).unwrap().graph, MultiGraph::edgeless(1));
        assert!(matches!(lp.delete(3), Err(Error::InvalidEdge { edge: 3, .. })));
    }

    #[test]
    fn delete_contract_commute_on_disjoint_edges() {
        for (_, g) in fixtures::corpus() {
            let m = g.edge_count();
            for a in 0..m {
                for b in 0..m {
                    if a == b {
                        continue;
                    }
                    let one = g.delete(a).unwrap();
                    let one = one.graph.contract(one.edge_map[b].unwrap()).unwrap().graph;
                    let two = g.contract(b).unwrap();
                    let two = two.graph.delete(two.edge_map[a].unwrap()).unwrap().graph;
                    assert_eq!(one, two, "{} edges {a},{b}", g.fingerprint());
                }
            }
        }
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let g: MultiGraph = "# triangle\nv 3\ne 0 1\ne 1 2\n\ne 2 0\n".parse().unwrap();
        assert_eq!(g, fixtures::k3());
        assert_eq!(g.to_text().parse::<MultiGraph>().unwrap(), g);
        let lp: MultiGraph = "v 1\ne 0 0".parse().unwrap();
        assert!(lp.is_loop(0));
        match "v 2\ne 0 5\n".parse::<MultiGraph>() {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match "v 2\nedge 0 1\n".parse::<MultiGraph>() {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "e 0 1".parse::<MultiGraph>(),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn orientation_codes_and_loops() {
        let g = fixtures::triangle_pendant_loop();
        let o = Orientation::from_code(&g, 0b1011);
        assert_eq!(o.code(&g), 0b1011);
        let loop_id = (0..g.edge_count()).find(|&e| g.is_loop(e)).unwrap();
        assert!(matches!(o.flipped(&g, loop_id), Err(Error::LoopFlip(_))));
        let mut flips = vec![false; g.edge_count()];
        flips[loop_id] = true;
        assert!(Orientation::from_flips(&g, flips).is_err());
    }

    #[test]
    fn bridges() {
        let g = fixtures::triangle_pendant_loop();
        let bridges: Vec<usize> = (0..g.edge_count()).filter(|&e| g.is_bridge(e)).collect();
        assert_eq!(bridges, vec![3]);
    }
}
