use crate::graph::{MultiGraph, Orientation, SpanningForest};

/// Forest data plus the signed fundamental circuit of every co-forest edge
/// and the signed fundamental cut of every forest edge.
pub(crate) struct Bases {
    pub forest: SpanningForest,
    /// `(e, c)`: `c` is the circuit vector of co-forest edge `e`, with
    /// `c[e] = 1`.
    pub circuits: Vec<(usize, Vec<i64>)>,
    /// `(t, d)`: `d` is the cut vector of forest edge `t`, with `d[t] = 1`.
    pub cuts: Vec<(usize, Vec<i64>)>,
}

fn parent_vertex(g: &MultiGraph, forest: &SpanningForest, v: usize) -> Option<usize> {
    forest.parent_edge[v].map(|e| {
        let (a, b) = g.endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    })
}

pub(crate) fn bases(g: &MultiGraph, o: &Orientation) -> Bases {
    let forest = g.spanning_forest();
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut depth = vec![0usize; n];
    for &v in &forest.order {
        if let Some(u) = parent_vertex(g, &forest, v) {
            depth[v] = depth[u] + 1;
        }
    }

    let mut circuits = Vec::new();
    for e in 0..m {
        if forest.tree.contains(e) {
            continue;
        }
        let mut c = vec![0i64; m];
        c[e] = 1;
        let (t, h) = o.direction(g, e);
        // Walk the forest path from h back to t, climbing from both ends.
        let (mut a, mut b) = (h, t);
        let mut tail_side = Vec::new();
        while a != b {
            if depth[a] >= depth[b] {
                let pe = forest.parent_edge[a].expect("non-root has a parent edge");
                let up = parent_vertex(g, &forest, a).unwrap();
                c[pe] += if o.direction(g, pe) == (a, up) { 1 } else { -1 };
                a = up;
            } else {
                let pe = forest.parent_edge[b].expect("non-root has a parent edge");
                let up = parent_vertex(g, &forest, b).unwrap();
                tail_side.push((pe, up, b));
                b = up;
            }
        }
        // The segment climbed from t is traversed downwards.
        for (pe, from, to) in tail_side {
            c[pe] += if o.direction(g, pe) == (from, to) { 1 } else { -1 };
        }
        circuits.push((e, c));
    }

    let mut cuts = Vec::new();
    for t in forest.tree.iter() {
        let (a, b) = g.endpoints(t);
        let child = if forest.parent_edge[a] == Some(t) { a } else { b };
        let below: Vec<bool> = (0..n)
            .map(|mut v| loop {
                if v == child {
                    break true;
                }
                match parent_vertex(g, &forest, v) {
                    Some(u) => v = u,
                    None => break false,
                }
            })
            .collect();
        let (tail, _) = o.direction(g, t);
        let tail_below = below[tail];
        let d = (0..m)
            .map(|e| {
                let (x, y) = o.direction(g, e);
                match (below[x] == tail_below, below[y] == tail_below) {
                    (true, false) => 1,
                    (false, true) => -1,
                    _ => 0,
                }
            })
            .collect();
        cuts.push((t, d));
    }
    Bases { forest, circuits, cuts }
}
