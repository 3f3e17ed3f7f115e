use std::collections::VecDeque;

use super::{EdgeSubset, MultiGraph, Orientation};
use crate::error::Result;
use crate::limits::Limits;

fn out_adjacency(g: &MultiGraph, o: &Orientation) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for e in 0..g.edge_count() {
        let (t, h) = o.direction(g, e);
        if t != h {
            adj[t].push((h, e));
        }
    }
    adj
}

fn reachable_from(adj: &[Vec<(usize, usize)>], start: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &(w, _) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// True iff `e` lies on a directed circuit of `(g, o)`.
pub fn is_edge_cyclic(g: &MultiGraph, o: &Orientation, e: usize) -> Result<bool> {
    g.check_edge(e)?;
    let (t, h) = o.direction(g, e);
    if t == h {
        return Ok(true);
    }
    Ok(reachable_from(&out_adjacency(g, o), h)[t])
}

/// All edges lying on some directed circuit.
pub fn cyclic_edges(g: &MultiGraph, o: &Orientation) -> EdgeSubset {
    let adj = out_adjacency(g, o);
    let reach: Vec<Vec<bool>> = (0..g.vertex_count()).map(|v| reachable_from(&adj, v)).collect();
    EdgeSubset::from_edges(
        g.edge_count(),
        (0..g.edge_count()).filter(|&e| {
            let (t, h) = o.direction(g, e);
            reach[h][t]
        }),
    )
}

pub fn is_acyclic(g: &MultiGraph, o: &Orientation) -> bool {
    cyclic_edges(g, o).is_empty()
}

pub fn is_totally_cyclic(g: &MultiGraph, o: &Orientation) -> bool {
    cyclic_edges(g, o).len() == g.edge_count()
}

/// Edge sets of all directed circuits, sorted by mask. Loops are circuits
/// of length one and antiparallel edge pairs are circuits of length two.
pub fn enumerate_directed_circuits(g: &MultiGraph, o: &Orientation, limits: &Limits) -> Result<Vec<EdgeSubset>> {
    limits.check_edges("directed circuit enumeration", g.edge_count())?;
    let adj = out_adjacency(g, o);
    let m = g.edge_count();
    let mut out = Vec::new();
    for e in 0..m {
        if g.is_loop(e) {
            out.push(EdgeSubset::from_edges(m, [e]));
        }
    }
    // Each simple cycle is found once, from its smallest vertex.
    let n = g.vertex_count();
    for s in 0..n {
        let mut on_path = vec![false; n];
        on_path[s] = true;
        let mut stack: Vec<(usize, usize, u64)> = vec![(s, 0, 0)];
        while let Some(&mut (u, ref mut next, mask)) = stack.last_mut() {
            if *next == adj[u].len() {
                on_path[u] = u == s;
                stack.pop();
                continue;
            }
            let (w, e) = adj[u][*next];
            *next += 1;
            if w == s {
                out.push(EdgeSubset::from_mask(m, mask | 1 << e));
            } else if w > s && !on_path[w] {
                on_path[w] = true;
                stack.push((w, 0, mask | 1 << e));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Edge sets of all bonds `[S, S^c]` whose arrows all run from `S` to
/// `S^c`, sorted by mask.
pub fn enumerate_directed_bonds(g: &MultiGraph, o: &Orientation, limits: &Limits) -> Result<Vec<EdgeSubset>> {
    limits.check_edges("directed bond enumeration", g.edge_count())?;
    let forest = g.spanning_forest();
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut out = Vec::new();
    for c in 0..forest.roots.len() {
        let verts: Vec<usize> = (0..n).filter(|&v| forest.component[v] == c).collect();
        let k = verts.len();
        if k < 2 {
            continue;
        }
        let mut side = vec![false; n];
        for code in 1..(1u64 << k) - 1 {
            for (i, &v) in verts.iter().enumerate() {
                side[v] = code >> i & 1 == 1;
            }
            let mut cut = 0u64;
            let mut forward = true;
            for e in 0..m {
                let (t, h) = o.direction(g, e);
                if forest.component[t] != c || side[t] == side[h] {
                    continue;
                }
                cut |= 1 << e;
                forward &= side[t];
            }
            if forward && sides_connected(g, &verts, &side) {
                out.push(EdgeSubset::from_mask(m, cut));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Both sides of the bipartition of `verts` induce connected subgraphs.
fn sides_connected(g: &MultiGraph, verts: &[usize], side: &[bool]) -> bool {
    let mut dsu = super::Dsu::new(g.vertex_count());
    for &(u, v) in g.edges() {
        if side[u] == side[v] {
            dsu.union(u, v);
        }
    }
    let mut reps = [None, None];
    for &v in verts {
        let r = dsu.find(v);
        let slot = &mut reps[side[v] as usize];
        match slot {
            None => *slot = Some(r),
            Some(x) if *x != r => return false,
            _ => {}
        }
    }
    true
}

/// `[o1, o2](e)` on `support`: `+1` where the two orientations agree, `-1`
/// where they differ, `0` off the support.
pub fn coupling(o1: &Orientation, o2: &Orientation, support: &EdgeSubset) -> Vec<i8> {
    (0..o1.len())
        .map(|e| {
            if !support.contains(e) {
                0
            } else if o1.is_flipped(e) == o2.is_flipped(e) {
                1
            } else {
                -1
            }
        })
        .collect()
}
