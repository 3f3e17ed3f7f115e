//! The small graphs used throughout the tests, examples, and `verify`.
//!
//! Each fixture is shipped as a text file under `fixtures/` and embedded at
//! compile time.

use crate::graph::MultiGraph;

macro_rules! fixture {
    ($(#[$doc:meta])* $fn_name:ident, $file:literal) => {
        $(#[$doc])*
        pub fn $fn_name() -> MultiGraph {
            include_str!(concat!("../fixtures/", $file))
                .parse()
                .expect(concat!("fixture ", $file, " parses"))
        }
    };
}

fixture!(/// Two vertices, no edges.
    e2, "e2.graph");
fixture!(/// One edge `0 -> 1`.
    edge, "edge.graph");
fixture!(/// One vertex with a loop.
    single_loop, "loop.graph");
fixture!(/// Path `0 - 1 - 2`.
    path3, "p3.graph");
fixture!(/// Two parallel edges `0 -> 1`.
    digon, "digon.graph");
fixture!(/// Triangle; its default orientation is a directed circuit.
    k3, "k3.graph");
fixture!(k4_minus_edge, "k4_minus_edge.graph");
fixture!(k4, "k4.graph");
fixture!(/// Three parallel edges between two vertices.
    theta, "theta.graph");
fixture!(/// Triangle `0 1 2`, pendant bridge `2 - 3`, loop at `3`.
    triangle_pendant_loop, "triangle_pendant_loop.graph");

/// Every fixture with its file stem, in a fixed order.
pub fn corpus() -> Vec<(&'static str, MultiGraph)> {
    vec![
        ("e2", e2()),
        ("edge", edge()),
        ("loop", single_loop()),
        ("p3", path3()),
        ("digon", digon()),
        ("k3", k3()),
        ("k4_minus_edge", k4_minus_edge()),
        ("k4", k4()),
        ("theta", theta()),
        ("triangle_pendant_loop", triangle_pendant_loop()),
    ]
}

/// Looks a fixture up by file stem.
pub fn by_name(name: &str) -> Option<MultiGraph> {
    corpus().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}

#[cfg(test)]
mod tests {
    #[test]
    fn corpus_shapes() {
        let shapes: Vec<(usize, usize)> = super::corpus()
            .iter()
            .map(|(_, g)| (g.vertex_count(), g.edge_count()))
            .collect();
        assert_eq!(
            shapes,
            vec![
                (2, 0),
                (2, 1),
                (1, 1),
                (3, 2),
                (2, 2),
                (3, 3),
                (4, 5),
                (4, 6),
                (2, 3),
                (4, 5)
            ]
        );
    }
}
