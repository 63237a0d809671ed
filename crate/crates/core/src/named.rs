//! A few named graphs used in tests and examples.

use crate::graph::Graph;

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("static graph")
}

/// Mycielski construction: a copy `u'` of every vertex `u` adjacent to the
/// neighbors of `u`, plus a hub adjacent to all copies. Preserves
/// triangle-freeness and raises the chromatic number by one.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for (u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    edges.extend((0..n).map(|u| (n + u, 2 * n)));
    Graph::from_edges(2 * n + 1, edges).expect("order checked by caller")
}

/// Mycielskian of C5: 11 vertices, triangle-free, chromatic number 4,
/// maximum degree 5 (the hub).
pub fn grotzsch() -> Graph {
    mycielskian(&Graph::cycle(5).expect("static graph"))
}

/// Chvatal graph: 12 vertices, 4-regular, triangle-free, chromatic number 4.
pub fn chvatal() -> Graph {
    Graph::from_edges(
        12,
        [
            (0, 1),
            (0, 4),
            (0, 6),
            (0, 9),
            (1, 2),
            (1, 5),
            (1, 7),
            (2, 3),
            (2, 6),
            (2, 8),
            (3, 4),
            (3, 7),
            (3, 9),
            (4, 5),
            (4, 8),
            (5, 10),
            (5, 11),
            (6, 10),
            (6, 11),
            (7, 8),
            (7, 11),
            (8, 10),
            (9, 10),
            (9, 11),
        ],
    )
    .expect("static graph")
}

/// Complement of the 7-cycle.
pub fn c7_complement() -> Graph {
    Graph::cycle(7).expect("static graph").complement()
}
