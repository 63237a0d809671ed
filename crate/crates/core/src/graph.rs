//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("the graph has no vertices")]
    Empty,
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

/// An immutable simple graph with bitset adjacency.
///
/// Adjacency is symmetric and irreflexive; every constructor enforces this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `old_to_new[v]` is the new id of `v`, or `None` when `v` was dropped.
    pub old_to_new: Vec<Option<usize>>,
    /// `new_to_old[i]` is the original id of new vertex `i` (ascending).
    pub new_to_old: Vec<usize>,
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n > MAX_ORDER {
        Err(GraphError::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor sets, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = adj.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if let Some(w) = (nb - all).first() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: n,
                });
            }
            if nb.contains(v) {
                return Err(GraphError::Loop(v));
            }
            if let Some(w) = nb.iter().find(|&w| !adj[w].contains(v)) {
                return Err(GraphError::Parameter(format!(
                    "asymmetric adjacency between {v} and {w}"
                )));
            }
        }
        Ok(Graph { adj })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        let all = VertexSet::full(n);
        Ok(Graph {
            adj: (0..n).map(|v| all.without(v)).collect(),
        })
    }

    /// Cycle `C_n`, vertices in cyclic order.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        Graph::cycle_power(n, 1)
    }

    /// The `d`-th power of the cycle `C_n`: `i ~ j` iff their cyclic
    /// distance lies in `1..=d`.
    pub fn cycle_power(n: usize, d: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::Parameter(format!("cycle order {n} < 3")));
        }
        if d == 0 {
            return Err(GraphError::Parameter(
                "cycle power must be at least 1".into(),
            ));
        }
        check_order(n)?;
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            for step in 1..=d.min(n / 2) {
                let j = (i + step) % n;
                g.adj[i].insert(j);
                g.adj[j].insert(i);
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.above(u).iter().map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        self.adj
            .iter()
            .map(|s| s.len())
            .max()
            .ok_or(GraphError::Empty)
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.adj
            .iter()
            .map(|s| s.len())
            .min()
            .ok_or(GraphError::Empty)
    }

    /// Maximum degree, with 0 for the empty graph.
    #[inline]
    pub(crate) fn delta(&self) -> usize {
        self.max_degree().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        match (self.max_degree(), self.min_degree()) {
            (Ok(a), Ok(b)) => a == b,
            _ => true,
        }
    }

    /// True iff every vertex is reachable from vertex 0; vacuous for `n <= 1`.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next - seen;
            seen |= next;
        }
        seen.len() == n
    }

    /// Subgraph induced by `keep`, with an order-preserving relabeling.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<InducedSubgraph, GraphError> {
        let n = self.order();
        if let Some(v) = (keep - self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: n,
            });
        }
        let new_to_old = keep.to_vec();
        let mut old_to_new = vec![None; n];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let adj = new_to_old
            .iter()
            .map(|&v| {
                (self.adj[v] & keep)
                    .iter()
                    .map(|w| old_to_new[w].expect("kept neighbor"))
                    .collect()
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Graph { adj },
            old_to_new,
            new_to_old,
        })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, &nb)| (all - nb).without(v))
                .collect(),
        }
    }

    /// Graph obtained by adding a new vertex `n` adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        let n = self.order();
        check_order(n + 1)?;
        if let Some(v) = (nbrs - self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: n,
            });
        }
        let mut adj = self.adj.clone();
        for v in nbrs {
            adj[v].insert(n);
        }
        adj.push(nbrs);
        Ok(Graph { adj })
    }

    /// Breadth-first distances from `root`; `None` for unreachable vertices.
    pub fn distances_from(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c7_complement() -> Graph {
        Graph::cycle(7).unwrap().complement()
    }

    #[test]
    fn from_edges_basics() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.edge_count(), 0);

        let all: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let k4 = Graph::from_edges(4, all).unwrap();
        assert_eq!(k4, Graph::complete(4).unwrap());
        assert!((0..4).all(|v| k4.degree(v) == 3));

        let dup = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::empty(65), Err(GraphError::OrderTooLarge(65)));
    }

    #[test]
    fn distance_two_and_three_pairs_give_c7_complement() {
        let edges = (0..7).flat_map(|i| [(i, (i + 2) % 7), (i, (i + 3) % 7)]);
        let g = Graph::from_edges(7, edges).unwrap();
        assert_eq!(g, c7_complement());
        assert!(g.is_regular());
        assert_eq!(g.max_degree(), Ok(4));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(4).unwrap().is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)])
            .unwrap()
            .is_connected());
        assert!(Graph::cycle_power(10, 2).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn degrees() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!((k4.max_degree(), k4.min_degree()), (Ok(3), Ok(3)));
        let c = c7_complement();
        assert_eq!((c.max_degree(), c.min_degree()), (Ok(4), Ok(4)));
        let star = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!((star.max_degree(), star.min_degree()), (Ok(4), Ok(1)));
        assert_eq!(
            Graph::empty(0).unwrap().max_degree(),
            Err(GraphError::Empty)
        );
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4).unwrap();
        let sub = k4
            .induced_subgraph([0, 1, 2].into_iter().collect())
            .unwrap();
        assert_eq!(sub.graph, Graph::complete(3).unwrap());

        let c5 = Graph::cycle(5).unwrap();
        let sub = c5
            .induced_subgraph([0, 1, 2].into_iter().collect())
            .unwrap();
        assert_eq!(sub.graph, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());

        let sub = c5
            .induced_subgraph([1, 3, 4].into_iter().collect())
            .unwrap();
        assert_eq!(sub.new_to_old, vec![1, 3, 4]);
        assert_eq!(sub.old_to_new, vec![None, Some(0), None, Some(1), Some(2)]);
        assert_eq!(sub.graph.edges().collect::<Vec<_>>(), vec![(1, 2)]);

        assert!(c5.induced_subgraph(VertexSet::singleton(5)).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            Graph::complete(4).unwrap().complement(),
            Graph::empty(4).unwrap()
        );
        let c = c7_complement();
        assert_eq!(c.order(), 7);
        assert!((0..7).all(|v| c.degree(v) == 4));
        assert_eq!(c.complement(), Graph::cycle(7).unwrap());
    }

    #[test]
    fn cycle_powers() {
        let c5 = Graph::cycle_power(5, 1).unwrap();
        assert_eq!(
            c5.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        );

        // x -> 2x mod 7 carries cyclic distances {1, 2} onto {2, 3}.
        let sq7 = Graph::cycle_power(7, 2).unwrap();
        let c = c7_complement();
        for (u, v) in sq7.edges() {
            assert!(c.has_edge(2 * u % 7, 2 * v % 7));
        }
        assert_eq!(sq7.edge_count(), c.edge_count());

        let sq16 = Graph::cycle_power(16, 2).unwrap();
        assert_eq!(sq16.order(), 16);
        assert_eq!(sq16.edge_count(), 32);
        assert!(sq16.is_regular() && sq16.max_degree() == Ok(4));

        assert!(Graph::cycle_power(2, 1).is_err());
        assert!(Graph::cycle_power(5, 0).is_err());
    }

    #[test]
    fn distances() {
        let c6 = Graph::cycle(6).unwrap();
        let d = c6.distances_from(0);
        assert_eq!(
            d,
            vec![Some(0), Some(1), Some(2), Some(3), Some(2), Some(1)]
        );
    }
}
