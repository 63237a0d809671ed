//! Brute-force witness search.
//!
//! Nothing here depends on the structure of a coloring argument: cliques and
//! holes are found by exhaustive backtracking. This is the ground truth the
//! proof-driven search in [`crate::witness`] is checked against.

use crate::bitset::VertexSet;
use crate::certificate::Certificate;
use crate::graph::Graph;

fn extend_clique(g: &Graph, k: usize, chosen: &mut Vec<usize>, cand: VertexSet) -> bool {
    if chosen.len() == k {
        return true;
    }
    if chosen.len() + cand.len() < k {
        return false;
    }
    for v in cand {
        chosen.push(v);
        if extend_clique(g, k, chosen, g.neighbors(v) & cand.above(v)) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// The lexicographically least `k`-clique, if any.
pub fn find_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut chosen = Vec::with_capacity(k);
    extend_clique(g, k, &mut chosen, g.vertices()).then_some(chosen)
}

struct HoleSearch<'a> {
    g: &'a Graph,
    allowed: VertexSet,
    anchor: usize,
    path: Vec<usize>,
}

impl HoleSearch<'_> {
    /// `blocked` holds every vertex adjacent to a path vertex other than the
    /// anchor and the last one; such vertices would create a chord.
    fn extend(&mut self, blocked: VertexSet, on_path: VertexSet) -> Option<Vec<usize>> {
        let last = *self.path.last().unwrap();
        let second = self.path[1];
        let cand = (self.g.neighbors(last) & self.allowed) - blocked - on_path;
        for w in cand {
            if self.g.has_edge(w, self.anchor) {
                // Closing here; w cannot extend further without a chord.
                let len = self.path.len() + 1;
                if len >= 5 && len % 2 == 1 && second < w {
                    let mut cycle = self.path.clone();
                    cycle.push(w);
                    return Some(cycle);
                }
                continue;
            }
            self.path.push(w);
            let found = self.extend(blocked | self.g.neighbors(last), on_path.with(w));
            self.path.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// A chordless odd cycle of length at least 5 through vertices of degree at
/// least `Delta(g) - 1`, or `None`.
///
/// Cycles are enumerated with their least vertex as anchor and the second
/// vertex smaller than the last, so each cycle is visited once.
pub fn find_high_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let floor = g.delta().saturating_sub(1);
    let high: VertexSet = (0..g.order()).filter(|&v| g.degree(v) >= floor).collect();
    for anchor in high {
        let allowed = high.above(anchor);
        for second in g.neighbors(anchor) & allowed {
            let mut s = HoleSearch {
                g,
                allowed,
                anchor,
                path: vec![anchor, second],
            };
            // The anchor's other neighbors may only appear as the closing vertex.
            let on_path = VertexSet::singleton(anchor).with(second);
            if let Some(c) = s.extend(VertexSet::EMPTY, on_path) {
                return Some(c);
            }
        }
    }
    None
}

/// If `g` is the complement of a 7-cycle, the position of each vertex along
/// that cycle.
pub fn is_c7_complement(g: &Graph) -> Option<Vec<usize>> {
    if g.order() != 7 || !(0..7).all(|v| g.degree(v) == 4) {
        return None;
    }
    let comp = g.complement();
    let mut position = vec![usize::MAX; 7];
    let (mut prev, mut cur) = (usize::MAX, 0);
    for p in 0..7 {
        if position[cur] != usize::MAX {
            return None;
        }
        position[cur] = p;
        let next = comp.neighbors(cur).iter().find(|&w| w != prev)?;
        prev = cur;
        cur = next;
    }
    (cur == 0).then_some(position)
}

/// Brute-force certificate: a `Delta`-clique, else a high odd hole, else the
/// complement of C7.
pub fn oracle_witness(g: &Graph) -> Option<Certificate> {
    let delta = g.delta();
    if delta >= 1 {
        if let Some(vertices) = find_clique(g, delta) {
            return Some(Certificate::Clique { vertices });
        }
    }
    if let Some(cycle) = find_high_odd_hole(g) {
        return Some(Certificate::HighOddHole { cycle });
    }
    is_c7_complement(g).map(|position_map| Certificate::C7Complement { position_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::named;

    fn c7_complement() -> Graph {
        Graph::cycle(7).unwrap().complement()
    }

    #[test]
    fn cliques() {
        assert_eq!(
            find_clique(&Graph::complete(4).unwrap(), 4),
            Some(vec![0, 1, 2, 3])
        );
        assert_eq!(find_clique(&c7_complement(), 4), None);
        let sq10 = Graph::cycle_power(10, 2).unwrap();
        assert_eq!(find_clique(&sq10, 4), None);
        assert_eq!(find_clique(&sq10, 3), Some(vec![0, 1, 2]));
        assert_eq!(find_clique(&Graph::cycle(5).unwrap(), 3), None);
    }

    #[test]
    fn holes() {
        let c5 = Graph::cycle(5).unwrap();
        let h = find_high_odd_hole(&c5).unwrap();
        assert_eq!(h.len(), 5);
        assert!(verify_certificate(&c5, &Certificate::HighOddHole { cycle: h }).is_accept());

        assert_eq!(find_high_odd_hole(&c7_complement()), None);
        assert_eq!(find_high_odd_hole(&Graph::cycle(6).unwrap()), None);
        assert_eq!(find_high_odd_hole(&Graph::complete(6).unwrap()), None);

        let sq10 = Graph::cycle_power(10, 2).unwrap();
        let h = find_high_odd_hole(&sq10).unwrap();
        assert_eq!(h.len(), 5);
        let evens = Certificate::HighOddHole {
            cycle: vec![0, 2, 4, 6, 8],
        };
        assert!(verify_certificate(&sq10, &evens).is_accept());
        assert!(verify_certificate(&sq10, &Certificate::HighOddHole { cycle: h }).is_accept());
    }

    #[test]
    fn degree_floor_filters_low_vertices() {
        // C5 whose vertex 0 also carries a K4; Delta = 5, but C5's other
        // vertices have degree 2.
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for (u, v) in [(5, 6), (5, 7), (6, 7)] {
            edges.push((u, v));
        }
        edges.extend([(0, 5), (0, 6), (0, 7)]);
        let g = Graph::from_edges(8, edges).unwrap();
        assert_eq!(g.max_degree(), Ok(5));
        assert_eq!(find_high_odd_hole(&g), None);
    }

    #[test]
    fn c7_recognition() {
        let pos = is_c7_complement(&c7_complement()).unwrap();
        let cert = Certificate::C7Complement { position_map: pos };
        assert!(verify_certificate(&c7_complement(), &cert).is_accept());

        assert_eq!(is_c7_complement(&Graph::complete(7).unwrap()), None);

        let sq7 = Graph::cycle_power(7, 2).unwrap();
        let pos = is_c7_complement(&sq7).unwrap();
        // complement of the squared 7-cycle is the distance-3 cycle 0,3,6,2,5,1,4
        let walk = [0, 3, 6, 2, 5, 1, 4];
        let comp = sq7.complement();
        for i in 0..7 {
            assert!(comp.has_edge(walk[i], walk[(i + 1) % 7]));
        }
        let cert = Certificate::C7Complement { position_map: pos };
        assert!(verify_certificate(&sq7, &cert).is_accept());

        // 4-regular on 7 vertices whose complement is C3 + C4, not C7.
        let mut comp_edges = vec![(0, 1), (1, 2), (2, 0)];
        comp_edges.extend([(3, 4), (4, 5), (5, 6), (6, 3)]);
        let split = Graph::from_edges(7, comp_edges).unwrap().complement();
        assert!(split.is_regular());
        assert_eq!(is_c7_complement(&split), None);
    }

    #[test]
    fn oracle_examples() {
        let g = c7_complement();
        assert!(matches!(
            oracle_witness(&g),
            Some(Certificate::C7Complement { .. })
        ));

        let p = named::petersen();
        let cert = oracle_witness(&p).unwrap();
        assert!(matches!(&cert, Certificate::HighOddHole { cycle } if cycle.len() == 5));
        assert!(verify_certificate(&p, &cert).is_accept());

        let k5 = Graph::complete(5).unwrap();
        let cert = oracle_witness(&k5).unwrap();
        assert_eq!(
            cert,
            Certificate::Clique {
                vertices: vec![0, 1, 2, 3]
            }
        );
        assert!(verify_certificate(&k5, &cert).is_accept());

        assert_eq!(oracle_witness(&Graph::empty(1).unwrap()), None);
    }

    #[test]
    fn subgraph_holes_transfer_to_host() {
        // A high odd hole in an induced subgraph with the same Delta stays
        // valid in the host.
        let g = Graph::cycle_power(13, 2).unwrap();
        let keep: VertexSet = (0..12).collect();
        let sub = g.induced_subgraph(keep).unwrap();
        assert_eq!(sub.graph.max_degree(), g.max_degree());
        let hole = find_high_odd_hole(&sub.graph).unwrap();
        let mapped: Vec<_> = hole.iter().map(|&v| sub.new_to_old[v]).collect();
        assert!(verify_certificate(&g, &Certificate::HighOddHole { cycle: mapped }).is_accept());
    }
}
