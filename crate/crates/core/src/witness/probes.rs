//! Local probes around a single vertex.
//!
//! Each probe colors `G - v` with `Delta - 1` colors and inspects Kempe
//! chains among the neighbors of `v`. A chain that connects two non-adjacent
//! neighbors closes an odd hole through `v`; a chain that fails to connect
//! them means the coloring extends to `v`, which can only happen when the
//! input was not `Delta`-chromatic.

use crate::bitset::VertexSet;
use crate::certificate::Certificate;
use crate::coloring::{find_k_coloring, is_proper_where_colored, Color, Coloring};
use crate::graph::Graph;
use crate::kempe::{kempe_chain, shortest_path_in_chain};

use super::{verified, NeighborhoodSplit, PathQuad, ProbeLog, ProbeOutcome, Step, WitnessError};

fn contract<T>(msg: impl Into<String>) -> Result<T, WitnessError> {
    Err(WitnessError::Contract(msg.into()))
}

/// Given a coloring of `h - x` in which `y` and `z` are the only neighbors
/// of `x` carrying their colors, either `y ~ z` or the shortest
/// `(phi(y), phi(z))`-alternating path from `y` to `z` closes an odd hole
/// through `x`.
///
/// The hole is chordless: a chord between path vertices would shortcut the
/// path inside the chain, and `x` sees no chain vertex other than `y` and
/// `z`. It is odd because the path alternates between two color classes
/// and ends in a different class than it started.
pub fn pair_probe(
    h: &Graph,
    x: usize,
    y: usize,
    z: usize,
    phi: &Coloring,
) -> Result<ProbeOutcome, WitnessError> {
    pair_probe_logged(h, x, y, z, phi, &mut ProbeLog::disabled())
}

pub(crate) fn pair_probe_logged(
    h: &Graph,
    x: usize,
    y: usize,
    z: usize,
    phi: &Coloring,
    log: &mut ProbeLog,
) -> Result<ProbeOutcome, WitnessError> {
    let n = h.order();
    if x >= n || y >= n || z >= n {
        return contract("probe vertex out of range");
    }
    if phi.order() != n || phi.colored() != h.vertices().without(x) {
        return contract(format!("coloring must leave exactly vertex {x} uncolored"));
    }
    if !is_proper_where_colored(h, phi) {
        return contract("coloring is not proper");
    }
    if y == z || !h.has_edge(x, y) || !h.has_edge(x, z) {
        return contract(format!("{y} and {z} must be distinct neighbors of {x}"));
    }
    let (cy, cz) = (phi.get(y).unwrap(), phi.get(z).unwrap());
    if cy == cz {
        return contract(format!("{y} and {z} share color {cy}"));
    }
    let others = h.neighbors(x).without(y).without(z);
    let mask = phi.colors_on(others);
    if mask >> cy & 1 == 1 || mask >> cz & 1 == 1 {
        return contract(format!("colors of {y} and {z} are repeated around {x}"));
    }

    let outcome = if h.has_edge(y, z) {
        ProbeOutcome::Adjacent(y, z)
    } else {
        let chain = kempe_chain(h, phi, y, cy, cz)?;
        log.chain(h, phi, &chain);
        if !chain.members.contains(z) {
            ProbeOutcome::Inconsistent(format!(
                "swapping the ({cy},{cz}) chain at {y} frees color {cy} at {x}: \
                 the coloring extends"
            ))
        } else {
            let mut cycle = shortest_path_in_chain(h, &chain, y, VertexSet::singleton(z))
                .expect("z is in the chain");
            cycle.push(x);
            ProbeOutcome::Hole(verified(h, Certificate::HighOddHole { cycle })?)
        }
    };
    log.outcome(h, &outcome);
    Ok(outcome)
}

/// For a vertex of degree `Delta - 1` in a vertex-critical `h` with
/// `chi(h) = Delta(h)`: either its closed neighborhood is a `K_Delta` or a
/// probe between two non-adjacent neighbors yields a high odd hole.
pub fn degree_deficient_probe(h: &Graph, v: usize) -> Result<Certificate, WitnessError> {
    degree_deficient_probe_logged(h, v, &mut ProbeLog::disabled())
}

pub(crate) fn degree_deficient_probe_logged(
    h: &Graph,
    v: usize,
    log: &mut ProbeLog,
) -> Result<Certificate, WitnessError> {
    if v >= h.order() {
        return contract(format!("vertex {v} out of range"));
    }
    let delta = h.delta();
    if delta < 2 || h.degree(v) + 1 != delta {
        return contract(format!(
            "vertex {v} has degree {}, expected Delta - 1 = {}",
            h.degree(v),
            delta.saturating_sub(1)
        ));
    }
    let phi = find_k_coloring(h, delta - 1, h.vertices().without(v))
        .ok_or_else(|| WitnessError::Contract(format!("h - {v} is not {}-colorable", delta - 1)))?;
    let nbrs = h.neighbors(v).to_vec();
    if phi.colors_on(h.neighbors(v)).count_ones() as usize != nbrs.len() {
        return Err(WitnessError::Inconsistent(format!(
            "a color is missing around {v}: the coloring extends"
        )));
    }
    for (i, &y) in nbrs.iter().enumerate() {
        for &z in &nbrs[i + 1..] {
            match pair_probe_logged(h, v, y, z, &phi, log)? {
                ProbeOutcome::Adjacent(..) => {}
                ProbeOutcome::Hole(c) | ProbeOutcome::CliqueFound(c) => return Ok(c),
                ProbeOutcome::Inconsistent(r) => return Err(WitnessError::Inconsistent(r)),
            }
        }
    }
    let vertices = h.neighbors(v).with(v).to_vec();
    verified(h, Certificate::Clique { vertices })
}

/// Splits `N(v)` of a `Delta`-regular, `Delta`-chromatic graph into the
/// repeated color pair `A` and the rest `B`, proving along the way that `B`
/// is a clique and that each vertex of `B` sees `A`.
///
/// Pairs in `B` are probed in lexicographic order, then each `b` in `B` in
/// ascending color order follows its chain towards `A`: a single edge is
/// what we want, a longer path closes an odd hole through `v`.
pub fn neighborhood_split(g: &Graph, v: usize) -> Result<Step<NeighborhoodSplit>, WitnessError> {
    neighborhood_split_logged(g, v, &mut ProbeLog::disabled())
}

pub(crate) fn neighborhood_split_logged(
    g: &Graph,
    v: usize,
    log: &mut ProbeLog,
) -> Result<Step<NeighborhoodSplit>, WitnessError> {
    if v >= g.order() {
        return contract(format!("vertex {v} out of range"));
    }
    let delta = g.delta();
    if delta < 4 || !g.is_regular() {
        return contract(format!(
            "graph must be Delta-regular with Delta >= 4, got Delta = {delta}"
        ));
    }
    let phi = find_k_coloring(g, delta - 1, g.vertices().without(v)).ok_or_else(|| {
        WitnessError::Contract(format!(
            "g - {v} is not {}-colorable, so g is not vertex-critical",
            delta - 1
        ))
    })?;
    let nbrs = g.neighbors(v);
    let mut repeated: Option<Color> = None;
    for c in 1..delta as Color {
        match (phi.class(c) & nbrs).len() {
            0 => {
                return Err(WitnessError::Inconsistent(format!(
                    "color {c} is missing around {v}: the coloring extends"
                )))
            }
            1 => {}
            _ => repeated = Some(c),
        }
    }
    let ca = repeated.expect("Delta neighbors on Delta - 1 colors");
    let a_set = phi.class(ca) & nbrs;
    let a = [a_set.to_vec()[0], a_set.to_vec()[1]];
    let b = nbrs - a_set;

    let bs = b.to_vec();
    for (i, &y) in bs.iter().enumerate() {
        for &z in &bs[i + 1..] {
            match pair_probe_logged(g, v, y, z, &phi, log)? {
                ProbeOutcome::Adjacent(..) => {}
                ProbeOutcome::Hole(c) | ProbeOutcome::CliqueFound(c) => {
                    return Ok(Step::Witness(c))
                }
                ProbeOutcome::Inconsistent(r) => return Err(WitnessError::Inconsistent(r)),
            }
        }
    }

    let mut by_color = bs.clone();
    by_color.sort_by_key(|&u| phi.get(u));
    for u in by_color {
        let cu = phi.get(u).unwrap();
        let chain = kempe_chain(g, &phi, u, ca, cu)?;
        log.chain(g, &phi, &chain);
        let outcome = match shortest_path_in_chain(g, &chain, u, a_set) {
            None => ProbeOutcome::Inconsistent(format!(
                "the ({ca},{cu}) chain at {u} avoids both repeated neighbors of {v}: \
                 the coloring extends"
            )),
            Some(path) if path.len() == 2 => ProbeOutcome::Adjacent(u, path[1]),
            Some(mut cycle) => {
                cycle.push(v);
                ProbeOutcome::Hole(verified(g, Certificate::HighOddHole { cycle })?)
            }
        };
        log.outcome(g, &outcome);
        match outcome {
            ProbeOutcome::Adjacent(..) => {}
            ProbeOutcome::Hole(c) | ProbeOutcome::CliqueFound(c) => return Ok(Step::Witness(c)),
            ProbeOutcome::Inconsistent(r) => return Err(WitnessError::Inconsistent(r)),
        }
    }

    Ok(Step::Done(NeighborhoodSplit { center: v, a, b }))
}

/// `|N(a) ∩ B|` for `a` in `A`. A full count exhibits the clique
/// `B ∪ {a, v}`; anything other than `Delta - 2` or `Delta - 3` is
/// inconsistent.
pub fn split_count_check(
    g: &Graph,
    split: &NeighborhoodSplit,
    a: usize,
) -> Result<Step<usize>, WitnessError> {
    split.validate(g)?;
    if !split.a.contains(&a) {
        return contract(format!("{a} is not in A of the split at {}", split.center));
    }
    let delta = g.delta();
    let count = (g.neighbors(a) & split.b).len();
    if count + 2 == delta {
        let vertices = split.b.with(a).with(split.center).to_vec();
        Ok(Step::Witness(verified(
            g,
            Certificate::Clique { vertices },
        )?))
    } else if count + 3 == delta {
        Ok(Step::Done(count))
    } else {
        Err(WitnessError::Inconsistent(format!(
            "{a} has {count} neighbors in B at {}, expected {} or {}",
            split.center,
            delta - 3,
            delta - 2
        )))
    }
}

/// The unique `B`-vertex missed by each `A`-vertex, assembled into the
/// induced path `a1 - b1 - b2 - a2`.
pub fn path_quad(g: &Graph, split: &NeighborhoodSplit) -> Result<PathQuad, WitnessError> {
    split.validate(g)?;
    let [a1, a2] = split.a;
    let missed = |a: usize| {
        let m = split.b - g.neighbors(a);
        if m.len() == 1 {
            Ok(m.first().unwrap())
        } else {
            Err(WitnessError::Inconsistent(format!(
                "{a} misses {} vertices of B at {}, expected exactly one",
                m.len(),
                split.center
            )))
        }
    };
    let b2 = missed(a1)?;
    let b1 = missed(a2)?;
    if b1 == b2 {
        return Err(WitnessError::Inconsistent(format!(
            "both A-vertices at {} miss the same vertex {b1}",
            split.center
        )));
    }
    let quad = PathQuad { a1, b1, b2, a2 };
    let p = quad.as_path();
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(p[i], p[j]) != (j == i + 1) {
                return Err(WitnessError::Inconsistent(format!(
                    "{:?} does not induce a path at {}",
                    p, split.center
                )));
            }
        }
    }
    Ok(quad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::named;

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn pair_probe_on_complete_graph() {
        let k4 = Graph::complete(4).unwrap();
        let phi = Coloring::from_colors(3, vec![1, 2, 3, 0]).unwrap();
        assert_eq!(
            pair_probe(&k4, 3, 0, 1, &phi),
            Ok(ProbeOutcome::Adjacent(0, 1))
        );
    }

    #[test]
    fn pair_probe_on_five_cycle() {
        let c5 = Graph::cycle(5).unwrap();
        let phi = Coloring::from_colors(2, vec![0, 1, 2, 1, 2]).unwrap();
        let out = pair_probe(&c5, 0, 1, 4, &phi).unwrap();
        assert_eq!(
            out,
            ProbeOutcome::Hole(Certificate::HighOddHole {
                cycle: vec![1, 2, 3, 4, 0]
            })
        );

        // 1,2,1,3 on the path: probing colors (1, 3) the chain at 1 is {1}.
        let phi = Coloring::from_colors(3, vec![0, 1, 2, 1, 3]).unwrap();
        assert!(matches!(
            pair_probe(&c5, 0, 1, 4, &phi),
            Ok(ProbeOutcome::Inconsistent(_))
        ));
    }

    #[test]
    fn pair_probe_contract_errors() {
        let c5 = Graph::cycle(5).unwrap();
        let two_gaps = Coloring::from_colors(2, vec![0, 1, 0, 1, 2]).unwrap();
        assert!(matches!(
            pair_probe(&c5, 0, 1, 4, &two_gaps),
            Err(WitnessError::Contract(_))
        ));
        let same = Coloring::from_colors(2, vec![0, 1, 2, 2, 1]).unwrap();
        assert!(matches!(
            pair_probe(&c5, 0, 1, 4, &same),
            Err(WitnessError::Contract(_))
        ));
        let ok = Coloring::from_colors(2, vec![0, 1, 2, 1, 2]).unwrap();
        assert!(matches!(
            pair_probe(&c5, 0, 1, 2, &ok),
            Err(WitnessError::Contract(_))
        ));
    }

    #[test]
    fn deficient_vertex_on_complete_graph_is_rejected() {
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(
            degree_deficient_probe(&k4, 0),
            Err(WitnessError::Contract(_))
        ));
    }

    #[test]
    fn deficient_vertex_in_squared_eight_cycle_minus_vertex() {
        let g = Graph::cycle_power(8, 2).unwrap();
        let sub = g.induced_subgraph(g.vertices().without(0)).unwrap();
        let h = sub.graph;
        assert_eq!(h.max_degree(), Ok(4));
        // position 1 is the new vertex 0
        assert_eq!(h.degree(0), 3);
        let cert = degree_deficient_probe(&h, 0).unwrap();
        assert!(matches!(&cert, Certificate::HighOddHole { cycle } if cycle.len() == 5));
        assert!(verify_certificate(&h, &cert).is_accept());
    }

    #[test]
    fn deficient_vertex_with_clique_neighborhood() {
        // K4 with a pendant at 0: Delta = 4 and vertex 1 has degree 3.
        let mut edges: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        edges.push((0, 4));
        let g = Graph::from_edges(5, edges).unwrap();
        assert_eq!(
            degree_deficient_probe(&g, 1),
            Ok(Certificate::Clique {
                vertices: vec![0, 1, 2, 3]
            })
        );
        assert!(matches!(
            degree_deficient_probe(&g, 4),
            Err(WitnessError::Contract(_))
        ));
    }

    #[test]
    fn split_of_squared_seven_cycle() {
        let g = Graph::cycle_power(7, 2).unwrap();
        let s = match neighborhood_split(&g, 0).unwrap() {
            Step::Done(s) => s,
            Step::Witness(c) => panic!("unexpected certificate {c:?}"),
        };
        assert_eq!(s.a, [2, 5]);
        assert_eq!(s.b, set(&[1, 6]));
        s.validate(&g).unwrap();
        assert_eq!(split_count_check(&g, &s, 2), Ok(Step::Done(1)));
        assert_eq!(
            path_quad(&g, &s),
            Ok(PathQuad {
                a1: 2,
                b1: 1,
                b2: 6,
                a2: 5
            })
        );
    }

    #[test]
    fn squared_eight_cycle_is_not_critical_so_split_is_refused() {
        let g = Graph::cycle_power(8, 2).unwrap();
        assert!(matches!(
            neighborhood_split(&g, 0),
            Err(WitnessError::Contract(_))
        ));
    }

    #[test]
    fn hand_built_split_of_squared_eight_cycle() {
        let g = Graph::cycle_power(8, 2).unwrap();
        // Of the non-adjacent pairs {1,6}, {2,6}, {2,7} in N(0), only
        // A = {2, 6} leaves a clique B satisfying every split condition.
        assert!(NeighborhoodSplit::checked(&g, 0, [1, 6], set(&[2, 7])).is_err());
        assert!(NeighborhoodSplit::checked(&g, 0, [2, 7], set(&[1, 6])).is_err());
        let s = NeighborhoodSplit::checked(&g, 0, [2, 6], set(&[1, 7])).unwrap();
        assert_eq!(split_count_check(&g, &s, 2), Ok(Step::Done(1)));
        assert_eq!(split_count_check(&g, &s, 6), Ok(Step::Done(1)));
        assert_eq!(
            path_quad(&g, &s),
            Ok(PathQuad {
                a1: 2,
                b1: 1,
                b2: 7,
                a2: 6
            })
        );
        assert!(matches!(
            split_count_check(&g, &s, 1),
            Err(WitnessError::Contract(_))
        ));
    }

    #[test]
    fn split_of_squared_sixteen_cycle() {
        let g = Graph::cycle_power(16, 2).unwrap();
        let s = match neighborhood_split(&g, 0).unwrap() {
            Step::Done(s) => s,
            Step::Witness(c) => panic!("unexpected certificate {c:?}"),
        };
        assert_eq!(s.a, [2, 14]);
        assert_eq!(s.b, set(&[1, 15]));
        assert_eq!(
            path_quad(&g, &s),
            Ok(PathQuad {
                a1: 2,
                b1: 1,
                b2: 15,
                a2: 14
            })
        );
    }

    #[test]
    fn full_count_yields_clique() {
        // Center 0 with neighbors {1,2,3,4}; B = {1,2} clique, A = {3,4}.
        // Vertex 3 is adjacent to all of B, so B + {3, 0} is a K4.
        let g = Graph::from_edges(
            5,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 4),
            ],
        )
        .unwrap();
        let s = NeighborhoodSplit::checked(&g, 0, [3, 4], set(&[1, 2])).unwrap();
        let step = split_count_check(&g, &s, 3).unwrap();
        let expected = Certificate::Clique {
            vertices: vec![0, 1, 2, 3],
        };
        assert_eq!(step, Step::Witness(expected.clone()));
        assert!(verify_certificate(&g, &expected).is_accept());
    }

    #[test]
    fn chvatal_graph_split_finds_hole() {
        let g = named::chvatal();
        let mut found = false;
        for v in 0..g.order() {
            if let Step::Witness(c) = neighborhood_split(&g, v).unwrap() {
                assert!(verify_certificate(&g, &c).is_accept());
                found = true;
                break;
            }
        }
        assert!(found);
    }
}
