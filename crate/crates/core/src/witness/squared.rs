//! The `Delta = 4` endgame: recognizing a squared cycle and reading a hole
//! off its cyclic order.

use crate::bitset::VertexSet;
use crate::coloring::{Color, Coloring};
use crate::graph::Graph;

use super::probes::{neighborhood_split_logged, path_quad, split_count_check};
use super::{PathQuad, ProbeLog, Step, WitnessError};

/// A cyclic order of the vertices under which `g` is `C_n^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquaredCycleLabeling {
    pub n: usize,
    /// `position[v]` is the place of vertex `v` on the cycle.
    pub position: Vec<usize>,
    vertices: Vec<usize>,
}

impl SquaredCycleLabeling {
    pub fn from_positions(position: Vec<usize>) -> Option<Self> {
        let n = position.len();
        let mut vertices = vec![usize::MAX; n];
        for (v, &p) in position.iter().enumerate() {
            if p >= n || vertices[p] != usize::MAX {
                return None;
            }
            vertices[p] = v;
        }
        Some(SquaredCycleLabeling {
            n,
            position,
            vertices,
        })
    }

    /// The vertex at cycle position `p` (taken mod `n`).
    pub fn vertex_at(&self, p: usize) -> usize {
        self.vertices[p % self.n]
    }

    /// Whether adjacency in `g` is exactly cyclic distance 1 or 2.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if g.order() != self.n {
            return false;
        }
        let n = self.n;
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                let d = self.position[u].abs_diff(self.position[v]);
                let d = d.min(n - d);
                g.has_edge(u, v) == (d <= 2)
            })
        })
    }
}

fn quad_at(g: &Graph, v: usize, log: &mut ProbeLog) -> Result<Step<PathQuad>, WitnessError> {
    let split = match neighborhood_split_logged(g, v, log)? {
        Step::Done(s) => s,
        Step::Witness(c) => return Ok(Step::Witness(c)),
    };
    for a in split.a {
        if let Step::Witness(c) = split_count_check(g, &split, a)? {
            return Ok(Step::Witness(c));
        }
    }
    path_quad(g, &split).map(Step::Done)
}

/// Walks a connected 4-regular graph in which every neighborhood induces a
/// path `a1 - b1 - b2 - a2`, recovering its squared-cycle order.
///
/// Vertex 0 gets position 0, its quad fixes positions 1, 2, `n - 1` and
/// `n - 2`, and each further vertex is the far end of the quad at the
/// current frontier. Any probe that produces a certificate on the way ends
/// the walk early.
pub fn trace_squared_cycle(g: &Graph) -> Result<Step<SquaredCycleLabeling>, WitnessError> {
    trace_squared_cycle_logged(g, &mut ProbeLog::disabled())
}

pub(crate) fn trace_squared_cycle_logged(
    g: &Graph,
    log: &mut ProbeLog,
) -> Result<Step<SquaredCycleLabeling>, WitnessError> {
    let order = g.order();
    if order == 0 || !g.is_connected() || !g.is_regular() || g.delta() != 4 {
        return Err(WitnessError::Contract(
            "squared-cycle tracing needs a connected 4-regular graph".into(),
        ));
    }
    let seed = match quad_at(g, 0, log)? {
        Step::Done(q) => q,
        Step::Witness(c) => return Ok(Step::Witness(c)),
    };
    let mut forward = vec![0, seed.b1, seed.a1];
    let mut labeled: VertexSet = forward.iter().copied().collect();
    labeled.insert(seed.b2);
    labeled.insert(seed.a2);
    let inconsistent = |m: String| Err(WitnessError::Inconsistent(m));

    let n = loop {
        let p = forward.len() - 1;
        if p >= order {
            return inconsistent("walk did not close".into());
        }
        let (prev2, prev1, f) = (forward[p - 2], forward[p - 1], forward[p]);
        let q = match quad_at(g, f, log)? {
            Step::Done(q) => q,
            Step::Witness(c) => return Ok(Step::Witness(c)),
        };
        let (next, next2) = if (q.a1, q.b1) == (prev2, prev1) {
            (q.b2, q.a2)
        } else if (q.a2, q.b2) == (prev2, prev1) {
            (q.b1, q.a1)
        } else {
            return inconsistent(format!(
                "quad {:?} at {f} does not continue from {prev2}, {prev1}",
                q.as_path()
            ));
        };
        if next == seed.a2 && next2 == seed.b2 {
            break p + 3;
        }
        if labeled.contains(next) {
            return inconsistent(format!("walk revisits {next} at position {}", p + 1));
        }
        if labeled.contains(next2) && next2 != seed.a2 {
            return inconsistent(format!("walk reaches {next2} out of order"));
        }
        forward.push(next);
        labeled.insert(next);
    };

    if n != order {
        return inconsistent(format!("walk closed after {n} of {order} vertices"));
    }
    let mut position = vec![0; order];
    for (i, &v) in forward.iter().enumerate() {
        position[v] = i;
    }
    position[seed.a2] = n - 2;
    position[seed.b2] = n - 1;
    let labeling = SquaredCycleLabeling::from_positions(position)
        .ok_or_else(|| WitnessError::Inconsistent("walk positions are not a bijection".into()))?;
    if !labeling.is_valid_for(g) {
        return inconsistent("graph is not the square of the traced cycle".into());
    }
    Ok(Step::Done(labeling))
}

/// Positions of a high odd hole in `C_n^2`.
///
/// For `n = 3k + 1` the hole alternates steps of 2 and 1 and finishes with
/// four steps of 2 before wrapping, giving `2k - 1` vertices. For `n = 3k + 2` it has the
/// least odd length `l >= 5` with `n / 2 <= l <= 2n / 3`, using `2l - n`
/// steps of 1, never two in a row.
pub fn squared_cycle_hole(n: usize) -> Result<Vec<usize>, WitnessError> {
    let bad = || {
        Err(WitnessError::Contract(format!(
            "C_{n}^2 has no high odd hole of this form"
        )))
    };
    match n % 3 {
        1 if n >= 10 => {
            let k = (n - 1) / 3;
            let mut cycle = vec![1];
            let mut at = 1;
            for _ in 0..k - 3 {
                at += 2;
                cycle.push(at);
                at += 1;
                cycle.push(at);
            }
            for _ in 0..4 {
                at += 2;
                cycle.push(at);
            }
            // one more step of 2 wraps back to position 1
            debug_assert_eq!((at + 2) % n, 1);
            Ok(cycle)
        }
        2 if n >= 8 => {
            let l = (5..)
                .step_by(2)
                .find(|&l| 2 * l >= n && 3 * l <= 2 * n)
                .expect("n >= 8");
            let j = 2 * l - n;
            let m = n - l;
            let steps =
                std::iter::repeat_n(2, m - j).chain(std::iter::repeat_n([2, 1], j).flatten());
            let mut cycle = vec![0];
            let mut at = 0;
            for s in steps.take(l - 1) {
                at += s;
                cycle.push(at);
            }
            Ok(cycle)
        }
        _ => bad(),
    }
}

/// The coloring `p -> p mod 3` of `C_n^2`, proper when `3 | n`.
pub fn sequence_three_coloring(n: usize) -> Result<Coloring, WitnessError> {
    if n % 3 != 0 || n < 6 {
        return Err(WitnessError::Contract(format!(
            "C_{n}^2 is 3-colored by residues only for n divisible by 3 and n >= 6"
        )));
    }
    let colors = (0..n).map(|p| (p % 3 + 1) as Color).collect();
    Ok(Coloring::from_colors(3, colors)?)
}

/// A 3-coloring attempt on `C_n^2` (minus position 0 when `n = 3k + 2`)
/// in which the first three vertices form a triangle and every later vertex
/// is forced by its two predecessors, ending with a monochromatic edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedConflict {
    pub n: usize,
    pub removed: Option<usize>,
    pub coloring: Coloring,
    /// Positions in the order they were colored.
    pub order: Vec<usize>,
    pub edge: (usize, usize),
}

pub fn forced_coloring_conflict(n: usize) -> Result<ForcedConflict, WitnessError> {
    let (removed, first) = match n % 3 {
        1 if n >= 7 => (None, 0),
        2 if n >= 8 => (Some(0), 1),
        _ => {
            return Err(WitnessError::Contract(format!(
                "no forced conflict on C_{n}^2"
            )))
        }
    };
    let order: Vec<usize> = (first..n).collect();
    let mut coloring = Coloring::uncolored(n, 3);
    for (i, &p) in order.iter().enumerate() {
        coloring.set(p, (i % 3 + 1) as Color)?;
    }
    Ok(ForcedConflict {
        n,
        removed,
        coloring,
        order,
        edge: (first, n - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{verify_certificate, Certificate};
    use crate::coloring::is_proper;
    use crate::named;

    #[test]
    fn traces_squared_cycles() {
        for n in 7..=20 {
            let g = Graph::cycle_power(n, 2).unwrap();
            match trace_squared_cycle(&g) {
                Ok(Step::Done(l)) => {
                    assert_eq!(l.n, n);
                    assert!(l.is_valid_for(&g));
                    assert_eq!(l.vertex_at(0), 0);
                }
                // 3-colorable: the coloring of g - 0 extends
                Err(WitnessError::Inconsistent(_)) if n % 3 == 0 => {}
                // not vertex-critical, see forced_coloring_conflict
                Err(WitnessError::Contract(_)) if n % 3 == 2 => {}
                other => panic!("n = {n}: {other:?}"),
            }
        }
    }

    #[test]
    fn traces_relabeled_c7_complement() {
        let g = named::c7_complement();
        let Step::Done(l) = trace_squared_cycle(&g).unwrap() else {
            panic!("expected a labeling")
        };
        assert_eq!(l.n, 7);
        assert!(l.is_valid_for(&g));
    }

    #[test]
    fn rejects_non_regular_input() {
        let g = Graph::cycle(6).unwrap();
        assert!(matches!(
            trace_squared_cycle(&g),
            Err(WitnessError::Contract(_))
        ));
    }

    #[test]
    fn hole_positions() {
        assert_eq!(
            squared_cycle_hole(16).unwrap(),
            vec![1, 3, 4, 6, 7, 9, 11, 13, 15]
        );
        assert_eq!(squared_cycle_hole(10).unwrap(), vec![1, 3, 5, 7, 9]);
        assert_eq!(squared_cycle_hole(8).unwrap(), vec![0, 2, 4, 5, 7]);
        for n in [3, 4, 5, 6, 7, 9, 12] {
            assert!(squared_cycle_hole(n).is_err(), "n = {n}");
        }
    }

    #[test]
    fn holes_verify_in_squared_cycles() {
        for n in 8..=40 {
            if n % 3 == 0 {
                continue;
            }
            let g = Graph::cycle_power(n, 2).unwrap();
            let cycle = squared_cycle_hole(n).unwrap();
            let cert = Certificate::HighOddHole { cycle };
            assert!(verify_certificate(&g, &cert).is_accept(), "n = {n}");
        }
    }

    #[test]
    fn residue_colorings() {
        for n in (6..=30).step_by(3) {
            let g = Graph::cycle_power(n, 2).unwrap();
            let c = sequence_three_coloring(n).unwrap();
            assert_eq!(is_proper(&g, &c, g.vertices()), Ok(true));
        }
        assert!(sequence_three_coloring(7).is_err());
        assert!(sequence_three_coloring(3).is_err());
    }

    #[test]
    fn forced_conflicts_replay() {
        for n in 7..=30 {
            let Ok(fc) = forced_coloring_conflict(n) else {
                assert_eq!(n % 3, 0, "n = {n}");
                continue;
            };
            let g = Graph::cycle_power(n, 2).unwrap();
            let o = &fc.order;
            assert!(g.has_edge(o[0], o[1]) && g.has_edge(o[1], o[2]) && g.has_edge(o[0], o[2]));
            for i in 3..o.len() {
                let (x, y, z) = (o[i - 2], o[i - 1], o[i]);
                assert!(g.has_edge(x, y) && g.has_edge(x, z) && g.has_edge(y, z));
                let used = [fc.coloring.get(x), fc.coloring.get(y)];
                let forced = (1..=3).find(|c| !used.contains(&Some(*c))).unwrap();
                assert_eq!(fc.coloring.get(z), Some(forced));
            }
            let (u, v) = fc.edge;
            assert!(g.has_edge(u, v));
            assert_eq!(fc.coloring.get(u), fc.coloring.get(v));
            if let Some(r) = fc.removed {
                assert!(!fc.coloring.colored().contains(r));
            }
        }
    }
}
