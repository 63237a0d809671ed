//! Proof-driven certificate search.
//!
//! [`find_witness`] takes a connected graph with `chi = Delta` and produces a
//! [`Certificate`] by running a fixed sequence of local probes, each of which
//! either confirms a structural fact about the graph or exhibits a `Delta`
//! clique or a high odd hole on the spot:
//!
//! * `Delta = 2`: any edge is a `K_2`.
//! * `Delta = 3`: a triangle, or else the shortest odd cycle, which is
//!   chordless and has length at least 5 once triangles are excluded.
//! * `Delta >= 4`: pass to a vertex-critical induced subgraph `H`. A vertex of
//!   degree `Delta - 1` in `H` yields a certificate through
//!   [`degree_deficient_probe`]. Otherwise `H = G` is `Delta`-regular and every
//!   vertex is put through [`neighborhood_split`], [`split_count_check`] and
//!   [`path_quad`]. For `Delta = 4` a graph that survives all of that is a
//!   squared cycle; [`trace_squared_cycle`] recovers the cyclic order and the
//!   hole comes from [`squared_cycle_hole`], except on seven vertices where
//!   the graph is the complement of `C7`.
//!
//! Every certificate is re-checked with [`verify_certificate`] against the
//! input graph before it is returned.

mod probes;
mod squared;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::certificate::{verify_certificate, Certificate, Rejection, Verdict};
use crate::coloring::{chromatic_number, extract_vertex_critical_with, Coloring, ColoringError};
use crate::graph::{Graph, GraphError};
use crate::kempe::KempeChain;
use crate::oracle::{find_clique, is_c7_complement, oracle_witness};

pub use probes::{
    degree_deficient_probe, neighborhood_split, pair_probe, path_quad, split_count_check,
};
pub use squared::{
    forced_coloring_conflict, sequence_three_coloring, squared_cycle_hole, trace_squared_cycle,
    ForcedConflict, SquaredCycleLabeling,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("chromatic number {chi} differs from maximum degree {delta}")]
    ChiNotDelta { chi: usize, delta: usize },
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("inconsistent probe outcome: {0}")]
    Inconsistent(String),
    #[error("certificate failed verification: {0}")]
    Unverified(Rejection),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

impl WitnessError {
    /// Errors caused by the input rather than by the search itself.
    pub fn is_contract(&self) -> bool {
        matches!(
            self,
            WitnessError::Disconnected
                | WitnessError::ChiNotDelta { .. }
                | WitnessError::Contract(_)
                | WitnessError::Graph(_)
                | WitnessError::Coloring(_)
        )
    }
}

/// Either the structural fact a probe set out to establish, or a
/// certificate it stumbled on instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step<T> {
    Done(T),
    Witness(Certificate),
}

/// Outcome of a two-neighbor probe around an uncolored vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeOutcome {
    /// The probed pair is adjacent.
    Adjacent(usize, usize),
    Hole(Certificate),
    CliqueFound(Certificate),
    /// Only possible when the input broke a precondition, e.g. the coloring
    /// could be extended so the claimed chromatic number was wrong.
    Inconsistent(String),
}

/// The neighborhood of `center` split into an independent pair `a` and a
/// clique `b` of size `Delta - 2`, every vertex of `b` adjacent to some
/// vertex of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodSplit {
    pub center: usize,
    pub a: [usize; 2],
    pub b: VertexSet,
}

impl NeighborhoodSplit {
    /// Builds a split and checks all of its invariants in `g`.
    pub fn checked(
        g: &Graph,
        center: usize,
        a: [usize; 2],
        b: VertexSet,
    ) -> Result<Self, WitnessError> {
        let s = NeighborhoodSplit { center, a, b };
        s.validate(g)?;
        Ok(s)
    }

    pub fn a_set(&self) -> VertexSet {
        VertexSet::singleton(self.a[0]).with(self.a[1])
    }

    pub fn validate(&self, g: &Graph) -> Result<(), WitnessError> {
        let bad = |m: &str| {
            Err(WitnessError::Contract(format!(
                "invalid split at {}: {m}",
                self.center
            )))
        };
        if self.center >= g.order() || self.a.iter().any(|&x| x >= g.order()) {
            return bad("vertex out of range");
        }
        let a = self.a_set();
        if a.len() != 2 || !(a & self.b).is_empty() || (a | self.b) != g.neighbors(self.center) {
            return bad("A and B must partition the neighborhood");
        }
        if g.has_edge(self.a[0], self.a[1]) {
            return bad("A is not independent");
        }
        if self.b.len() + 2 != g.delta() {
            return bad("B has the wrong size");
        }
        for u in self.b {
            if !(self.b.without(u)).is_subset(g.neighbors(u)) {
                return bad("B is not a clique");
            }
            if (g.neighbors(u) & a).is_empty() {
                return bad("a vertex of B misses A");
            }
        }
        Ok(())
    }
}

/// Four neighbors of a vertex inducing exactly the path `a1 - b1 - b2 - a2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathQuad {
    pub a1: usize,
    pub b1: usize,
    pub b2: usize,
    pub a2: usize,
}

impl PathQuad {
    pub fn as_path(&self) -> [usize; 4] {
        [self.a1, self.b1, self.b2, self.a2]
    }
}

/// Something a probe did, recorded for later inspection.
#[derive(Debug, Clone)]
pub enum ProbeEvent {
    Chain {
        host: Graph,
        coloring: Coloring,
        chain: KempeChain,
    },
    Outcome {
        host: Graph,
        outcome: ProbeOutcome,
    },
}

/// Optional sink for [`ProbeEvent`]s.
#[derive(Debug, Default)]
pub struct ProbeLog {
    enabled: bool,
    events: Vec<ProbeEvent>,
}

impl ProbeLog {
    pub fn recording() -> Self {
        ProbeLog {
            enabled: true,
            events: Vec::new(),
        }
    }

    pub fn disabled() -> Self {
        ProbeLog::default()
    }

    pub fn events(&self) -> &[ProbeEvent] {
        &self.events
    }

    pub fn into_events(self) -> Vec<ProbeEvent> {
        self.events
    }

    pub(crate) fn chain(&mut self, host: &Graph, coloring: &Coloring, chain: &KempeChain) {
        if self.enabled {
            self.events.push(ProbeEvent::Chain {
                host: host.clone(),
                coloring: coloring.clone(),
                chain: chain.clone(),
            });
        }
    }

    pub(crate) fn outcome(&mut self, host: &Graph, outcome: &ProbeOutcome) {
        if self.enabled {
            self.events.push(ProbeEvent::Outcome {
                host: host.clone(),
                outcome: outcome.clone(),
            });
        }
    }
}

/// Which branch of the search produced the certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    SingleEdge,
    Triangle,
    ShortestOddCycle,
    Brooks,
    DegreeDeficient,
    NeighborhoodProbe,
    SquaredCycle,
    Exceptional,
    OracleFallback,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub certificate: Certificate,
    pub route: Route,
}

impl WitnessReport {
    pub fn used_oracle_fallback(&self) -> bool {
        self.route == Route::OracleFallback
    }
}

pub(crate) fn verified(g: &Graph, cert: Certificate) -> Result<Certificate, WitnessError> {
    match verify_certificate(g, &cert) {
        Verdict::Accept => Ok(cert),
        Verdict::Reject(r) => Err(WitnessError::Unverified(r)),
    }
}

/// Shortest odd cycle, in cyclic order, or `None` for bipartite graphs.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut best: Option<Vec<usize>> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut layer = VertexSet::singleton(root);
        let mut seen = layer;
        let mut d = 0;
        'bfs: while !layer.is_empty() {
            if let Some(b) = &best {
                if 2 * d + 1 >= b.len() {
                    break;
                }
            }
            for u in layer {
                if let Some(w) = (g.neighbors(u) & layer).above(u).first() {
                    let path_to = |mut x: usize| {
                        let mut p = vec![x];
                        while x != root {
                            x = parent[x];
                            p.push(x);
                        }
                        p.reverse();
                        p
                    };
                    let mut cycle = path_to(u);
                    let back = path_to(w);
                    cycle.extend(back[1..].iter().rev());
                    best = Some(cycle);
                    break 'bfs;
                }
            }
            let mut next = VertexSet::EMPTY;
            for u in layer {
                for w in g.neighbors(u) - seen - next {
                    parent[w] = u;
                    dist[w] = d + 1;
                    next.insert(w);
                }
            }
            seen |= next;
            layer = next;
            d += 1;
        }
    }
    best
}

/// Runs every regular-case probe over all vertices: first the neighborhood
/// split everywhere, then the counting check and the path structure.
fn regular_sweep(g: &Graph, log: &mut ProbeLog) -> Result<Option<Certificate>, WitnessError> {
    let mut splits = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        match probes::neighborhood_split_logged(g, v, log)? {
            Step::Done(s) => splits.push(s),
            Step::Witness(c) => return Ok(Some(c)),
        }
    }
    for split in &splits {
        // Both A-vertices are counted before anything is declared
        // inconsistent: a zero count on one side means a clique on the other.
        let counts = split
            .a
            .iter()
            .map(|&a| split_count_check(g, split, a))
            .collect::<Vec<_>>();
        for c in &counts {
            if let Ok(Step::Witness(cert)) = c {
                return Ok(Some(cert.clone()));
            }
        }
        for c in counts {
            c?;
        }
        path_quad(g, split)?;
    }
    Ok(None)
}

/// A certificate for a connected graph with `chi = Delta`.
pub fn find_witness(g: &Graph) -> Result<Certificate, WitnessError> {
    find_witness_report(g, &mut ProbeLog::disabled()).map(|r| r.certificate)
}

/// As [`find_witness`], also reporting the branch taken and recording probe
/// events into `log`.
pub fn find_witness_report(g: &Graph, log: &mut ProbeLog) -> Result<WitnessReport, WitnessError> {
    if !g.is_connected() {
        return Err(WitnessError::Disconnected);
    }
    let delta = g.max_degree()?;
    let chi = chromatic_number(g);
    if chi != delta {
        return Err(WitnessError::ChiNotDelta { chi, delta });
    }
    if delta <= 1 {
        return Err(WitnessError::Contract(format!(
            "maximum degree {delta} cannot equal the chromatic number of a connected graph"
        )));
    }
    let done = |certificate: Certificate, route: Route| -> Result<WitnessReport, WitnessError> {
        Ok(WitnessReport {
            certificate: verified(g, certificate)?,
            route,
        })
    };

    if delta == 2 {
        let (u, v) = g.edges().next().expect("connected with Delta 2");
        return done(
            Certificate::Clique {
                vertices: vec![u, v],
            },
            Route::SingleEdge,
        );
    }
    if delta == 3 {
        if let Some(vertices) = find_clique(g, 3) {
            return done(Certificate::Clique { vertices }, Route::Triangle);
        }
        let cycle = shortest_odd_cycle(g)
            .ok_or_else(|| WitnessError::Inconsistent("3-chromatic graph is bipartite".into()))?;
        return done(Certificate::HighOddHole { cycle }, Route::ShortestOddCycle);
    }

    let keep = extract_vertex_critical_with(g, chi);
    let sub = g.induced_subgraph(keep)?;
    let h = &sub.graph;
    let h_delta = h.delta();
    if h_delta + 1 == delta {
        // chi(H) = Delta(H) + 1 with Delta(H) >= 3: H is complete.
        let clique = find_clique(h, delta).ok_or_else(|| {
            WitnessError::Inconsistent(
                "critical subgraph with chi = Delta + 1 is not complete".into(),
            )
        })?;
        let cert = Certificate::Clique { vertices: clique }.relabel(&sub.new_to_old);
        return done(cert, Route::Brooks);
    }
    if h_delta != delta {
        return Err(WitnessError::Inconsistent(format!(
            "critical subgraph has maximum degree {h_delta}, expected {delta} or {}",
            delta - 1
        )));
    }
    if let Some(v) = (0..h.order()).find(|&v| h.degree(v) + 1 == delta) {
        let cert = probes::degree_deficient_probe_logged(h, v, log)?;
        return done(cert.relabel(&sub.new_to_old), Route::DegreeDeficient);
    }
    if h.order() != g.order() {
        return Err(WitnessError::Inconsistent(
            "a Delta-regular critical subgraph must be the whole connected graph".into(),
        ));
    }

    if let Some(cert) = regular_sweep(g, log)? {
        return done(cert, Route::NeighborhoodProbe);
    }

    if delta >= 5 {
        log::warn!(
            "neighborhood probes completed without a certificate at Delta = {delta}; \
             falling back to exhaustive search"
        );
        let cert = oracle_witness(g).ok_or_else(|| {
            WitnessError::Inconsistent("no certificate from probes or exhaustive search".into())
        })?;
        return done(cert, Route::OracleFallback);
    }

    let labeling = match squared::trace_squared_cycle_logged(g, log)? {
        Step::Done(l) => l,
        Step::Witness(c) => return done(c, Route::NeighborhoodProbe),
    };
    let n = labeling.n;
    if n == 7 {
        let position_map = is_c7_complement(g)
            .ok_or_else(|| WitnessError::Inconsistent("squared 7-cycle not recognized".into()))?;
        return done(
            Certificate::C7Complement { position_map },
            Route::Exceptional,
        );
    }
    if n % 3 == 0 {
        return Err(WitnessError::Contract(format!(
            "squared cycle on {n} vertices is 3-colorable"
        )));
    }
    let cycle = squared_cycle_hole(n)?
        .into_iter()
        .map(|p| labeling.vertex_at(p))
        .collect();
    done(Certificate::HighOddHole { cycle }, Route::SquaredCycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn complement_of_c7_is_exceptional() {
        let g = named::c7_complement();
        let r = find_witness_report(&g, &mut ProbeLog::disabled()).unwrap();
        assert_eq!(r.route, Route::Exceptional);
        assert!(matches!(r.certificate, Certificate::C7Complement { .. }));
    }

    #[test]
    fn squared_sixteen_cycle_gives_nine_hole() {
        let g = Graph::cycle_power(16, 2).unwrap();
        let r = find_witness_report(&g, &mut ProbeLog::disabled()).unwrap();
        assert_eq!(r.route, Route::SquaredCycle);
        match r.certificate {
            Certificate::HighOddHole { cycle } => assert_eq!(cycle.len(), 9),
            c => panic!("unexpected {c:?}"),
        }
    }

    #[test]
    fn petersen_gives_five_hole() {
        let g = named::petersen();
        let r = find_witness_report(&g, &mut ProbeLog::disabled()).unwrap();
        assert_eq!(r.route, Route::ShortestOddCycle);
        assert!(matches!(&r.certificate, Certificate::HighOddHole { cycle } if cycle.len() == 5));
    }

    #[test]
    fn small_degree_branches() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            find_witness(&p4).unwrap(),
            Certificate::Clique {
                vertices: vec![0, 1]
            }
        );
        let mut edges: Vec<_> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        edges.push((0, 2));
        let diamond = Graph::from_edges(4, edges).unwrap();
        assert_eq!(
            find_witness(&diamond).unwrap(),
            Certificate::Clique {
                vertices: vec![0, 1, 2]
            }
        );
    }

    #[test]
    fn brooks_branch() {
        // K4 with a pendant path: chi = 4 = Delta; the critical part is K4.
        let mut edges: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        edges.extend([(0, 4), (4, 5)]);
        let g = Graph::from_edges(6, edges).unwrap();
        let r = find_witness_report(&g, &mut ProbeLog::disabled()).unwrap();
        assert_eq!(r.route, Route::Brooks);
        assert_eq!(
            r.certificate,
            Certificate::Clique {
                vertices: vec![0, 1, 2, 3]
            }
        );
    }

    #[test]
    fn contract_errors() {
        assert_eq!(
            find_witness(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()),
            Err(WitnessError::Disconnected)
        );
        assert_eq!(
            find_witness(&Graph::complete(5).unwrap()),
            Err(WitnessError::ChiNotDelta { chi: 5, delta: 4 })
        );
        assert_eq!(
            find_witness(&Graph::cycle(5).unwrap()),
            Err(WitnessError::ChiNotDelta { chi: 3, delta: 2 })
        );
        assert_eq!(
            find_witness(&named::grotzsch()),
            Err(WitnessError::ChiNotDelta { chi: 4, delta: 5 })
        );
        assert!(find_witness(&Graph::empty(1).unwrap())
            .unwrap_err()
            .is_contract());
    }

    #[test]
    fn shortest_odd_cycles() {
        assert_eq!(shortest_odd_cycle(&Graph::cycle(6).unwrap()), None);
        assert_eq!(
            shortest_odd_cycle(&Graph::cycle(7).unwrap()).unwrap().len(),
            7
        );
        let p = named::petersen();
        let c = shortest_odd_cycle(&p).unwrap();
        assert_eq!(c.len(), 5);
        assert!(verify_certificate(&p, &Certificate::HighOddHole { cycle: c }).is_accept());
        assert_eq!(
            shortest_odd_cycle(&Graph::complete(4).unwrap())
                .unwrap()
                .len(),
            3
        );
    }
}
