//! Certificates and their verification.
//!
//! A certificate is a small object that can be checked against the graph
//! without trusting whoever produced it.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// One of the three outcomes for a connected graph with `chi = Delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// A clique on `Delta(G)` vertices (a `K_{Delta+1}` is also accepted).
    #[serde(rename = "clique")]
    Clique { vertices: Vec<usize> },
    /// A chordless odd cycle of length at least 5, listed in cyclic order,
    /// whose vertices all have degree at least `Delta(G) - 1`.
    #[serde(rename = "high_odd_hole")]
    HighOddHole { cycle: Vec<usize> },
    /// `position_map[v]` is the position of `v` on a 7-cycle whose
    /// complement is the graph.
    #[serde(rename = "c7_complement")]
    C7Complement { position_map: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Clique,
    HighOddHole,
    C7Complement,
}

impl Certificate {
    pub fn kind(&self) -> CertificateKind {
        match self {
            Certificate::Clique { .. } => CertificateKind::Clique,
            Certificate::HighOddHole { .. } => CertificateKind::HighOddHole,
            Certificate::C7Complement { .. } => CertificateKind::C7Complement,
        }
    }

    /// Rewrites vertex ids through `map` (e.g. from a subgraph to its host).
    pub fn relabel(&self, map: &[usize]) -> Certificate {
        match self {
            Certificate::Clique { vertices } => Certificate::Clique {
                vertices: vertices.iter().map(|&v| map[v]).collect(),
            },
            Certificate::HighOddHole { cycle } => Certificate::HighOddHole {
                cycle: cycle.iter().map(|&v| map[v]).collect(),
            },
            Certificate::C7Complement { position_map } => {
                let mut out = vec![0; position_map.len()];
                for (v, &p) in position_map.iter().enumerate() {
                    out[map[v]] = p;
                }
                Certificate::C7Complement { position_map: out }
            }
        }
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::Clique => "clique",
            CertificateKind::HighOddHole => "high_odd_hole",
            CertificateKind::C7Complement => "c7_complement",
        })
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Certificate::Clique { vertices } => {
                write!(f, "clique of size {}: {}", vertices.len(), join(vertices))
            }
            Certificate::HighOddHole { cycle } => {
                write!(
                    f,
                    "high odd hole of length {}: {}",
                    cycle.len(),
                    join(cycle)
                )
            }
            Certificate::C7Complement { position_map } => write!(
                f,
                "exceptional graph (complement of C7), positions: {}",
                join(position_map)
            ),
        }
    }
}

/// Why a certificate was rejected.
///
/// Checks run in a fixed order (range, size, adjacency, chord, parity,
/// degree floor) and the first failure is reported.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    OutOfRange { vertex: usize, order: usize },
    #[error("vertex {0} listed twice")]
    Repeated(usize),
    #[error("wrong size: expected {expected}, found {found}")]
    Size { expected: String, found: usize },
    #[error("adjacency violated: {0} and {1} are not adjacent")]
    Adjacency(usize, usize),
    #[error("chord present: {0} and {1} are adjacent")]
    Chord(usize, usize),
    #[error("parity: cycle length {0} is even")]
    Parity(usize),
    #[error("degree floor: vertex {vertex} has degree {degree} < {floor}")]
    DegreeFloor {
        vertex: usize,
        degree: usize,
        floor: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(Rejection),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

fn distinct(g: &Graph, vs: &[usize]) -> Result<VertexSet, Rejection> {
    let mut seen = VertexSet::EMPTY;
    for &v in vs {
        if v >= g.order() {
            return Err(Rejection::OutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    for &v in vs {
        if seen.contains(v) {
            return Err(Rejection::Repeated(v));
        }
        seen.insert(v);
    }
    Ok(seen)
}

fn check_clique(g: &Graph, vertices: &[usize]) -> Result<(), Rejection> {
    distinct(g, vertices)?;
    // A clique larger than Delta can only be K_{Delta+1}, which contains a
    // K_Delta, so it is accepted too.
    let need = g.delta().max(1);
    if vertices.len() < need {
        return Err(Rejection::Size {
            expected: format!("at least {need}"),
            found: vertices.len(),
        });
    }
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if !g.has_edge(u, v) {
                return Err(Rejection::Adjacency(u, v));
            }
        }
    }
    Ok(())
}

fn check_hole(g: &Graph, cycle: &[usize]) -> Result<(), Rejection> {
    distinct(g, cycle)?;
    let len = cycle.len();
    if len < 5 {
        return Err(Rejection::Size {
            expected: "at least 5".into(),
            found: len,
        });
    }
    for i in 0..len {
        let (u, v) = (cycle[i], cycle[(i + 1) % len]);
        if !g.has_edge(u, v) {
            return Err(Rejection::Adjacency(u, v));
        }
    }
    for i in 0..len {
        for j in i + 2..len {
            if i == 0 && j == len - 1 {
                continue;
            }
            if g.has_edge(cycle[i], cycle[j]) {
                return Err(Rejection::Chord(cycle[i], cycle[j]));
            }
        }
    }
    if len % 2 == 0 {
        return Err(Rejection::Parity(len));
    }
    let floor = g.delta().saturating_sub(1);
    if let Some(&v) = cycle.iter().find(|&&v| g.degree(v) < floor) {
        return Err(Rejection::DegreeFloor {
            vertex: v,
            degree: g.degree(v),
            floor,
        });
    }
    Ok(())
}

fn check_c7(g: &Graph, position_map: &[usize]) -> Result<(), Rejection> {
    if g.order() != 7 || position_map.len() != 7 {
        return Err(Rejection::Size {
            expected: "7".into(),
            found: if g.order() != 7 {
                g.order()
            } else {
                position_map.len()
            },
        });
    }
    // The map must be a bijection onto 0..7.
    let mut seen = VertexSet::EMPTY;
    for &p in position_map {
        if p >= 7 {
            return Err(Rejection::OutOfRange {
                vertex: p,
                order: 7,
            });
        }
        if seen.contains(p) {
            return Err(Rejection::Repeated(p));
        }
        seen.insert(p);
    }
    for u in 0..7 {
        for v in u + 1..7 {
            let d = position_map[u].abs_diff(position_map[v]);
            let d = d.min(7 - d);
            let want = d == 2 || d == 3;
            match (want, g.has_edge(u, v)) {
                (true, false) => return Err(Rejection::Adjacency(u, v)),
                (false, true) => return Err(Rejection::Chord(u, v)),
                _ => {}
            }
        }
    }
    Ok(())
}

/// Checks `cert` against `g`, with `Delta = max_degree(g)`.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Verdict {
    let r = match cert {
        Certificate::Clique { vertices } => check_clique(g, vertices),
        Certificate::HighOddHole { cycle } => check_hole(g, cycle),
        Certificate::C7Complement { position_map } => check_c7(g, position_map),
    };
    match r {
        Ok(()) => Verdict::Accept,
        Err(e) => Verdict::Reject(e),
    }
}

#[derive(Debug, Error)]
pub enum CertificateFormatError {
    #[error("malformed certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// `{"kind": ..., ...}` on a single line.
pub fn serialize_certificate(cert: &Certificate) -> String {
    serde_json::to_string(cert).expect("certificates always serialize")
}

pub fn deserialize_certificate(text: &str) -> Result<Certificate, CertificateFormatError> {
    Ok(serde_json::from_str(text)?)
}
