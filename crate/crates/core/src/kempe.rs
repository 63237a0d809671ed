//! Kempe chains: components of the subgraph induced by two color classes.

use crate::bitset::VertexSet;
use crate::coloring::{Color, Coloring, ColoringError};
use crate::graph::Graph;

/// A maximal connected two-colored subgraph containing `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempeChain {
    pub colors: (Color, Color),
    pub start: usize,
    pub members: VertexSet,
}

/// The `(a, b)`-Kempe chain of `c` through `start`.
pub fn kempe_chain(
    g: &Graph,
    c: &Coloring,
    start: usize,
    a: Color,
    b: Color,
) -> Result<KempeChain, ColoringError> {
    if a == b {
        return Err(ColoringError::SameChainColors(a));
    }
    match c.get(start) {
        Some(x) if x == a || x == b => {}
        Some(_) => return Err(ColoringError::StartNotInChain(start)),
        None => return Err(ColoringError::Uncolored(start)),
    }
    let allowed = c.class(a) | c.class(b);
    let mut members = VertexSet::singleton(start);
    let mut frontier = members;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next |= g.neighbors(v);
        }
        frontier = (next & allowed) - members;
        members |= frontier;
    }
    Ok(KempeChain {
        colors: (a, b),
        start,
        members,
    })
}

/// Exchanges the two chain colors on the chain members.
pub fn kempe_swap(c: &Coloring, chain: &KempeChain) -> Coloring {
    let (a, b) = chain.colors;
    let mut out = c.clone();
    for v in chain.members {
        let swapped = match c.get(v) {
            Some(x) if x == a => b,
            Some(x) if x == b => a,
            _ => continue,
        };
        out.set(v, swapped)
            .expect("chain colors are in the palette");
    }
    out
}

/// A shortest path inside the chain from `from` to the nearest member of
/// `targets`.
///
/// The search runs layer by layer; each newly reached vertex takes the
/// lowest-id vertex of the previous layer as predecessor, and among targets
/// at the same distance the lowest id wins.
pub fn shortest_path_in_chain(
    g: &Graph,
    chain: &KempeChain,
    from: usize,
    targets: VertexSet,
) -> Option<Vec<usize>> {
    if !chain.members.contains(from) {
        return None;
    }
    let mut pred = vec![usize::MAX; g.order()];
    let mut seen = VertexSet::singleton(from);
    let mut layer = seen;
    loop {
        if let Some(t) = (layer & targets).first() {
            let mut path = vec![t];
            let mut v = t;
            while v != from {
                v = pred[v];
                path.push(v);
            }
            path.reverse();
            return Some(path);
        }
        let mut next = VertexSet::EMPTY;
        for v in layer {
            next |= g.neighbors(v);
        }
        next = (next & chain.members) - seen;
        if next.is_empty() {
            return None;
        }
        for w in next {
            pred[w] = (g.neighbors(w) & layer)
                .first()
                .expect("reached from layer");
        }
        seen |= next;
        layer = next;
    }
}
