//! Vertex colorings and exact chromatic number.
//!
//! Colors are `1..=palette`; `0` marks an uncolored vertex. A coloring of
//! `H - x` is a coloring of `H` that leaves `x` uncolored.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

pub type Color = u8;

/// Sentinel for "no color assigned".
pub const UNCOLORED: Color = 0;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {0} is uncolored")]
    Uncolored(usize),
    #[error("vertex {vertex} has color {color} outside the palette 1..={palette}")]
    OutOfPalette {
        vertex: usize,
        color: Color,
        palette: usize,
    },
    #[error("coloring covers {coloring} vertices but the graph has {graph}")]
    OrderMismatch { coloring: usize, graph: usize },
    #[error("vertex {0} is not colored with either chain color")]
    StartNotInChain(usize),
    #[error("chain colors must be distinct, got {0} twice")]
    SameChainColors(Color),
}

/// A partial assignment of colors `1..=palette` to the vertices of a graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    palette: usize,
    colors: Vec<Color>,
}

impl Coloring {
    /// All `n` vertices uncolored.
    pub fn uncolored(n: usize, palette: usize) -> Self {
        Coloring {
            palette,
            colors: vec![UNCOLORED; n],
        }
    }

    /// Wraps a raw color vector, `0` meaning uncolored.
    pub fn from_colors(palette: usize, colors: Vec<Color>) -> Result<Self, ColoringError> {
        if let Some((vertex, &color)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c as usize > palette)
        {
            return Err(ColoringError::OutOfPalette {
                vertex,
                color,
                palette,
            });
        }
        Ok(Coloring { palette, colors })
    }

    #[inline]
    pub fn palette(&self) -> usize {
        self.palette
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.colors.len()
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<Color> {
        match self.colors[v] {
            UNCOLORED => None,
            c => Some(c),
        }
    }

    /// Assigns `color` (or clears with [`UNCOLORED`]).
    pub fn set(&mut self, v: usize, color: Color) -> Result<(), ColoringError> {
        if color as usize > self.palette {
            return Err(ColoringError::OutOfPalette {
                vertex: v,
                color,
                palette: self.palette,
            });
        }
        self.colors[v] = color;
        Ok(())
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    pub fn colored(&self) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != UNCOLORED)
            .map(|(v, _)| v)
            .collect()
    }

    /// Vertices carrying color `c`.
    pub fn class(&self, c: Color) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == c && c != UNCOLORED)
            .map(|(v, _)| v)
            .collect()
    }

    /// Colors appearing on `set`, as a bitmask indexed by color.
    pub fn colors_on(&self, set: VertexSet) -> u128 {
        set.iter()
            .map(|v| self.colors[v])
            .filter(|&c| c != UNCOLORED)
            .fold(0u128, |m, c| m | 1u128 << c)
    }
}

impl std::fmt::Debug for Coloring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Coloring(k={}, {:?})", self.palette, self.colors)
    }
}

/// True iff no edge with both ends in `on` is monochromatic.
pub fn is_proper(g: &Graph, c: &Coloring, on: VertexSet) -> Result<bool, ColoringError> {
    if c.order() != g.order() {
        return Err(ColoringError::OrderMismatch {
            coloring: c.order(),
            graph: g.order(),
        });
    }
    if let Some(v) = on.iter().find(|&v| c.get(v).is_none()) {
        return Err(ColoringError::Uncolored(v));
    }
    Ok(on.iter().all(|v| {
        (g.neighbors(v) & on)
            .iter()
            .all(|w| c.colors[w] != c.colors[v])
    }))
}

/// Properness on the colored support of `c`.
pub(crate) fn is_proper_where_colored(g: &Graph, c: &Coloring) -> bool {
    let on = c.colored();
    is_proper(g, c, on).unwrap_or(false)
}

struct Dsatur<'a> {
    g: &'a Graph,
    on: VertexSet,
    k: usize,
    colors: Vec<Color>,
    classes: Vec<VertexSet>,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize, used: usize) -> usize {
        let nb = self.g.neighbors(v);
        (1..=used)
            .filter(|&c| !(self.classes[c] & nb).is_empty())
            .count()
    }

    fn search(&mut self, remaining: VertexSet, used: usize) -> bool {
        if remaining.is_empty() {
            return true;
        }
        // Highest saturation, then highest degree inside `on`, then lowest id.
        let mut best = usize::MAX;
        let mut key = (0usize, 0usize);
        for v in remaining {
            let k = (
                self.saturation(v, used),
                (self.g.neighbors(v) & self.on).len(),
            );
            if best == usize::MAX || k > key {
                best = v;
                key = k;
            }
        }
        if key.0 >= self.k {
            return false;
        }
        let nb = self.g.neighbors(best);
        let top = (used + 1).min(self.k);
        for c in 1..=top {
            if !(self.classes[c] & nb).is_empty() {
                continue;
            }
            self.colors[best] = c as Color;
            self.classes[c].insert(best);
            if self.search(remaining.without(best), used.max(c)) {
                return true;
            }
            self.classes[c].remove(best);
            self.colors[best] = UNCOLORED;
        }
        false
    }
}

/// Finds a proper coloring of exactly the vertices of `on` with at most `k`
/// colors, or `None` if there is none.
///
/// Branching is DSATUR order with ties broken by degree and then by vertex
/// id, and new colors are only opened one at a time, so the result is a
/// deterministic function of the labeled graph.
pub fn find_k_coloring(g: &Graph, k: usize, on: VertexSet) -> Option<Coloring> {
    let on = on & g.vertices();
    let palette = k;
    let k = k.min(g.order().max(1));
    if k == 0 {
        return if on.is_empty() {
            Some(Coloring::uncolored(g.order(), 0))
        } else {
            None
        };
    }
    let mut s = Dsatur {
        g,
        on,
        k,
        colors: vec![UNCOLORED; g.order()],
        classes: vec![VertexSet::EMPTY; k + 1],
    };
    if s.search(on, 0) {
        Some(Coloring {
            palette,
            colors: s.colors,
        })
    } else {
        None
    }
}

fn greedy_clique_size(g: &Graph, on: VertexSet) -> usize {
    let mut best = 0;
    for v in on {
        let mut cand = g.neighbors(v) & on;
        let mut size = 1;
        while let Some(w) = cand
            .iter()
            .max_by_key(|&w| ((g.neighbors(w) & cand).len(), usize::MAX - w))
        {
            size += 1;
            cand &= g.neighbors(w);
        }
        best = best.max(size);
    }
    best
}

/// Chromatic number of the subgraph induced by `on`.
pub fn chromatic_number_on(g: &Graph, on: VertexSet) -> usize {
    let on = on & g.vertices();
    if on.is_empty() {
        return 0;
    }
    let mut k = greedy_clique_size(g, on).max(1);
    while find_k_coloring(g, k, on).is_none() {
        k += 1;
    }
    k
}

/// Exact chromatic number.
pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_number_on(g, g.vertices())
}

/// A vertex set inducing a vertex-critical subgraph with the same chromatic
/// number as `g`.
///
/// Vertices are tried in ascending order and deleted whenever the rest is
/// still not `(chi - 1)`-colorable. A vertex kept once stays critical in
/// every later subset, so one pass gives the same set as rescanning after
/// each deletion.
pub fn extract_vertex_critical(g: &Graph) -> VertexSet {
    let chi = chromatic_number(g);
    extract_vertex_critical_with(g, chi)
}

/// As [`extract_vertex_critical`] with the chromatic number already known.
pub fn extract_vertex_critical_with(g: &Graph, chi: usize) -> VertexSet {
    let mut keep = g.vertices();
    if chi == 0 {
        return VertexSet::EMPTY;
    }
    for v in g.vertices() {
        let rest = keep.without(v);
        if find_k_coloring(g, chi - 1, rest).is_none() {
            keep = rest;
        }
    }
    keep
}
