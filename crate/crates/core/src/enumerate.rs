//! Connected graphs up to isomorphism, for small orders.
//!
//! Graphs of order `n` are grown from those of order `n - 1` by adding a
//! vertex joined to a nonempty subset, and deduplicated by canonical form.
//! Canonical forms come from color refinement plus individualization:
//! every leaf of the search tree is a discrete ordered partition, and the
//! lexicographically least relabeled adjacency over all leaves is kept.

use std::collections::HashSet;

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};

/// Largest order [`generate_connected_graphs`] accepts.
pub const MAX_GENERATED_ORDER: usize = 9;

type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let key = |v: usize| -> Vec<usize> {
                masks.iter().map(|&m| (g.neighbors(v) & m).len()).collect()
            };
            let mut keyed: Vec<(Vec<usize>, usize)> = cell.iter().map(|&v| (key(v), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    let mut part: Vec<usize> = keyed[start..i].iter().map(|&(_, v)| v).collect();
                    part.sort_unstable();
                    next.push(part);
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Upper-triangle adjacency bits of `g` relabeled by `order` (vertex
/// `order[i]` becomes `i`), read row by row.
fn relabeled_bits(g: &Graph, order: &[usize]) -> u128 {
    let n = order.len();
    let mut bits = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            bits <<= 1;
            if g.has_edge(order[i], order[j]) {
                bits |= 1;
            }
        }
    }
    bits
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(u128, Vec<usize>)>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let bits = relabeled_bits(g, &order);
            if best.as_ref().is_none_or(|(b, _)| bits < *b) {
                *best = Some((bits, order));
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut branch = cells.clone();
                let rest: Vec<usize> = cells[i].iter().copied().filter(|&u| u != v).collect();
                branch[i] = vec![v];
                branch.insert(i + 1, rest);
                search(g, branch, best);
            }
        }
    }
}

/// A labeling `order` such that two graphs are isomorphic exactly when
/// their relabelings by their canonical orders are equal. Orders up to 16.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    assert!(
        g.order() <= 16,
        "canonical forms are limited to 16 vertices"
    );
    if g.order() == 0 {
        return Vec::new();
    }
    let mut best = None;
    search(g, vec![(0..g.order()).collect()], &mut best);
    best.expect("at least one leaf").1
}

/// Canonical adjacency code; equal codes for equal orders mean isomorphic
/// graphs.
pub fn canonical_code(g: &Graph) -> u128 {
    relabeled_bits(g, &canonical_order(g))
}

/// `g` relabeled into canonical form.
pub fn canonical_form(g: &Graph) -> Graph {
    relabel(g, &canonical_order(g))
}

fn relabel(g: &Graph, order: &[usize]) -> Graph {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    Graph::from_edges(g.order(), g.edges().map(|(u, v)| (pos[u], pos[v])))
        .expect("relabeling preserves validity")
}

/// One representative, in canonical form, of every isomorphism class of
/// connected graphs on `n` vertices, `1 <= n <= 9`.
///
/// Order 9 has 261,080 classes and takes minutes.
pub fn generate_connected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > MAX_GENERATED_ORDER {
        return Err(GraphError::Parameter(format!(
            "connected graph generation supports 1 <= n <= {MAX_GENERATED_ORDER}, got {n}"
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        level = extend(&level)?;
    }
    Ok(level)
}

fn extend(parents: &[Graph]) -> Result<Vec<Graph>, GraphError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in parents {
        let m = p.order();
        for s in 1..(1u64 << m) {
            let child = p.with_vertex(VertexSet::from_bits(s))?;
            let order = canonical_order(&child);
            if seen.insert(relabeled_bits(&child, &order)) {
                out.push(relabel(&child, &order));
            }
        }
    }
    Ok(out)
}
