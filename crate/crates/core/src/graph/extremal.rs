//! Clique/coclique splits of vertex subsets, the product bound
//! `#cliques · #cocliques ≤ (n+1)·2ⁿ`, and the split graphs that come within a
//! factor 2 of `√(n+1)·2^(n/2)` on both counts.

use num_bigint::BigUint;

use super::{count_cliques, count_cocliques, is_clique, is_coclique, Graph, GraphError};
use crate::bitset::VertexSet;
use crate::bounds;

fn canonical_key(x: &VertexSet) -> (usize, &VertexSet) {
    (x.len(), x)
}

/// All `X ⊆ s` such that `X` is a clique and `s \ X` is a coclique.
/// There are at most `|s| + 1` of them.
pub fn clique_coclique_partitions(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = s
        .subsets()
        .filter(|x| is_clique(g, x) && is_coclique(g, &s.difference(x)))
        .collect();
    out.sort_by(|a, b| canonical_key(a).cmp(&canonical_key(b)));
    out
}

/// All pairs `(X, Y)` of subsets of `s` with `X ∪ Y = s`, `X` a clique and `Y`
/// a coclique. There are at most `2|s| + 1` of them.
pub fn clique_coclique_covers(g: &Graph, s: &VertexSet) -> Vec<(VertexSet, VertexSet)> {
    let mut out = Vec::new();
    for x in s.subsets().filter(|x| is_clique(g, x)) {
        let forced = s.difference(&x);
        if !is_coclique(g, &forced) {
            continue;
        }
        for extra in x.subsets() {
            let y = forced.union(&extra);
            if is_coclique(g, &y) {
                out.push((x.clone(), y));
            }
        }
    }
    out.sort_by(|(a, b), (c, d)| {
        (canonical_key(a), canonical_key(b)).cmp(&(canonical_key(c), canonical_key(d)))
    });
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductBoundReport {
    pub n: usize,
    pub cliques: BigUint,
    pub cocliques: BigUint,
    pub product: BigUint,
    /// `(n+1)·2ⁿ`.
    pub bound: BigUint,
    /// `product ≤ bound`.
    pub holds: bool,
    /// `min(cliques, cocliques) ≤ √(n+1)·2^(n/2)`, checked as `min² ≤ bound`.
    pub min_side_holds: bool,
}

pub fn verify_product_bound(g: &Graph) -> ProductBoundReport {
    let n = g.vertex_count();
    let cliques = count_cliques(g);
    let cocliques = count_cocliques(g);
    let product = &cliques * &cocliques;
    let bound = bounds::bound_sq(n);
    let min = cliques.clone().min(cocliques.clone());
    ProductBoundReport {
        n,
        holds: product <= bound,
        min_side_holds: bounds::square_at_most(min, n),
        cliques,
        cocliques,
        product,
        bound,
    }
}

/// Size of the complete part of the extremal split graph: the integer nearest
/// to `n/2 + ½·log₂((n+1)/2)`, ties rounded up, clamped to `[0, n]`.
pub fn nearest_k(n: usize) -> Result<usize, GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    let target = n as f64 / 2.0 + 0.5 * ((n as f64 + 1.0) / 2.0).log2();
    // Exact ties only happen when (n+1)/2 is a power of two, where log2 is exact.
    let k = (target + 0.5).floor();
    Ok((k.max(0.0) as usize).min(n))
}

/// A complete graph on `nearest_k(n)` vertices plus isolated vertices; the
/// empty graph for `n = 0`.
pub fn extremal_split_graph(n: usize) -> Graph {
    let Ok(k) = nearest_k(n) else {
        return Graph::empty(0);
    };
    let mut g = Graph::empty(n);
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v).expect("vertices in range");
        }
    }
    g
}
