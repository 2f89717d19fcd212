//! Exhaustive checks of the clique/coclique bounds over all labeled graphs.

use num_bigint::BigUint;
use rayon::prelude::*;

use ufa_core::graph::{
    all_graphs, clique_coclique_covers, clique_coclique_partitions, verify_product_bound, Graph,
};

/// Which bounds hold for one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphCheck {
    /// cliques · cocliques ≤ (n+1)·2ⁿ
    pub product: bool,
    /// min(cliques, cocliques)² ≤ (n+1)·2ⁿ
    pub min_side: bool,
    /// |P_S| ≤ |S| + 1 for every S
    pub partitions: bool,
    /// |R_S| ≤ 2|S| + 1 for every S
    pub covers: bool,
    /// Σ_S |R_S| = cliques · cocliques
    pub cover_identity: bool,
}

impl GraphCheck {
    pub fn all(&self) -> bool {
        self.product && self.min_side && self.partitions && self.covers && self.cover_identity
    }
}

pub fn check_graph(g: &Graph) -> GraphCheck {
    let report = verify_product_bound(g);
    let mut partitions = true;
    let mut covers = true;
    let mut cover_total = 0usize;
    for s in g.vertices().subsets() {
        partitions &= clique_coclique_partitions(g, &s).len() <= s.len() + 1;
        let r = clique_coclique_covers(g, &s).len();
        covers &= r <= 2 * s.len() + 1;
        cover_total += r;
    }
    GraphCheck {
        product: report.holds,
        min_side: report.min_side_holds,
        partitions,
        covers,
        cover_identity: BigUint::from(cover_total) == report.product,
    }
}

#[derive(Debug, Clone)]
pub struct Summary {
    pub graphs: usize,
    pub violations: usize,
    /// The violating graph with the smallest edge mask, if any.
    pub first_violation: Option<Graph>,
}

/// Checks every labeled graph on `n` vertices, in parallel.
pub fn verify_all_graphs(n: usize) -> Summary {
    let graphs: Vec<Graph> = all_graphs(n).collect();
    let failing: Vec<usize> = graphs
        .par_iter()
        .enumerate()
        .filter(|(_, g)| !check_graph(g).all())
        .map(|(i, _)| i)
        .collect();
    Summary {
        graphs: graphs.len(),
        violations: failing.len(),
        first_violation: failing.first().map(|&i| graphs[i].clone()),
    }
}
