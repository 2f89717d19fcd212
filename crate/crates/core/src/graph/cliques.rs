use num_bigint::BigUint;

use super::{complement_graph, is_clique, is_coclique, Graph};
use crate::bitset::VertexSet;

/// Number of cliques of `g`, the empty set included.
///
/// Include/exclude recursion over the smallest candidate vertex: cliques
/// avoiding `v`, plus cliques containing `v` drawn from `N(v)`. Candidate sets
/// that are already cliques (`2^m` subsets) or cocliques (`m + 1`) are closed
/// off directly.
pub fn count_cliques(g: &Graph) -> BigUint {
    count_within(g, g.vertices())
}

/// Number of cocliques (independent sets) of `g`, the empty set included.
pub fn count_cocliques(g: &Graph) -> BigUint {
    count_cliques(&complement_graph(g))
}

fn count_within(g: &Graph, candidates: VertexSet) -> BigUint {
    let Some(v) = candidates.first() else {
        return BigUint::from(1u8);
    };
    let m = candidates.len();
    if is_clique(g, &candidates) {
        return BigUint::from(1u8) << m;
    }
    if is_coclique(g, &candidates) {
        return BigUint::from(m + 1);
    }
    let mut rest = candidates;
    rest.remove(v);
    let with_v = rest.intersection(g.neighbors(v));
    count_within(g, with_v) + count_within(g, rest)
}

/// Streams the cliques of a graph in canonical order: by size, then
/// lexicographically by sorted members. Only one size class is held in memory.
pub struct Cliques<'g> {
    graph: &'g Graph,
    level: Vec<VertexSet>,
    pos: usize,
}

impl<'g> Cliques<'g> {
    fn new(graph: &'g Graph) -> Self {
        Cliques {
            graph,
            level: vec![VertexSet::new()],
            pos: 0,
        }
    }

    fn advance_level(&mut self) {
        let n = self.graph.vertex_count();
        let mut next = Vec::new();
        for x in &self.level {
            let mut common = x.iter().fold(VertexSet::full(n), |acc, v| {
                acc.intersection(self.graph.neighbors(v))
            });
            if let Some(max) = x.last() {
                common.difference_with(&VertexSet::full(max + 1));
            }
            for v in &common {
                let mut y = x.clone();
                y.insert(v);
                next.push(y);
            }
        }
        self.level = next;
        self.pos = 0;
    }
}

impl Iterator for Cliques<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.pos == self.level.len() {
            if self.level.is_empty() {
                return None;
            }
            self.advance_level();
            if self.level.is_empty() {
                return None;
            }
        }
        self.pos += 1;
        Some(self.level[self.pos - 1].clone())
    }
}

pub fn enumerate_cliques(g: &Graph) -> Cliques<'_> {
    Cliques::new(g)
}

/// Cocliques of `g` in canonical order.
pub fn enumerate_cocliques(g: &Graph) -> Vec<VertexSet> {
    let c = complement_graph(g);
    enumerate_cliques(&c).collect()
}
