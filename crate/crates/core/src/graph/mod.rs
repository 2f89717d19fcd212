//! Simple undirected graphs over vertices `0..n`, stored as neighbour bitsets.

mod cliques;
mod extremal;

pub use cliques::{
    count_cliques, count_cocliques, enumerate_cliques, enumerate_cocliques, Cliques,
};
pub use extremal::{
    clique_coclique_covers, clique_coclique_partitions, extremal_split_graph, nearest_k,
    verify_product_bound, ProductBoundReport,
};

use std::fmt;

use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("the graph must have at least one vertex")]
    NoVertices,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![VertexSet::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let all = VertexSet::full(n);
        Graph {
            adjacency: (0..n)
                .map(|v| {
                    let mut others = all.clone();
                    others.remove(v);
                    others
                })
                .collect(),
        }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The graph whose edge set is selected by the bits of `mask`, with bit `i`
    /// standing for the `i`-th pair `(u, v)`, `u < v`, in lexicographic order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty(n);
        for (i, (u, v)) in vertex_pairs(n).enumerate() {
            if mask & (1 << i) != 0 {
                g.adjacency[u].insert(v);
                g.adjacency[v].insert(u);
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|adj| adj.contains(v))
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Whether every vertex index in `x` is a vertex of this graph.
    pub fn contains_all(&self, x: &VertexSet) -> bool {
        x.bound() <= self.vertex_count()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn vertex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Every labeled graph on `n` vertices, `2^(n(n-1)/2)` of them, in edge-mask
/// order. Panics for `n > 11`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    assert!(pairs < 64, "too many labeled graphs on {n} vertices");
    (0u64..1 << pairs).map(move |mask| Graph::from_edge_mask(n, mask))
}

/// All distinct pairs in `x` are adjacent. ∅ and singletons qualify.
pub fn is_clique(g: &Graph, x: &VertexSet) -> bool {
    x.iter().all(|v| {
        let mut rest = x.clone();
        rest.remove(v);
        rest.is_subset(g.neighbors(v))
    })
}

/// No two members of `x` are adjacent.
pub fn is_coclique(g: &Graph, x: &VertexSet) -> bool {
    x.iter().all(|v| g.neighbors(v).is_disjoint(x))
}

/// The graph on the same vertices with exactly the missing edges.
pub fn complement_graph(g: &Graph) -> Graph {
    let all = g.vertices();
    Graph {
        adjacency: g
            .adjacency
            .iter()
            .enumerate()
            .map(|(v, adj)| {
                let mut c = all.difference(adj);
                c.remove(v);
                c
            })
            .collect(),
    }
}

#[cfg(test)]
pub(crate) fn path3() -> Graph {
    Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
}
