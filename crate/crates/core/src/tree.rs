//! Spanning trees and co-trees.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("edge index {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("{0} edges cannot span {1} vertices")]
    WrongSize(usize, usize),
    #[error("edge set contains a cycle or does not reach every vertex")]
    NotSpanning,
}

/// A spanning tree of a graph, stored as sorted indices into the graph's
/// edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningTree {
    edge_indices: Vec<usize>,
}

impl SpanningTree {
    pub fn new(g: &Graph, mut edge_indices: Vec<usize>) -> Result<Self, TreeError> {
        edge_indices.sort_unstable();
        edge_indices.dedup();
        if let Some(&i) = edge_indices.iter().find(|&&i| i >= g.m()) {
            return Err(TreeError::EdgeOutOfRange(i));
        }
        if edge_indices.len() + 1 != g.n() {
            return Err(TreeError::WrongSize(edge_indices.len(), g.n()));
        }
        let mut uf = UnionFind::new(g.n());
        for &i in &edge_indices {
            let (u, w) = g.edges()[i];
            if !uf.union(u, w) {
                return Err(TreeError::NotSpanning);
            }
        }
        Ok(SpanningTree { edge_indices })
    }

    /// Builds a tree from vertex pairs instead of edge indices.
    pub fn from_edge_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<Self, TreeError> {
        let indices = pairs
            .iter()
            .map(|&(u, w)| g.edge_index(u, w).ok_or(TreeError::NotSpanning))
            .collect::<Result<Vec<_>, _>>()?;
        SpanningTree::new(g, indices)
    }

    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn contains(&self, edge_index: usize) -> bool {
        self.edge_indices.binary_search(&edge_index).is_ok()
    }

    pub fn edge_pairs<'g>(&self, g: &'g Graph) -> Vec<(usize, usize)> {
        self.edge_indices.iter().map(|&i| g.edges()[i]).collect()
    }

    /// Indices of the edges outside the tree, ascending.
    pub fn cotree_edge_indices(&self, g: &Graph) -> Vec<usize> {
        (0..g.m()).filter(|&i| !self.contains(i)).collect()
    }

    /// Degree of each vertex within the tree.
    pub fn degrees(&self, g: &Graph) -> Vec<usize> {
        let mut deg = vec![0usize; g.n()];
        for &i in &self.edge_indices {
            let (u, w) = g.edges()[i];
            deg[u] += 1;
            deg[w] += 1;
        }
        deg
    }
}

/// One connected component of a co-tree: its vertex support and edge count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CotreeComponent {
    pub vertices: Vec<usize>,
    pub edge_count: usize,
}

/// Components of the subgraph formed by the edges outside `tree`. Components
/// without edges (isolated vertices of the co-tree) are omitted; the listed
/// edge counts sum to the cycle rank. Ordered by smallest vertex.
pub fn cotree_components(g: &Graph, tree: &SpanningTree) -> Vec<CotreeComponent> {
    let mut uf = UnionFind::new(g.n());
    let mut edge_count = vec![0usize; g.n()];
    for i in tree.cotree_edge_indices(g) {
        let (u, w) = g.edges()[i];
        uf.union(u, w);
        edge_count[uf.find(u)] += 1;
    }
    // Edge counts may be scattered over stale roots after later unions; fold
    // them up to the final roots.
    let mut total = vec![0usize; g.n()];
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for u in 0..g.n() {
        let r = uf.find(u);
        total[r] += edge_count[u];
        members[r].push(u);
    }
    let mut comps = Vec::new();
    for r in 0..g.n() {
        if total[r] > 0 {
            comps.push(CotreeComponent {
                vertices: std::mem::take(&mut members[r]),
                edge_count: total[r],
            });
        }
    }
    comps.sort_by_key(|c| c.vertices[0]);
    comps
}

/// Plain union-find with union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `x` and `y` were already joined.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (mut a, mut b) = (self.find(x), self.find(y));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}
