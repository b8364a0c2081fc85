//! Levi graphs: cubic bipartite graphs of girth at least 6 with a designated
//! point/block vertex split and a dart structure for rotation systems.
//!
//! Vertices `0..v` are point vertices, `v..2v` block vertices. Every vertex
//! has exactly three incident darts; dart `3u + s` leaves vertex `u` through
//! slot `s`, slots ordered by neighbor index.

use thiserror::Error;

use crate::config::Configuration;
use crate::graph::Graph;
use crate::graph6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LeviError {
    #[error("graph has {0} vertices, expected 2v = {1}")]
    WrongOrder(usize, usize),
    #[error("vertex {0} has valency {1}, expected 3")]
    NotCubic(usize, usize),
    #[error("edge {0}-{1} joins two vertices of the same class")]
    NotBipartite(usize, usize),
    #[error("girth {0} below 6")]
    GirthTooSmall(usize),
    #[error("graph6: {0}")]
    Graph6(#[from] graph6::Graph6Error),
}

/// A Levi graph: the point-block incidence graph of a symmetric `v_3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviGraph {
    graph: Graph,
    v: usize,
    twin: Vec<usize>,
}

impl LeviGraph {
    /// Wraps a graph as a Levi graph, checking the `v_3` invariants:
    /// 2v vertices, cubic, all edges between the two index classes,
    /// girth at least 6. Connectivity is not required.
    pub fn new(graph: Graph, v: usize) -> Result<Self, LeviError> {
        if graph.n() != 2 * v {
            return Err(LeviError::WrongOrder(graph.n(), 2 * v));
        }
        for u in 0..graph.n() {
            if graph.degree(u) != 3 {
                return Err(LeviError::NotCubic(u, graph.degree(u)));
            }
        }
        for &(u, w) in graph.edges() {
            if (u < v) == (w < v) {
                return Err(LeviError::NotBipartite(u, w));
            }
        }
        if let Some(g) = graph.girth() {
            if g < 6 {
                return Err(LeviError::GirthTooSmall(g));
            }
        }
        let mut twin = vec![0usize; 6 * v];
        for u in 0..graph.n() {
            for (s, &w) in graph.neighbors(u).iter().enumerate() {
                let back = graph
                    .neighbors(w)
                    .iter()
                    .position(|&x| x == u)
                    .expect("symmetric adjacency");
                twin[3 * u + s] = 3 * w + back;
            }
        }
        Ok(LeviGraph { graph, v, twin })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Number of points (= number of blocks).
    pub fn v(&self) -> usize {
        self.v
    }

    pub fn n(&self) -> usize {
        2 * self.v
    }

    pub fn dart_count(&self) -> usize {
        6 * self.v
    }

    pub fn is_point_vertex(&self, u: usize) -> bool {
        u < self.v
    }

    /// Vertex a dart leaves from.
    pub fn dart_source(&self, d: usize) -> usize {
        d / 3
    }

    /// Vertex a dart points at.
    pub fn dart_target(&self, d: usize) -> usize {
        self.graph.neighbors(d / 3)[d % 3]
    }

    /// The same edge traversed the other way.
    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    /// Reads the configuration back off the block vertices.
    pub fn configuration(&self) -> Configuration {
        let blocks: Vec<Vec<usize>> = (self.v..2 * self.v)
            .map(|b| self.graph.neighbors(b).to_vec())
            .collect();
        Configuration::new(self.v, &blocks).expect("levi invariants imply a valid configuration")
    }

    /// graph6 line for the underlying graph; the class split at `v` is
    /// implied by the vertex numbering.
    pub fn to_graph6(&self) -> String {
        graph6::encode(&self.graph).expect("levi orders fit graph6")
    }

    /// Parses a graph6 line as a Levi graph with points `0..n/2`.
    pub fn from_graph6(line: &str) -> Result<Self, LeviError> {
        let g = graph6::decode(line)?;
        let n = g.n();
        if n % 2 != 0 {
            return Err(LeviError::WrongOrder(n, n + 1));
        }
        LeviGraph::new(g, n / 2)
    }
}
