//! Plain undirected simple graphs on `0..n`.
//!
//! This is the substrate shared by the Levi-graph layer, the spanning-tree
//! searches, and the toy graphs used to exercise them. Neighbor lists and the
//! edge list are kept sorted so that every traversal order is reproducible.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// Undirected simple graph with sorted adjacency lists and a sorted edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Edges may be given
    /// in any order and orientation; loops and duplicates are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, w) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if w >= n {
                return Err(GraphError::VertexOutOfRange(w, n));
            }
            if u == w {
                return Err(GraphError::SelfLoop(u));
            }
            norm.push((u.min(w), u.max(w)));
        }
        norm.sort_unstable();
        if let Some(win) = norm.windows(2).find(|win| win[0] == win[1]) {
            return Err(GraphError::DuplicateEdge(win[0].0, win[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, w) in &norm {
            adj[u].push(w);
            adj[w].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edges: norm })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    /// Edges as `(u, w)` with `u < w`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.edge_index(u, w).is_some()
    }

    /// Position of `{u, w}` in the sorted edge list.
    pub fn edge_index(&self, u: usize, w: usize) -> Option<usize> {
        let key = (u.min(w), u.max(w));
        self.edges.binary_search(&key).ok()
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.component_of(0).len() == self.n()
    }

    /// Vertices reachable from `start`, ascending.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        (0..self.n()).filter(|&u| seen[u]).collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let comp = self.component_of(s);
            for &u in &comp {
                seen[u] = true;
            }
            comps.push(comp);
        }
        comps
    }

    /// Two-coloring of a bipartite graph (color of vertex 0's component side
    /// is 0, per component by smallest vertex), or `None` if an odd cycle
    /// exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n()];
        for s in 0..self.n() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Length of a shortest cycle, or `None` for a forest. BFS from every
    /// vertex; O(n·m), fine at the orders handled here.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n()];
        let mut parent = vec![usize::MAX; self.n()];
        for s in 0..self.n() {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        // Cycle through s of length dist[u] + dist[w] + 1.
                        let len = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// BFS distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Image of the graph under `perm` (`perm[old] = new`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, w)| (perm[u], perm[w]))
            .collect();
        Graph::from_edges(self.n(), &edges).expect("relabeling preserves validity")
    }

    /// `m - n + c`: the number of independent cycles.
    pub fn cycle_rank(&self) -> usize {
        self.m() + self.components().len() - self.n()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange(3, 3))
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn cycle_basics() {
        let c6 = cycle(6);
        assert_eq!(c6.m(), 6);
        assert!(c6.is_connected());
        assert_eq!(c6.girth(), Some(6));
        assert_eq!(c6.cycle_rank(), 1);
        assert!(c6.bipartition().is_some());
        assert!(cycle(5).bipartition().is_none());
    }

    #[test]
    fn components_and_distances() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        let d = g.distances(0);
        assert_eq!(d[1], 1);
        assert_eq!(d[3], usize::MAX);
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = cycle(4);
        let h = g.relabel(&[2, 3, 0, 1]);
        assert_eq!(h.m(), 4);
        assert_eq!(h.girth(), Some(4));
    }
}
