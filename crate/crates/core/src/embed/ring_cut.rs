//! Ring-cut certificates of non-upper-embeddability.
//!
//! A ring cut is a set of three edges whose removal splits the graph into
//! exactly three connected parts joined pairwise by those edges, each part
//! with odd cycle rank. Any spanning tree must use two or three of the cut
//! edges; in either case some part keeps a connected tree restriction and
//! its internal co-tree — cut off from the rest of the co-tree — carries
//! m_i - (n_i - 1) edges, an odd number, so some co-tree component is odd
//! and Jungerman's criterion can never be met.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingPart {
    pub vertices: Vec<usize>,
    pub edge_count: usize,
}

impl RingPart {
    pub fn cycle_rank(&self) -> usize {
        self.edge_count + 1 - self.vertices.len()
    }
}

/// Three cut edges and the three parts they separate. `cut_edges[0]` joins
/// parts 0-1, `[1]` joins 1-2, `[2]` joins 0-2; parts are ordered by their
/// smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingCutCertificate {
    pub cut_edges: [(usize, usize); 3],
    pub parts: [RingPart; 3],
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingCutError {
    #[error("cut edge {0}-{1} is not an edge of the graph")]
    MissingEdge(usize, usize),
    #[error("removal leaves {0} components instead of 3")]
    WrongComponentCount(usize),
    #[error("cut edges do not join the parts in a ring")]
    NotARing,
    #[error("part {0} mismatches the graph")]
    PartMismatch(usize),
    #[error("part {0} has even cycle rank {1}")]
    EvenRank(usize, usize),
}

/// Components and per-part edge counts of `g` minus three edges, if the
/// removal yields exactly three parts in ring pattern.
fn split(g: &Graph, cut: [usize; 3]) -> Option<RingCutCertificate> {
    let mut comp = vec![usize::MAX; g.n()];
    let mut comp_count = 0usize;
    for s in 0..g.n() {
        if comp[s] != usize::MAX {
            continue;
        }
        if comp_count == 3 {
            return None;
        }
        comp[s] = comp_count;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                let e = g.edge_index(u, w).expect("adjacency");
                if cut.contains(&e) || comp[w] != usize::MAX {
                    continue;
                }
                comp[w] = comp_count;
                stack.push(w);
            }
        }
        comp_count += 1;
    }
    if comp_count != 3 {
        return None;
    }
    // Each cut edge must join a distinct pair of parts; together a triangle.
    let mut joins = [usize::MAX; 3]; // pair-slot: 0-1, 1-2, 0-2
    for &e in &cut {
        let (u, w) = g.edges()[e];
        let (a, b) = (comp[u].min(comp[w]), comp[u].max(comp[w]));
        let slot = match (a, b) {
            (0, 1) => 0,
            (1, 2) => 1,
            (0, 2) => 2,
            _ => return None, // inside one part
        };
        if joins[slot] != usize::MAX {
            return None;
        }
        joins[slot] = e;
    }
    let mut parts: Vec<RingPart> = (0..3)
        .map(|c| RingPart {
            vertices: (0..g.n()).filter(|&u| comp[u] == c).collect(),
            edge_count: 0,
        })
        .collect();
    for (e, &(u, w)) in g.edges().iter().enumerate() {
        if cut.contains(&e) {
            continue;
        }
        debug_assert_eq!(comp[u], comp[w]);
        parts[comp[u]].edge_count += 1;
    }
    if parts.iter().any(|p| p.cycle_rank() % 2 == 0) {
        return None;
    }
    Some(RingCutCertificate {
        cut_edges: joins.map(|e| g.edges()[e]),
        parts: [parts[0].clone(), parts[1].clone(), parts[2].clone()],
    })
}

/// First ring cut in lexicographic edge-triple order, or `None` — absence
/// of a witness, not an embeddability verdict.
pub fn ring_cut_certificate(g: &Graph) -> Option<RingCutCertificate> {
    let m = g.m();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                if let Some(cert) = split(g, [i, j, k]) {
                    return Some(cert);
                }
            }
        }
    }
    None
}

/// Re-validates a claimed certificate against the graph.
pub fn validate_ring_cut(g: &Graph, cert: &RingCutCertificate) -> Result<(), RingCutError> {
    let mut cut = [0usize; 3];
    for (i, &(u, w)) in cert.cut_edges.iter().enumerate() {
        cut[i] = g
            .edge_index(u, w)
            .ok_or(RingCutError::MissingEdge(u, w))?;
    }
    let recomputed = match split(g, cut) {
        Some(c) => c,
        None => {
            // Distinguish the failure mode for the caller.
            let mut test = Vec::new();
            for s in 0..g.n() {
                if test.iter().any(|c: &Vec<usize>| c.contains(&s)) {
                    continue;
                }
                let mut comp = vec![s];
                let mut stack = vec![s];
                let mut seen = vec![false; g.n()];
                seen[s] = true;
                while let Some(u) = stack.pop() {
                    for &w in g.neighbors(u) {
                        let e = g.edge_index(u, w).unwrap();
                        if cut.contains(&e) || seen[w] {
                            continue;
                        }
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
                test.push(comp);
            }
            if test.len() != 3 {
                return Err(RingCutError::WrongComponentCount(test.len()));
            }
            return Err(RingCutError::NotARing);
        }
    };
    for i in 0..3 {
        let mut claimed = cert.parts[i].vertices.clone();
        claimed.sort_unstable();
        if claimed != recomputed.parts[i].vertices
            || cert.parts[i].edge_count != recomputed.parts[i].edge_count
        {
            return Err(RingCutError::PartMismatch(i));
        }
        let rank = recomputed.parts[i].cycle_rank();
        if rank % 2 == 0 {
            return Err(RingCutError::EvenRank(i, rank));
        }
    }
    Ok(())
}
