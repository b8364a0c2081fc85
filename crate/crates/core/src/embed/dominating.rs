//! Dominating-tree certificates: a point set S of size (v-1)/2 such that
//! every block contains a point of S and the Levi subgraph induced by
//! S and all blocks is connected. Such a subgraph is automatically a tree;
//! completing it by hanging each remaining point off one of its blocks
//! gives a spanning tree in which every point vertex has co-tree valency
//! 0 or 2, certifying upper embeddability in every orientation of triples.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::Configuration;
use crate::tree::SpanningTree;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("order {0} must be odd")]
    EvenOrder(usize),
    #[error("point set has size {actual}, need {required}")]
    WrongSetSize { actual: usize, required: usize },
    #[error("block {0} contains no point of the set")]
    BlockNotDominated(usize),
    #[error("induced subgraph on the set and all blocks is disconnected")]
    InducedDisconnected,
    #[error("tree does not match the certificate: {0}")]
    TreeMismatch(String),
}

/// A dominating point set plus the spanning tree completing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominatingTreeCertificate {
    pub point_set: Vec<usize>,
    pub tree: SpanningTree,
}

/// Search outcome; exhaustion is meaningful (the sufficient test failed,
/// which proves nothing about embeddability), a blown budget is not.
#[derive(Debug, Clone)]
pub enum CertSearch {
    Found(DominatingTreeCertificate),
    Exhausted { nodes: u64 },
    BudgetExceeded { nodes: u64 },
}

impl CertSearch {
    pub fn found(&self) -> Option<&DominatingTreeCertificate> {
        match self {
            CertSearch::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Does every block contain a point of `s`?
fn dominates(cfg: &Configuration, s: &[usize]) -> Option<usize> {
    cfg.blocks()
        .iter()
        .position(|b| !b.iter().any(|p| s.contains(p)))
}

/// Is the Levi subgraph induced by `s` and all block vertices connected?
fn induced_connected(cfg: &Configuration, s: &[usize]) -> bool {
    let v = cfg.v();
    // Walk over s ∪ blocks, starting from the first point of s.
    let start = match s.first() {
        Some(&p) => p,
        None => return false,
    };
    let mut seen_point = vec![false; v];
    let mut seen_block = vec![false; v];
    let in_s = {
        let mut f = vec![false; v];
        for &p in s {
            f[p] = true;
        }
        f
    };
    let mut stack = vec![start];
    seen_point[start] = true;
    let mut reached = 1usize;
    while let Some(p) = stack.pop() {
        for bi in cfg.blocks_through(p) {
            if seen_block[bi] {
                continue;
            }
            seen_block[bi] = true;
            reached += 1;
            for &q in &cfg.blocks()[bi] {
                if in_s[q] && !seen_point[q] {
                    seen_point[q] = true;
                    reached += 1;
                    stack.push(q);
                }
            }
        }
    }
    reached == s.len() + v
}

/// Builds and validates the certificate for a given point set: checks the
/// set conditions and completes the induced tree by joining each remaining
/// point to its lowest-index block.
pub fn certificate_from_set(
    cfg: &Configuration,
    s: &[usize],
) -> Result<DominatingTreeCertificate, CertificateError> {
    let v = cfg.v();
    if v % 2 == 0 {
        return Err(CertificateError::EvenOrder(v));
    }
    let required = (v - 1) / 2;
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != required {
        return Err(CertificateError::WrongSetSize {
            actual: s.len(),
            required,
        });
    }
    if let Some(b) = dominates(cfg, &s) {
        return Err(CertificateError::BlockNotDominated(b));
    }
    if !induced_connected(cfg, &s) {
        return Err(CertificateError::InducedDisconnected);
    }
    let levi = cfg.levi_graph();
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(2 * v - 1);
    for &p in &s {
        for bi in cfg.blocks_through(p) {
            pairs.push((p, v + bi));
        }
    }
    for p in 0..v {
        if !s.contains(&p) {
            pairs.push((p, v + cfg.blocks_through(p)[0]));
        }
    }
    let tree = SpanningTree::from_edge_pairs(levi.graph(), &pairs)
        .map_err(|e| CertificateError::TreeMismatch(e.to_string()))?;
    Ok(DominatingTreeCertificate { point_set: s, tree })
}

/// Re-validates a certificate against a configuration.
pub fn validate_certificate(
    cfg: &Configuration,
    cert: &DominatingTreeCertificate,
) -> Result<(), CertificateError> {
    let rebuilt = certificate_from_set(cfg, &cert.point_set)?;
    // The set conditions hold; the tree must extend the induced subgraph
    // with exactly one edge per outside point.
    let levi = cfg.levi_graph();
    let g = levi.graph();
    let v = cfg.v();
    let deg = cert.tree.degrees(g);
    for &p in &cert.point_set {
        if deg[p] != 3 {
            return Err(CertificateError::TreeMismatch(format!(
                "set point {p} has tree valency {} instead of 3",
                deg[p]
            )));
        }
    }
    for p in 0..v {
        if !cert.point_set.contains(&p) && deg[p] != 1 {
            return Err(CertificateError::TreeMismatch(format!(
                "outside point {p} has tree valency {} instead of 1",
                deg[p]
            )));
        }
    }
    let _ = rebuilt;
    Ok(())
}

/// Greedy seed: repeatedly take the point covering the most uncovered
/// blocks (lowest index on ties) until the set has the certificate size.
fn greedy_set(cfg: &Configuration) -> Vec<usize> {
    let v = cfg.v();
    let size = (v - 1) / 2;
    let mut covered = vec![false; v];
    let mut chosen = vec![false; v];
    let mut s = Vec::with_capacity(size);
    while s.len() < size {
        let mut best = usize::MAX;
        let mut best_gain = usize::MAX;
        for p in 0..v {
            if chosen[p] {
                continue;
            }
            let gain = cfg
                .blocks_through(p)
                .iter()
                .filter(|&&b| !covered[b])
                .count();
            if best == usize::MAX || gain > best_gain {
                best = p;
                best_gain = gain;
            }
        }
        chosen[best] = true;
        s.push(best);
        for b in cfg.blocks_through(best) {
            covered[b] = true;
        }
    }
    s.sort_unstable();
    s
}

/// Searches for a dominating-tree certificate: the greedy seed first, then
/// systematic lexicographic backtracking over all size-(v-1)/2 subsets with
/// domination pruning (each point covers three blocks). Deterministic;
/// `budget` caps backtracking nodes.
pub fn dominating_tree_certificate(cfg: &Configuration, budget: u64) -> CertSearch {
    assert!(cfg.v() % 2 == 1, "certificates need odd order");
    if let Ok(cert) = certificate_from_set(cfg, &greedy_set(cfg)) {
        return CertSearch::Found(cert);
    }
    let v = cfg.v();
    let size = (v - 1) / 2;
    let mut uncovered = cfg.blocks().len();
    let mut cover_count = vec![0usize; v];
    let mut s: Vec<usize> = Vec::with_capacity(size);
    let mut nodes = 0u64;

    fn rec(
        cfg: &Configuration,
        next: usize,
        size: usize,
        s: &mut Vec<usize>,
        cover_count: &mut Vec<usize>,
        uncovered: &mut usize,
        nodes: &mut u64,
        budget: u64,
    ) -> Option<DominatingTreeCertificate> {
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        if s.len() == size {
            if *uncovered == 0 {
                if let Ok(cert) = certificate_from_set(cfg, s) {
                    return Some(cert);
                }
            }
            return None;
        }
        let slots = size - s.len();
        if *uncovered > 3 * slots {
            return None;
        }
        let v = cfg.v();
        if next >= v || v - next < slots {
            return None;
        }
        for p in next..v {
            if v - p < slots {
                break;
            }
            s.push(p);
            for b in cfg.blocks_through(p) {
                if cover_count[b] == 0 {
                    *uncovered -= 1;
                }
                cover_count[b] += 1;
            }
            if let Some(found) = rec(cfg, p + 1, size, s, cover_count, uncovered, nodes, budget) {
                return Some(found);
            }
            for b in cfg.blocks_through(p) {
                cover_count[b] -= 1;
                if cover_count[b] == 0 {
                    *uncovered += 1;
                }
            }
            s.pop();
        }
        None
    }

    let found = rec(
        cfg,
        0,
        size,
        &mut s,
        &mut cover_count,
        &mut uncovered,
        &mut nodes,
        budget,
    );
    match found {
        Some(cert) => CertSearch::Found(cert),
        None if nodes > budget => CertSearch::BudgetExceeded { nodes },
        None => CertSearch::Exhausted { nodes },
    }
}
