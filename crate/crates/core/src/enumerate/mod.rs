//! Isomorph-free generation of symmetric `v_3` configurations and of their
//! Levi graphs.
//!
//! The generator grows configurations block by block with the bipartition
//! colors fixed. At every node it canonizes the partial configuration (as a
//! colored incidence graph), enumerates candidate blocks — triples of
//! points of degree < 3 with all three pairs uncovered — takes one
//! representative per orbit of the automorphism group on candidates, and
//! accepts a child only if the block just added lies in the canonical
//! deletion orbit of the child: the orbit of the block vertex occupying the
//! highest canonical position. One parent class per child class, one
//! candidate orbit per parent, so every isomorphism class is produced
//! exactly once; the census tests and the naive star-fixed oracle
//! cross-check this kernel.
//!
//! The search tree can be cut at a fixed depth into a frontier whose nodes
//! are independent work units: results merge by concatenation in node
//! order, so parallel runs and checkpoint/resume produce identical output.

pub mod table;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{self, canon::CanonResult, canonical_form_cells, Cert};
use crate::config::Configuration;
use crate::graph::Graph;
use crate::levi::LeviGraph;
use crate::tree::UnionFind;

/// Format version for frontier checkpoint files.
pub const FRONTIER_VERSION: u32 = 1;

#[derive(Debug, Clone)]
struct Partial {
    v: usize,
    blocks: Vec<[usize; 3]>,
    deg: Vec<u8>,
    pair: Vec<bool>,
}

impl Partial {
    fn root(v: usize) -> Self {
        Partial {
            v,
            blocks: Vec::with_capacity(v),
            deg: vec![0; v],
            pair: vec![false; v * v],
        }
    }

    fn from_blocks(v: usize, blocks: &[[usize; 3]]) -> Self {
        let mut p = Partial::root(v);
        for &b in blocks {
            p.push(b);
        }
        p
    }

    fn pair(&self, a: usize, b: usize) -> bool {
        self.pair[a * self.v + b]
    }

    fn push(&mut self, b: [usize; 3]) {
        for (x, y) in [(b[0], b[1]), (b[0], b[2]), (b[1], b[2])] {
            debug_assert!(!self.pair(x, y));
            self.pair[x * self.v + y] = true;
            self.pair[y * self.v + x] = true;
        }
        for &p in &b {
            debug_assert!(self.deg[p] < 3);
            self.deg[p] += 1;
        }
        self.blocks.push(b);
    }

    /// Incidence graph: points `0..v`, block vertices `v..v+k`.
    fn graph(&self) -> Graph {
        let mut edges = Vec::with_capacity(3 * self.blocks.len());
        for (i, b) in self.blocks.iter().enumerate() {
            for &p in b {
                edges.push((p, self.v + i));
            }
        }
        Graph::from_edges(self.v + self.blocks.len(), &edges).expect("incidence edges")
    }

    fn canonize(&self) -> CanonResult {
        let k = self.blocks.len();
        let cells = vec![
            (0..self.v).collect::<Vec<_>>(),
            (self.v..self.v + k).collect::<Vec<_>>(),
        ];
        canonical_form_cells(&self.graph(), &cells)
    }

    /// Candidate blocks in lexicographic order.
    fn candidates(&self) -> Vec<[usize; 3]> {
        let v = self.v;
        let mut out = Vec::new();
        for a in 0..v {
            if self.deg[a] == 3 {
                continue;
            }
            for b in a + 1..v {
                if self.deg[b] == 3 || self.pair(a, b) {
                    continue;
                }
                for c in b + 1..v {
                    if self.deg[c] == 3 || self.pair(a, c) || self.pair(b, c) {
                        continue;
                    }
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    /// Every point still needs `3 - deg` blocks, each consuming two distinct
    /// fresh partners; prune when a point cannot possibly finish.
    fn completable(&self) -> bool {
        for p in 0..self.v {
            let need = (3 - self.deg[p]) as usize;
            if need == 0 {
                continue;
            }
            let partners = (0..self.v)
                .filter(|&q| q != p && self.deg[q] < 3 && !self.pair(p, q))
                .count();
            if partners < 2 * need {
                return false;
            }
        }
        true
    }
}

/// Generation output, split by connectivity: disconnected configurations
/// (unions of smaller ones, first possible at v = 14) are configurations
/// too and the census needs them, but most callers want the connected ones.
/// Both lists are in deterministic generation order.
#[derive(Debug, Clone)]
pub struct Generated {
    pub configs: Vec<Configuration>,
    pub disconnected_configs: Vec<Configuration>,
    pub nodes: u64,
    pub complete: bool,
}

impl Generated {
    /// Every generated class, connected first.
    pub fn all_configs(&self) -> impl Iterator<Item = &Configuration> {
        self.configs.iter().chain(self.disconnected_configs.iter())
    }
}

struct Gen {
    budget: Option<u64>,
    nodes: u64,
    exhausted: bool,
    configs: Vec<Configuration>,
    disconnected_configs: Vec<Configuration>,
    frontier_depth: Option<usize>,
    frontier: Vec<Vec<[usize; 3]>>,
}

impl Gen {
    fn expand(&mut self, partial: &Partial, canon: &CanonResult) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                self.exhausted = true;
                return;
            }
        }
        let v = partial.v;
        let k = partial.blocks.len();
        if let Some(depth) = self.frontier_depth {
            if k == depth {
                self.frontier.push(partial.blocks.clone());
                return;
            }
        }
        if k == v {
            let blocks: Vec<Vec<usize>> = partial.blocks.iter().map(|b| b.to_vec()).collect();
            let cfg = Configuration::new(v, &blocks).expect("complete partials are valid");
            if cfg.is_connected() {
                self.configs.push(cfg);
            } else {
                self.disconnected_configs.push(cfg);
            }
            return;
        }
        if !partial.completable() {
            return;
        }
        let candidates = partial.candidates();
        if candidates.is_empty() {
            return;
        }
        // One representative per orbit of Aut(partial) on candidate blocks.
        let index: HashMap<[usize; 3], usize> = candidates
            .iter()
            .enumerate()
            .map(|(i, &t)| (t, i))
            .collect();
        let mut uf = UnionFind::new(candidates.len());
        for gen in &canon.generators {
            for (i, t) in candidates.iter().enumerate() {
                let mut img = [gen[t[0]], gen[t[1]], gen[t[2]]];
                img.sort_unstable();
                let j = *index
                    .get(&img)
                    .expect("automorphisms preserve candidate blocks");
                uf.union(i, j);
            }
        }
        let mut seen_orbit = vec![false; candidates.len()];
        for (i, &t) in candidates.iter().enumerate() {
            let r = uf.find(i);
            if seen_orbit[r] {
                continue;
            }
            seen_orbit[r] = true;
            let mut child = partial.clone();
            child.push(t);
            let child_canon = child.canonize();
            if Self::accepted(&child, &child_canon) {
                self.expand(&child, &child_canon);
            }
            if self.exhausted {
                return;
            }
        }
    }

    /// Canonical-parent test: the newly added block (always the last one,
    /// vertex v+k-1) must lie in the same Aut-orbit as the block vertex
    /// with the highest canonical position.
    fn accepted(child: &Partial, canon: &CanonResult) -> bool {
        let v = child.v;
        let k = child.blocks.len();
        let canonical_block = (v..v + k)
            .max_by_key(|&b| canon.relabeling[b])
            .expect("at least one block");
        if canonical_block == v + k - 1 {
            return true;
        }
        let mut uf = UnionFind::new(v + k);
        for gen in &canon.generators {
            for x in 0..v + k {
                uf.union(x, gen[x]);
            }
        }
        uf.find(canonical_block) == uf.find(v + k - 1)
    }
}

fn run_gen(
    v: usize,
    start: Partial,
    budget: Option<u64>,
    frontier_depth: Option<usize>,
) -> Gen {
    let mut gen = Gen {
        budget,
        nodes: 0,
        exhausted: false,
        configs: Vec::new(),
        disconnected_configs: Vec::new(),
        frontier_depth,
        frontier: Vec::new(),
    };
    if v < 7 {
        return gen;
    }
    if start.blocks.is_empty() {
        // All first blocks are equivalent under relabeling.
        let mut first = start.clone();
        first.push([0, 1, 2]);
        let canon = first.canonize();
        gen.expand(&first, &canon);
    } else {
        let canon = start.canonize();
        gen.expand(&start, &canon);
    }
    gen
}

/// Generates one representative per isomorphism class of connected `v_3`
/// configurations. `budget` caps search nodes; a capped run returns
/// `complete = false`.
pub fn generate_configs(v: usize, budget: Option<u64>) -> Generated {
    let gen = run_gen(v, Partial::root(v), budget, None);
    Generated {
        configs: gen.configs,
        disconnected_configs: gen.disconnected_configs,
        nodes: gen.nodes,
        complete: !gen.exhausted,
    }
}

/// Checkpointable frontier: the accepted partial configurations at a fixed
/// block depth. Expanding every node yields exactly the output of the
/// plain generator, in the same order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Frontier {
    pub version: u32,
    pub v: usize,
    pub depth: usize,
    pub nodes: Vec<Vec<[usize; 3]>>,
}

pub fn frontier(v: usize, depth: usize) -> Frontier {
    let gen = run_gen(v, Partial::root(v), None, Some(depth));
    Frontier {
        version: FRONTIER_VERSION,
        v,
        depth,
        nodes: gen.frontier,
    }
}

/// Completes one frontier node.
pub fn expand_frontier_node(v: usize, blocks: &[[usize; 3]]) -> Generated {
    let gen = run_gen(v, Partial::from_blocks(v, blocks), None, None);
    Generated {
        configs: gen.configs,
        disconnected_configs: gen.disconnected_configs,
        nodes: gen.nodes,
        complete: !gen.exhausted,
    }
}

/// Parallel generation: frontier nodes are independent units and results
/// merge in node order, so the output is identical for every thread count.
pub fn generate_configs_parallel(v: usize, frontier_depth: usize) -> Generated {
    let front = frontier(v, frontier_depth);
    let parts: Vec<Generated> = front
        .nodes
        .par_iter()
        .map(|blocks| expand_frontier_node(v, blocks))
        .collect();
    let mut out = Generated {
        configs: Vec::new(),
        disconnected_configs: Vec::new(),
        nodes: 0,
        complete: true,
    };
    for p in parts {
        out.configs.extend(p.configs);
        out.disconnected_configs.extend(p.disconnected_configs);
        out.nodes += p.nodes;
        out.complete &= p.complete;
    }
    out
}

/// The configuration (or dual pair of configurations) carried by a Levi
/// graph: each color class in turn as the point set, one configuration only
/// when a color-swapping automorphism makes the graph self-dual.
pub fn configs_from_graph(levi: &LeviGraph) -> Vec<Configuration> {
    let a = levi.configuration();
    let b = a.dual();
    if classify::config_cert(&a) == classify::config_cert(&b) {
        vec![a]
    } else {
        vec![a, b]
    }
}

/// One canonical Levi graph per isomorphism class of connected cubic
/// bipartite girth-6 graphs on 2v vertices, in deterministic order. Dual
/// pairs of configurations collapse onto one graph.
pub fn generate_levi_graphs(v: usize) -> Vec<LeviGraph> {
    let generated = generate_configs(v, None);
    let mut seen: std::collections::HashSet<Cert> = std::collections::HashSet::new();
    let mut out = Vec::new();
    for cfg in &generated.configs {
        let levi = cfg.levi_graph();
        let plain = classify::plain_canon(&levi);
        if !seen.insert(plain.cert) {
            continue;
        }
        // Emit the graph-class representative in colored-canonical form of
        // the lexicographically smaller of the two color readings.
        let dual = cfg.dual();
        let (rep, canon) = {
            let ca = classify::colored_canon(&levi);
            let dl = dual.levi_graph();
            let cb = classify::colored_canon(&dl);
            if cb.cert < ca.cert {
                (dl, cb)
            } else {
                (levi, ca)
            }
        };
        let relabeled = rep.graph().relabel(&canon.relabeling);
        out.push(LeviGraph::new(relabeled, v).expect("canonical relabeling keeps classes"));
    }
    out
}
