//! Spanning-tree searches for Jungerman's upper-embeddability criterion:
//! a connected graph embeds with a single face iff it has a spanning tree
//! each of whose co-tree components has an even number of edges.
//!
//! `bruteforce` enumerates spanning trees by deletion-contraction and can
//! refute (no valid tree exists) when it runs to completion; `randomized`
//! is a one-sided seeded heuristic that only ever finds trees.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::levi::LeviGraph;
use crate::tree::{cotree_components, CotreeComponent, SpanningTree, UnionFind};

/// Outcome of the exhaustive search. `Refuted` is only reported when every
/// spanning tree was covered (enumerated or soundly pruned); hitting the
/// node limit is reported as such and never as a refutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeSearch {
    Found(SpanningTree),
    Refuted { nodes: u64 },
    LimitReached { nodes: u64 },
}

impl TreeSearch {
    pub fn found(&self) -> Option<&SpanningTree> {
        match self {
            TreeSearch::Found(t) => Some(t),
            _ => None,
        }
    }
}

/// Per-point co-tree valencies and co-tree components for a Levi graph.
#[derive(Debug, Clone)]
pub struct CotreeReport {
    pub components: Vec<CotreeComponent>,
    pub point_valencies: Vec<usize>,
}

impl CotreeReport {
    pub fn all_even(&self) -> bool {
        self.components.iter().all(|c| c.edge_count % 2 == 0)
    }
}

pub fn cotree_report(levi: &LeviGraph, tree: &SpanningTree) -> CotreeReport {
    let g = levi.graph();
    let tree_deg = tree.degrees(g);
    let point_valencies = (0..levi.v()).map(|p| 3 - tree_deg[p]).collect();
    CotreeReport {
        components: cotree_components(g, tree),
        point_valencies,
    }
}

/// True iff every point vertex has even valency in the co-tree of `tree`;
/// such a tree certifies upper embeddability in every orientation of
/// triples.
pub fn has_even_point_cotree_valencies(levi: &LeviGraph, tree: &SpanningTree) -> bool {
    cotree_report(levi, tree).point_valencies.iter().all(|&d| d % 2 == 0)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Undecided,
    Tree,
    Cotree,
}

/// Search state, cloned at each branch. The co-tree union-find tracks, per
/// component root, its edge count and the number of endpoint slots still
/// held by undecided edges; a component whose slots hit zero is frozen, and
/// a frozen component with odd edge count kills the whole branch.
#[derive(Clone)]
struct State {
    state: Vec<EdgeState>,
    tree_edges: Vec<usize>,
    contract: UnionFind,
    cotree: UnionFind,
    ecnt: Vec<usize>,
    slots: Vec<usize>,
}

impl State {
    fn new(g: &Graph) -> Self {
        State {
            state: vec![EdgeState::Undecided; g.m()],
            tree_edges: Vec::with_capacity(g.n() - 1),
            contract: UnionFind::new(g.n()),
            cotree: UnionFind::new(g.n()),
            ecnt: vec![0; g.n()],
            slots: (0..g.n()).map(|u| g.degree(u)).collect(),
        }
    }

    /// Marks `e` as a co-tree edge. Returns false if a frozen component
    /// comes out odd.
    fn decide_cotree(&mut self, g: &Graph, e: usize) -> bool {
        let (u, w) = g.edges()[e];
        self.state[e] = EdgeState::Cotree;
        let ru = self.cotree.find(u);
        self.slots[ru] -= 1;
        let rw = self.cotree.find(w);
        self.slots[rw] -= 1;
        if ru == rw {
            self.ecnt[ru] += 1;
        } else {
            self.cotree.union(ru, rw);
            let r = self.cotree.find(ru);
            let other = if r == ru { rw } else { ru };
            self.slots[r] += self.slots[other];
            self.ecnt[r] += self.ecnt[other] + 1;
        }
        let r = self.cotree.find(u);
        !(self.slots[r] == 0 && self.ecnt[r] % 2 == 1)
    }

    /// Marks `e` as a tree edge, contracting it. Returns false on a frozen
    /// odd co-tree component.
    fn decide_tree(&mut self, g: &Graph, e: usize) -> bool {
        let (u, w) = g.edges()[e];
        self.state[e] = EdgeState::Tree;
        self.tree_edges.push(e);
        self.contract.union(u, w);
        for x in [u, w] {
            let r = self.cotree.find(x);
            self.slots[r] -= 1;
            if self.slots[r] == 0 && self.ecnt[r] % 2 == 1 {
                return false;
            }
        }
        true
    }
}

struct Bruteforce<'a> {
    g: &'a Graph,
    nodes: u64,
    limit: Option<u64>,
    hit_limit: bool,
    found: Option<Vec<usize>>,
}

impl<'a> Bruteforce<'a> {
    /// Is the graph on Tree + Undecided edges (minus `skip`) still connected?
    fn still_connected(&self, st: &State, skip: usize) -> bool {
        let n = self.g.n();
        let mut uf = UnionFind::new(n);
        let mut comps = n;
        for (e, &(u, w)) in self.g.edges().iter().enumerate() {
            if e == skip || st.state[e] == EdgeState::Cotree {
                continue;
            }
            if uf.union(u, w) {
                comps -= 1;
            }
        }
        comps == 1
    }

    fn run(&mut self, st: &mut State) {
        if self.found.is_some() || self.hit_limit {
            return;
        }
        self.nodes += 1;
        if let Some(limit) = self.limit {
            if self.nodes > limit {
                self.hit_limit = true;
                return;
            }
        }
        // Forced co-tree moves: undecided self-loops of the contracted graph.
        let mut branch_edge = None;
        for e in 0..self.g.m() {
            if st.state[e] != EdgeState::Undecided {
                continue;
            }
            let (u, w) = self.g.edges()[e];
            if st.contract.find(u) == st.contract.find(w) {
                if !st.decide_cotree(self.g, e) {
                    return;
                }
            } else {
                branch_edge = Some(e);
                break;
            }
        }
        let e = match branch_edge {
            Some(e) => e,
            None => {
                // All edges decided; the chosen edges span (connectivity was
                // maintained), and no frozen component was odd.
                debug_assert_eq!(st.tree_edges.len(), self.g.n() - 1);
                self.found = Some(st.tree_edges.clone());
                return;
            }
        };
        // Branch 1: e in the tree.
        let mut with_e = st.clone();
        if with_e.decide_tree(self.g, e) {
            self.run(&mut with_e);
        }
        if self.found.is_some() || self.hit_limit {
            return;
        }
        // Branch 2: e in the co-tree, allowed only if the rest stays
        // connected.
        if self.still_connected(st, e) {
            let mut without_e = st.clone();
            if without_e.decide_cotree(self.g, e) {
                self.run(&mut without_e);
            }
        }
    }
}

/// Exhaustive deletion-contraction search for a spanning tree with all-even
/// co-tree components. Requires a connected graph.
pub fn bruteforce(g: &Graph, node_limit: Option<u64>) -> TreeSearch {
    assert!(g.is_connected(), "tree search needs a connected graph");
    let mut bf = Bruteforce {
        g,
        nodes: 0,
        limit: node_limit,
        hit_limit: false,
        found: None,
    };
    let mut st = State::new(g);
    bf.run(&mut st);
    match bf.found {
        Some(edges) => {
            let tree = SpanningTree::new(g, edges).expect("search yields spanning trees");
            debug_assert!(cotree_components(g, &tree)
                .iter()
                .all(|c| c.edge_count % 2 == 0));
            TreeSearch::Found(tree)
        }
        None if bf.hit_limit => TreeSearch::LimitReached { nodes: bf.nodes },
        None => TreeSearch::Refuted { nodes: bf.nodes },
    }
}

fn odd_component_count(g: &Graph, tree: &SpanningTree) -> usize {
    cotree_components(g, tree)
        .iter()
        .filter(|c| c.edge_count % 2 == 1)
        .count()
}

fn random_tree(g: &Graph, rng: &mut impl Rng) -> SpanningTree {
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.shuffle(rng);
    let mut uf = UnionFind::new(g.n());
    let mut picked = Vec::with_capacity(g.n() - 1);
    for e in order {
        let (u, w) = g.edges()[e];
        if uf.union(u, w) {
            picked.push(e);
        }
    }
    SpanningTree::new(g, picked).expect("connected graph has a spanning tree")
}

/// Path between `u` and `w` inside the tree, as edge indices.
fn tree_path(g: &Graph, tree: &SpanningTree, u: usize, w: usize) -> Vec<usize> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()];
    for &e in tree.edge_indices() {
        let (a, b) = g.edges()[e];
        adj[a].push((b, e));
        adj[b].push((a, e));
    }
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.n()];
    let mut stack = vec![u];
    let mut seen = vec![false; g.n()];
    seen[u] = true;
    while let Some(x) = stack.pop() {
        if x == w {
            break;
        }
        for &(y, e) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some((x, e));
                stack.push(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut x = w;
    while let Some((p, e)) = prev[x] {
        path.push(e);
        x = p;
    }
    path
}

/// Seeded heuristic: random spanning trees with greedy edge-swap repair.
/// One-sided — a `None` answer proves nothing. `budget` counts tree
/// evaluations; identical seeds give identical results.
pub fn randomized(g: &Graph, budget: u64, seed: u64) -> Option<SpanningTree> {
    assert!(g.is_connected(), "tree search needs a connected graph");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut evals = 0u64;
    while evals < budget {
        let mut tree = random_tree(g, &mut rng);
        evals += 1;
        let mut odd = odd_component_count(g, &tree);
        if odd == 0 {
            return Some(tree);
        }
        // Greedy repair: swap a co-tree edge with a tree edge on its
        // fundamental cycle whenever that lowers the odd-component count.
        'improve: loop {
            let cotree = tree.cotree_edge_indices(g);
            for &ce in &cotree {
                let (u, w) = g.edges()[ce];
                for pe in tree_path(g, &tree, u, w) {
                    let mut edges: Vec<usize> = tree
                        .edge_indices()
                        .iter()
                        .copied()
                        .filter(|&e| e != pe)
                        .collect();
                    edges.push(ce);
                    let cand = SpanningTree::new(g, edges).expect("cycle swap keeps a tree");
                    if evals >= budget {
                        return None;
                    }
                    evals += 1;
                    let cand_odd = odd_component_count(g, &cand);
                    if cand_odd < odd {
                        tree = cand;
                        odd = cand_odd;
                        if odd == 0 {
                            return Some(tree);
                        }
                        continue 'improve;
                    }
                }
            }
            break;
        }
    }
    None
}
