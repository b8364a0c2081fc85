//! Shared oracles and reference data for the acceptance suite. Everything
//! here is deliberately independent of the generation/search code it is
//! used to check.

use std::collections::HashSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use symcfg::classify::{self, Cert};
use symcfg::config::Configuration;
use symcfg::graph::Graph;
use symcfg::levi::LeviGraph;

/// Hand-entered edge list of the Levi graph of the stitched 21_3 built from
/// three Heawood copies, transcribed independently from a published drawing
/// of the construction. Vertices are 1-based; odd ids are point (black)
/// vertices, even ids block (white) vertices. The last three edges are the
/// ring joins.
pub const REFERENCE_21_EDGES: [(usize, usize); 63] = [
    (1, 2),
    (1, 14),
    (2, 3),
    (3, 8),
    (4, 5),
    (4, 13),
    (5, 6),
    (6, 7),
    (7, 8),
    (9, 10),
    (9, 14),
    (10, 11),
    (12, 13),
    (7, 14),
    (2, 5),
    (3, 10),
    (6, 11),
    (4, 9),
    (1, 12),
    (8, 13),
    (15, 16),
    (15, 28),
    (17, 22),
    (18, 19),
    (18, 27),
    (19, 20),
    (20, 21),
    (21, 22),
    (23, 24),
    (23, 28),
    (24, 25),
    (25, 26),
    (26, 27),
    (21, 28),
    (16, 19),
    (17, 24),
    (20, 25),
    (18, 23),
    (15, 26),
    (22, 27),
    (29, 30),
    (29, 42),
    (30, 31),
    (31, 36),
    (32, 33),
    (33, 34),
    (34, 35),
    (35, 36),
    (37, 38),
    (37, 42),
    (38, 39),
    (39, 40),
    (40, 41),
    (35, 42),
    (30, 33),
    (31, 38),
    (34, 39),
    (32, 37),
    (29, 40),
    (36, 41),
    (16, 41),
    (11, 32),
    (12, 17),
];

/// The reference graph as a Levi graph: black vertices become points
/// 0..21, white vertices blocks 21..42.
pub fn reference_21_levi() -> LeviGraph {
    let map = |i: usize| {
        if i % 2 == 1 {
            (i - 1) / 2
        } else {
            20 + i / 2
        }
    };
    let edges: Vec<(usize, usize)> = REFERENCE_21_EDGES
        .iter()
        .map(|&(a, b)| (map(a), map(b)))
        .collect();
    let g = Graph::from_edges(42, &edges).expect("reference edges are simple");
    LeviGraph::new(g, 21).expect("reference graph is a valid Levi graph")
}

/// Naive star-fixed oracle for the number of connected v_3 configurations:
/// every configuration can be labeled so that point 0's blocks are exactly
/// {0,1,2}, {0,3,4}, {0,5,6}; enumerate all completions by lexicographically
/// increasing blocks on points 1..v, then deduplicate by canonical form.
/// Independent of the canonical-augmentation generator.
pub fn oracle_connected_certs(v: usize) -> HashSet<Cert> {
    assert!(v >= 7, "the fixed star needs seven points");
    let star: [[usize; 3]; 3] = [[0, 1, 2], [0, 3, 4], [0, 5, 6]];
    let mut deg = vec![0u8; v];
    let mut pair = vec![false; v * v];
    let mark = |a: usize, b: usize, pair: &mut Vec<bool>| {
        pair[a * v + b] = true;
        pair[b * v + a] = true;
    };
    for b in star {
        for p in b {
            deg[p] += 1;
        }
        mark(b[0], b[1], &mut pair);
        mark(b[0], b[2], &mut pair);
        mark(b[1], b[2], &mut pair);
    }
    let mut blocks: Vec<[usize; 3]> = star.to_vec();
    let mut certs = HashSet::new();

    fn rec(
        v: usize,
        min_block: [usize; 3],
        deg: &mut Vec<u8>,
        pair: &mut Vec<bool>,
        blocks: &mut Vec<[usize; 3]>,
        certs: &mut HashSet<Cert>,
    ) {
        if blocks.len() == v {
            let raw: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
            let cfg = Configuration::new(v, &raw).expect("completion is valid");
            if cfg.is_connected() {
                certs.insert(classify::config_cert(&cfg));
            }
            return;
        }
        let remaining = v - blocks.len();
        if deg.iter().any(|&d| (3 - d) as usize > remaining) {
            return;
        }
        for a in min_block[0].max(1)..v {
            if deg[a] == 3 {
                continue;
            }
            for b in (a + 1)..v {
                if deg[b] == 3 || pair[a * v + b] {
                    continue;
                }
                for c in (b + 1)..v {
                    if deg[c] == 3 || pair[a * v + c] || pair[b * v + c] {
                        continue;
                    }
                    let cand = [a, b, c];
                    if cand < min_block {
                        continue;
                    }
                    for (x, y) in [(a, b), (a, c), (b, c)] {
                        pair[x * v + y] = true;
                        pair[y * v + x] = true;
                    }
                    for p in cand {
                        deg[p] += 1;
                    }
                    blocks.push(cand);
                    let next_min = [a, b, c + 1];
                    rec(v, next_min, deg, pair, blocks, certs);
                    blocks.pop();
                    for p in cand {
                        deg[p] -= 1;
                    }
                    for (x, y) in [(a, b), (a, c), (b, c)] {
                        pair[x * v + y] = false;
                        pair[y * v + x] = false;
                    }
                }
            }
        }
    }

    rec(v, [1, 2, 3], &mut deg, &mut pair, &mut blocks, &mut certs);
    certs
}

/// Random connected graph on `n` vertices with cycle rank `rank`, for the
/// tree-search agreement checks.
pub fn random_connected_graph(n: usize, rank: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let m = n - 1 + rank;
        let mut edges: HashSet<(usize, usize)> = HashSet::new();
        let mut guard = 0;
        while edges.len() < m && guard < 10_000 {
            guard += 1;
            let u = rng.gen_range(0..n);
            let w = rng.gen_range(0..n);
            if u != w {
                edges.insert((u.min(w), u.max(w)));
            }
        }
        let list: Vec<(usize, usize)> = edges.into_iter().collect();
        if list.len() != m {
            continue;
        }
        let g = Graph::from_edges(n, &list).expect("random edges are simple");
        if g.is_connected() {
            return g;
        }
    }
}

/// A toy ring graph: three small parts with odd cycle rank joined pairwise
/// by single edges. Each part is a triangle, a 4-cycle, or a K4 (ranks
/// 1, 1, 3), chosen by the rng.
pub fn toy_ring_graph(rng: &mut ChaCha8Rng) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut offsets = [0usize; 3];
    let mut total = 0usize;
    for part in 0..3 {
        offsets[part] = total;
        let shape = rng.gen_range(0..3u8);
        let base = total;
        match shape {
            0 => {
                edges.extend([(base, base + 1), (base + 1, base + 2), (base, base + 2)]);
                total += 3;
            }
            1 => {
                edges.extend([
                    (base, base + 1),
                    (base + 1, base + 2),
                    (base + 2, base + 3),
                    (base, base + 3),
                ]);
                total += 4;
            }
            _ => {
                for i in 0..4 {
                    for j in (i + 1)..4 {
                        edges.push((base + i, base + j));
                    }
                }
                total += 4;
            }
        }
    }
    let sizes: [usize; 3] = [
        offsets[1] - offsets[0],
        offsets[2] - offsets[1],
        total - offsets[2],
    ];
    for i in 0..3 {
        let j = (i + 1) % 3;
        let a = offsets[i] + rng.gen_range(0..sizes[i]);
        let b = offsets[j] + rng.gen_range(0..sizes[j]);
        edges.push((a, b));
    }
    Graph::from_edges(total, &edges).expect("toy ring is simple")
}
