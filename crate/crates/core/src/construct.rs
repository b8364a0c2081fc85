//! Named families and constructions: the Fano plane and Heawood graph, the
//! cyclic configurations generated by `{0, 1, 3}`, the three-way stitching
//! construction that produces non-upper-embeddable configurations, and
//! Martinetti extension/reduction.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::{Configuration, ValidationError};
use crate::levi::LeviGraph;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("order {0} must be odd and at least 7")]
    BadOrder(usize),
    #[error("stitch deletion {0:?} is not an incidence of its source")]
    BadDeletion((usize, usize)),
    #[error("martinetti step: {0}")]
    BadStep(String),
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

/// The unique `7_3` configuration.
pub fn fano() -> Configuration {
    let blocks: Vec<Vec<usize>> = [
        [0, 1, 3],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 6],
        [0, 4, 5],
        [1, 5, 6],
        [0, 2, 6],
    ]
    .iter()
    .map(|b| b.to_vec())
    .collect();
    Configuration::new(7, &blocks).expect("fano blocks are valid")
}

/// The Heawood graph: the Levi graph of the Fano plane.
pub fn heawood() -> LeviGraph {
    fano().levi_graph()
}

/// The Pappus configuration, one of the three `9_3` configurations: points
/// split into three rows of three, blocks `{a_i, b_j, c_k}` with
/// `i + j + k = 0 (mod 3)`.
pub fn pappus() -> Configuration {
    let mut blocks = Vec::new();
    for i in 0..3usize {
        for j in 0..3usize {
            let k = (6 - i - j) % 3;
            blocks.push(vec![i, 3 + j, 6 + k]);
        }
    }
    Configuration::new(9, &blocks).expect("pappus blocks are valid")
}

/// The cyclic configuration `v_3` with blocks `{m, m+1, m+3} (mod v)`.
pub fn cyclic_config(v: usize) -> Result<Configuration, ConstructError> {
    if v < 7 || v % 2 == 0 {
        return Err(ConstructError::BadOrder(v));
    }
    let blocks: Vec<Vec<usize>> = (0..v)
        .map(|m| vec![m, (m + 1) % v, (m + 3) % v])
        .collect();
    Ok(Configuration::new(v, &blocks)?)
}

/// The explicit dominating point set for `cyclic_config(v)`, size `(v-1)/2`:
/// `{0,1,4,5,...,v-5,v-4}` when `v = 1 (mod 4)`, and the even numbers below
/// `v` with `v-3` replaced by `v-1` when `v = 3 (mod 4)`. Together with the
/// induced tree it certifies upper embeddability in every orientation.
pub fn cyclic_dominating_set(v: usize) -> Result<Vec<usize>, ConstructError> {
    if v < 7 || v % 2 == 0 {
        return Err(ConstructError::BadOrder(v));
    }
    let s = if v % 4 == 1 {
        (0..=(v - 5) / 4).flat_map(|i| [4 * i, 4 * i + 1]).collect()
    } else {
        (0..=(v - 1) / 2)
            .filter(|&i| i != (v - 3) / 2)
            .map(|i| 2 * i)
            .collect()
    };
    Ok(s)
}

/// Edge deletions and joins for the stitching construction. `deletions[i]`
/// is a (point, block index) incidence of source `i`; deleting it leaves one
/// point vertex and one block vertex of valency 2 in that source, and the
/// construction joins the freed point of source `i` to the freed block of
/// source `i+1` cyclically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StitchPlan {
    pub deletions: [(usize, usize); 3],
}

impl StitchPlan {
    /// The default plan: delete each source's lexicographically first Levi
    /// edge, i.e. the incidence of point 0 with its lowest-index block.
    pub fn first_edge(sources: [&Configuration; 3]) -> StitchPlan {
        let deletions = sources.map(|c| (0usize, c.blocks_through(0)[0]));
        StitchPlan { deletions }
    }
}

/// Result of a stitch: the combined configuration plus the plan that
/// produced it and the parity of each source order (the non-embeddability
/// argument needs all three odd; an even source is legal but voids it).
#[derive(Debug, Clone)]
pub struct Stitched {
    pub config: Configuration,
    pub plan: StitchPlan,
    pub source_orders: [usize; 3],
    /// Joined incidences in the combined numbering: (point, block index).
    pub joins: [(usize, usize); 3],
}

impl Stitched {
    pub fn all_sources_odd(&self) -> bool {
        self.source_orders.iter().all(|w| w % 2 == 1)
    }
}

/// Joins three configurations into one of order `v1+v2+v3` by deleting one
/// incidence from each and reconnecting the freed vertices in a ring. With
/// all source orders odd, the result is never upper embeddable in any
/// orientation, which the ring-cut certificate machinery re-proves per
/// instance.
pub fn stitch(
    c1: &Configuration,
    c2: &Configuration,
    c3: &Configuration,
    plan: Option<StitchPlan>,
) -> Result<Stitched, ConstructError> {
    let sources = [c1, c2, c3];
    let plan = plan.unwrap_or_else(|| StitchPlan::first_edge([c1, c2, c3]));
    for (i, &(p, b)) in plan.deletions.iter().enumerate() {
        let cfg = sources[i];
        if p >= cfg.v() || b >= cfg.v() || !cfg.blocks()[b].contains(&p) {
            return Err(ConstructError::BadDeletion((p, b)));
        }
    }
    let offsets = [0, c1.v(), c1.v() + c2.v()];
    let total = c1.v() + c2.v() + c3.v();
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(total);
    let mut block_offsets = [0usize; 3];
    for (i, cfg) in sources.iter().enumerate() {
        block_offsets[i] = blocks.len();
        for b in cfg.blocks() {
            blocks.push(b.iter().map(|&p| p + offsets[i]).collect());
        }
    }
    let mut joins = [(0usize, 0usize); 3];
    for i in 0..3 {
        // Freed point of source i replaces the freed point of source i+1 in
        // the latter's damaged block.
        let j = (i + 1) % 3;
        let (pi, _) = plan.deletions[i];
        let (pj, bj) = plan.deletions[j];
        let freed_point = pi + offsets[i];
        let target_block = block_offsets[j] + bj;
        let slot = blocks[target_block]
            .iter()
            .position(|&p| p == pj + offsets[j])
            .expect("deletion checked above");
        blocks[target_block][slot] = freed_point;
        joins[i] = (freed_point, target_block);
    }
    let config = Configuration::new(total, &blocks)?;
    Ok(Stitched {
        config,
        plan,
        source_orders: [c1.v(), c2.v(), c3.v()],
        joins,
    })
}

/// One Martinetti extension step: two disjoint blocks of the parent, listed
/// so that `x[0]` and `y[0]` form the pair not covered by any parent block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MartinettiStep {
    pub x: [usize; 3],
    pub y: [usize; 3],
}

/// Replaces blocks `{x1,x2,x3}` and `{y1,y2,y3}` by `{x1,y1,z}`,
/// `{x2,x3,z}`, `{y2,y3,z}` through a new point `z = v`, yielding a
/// `(v+1)_3` configuration.
pub fn martinetti_extend(
    cfg: &Configuration,
    step: MartinettiStep,
) -> Result<Configuration, ConstructError> {
    let sorted = |t: [usize; 3]| {
        let mut s = t;
        s.sort_unstable();
        s
    };
    let (xs, ys) = (sorted(step.x), sorted(step.y));
    if !cfg.blocks().contains(&xs) || !cfg.blocks().contains(&ys) {
        return Err(ConstructError::BadStep(
            "both triples must be blocks of the parent".into(),
        ));
    }
    if xs.iter().any(|p| ys.contains(p)) {
        return Err(ConstructError::BadStep("triples must be disjoint".into()));
    }
    if cfg.pair_covered(step.x[0], step.y[0]) {
        return Err(ConstructError::BadStep(format!(
            "pair {{{}, {}}} is already covered",
            step.x[0], step.y[0]
        )));
    }
    let z = cfg.v();
    let mut blocks: Vec<Vec<usize>> = cfg
        .blocks()
        .iter()
        .filter(|&&b| b != xs && b != ys)
        .map(|b| b.to_vec())
        .collect();
    blocks.push(vec![step.x[0], step.y[0], z]);
    blocks.push(vec![step.x[1], step.x[2], z]);
    blocks.push(vec![step.y[1], step.y[2], z]);
    Ok(Configuration::new(z + 1, &blocks)?)
}

/// All connected `(v-1)_3` configurations obtained by reversing a Martinetti
/// step at some point `z` of `cfg`, in deterministic order (ascending `z`,
/// then the canonical order of the pairings of `z`'s three through-blocks).
///
/// A configuration with no such parent is irreducible.
pub fn martinetti_parents(cfg: &Configuration) -> Vec<Configuration> {
    let v = cfg.v();
    let mut parents = Vec::new();
    if v < 8 {
        return parents;
    }
    for z in 0..v {
        let through = cfg.blocks_through(z);
        // The three blocks through z, minus z itself: three disjoint pairs.
        let pairs: Vec<[usize; 2]> = through
            .iter()
            .map(|&bi| {
                let b = cfg.blocks()[bi];
                let mut rest = b.iter().copied().filter(|&p| p != z);
                [rest.next().unwrap(), rest.next().unwrap()]
            })
            .collect();
        // Choose which block was {x1, y1, z} (index i), then which endpoint
        // of its pair is x1 and which remaining pair joins it.
        for i in 0..3 {
            let [a, b] = pairs[i];
            let j = (i + 1) % 3;
            let k = (i + 2) % 3;
            for (x1, y1) in [(a, b), (b, a)] {
                let xt = [x1, pairs[j][0], pairs[j][1]];
                let yt = [y1, pairs[k][0], pairs[k][1]];
                if let Some(parent) = try_reverse(cfg, z, through, xt, yt) {
                    parents.push(parent);
                }
            }
        }
    }
    parents
}

pub fn is_reducible(cfg: &Configuration) -> bool {
    !martinetti_parents(cfg).is_empty()
}

/// Builds the candidate parent: drop the three blocks through `z`, delete
/// point `z`, restore blocks `xt` and `yt`. Returns it only if it validates
/// and is connected.
fn try_reverse(
    cfg: &Configuration,
    z: usize,
    through: [usize; 3],
    xt: [usize; 3],
    yt: [usize; 3],
) -> Option<Configuration> {
    // The restored pairs {x1,x2}, {x1,x3}, {y1,y2}, {y1,y3} must be new;
    // {x2,x3} and {y2,y3} were covered by the dropped blocks themselves.
    for (p, q) in [(xt[0], xt[1]), (xt[0], xt[2]), (yt[0], yt[1]), (yt[0], yt[2])] {
        if covered_outside(cfg, p, q, &through) {
            return None;
        }
    }
    let relabel = |p: usize| if p > z { p - 1 } else { p };
    let mut blocks: Vec<Vec<usize>> = cfg
        .blocks()
        .iter()
        .enumerate()
        .filter(|(i, _)| !through.contains(i))
        .map(|(_, b)| b.iter().map(|&p| relabel(p)).collect())
        .collect();
    blocks.push(xt.iter().map(|&p| relabel(p)).collect());
    blocks.push(yt.iter().map(|&p| relabel(p)).collect());
    let parent = Configuration::new(cfg.v() - 1, &blocks).ok()?;
    parent.is_connected().then_some(parent)
}

fn covered_outside(cfg: &Configuration, p: usize, q: usize, skip: &[usize; 3]) -> bool {
    cfg.blocks()
        .iter()
        .enumerate()
        .any(|(i, b)| !skip.contains(&i) && b.contains(&p) && b.contains(&q))
}
