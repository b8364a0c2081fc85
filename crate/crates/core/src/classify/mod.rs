//! Canonical forms, automorphism groups, and the census property
//! predicates: self-duality, polarity, point- and flag-transitivity, cyclic
//! symmetry, and blocking-set freeness.

pub mod canon;
pub mod perm;

pub use canon::{canonical_form, canonical_form_cells, CanonResult, Cert};

use serde::{Deserialize, Serialize};

use crate::config::Configuration;
use crate::levi::LeviGraph;

/// Canonical certificate of a configuration: its Levi graph canonized with
/// the point/block classes respected. Equal certs mean isomorphic
/// configurations.
pub fn config_cert(cfg: &Configuration) -> Cert {
    colored_canon(&cfg.levi_graph()).cert
}

/// Canonical form of a Levi graph respecting the point/block split.
pub fn colored_canon(levi: &LeviGraph) -> CanonResult {
    let v = levi.v();
    let cells = vec![(0..v).collect::<Vec<_>>(), (v..2 * v).collect::<Vec<_>>()];
    canonical_form_cells(levi.graph(), &cells)
}

/// Canonical form of a Levi graph as a plain graph (classes may swap).
pub fn plain_canon(levi: &LeviGraph) -> CanonResult {
    canonical_form(levi.graph())
}

/// Automorphism data of a Levi graph. `generators`/`order` describe the
/// full graph group (configuration automorphisms plus anti-automorphisms
/// when the graph is connected); the color-preserving data describe the
/// configuration's own automorphism group.
#[derive(Debug, Clone)]
pub struct AutGroupInfo {
    pub generators: Vec<Vec<usize>>,
    pub order: u128,
    pub color_generators: Vec<Vec<usize>>,
    pub color_order: u128,
    pub point_orbits: Vec<Vec<usize>>,
    pub block_orbits: Vec<Vec<usize>>,
    /// Orbits of incident (point, block) pairs under the color-preserving
    /// group, as indices into the Levi graph's edge list.
    pub flag_orbits: Vec<Vec<usize>>,
}

pub fn aut_group(levi: &LeviGraph) -> AutGroupInfo {
    let v = levi.v();
    let n = levi.n();
    let plain = plain_canon(levi);
    let colored = colored_canon(levi);
    let order = perm::group_order(n, &plain.generators);
    let color_order = perm::group_order(n, &colored.generators);
    let orbits_all = perm::orbits(n, &colored.generators);
    let point_orbits: Vec<Vec<usize>> = orbits_all
        .iter()
        .filter(|o| o[0] < v)
        .cloned()
        .collect();
    let block_orbits: Vec<Vec<usize>> = orbits_all
        .iter()
        .filter(|o| o[0] >= v)
        .map(|o| o.iter().map(|&b| b - v).collect())
        .collect();
    let g = levi.graph();
    let edge_act = |gi: usize, e: usize| {
        let gen = &colored.generators[gi];
        let (u, w) = g.edges()[e];
        g.edge_index(gen[u], gen[w]).expect("automorphism preserves edges")
    };
    let flag_orbits = perm::orbits_by(g.m(), colored.generators.len(), edge_act);
    AutGroupInfo {
        generators: plain.generators,
        order,
        color_generators: colored.generators,
        color_order,
        point_orbits,
        block_orbits,
        flag_orbits,
    }
}

/// The census predicates for one configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub connected: bool,
    pub self_dual: bool,
    pub self_polar: bool,
    pub point_transitive: bool,
    pub cyclic: bool,
    pub flag_transitive: bool,
    pub weakly_flag_transitive: bool,
    pub blocking_set_free: bool,
}

/// Computes all predicates. Weak flag-transitivity is read inclusively
/// (a flag-transitive configuration is in particular weakly
/// flag-transitive); parts of the literature additionally demand "not
/// flag-transitive", but the census columns need the inclusive reading.
pub fn predicates(cfg: &Configuration) -> Predicates {
    let levi = cfg.levi_graph();
    let connected = levi.is_connected();
    let self_dual = config_cert(cfg) == config_cert(&cfg.dual());
    let self_polar = self_dual && polarity(&levi).is_some();
    let colored = colored_canon(&levi);
    let v = levi.v();
    let point_orbit_count = perm::orbits(levi.n(), &colored.generators)
        .iter()
        .filter(|o| o[0] < v)
        .count();
    let point_transitive = point_orbit_count == 1;
    let g = levi.graph();
    let edge_act = |gens: &[Vec<usize>], gi: usize, e: usize| {
        let gen = &gens[gi];
        let (u, w) = g.edges()[e];
        g.edge_index(gen[u], gen[w]).expect("automorphism preserves edges")
    };
    let flag_transitive = perm::orbits_by(g.m(), colored.generators.len(), |gi, e| {
        edge_act(&colored.generators, gi, e)
    })
    .len()
        == 1;
    let weakly_flag_transitive = if connected {
        // Every automorphism of a connected Levi graph preserves or swaps
        // the classes, so the full graph group is exactly Aut plus the
        // anti-automorphisms.
        let plain = plain_canon(&levi);
        perm::orbits_by(g.m(), plain.generators.len(), |gi, e| {
            edge_act(&plain.generators, gi, e)
        })
        .len()
            == 1
    } else {
        false
    };
    let cyclic = point_transitive && has_regular_point_cycle(&levi, &colored.generators);
    let blocking_set_free = blocking_set(cfg).is_none();
    Predicates {
        connected,
        self_dual,
        self_polar,
        point_transitive,
        cyclic,
        flag_transitive,
        weakly_flag_transitive,
        blocking_set_free,
    }
}

/// Does some configuration automorphism act on the points as a single
/// v-cycle? Decided by enumerating the (small) color-preserving group.
fn has_regular_point_cycle(levi: &LeviGraph, color_gens: &[Vec<usize>]) -> bool {
    let v = levi.v();
    let elements = match perm::enumerate_group(levi.n(), color_gens, 2_000_000) {
        Some(e) => e,
        None => panic!("configuration automorphism group unexpectedly large"),
    };
    if elements.len() % v != 0 {
        return false;
    }
    elements.iter().any(|p| is_single_cycle(&p[..v]))
}

fn is_single_cycle(point_action: &[usize]) -> bool {
    // The cycle through 0 covers everything iff its length is v.
    let v = point_action.len();
    let mut steps = 1usize;
    let mut y = point_action[0];
    while y != 0 && steps <= v {
        y = point_action[y];
        steps += 1;
    }
    y == 0 && steps == v
}

/// Searches for a polarity: an involutory class-swapping automorphism of
/// the Levi graph. Backtracks directly over point-to-block pairings rather
/// than enumerating the group; involutions, when present, are found early.
/// Returns the full vertex permutation.
pub fn polarity(levi: &LeviGraph) -> Option<Vec<usize>> {
    let v = levi.v();
    let g = levi.graph();
    // Distance profiles are invariant under automorphisms; a point can only
    // pair with a block of equal profile.
    let profile: Vec<Vec<usize>> = (0..2 * v)
        .map(|u| {
            let mut d = g.distances(u);
            d.sort_unstable();
            d
        })
        .collect();
    let mut point_to_block = vec![usize::MAX; v];
    let mut block_to_point = vec![usize::MAX; v];
    fn rec(
        levi: &LeviGraph,
        profile: &[Vec<usize>],
        p: usize,
        point_to_block: &mut Vec<usize>,
        block_to_point: &mut Vec<usize>,
    ) -> bool {
        let v = levi.v();
        if p == v {
            return true;
        }
        let g = levi.graph();
        for b in 0..v {
            if block_to_point[b] != usize::MAX || profile[p] != profile[v + b] {
                continue;
            }
            // sigma(p) = v+b and sigma(v+b) = p; adjacency must commute with
            // sigma on every already-assigned pair.
            let ok = (0..p).all(|q| {
                let c = point_to_block[q];
                g.has_edge(p, v + c) == g.has_edge(q, v + b)
            });
            if !ok {
                continue;
            }
            point_to_block[p] = b;
            block_to_point[b] = p;
            if rec(levi, profile, p + 1, point_to_block, block_to_point) {
                return true;
            }
            point_to_block[p] = usize::MAX;
            block_to_point[b] = usize::MAX;
        }
        false
    }
    if !rec(levi, &profile, 0, &mut point_to_block, &mut block_to_point) {
        return None;
    }
    let mut sigma = vec![0usize; 2 * v];
    for p in 0..v {
        sigma[p] = v + point_to_block[p];
        sigma[v + point_to_block[p]] = p;
    }
    debug_assert!(g
        .edges()
        .iter()
        .all(|&(u, w)| g.has_edge(sigma[u], sigma[w])));
    Some(sigma)
}

/// Lexicographically least blocking set, if any: a point set meeting every
/// block but containing none entirely. Backtracking two-coloring with unit
/// propagation; point 0 is committed to the set, which is harmless because
/// the complement of a blocking set is a blocking set.
pub fn blocking_set(cfg: &Configuration) -> Option<Vec<usize>> {
    let v = cfg.v();
    let mut assign: Vec<Option<bool>> = vec![None; v];
    assign[0] = Some(true);
    fn propagate(cfg: &Configuration, assign: &mut [Option<bool>]) -> Option<Vec<usize>> {
        // Returns the list of points forced by the monochromatic-block rule,
        // or None on conflict.
        let mut forced = Vec::new();
        loop {
            let mut changed = false;
            for b in cfg.blocks() {
                let vals: Vec<Option<bool>> = b.iter().map(|&p| assign[p]).collect();
                let decided: Vec<bool> = vals.iter().flatten().copied().collect();
                if decided.len() == 3 && decided.iter().all(|&x| x == decided[0]) {
                    for &p in &forced {
                        assign[p] = None;
                    }
                    return None;
                }
                if decided.len() == 2 && decided[0] == decided[1] {
                    let idx = vals.iter().position(Option::is_none).unwrap();
                    let p = b[idx];
                    assign[p] = Some(!decided[0]);
                    forced.push(p);
                    changed = true;
                }
            }
            if !changed {
                return Some(forced);
            }
        }
    }
    fn rec(cfg: &Configuration, assign: &mut Vec<Option<bool>>) -> bool {
        let forced = match propagate(cfg, assign) {
            Some(f) => f,
            None => return false,
        };
        match assign.iter().position(Option::is_none) {
            None => true,
            Some(p) => {
                // Prefer membership so the first solution is set-lex least.
                for val in [true, false] {
                    assign[p] = Some(val);
                    if rec(cfg, assign) {
                        return true;
                    }
                    assign[p] = None;
                }
                for &q in &forced {
                    assign[q] = None;
                }
                false
            }
        }
    }
    if rec(cfg, &mut assign) {
        Some(
            (0..v)
                .filter(|&p| assign[p] == Some(true))
                .collect::<Vec<_>>(),
        )
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn fano_predicates_all_true() {
        let p = predicates(&construct::fano());
        assert!(p.connected);
        assert!(p.self_dual);
        assert!(p.self_polar);
        assert!(p.point_transitive);
        assert!(p.cyclic);
        assert!(p.flag_transitive);
        assert!(p.weakly_flag_transitive);
        assert!(p.blocking_set_free);
    }

    #[test]
    fn heawood_aut_orders() {
        let info = aut_group(&construct::heawood());
        assert_eq!(info.order, 336);
        assert_eq!(info.color_order, 168);
        assert_eq!(info.point_orbits.len(), 1);
        assert_eq!(info.block_orbits.len(), 1);
        assert_eq!(info.flag_orbits.len(), 1);
    }

    #[test]
    fn cyclic9_is_cyclic_and_point_transitive() {
        let c9 = construct::cyclic_config(9).unwrap();
        let p = predicates(&c9);
        assert!(p.cyclic);
        assert!(p.point_transitive);
        // Its Levi graph is vertex-transitive as a plain graph.
        let levi = c9.levi_graph();
        let plain = plain_canon(&levi);
        assert_eq!(perm::orbits(levi.n(), &plain.generators).len(), 1);
    }

    #[test]
    fn pappus_is_point_transitive_not_cyclic() {
        let p = predicates(&construct::pappus());
        assert!(p.point_transitive);
        assert!(!p.cyclic);
        assert!(p.flag_transitive);
        // Distinct from the cyclic 9_3.
        assert_ne!(
            config_cert(&construct::pappus()),
            config_cert(&construct::cyclic_config(9).unwrap())
        );
    }

    #[test]
    fn dual_is_involution_up_to_iso() {
        for cfg in [
            construct::fano(),
            construct::pappus(),
            construct::cyclic_config(11).unwrap(),
        ] {
            assert_eq!(config_cert(&cfg.dual().dual()), config_cert(&cfg));
        }
    }

    #[test]
    fn fano_has_no_blocking_set() {
        assert_eq!(blocking_set(&construct::fano()), None);
    }

    #[test]
    fn cyclic9_blocking_set_and_complement() {
        let c9 = construct::cyclic_config(9).unwrap();
        let bs = blocking_set(&c9).expect("9_3 configurations have blocking sets");
        for b in c9.blocks() {
            let inside = b.iter().filter(|p| bs.contains(p)).count();
            assert!(inside >= 1 && inside <= 2, "block {b:?} vs {bs:?}");
        }
        // The complement is a blocking set too.
        let comp: Vec<usize> = (0..9).filter(|p| !bs.contains(p)).collect();
        for b in c9.blocks() {
            let inside = b.iter().filter(|p| comp.contains(p)).count();
            assert!(inside >= 1 && inside <= 2);
        }
    }

    #[test]
    fn polarity_found_for_fano() {
        let sigma = polarity(&construct::heawood()).expect("fano is self-polar");
        // Involution that swaps the classes.
        for u in 0..14 {
            assert_eq!(sigma[sigma[u]], u);
            assert_eq!(u < 7, sigma[u] >= 7);
        }
    }
}
