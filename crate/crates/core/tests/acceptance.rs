//! Acceptance suite: one test per verification gate, each printing a
//! pass/fail line (visible with `cargo test -- --nocapture`). These pin the
//! published census values, the certificate machinery, and the oracle
//! cross-checks at desk scale.

mod common;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symcfg::classify::{self, Cert};
use symcfg::config::Configuration;
use symcfg::construct;
use symcfg::embed::{self, TreeSearch, VerdictPolicy, VerdictStatus, Witness};
use symcfg::enumerate::{self, table};
use symcfg::rotation::RotationSystem;

/// Shared generation cache so the heavy orders are enumerated once per run.
fn configs(v: usize) -> &'static Vec<Configuration> {
    static CACHE: OnceLock<std::sync::Mutex<BTreeMap<usize, &'static Vec<Configuration>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| std::sync::Mutex::new(BTreeMap::new()));
    let mut map = cache.lock().unwrap();
    if let Some(&v_ref) = map.get(&v) {
        return v_ref;
    }
    let generated = enumerate::generate_configs(v, None);
    assert!(generated.complete, "generation at v={v} must run to completion");
    let leaked: &'static Vec<Configuration> = Box::leak(Box::new(generated.configs));
    map.insert(v, leaked);
    leaked
}

fn pass(name: &str) {
    eprintln!("acceptance: {name} ... PASS");
}

#[test]
fn criterion_1_table_reproduction() {
    let expected: [[u64; 9]; 6] = [
        [1, 1, 1, 1, 1, 1, 1, 1, 0],
        [1, 1, 1, 1, 1, 1, 1, 0, 0],
        [3, 3, 3, 2, 1, 1, 1, 0, 0],
        [10, 10, 10, 2, 1, 1, 1, 0, 0],
        [31, 25, 25, 1, 1, 0, 0, 0, 0],
        [229, 95, 95, 4, 3, 1, 1, 0, 0],
    ];
    let rows = table::table(12, None);
    for (row, want) in rows.iter().zip(expected.iter()) {
        assert!(row.complete, "row {} incomplete", row.v);
        assert_eq!(row.counts(), *want, "row {} mismatch", row.v);
    }
    pass("table rows 7..12 reproduce the census exactly");
}

#[test]
fn criterion_1b_row_13() {
    let mut known = BTreeMap::new();
    for v in 7..=12 {
        known.insert(v, configs(v).len() as u64);
    }
    let row = table::table_row(13, None, &known);
    assert!(row.complete);
    assert_eq!(row.counts(), [2036, 366, 365, 2, 2, 1, 1, 1, 0]);
    pass("table row 13 reproduces the census exactly (a=2036, b=366, c=365)");
}

#[test]
fn criterion_2_small_orders_every_orientation() {
    let policy = VerdictPolicy::default();
    let mut total = 0usize;
    for v in [7usize, 9, 11] {
        for cfg in configs(v) {
            total += 1;
            let verdict = embed::verdict(cfg, &policy).expect("odd connected input");
            assert_eq!(
                verdict.status,
                VerdictStatus::EveryOrientation,
                "configuration of order {v} not certified"
            );
            match verdict.witness {
                Witness::DominatingTree { certificate } => {
                    embed::validate_certificate(cfg, &certificate).unwrap();
                    assert!(embed::has_even_point_cotree_valencies(
                        &cfg.levi_graph(),
                        &certificate.tree
                    ));
                }
                other => panic!("expected a dominating-tree witness, got {other:?}"),
            }
        }
    }
    assert_eq!(total, 1 + 3 + 31);
    // Exhaustive per-orientation confirmation at v = 7 and v = 9.
    for v in [7usize, 9] {
        for cfg in configs(v) {
            let sweep = embed::sweep_orientations(&cfg.levi_graph(), 19).unwrap();
            assert_eq!(sweep.orientations_checked, 1 << (v - 1));
            assert!(
                sweep.all_succeeded(),
                "an orientation of an order-{v} configuration failed"
            );
        }
    }
    pass("all 35 configurations at v in {7,9,11} certified for every orientation; v in {7,9} also swept exhaustively");
}

#[test]
fn criterion_3_stitched_family() {
    let fano = construct::fano();
    let stitched = construct::stitch(&fano, &fano, &fano, None).unwrap();
    let levi = stitched.config.levi_graph();
    // Isomorphic to the hand-entered reference drawing, as colored graphs.
    let reference = common::reference_21_levi();
    assert_eq!(
        classify::colored_canon(&levi).cert,
        classify::colored_canon(&reference).cert,
        "stitched 21_3 does not match the reference drawing"
    );
    let cert = embed::ring_cut_certificate(levi.graph()).expect("ring cut exists");
    for part in &cert.parts {
        assert_eq!(part.vertices.len(), 14);
        assert_eq!(part.edge_count, 20);
    }
    embed::validate_ring_cut(levi.graph(), &cert).unwrap();
    // Larger stitches: orders 23 and 25 from cyclic 9_3 and 11_3.
    for w in [9usize, 11] {
        let head = construct::cyclic_config(w).unwrap();
        let s = construct::stitch(&head, &fano, &fano, None).unwrap();
        assert_eq!(s.config.v(), w + 14);
        let levi = s.config.levi_graph();
        let cert = embed::ring_cut_certificate(levi.graph())
            .unwrap_or_else(|| panic!("stitch at v={} has no ring cut", w + 14));
        embed::validate_ring_cut(levi.graph(), &cert).unwrap();
    }
    pass("stitched 21_3 matches the reference drawing and carries a 14/20 ring cut; stitches at v=23,25 certified");
}

#[test]
fn criterion_4_cyclic_dominating_sets_to_99() {
    for v in (7..=99).step_by(2) {
        let cfg = construct::cyclic_config(v).unwrap();
        let s = construct::cyclic_dominating_set(v).unwrap();
        assert_eq!(s.len(), (v - 1) / 2);
        let cert = embed::certificate_from_set(&cfg, &s)
            .unwrap_or_else(|e| panic!("explicit set fails at v={v}: {e}"));
        embed::validate_certificate(&cfg, &cert).unwrap();
    }
    pass("explicit dominating sets certify cyclic configurations for all odd 7 <= v <= 99");
}

#[test]
fn criterion_5_disconnected_counts() {
    let mut counts = BTreeMap::new();
    for v in 7..=12 {
        counts.insert(v, configs(v).len() as u64);
    }
    assert_eq!(
        counts.values().copied().collect::<Vec<u64>>(),
        vec![1, 1, 3, 10, 31, 229]
    );
    let expected = [(14, 1u64), (15, 1), (16, 4), (17, 13), (18, 47), (19, 290)];
    for (v, want) in expected {
        assert_eq!(
            table::count_disconnected(v, &counts),
            want,
            "disconnected count at v={v}"
        );
    }
    pass("disconnected counts for v=14..19 reproduce column i (1, 1, 4, 13, 47, 290)");
}

#[test]
fn criterion_6_weak_flag_transitivity_collapses() {
    for v in 7..=12 {
        for cfg in configs(v) {
            let p = classify::predicates(cfg);
            assert_eq!(
                p.weakly_flag_transitive, p.flag_transitive,
                "weak/strong flag-transitivity differ at v={v}"
            );
        }
    }
    pass("weakly-flag-transitive = flag-transitive over every configuration with v <= 12");
}

#[test]
fn criterion_7a_generator_matches_naive_oracle() {
    for v in 7..=10 {
        let oracle = common::oracle_connected_certs(v);
        let generated: std::collections::HashSet<Cert> = configs(v)
            .iter()
            .map(classify::config_cert)
            .collect();
        assert_eq!(generated.len(), configs(v).len(), "duplicate classes at v={v}");
        assert_eq!(oracle, generated, "oracle disagrees at v={v}");
    }
    pass("canonical-augmentation generator matches the naive star-fixed oracle for v <= 10");
}

#[test]
fn criterion_7b_tree_search_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut refutations = 0usize;
    for i in 0..50 {
        let n = rng.gen_range(6..=14);
        let rank = rng.gen_range(1..=5);
        let g = common::random_connected_graph(n, rank, &mut rng);
        let exact = embed::jungerman::bruteforce(&g, None);
        let heuristic = embed::jungerman::randomized(&g, 20_000, i);
        match exact {
            TreeSearch::Found(_) => {
                assert!(heuristic.is_some(), "heuristic missed a tree on graph {i}")
            }
            TreeSearch::Refuted { .. } => {
                refutations += 1;
                assert!(heuristic.is_none(), "heuristic found a tree the exhaustive search refuted");
            }
            TreeSearch::LimitReached { .. } => unreachable!("no limit was set"),
        }
    }
    pass(&format!(
        "heuristic and exhaustive tree searches agree on 50 random graphs ({refutations} refutations among them)"
    ));
}

#[test]
fn criterion_7c_ring_cuts_imply_refutation() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for i in 0..20 {
        let g = common::toy_ring_graph(&mut rng);
        assert!(g.n() <= 14);
        let cert = embed::ring_cut_certificate(&g)
            .unwrap_or_else(|| panic!("toy ring graph {i} has no certificate"));
        embed::validate_ring_cut(&g, &cert).unwrap();
        match embed::jungerman::bruteforce(&g, None) {
            TreeSearch::Refuted { .. } => {}
            other => panic!("toy ring graph {i} was not refuted: {other:?}"),
        }
    }
    pass("ring-cut certificates imply exhaustive tree refutation on 20 toy ring graphs");
}

#[test]
fn criterion_7d_irreducible_census() {
    let cyclic9 = classify::config_cert(&construct::cyclic_config(9).unwrap());
    let pappus = classify::config_cert(&construct::pappus());
    let policy = VerdictPolicy::default();
    for v in [9usize, 11, 13] {
        let mut irreducible: Vec<&Configuration> = Vec::new();
        for cfg in configs(v) {
            if !construct::is_reducible(cfg) {
                irreducible.push(cfg);
            }
        }
        let mut certs: Vec<Cert> = irreducible.iter().map(|c| classify::config_cert(c)).collect();
        certs.sort();
        let mut expected = vec![classify::config_cert(&construct::cyclic_config(v).unwrap())];
        if v == 9 {
            expected.push(pappus.clone());
        }
        expected.sort();
        assert_eq!(certs, expected, "irreducible set at v={v}");
        if v == 9 {
            assert!(certs.contains(&cyclic9));
        }
        for cfg in irreducible {
            let verdict = embed::verdict(cfg, &policy).unwrap();
            assert_eq!(verdict.status, VerdictStatus::EveryOrientation);
        }
    }
    pass("irreducible configurations are exactly {Pappus, cyclic} at v=9 and {cyclic} at v=11,13, all certified");
}

/// Extended-budget census point beyond the default gate; run with
/// `cargo test -p symcfg --test acceptance -- --ignored` (several minutes).
#[test]
#[ignore]
fn extended_row_14_connected_count() {
    let generated = enumerate::generate_configs_parallel(14, 5);
    assert!(generated.complete);
    assert_eq!(generated.configs.len(), 21_399);
    // The single disconnected order-14 configuration is the 7_3 + 7_3 pair,
    // matching the disconnected-count identity.
    assert_eq!(generated.disconnected, 1);
    pass("row 14 connected count a = 21,399 and the lone disconnected pair reproduced");
}

#[test]
fn criterion_8_invariant_suites() {
    // Euler and face-trace invariants on 1000 random rotation systems per
    // order.
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for v in [7usize, 9, 11] {
        let levi = construct::cyclic_config(v).unwrap().levi_graph();
        for _ in 0..1000 {
            let flips: Vec<bool> = (0..2 * v).map(|_| rng.gen_bool(0.5)).collect();
            let rot = RotationSystem::from_flips(&levi, &flips);
            let trace = levi.trace_faces(&rot);
            let mut darts: Vec<usize> = trace.faces.iter().flatten().copied().collect();
            darts.sort_unstable();
            assert_eq!(darts, (0..6 * v).collect::<Vec<_>>(), "dart partition at v={v}");
            assert!(trace.genus <= (v + 1) / 2);
            assert_eq!(trace.face_count() % 2, v % 2, "face parity at v={v}");
        }
    }
    // Canonical-form relabeling invariance on the v <= 9 graph census.
    let mut census: Vec<symcfg::levi::LeviGraph> = Vec::new();
    for v in 7..=9 {
        census.extend(enumerate::generate_levi_graphs(v));
    }
    assert_eq!(census.len(), 5);
    for levi in &census {
        let g = levi.graph();
        let base = classify::canonical_form(g).cert;
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            for i in (1..perm.len()).rev() {
                let j = rng.gen_range(0..=i);
                perm.swap(i, j);
            }
            assert_eq!(classify::canonical_form(&g.relabel(&perm)).cert, base);
        }
    }
    // Certificate self-checks re-verify through the independent checker.
    let fano = construct::fano();
    let verdict = embed::verdict(&fano, &VerdictPolicy::default()).unwrap();
    let doc = verdict.to_doc(&fano);
    let report = symcfg::check::check_witness(&fano, &doc.witness.unwrap());
    assert!(report.ok, "fano certificate failed re-verification: {report:?}");

    let stitched = construct::stitch(&fano, &fano, &fano, None).unwrap();
    let verdict = embed::verdict(&stitched.config, &VerdictPolicy::default()).unwrap();
    let doc = verdict.to_doc(&stitched.config);
    let report = symcfg::check::check_witness(&stitched.config, &doc.witness.unwrap());
    assert!(report.ok, "ring-cut certificate failed re-verification");

    let c9 = construct::cyclic_config(9).unwrap();
    let levi = c9.levi_graph();
    let rot = embed::find_single_face_rotation(&levi, &vec![false; 9], 19)
        .unwrap()
        .expect("cyclic 9_3 embeds in the all-false orientation");
    let doc = embed::single_face_doc(&c9, &rot);
    let report = symcfg::check::check_single_face(&c9, &doc);
    assert!(report.ok, "single-face certificate failed re-verification");
    pass("Euler/face invariants (3000 rotations), canonical relabeling invariance (500 trials), and certificate re-verification all hold");
}
