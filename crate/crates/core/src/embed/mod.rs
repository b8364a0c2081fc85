//! Upper-embeddability decision procedures and certificates.
//!
//! The verdict pipeline is certificate-first and never guesses: a
//! dominating-tree certificate proves embeddability in every orientation, a
//! ring cut proves non-embeddability in any orientation, exhaustive
//! rotation sweeps settle small orders outright, and everything else is an
//! honest `Unknown`.

pub mod dominating;
pub mod jungerman;
pub mod ring_cut;
pub mod single_face;

pub use dominating::{
    certificate_from_set, dominating_tree_certificate, validate_certificate, CertSearch,
    CertificateError, DominatingTreeCertificate,
};
pub use jungerman::{cotree_report, has_even_point_cotree_valencies, CotreeReport, TreeSearch};
pub use ring_cut::{ring_cut_certificate, validate_ring_cut, RingCutCertificate, RingPart};
pub use single_face::{
    find_single_face_rotation, sweep_orientations, OrientationSweep, SingleFaceError,
    DEFAULT_EXHAUSTIVE_LIMIT,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::check;
use crate::config::Configuration;
use crate::rotation::RotationSystem;

#[derive(Debug, Error)]
pub enum VerdictError {
    #[error("order {0} is even; upper embeddings need v + 1 faces of odd total, so v must be odd")]
    EvenOrder(usize),
    #[error("configuration is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    EveryOrientation,
    SomeOrientation,
    NoOrientation,
    Unknown,
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    DominatingTree,
    RingCut,
    ExhaustiveRotations,
    TreeRefutation,
    Inconclusive,
}

/// Attached evidence. Every status except `Unknown` carries a witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    DominatingTree {
        certificate: DominatingTreeCertificate,
    },
    RingCut {
        certificate: RingCutCertificate,
    },
    RotationSweep {
        orientations_checked: u64,
        succeeded: u64,
        first_failure: Option<Vec<bool>>,
        example: Option<RotationSystem>,
    },
    TreeRefutation {
        nodes: u64,
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub method: Method,
    pub witness: Witness,
}

impl Verdict {
    /// Exchange-format document with self-check blocks, re-verifiable by
    /// the `check` module alone.
    pub fn to_doc(&self, cfg: &Configuration) -> check::VerdictDoc {
        let status = serde_json::to_value(self.status)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        let method = serde_json::to_value(self.method)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        let witness = match &self.witness {
            Witness::DominatingTree { certificate } => Some(check::WitnessDoc::DominatingTree(
                dominating_doc(cfg, certificate),
            )),
            Witness::RingCut { certificate } => {
                Some(check::WitnessDoc::RingCut(ring_cut_doc(cfg, certificate)))
            }
            Witness::RotationSweep {
                orientations_checked,
                succeeded,
                first_failure,
                example,
            } => Some(check::WitnessDoc::RotationSweep {
                orientations_checked: *orientations_checked,
                succeeded: *succeeded,
                first_failure: first_failure.clone(),
                example: example.as_ref().map(|rot| single_face_doc(cfg, rot)),
            }),
            Witness::TreeRefutation { nodes } => {
                Some(check::WitnessDoc::TreeRefutation { nodes: *nodes })
            }
            Witness::None => None,
        };
        check::VerdictDoc {
            status,
            method,
            witness,
            manifest: None,
        }
    }
}

/// Builds the exchange document for a dominating-tree certificate,
/// recomputing the self-check block from scratch.
pub fn dominating_doc(
    cfg: &Configuration,
    cert: &DominatingTreeCertificate,
) -> check::DominatingTreeDoc {
    let v = cfg.v();
    let levi = cfg.levi_graph();
    let g = levi.graph();
    let deg = cert.tree.degrees(g);
    let valencies: Vec<usize> = (0..v).map(|p| 3 - deg[p]).collect();
    let dominated = cfg
        .blocks()
        .iter()
        .filter(|b| b.iter().any(|p| cert.point_set.contains(p)))
        .count();
    check::DominatingTreeDoc {
        v,
        point_set: cert.point_set.clone(),
        tree_edges: cert.tree.edge_pairs(g),
        self_check: check::DominatingSelfCheck {
            set_size: cert.point_set.len(),
            required_set_size: (v - 1) / 2,
            blocks_total: v,
            blocks_dominated: dominated,
            induced_connected: true,
            tree_edge_count: cert.tree.edge_indices().len(),
            all_point_valencies_even: valencies.iter().all(|&d| d % 2 == 0),
            point_cotree_valencies: valencies,
        },
    }
}

/// Exchange document for a ring-cut certificate.
pub fn ring_cut_doc(cfg: &Configuration, cert: &RingCutCertificate) -> check::RingCutDoc {
    let levi = cfg.levi_graph();
    check::RingCutDoc {
        n: levi.n(),
        cut_edges: cert.cut_edges,
        parts: cert
            .parts
            .iter()
            .map(|p| check::RingPartDoc {
                vertices: p.vertices.clone(),
                vertex_count: p.vertices.len(),
                edge_count: p.edge_count,
                cycle_rank: p.cycle_rank(),
            })
            .collect(),
        self_check: check::RingCutSelfCheck {
            component_count: 3,
            ring_pattern: true,
            cycle_ranks_odd: [
                cert.parts[0].cycle_rank() % 2 == 1,
                cert.parts[1].cycle_rank() % 2 == 1,
                cert.parts[2].cycle_rank() % 2 == 1,
            ],
        },
    }
}

/// Exchange document for a single-face rotation witness.
pub fn single_face_doc(cfg: &Configuration, rot: &RotationSystem) -> check::SingleFaceDoc {
    let v = cfg.v();
    let levi = cfg.levi_graph();
    let trace = levi.trace_faces(rot);
    check::SingleFaceDoc {
        v,
        block_flips: rot.flips()[v..].to_vec(),
        point_flips: rot.flips()[..v].to_vec(),
        self_check: check::SingleFaceSelfCheck {
            dart_count: levi.dart_count(),
            face_count: trace.face_count(),
            genus: trace.genus,
        },
    }
}

/// Knobs for the verdict pipeline. All searches are deterministic given the
/// policy; the seed only drives heuristics, which the pipeline itself does
/// not rely on for its claims.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct VerdictPolicy {
    /// Backtracking-node budget for the dominating-set search.
    pub dominating_budget: u64,
    /// Largest v for exhaustive rotation work.
    pub exhaustive_limit: usize,
    /// Node budget for the spanning-tree refutation fallback.
    pub tree_node_limit: u64,
    pub seed: u64,
}

impl Default for VerdictPolicy {
    fn default() -> Self {
        VerdictPolicy {
            dominating_budget: 50_000_000,
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
            tree_node_limit: 50_000_000,
            seed: 0,
        }
    }
}

/// Decides upper embeddability of a connected odd-order configuration:
/// dominating-tree certificate, then ring-cut witness, then (small orders)
/// an exhaustive orientation sweep backed by a spanning-tree refutation,
/// otherwise `Unknown`.
pub fn verdict(cfg: &Configuration, policy: &VerdictPolicy) -> Result<Verdict, VerdictError> {
    if cfg.v() % 2 == 0 {
        return Err(VerdictError::EvenOrder(cfg.v()));
    }
    if !cfg.is_connected() {
        return Err(VerdictError::Disconnected);
    }
    if let CertSearch::Found(cert) = dominating_tree_certificate(cfg, policy.dominating_budget) {
        return Ok(Verdict {
            status: VerdictStatus::EveryOrientation,
            method: Method::DominatingTree,
            witness: Witness::DominatingTree { certificate: cert },
        });
    }
    let levi = cfg.levi_graph();
    if let Some(cert) = ring_cut_certificate(levi.graph()) {
        return Ok(Verdict {
            status: VerdictStatus::NoOrientation,
            method: Method::RingCut,
            witness: Witness::RingCut { certificate: cert },
        });
    }
    if cfg.v() <= policy.exhaustive_limit {
        let sweep = sweep_orientations(&levi, policy.exhaustive_limit)
            .expect("limit checked above");
        if sweep.all_succeeded() {
            return Ok(Verdict {
                status: VerdictStatus::EveryOrientation,
                method: Method::ExhaustiveRotations,
                witness: Witness::RotationSweep {
                    orientations_checked: sweep.orientations_checked,
                    succeeded: sweep.succeeded,
                    first_failure: None,
                    example: sweep.example,
                },
            });
        }
        if sweep.succeeded > 0 {
            return Ok(Verdict {
                status: VerdictStatus::SomeOrientation,
                method: Method::ExhaustiveRotations,
                witness: Witness::RotationSweep {
                    orientations_checked: sweep.orientations_checked,
                    succeeded: sweep.succeeded,
                    first_failure: sweep.first_failure,
                    example: sweep.example,
                },
            });
        }
        // No orientation embeds; confirm with the tree criterion so the
        // claim rests on an exhaustive refutation.
        match jungerman::bruteforce(levi.graph(), Some(policy.tree_node_limit)) {
            TreeSearch::Refuted { nodes } => {
                return Ok(Verdict {
                    status: VerdictStatus::NoOrientation,
                    method: Method::TreeRefutation,
                    witness: Witness::TreeRefutation { nodes },
                });
            }
            TreeSearch::Found(_) => {
                unreachable!("tree criterion contradicts an exhaustive rotation sweep")
            }
            TreeSearch::LimitReached { .. } => {
                return Ok(Verdict {
                    status: VerdictStatus::NoOrientation,
                    method: Method::ExhaustiveRotations,
                    witness: Witness::RotationSweep {
                        orientations_checked: sweep.orientations_checked,
                        succeeded: 0,
                        first_failure: sweep.first_failure,
                        example: None,
                    },
                });
            }
        }
    }
    Ok(Verdict {
        status: VerdictStatus::Unknown,
        method: Method::Inconclusive,
        witness: Witness::None,
    })
}
