//! Exhaustive per-orientation rotation search: with all block-vertex
//! rotations pinned by a triple orientation, scan the 2^v point-vertex
//! rotations for one whose embedding has a single face. Exhaustive, so a
//! miss is a proof for that orientation.

use thiserror::Error;

use crate::levi::LeviGraph;
use crate::rotation::RotationSystem;

/// Largest v for which exhaustive rotation scans are permitted by default.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 19;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SingleFaceError {
    #[error("order {0} exceeds the exhaustive limit {1}; use certificates instead")]
    TooLarge(usize, usize),
    #[error("expected {0} block orientations, got {1}")]
    WrongOrientationCount(usize, usize),
}

/// Walks the face through dart 0 and reports whether it covers all darts.
fn single_face(levi: &LeviGraph, flips: &[bool]) -> bool {
    let total = levi.dart_count();
    let mut d = 0usize;
    let mut len = 0usize;
    loop {
        len += 1;
        let t = levi.twin(d);
        let u = t / 3;
        let s = t % 3;
        let ns = if flips[u] { (s + 2) % 3 } else { (s + 1) % 3 };
        d = 3 * u + ns;
        if d == 0 {
            return len == total;
        }
        if len > total {
            unreachable!("face walk exceeded dart count");
        }
    }
}

/// First rotation (in lexicographic point-flip order, point 0 most
/// significant) extending `block_flips` whose embedding has exactly one
/// face, or `None` — a proof that this orientation admits no upper
/// embedding.
pub fn find_single_face_rotation(
    levi: &LeviGraph,
    block_flips: &[bool],
    limit: usize,
) -> Result<Option<RotationSystem>, SingleFaceError> {
    let v = levi.v();
    if v > limit {
        return Err(SingleFaceError::TooLarge(v, limit));
    }
    if block_flips.len() != v {
        return Err(SingleFaceError::WrongOrientationCount(v, block_flips.len()));
    }
    let mut flips = vec![false; 2 * v];
    flips[v..].copy_from_slice(block_flips);
    for mask in 0u64..(1u64 << v) {
        for p in 0..v {
            flips[p] = mask >> (v - 1 - p) & 1 == 1;
        }
        if single_face(levi, &flips) {
            return Ok(Some(RotationSystem::from_flips(levi, &flips)));
        }
    }
    Ok(None)
}

/// Result of sweeping every orientation of triples (up to global reversal:
/// block 0 is pinned unflipped, since reversing all blocks and all points
/// mirrors the embedding and preserves the face count).
#[derive(Debug, Clone)]
pub struct OrientationSweep {
    pub orientations_checked: u64,
    pub succeeded: u64,
    /// Lexicographically first failing orientation, if any.
    pub first_failure: Option<Vec<bool>>,
    /// Witness for the all-false orientation, when it succeeds.
    pub example: Option<RotationSystem>,
}

impl OrientationSweep {
    pub fn all_succeeded(&self) -> bool {
        self.succeeded == self.orientations_checked
    }
}

/// Runs `find_single_face_rotation` over all 2^(v-1) orientation classes.
pub fn sweep_orientations(
    levi: &LeviGraph,
    limit: usize,
) -> Result<OrientationSweep, SingleFaceError> {
    let v = levi.v();
    if v > limit {
        return Err(SingleFaceError::TooLarge(v, limit));
    }
    let mut sweep = OrientationSweep {
        orientations_checked: 0,
        succeeded: 0,
        first_failure: None,
        example: None,
    };
    let mut block_flips = vec![false; v];
    for mask in 0u64..(1u64 << (v - 1)) {
        for b in 1..v {
            block_flips[b] = mask >> (v - 1 - b) & 1 == 1;
        }
        sweep.orientations_checked += 1;
        match find_single_face_rotation(levi, &block_flips, limit)? {
            Some(rot) => {
                sweep.succeeded += 1;
                if mask == 0 {
                    sweep.example = Some(rot);
                }
            }
            None => {
                if sweep.first_failure.is_none() {
                    sweep.first_failure = Some(block_flips.clone());
                }
            }
        }
    }
    Ok(sweep)
}
