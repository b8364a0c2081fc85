//! Rotation systems on Levi graphs and face tracing.
//!
//! A rotation system assigns each vertex a cyclic order of its three incident
//! darts; it determines a cellular embedding in an orientable surface. Since
//! every vertex is trivalent there are exactly two cyclic orders per vertex,
//! so a rotation system is a flip vector: `false` keeps the slot order
//! 0 -> 1 -> 2, `true` reverses it. Block-vertex flips encode the orientation
//! of the triples: the embedding induces at each block the cyclic order of
//! its three points read along the block vertex's rotation, taken against the
//! fixed global orientation (the convention used throughout; the alternative
//! reading differs from it by a global reversal).

use serde::{Deserialize, Serialize};

use crate::levi::LeviGraph;

/// Per-vertex cyclic order of incident darts, stored as the successor
/// permutation on darts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    next: Vec<usize>,
    flips: Vec<bool>,
}

impl RotationSystem {
    /// Builds a rotation from one flip bit per vertex (`flips.len() == 2v`).
    pub fn from_flips(levi: &LeviGraph, flips: &[bool]) -> Self {
        assert_eq!(flips.len(), levi.n(), "one flip per vertex");
        let mut next = vec![0usize; levi.dart_count()];
        for u in 0..levi.n() {
            let base = 3 * u;
            if flips[u] {
                next[base] = base + 2;
                next[base + 2] = base + 1;
                next[base + 1] = base;
            } else {
                next[base] = base + 1;
                next[base + 1] = base + 2;
                next[base + 2] = base;
            }
        }
        RotationSystem {
            next,
            flips: flips.to_vec(),
        }
    }

    /// Block orientations plus point rotations: `block_flips[i]` drives block
    /// vertex `v + i`, `point_flips[p]` drives point vertex `p`.
    pub fn from_orientation(
        levi: &LeviGraph,
        block_flips: &[bool],
        point_flips: &[bool],
    ) -> Self {
        assert_eq!(block_flips.len(), levi.v());
        assert_eq!(point_flips.len(), levi.v());
        let mut flips = point_flips.to_vec();
        flips.extend_from_slice(block_flips);
        RotationSystem::from_flips(levi, &flips)
    }

    /// Next dart after `d` in the rotation at `d`'s source vertex.
    pub fn next(&self, d: usize) -> usize {
        self.next[d]
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    /// The mirror rotation: every vertex cycle reversed.
    pub fn reversed(&self, levi: &LeviGraph) -> Self {
        let flipped: Vec<bool> = self.flips.iter().map(|&b| !b).collect();
        RotationSystem::from_flips(levi, &flipped)
    }
}

/// Faces of the embedding determined by a rotation system, plus the genus
/// from Euler's formula. The genus is always derived, never stored
/// independently of the faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTrace {
    pub faces: Vec<Vec<usize>>,
    pub genus: usize,
}

impl FaceTrace {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }
}

impl LeviGraph {
    /// Traces all faces of the embedding given by `rot`.
    ///
    /// The walk successor of dart `d` is `rot.next(twin(d))`; the cycles of
    /// that permutation partition the darts. Faces are listed smallest dart
    /// first, each walk starting at its smallest dart. Requires a connected
    /// graph (Euler's formula is applied globally).
    pub fn trace_faces(&self, rot: &RotationSystem) -> FaceTrace {
        assert!(self.is_connected(), "face tracing needs a connected graph");
        let nd = self.dart_count();
        let mut seen = vec![false; nd];
        let mut faces = Vec::new();
        for start in 0..nd {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                debug_assert!(!seen[d]);
                seen[d] = true;
                walk.push(d);
                d = rot.next(self.twin(d));
                if d == start {
                    break;
                }
            }
            faces.push(walk);
        }
        let n = self.n();
        let m = 3 * self.v();
        let f = faces.len();
        debug_assert_eq!((2 + m - n - f) % 2, 0);
        let genus = (2 + m - n - f) / 2;
        FaceTrace { faces, genus }
    }

    /// Length of the face walk through dart 0, stopping early once the walk
    /// closes. The embedding has a single face iff this equals `6v`.
    pub fn first_face_len(&self, rot: &RotationSystem) -> usize {
        let mut d = 0usize;
        let mut len = 0usize;
        loop {
            len += 1;
            d = rot.next(self.twin(d));
            if d == 0 {
                return len;
            }
        }
    }
}
