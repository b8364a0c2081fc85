//! Symmetric `v_3` configurations: `v` points, `v` unordered triples,
//! every point in exactly three triples, every pair in at most one.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::levi::LeviGraph;

/// One structural defect found while validating a raw block list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    PointOutOfRange { block: Vec<usize>, point: usize },
    RepeatedPointInBlock { block: Vec<usize> },
    DuplicateBlock { block: Vec<usize> },
    PairInTwoBlocks { pair: (usize, usize) },
    BlockCount { expected: usize, actual: usize },
    PointValency { point: usize, valency: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PointOutOfRange { block, point } => {
                write!(f, "block {block:?} references point {point} out of range")
            }
            Violation::RepeatedPointInBlock { block } => {
                write!(f, "block {block:?} repeats a point")
            }
            Violation::DuplicateBlock { block } => write!(f, "block {block:?} occurs twice"),
            Violation::PairInTwoBlocks { pair } => {
                write!(f, "pair {{{}, {}}} occurs in two blocks", pair.0, pair.1)
            }
            Violation::BlockCount { expected, actual } => {
                write!(f, "expected {expected} blocks, found {actual}")
            }
            Violation::PointValency { point, valency } => {
                write!(f, "point {point} lies in {valency} blocks instead of 3")
            }
        }
    }
}

/// Full validation report; every defect is listed, not just the first.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid configuration:")?;
        for v in &self.violations {
            write!(f, "\n  - {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("configuration text: {0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

/// A validated symmetric configuration `v_3`.
///
/// Blocks are stored as sorted triples, the block list sorted
/// lexicographically, so equal configurations have equal representations
/// and text output is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Configuration {
    v: usize,
    blocks: Vec<[usize; 3]>,
}

impl Configuration {
    /// Validates a raw triple list as a symmetric `v_3` configuration.
    pub fn new(v: usize, raw_blocks: &[Vec<usize>]) -> Result<Self, ValidationError> {
        let mut violations = Vec::new();
        let mut blocks: Vec<[usize; 3]> = Vec::with_capacity(raw_blocks.len());
        for raw in raw_blocks {
            if let Some(&p) = raw.iter().find(|&&p| p >= v) {
                violations.push(Violation::PointOutOfRange {
                    block: raw.clone(),
                    point: p,
                });
                continue;
            }
            if raw.len() != 3 || raw[0] == raw[1] || raw[0] == raw[2] || raw[1] == raw[2] {
                violations.push(Violation::RepeatedPointInBlock { block: raw.clone() });
                continue;
            }
            let mut b = [raw[0], raw[1], raw[2]];
            b.sort_unstable();
            blocks.push(b);
        }
        blocks.sort_unstable();
        for win in blocks.windows(2) {
            if win[0] == win[1] {
                violations.push(Violation::DuplicateBlock {
                    block: win[0].to_vec(),
                });
            }
        }
        if raw_blocks.len() != v {
            violations.push(Violation::BlockCount {
                expected: v,
                actual: raw_blocks.len(),
            });
        }
        // Pair condition and point valencies, only meaningful on the blocks
        // that parsed as proper triples.
        let mut pair_seen = vec![false; v * v];
        let mut valency = vec![0usize; v];
        for b in &blocks {
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let key = b[i] * v + b[j];
                if pair_seen[key] {
                    if !violations
                        .iter()
                        .any(|x| matches!(x, Violation::PairInTwoBlocks { pair } if *pair == (b[i], b[j])))
                    {
                        violations.push(Violation::PairInTwoBlocks { pair: (b[i], b[j]) });
                    }
                } else {
                    pair_seen[key] = true;
                }
            }
            for &p in b {
                valency[p] += 1;
            }
        }
        if violations.is_empty() {
            for (p, &val) in valency.iter().enumerate() {
                if val != 3 {
                    violations.push(Violation::PointValency {
                        point: p,
                        valency: val,
                    });
                }
            }
        }
        if violations.is_empty() {
            Ok(Configuration { v, blocks })
        } else {
            Err(ValidationError { violations })
        }
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[[usize; 3]] {
        &self.blocks
    }

    /// Indices of the blocks containing point `p`, ascending. Always three.
    pub fn blocks_through(&self, p: usize) -> [usize; 3] {
        let mut out = [0usize; 3];
        let mut k = 0;
        for (i, b) in self.blocks.iter().enumerate() {
            if b.contains(&p) {
                out[k] = i;
                k += 1;
            }
        }
        debug_assert_eq!(k, 3);
        out
    }

    /// Does some block contain both `p` and `q`?
    pub fn pair_covered(&self, p: usize, q: usize) -> bool {
        self.blocks
            .iter()
            .any(|b| b.contains(&p) && b.contains(&q))
    }

    /// The point-block incidence graph, points `0..v`, blocks `v..2v`
    /// in stored block order.
    pub fn levi_graph(&self) -> LeviGraph {
        let mut edges = Vec::with_capacity(3 * self.v);
        for (i, b) in self.blocks.iter().enumerate() {
            for &p in b {
                edges.push((p, self.v + i));
            }
        }
        let g = Graph::from_edges(2 * self.v, &edges).expect("incidence edges are simple");
        LeviGraph::new(g, self.v).expect("levi graph of a valid configuration")
    }

    /// The graph on the points whose edges are the covered pairs; 6-regular
    /// for a valid `v_3`.
    pub fn associated_graph(&self) -> Graph {
        let mut edges = Vec::with_capacity(3 * self.v);
        for b in &self.blocks {
            edges.extend([(b[0], b[1]), (b[0], b[2]), (b[1], b[2])]);
        }
        Graph::from_edges(self.v, &edges).expect("pair condition keeps edges simple")
    }

    /// The dual configuration: roles of points and blocks reversed. Point `i`
    /// of the dual is block `i` of `self`; the dual block corresponding to an
    /// original point is that point's star.
    pub fn dual(&self) -> Configuration {
        let stars: Vec<Vec<usize>> = (0..self.v).map(|p| self.blocks_through(p).to_vec()).collect();
        Configuration::new(self.v, &stars).expect("dual of a valid configuration is valid")
    }

    /// Connectivity of the Levi graph (equivalently, of the associated graph).
    pub fn is_connected(&self) -> bool {
        self.associated_graph().is_connected()
    }

    /// Canonical text form: `v` on the first line, then one sorted triple
    /// per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.v);
        for b in &self.blocks {
            s.push_str(&format!("{} {} {}\n", b[0], b[1], b[2]));
        }
        s
    }

    /// Parses the text form. Lines starting with `#` and blank lines are
    /// ignored.
    pub fn parse_text(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| ParseError::Syntax("missing point-count line".into()))?;
        let v: usize = header
            .parse()
            .map_err(|_| ParseError::Syntax(format!("bad point count {header:?}")))?;
        let mut blocks = Vec::new();
        for line in lines {
            let triple: Result<Vec<usize>, _> =
                line.split_whitespace().map(str::parse::<usize>).collect();
            let triple =
                triple.map_err(|_| ParseError::Syntax(format!("bad block line {line:?}")))?;
            blocks.push(triple);
        }
        Ok(Configuration::new(v, &blocks)?)
    }
}
