//! Run manifests: every output file embeds or references one, so reruns are
//! reproducible and outputs are traceable to their inputs. Reruns are
//! byte-identical except for the timing fields.

use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub subcommand: String,
    pub args: Vec<String>,
    pub seed: u64,
    pub input_sha256: Vec<(String, String)>,
    pub wall_ms: u128,
    pub created_unix: u64,
}

impl RunManifest {
    pub fn new(subcommand: &str, seed: u64) -> Self {
        RunManifest {
            tool: "symcfg".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            subcommand: subcommand.into(),
            args: std::env::args().skip(1).collect(),
            seed,
            input_sha256: Vec::new(),
            wall_ms: 0,
            created_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }

    pub fn record_input(&mut self, path: &Path, bytes: &[u8]) {
        let mut hasher = Sha256::new();
        hasher.update(bytes);
        self.input_sha256
            .push((path.display().to_string(), format!("{:x}", hasher.finalize())));
    }

    pub fn finish(&mut self, started: std::time::Instant) {
        self.wall_ms = started.elapsed().as_millis();
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("manifest serializes")
    }

    /// One-line form for `#`-comment and XML-comment embedding.
    pub fn to_comment_line(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("manifest serializes")
    }
}
