//! Run manifests: every command records what it ran and a digest of its
//! canonical result, so identical inputs can be checked byte-for-byte.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: serde_json::Value,
    pub seed: Option<u64>,
    pub tool_version: String,
    pub wall_ms: u64,
    /// SHA-256 over the canonical result JSON. Timing and search statistics
    /// are excluded from the canonical form, so identical inputs reproduce
    /// identical digests.
    pub result_digest: String,
}

pub fn digest_of(canonical: &serde_json::Value) -> String {
    let bytes = serde_json::to_vec(canonical).expect("serializable result");
    hex::encode(Sha256::digest(bytes))
}

impl RunManifest {
    pub fn new(
        command: &str,
        parameters: serde_json::Value,
        seed: Option<u64>,
        wall_ms: u64,
        canonical_result: &serde_json::Value,
    ) -> Self {
        RunManifest {
            command: command.to_string(),
            parameters,
            seed,
            tool_version: TOOL_VERSION.to_string(),
            wall_ms,
            result_digest: digest_of(canonical_result),
        }
    }

    pub fn write_to(&self, dir: &Path) -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join("manifest.json");
        std::fs::write(path, serde_json::to_string_pretty(self).unwrap())
    }
}
