//! Run manifests: JSON sidecars recording what produced each output file.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

/// Reproducibility record written next to every CSV artifact.
///
/// The same command line and seed always reproduce the same checksums. The
/// duration field is informational and varies run to run.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    /// The invocation, argv joined by spaces.
    pub command: String,
    /// Master seed every random stream of the run was derived from.
    pub seed: u64,
    /// Version of the binary that produced the artifact.
    pub version: String,
    /// Checksums of the files this run wrote.
    pub outputs: Vec<OutputRecord>,
    /// Wall-clock duration of the computation in milliseconds.
    pub duration_ms: u64,
}

#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub path: String,
    pub sha256: String,
    pub bytes: u64,
}

impl OutputRecord {
    pub fn new(path: &Path, contents: &[u8]) -> Self {
        let name = path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        OutputRecord {
            path: name,
            sha256: sha256_hex(contents),
            bytes: contents.len() as u64,
        }
    }
}

/// Lowercase hex SHA-256 of a byte string.
pub fn sha256_hex(bytes: &[u8]) -> String {
    use std::fmt::Write as _;
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for byte in digest.as_slice() {
        write!(out, "{byte:02x}").unwrap();
    }
    out
}

/// Sidecar path for an output file: `table1.csv` becomes
/// `table1.manifest.json` in the same directory.
pub fn sidecar_path(out: &Path) -> PathBuf {
    out.with_extension("manifest.json")
}
