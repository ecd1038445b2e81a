//! Run manifests written next to every output file.

use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::Serialize;
use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub config: serde_json::Value,
    pub seed: Option<u64>,
    pub version: String,
    /// Unix time at which the run started, in seconds.
    pub started_at: u64,
    pub elapsed_seconds: f64,
    pub inputs: Vec<InputDigest>,
    #[serde(skip)]
    clock: Option<Instant>,
}

impl RunManifest {
    pub fn new(command: impl Into<String>, config: serde_json::Value, seed: Option<u64>) -> Self {
        RunManifest {
            command: command.into(),
            config,
            seed,
            version: env!("CARGO_PKG_VERSION").into(),
            started_at: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
            elapsed_seconds: 0.0,
            inputs: Vec::new(),
            clock: Some(Instant::now()),
        }
    }

    pub fn add_input(&mut self, path: impl Into<String>, bytes: &[u8]) {
        self.inputs.push(InputDigest {
            path: path.into(),
            sha256: sha256_hex(bytes),
        });
    }

    /// Stops the clock.
    pub fn finish(&mut self) {
        if let Some(c) = self.clock.take() {
            self.elapsed_seconds = c.elapsed().as_secs_f64();
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes") + "\n"
    }

    pub fn sidecar_path(out: &Path) -> PathBuf {
        let mut name = out.as_os_str().to_owned();
        name.push(".manifest.json");
        PathBuf::from(name)
    }

    pub fn write_sidecar(&mut self, out: &Path) -> std::io::Result<PathBuf> {
        self.finish();
        let p = Self::sidecar_path(out);
        std::fs::write(&p, self.to_json())?;
        Ok(p)
    }
}
