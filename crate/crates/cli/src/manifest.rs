//! Run manifests: a record of a command invocation with digests of its
//! inputs and outputs. Re-running a command with identical inputs must
//! produce identical output digests regardless of worker count.

use serde::Serialize;
use std::path::Path;
use std::time::Instant;

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: Vec<(String, String)>,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    pub wall_ms: u128,
    pub jobs: usize,
}

#[derive(Debug, Serialize)]
pub struct FileDigest {
    pub path: String,
    pub digest: String,
}

/// FNV-1a, 64 bit. Stable across runs and platforms.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

pub fn digest_string(bytes: &[u8]) -> String {
    format!("{:016x}", fnv1a64(bytes))
}

pub struct ManifestBuilder {
    command: String,
    parameters: Vec<(String, String)>,
    inputs: Vec<FileDigest>,
    outputs: Vec<FileDigest>,
    started: Instant,
}

impl ManifestBuilder {
    pub fn new(command: &str) -> Self {
        ManifestBuilder {
            command: command.to_string(),
            parameters: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.push((key.to_string(), value.to_string()));
    }

    pub fn input(&mut self, path: &Path, bytes: &[u8]) {
        self.inputs
            .push(FileDigest { path: path.display().to_string(), digest: digest_string(bytes) });
    }

    pub fn output(&mut self, path: &str, bytes: &[u8]) {
        self.outputs.push(FileDigest { path: path.to_string(), digest: digest_string(bytes) });
    }

    pub fn finish(self) -> RunManifest {
        RunManifest {
            command: self.command,
            parameters: self.parameters,
            inputs: self.inputs,
            outputs: self.outputs,
            wall_ms: self.started.elapsed().as_millis(),
            jobs: rayon::current_num_threads(),
        }
    }
}
