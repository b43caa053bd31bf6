//! Content-addressed report store: one JSON file per
//! `(command, parameters, version)`, named by the SHA-256 of its canonical
//! JSON encoding.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

pub fn default_dir() -> PathBuf {
    std::env::temp_dir().join("degflag-cache")
}

/// Keys are sorted (`BTreeMap`), so the encoding is canonical.
pub fn key(command: &str, parameters: &BTreeMap<String, Value>, version: &str) -> String {
    let material =
        serde_json::json!({ "command": command, "parameters": parameters, "version": version });
    hex::encode(Sha256::digest(material.to_string().as_bytes()))
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn load(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.path(key)).ok()
    }

    /// Writes through a temporary file so readers never see partial output.
    pub fn store(&self, key: &str, contents: &str) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!("{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, contents)?;
        fs::rename(&tmp, self.path(key))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_depends_on_every_part() {
        let p = BTreeMap::from([("n".to_string(), Value::from(2))]);
        let q = BTreeMap::from([("n".to_string(), Value::from(3))]);
        let base = key("count rn", &p, "0.1.0");
        assert_eq!(base, key("count rn", &p, "0.1.0"));
        assert_ne!(base, key("count bn", &p, "0.1.0"));
        assert_ne!(base, key("count rn", &q, "0.1.0"));
        assert_ne!(base, key("count rn", &p, "0.2.0"));
        assert_eq!(base.len(), 64);
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("nested"));
        assert_eq!(cache.load("k"), None);
        cache.store("k", "{}\n").unwrap();
        assert_eq!(cache.load("k").as_deref(), Some("{}\n"));
    }
}
