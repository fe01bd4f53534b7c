//! Content-addressed result cache.
//!
//! An entry lives at `<dir>/<key>.json` where the key is the SHA-256 of the
//! command, its parameters, the digests of its input documents and the
//! artifact version. The entry stores the result body with its own digest;
//! a body whose digest does not verify is discarded with a warning.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "TRIVALENT_CACHE_DIR";

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Disabled,
    Hit,
    Miss,
    /// An entry existed but failed verification; it was recomputed.
    Corrupted,
}

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    key: String,
    digest: String,
    body: String,
}

#[derive(Debug, PartialEq, Eq)]
pub enum Lookup {
    Hit(String),
    Miss,
    Corrupted(String),
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Key for a request; `request` must serialize deterministically.
    pub fn key(request: &Value) -> String {
        sha256_hex(request.to_string().as_bytes())
    }

    pub fn entry_path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn lookup(&self, key: &str) -> Lookup {
        let text = match fs::read_to_string(self.entry_path(key)) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Corrupted(format!("unreadable entry: {e}")),
        };
        let entry: Entry = match serde_json::from_str(&text) {
            Ok(e) => e,
            Err(e) => return Lookup::Corrupted(format!("unparsable entry: {e}")),
        };
        if entry.key != key {
            return Lookup::Corrupted("entry key does not match its file name".into());
        }
        if sha256_hex(entry.body.as_bytes()) != entry.digest {
            return Lookup::Corrupted("body digest mismatch".into());
        }
        Lookup::Hit(entry.body)
    }

    /// Writes through a temporary file and renames it into place.
    pub fn store(&self, key: &str, body: &str) -> io::Result<()> {
        let entry = Entry { key: key.to_string(), digest: sha256_hex(body.as_bytes()), body: body.to_string() };
        let tmp = self.dir.join(format!("{key}.tmp.{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&entry).map_err(io::Error::other)?)?;
        fs::rename(&tmp, self.entry_path(key))
    }
}
