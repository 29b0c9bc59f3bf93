//! On-disk store of reduced Gröbner bases keyed by a content hash.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{Monomial, Poly, RingRef};
use crate::groebner::GbStore;

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "FCALC_CACHE_DIR";

/// Bases found with fewer reductions than this are not worth a file.
const MIN_STEPS: u64 = 20;

#[derive(Serialize, Deserialize, PartialEq, Eq)]
struct Key {
    p: u64,
    vars: Vec<String>,
    order: String,
    gens: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: Key,
    /// Each element as (exponent vector, coefficient) pairs; auxiliary
    /// variable names do not parse back, so no text form is stored.
    basis: Vec<Vec<(Vec<u32>, u64)>>,
    steps: u64,
}

pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> std::io::Result<DiskCache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache { dir })
    }

    /// `$FCALC_CACHE_DIR`, or `fcalc-cache` under the system temp directory.
    pub fn default_dir() -> PathBuf {
        std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| std::env::temp_dir().join("fcalc-cache"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn key(ring: &RingRef, gens: &[Poly]) -> Key {
        let mut text: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        text.sort();
        text.dedup();
        Key {
            p: ring.p(),
            vars: ring.var_names().to_vec(),
            order: ring.order().name(),
            gens: text,
        }
    }

    fn path(&self, key: &Key) -> PathBuf {
        let mut h = Sha256::new();
        h.update(serde_json::to_vec(key).expect("keys serialize"));
        self.dir.join(format!("{}.json", hex::encode(h.finalize())))
    }
}

impl GbStore for DiskCache {
    fn load(&self, ring: &RingRef, gens: &[Poly]) -> Option<Vec<Poly>> {
        let key = DiskCache::key(ring, gens);
        let path = self.path(&key);
        let bytes = fs::read(&path).ok()?;
        let entry: Entry = match serde_json::from_slice(&bytes) {
            Ok(e) => e,
            Err(err) => {
                log::warn!("ignoring corrupted cache entry {}: {err}", path.display());
                return None;
            }
        };
        if entry.key != key {
            // a hash collision, or an entry written for other input
            return None;
        }
        let p = ring.p();
        let n = ring.nvars();
        let basis: Result<Vec<Poly>, String> = entry
            .basis
            .iter()
            .map(|terms| {
                let mut out = Vec::with_capacity(terms.len());
                for (exps, c) in terms {
                    if exps.len() != n || *c == 0 || *c >= p {
                        return Err("malformed term".to_string());
                    }
                    let mono = Monomial::from_exponents(exps).map_err(|e| e.to_string())?;
                    out.push((mono, *c as i64));
                }
                Ok(Poly::from_terms(ring, out))
            })
            .collect();
        match basis {
            Ok(b) => Some(b),
            Err(err) => {
                log::warn!("ignoring corrupted cache entry {}: {err}", path.display());
                None
            }
        }
    }

    fn save(&self, ring: &RingRef, gens: &[Poly], gb: &[Poly], steps: u64) {
        if steps < MIN_STEPS {
            return;
        }
        let key = DiskCache::key(ring, gens);
        let path = self.path(&key);
        let entry = Entry {
            key,
            basis: gb
                .iter()
                .map(|g| {
                    g.terms()
                        .iter()
                        .map(|t| (t.mono.exponents()[..ring.nvars()].to_vec(), t.coeff))
                        .collect()
                })
                .collect(),
            steps,
        };
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let written = serde_json::to_vec(&entry)
            .map_err(std::io::Error::other)
            .and_then(|bytes| fs::write(&tmp, bytes))
            .and_then(|_| fs::rename(&tmp, &path));
        if let Err(err) = written {
            log::warn!("could not write cache entry {}: {err}", path.display());
        }
    }
}
