use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use pclink_invariant::Poly;
use pclink_shadow::Family;
use serde::{Deserialize, Serialize};

use crate::CensusError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub family: Family,
    pub n: usize,
    pub word: String,
}

#[derive(Serialize, Deserialize)]
struct Line<'a> {
    family: Family,
    n: usize,
    word: &'a str,
    jones: serde_json::Value,
}

/// Append-only store of Jones polynomials, one JSON object per line:
/// `{"family":"ring","n":4,"word":"0101","jones":[[-10,"-1"],...]}`.
///
/// Values are kept in their serialised form, so a lookup returns exactly
/// the bytes that were written. Inserting a key that is already present
/// leaves the file untouched, which makes concurrent identical writes safe.
#[derive(Debug)]
pub struct ResultCache {
    path: Option<PathBuf>,
    inner: Mutex<Inner>,
}

#[derive(Debug, Default)]
struct Inner {
    values: HashMap<CacheKey, String>,
    file: Option<File>,
    hits: usize,
    writes: usize,
}

impl ResultCache {
    /// A cache that lives only in memory.
    pub fn in_memory() -> ResultCache {
        ResultCache { path: None, inner: Mutex::new(Inner::default()) }
    }

    /// Open (creating if needed) a cache file and load its entries.
    pub fn open(path: impl AsRef<Path>) -> Result<ResultCache, CensusError> {
        let path = path.as_ref().to_path_buf();
        let err = |message: String| CensusError::Cache { path: path.display().to_string(), message };
        let mut values = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path).map_err(|e| err(e.to_string()))?);
            for (k, line) in reader.lines().enumerate() {
                let line = line.map_err(|e| err(e.to_string()))?;
                if line.trim().is_empty() {
                    continue;
                }
                let parsed: Line = serde_json::from_str(&line).map_err(|e| err(format!("line {}: {e}", k + 1)))?;
                let poly: Poly = serde_json::from_value(parsed.jones.clone())
                    .map_err(|e| err(format!("line {}: {e}", k + 1)))?;
                let key = CacheKey { family: parsed.family, n: parsed.n, word: parsed.word.to_string() };
                values.entry(key).or_insert_with(|| poly.to_json());
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(&path).map_err(|e| err(e.to_string()))?;
        Ok(ResultCache {
            path: Some(path),
            inner: Mutex::new(Inner { values, file: Some(file), hits: 0, writes: 0 }),
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Serialised value stored for `key`.
    pub fn get_raw(&self, key: &CacheKey) -> Option<String> {
        let mut inner = self.inner.lock().unwrap();
        let v = inner.values.get(key).cloned();
        if v.is_some() {
            inner.hits += 1;
        }
        v
    }

    pub fn get(&self, key: &CacheKey) -> Option<Poly> {
        self.get_raw(key).map(|raw| serde_json::from_str(&raw).expect("cached values are well formed"))
    }

    /// Store `value` unless the key is present; returns the value now held.
    pub fn insert(&self, key: CacheKey, value: &Poly) -> Result<String, CensusError> {
        let mut inner = self.inner.lock().unwrap();
        if let Some(v) = inner.values.get(&key) {
            return Ok(v.clone());
        }
        let raw = value.to_json();
        if let Some(file) = inner.file.as_mut() {
            let line = Line {
                family: key.family,
                n: key.n,
                word: &key.word,
                jones: serde_json::from_str(&raw).expect("polynomial JSON parses"),
            };
            let mut text = serde_json::to_string(&line).expect("cache line serialises");
            text.push('\n');
            file.write_all(text.as_bytes()).map_err(|e| CensusError::Cache {
                path: self.path.as_ref().map(|p| p.display().to_string()).unwrap_or_default(),
                message: e.to_string(),
            })?;
            file.flush().ok();
        }
        inner.writes += 1;
        inner.values.insert(key, raw.clone());
        Ok(raw)
    }

    /// Number of lookups answered from the cache.
    pub fn hits(&self) -> usize {
        self.inner.lock().unwrap().hits
    }

    /// Number of new entries written since opening.
    pub fn writes(&self) -> usize {
        self.inner.lock().unwrap().writes
    }
}
