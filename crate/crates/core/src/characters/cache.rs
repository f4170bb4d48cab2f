//! On-disk cache of character tables, one JSON file per `n`.
//!
//! Each file wraps the table JSON with a SHA-256 checksum of the table
//! payload. A file that fails the checksum, does not parse, or whose degrees
//! do not satisfy `sum deg^2 = n!` is treated as a miss and rewritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{character_table, CharacterTable};
use crate::error::Result;
use crate::report::TableJson;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "SYMCAY_CACHE_DIR";

const FILE_PREFIX: &str = "chartable-n";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    checksum: String,
    table: serde_json::Value,
}

#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    /// Explicit directory, else `$SYMCAY_CACHE_DIR`, else `~/.symcay`.
    pub fn resolve(explicit: Option<&Path>) -> Self {
        if let Some(dir) = explicit {
            return Self::new(dir);
        }
        if let Some(dir) = std::env::var_os(CACHE_DIR_ENV).filter(|d| !d.is_empty()) {
            return Self::new(dir);
        }
        let home = std::env::var_os("HOME").map_or_else(|| PathBuf::from("."), PathBuf::from);
        Self::new(home.join(".symcay"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, n: usize) -> PathBuf {
        self.dir.join(format!("{FILE_PREFIX}{n}.json"))
    }

    /// A verified table, or `None` if absent or corrupt.
    pub fn load(&self, n: usize) -> Option<CharacterTable> {
        let path = self.path_for(n);
        let text = fs::read_to_string(&path).ok()?;
        match Self::decode(n, &text) {
            Ok(table) => Some(table),
            Err(reason) => {
                log::warn!("discarding cache file {}: {reason}", path.display());
                None
            }
        }
    }

    fn decode(n: usize, text: &str) -> std::result::Result<CharacterTable, String> {
        let file: CacheFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let payload = serde_json::to_string(&file.table).map_err(|e| e.to_string())?;
        if checksum(&payload) != file.checksum {
            return Err("checksum mismatch".into());
        }
        let dto: TableJson = serde_json::from_value(file.table).map_err(|e| e.to_string())?;
        let table = dto.into_table().map_err(|e| e.to_string())?;
        if table.n() != n {
            return Err(format!("file holds n = {}", table.n()));
        }
        if !table.degree_sum_holds() {
            return Err("degrees do not square-sum to n!".into());
        }
        Ok(table)
    }

    /// Writes `table` via a temporary file and an atomic rename.
    pub fn store(&self, table: &CharacterTable) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let value = serde_json::to_value(TableJson::from_table(table))?;
        let payload = serde_json::to_string(&value)?;
        let file = CacheFile {
            checksum: checksum(&payload),
            table: value,
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &file)?;
        tmp.write_all(b"\n")?;
        let path = self.path_for(table.n());
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(path)
    }

    pub fn get_or_compute(&self, n: usize, cap: usize) -> Result<CharacterTable> {
        if let Some(table) = self.load(n) {
            return Ok(table);
        }
        let table = character_table(n, cap)?;
        if let Err(e) = self.store(&table) {
            log::warn!("could not write cache in {}: {e}", self.dir.display());
        }
        Ok(table)
    }

    /// Removes every cached table; returns how many files were deleted.
    pub fn clear(&self) -> Result<usize> {
        let entries = match fs::read_dir(&self.dir) {
            Ok(entries) => entries,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e.into()),
        };
        let mut removed = 0;
        for entry in entries {
            let entry = entry?;
            let name = entry.file_name();
            let name = name.to_string_lossy();
            if name.starts_with(FILE_PREFIX) && name.ends_with(".json") {
                fs::remove_file(entry.path())?;
                removed += 1;
            }
        }
        Ok(removed)
    }
}

fn checksum(payload: &str) -> String {
    hex::encode(Sha256::digest(payload.as_bytes()))
}
