//! Append-only JSONL store of reports, keyed by `(claim, k, l, m)` with
//! last write winning on read.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use log::warn;

use crate::error::Result;
use crate::report::{Claim, ConjectureReport};

/// Environment variable overriding [`default_cache_path`].
pub const CACHE_ENV: &str = "GRASSCOH_CACHE";

type Key = (Claim, u32, u32, Option<u32>);

/// `$GRASSCOH_CACHE`, else `.grasscoh/cache.jsonl` under the working
/// directory.
pub fn default_cache_path() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".grasscoh").join("cache.jsonl"))
}

fn open_append(path: &Path) -> Result<File> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    Ok(OpenOptions::new().create(true).append(true).open(path)?)
}

/// Appends one report as a single JSON line.
pub fn persist_report(report: &ConjectureReport, path: &Path) -> Result<()> {
    let mut file = open_append(path)?;
    writeln!(file, "{}", serde_json::to_string(report)?)?;
    Ok(())
}

pub struct ReportCache {
    entries: HashMap<Key, ConjectureReport>,
    corrupted: usize,
    file: Mutex<File>,
}

impl ReportCache {
    /// Reads every line of `path` (creating it if missing); unparsable lines
    /// are skipped with a warning.
    pub fn open(path: &Path) -> Result<Self> {
        let file = open_append(path)?;
        let mut entries = HashMap::new();
        let mut corrupted = 0;
        for (n, line) in BufReader::new(File::open(path)?).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<ConjectureReport>(&line) {
                Ok(r) => {
                    entries.insert(r.key(), r);
                }
                Err(e) => {
                    warn!("{}:{}: ignoring corrupted cache line: {e}", path.display(), n + 1);
                    corrupted += 1;
                }
            }
        }
        Ok(ReportCache {
            entries,
            corrupted,
            file: Mutex::new(file),
        })
    }

    pub fn get(&self, key: &Key) -> Option<&ConjectureReport> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn corrupted_lines(&self) -> usize {
        self.corrupted
    }

    /// Appends under the lock so concurrent workers never interleave lines.
    pub fn append(&self, report: &ConjectureReport) -> Result<()> {
        let line = serde_json::to_string(report)? + "\n";
        let mut file = self.file.lock().expect("cache lock poisoned");
        file.write_all(line.as_bytes())?;
        file.flush()?;
        Ok(())
    }
}
