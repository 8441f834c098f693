//! Text persistence for correlator memo tables.
//!
//! One entry per line, `g|d1,d2,...,dn|p/q`, indices descending, `-` for an
//! empty index list. Lines are written in lexicographic order.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::TauKey;
use crate::qseries::{format_rational, parse_rational, Rational};

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache I/O on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("cache line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}

/// Snapshot of computed correlators, optionally tied to a backing file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MemoStore {
    entries: HashMap<TauKey, Rational>,
    path: Option<PathBuf>,
}

impl MemoStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: HashMap<TauKey, Rational>) -> Self {
        Self {
            entries,
            path: None,
        }
    }

    pub fn entries(&self) -> &HashMap<TauKey, Rational> {
        &self.entries
    }

    pub fn into_entries(self) -> HashMap<TauKey, Rational> {
        self.entries
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn with_path(mut self, path: impl Into<PathBuf>) -> Self {
        self.path = Some(path.into());
        self
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// First write wins; stored values are never replaced.
    pub fn insert(&mut self, key: TauKey, value: Rational) {
        self.entries.entry(key).or_insert(value);
    }

    pub fn get(&self, key: &TauKey) -> Option<&Rational> {
        self.entries.get(key)
    }

    pub fn to_text(&self) -> String {
        let mut lines: Vec<String> = self
            .entries
            .iter()
            .map(|(k, v)| format_line(k, v))
            .collect();
        lines.sort();
        let mut out = String::new();
        for line in lines {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, CacheError> {
        let mut store = Self::new();
        for (i, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let (key, value) = parse_line(line).map_err(|reason| CacheError::Malformed {
                line: i + 1,
                reason,
            })?;
            store.insert(key, value);
        }
        Ok(store)
    }
}

pub fn save_cache(store: &MemoStore, path: &Path) -> Result<(), CacheError> {
    fs::write(path, store.to_text()).map_err(|source| CacheError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_cache(path: &Path) -> Result<MemoStore, CacheError> {
    let text = fs::read_to_string(path).map_err(|source| CacheError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(MemoStore::from_text(&text)?.with_path(path))
}

fn format_line(key: &TauKey, value: &Rational) -> String {
    let mut s = String::new();
    write!(s, "{}|", key.genus()).unwrap();
    if key.indices().is_empty() {
        s.push('-');
    } else {
        for (i, d) in key.indices().iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{d}").unwrap();
        }
    }
    write!(s, "|{}", format_rational(value)).unwrap();
    s
}

fn parse_line(line: &str) -> Result<(TauKey, Rational), String> {
    let mut parts = line.split('|');
    let (Some(g), Some(ds), Some(v), None) =
        (parts.next(), parts.next(), parts.next(), parts.next())
    else {
        return Err(format!("expected 3 '|'-separated fields in {line:?}"));
    };
    let genus: u32 = g.parse().map_err(|_| format!("malformed genus {g:?}"))?;
    let indices = if ds == "-" {
        Vec::new()
    } else {
        ds.split(',')
            .map(|d| {
                d.parse::<u32>()
                    .map_err(|_| format!("malformed index {d:?}"))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    if indices.windows(2).any(|w| w[0] < w[1]) {
        return Err(format!("indices not sorted descending in {ds:?}"));
    }
    let value = parse_rational(v).map_err(|e| e.to_string())?;
    Ok((TauKey::new(genus, indices), value))
}
