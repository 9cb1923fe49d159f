//! Line-delimited JSON corpus records.
//!
//! One record per line; blank lines are ignored. Every generator must be a
//! permutation of `0..degree` and a stated order must match the computed one.

use std::collections::BTreeSet;
use std::path::Path;

use galblock_core::theorems::Flags;
use galblock_core::PermGroup;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}, column {column}: {reason}")]
    Parse { line: usize, column: usize, reason: String },
    #[error("line {line}: record {id:?} states order {expected} but its generators give {found}")]
    OrderMismatch { line: usize, id: String, expected: u64, found: u64 },
    #[error("line {line}: duplicate id {id:?}")]
    DuplicateId { line: usize, id: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Oracle {
    /// Character degrees per block, one inner list per block.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block_sizes: Option<Vec<Vec<u64>>>,
}

/// The on-disk shape of a record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawRecord {
    pub id: String,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Oracle>,
}

pub const KNOWN_FLAGS: [&str; 3] = ["simple", "almost_simple", "perfect"];

#[derive(Clone, Debug)]
pub struct CorpusRecord {
    pub id: String,
    pub line: usize,
    pub group: PermGroup,
    pub flags: Flags,
    pub flag_names: BTreeSet<String>,
    pub oracle: Option<Oracle>,
}

impl CorpusRecord {
    pub fn order(&self) -> u64 {
        self.group.order()
    }
}

fn record_from_raw(raw: RawRecord, line: usize) -> Result<CorpusRecord, CorpusError> {
    let bad = |reason: String| CorpusError::Parse { line, column: 1, reason };
    if raw.degree == 0 {
        return Err(bad("degree must be positive".into()));
    }
    for (i, g) in raw.generators.iter().enumerate() {
        if g.len() != raw.degree {
            return Err(bad(format!("generator {i} has {} images, expected {}", g.len(), raw.degree)));
        }
    }
    let group = PermGroup::from_image_arrays(raw.degree, &raw.generators).map_err(|e| bad(e.to_string()))?;
    if let Some(expected) = raw.order {
        if expected != group.order() {
            return Err(CorpusError::OrderMismatch { line, id: raw.id, expected, found: group.order() });
        }
    }
    let mut flag_names = BTreeSet::new();
    for f in raw.flags {
        if !KNOWN_FLAGS.contains(&f.as_str()) {
            return Err(bad(format!("unknown flag {f:?}")));
        }
        flag_names.insert(f);
    }
    let flags = Flags {
        simple: flag_names.contains("simple"),
        almost_simple: flag_names.contains("almost_simple"),
        perfect: flag_names.contains("perfect"),
    };
    Ok(CorpusRecord { id: raw.id, line, group, flags, flag_names, oracle: raw.oracle })
}

/// Parses corpus text. Any malformed line aborts the whole parse.
pub fn parse_corpus_str(text: &str) -> Result<Vec<CorpusRecord>, CorpusError> {
    let mut out = Vec::new();
    let mut ids = BTreeSet::new();
    for (i, l) in text.lines().enumerate() {
        let line = i + 1;
        if l.trim().is_empty() {
            continue;
        }
        let raw: RawRecord = serde_json::from_str(l).map_err(|e| CorpusError::Parse {
            line,
            column: e.column(),
            reason: e.to_string(),
        })?;
        if !ids.insert(raw.id.clone()) {
            return Err(CorpusError::DuplicateId { line, id: raw.id });
        }
        out.push(record_from_raw(raw, line)?);
    }
    Ok(out)
}

pub fn parse_corpus(path: &Path) -> Result<Vec<CorpusRecord>, CorpusError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CorpusError::Io { path: path.display().to_string(), source })?;
    parse_corpus_str(&text)
}

/// The curated corpus shipped with the crate.
pub const FALLBACK: &str = include_str!("../corpus/fallback.jsonl");

/// Larger corpus generated from explicit constructions.
pub const EXTENDED: &str = include_str!("../corpus/extended.jsonl");

/// Resolves `builtin`, `fallback`, `extended` or a file path.
pub fn load(spec: &str) -> Result<Vec<CorpusRecord>, CorpusError> {
    match spec {
        "fallback" => parse_corpus_str(FALLBACK),
        "extended" => parse_corpus_str(EXTENDED),
        "builtin" => {
            let mut all = parse_corpus_str(FALLBACK)?;
            let ids: BTreeSet<String> = all.iter().map(|r| r.id.clone()).collect();
            all.extend(parse_corpus_str(EXTENDED)?.into_iter().filter(|r| !ids.contains(&r.id)));
            Ok(all)
        }
        path => parse_corpus(Path::new(path)),
    }
}
