//! On-disk formats: code files, dot-order files and lists of identifying
//! vectors. All are ASCII with LF line endings; lines starting with `#` are
//! comments.

mod codefile;
mod permfile;

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::grassmann::IdentifyingVector;
use crate::search::SearchError;

pub use codefile::CodeFile;
pub use permfile::PermFile;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Search(#[from] SearchError),
}

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse { line, msg: msg.into() }
}

pub fn read_text(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::File { path: path.to_owned(), source })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::File { path: path.to_owned(), source })
}

/// Numbered lines, rejecting anything but printable ASCII and LF endings.
pub(crate) fn lines(text: &str) -> Result<impl Iterator<Item = (usize, &str)>, IoError> {
    for (i, line) in text.split('\n').enumerate() {
        if let Some(c) = line.chars().find(|c| !(c.is_ascii_graphic() || *c == ' ' || *c == '\t')) {
            let what = if c == '\r' { "carriage return".to_string() } else { format!("character {c:?}") };
            return Err(parse_err(i + 1, format!("unexpected {what}")));
        }
    }
    Ok(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
}

/// One identifying vector per line; blank lines are ignored.
pub fn parse_idvec_list(text: &str) -> Result<Vec<IdentifyingVector>, IoError> {
    let mut out = Vec::new();
    for (no, line) in lines(text)? {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        out.push(t.parse().map_err(|e| parse_err(no, format!("{e}")))?);
    }
    Ok(out)
}
