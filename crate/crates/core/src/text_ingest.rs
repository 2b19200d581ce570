//! Document loading and the editing pass.
//!
//! Editing drops every whitespace-delimited token with fewer than three
//! alphabetic characters and rejoins the survivors with single spaces,
//! line by line. Letter counts are over Unicode alphabetic characters.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// Minimum number of alphabetic characters a token must have to survive
/// the editing pass.
pub const MIN_TOKEN_LETTERS: usize = 3;

/// A document after the editing pass, with its pre/post letter counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditedDocument {
    /// Identifier (file stem for loaded documents).
    pub id: String,
    /// Edited lines, one per source line.
    pub lines: Vec<String>,
    /// Alphabetic characters in the raw text.
    pub letter_count_before: usize,
    /// Alphabetic characters after editing.
    pub letter_count_after: usize,
    /// Number of lines in the source.
    pub row_count: usize,
}

impl EditedDocument {
    /// Build a document from raw text already in memory.
    pub fn from_text(id: impl Into<String>, raw: &str) -> Self {
        Self::from_text_with_folding(id, raw, false)
    }

    /// Same as [`EditedDocument::from_text`], optionally lower-casing the
    /// raw text first. Folding is off by default everywhere.
    pub fn from_text_with_folding(id: impl Into<String>, raw: &str, fold_case: bool) -> Self {
        let folded;
        let raw = if fold_case {
            folded = raw.to_lowercase();
            folded.as_str()
        } else {
            raw
        };
        let lines: Vec<String> = raw.lines().map(edit_line).collect();
        let letter_count_before = letter_count(raw);
        let letter_count_after = lines.iter().map(|l| letter_count(l)).sum();
        EditedDocument {
            id: id.into(),
            row_count: lines.len(),
            letter_count_before,
            letter_count_after,
            lines,
        }
    }

    /// Load and edit a UTF-8 text file; the id is the file stem.
    pub fn load(path: &Path) -> Result<Self> {
        Self::load_with_folding(path, false)
    }

    pub fn load_with_folding(path: &Path, fold_case: bool) -> Result<Self> {
        let raw = fs::read_to_string(path).map_err(|source| Error::Ingest {
            path: path.to_path_buf(),
            source,
        })?;
        let id = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        Ok(Self::from_text_with_folding(id, &raw, fold_case))
    }

    /// The edited text as a single string, lines concatenated with no
    /// separator (the form the shingler consumes).
    pub fn text(&self) -> String {
        self.lines.concat()
    }
}

/// Apply the editing pass to raw text, preserving line boundaries.
pub fn edit_text(raw: &str) -> String {
    raw.lines().map(edit_line).collect::<Vec<_>>().join("\n")
}

fn edit_line(line: &str) -> String {
    line.split_whitespace()
        .filter(|token| letter_count(token) >= MIN_TOKEN_LETTERS)
        .collect::<Vec<_>>()
        .join(" ")
}

fn letter_count(s: &str) -> usize {
    s.chars().filter(|c| c.is_alphabetic()).count()
}

/// (row_count, letter_count_before, letter_count_after) of a document.
pub fn corpus_stats(doc: &EditedDocument) -> (usize, usize, usize) {
    (
        doc.row_count,
        doc.letter_count_before,
        doc.letter_count_after,
    )
}
