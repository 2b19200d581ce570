//! Positional k-shingles: every substring of k consecutive characters,
//! paired with its 1-based rank so repeated values stay distinct.
//!
//! Two construction routes with guaranteed identical output: a whole-text
//! scan and a streaming line reader that carries the trailing k-1
//! characters of each line into the next.

use crate::error::{Error, Result};

/// One positional shingle: its 1-based rank and its k-character value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShingleEntry {
    pub rank: usize,
    pub value: String,
}

/// The ordered k-shingle sequence of a text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShingleSequence {
    k: usize,
    entries: Vec<ShingleEntry>,
}

impl ShingleSequence {
    /// Assemble a sequence from pre-built entries (used by subsampling,
    /// which must keep original ranks).
    pub(crate) fn from_entries(k: usize, entries: Vec<ShingleEntry>) -> Self {
        ShingleSequence { k, entries }
    }

    /// Build a sequence directly from k-character values, ranked
    /// 1..=len. Every value must have exactly k characters.
    pub fn from_values(k: usize, values: Vec<String>) -> Result<Self> {
        check_k(k)?;
        if let Some(bad) = values.iter().find(|v| v.chars().count() != k) {
            return Err(Error::parameter(format!(
                "value '{bad}' does not have {k} characters"
            )));
        }
        let entries = values
            .into_iter()
            .enumerate()
            .map(|(i, value)| ShingleEntry { rank: i + 1, value })
            .collect();
        Ok(ShingleSequence { k, entries })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[ShingleEntry] {
        &self.entries
    }

    pub fn values(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.value.as_str())
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::parameter("shingle length k must be >= 1"));
    }
    Ok(())
}

/// All k-shingles of `text` by a whole-text scan. Characters are Unicode
/// scalar values; a text of n characters yields max(0, n-k+1) shingles.
pub fn shingle(text: &str, k: usize) -> Result<ShingleSequence> {
    check_k(k)?;
    let chars: Vec<char> = text.chars().collect();
    let entries = chars
        .windows(k)
        .enumerate()
        .map(|(i, w)| ShingleEntry {
            rank: i + 1,
            value: w.iter().collect(),
        })
        .collect();
    Ok(ShingleSequence { k, entries })
}

/// Incremental shingler over a line stream. Holds at most k-1 carried
/// characters plus the current line, so memory stays independent of the
/// document length.
#[derive(Debug)]
pub struct StreamShingler {
    k: usize,
    carry: Vec<char>,
    next_rank: usize,
    entries: Vec<ShingleEntry>,
}

impl StreamShingler {
    pub fn new(k: usize) -> Result<Self> {
        check_k(k)?;
        Ok(StreamShingler {
            k,
            carry: Vec::new(),
            next_rank: 1,
            entries: Vec::new(),
        })
    }

    /// Consume one line. The carried tail of the previous line is
    /// prepended, so shingles spanning line boundaries are emitted here.
    pub fn push_line(&mut self, line: &str) {
        let mut buf = std::mem::take(&mut self.carry);
        buf.extend(line.chars());
        if buf.len() >= self.k {
            for w in buf.windows(self.k) {
                self.entries.push(ShingleEntry {
                    rank: self.next_rank,
                    value: w.iter().collect(),
                });
                self.next_rank += 1;
            }
            self.carry = buf[buf.len() - (self.k - 1)..].to_vec();
        } else {
            self.carry = buf;
        }
    }

    pub fn finish(self) -> ShingleSequence {
        ShingleSequence {
            k: self.k,
            entries: self.entries,
        }
    }
}

/// Shingle a document given as a line stream. Lines are concatenated with
/// no separator; the output is identical to [`shingle`] on the joined
/// text.
pub fn stream_shingle<I, S>(lines: I, k: usize) -> Result<ShingleSequence>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut shingler = StreamShingler::new(k)?;
    for line in lines {
        shingler.push_line(line.as_ref());
    }
    Ok(shingler.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn values(seq: &ShingleSequence) -> Vec<&str> {
        seq.values().collect()
    }

    #[test]
    fn basic_shingles() {
        let seq = shingle("abcde", 3).unwrap();
        assert_eq!(values(&seq), vec!["abc", "bcd", "cde"]);
        assert_eq!(
            seq.entries().iter().map(|e| e.rank).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn text_shorter_than_k_is_empty() {
        assert!(shingle("ab", 3).unwrap().is_empty());
    }

    #[test]
    fn duplicate_values_keep_distinct_ranks() {
        let seq = shingle("aaaa", 2).unwrap();
        assert_eq!(values(&seq), vec!["aa", "aa", "aa"]);
        assert_eq!(
            seq.entries().iter().map(|e| e.rank).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn k_zero_is_rejected() {
        assert!(matches!(shingle("abc", 0), Err(Error::Parameter(_))));
        assert!(matches!(
            stream_shingle(["abc"], 0),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn stream_matches_whole_text_on_split_lines() {
        let seq = stream_shingle(["abc", "de"], 3).unwrap();
        assert_eq!(seq, shingle("abcde", 3).unwrap());
    }

    #[test]
    fn stream_of_short_lines_only() {
        assert!(stream_shingle(["ab"], 3).unwrap().is_empty());
        // Shingles assemble across several too-short lines.
        let seq = stream_shingle(["a", "b", "c", "d"], 3).unwrap();
        assert_eq!(seq, shingle("abcd", 3).unwrap());
    }

    #[test]
    fn unicode_characters_count_as_one() {
        let seq = shingle("héllo", 2).unwrap();
        assert_eq!(values(&seq), vec!["hé", "él", "ll", "lo"]);
    }

    proptest! {
        #[test]
        fn stream_equals_whole_text_for_any_split(
            text in "[a-f ]{0,120}",
            cuts in proptest::collection::vec(0usize..120, 0..8),
            k in 1usize..6,
        ) {
            let chars: Vec<char> = text.chars().collect();
            let mut bounds: Vec<usize> =
                cuts.into_iter().map(|c| c % (chars.len() + 1)).collect();
            bounds.push(0);
            bounds.push(chars.len());
            bounds.sort_unstable();
            let lines: Vec<String> = bounds
                .windows(2)
                .map(|w| chars[w[0]..w[1]].iter().collect())
                .collect();
            let streamed = stream_shingle(&lines, k).unwrap();
            let whole = shingle(&text, k).unwrap();
            prop_assert_eq!(streamed, whole);
        }

        #[test]
        fn count_law_holds(text in "\\PC{0,100}", k in 1usize..8) {
            let n = text.chars().count();
            let seq = shingle(&text, k).unwrap();
            let expected = if n >= k { n - k + 1 } else { 0 };
            prop_assert_eq!(seq.len(), expected);
            // Every value has exactly k characters and ranks are 1..=len.
            for (i, e) in seq.entries().iter().enumerate() {
                prop_assert_eq!(e.rank, i + 1);
                prop_assert_eq!(e.value.chars().count(), k);
            }
        }
    }
}
