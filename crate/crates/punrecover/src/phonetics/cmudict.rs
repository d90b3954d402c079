//! Parser for the plain-text cmudict format.
//!
//! Entries look like `WORD  PH1 PH2 ...`; alternate pronunciations carry a
//! `(2)`-style suffix on the word; `;;;` starts a comment line.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::error::{Error, Result};

/// A pronouncing dictionary: word to one or more phoneme sequences, with
/// stress digits stripped.
#[derive(Debug, Clone, Default)]
pub struct CmuDict {
    entries: BTreeMap<String, Vec<Vec<String>>>,
}

impl CmuDict {
    pub fn load(path: impl AsRef<Path>) -> Result<CmuDict> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        let mut dict = CmuDict::default();
        for (lineno, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| Error::io(path, e))?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with(";;;") || trimmed.starts_with('#') {
                continue;
            }
            dict.parse_line(trimmed)
                .map_err(|msg| Error::parse(path, lineno + 1, msg))?;
        }
        Ok(dict)
    }

    pub fn from_lines<I, S>(lines: I) -> std::result::Result<CmuDict, String>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut dict = CmuDict::default();
        for line in lines {
            let trimmed = line.as_ref().trim();
            if trimmed.is_empty() || trimmed.starts_with(";;;") || trimmed.starts_with('#') {
                continue;
            }
            dict.parse_line(trimmed)?;
        }
        Ok(dict)
    }

    fn parse_line(&mut self, line: &str) -> std::result::Result<(), String> {
        let mut fields = line.split_whitespace();
        let head = fields.next().ok_or("missing word field")?;
        let word = match head.find('(') {
            Some(paren) => {
                let suffix = &head[paren..];
                if !(suffix.ends_with(')') && suffix[1..suffix.len() - 1].parse::<u32>().is_ok()) {
                    return Err(format!("malformed variant suffix in {head:?}"));
                }
                &head[..paren]
            }
            None => head,
        };
        if word.is_empty() {
            return Err("empty word field".into());
        }
        let phones: Vec<String> = fields
            .map(|p| p.trim_end_matches(|c: char| c.is_ascii_digit()).to_string())
            .collect();
        if phones.is_empty() {
            return Err(format!("no phonemes for {word:?}"));
        }
        self.entries
            .entry(word.to_lowercase())
            .or_default()
            .push(phones);
        Ok(())
    }

    /// All pronunciations for a word (case-insensitive lookup).
    pub fn pronunciations(&self, word: &str) -> Option<&[Vec<String>]> {
        self.entries.get(&word.to_lowercase()).map(Vec::as_slice)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(&word.to_lowercase())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
