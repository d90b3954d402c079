//! The CMU-phoneme to WX-unit mapping table.
//!
//! The table ships as a data file (`CMU_PHONEME<TAB>WX_UNITS`) so the
//! Indian-English rendering choices are reviewable without reading code.
//! It must cover the full 39-phoneme cmudict inventory; diphthongs map to
//! two units.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use super::wx::is_wx_unit;
use crate::error::{Error, Result};

/// The 39 cmudict phonemes (stress digits removed).
pub const CMU_PHONEMES: &[&str] = &[
    "AA", "AE", "AH", "AO", "AW", "AY", "B", "CH", "D", "DH", "EH", "ER", "EY", "F", "G", "HH",
    "IH", "IY", "JH", "K", "L", "M", "N", "NG", "OW", "OY", "P", "R", "S", "SH", "T", "TH", "UH",
    "UW", "V", "W", "Y", "Z", "ZH",
];

#[derive(Debug, Clone, Default)]
pub struct PhonemeMap {
    map: BTreeMap<String, Vec<char>>,
}

impl PhonemeMap {
    pub fn load(path: impl AsRef<Path>) -> Result<PhonemeMap> {
        let path = path.as_ref();
        let content = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut map = BTreeMap::new();
        for (lineno, line) in content.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (phoneme, units) = trimmed
                .split_once('\t')
                .ok_or_else(|| Error::parse(path, lineno + 1, "expected `PHONEME<TAB>UNITS`"))?;
            let phoneme = phoneme.trim().to_uppercase();
            let mut parsed = Vec::new();
            for unit in units.split_whitespace() {
                let mut chars = unit.chars();
                let c = chars
                    .next()
                    .ok_or_else(|| Error::parse(path, lineno + 1, "empty WX unit"))?;
                if chars.next().is_some() || !is_wx_unit(c) {
                    return Err(Error::parse(
                        path,
                        lineno + 1,
                        format!("{unit:?} is not a WX unit"),
                    ));
                }
                parsed.push(c);
            }
            if parsed.is_empty() {
                return Err(Error::parse(path, lineno + 1, "no WX units"));
            }
            map.insert(phoneme, parsed);
        }
        let pm = PhonemeMap { map };
        pm.validate(path)?;
        Ok(pm)
    }

    /// Fails unless the map is total over the 39-phoneme inventory.
    fn validate(&self, path: &Path) -> Result<()> {
        for phoneme in CMU_PHONEMES {
            if !self.map.contains_key(*phoneme) {
                return Err(Error::model(
                    path,
                    format!("phoneme map is missing {phoneme}"),
                ));
            }
        }
        Ok(())
    }

    pub fn get(&self, phoneme: &str) -> Option<&[char]> {
        self.map.get(phoneme).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Builds the map from `(phoneme, units)` pairs; used by tests.
    pub fn from_pairs<I>(pairs: I) -> PhonemeMap
    where
        I: IntoIterator<Item = (&'static str, &'static str)>,
    {
        let map = pairs
            .into_iter()
            .map(|(p, units)| {
                (
                    p.to_string(),
                    units
                        .split_whitespace()
                        .map(|u| u.chars().next().unwrap())
                        .collect(),
                )
            })
            .collect();
        PhonemeMap { map }
    }
}
